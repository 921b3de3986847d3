#include "wpp/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "wpp/errors.hpp"

namespace wpp {

namespace {

struct Field {
  int n = 1;
  int phi = 1;
  QPoly modulus;
  // xpow[j] = coordinates of x^j mod Phi_n, for 0 <= j < n.
  std::vector<std::vector<Rational>> xpow;
};

std::mutex g_mutex;
std::map<int, IntPoly> g_cyclo;
std::map<int, std::unique_ptr<Field>> g_fields;

IntPoly cyclotomic_locked(int n) {
  auto it = g_cyclo.find(n);
  if (it != g_cyclo.end()) return it->second;
  QPoly num = poly_sub(poly_monomial(n), QPoly{Rational(1)});
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [q, r] = poly_divmod(num, to_qpoly(cyclotomic_locked(d)));
    if (!r.empty()) throw InternalInconsistency("cyclotomic division left a remainder");
    num = q;
  }
  IntPoly out;
  for (const auto& c : num) {
    if (c.get_den() != 1) throw InternalInconsistency("non-integral cyclotomic coefficient");
    out.push_back(c.get_num());
  }
  g_cyclo.emplace(n, out);
  return out;
}

const Field& field(int n) {
  if (n < 1) throw InvalidInput("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_fields.find(n);
  if (it != g_fields.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->n = n;
  f->modulus = to_qpoly(cyclotomic_locked(n));
  f->phi = degree(f->modulus);
  f->xpow.resize(n);
  for (int j = 0; j < n; ++j) {
    QPoly r = poly_mod(poly_monomial(j), f->modulus);
    r.resize(f->phi);
    f->xpow[j] = r;
  }
  const Field& ref = *f;
  g_fields.emplace(n, std::move(f));
  return ref;
}

std::vector<Rational> reduce(const Field& f, const QPoly& p) {
  std::vector<Rational> out(f.phi);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (static_cast<int>(i) < f.phi) {
      out[i] += p[i];
      continue;
    }
    const auto& row = f.xpow[i % f.n];
    for (int k = 0; k < f.phi; ++k)
      if (row[k] != 0) out[k] += p[i] * row[k];
  }
  return out;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

IntPoly cyclotomic_poly(int n) {
  if (n < 1) throw InvalidInput("cyclotomic_poly: n must be positive");
  std::lock_guard<std::mutex> lock(g_mutex);
  return cyclotomic_locked(n);
}

int euler_phi(int n) { return field(n).phi; }

Cyclotomic::Cyclotomic() : order_(1), coords_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r, int order) : order_(order) {
  coords_.assign(field(order).phi, Rational(0));
  coords_[0] = r;
}

Cyclotomic Cyclotomic::from_poly(int order, const QPoly& p) {
  Cyclotomic c;
  c.order_ = order;
  c.coords_ = reduce(field(order), p);
  return c;
}

Cyclotomic Cyclotomic::zeta_pow(int n, std::int64_t k) {
  const Field& f = field(n);
  Cyclotomic c;
  c.order_ = n;
  c.coords_ = f.xpow[floor_mod(k, n)];
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : coords_)
    if (x != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return std::nullopt;
  return coords_[0];
}

Cyclotomic Cyclotomic::embed(int N) const {
  if (N % order_ != 0) throw InvalidInput("embedding target order must be a multiple");
  if (N == order_) return *this;
  const int step = N / order_;
  QPoly p(static_cast<std::size_t>(step) * coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) p[i * step] = coords_[i];
  return from_poly(N, p);
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw InvalidInput("cyclotomic inverse of zero");
  const Field& f = field(order_);
  QPoly p(coords_.begin(), coords_.end());
  trim(p);
  auto r = poly_inverse_mod(p, f.modulus);
  if (!r) throw InternalInconsistency("nonzero cyclotomic element without inverse");
  return from_poly(order_, *r);
}

Cyclotomic Cyclotomic::pow(std::int64_t k) const {
  if (k < 0) return inv().pow(-k);
  Cyclotomic result(Rational(1), order_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic c = *this;
  for (auto& x : c.coords_) x = -x;
  return c;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    int N = lcm_int(a.order_, b.order_);
    return a.embed(N) + b.embed(N);
  }
  Cyclotomic c = a;
  for (std::size_t i = 0; i < c.coords_.size(); ++i) c.coords_[i] += b.coords_[i];
  return c;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    int N = lcm_int(a.order_, b.order_);
    return a.embed(N) * b.embed(N);
  }
  QPoly p(a.coords_.size() + b.coords_.size() - 1);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j)
      if (b.coords_[j] != 0) p[i + j] += a.coords_[i] * b.coords_[j];
  }
  return Cyclotomic::from_poly(a.order_, p);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    int N = lcm_int(a.order_, b.order_);
    return a.embed(N).coords_ == b.embed(N).coords_;
  }
  return a.coords_ == b.coords_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return a.coords_ < b.coords_;
}

std::string Cyclotomic::to_string() const {
  if (auto r = as_rational()) return r->get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[i].get_str();
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  return os.str();
}

}  // namespace wpp
