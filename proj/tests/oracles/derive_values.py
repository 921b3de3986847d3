"""Independent pure-Python computations of the reference values frozen into
the C++ tests. Run with python3; prints the values used in the tests."""

import cmath
import itertools
from collections import defaultdict
from fractions import Fraction as Fr
from math import gcd


def lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def monomials(s, a, b, c):
    if s < 0:
        return 0
    return sum(1 for i in range(s // a + 1) for j in range((s - a * i) // b + 1) if (s - a * i - b * j) % c == 0)


def chi(r, a, b, c):
    return monomials(r, a, b, c) + monomials(-r - a - b - c, a, b, c)


def fit(r, a, b, c):
    m = lcm(a, b, c)
    y = [chi(r + m * t, a, b, c) for t in range(4)]
    q = Fr(y[2] - 2 * y[1] + y[0], 2)
    l = y[1] - y[0] - q
    assert q * 9 + l * 3 + y[0] == y[3]
    return q, l, y[0]


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for p in partitions(n - k, k):
            yield (k,) + p


def color_counts(p, n, w1, w2, off):
    e = [0] * n
    for l2, row in enumerate(p):
        for l1 in range(row):
            e[(off + l1 * w1 + l2 * w2) % n] += 1
    return e


def chart_series(n, w1, w2, off, order, max_boxes):
    out = defaultdict(int)
    for s in range(max_boxes + 1):
        for p in partitions(s):
            e = color_counts(p, n, w1, w2, off)
            if sum(e) <= order:
                out[tuple(e)] += 1
    return dict(out)


def color0_series(abc, order, max_boxes):
    a, b, c = abc
    charts = [(a, b, c), (b, c, a), (c, a, b)]
    total = [1] + [0] * order
    for n, w1, w2 in charts:
        s = [0] * (order + 1)
        for e, v in chart_series(n, w1, w2, 0, 10**9, max_boxes).items():
            if e[0] <= order:
                s[e[0]] += v
        total = [sum(total[i] * s[k - i] for i in range(k + 1)) for k in range(order + 1)]
    return total


def kclass_typeI(D, A, distinct=True):
    D1, D2, D3 = D
    S = D1 + D2 + D3
    P = defaultdict(int)
    P[0] += 1
    P[S] += 1
    for x, y in [(D1, D2), (D2, D3), (D3, D1)]:
        if distinct:
            P[0] -= 1
            P[x] += 1
            P[y] += 1
            P[x + y] -= 1
    return {e + A: v for e, v in P.items() if v}


def chi_E(cls, E, a, b, c):
    return sum(v * sum(chi(u - e, a, b, c) for u in range(E)) for e, v in cls.items())


def stable_triples(abc, c1, lam, max_sum):
    a, b, c = abc
    d = gcd(gcd(a, b), c)
    out = []
    for S in range(3, max_sum + 1):
        if (c1 + S) % 2:
            continue
        A = -(c1 + S) // 2
        if (A - lam) % d:
            continue
        for D1 in range(b, S, b):
            for D2 in range(c, S - D1, c):
                D3 = S - D1 - D2
                if D3 % a or not (D1 < D2 + D3 and D2 < D1 + D3 and D3 < D1 + D2):
                    continue
                out.append((A, D1, D2, D3))
    return out


def h_vb(abc, E, c1, lam, max_sum):
    a, b, c = abc
    out = defaultdict(int)
    for A, D1, D2, D3 in stable_triples(abc, c1, lam, max_sum):
        out[chi_E(kclass_typeI((D1, D2, D3), A), E, a, b, c)] += 1
    return dict(sorted(out.items()))


def reduce_mod(poly, abc):
    """Laurent dict -> coefficients mod (1-g^a)(1-g^b)(1-g^c), degree < a+b+c."""
    a, b, c = abc
    mod = [1]
    for w in abc:
        f = [1] + [0] * (w - 1) + [-1]
        mod = [sum(mod[i] * f[k - i] for i in range(len(mod)) if 0 <= k - i < len(f)) for k in range(len(mod) + w)]
    lo = min(min(poly), 0)
    # multiply negative powers away: g^-1 is invertible; shift by g^(m*k) == g^0 mod? use g^N = g^(N mod L) only for
    # multiples of lcm is false in general, so invert g explicitly via repeated division.
    deg = len(mod) - 1
    n = deg
    # g^-1 = q(g) with g*q(g) = 1 mod P; P(0) = 1 so q = (1 - P)/g
    ginv = [-x for x in mod[1:]]
    def mulmod(x, y):
        z = [Fr(0)] * (len(x) + len(y) - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                z[i + j] += u * v
        for k in range(len(z) - 1, n - 1, -1):
            t = z[k] / mod[n]
            if t:
                for i in range(n + 1):
                    z[k - n + i] -= t * mod[i]
        return (z + [Fr(0)] * n)[:n]
    out = [Fr(0)] * n
    for e, v in poly.items():
        base = ginv if e < 0 else [0, 1]
        term = [Fr(1)]
        for _ in range(abs(e)):
            term = mulmod(term, base)
        term = (term + [Fr(0)] * n)[:n]
        out = [x + v * y for x, y in zip(out, term)]
    return out


def point_class(abc, i, j):
    a, b, c = abc
    others = [w for k, w in enumerate(abc) if k != i - 1]
    poly = {0: 1}
    for w in others:
        nxt = defaultdict(int)
        for e, v in poly.items():
            nxt[e] += v
            nxt[e + w] -= v
        poly = dict(nxt)
    return {e + j: v for e, v in poly.items() if v}


def rank1_class(abc, A, B, C, parts):
    a, b, c = abc
    s = A + B + C
    poly = defaultdict(int)
    poly[s] += 1
    charts = [(a, b, c), (b, c, a), (c, a, b)]
    for i, ((n, w1, w2), p) in enumerate(zip(charts, parts), start=1):
        for l2, row in enumerate(p):
            for l1 in range(row):
                for e, v in point_class(abc, i, (s + l1 * w1 + l2 * w2) % n).items():
                    poly[e] -= v
    return reduce_mod({e: v for e, v in poly.items() if v}, abc)


if __name__ == "__main__":
    print("fit (1,1,1) r=0", fit(0, 1, 1, 1))
    print("fit (1,1,2) r=0", fit(0, 1, 1, 2))
    print("fit (1,2,3) r=5", fit(5, 1, 2, 3))
    qs = [fit(4 + u, 1, 2, 3) for u in range(6)]
    print("E-sum (1,2,3) r=4 E=6", sum(q[0] for q in qs), sum(q[1] for q in qs))
    print("color0 (1,1,2) order 8", color0_series((1, 1, 2), 8, 18))
    print("color0 (1,2,3) order 4", color0_series((1, 2, 3), 4, 16))
    s = chart_series(3, 1, 1, 0, 4, 12)
    print("P(1,1,3) chart 3 to order 4", sorted(s.items()))
    print("stable P2 c1=-1 max 9", stable_triples((1, 1, 1), -1, 0, 9))
    print("stable P(1,1,2) c1=-2 max 8", stable_triples((1, 1, 2), -2, 0, 8))
    print("h_vb P2 E=1 c1=-1 max 12", h_vb((1, 1, 1), 1, -1, 0, 12))
    print("h_vb P2 E=1 c1=0 max 14", h_vb((1, 1, 1), 1, 0, 0, 14))
    print("h_vb P(1,1,2) E=2 c1=-2 max 10", h_vb((1, 1, 2), 2, -2, 0, 10))
    print("P (1,1,2) E=2 c1=-2 D=(1,2,1)", chi_E(kclass_typeI((1, 2, 1), -(-2 + 4) // 2), 2, 1, 1, 2))
    print("rank1 (1,1,2) A,B,C=(1,0,-2) parts (2,1),(1),(1,1)", rank1_class((1, 1, 2), 1, 0, -2, [(2, 1), (1,), (1, 1)]))
    print("rank1 (2,2,2) A,B,C=(1,1,0) parts (1),(),(2)", rank1_class((2, 2, 2), 1, 1, 0, [(1,), (), (2,)]))
    print("rank1 (1,2,3) A,B,C=(0,-1,2) parts (),(2,1),(3)", rank1_class((1, 2, 3), 0, -1, 2, [(), (2, 1), (3,)]))
