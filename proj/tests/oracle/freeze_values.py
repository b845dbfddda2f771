"""Brute-force oracle used to freeze expected values in the C++ tests.

Independent of the C++ implementation: plain fractions, exhaustive scans.
"""
from fractions import Fraction as F
from math import gcd
from itertools import permutations

P0 = [(1, 0), (0, 1), (-1, -1)]
Q0 = [(2, 0), (2, 1), (1, 2), (0, 2), (-1, 1), (-2, -1), (-2, -2), (-1, -2), (1, -1)]


def shoelace(vs):
    s = 0
    for i in range(len(vs)):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % len(vs)]
        s += F(x0) * y1 - F(x1) * y0
    return abs(s) / 2


def hull(pts):
    pts = sorted(set((F(x), F(y)) for x, y in pts))
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lo, up = [], []
    for p in pts:
        while len(lo) >= 2 and cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    for p in reversed(pts):
        while len(up) >= 2 and cross(up[-2], up[-1], p) <= 0:
            up.pop()
        up.append(p)
    return lo[:-1] + up[:-1]


def msum(a, b):
    return hull([(p[0] + q[0], p[1] + q[1]) for p in a for q in b])


def length(vs, a, b):
    vals = [a * x + b * y for x, y in vs]
    return max(vals) - min(vals)


def width_brute(vs, box=40):
    best = None
    for a in range(0, box + 1):
        for b in range(-box, box + 1):
            if (a, b) == (0, 0) or gcd(a, abs(b)) != 1 or (a == 0 and b < 0):
                continue
            w = length(vs, a, b)
            if best is None or (w, a, b) < best:
                best = (w, a, b)
    return best


def minimizers(vs, box=20):
    w = width_brute(vs, box)[0]
    return [(a, b) for a in range(0, box + 1) for b in range(-box, box + 1)
            if (a, b) != (0, 0) and gcd(a, abs(b)) == 1 and not (a == 0 and b < 0)
            and length(vs, a, b) == w]


def delzant(vs):
    vs = hull(vs)
    out = []
    n = len(vs)
    for i in range(n):
        p, nx, pv = vs[i], vs[(i + 1) % n], vs[i - 1]
        def prim(d):
            g = gcd(int(d[0]), int(d[1]))
            return (int(d[0]) // g, int(d[1]) // g)
        e = prim((nx[0] - p[0], nx[1] - p[1]))
        f = prim((pv[0] - p[0], pv[1] - p[1]))
        out.append((p, e[0] * f[1] - e[1] * f[0]))
    return out


def scale(vs, t):
    return [(t * x, t * y) for x, y in vs]


if __name__ == "__main__":
    print("area P0", shoelace(P0), "area Q0", shoelace(Q0))
    print("hull Q0", hull(Q0))
    print("minimizers P0", minimizers(P0))
    print("width P0", width_brute(P0), "width Q0", width_brute(Q0))
    for k in range(0, 6):
        qk = msum(scale(P0, k), Q0) if k else hull(Q0)
        print("k", k, "width", width_brute(qk), "area2", 2 * shoelace(qk), "3k2+18k+21", 3*k*k+18*k+21)
    print("Q1 vertices", msum(P0, Q0))
    print("mixed(P0,P0)", shoelace(msum(P0, P0)) - 2 * shoelace(P0))
    print("mixed(P0,Q0)", shoelace(msum(P0, Q0)) - shoelace(P0) - shoelace(Q0))
    print("delzant P0", delzant(P0))
    print("delzant Q0", delzant(Q0))
    print("length P0 (1,1)", length(P0, 1, 1), "Q0 (1,0)", length(Q0, 1, 0))
    print("support P0 (-1,-1)", max(-x - y for x, y in P0))
    tri = [(1, 0), (0, 1), (-1, -2)]
    print("area tri", shoelace(tri), "t^2", 2 * shoelace(tri) / 3)
    # kappa for P0 with e=(-1,1), f=(-2,-1): rows of A are e and f
    e, f = (F(-1), F(1)), (F(-2), F(-1))
    det = e[0] * f[1] - e[1] * f[0]
    inv = [[f[1] / det, -e[1] / det], [-f[0] / det, e[0] / det]]
    kappa = max(abs(r[0]) + abs(r[1]) for r in inv)
    print("kappa P0", kappa, "B", -(-kappa * 2 // 1))
    eps = F(1, 1000)
    k = 1
    while F(3 * k + 9, 4 * k + 8) >= F(3, 4) + eps:
        k += 1
    print("eps 1e-3 first k", k)
    eps = F(1, 100)
    k = 1
    while F(3 * k + 9, 4 * k + 8) >= F(3, 4) + eps:
        k += 1
    print("eps 1e-2 first k", k)
    for k in (1, 4, 10):
        print("ratio-3/4", k, F(3 * k + 9, 4 * k + 8) - F(3, 4), "stated", F(3, 16 * (k + 2)), "3/(4(k+2))", F(3, 4 * (k + 2)))
