#!/usr/bin/env python3
"""Reference counts for the built-in unimodular systems: flats, coroots,
crossings, star vertices, fan sizes. Values get frozen into the C++ tests.

Run from the repo root:  python3 tools/oracle/unimodular_oracle.py
"""
import itertools
import sys
from fractions import Fraction

sys.path.insert(0, "tools/oracle")
from ref import col_hnf, lat_key, rank, is_pure, kernel_int, primitive, vertices_from_ineqs


def a_n(n):
    roots = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        roots.append(tuple(e))
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    return dedup_pm(roots), n


def a_of_n(n):
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    return dedup_pm(roots), n


def e5():
    roots = []
    for i in range(5):
        e = [0] * 5
        e[i] = 1
        roots.append(tuple(e))
    cyc = [(1, -1, 1, 0, 0), (0, 1, -1, 1, 0), (0, 0, 1, -1, 1),
           (1, 0, 0, 1, -1), (-1, 1, 0, 0, 1)]
    roots += [tuple(c) for c in cyc]
    return dedup_pm(roots), 5


def d_k33():
    roots = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
             (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1),
             (1, 1, 1, 1)]
    return dedup_pm(roots), 4


def dedup_pm(roots):
    """Keep one representative per +- pair (canonical sign)."""
    seen = set()
    out = []
    for r in roots:
        p = primitive(r)
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def flats(reps, n):
    """All flats (as canonical HNF keys), from spans of independent subsets."""
    found = {lat_key([], n)}
    for k in range(1, n + 1):
        for sub in itertools.combinations(reps, k):
            if rank(sub) == k:
                found.add(lat_key([list(s) for s in sub], n))
    return found


def coroots(reps, n):
    """Lattice points of the star polytope |r.p| <= 1 (needs full dimension)."""
    ineqs = []
    for r in reps:
        ineqs.append((list(r), 1))
        ineqs.append(([-x for x in r], 1))
    verts = vertices_from_ineqs(ineqs, n)
    lo = [min(v[i] for v in verts) for i in range(n)]
    hi = [max(v[i] for v in verts) for i in range(n)]
    pts = []
    rng = [range(int(-(-l // 1)) if l == int(l) else int(l // 1) + 1, int(h) + 1)
           for l, h in zip(map(Fraction, lo), map(Fraction, hi))]
    import math
    rng = [range(math.ceil(l), math.floor(h) + 1) for l, h in zip(lo, hi)]
    for p in itertools.product(*rng):
        if all(abs(sum(a * b for a, b in zip(r, p))) <= 1 for r in reps):
            pts.append(p)
    return verts, pts


def crossings(reps, n):
    """Primitive orthogonal generators of the corank-1 flats."""
    out = set()
    for fl in flats(reps, n):
        if len(fl) != n - 1:
            continue
        rows = [list(c) for c in fl]  # each basis column as a row = basis^T
        ker = kernel_int(rows)
        assert len(ker) == 1
        out.add(primitive(ker[0]))
    return out


def report(name, mk):
    reps, n = mk
    fl = flats(reps, n)
    print(f"{name}: dim {n}, nonzero roots {2*len(reps)}, flats {len(fl)}")
    if rank(reps) == n:
        verts, pts = coroots(reps, n)
        xr = crossings(reps, n)
        inside = all(all(abs(sum(a * b for a, b in zip(r, x))) <= 1 for r in reps) for x in xr)
        nonzero_co = {primitive(p) for p in pts if any(p)}
        print(f"   star vertices {len(verts)}, coroots(incl 0) {len(pts)}, "
              f"crossing lines {len(xr)}, crossings-are-coroots {inside}, "
              f"crossings==nonzero-coroot-lines {xr == nonzero_co}")
        if n == 2:
            print("   star verts:", verts)
            print("   coroots:", sorted(pts))


def main():
    report("A_2", a_n(2))
    report("A_3", a_n(3))
    report("A_4", a_n(4))
    report("A(3)", a_of_n(3))
    report("A(4)", a_of_n(4))
    report("E5", e5())
    report("D_K33", d_k33())


if __name__ == "__main__":
    main()
