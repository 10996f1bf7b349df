"""Shared reference routines for the oracle scripts.

Canonical column HNF convention (must match include/dcx/normal_forms.hpp):
  columns ordered by strictly increasing pivot row, pivot = topmost nonzero
  entry, pivots positive, entries left of a pivot in its row reduced into
  [0, pivot), entries above a pivot zero, zero columns dropped.
"""
from fractions import Fraction
from math import gcd
import itertools


def col_hnf(cols, n):
    """Canonical column HNF basis of the lattice spanned by `cols` in Z^n."""
    a = [list(c) for c in cols]
    m = len(a)
    basis = []
    row = 0
    act = list(range(m))
    work = {j: a[j][:] for j in act}
    cols_left = act[:]
    while row < n and cols_left:
        # euclidean elimination in `row` across remaining columns
        while True:
            nz = [j for j in cols_left if work[j][row] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(work[j][row]))
            p = nz[0]
            for j in nz[1:]:
                q = work[j][row] // work[p][row]
                for i in range(n):
                    work[j][i] -= q * work[p][i]
        nz = [j for j in cols_left if work[j][row] != 0]
        if nz:
            p = nz[0]
            if work[p][row] < 0:
                for i in range(n):
                    work[p][i] = -work[p][i]
            basis.append(work[p])
            cols_left.remove(p)
        row += 1
    # columns already have strictly increasing pivot rows by construction
    # reduce entries to the left of each pivot
    for j in range(len(basis)):
        pr = next(i for i in range(n) if basis[j][i] != 0)
        piv = basis[j][pr]
        for k in range(j):
            q = basis[k][pr] // piv
            if q:
                for i in range(n):
                    basis[k][i] -= q * basis[j][i]
    return basis


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    w = [x // g for x in v]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def lat_key(cols, n):
    return tuple(tuple(c) for c in col_hnf(cols, n))


def rank(vs):
    """Rank over Q of a list of integer vectors."""
    rows = [list(map(Fraction, v)) for v in vs]
    r = 0
    n = len(rows[0]) if rows else 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def snf_divisors(cols, n):
    import sympy
    from sympy.matrices.normalforms import smith_normal_form
    m = sympy.Matrix([[c[i] for c in cols] for i in range(n)])
    d = smith_normal_form(m)
    k = min(d.rows, d.cols)
    return [abs(d[i, i]) for i in range(k)]


def is_pure(cols, n):
    if not cols:
        return True
    return all(x == 1 for x in snf_divisors(cols, n))


def kernel_int(rows):
    """Primitive integer basis of the rational kernel of a row matrix."""
    import sympy
    m = sympy.Matrix(rows)
    out = []
    for v in m.nullspace():
        den = sympy.lcm([t.q for t in v])
        vi = [int(t * den) for t in v]
        g = 0
        for x in vi:
            g = gcd(g, abs(x))
        out.append([x // g for x in vi])
    return out


def vertices_from_ineqs(ineqs, dim):
    """All vertices of {x : a·x <= b}, brute force over dim-subsets."""
    verts = set()
    idx = range(len(ineqs))
    for sub in itertools.combinations(idx, dim):
        import sympy
        A = sympy.Matrix([ineqs[i][0] for i in sub])
        if A.rank() != dim:
            continue
        b = sympy.Matrix([ineqs[i][1] for i in sub])
        x = A.solve(b)
        if all(sum(Fraction(a) * Fraction(xi) for a, xi in zip(row, x)) <= Fraction(c)
               for row, c in ineqs):
            verts.add(tuple(Fraction(t) for t in x))
    return sorted(verts)
