#!/usr/bin/env python3
"""Reference values for the integer-lattice layer, computed with sympy.

Run from the repo root:  python3 tools/oracle/lattice_oracle.py
The printed values are frozen as constants in tests/isolated unit tests.
"""
import itertools
from fractions import Fraction

import sympy
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form, hermite_normal_form


def col_hnf(cols):
    """Column-style HNF of the lattice spanned by integer column vectors.

    sympy's hermite_normal_form works on rows; transpose in and out.
    Returns the canonical column basis (list of columns), zero columns dropped.
    """
    m = Matrix(cols).T  # columns as given
    h = hermite_normal_form(m.T).T  # row HNF of transpose = column HNF
    out = [list(h.col(j)) for j in range(h.cols) if any(h.col(j))]
    return out


def snf_divisors(cols):
    m = Matrix(cols).T
    d = smith_normal_form(m)
    k = min(d.rows, d.cols)
    return [abs(d[i, i]) for i in range(k)]


def main():
    print("== HNF/SNF ==")
    print("colHNF {(1,1),(1,-1)}:", col_hnf([[1, 1], [1, -1]]))
    print("SNF d {(1,1),(1,-1)}:", snf_divisors([[1, 1], [1, -1]]))
    print("colHNF {(2,4)}:", col_hnf([[2, 4]]))
    print("SNF d {(2,4)}:", snf_divisors([[2, 4]]))
    print("colHNF {(6,10),(4,8)}:", col_hnf([[6, 10], [4, 8]]))
    print("SNF d {(6,10),(4,8)}:", snf_divisors([[6, 10], [4, 8]]))
    print("colHNF span{e1,e2} cap span{e2,e3} expected e2 check via kernel:")
    # intersection of span{e1,e2} and span{e2,e3} in Z^3
    b1 = Matrix([[1, 0], [0, 1], [0, 0]])
    b2 = Matrix([[0, 0], [1, 0], [0, 1]])
    cat = b1.row_join(-b2)
    ker = cat.nullspace()
    # scale to integer, take B1 * first block
    vecs = []
    for v in ker:
        den = sympy.lcm([t.q for t in v])
        vi = [int(t * den) for t in v]
        g = sympy.gcd(vi)
        vi = [t // g for t in vi]
        vecs.append(list(b1 * Matrix(vi[:2])))
    print("   intersection generators:", vecs)
    print("orthogonal of Z(1,1) in Z^2:", Matrix([[1, 1]]).nullspace())

    print("== saturation of Z(1,1)+Z(1,-1) ==")
    print("   divisors:", snf_divisors([[1, 1], [1, -1]]), "index = product = 2")


if __name__ == "__main__":
    main()
