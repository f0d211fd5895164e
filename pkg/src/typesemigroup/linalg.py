"""Exact integer and rational linear algebra used by the decision procedures.

Everything here is arbitrary precision: rationals are `fractions.Fraction`,
integers are Python ints.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def vec_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def vec_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_scale(k, a):
    return tuple(k * x for x in a)


def rational_kernel_basis(rows: Sequence[Sequence[int]], dim: int) -> list[tuple[Fraction, ...]]:
    """Basis of { c in Q^dim : row . c = 0 for every row }.

    The basis is produced in echelon order (one vector per free column,
    ascending), so the output is deterministic in the input ordering.
    """
    mat = [[Fraction(x) for x in row] for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = Fraction(1) / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        basis.append(tuple(v))
    return basis


def primitive_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector.

    The first nonzero entry is made positive, so the representative of each
    ray is unique.
    """
    mult = 1
    for f in vec:
        mult = lcm(mult, Fraction(f).denominator)
    ints = [int(Fraction(f) * mult) for f in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def integer_diagonalize(rows: Sequence[Sequence[int]], dim: int) -> tuple[list[int], list[list[int]]]:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns (diag, V) where V is a dim x dim unimodular matrix such that the
    solutions of  rows . c = 0 (mod m)  are exactly  c = V . y  with
    diag[j] * y[j] = 0 (mod m) for j < len(diag) and y[j] free otherwise.
    Only column operations are mirrored into V; row operations do not change
    the solution set.
    """
    M = [list(map(int, row)) for row in rows]
    V = [[int(i == j) for j in range(dim)] for i in range(dim)]
    nrows = len(M)
    t = 0
    while t < nrows and t < dim:
        # locate smallest-magnitude nonzero pivot in the remaining block
        piv = None
        for i in range(t, nrows):
            for j in range(t, dim):
                v = M[i][j]
                if v and (piv is None or abs(v) < abs(M[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            M[pi], M[t] = M[t], M[pi]
        if pj != t:
            for row in M:
                row[pj], row[t] = row[t], row[pj]
            for row in V:
                row[pj], row[t] = row[t], row[pj]
        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, nrows):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    if q:
                        M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    if M[i][t]:
                        M[i], M[t] = M[t], M[i]
                        dirty = True
            if dirty:
                continue
            # clear row t right of the pivot (column ops, mirrored into V)
            dirty = False
            for j in range(t + 1, dim):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    if q:
                        for row in M:
                            row[j] -= q * row[t]
                        for row in V:
                            row[j] -= q * row[t]
                    if M[t][j]:
                        for row in M:
                            row[j], row[t] = row[t], row[j]
                        for row in V:
                            row[j], row[t] = row[t], row[j]
                        dirty = True
            if not dirty:
                break
        t += 1
    diag = [M[i][i] for i in range(t)]
    return diag, V


def modular_kernel_generators(
    diag: list[int], V: list[list[int]], dim: int, m: int
) -> list[tuple[int, ...]]:
    """Generators of { c in (Z/m)^dim : rows . c = 0 (mod m) }.

    `diag`, `V` come from :func:`integer_diagonalize`.  Every solution is a
    Z/m-combination of the returned generators.
    """
    gens = []
    for j in range(dim):
        s = diag[j] if j < len(diag) else 0
        if s == 0:
            step = 1
        else:
            step = m // gcd(s, m)
            if step % m == 0:
                continue  # only y_j = 0 (mod m)
        gen = tuple((V[i][j] * step) % m for i in range(dim))
        if any(gen):
            gens.append(gen)
    return gens
