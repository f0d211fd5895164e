import itertools
import random
from fractions import Fraction

from typesemigroup.linalg import (
    integer_diagonalize,
    modular_kernel_generators,
    primitive_integer,
    rational_kernel_basis,
    vec_dot,
)


def test_kernel_of_empty_system_is_standard_basis():
    basis = rational_kernel_basis([], 3)
    assert basis == [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_kernel_single_row():
    basis = rational_kernel_basis([(1, -1)], 2)
    assert len(basis) == 1
    (c,) = basis
    assert c[0] == c[1]


def test_kernel_annihilates_rows_random():
    rng = random.Random(7)
    for _ in range(50):
        dim = rng.randint(1, 5)
        rows = [
            tuple(rng.randint(-3, 3) for _ in range(dim))
            for _ in range(rng.randint(0, 4))
        ]
        basis = rational_kernel_basis(rows, dim)
        for c in basis:
            for row in rows:
                assert vec_dot(c, row) == 0
        # rank-nullity: len(basis) == dim - rank
        rank = dim - len(basis)
        assert 0 <= rank <= min(dim, len([r for r in rows if any(r)]))


def test_primitive_integer_normalizes_sign_and_content():
    assert primitive_integer([Fraction(-2, 3), Fraction(4, 3)]) == (1, -2)
    assert primitive_integer([Fraction(0), Fraction(5)]) == (0, 1)
    assert primitive_integer([Fraction(6), Fraction(4)]) == (3, 2)


def _brute_modular_kernel(rows, dim, m):
    sols = set()
    for c in itertools.product(range(m), repeat=dim):
        if all(sum(r * x for r, x in zip(row, c)) % m == 0 for row in rows):
            sols.add(c)
    return sols


def test_modular_generators_span_exact_kernel():
    rng = random.Random(11)
    for _ in range(40):
        dim = rng.randint(1, 3)
        rows = [
            tuple(rng.randint(-3, 3) for _ in range(dim))
            for _ in range(rng.randint(0, 3))
        ]
        diag, V = integer_diagonalize(rows, dim)
        for m in (2, 3, 4, 6):
            gens = modular_kernel_generators(diag, V, dim, m)
            expected = _brute_modular_kernel(rows, dim, m)
            # every generator is a solution
            for g in gens:
                assert g in expected
            # the generated subgroup is the whole solution set
            span = {tuple([0] * dim)}
            frontier = [tuple([0] * dim)]
            while frontier:
                nxt = []
                for s in frontier:
                    for g in gens:
                        t = tuple((a + b) % m for a, b in zip(s, g))
                        if t not in span:
                            span.add(t)
                            nxt.append(t)
                frontier = nxt
            assert span == expected
