import random
from fractions import Fraction

import pytest

import typesemigroup as ts
from typesemigroup.monoid import INFINITY


def random_model(rng, max_vertices=6, max_entry=3, max_k=2):
    n = rng.randint(1, max_vertices)
    k = rng.randint(1, max_k)
    while True:
        a = [[rng.randint(0, max_entry) for _ in range(n)] for _ in range(n)]
        if all(any(row) for row in a):
            break
    mats = [a]
    if k == 2:
        # a second color commuting with the first: identity, a itself, or I + a
        choice = rng.randrange(3)
        if choice == 0:
            b = [[int(i == j) for j in range(n)] for i in range(n)]
        elif choice == 1:
            b = [row[:] for row in a]
        else:
            b = [[a[i][j] + int(i == j) for j in range(n)] for i in range(n)]
        mats.append(b)
    return ts.validate_kgraph([f"v{i}" for i in range(n)], mats)


class TestSolveStateAt:
    def test_identity_loop(self, one_loop):
        cert = ts.solve_state_at(one_loop, (1,))
        assert cert.values == (Fraction(1),)
        assert ts.verify_state_certificate(one_loop, cert)

    def test_two_loops_has_no_state(self, two_loops):
        assert ts.solve_state_at(two_loops, (1,)) is None

    def test_triangular_state_kills_second_vertex(self, triangular):
        cert = ts.solve_state_at(triangular, (1, 0))
        assert cert.values == (Fraction(1), Fraction(0))
        assert ts.verify_state_certificate(triangular, cert)

    def test_triangular_infinite_value(self, triangular):
        # the class of the second vertex supports a state that is infinite
        # on the first vertex
        cert = ts.solve_state_at(triangular, (0, 1))
        assert cert.values == (INFINITY, Fraction(1))
        assert cert.support == (1,)
        assert ts.verify_state_certificate(triangular, cert)

    def test_zero_target_rejected(self, one_loop):
        with pytest.raises(ts.InputError) as e:
            ts.solve_state_at(one_loop, (0,))
        assert e.value.code == "ZERO_TARGET"

    def test_support_must_respect_escape(self):
        # second vertex feeds only into the first: a state normalized at the
        # first vertex cannot be infinite at the second
        m = ts.validate_kgraph(["u", "w"], [[[1, 0], [1, 0]]])
        cert = ts.solve_state_at(m, (1, 0))
        assert cert is not None
        assert cert.support == (0, 1)
        assert cert.values == (Fraction(1), Fraction(1))
        assert ts.verify_state_certificate(m, cert)


class TestFaithfulFiniteState:
    def test_identity_loop(self, one_loop):
        assert ts.faithful_finite_state(one_loop) == (Fraction(1),)

    def test_swap_splits_mass(self):
        m = ts.validate_kgraph(["u", "w"], [[[0, 1], [1, 0]]])
        assert ts.faithful_finite_state(m) == (Fraction(1, 2), Fraction(1, 2))

    def test_triangular_forced_zero(self, triangular):
        assert ts.faithful_finite_state(triangular) is None

    def test_two_loops_none(self, two_loops):
        assert ts.faithful_finite_state(two_loops) is None


class TestCoboundary:
    def test_identity_loop_holds(self, one_loop):
        assert ts.coboundary_check(one_loop).holds

    def test_two_loops_fails_with_witness(self, two_loops):
        res = ts.coboundary_check(two_loops)
        assert not res.holds
        assert res.witness_y == (1,)
        assert res.witness_z == ((-1,),)
        assert ts.verify_coboundary_witness(two_loops, res)

    def test_swap_holds(self):
        m = ts.validate_kgraph(["u", "w"], [[[0, 1], [1, 0]]])
        assert ts.coboundary_check(m).holds

    def test_triangular_fails(self, triangular):
        res = ts.coboundary_check(triangular)
        assert not res.holds
        assert ts.verify_coboundary_witness(triangular, res)

    def test_witness_scaling_soundness(self, two_loops, triangular):
        for model in (two_loops, triangular):
            res = ts.coboundary_check(model)
            scaled = ts.CoboundaryResult(
                holds=False,
                witness_y=tuple(7 * y for y in res.witness_y),
                witness_z=tuple(tuple(7 * z for z in zi) for zi in res.witness_z),
            )
            assert ts.verify_coboundary_witness(model, scaled)


class TestStiemke:
    def test_examples(self, one_loop, two_loops, triangular):
        for model, holds in ((one_loop, True), (two_loops, False), (triangular, False)):
            res = ts.stiemke_crosscheck(model)
            assert res.consistent
            assert res.coboundary_holds == holds
            assert (res.positive_vector is not None) == holds

    def test_random_models_consistent(self):
        rng = random.Random(77)
        for _ in range(25):
            model = random_model(rng, max_vertices=4)
            res = ts.stiemke_crosscheck(model)
            assert res.consistent
            faithful = ts.faithful_finite_state(model)
            assert (faithful is not None) == res.coboundary_holds


class TestDifferenceLattice:
    def test_generators_are_move_differences(self, two_loops):
        lat = ts.difference_lattice(two_loops)
        assert lat.generators == ((-1,),)
