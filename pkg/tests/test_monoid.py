import random

import pytest
from hypothesis import given, settings, strategies as st

import typesemigroup as ts
from typesemigroup.monoid import _bfs_equiv, _bfs_leq, _unit_structure


def pres(dim, moves):
    return ts.build_presentation(dim, moves)


TWO_LOOPS = pres(1, [((1,), (2,))])
ONE_LOOP = pres(1, [((1,), (1,))])
FREE_1 = pres(1, [])
FREE_2 = pres(2, [])


class TestBuildPresentation:
    def test_two_loops(self):
        assert TWO_LOOPS.dim == 1
        assert TWO_LOOPS.moves == (ts.Move((1,), (2,)),)

    def test_free_monoid(self):
        assert FREE_1.moves == ()

    def test_dimension_mismatch(self):
        with pytest.raises(ts.InputError) as e:
            pres(2, [((1, 0), (0, 1, 0))])
        assert e.value.code == "DIMENSION_MISMATCH"

    def test_negative_entry_rejected(self):
        with pytest.raises(ts.InputError) as e:
            pres(1, [((-1,), (1,))])
        assert e.value.code == "NEGATIVE_ENTRY"

    def test_move_order_preserved(self):
        p = pres(1, [((1,), (2,)), ((1,), (3,))])
        assert p.moves[0].rhs == (2,) and p.moves[1].rhs == (3,)


class TestReplay:
    def test_single_forward_step(self):
        cert = ts.EquivCertificate(
            (1,), (ts.RewriteStep(0, ts.Direction.FORWARD),), (2,)
        )
        assert ts.replay(TWO_LOOPS, (1,), cert) == (2,)

    def test_empty_certificate_is_identity(self):
        cert = ts.EquivCertificate((1,), (), (1,))
        assert ts.replay(TWO_LOOPS, (1,), cert) == (1,)

    def test_step_not_applicable(self):
        cert = ts.EquivCertificate(
            (0,), (ts.RewriteStep(0, ts.Direction.FORWARD),), (1,)
        )
        with pytest.raises(ts.InputError) as e:
            ts.replay(TWO_LOOPS, (0,), cert)
        assert e.value.code == "STEP_NOT_APPLICABLE"
        assert e.value.details["index"] == 0

    def test_start_mismatch(self):
        cert = ts.EquivCertificate((1,), (), (1,))
        with pytest.raises(ts.InputError) as e:
            ts.replay(TWO_LOOPS, (2,), cert)
        assert e.value.code == "CERTIFICATE_MISMATCH"


class TestDecideEquiv:
    def test_two_loops_one_step(self):
        out = ts.decide_equiv(TWO_LOOPS, (1,), (2,))
        assert out.is_equiv
        assert len(out.certificate.steps) == 1
        assert ts.replay(TWO_LOOPS, (1,), out.certificate) == (2,)

    def test_reflexive(self):
        out = ts.decide_equiv(TWO_LOOPS, (3,), (3,))
        assert out.is_equiv and out.certificate.steps == ()

    def test_free_monoid_separator(self):
        out = ts.decide_equiv(FREE_1, (1,), (2,))
        assert out.is_not_equiv
        assert out.separator.kind is ts.SeparatorKind.RATIONAL
        assert out.separator.coeffs == (1,)
        assert ts.verify_separator(FREE_1, out.separator, (1,), (2,))

    def test_symmetric_verdicts(self):
        a = ts.decide_equiv(TWO_LOOPS, (1,), (3,))
        b = ts.decide_equiv(TWO_LOOPS, (3,), (1,))
        assert a.verdict == b.verdict == ts.Verdict.EQUIV

    def test_determinism(self):
        a = ts.decide_equiv(TWO_LOOPS, (1,), (4,))
        b = ts.decide_equiv(TWO_LOOPS, (1,), (4,))
        assert a == b

    def test_unknown_on_clean_exhaustion_without_separator(self):
        # class of (1) under x <-> x+2 is {1, 3, 5, ...}; (3) is in it, but
        # (1) vs 0-move-reachable... use f=(1), g=(0): class(0) = {0} is
        # finite, no separator exists mod anything for two-loops
        out = ts.decide_equiv(TWO_LOOPS, (1,), (0,))
        assert out.is_unknown
        assert out.budget.exhausted

    def test_modular_separator(self):
        # doubling jump: move (2) <-> (4) preserves parity; (1) vs (2)
        p = pres(1, [((2,), (4,))])
        out = ts.decide_equiv(p, (1,), (2,))
        assert out.is_not_equiv
        assert out.separator.kind is ts.SeparatorKind.MODULAR
        assert out.separator.modulus == 2
        assert ts.verify_separator(p, out.separator, (1,), (2,))


class TestFindSeparator:
    def test_free_monoid(self):
        sep = ts.find_separator(FREE_1, (1,), (2,))
        assert sep.kind is ts.SeparatorKind.RATIONAL and sep.coeffs == (1,)

    def test_two_loops_has_no_separator(self):
        assert ts.find_separator(TWO_LOOPS, (1,), (2,)) is None

    def test_identified_units(self):
        p = pres(2, [((1, 0), (0, 1))])
        assert ts.find_separator(p, (1, 0), (0, 1)) is None

    def test_mutual_exclusion_with_equiv(self):
        # wherever decide_equiv says EQUIV, no separator can exist
        rng = random.Random(5)
        for _ in range(30):
            dim = rng.randint(1, 3)
            moves = [
                (
                    tuple(rng.randint(0, 2) for _ in range(dim)),
                    tuple(rng.randint(0, 2) for _ in range(dim)),
                )
                for _ in range(rng.randint(1, 3))
            ]
            p = pres(dim, moves)
            f = tuple(rng.randint(0, 3) for _ in range(dim))
            g = tuple(rng.randint(0, 3) for _ in range(dim))
            out = ts.decide_equiv(p, f, g, ts.SearchBudget(2000, 32))
            if out.is_equiv:
                assert ts.find_separator(p, f, g) is None
                assert ts.replay(p, f, out.certificate) == g


class TestDecideLeq:
    def test_pointwise_dominance(self):
        out = ts.decide_leq(FREE_2, (1, 0), (2, 1))
        assert out.is_equiv
        assert out.certificate.steps == ()
        assert out.slack == (1, 1)

    def test_two_loops_backward(self):
        out = ts.decide_leq(TWO_LOOPS, (2,), (1,))
        assert out.is_equiv
        assert ts.verify_leq_outcome(TWO_LOOPS, (2,), (1,), out)

    def test_free_monoid_not_leq(self):
        out = ts.decide_leq(FREE_1, (2,), (1,))
        assert out.is_not_equiv
        assert out.separator.coeffs == (1,)
        assert ts.verify_separator(FREE_1, out.separator, (2,), (1,), order=True)

    def test_extended_separator(self):
        # u absorbs w (move u -> u+w) so every finite invariant kills the w
        # coordinate; refuting 2[w] <= [w] needs a functional infinite at u
        p = pres(2, [((1, 0), (1, 1)), ((0, 1), (0, 1))])
        out = ts.decide_leq(p, (0, 2), (0, 1))
        assert out.is_not_equiv
        assert out.separator.kind is ts.SeparatorKind.EXTENDED
        assert ts.verify_separator(p, out.separator, (0, 2), (0, 1), order=True)


class TestKlParadoxical:
    def test_two_loops_properly_infinite(self):
        out = ts.kl_paradoxical(TWO_LOOPS, (1,), 2, 1)
        assert out.is_equiv
        assert ts.verify_leq_outcome(TWO_LOOPS, (2,), (1,), out)

    def test_zero_class_trivially_paradoxical(self):
        out = ts.kl_paradoxical(FREE_2, (0, 0), 5, 2)
        assert out.is_equiv

    def test_one_loop_not_paradoxical(self):
        out = ts.kl_paradoxical(ONE_LOOP, (1,), 2, 1)
        assert out.is_not_equiv
        assert out.separator.coeffs == (1,)

    def test_invalid_pair(self):
        with pytest.raises(ts.InputError) as e:
            ts.kl_paradoxical(TWO_LOOPS, (1,), 1, 1)
        assert e.value.code == "INVALID_PAIR"

    def test_additivity_by_concatenation(self):
        # a properly-infinite certificate for each summand concatenates to
        # one for the sum: extra mass never blocks a move
        p = pres(2, [((1, 0), (2, 0)), ((0, 1), (0, 2))])
        t1, t2 = (1, 0), (0, 1)
        c1 = ts.kl_paradoxical(p, t1, 2, 1).certificate
        c2 = ts.kl_paradoxical(p, t2, 2, 1).certificate
        total = tuple(a + b for a, b in zip(t1, t2))
        combined = ts.EquivCertificate(
            total,
            c1.steps + c2.steps,
            tuple(a + b for a, b in zip(c1.end, c2.end)),
        )
        end = ts.replay(p, total, combined)
        assert end == combined.end
        assert all(e >= 2 * t for e, t in zip(end, total))


class TestAlmostUnperforated:
    def test_free_monoid_clear(self):
        sweep = ts.almost_unperforated_up_to(FREE_1, [(1,)], 4, 4)
        assert sweep.clear and not sweep.truncated and sweep.unknown_pairs == 0

    def test_two_loops_clear(self):
        sweep = ts.almost_unperforated_up_to(TWO_LOOPS, [(1,)], 4, 4)
        assert sweep.clear

    def test_free_rank_two_clear(self):
        sweep = ts.almost_unperforated_up_to(FREE_2, [(1, 0), (0, 1)], 3, 3)
        assert sweep.clear and sweep.unknown_pairs == 0

    def test_counterexample_is_fully_certified(self):
        # x <-> 2y makes 2*[y] = [x] <= [2y] = [x] while [y] is not below [x]:
        # n=2, m=1 with theta=y, eta=... construct a perforated quotient:
        # moves: (2, 0) <-> (0, 1): two x's equal one y; then 2*[x] <= 1*[y]
        # but [x] is not below [y]... sweep must certify both sides if it
        # reports anything; here we only check a found counterexample's
        # evidence replays
        p = pres(2, [((2, 0), (0, 1))])
        sweep = ts.almost_unperforated_up_to(p, [(1, 0), (0, 1)], 2, 2)
        if sweep.counterexample is not None:
            ce = sweep.counterexample
            scaled_f = tuple(ce.n * x for x in ce.theta)
            scaled_g = tuple(ce.m * x for x in ce.eta)
            assert ts.verify_leq_outcome(p, scaled_f, scaled_g, ce.scaled_leq)
            assert ts.verify_separator(p, ce.order_separator, ce.theta, ce.eta, order=True)


class TestUnitFastPathAgreesWithSearch:
    def test_random_unit_presentations(self):
        rng = random.Random(23)
        for _ in range(60):
            dim = rng.randint(1, 4)
            moves = []
            for _ in range(rng.randint(0, 4)):
                a, b = rng.randrange(dim), rng.randrange(dim)
                moves.append((ts.unit_vector(dim, a), ts.unit_vector(dim, b)))
            p = pres(dim, moves)
            assert _unit_structure(p) is not None
            f = tuple(rng.randint(0, 2) for _ in range(dim))
            g = tuple(rng.randint(0, 2) for _ in range(dim))
            fast = ts.decide_equiv(p, f, g)
            slow = (
                fast
                if f == g
                else _bfs_equiv(p, f, g, ts.SearchBudget(50_000, 32))
            )
            if fast.is_equiv:
                assert slow.is_equiv or f == g
                assert ts.replay(p, f, fast.certificate) == g
            else:
                assert not slow.is_equiv
                assert ts.verify_separator(p, fast.separator, f, g)
            fast_leq = ts.decide_leq(p, f, g)
            slow_leq = _bfs_leq(p, f, g, ts.SearchBudget(50_000, 32))
            if fast_leq.is_equiv:
                assert ts.verify_leq_outcome(p, f, g, fast_leq)
                assert slow_leq.is_equiv or all(a <= b for a, b in zip(f, g))
            else:
                assert not slow_leq.is_equiv
                assert ts.verify_separator(p, fast_leq.separator, f, g, order=True)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(
    data=st.data(),
    dim=st.integers(min_value=1, max_value=3),
)
def test_emitted_equiv_certificates_always_replay(data, dim):
    nmoves = data.draw(st.integers(min_value=0, max_value=3))
    moves = []
    vec = st.tuples(*([st.integers(min_value=0, max_value=2)] * dim))
    for _ in range(nmoves):
        moves.append((data.draw(vec), data.draw(vec)))
    p = pres(dim, moves)
    f = data.draw(vec)
    g = data.draw(vec)
    out = ts.decide_equiv(p, f, g, ts.SearchBudget(3000, 24))
    if out.is_equiv:
        assert ts.replay(p, f, out.certificate) == g
    elif out.is_not_equiv:
        assert ts.verify_separator(p, out.separator, f, g)


@settings(max_examples=60, derandomize=True, deadline=None)
@given(data=st.data(), dim=st.integers(min_value=1, max_value=3))
def test_pointwise_order_always_embeds(data, dim):
    vec = st.tuples(*([st.integers(min_value=0, max_value=3)] * dim))
    nmoves = data.draw(st.integers(min_value=0, max_value=3))
    p = pres(dim, [(data.draw(vec), data.draw(vec)) for _ in range(nmoves)])
    f = data.draw(vec)
    h = data.draw(vec)
    g = tuple(a + b for a, b in zip(f, h))
    out = ts.decide_leq(p, f, g)
    assert out.is_equiv
    assert out.slack == h or ts.verify_leq_outcome(p, f, g, out)


def test_zero_faithfulness_on_expansive_presentations():
    # every move rewrites a unit into a nonzero image, so only 0 is
    # congruent to 0
    rng = random.Random(9)
    for _ in range(40):
        dim = rng.randint(1, 3)
        moves = []
        for v in range(dim):
            rhs = [0] * dim
            for _ in range(rng.randint(1, 2)):
                rhs[rng.randrange(dim)] += 1
            moves.append((ts.unit_vector(dim, v), tuple(rhs)))
        p = pres(dim, moves)
        f = tuple(rng.randint(0, 2) for _ in range(dim))
        if f == (0,) * dim:
            continue
        out = ts.decide_equiv(p, f, (0,) * dim, ts.SearchBudget(5000, 32))
        assert not out.is_equiv
