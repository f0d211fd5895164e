"""Dichotomy classifier: stably finite versus purely infinite.

The decision ladder, every claim backed by an independently checkable
certificate:

1. structural proxies (cofinality, condition (L)) are computed first; if
   either fails the verdict is HYPOTHESES_NOT_MET, with whatever finiteness
   or paradoxicality evidence was found attached (finiteness evidence is
   meaningful without the hypotheses; the headline dichotomy is not);
2. a faithful full-support invariant state gives STABLY_FINITE;
3. otherwise a properly-infinite certificate for every vertex generator
   gives PURELY_INFINITE (generator checks suffice: proper infiniteness is
   additive, and every class decomposes into vertex classes);
4. otherwise the verdict is INCONCLUSIVE, with traceless evidence from the
   per-vertex state solver and a bounded almost-unperforation sweep attached
   when they were computed.

The coboundary result is always included as a cross-check; a faithful state
alongside a failed coboundary (or certified paradoxes for all generators
alongside a faithful state) raises ConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError
from .graphs import (
    KGraphModel,
    StructuralReport,
    kgraph_skeleton,
    presentation_from_kgraph,
    structural_checks,
)
from .monoid import (
    DecisionOutcome,
    SearchBudget,
    UnperforationSweep,
    almost_unperforated_up_to,
    kl_paradoxical,
    unit_vector,
)
from .states import (
    CoboundaryResult,
    StateCertificate,
    coboundary_check,
    faithful_finite_state,
    solve_state_at,
)

STABLY_FINITE = "STABLY_FINITE"
PURELY_INFINITE = "PURELY_INFINITE"
INCONCLUSIVE = "INCONCLUSIVE"
HYPOTHESES_NOT_MET = "HYPOTHESES_NOT_MET"

_PROXY_CAVEAT = (
    "cofinality and condition (L) are graph-level proxies for minimality "
    "and topological principality of the path groupoid"
)
_COBOUNDARY_CAVEAT = "coboundary condition decided at the vertex level"
_SKELETON_CAVEAT = (
    "structural proxies for k >= 2 are computed on the one-colored skeleton "
    "(sum of the adjacency matrices); heuristic only"
)


@dataclass(frozen=True)
class ClassifyBudgets:
    search: SearchBudget = SearchBudget()
    unperforation_coeff: int = 4
    unperforation_mult: int = 4
    unperforation_max_pairs: int = 5000


DEFAULT_CLASSIFY_BUDGETS = ClassifyBudgets()


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    structural: StructuralReport
    minimality_proxy: bool
    principality_proxy: bool
    faithful_state: tuple[Fraction, ...] | None
    paradox_results: tuple[tuple[str, DecisionOutcome], ...] | None
    state_results: tuple[tuple[str, StateCertificate | None], ...] | None
    coboundary: CoboundaryResult
    unperforation: UnperforationSweep | None
    caveats: tuple[str, ...]
    notes: tuple[str, ...]


def _paradox_sweep(model: KGraphModel, budget: SearchBudget):
    pres = presentation_from_kgraph(model)
    results = []
    for vi, v in enumerate(model.vertices):
        outcome = kl_paradoxical(pres, unit_vector(model.dim, vi), 2, 1, budget)
        results.append((v, outcome))
    return tuple(results)


def classify(model: KGraphModel, budgets: ClassifyBudgets | None = None) -> ClassificationReport:
    budgets = budgets or DEFAULT_CLASSIFY_BUDGETS
    structural = structural_checks(kgraph_skeleton(model))
    caveats = [_PROXY_CAVEAT, _COBOUNDARY_CAVEAT]
    if model.k > 1:
        caveats.append(_SKELETON_CAVEAT)
    notes: list[str] = []

    state = faithful_finite_state(model)
    coboundary = coboundary_check(model)
    if (state is not None) != coboundary.holds:
        raise ConsistencyError(
            "faithful-state solver and coboundary check disagree; this is a bug"
        )

    proxies_ok = structural.cofinal and structural.condition_L
    paradoxes = None
    state_results = None
    unperforation = None

    if not proxies_ok:
        if state is None:
            paradoxes = _paradox_sweep(model, budgets.search)
        verdict = HYPOTHESES_NOT_MET
        if state is not None:
            notes.append(
                "finiteness evidence attached: a faithful invariant state exists "
                "even though the dichotomy hypotheses fail"
            )
    elif state is not None:
        verdict = STABLY_FINITE
        notes.append(
            "the model class is amenable; with a faithful invariant state the "
            "algebra is quasidiagonal as well"
        )
    else:
        paradoxes = _paradox_sweep(model, budgets.search)
        if all(outcome.is_equiv for (_, outcome) in paradoxes):
            verdict = PURELY_INFINITE
        else:
            pres = presentation_from_kgraph(model)
            state_results = tuple(
                (v, solve_state_at(model, unit_vector(model.dim, vi)))
                for vi, v in enumerate(model.vertices)
            )
            unperforation = almost_unperforated_up_to(
                pres,
                [unit_vector(model.dim, vi) for vi in range(model.dim)],
                coeff_bound=budgets.unperforation_coeff,
                mult_bound=budgets.unperforation_mult,
                budget=budgets.search,
                max_pairs=budgets.unperforation_max_pairs,
            )
            verdict = INCONCLUSIVE
            if any(cert is None for (_, cert) in state_results):
                notes.append("traceless evidence: some vertex class admits no normalized state")
                if unperforation.clear and not unperforation.truncated and unperforation.unknown_pairs == 0:
                    notes.append(
                        "purely infinite modulo almost unperforation "
                        "(no counterexample within the swept bounds)"
                    )
                elif unperforation.clear:
                    notes.append(
                        "almost-unperforation sweep incomplete "
                        f"(pairs={unperforation.pairs_checked}, "
                        f"unknown={unperforation.unknown_pairs}, "
                        f"truncated={unperforation.truncated})"
                    )

    if state is not None and paradoxes is not None and all(
        outcome.is_equiv for (_, outcome) in paradoxes
    ):
        raise ConsistencyError(
            "a faithful state and an all-generators paradox certificate cannot coexist"
        )

    return ClassificationReport(
        verdict=verdict,
        structural=structural,
        minimality_proxy=structural.cofinal,
        principality_proxy=structural.condition_L,
        faithful_state=state,
        paradox_results=paradoxes,
        state_results=state_results,
        coboundary=coboundary,
        unperforation=unperforation,
        caveats=tuple(caveats),
        notes=tuple(notes),
    )
