"""Finitely presented commutative monoids with certified decision procedures.

A presentation is a dimension d together with a finite list of moves, each a
pair (lhs, rhs) of vectors in N^d.  Two vectors are congruent when one can be
rewritten into the other by repeatedly replacing an embedded copy of lhs with
rhs or vice versa; the congruence is the reflexive-transitive-additive
closure of the moves.

Decision procedures return one of three verdicts:

* EQUIV with a replayable step-by-step certificate,
* NOT_EQUIV with a linear separator (a functional, rational or modular or
  extended-valued, that is invariant under every move yet distinguishes the
  two queried vectors), or
* UNKNOWN with a budget report when the bounded search was inconclusive.

Positive certificates and separators are both checkable by independent code
paths (`replay`, `verify_separator`); nothing is trusted from the search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    CERTIFICATE_MISMATCH,
    DIMENSION_MISMATCH,
    INVALID_PAIR,
    NEGATIVE_ENTRY,
    STEP_NOT_APPLICABLE,
    InputError,
)
from .linalg import (
    integer_diagonalize,
    modular_kernel_generators,
    primitive_integer,
    rational_kernel_basis,
    vec_dot,
    vec_scale,
    vec_sub,
)
from .simplex import OPTIMAL, LinearProgram

Vector = tuple[int, ...]

INFINITY = float("inf")

DEFAULT_MODULUS_BOUND = 64
_EXTENDED_SEPARATOR_MAX_DIM = 12


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


def _flip(d: Direction) -> Direction:
    return Direction.BACKWARD if d is Direction.FORWARD else Direction.FORWARD


class Verdict(Enum):
    EQUIV = "equiv"
    NOT_EQUIV = "not_equiv"
    UNKNOWN = "unknown"


class SeparatorKind(Enum):
    RATIONAL = "rational"
    MODULAR = "modular"
    EXTENDED = "extended"


@dataclass(frozen=True)
class Move:
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class MonoidPresentation:
    dim: int
    moves: tuple[Move, ...]


@dataclass(frozen=True)
class RewriteStep:
    move_index: int
    direction: Direction


@dataclass(frozen=True)
class EquivCertificate:
    start: Vector
    steps: tuple[RewriteStep, ...]
    end: Vector


@dataclass(frozen=True)
class LinearSeparator:
    """Move-invariant functional distinguishing two vectors.

    kind RATIONAL: integer coefficients, exact dot products.
    kind MODULAR: integer coefficients evaluated mod `modulus`.
    kind EXTENDED: nonnegative integer-or-infinity coefficients, evaluated in
    [0, oo]; used for order (divisibility) refutations only.
    """

    kind: SeparatorKind
    coeffs: tuple
    modulus: int | None = None


@dataclass(frozen=True)
class BudgetReport:
    states_visited: int
    coordinate_cap_hit: bool
    exhausted: bool


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = 200_000
    max_coord: int = 64


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class DecisionOutcome:
    verdict: Verdict
    certificate: EquivCertificate | None = None
    slack: Vector | None = None
    separator: LinearSeparator | None = None
    budget: BudgetReport | None = None

    @property
    def is_equiv(self) -> bool:
        return self.verdict is Verdict.EQUIV

    @property
    def is_not_equiv(self) -> bool:
        return self.verdict is Verdict.NOT_EQUIV

    @property
    def is_unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN


@dataclass(frozen=True)
class UnperforationCounterexample:
    theta: Vector
    eta: Vector
    n: int
    m: int
    scaled_leq: DecisionOutcome
    order_separator: LinearSeparator


@dataclass(frozen=True)
class UnperforationSweep:
    counterexample: UnperforationCounterexample | None
    pairs_checked: int
    unknown_pairs: int
    truncated: bool

    @property
    def clear(self) -> bool:
        return self.counterexample is None


def as_vector(entries: Sequence[int], dim: int) -> Vector:
    vec = tuple(int(x) for x in entries)
    if len(vec) != dim:
        raise InputError(
            DIMENSION_MISMATCH,
            f"vector has length {len(vec)}, presentation dimension is {dim}",
            length=len(vec),
            dim=dim,
        )
    for x in vec:
        if x < 0:
            raise InputError(NEGATIVE_ENTRY, f"negative entry {x}", entry=x)
    return vec


def unit_vector(dim: int, index: int) -> Vector:
    return tuple(int(i == index) for i in range(dim))


def build_presentation(dim: int, moves: Iterable) -> MonoidPresentation:
    """Validate and freeze a presentation; move order is preserved."""
    if dim < 1:
        raise InputError(DIMENSION_MISMATCH, "dimension must be positive", dim=dim)
    frozen = []
    for mv in moves:
        if isinstance(mv, Move):
            lhs, rhs = mv.lhs, mv.rhs
        else:
            lhs, rhs = mv
        frozen.append(Move(as_vector(lhs, dim), as_vector(rhs, dim)))
    return MonoidPresentation(dim=dim, moves=tuple(frozen))


def replay(pres: MonoidPresentation, start: Sequence[int], cert: EquivCertificate) -> Vector:
    """Apply a certificate step by step; pure, independent of any search.

    Raises STEP_NOT_APPLICABLE at the first step whose required side does not
    embed into the current vector.
    """
    start_v = as_vector(start, pres.dim)
    if cert.start != start_v:
        raise InputError(
            CERTIFICATE_MISMATCH,
            "certificate start does not match the given start vector",
        )
    x = start_v
    for i, step in enumerate(cert.steps):
        if not 0 <= step.move_index < len(pres.moves):
            raise InputError(CERTIFICATE_MISMATCH, f"step {i} references unknown move", index=i)
        mv = pres.moves[step.move_index]
        if step.direction is Direction.FORWARD:
            take, give = mv.lhs, mv.rhs
        else:
            take, give = mv.rhs, mv.lhs
        if any(xv < tv for xv, tv in zip(x, take)):
            raise InputError(STEP_NOT_APPLICABLE, f"step {i} not applicable", index=i)
        x = tuple(xv - tv + gv for xv, tv, gv in zip(x, take, give))
    return x


def verify_certificate(pres: MonoidPresentation, cert: EquivCertificate) -> bool:
    try:
        return replay(pres, cert.start, cert) == cert.end
    except InputError:
        return False


def _ext_dot(coeffs, vec):
    total = Fraction(0)
    for c, v in zip(coeffs, vec):
        if v == 0:
            continue
        if c == INFINITY:
            return INFINITY
        total += Fraction(c) * v
    return total


def verify_separator(
    pres: MonoidPresentation,
    sep: LinearSeparator,
    f: Sequence[int],
    g: Sequence[int],
    order: bool = False,
) -> bool:
    """Check move invariance plus separation of f from g by substitution.

    With order=True the separator must refute f <= g: coefficients must be
    nonnegative and the value at f strictly exceeds the value at g.
    """
    f = as_vector(f, pres.dim)
    g = as_vector(g, pres.dim)
    if sep.kind is SeparatorKind.MODULAR:
        m = sep.modulus
        if order or m is None or m < 2:
            return False
        for mv in pres.moves:
            if (vec_dot(sep.coeffs, mv.lhs) - vec_dot(sep.coeffs, mv.rhs)) % m != 0:
                return False
        return (vec_dot(sep.coeffs, f) - vec_dot(sep.coeffs, g)) % m != 0
    if sep.kind is SeparatorKind.RATIONAL:
        for mv in pres.moves:
            if vec_dot(sep.coeffs, mv.lhs) != vec_dot(sep.coeffs, mv.rhs):
                return False
        if order:
            if any(c < 0 for c in sep.coeffs):
                return False
            return vec_dot(sep.coeffs, f) > vec_dot(sep.coeffs, g)
        return vec_dot(sep.coeffs, f) != vec_dot(sep.coeffs, g)
    # extended-valued: only meaningful as an order separator
    if not order:
        return False
    for c in sep.coeffs:
        if c != INFINITY and c < 0:
            return False
    for mv in pres.moves:
        if _ext_dot(sep.coeffs, mv.lhs) != _ext_dot(sep.coeffs, mv.rhs):
            return False
    vf, vg = _ext_dot(sep.coeffs, f), _ext_dot(sep.coeffs, g)
    return vg != INFINITY and vf > vg


def verify_leq_outcome(
    pres: MonoidPresentation, f: Sequence[int], g: Sequence[int], outcome: DecisionOutcome
) -> bool:
    """Replay a LEQ certificate: chain from g to some g' >= f with the stated slack."""
    if not outcome.is_equiv or outcome.certificate is None or outcome.slack is None:
        return False
    f = as_vector(f, pres.dim)
    g = as_vector(g, pres.dim)
    cert = outcome.certificate
    if cert.start != g:
        return False
    try:
        end = replay(pres, g, cert)
    except InputError:
        return False
    if end != cert.end:
        return False
    if any(ev < fv for ev, fv in zip(end, f)):
        return False
    return outcome.slack == vec_sub(end, f)


# ---------------------------------------------------------------------------
# separators


def _difference_rows(pres: MonoidPresentation) -> list[Vector]:
    return [vec_sub(mv.lhs, mv.rhs) for mv in pres.moves if mv.lhs != mv.rhs]


def find_separator(
    pres: MonoidPresentation,
    f: Sequence[int],
    g: Sequence[int],
    modulus_bound: int = DEFAULT_MODULUS_BOUND,
) -> LinearSeparator | None:
    """Search for a move-invariant functional with c.f != c.g.

    Rational kernel vectors are tried first (echelon basis order), then the
    moduli m = 2..modulus_bound ascending.  Deterministic.
    """
    f = as_vector(f, pres.dim)
    g = as_vector(g, pres.dim)
    rows = _difference_rows(pres)
    diff = vec_sub(f, g)
    for cand in rational_kernel_basis(rows, pres.dim):
        if vec_dot(cand, diff) != 0:
            return LinearSeparator(SeparatorKind.RATIONAL, primitive_integer(cand))
    if rows and modulus_bound >= 2:
        diag, V = integer_diagonalize(rows, pres.dim)
        for m in range(2, modulus_bound + 1):
            for gen in modular_kernel_generators(diag, V, pres.dim, m):
                if vec_dot(gen, diff) % m != 0:
                    return LinearSeparator(SeparatorKind.MODULAR, gen, modulus=m)
    return None


def _nonneg_rational_separator(
    pres: MonoidPresentation, f: Vector, g: Vector
) -> LinearSeparator | None:
    """Nonnegative invariant c with c.f > c.g, via exact LP feasibility."""
    lp = LinearProgram()
    names = [lp.variable(f"c{i}") for i in range(pres.dim)]
    for row in _difference_rows(pres):
        coeffs = {names[i]: row[i] for i in range(pres.dim) if row[i]}
        lp.constrain(coeffs, "==", 0)
    diff = vec_sub(f, g)
    gap = {names[i]: diff[i] for i in range(pres.dim) if diff[i]}
    if not gap:
        return None
    lp.constrain(gap, ">=", 1)
    sol = lp.solve()
    if sol.status != OPTIMAL:
        return None
    coeffs = primitive_integer([sol.values[n] for n in names])
    return LinearSeparator(SeparatorKind.RATIONAL, coeffs)


def _scale_extended(values: list) -> tuple:
    """Scale the finite part of an extended vector to primitive integers."""
    finite = [v for v in values if v != INFINITY]
    if not finite or all(v == 0 for v in finite):
        return tuple(0 if v != INFINITY else INFINITY for v in values)
    scaled = primitive_integer([Fraction(v) for v in finite])
    out = []
    k = 0
    for v in values:
        if v == INFINITY:
            out.append(INFINITY)
        else:
            out.append(scaled[k])
            k += 1
    return tuple(out)


def _extended_order_separator(
    pres: MonoidPresentation, f: Vector, g: Vector
) -> LinearSeparator | None:
    """Order separator with values in [0, oo].

    Enumerates candidate finite supports F (ordered by size then
    lexicographically).  F is admissible when every move has either both
    sides supported inside F or both sides sticking out; the functional is
    infinite off F, and solves an exact feasibility problem on F.
    """
    d = pres.dim
    if d > _EXTENDED_SEPARATOR_MAX_DIM:
        return None
    supports = [(frozenset(i for i, x in enumerate(mv.lhs) if x),
                 frozenset(i for i, x in enumerate(mv.rhs) if x))
                for mv in pres.moves]
    fsupp = frozenset(i for i, x in enumerate(f) if x)
    gsupp = frozenset(i for i, x in enumerate(g) if x)
    for size in range(d):  # the full support is covered by the rational LP
        for F in itertools.combinations(range(d), size):
            Fset = frozenset(F)
            if not gsupp <= Fset:
                continue
            if any((ls <= Fset) != (rs <= Fset) for ls, rs in supports):
                continue
            if not fsupp <= Fset:
                coeffs = tuple(0 if i in Fset else INFINITY for i in range(d))
                return LinearSeparator(SeparatorKind.EXTENDED, coeffs)
            lp = LinearProgram()
            names = {i: lp.variable(f"c{i}") for i in F}
            for mv, (ls, rs) in zip(pres.moves, supports):
                if ls <= Fset and rs <= Fset:
                    coeffs = {}
                    for i in F:
                        v = mv.lhs[i] - mv.rhs[i]
                        if v:
                            coeffs[names[i]] = v
                    if coeffs:
                        lp.constrain(coeffs, "==", 0)
            gap = {}
            for i in F:
                v = f[i] - g[i]
                if v:
                    gap[names[i]] = v
            if not gap:
                continue
            lp.constrain(gap, ">=", 1)
            sol = lp.solve()
            if sol.status == OPTIMAL:
                values = [sol.values[names[i]] if i in Fset else INFINITY for i in range(d)]
                return LinearSeparator(SeparatorKind.EXTENDED, _scale_extended(values))
    return None


# ---------------------------------------------------------------------------
# unit-move presentations (every move is a basis vector on both sides)
#
# For these the congruence is exactly "equal coordinate sums on each
# connected component of the move graph", so congruence and divisibility are
# decided directly and certificates are built by routing single units along
# move-graph paths.  Presentations coming from group actions are of this
# shape; the general search below never sees them.


class _UnitStructure:
    __slots__ = ("comp", "adj")

    def __init__(self, comp: list[int], adj: list[list[tuple[int, int, Direction]]]):
        self.comp = comp
        self.adj = adj


def _unit_structure(pres: MonoidPresentation) -> _UnitStructure | None:
    d = pres.dim
    adj: list[list[tuple[int, int, Direction]]] = [[] for _ in range(d)]
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, mv in enumerate(pres.moves):
        if sum(mv.lhs) != 1 or sum(mv.rhs) != 1:
            return None
        a = mv.lhs.index(1)
        b = mv.rhs.index(1)
        if a != b:
            adj[a].append((b, idx, Direction.FORWARD))
            adj[b].append((a, idx, Direction.BACKWARD))
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    comp = [find(v) for v in range(d)]
    return _UnitStructure(comp, adj)


def _component_sums(unit: _UnitStructure, vec: Vector) -> dict[int, int]:
    sums: dict[int, int] = {}
    for v, x in enumerate(vec):
        c = unit.comp[v]
        sums[c] = sums.get(c, 0) + x
    return sums


def _component_indicator(unit: _UnitStructure, dim: int, comp_id: int) -> LinearSeparator:
    coeffs = tuple(int(unit.comp[v] == comp_id) for v in range(dim))
    return LinearSeparator(SeparatorKind.RATIONAL, coeffs)


def _unit_path(unit: _UnitStructure, src: int, dst: int) -> list[tuple[int, int, Direction]]:
    """Move-graph path src -> dst as (target vertex, move index, direction) hops."""
    if src == dst:
        return []
    prev: dict[int, tuple[int, int, Direction]] = {src: None}  # type: ignore[dict-item]
    queue = [src]
    while queue:
        nxt = []
        for v in queue:
            for (w, idx, dn) in unit.adj[v]:
                if w not in prev:
                    prev[w] = (v, idx, dn)
                    if w == dst:
                        hops = []
                        cur = dst
                        while cur != src:
                            p, i, d = prev[cur]
                            hops.append((cur, i, d))
                            cur = p
                        hops.reverse()
                        return hops
                    nxt.append(w)
        queue = nxt
    raise AssertionError("internal: no path inside a connected component")


def _route_units(unit: _UnitStructure, start: Vector, goal: Vector) -> list[RewriteStep]:
    cur = list(start)
    steps: list[RewriteStep] = []
    while True:
        src = next((v for v in range(len(cur)) if cur[v] > goal[v]), None)
        if src is None:
            return steps
        comp = unit.comp[src]
        dst = next(
            v for v in range(len(cur)) if unit.comp[v] == comp and cur[v] < goal[v]
        )
        at = src
        for (to, idx, dn) in _unit_path(unit, src, dst):
            cur[at] -= 1
            cur[to] += 1
            steps.append(RewriteStep(idx, dn))
            at = to


def _equiv_unit(pres: MonoidPresentation, unit: _UnitStructure, f: Vector, g: Vector) -> DecisionOutcome:
    sf = _component_sums(unit, f)
    sg = _component_sums(unit, g)
    for c in sorted(sf):
        if sf[c] != sg[c]:
            return DecisionOutcome(
                Verdict.NOT_EQUIV, separator=_component_indicator(unit, pres.dim, c)
            )
    steps = _route_units(unit, f, g)
    return DecisionOutcome(
        Verdict.EQUIV, certificate=EquivCertificate(f, tuple(steps), g)
    )


def _leq_unit(pres: MonoidPresentation, unit: _UnitStructure, f: Vector, g: Vector) -> DecisionOutcome:
    sf = _component_sums(unit, f)
    sg = _component_sums(unit, g)
    for c in sorted(sf):
        if sf[c] > sg[c]:
            return DecisionOutcome(
                Verdict.NOT_EQUIV, separator=_component_indicator(unit, pres.dim, c)
            )
    target = list(f)
    for c in sorted(sf):
        extra = sg[c] - sf[c]
        if extra:
            root = min(v for v in range(pres.dim) if unit.comp[v] == c)
            target[root] += extra
    target_v = tuple(target)
    steps = _route_units(unit, g, target_v)
    return DecisionOutcome(
        Verdict.EQUIV,
        certificate=EquivCertificate(g, tuple(steps), target_v),
        slack=vec_sub(target_v, f),
    )


# ---------------------------------------------------------------------------
# bounded search


def _compiled_moves(pres: MonoidPresentation):
    comp = []
    for i, mv in enumerate(pres.moves):
        comp.append((i, Direction.FORWARD, mv.lhs, vec_sub(mv.rhs, mv.lhs)))
        comp.append((i, Direction.BACKWARD, mv.rhs, vec_sub(mv.lhs, mv.rhs)))
    return comp


def _back_steps(visited: dict, state: Vector) -> list[RewriteStep]:
    steps = []
    while visited[state] is not None:
        prev, idx, dn = visited[state]
        steps.append(RewriteStep(idx, dn))
        state = prev
    steps.reverse()
    return steps


def _bfs_equiv(pres: MonoidPresentation, f: Vector, g: Vector, budget: SearchBudget) -> DecisionOutcome:
    """Bidirectional breadth-first search over the rewrite graph.

    Budgets are enforced at level boundaries so the verdict depends only on
    level sets, not on intra-level ordering (this keeps verdicts invariant
    under coordinate relabeling).
    """
    moves = _compiled_moves(pres)
    cap = budget.max_coord
    visited: tuple[dict, dict] = ({f: None}, {g: None})
    frontier: list[list[Vector]] = [[f], [g]]
    cap_hit = [False, False]

    def report(exhausted: bool) -> DecisionOutcome:
        return DecisionOutcome(
            Verdict.UNKNOWN,
            budget=BudgetReport(
                states_visited=len(visited[0]) + len(visited[1]),
                coordinate_cap_hit=cap_hit[0] or cap_hit[1],
                exhausted=exhausted,
            ),
        )

    while frontier[0] or frontier[1]:
        if frontier[0] and (not frontier[1] or len(visited[0]) <= len(visited[1])):
            side = 0
        else:
            side = 1
        mine = visited[side]
        other = visited[1 - side]
        nxt: list[Vector] = []
        for state in frontier[side]:
            for (idx, dn, need, delta) in moves:
                ok = True
                for sv, nv in zip(state, need):
                    if sv < nv:
                        ok = False
                        break
                if not ok:
                    continue
                new = tuple(sv + dv for sv, dv in zip(state, delta))
                if max(new) > cap:
                    cap_hit[side] = True
                    continue
                if new in mine:
                    continue
                mine[new] = (state, idx, dn)
                if new in other:
                    steps_f = _back_steps(visited[0], new)
                    steps_g = _back_steps(visited[1], new)
                    inverted = [
                        RewriteStep(s.move_index, _flip(s.direction))
                        for s in reversed(steps_g)
                    ]
                    cert = EquivCertificate(f, tuple(steps_f + inverted), g)
                    return DecisionOutcome(Verdict.EQUIV, certificate=cert)
                nxt.append(new)
        frontier[side] = nxt
        if not nxt and not cap_hit[side]:
            # This side's congruence class is fully enumerated and misses the
            # other endpoint, so the classes are disjoint.  The verdict stays
            # UNKNOWN because no separator certificate is available here; the
            # report records the clean exhaustion.
            return report(exhausted=True)
        if len(visited[0]) + len(visited[1]) > budget.max_states:
            return report(exhausted=False)
    return report(exhausted=not (cap_hit[0] or cap_hit[1]))


def _bfs_leq(pres: MonoidPresentation, f: Vector, g: Vector, budget: SearchBudget) -> DecisionOutcome:
    """Breadth-first search from g for a congruent vector dominating f."""
    moves = _compiled_moves(pres)
    cap = budget.max_coord
    visited: dict = {g: None}
    frontier = [g]
    cap_hit = False
    while frontier:
        nxt: list[Vector] = []
        for state in frontier:
            for (idx, dn, need, delta) in moves:
                ok = True
                for sv, nv in zip(state, need):
                    if sv < nv:
                        ok = False
                        break
                if not ok:
                    continue
                new = tuple(sv + dv for sv, dv in zip(state, delta))
                if max(new) > cap:
                    cap_hit = True
                    continue
                if new in visited:
                    continue
                visited[new] = (state, idx, dn)
                if all(nv >= fv for nv, fv in zip(new, f)):
                    steps = _back_steps(visited, new)
                    return DecisionOutcome(
                        Verdict.EQUIV,
                        certificate=EquivCertificate(g, tuple(steps), new),
                        slack=vec_sub(new, f),
                    )
                nxt.append(new)
        frontier = nxt
        if len(visited) > budget.max_states:
            return DecisionOutcome(
                Verdict.UNKNOWN,
                budget=BudgetReport(len(visited), cap_hit, exhausted=False),
            )
    return DecisionOutcome(
        Verdict.UNKNOWN,
        budget=BudgetReport(len(visited), cap_hit, exhausted=not cap_hit),
    )


# ---------------------------------------------------------------------------
# public decision procedures


def decide_equiv(
    pres: MonoidPresentation,
    f: Sequence[int],
    g: Sequence[int],
    budget: SearchBudget | None = None,
) -> DecisionOutcome:
    """Decide congruence of f and g under the presentation."""
    budget = budget or DEFAULT_BUDGET
    f = as_vector(f, pres.dim)
    g = as_vector(g, pres.dim)
    if f == g:
        return DecisionOutcome(Verdict.EQUIV, certificate=EquivCertificate(f, (), g))
    unit = _unit_structure(pres)
    if unit is not None:
        return _equiv_unit(pres, unit, f, g)
    sep = find_separator(pres, f, g)
    if sep is not None:
        return DecisionOutcome(Verdict.NOT_EQUIV, separator=sep)
    return _bfs_equiv(pres, f, g, budget)


def decide_leq(
    pres: MonoidPresentation,
    f: Sequence[int],
    g: Sequence[int],
    budget: SearchBudget | None = None,
) -> DecisionOutcome:
    """Decide f <= g in the quotient's algebraic order.

    EQUIV verdict means the order relation holds, certified by a rewrite
    chain from g to some g' >= f together with the slack g' - f.  NOT_EQUIV
    comes with a nonnegative (possibly extended-valued) invariant functional
    whose value at f strictly exceeds its value at g.
    """
    budget = budget or DEFAULT_BUDGET
    f = as_vector(f, pres.dim)
    g = as_vector(g, pres.dim)
    if all(fv <= gv for fv, gv in zip(f, g)):
        return DecisionOutcome(
            Verdict.EQUIV,
            certificate=EquivCertificate(g, (), g),
            slack=vec_sub(g, f),
        )
    unit = _unit_structure(pres)
    if unit is not None:
        return _leq_unit(pres, unit, f, g)
    sep = _nonneg_rational_separator(pres, f, g)
    if sep is not None:
        return DecisionOutcome(Verdict.NOT_EQUIV, separator=sep)
    sep = _extended_order_separator(pres, f, g)
    if sep is not None:
        return DecisionOutcome(Verdict.NOT_EQUIV, separator=sep)
    return _bfs_leq(pres, f, g, budget)


def kl_paradoxical(
    pres: MonoidPresentation,
    theta: Sequence[int],
    k: int,
    l: int,
    budget: SearchBudget | None = None,
) -> DecisionOutcome:
    """Decide whether k copies of theta fit below l copies (k > l >= 1).

    The (2, 1) case is the properly-infinite test.  Delegates to
    :func:`decide_leq` on the scalar multiples; theta = 0 is trivially
    paradoxical and short-circuits before any search.
    """
    if not (isinstance(k, int) and isinstance(l, int) and k > l >= 1):
        raise InputError(INVALID_PAIR, f"need integers k > l >= 1, got k={k}, l={l}", k=k, l=l)
    theta = as_vector(theta, pres.dim)
    return decide_leq(pres, vec_scale(k, theta), vec_scale(l, theta), budget)


def almost_unperforated_up_to(
    pres: MonoidPresentation,
    generators: Sequence[Sequence[int]],
    coeff_bound: int = 4,
    mult_bound: int = 4,
    budget: SearchBudget | None = None,
    max_pairs: int = 5000,
) -> UnperforationSweep:
    """Bounded search for an almost-unperforation counterexample.

    Enumerates theta, eta in the span of `generators` with coefficients up to
    `coeff_bound` and multipliers mult_bound >= n > m >= 1.  A counterexample
    must be fully certified on both sides: n*theta <= m*eta by a replayable
    chain AND theta <= eta refuted by a nonnegative separator.  Clearance is
    only ever claimed within the stated bounds.
    """
    gens = [as_vector(gv, pres.dim) for gv in generators]
    if not gens:
        raise InputError(DIMENSION_MISMATCH, "generator list must be nonempty")
    span: list[Vector] = []
    seen = set()
    for coeffs in itertools.product(range(coeff_bound + 1), repeat=len(gens)):
        vec = tuple(sum(c * gv[i] for c, gv in zip(coeffs, gens)) for i in range(pres.dim))
        if vec not in seen:
            seen.add(vec)
            span.append(vec)
    pairs_checked = 0
    unknown = 0
    truncated = False
    for theta in span:
        for eta in span:
            if pairs_checked >= max_pairs:
                truncated = True
                break
            pairs_checked += 1
            order = decide_leq(pres, theta, eta, budget)
            if order.is_equiv:
                continue  # theta <= eta holds; no counterexample from this pair
            if order.is_unknown:
                unknown += 1
                continue
            for n in range(2, mult_bound + 1):
                for m in range(1, n):
                    scaled = decide_leq(
                        pres, vec_scale(n, theta), vec_scale(m, eta), budget
                    )
                    if scaled.is_equiv:
                        return UnperforationSweep(
                            UnperforationCounterexample(
                                theta, eta, n, m, scaled, order.separator
                            ),
                            pairs_checked,
                            unknown,
                            truncated,
                        )
                    if scaled.is_unknown:
                        unknown += 1
        if truncated:
            break
    return UnperforationSweep(None, pairs_checked, unknown, truncated)
