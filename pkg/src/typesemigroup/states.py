"""Exact solvers for normalized states, invariant vectors, and coboundaries.

A state certificate assigns each vertex a value in [0, oo]: finite values
form an exact-rational vector c with A_i c = c on the finite support, every
vertex outside the support escapes to infinity through each matrix, and the
normalization c . target = 1 holds exactly.  Support enumeration replaces
extended arithmetic inside the linear programs, which stay purely rational.

The coboundary check decides whether the integer lattice spanned by the
columns of the operators (I - A_i^t) meets the positive cone nontrivially;
witnesses are returned scaled to integers and verified by substitution.  The
Stiemke cross-check solves the dual feasibility problem (a strictly positive
invariant vector) independently and compares: a mismatch is a bug, never a
property of the model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DIMENSION_MISMATCH, ZERO_TARGET, InputError
from .graphs import KGraphModel, presentation_from_kgraph
from .monoid import INFINITY, Vector
from .simplex import OPTIMAL, LinearProgram


@dataclass(frozen=True)
class StateCertificate:
    values: tuple  # Fraction per vertex, or INFINITY off the finite support
    target: Vector
    support: tuple[int, ...]


@dataclass(frozen=True)
class CoboundaryResult:
    holds: bool
    witness_y: Vector | None = None
    witness_z: tuple[Vector, ...] | None = None  # one integer vector per matrix


@dataclass(frozen=True)
class StiemkeResult:
    consistent: bool
    coboundary_holds: bool
    positive_vector: tuple[Fraction, ...] | None


@dataclass(frozen=True)
class DifferenceLattice:
    generators: tuple[Vector, ...]


def difference_lattice(model: KGraphModel) -> DifferenceLattice:
    """Move differences lhs - rhs of the induced presentation."""
    pres = presentation_from_kgraph(model)
    gens = tuple(
        tuple(l - r for l, r in zip(mv.lhs, mv.rhs)) for mv in pres.moves
    )
    return DifferenceLattice(generators=gens)


def _out_closure(model: KGraphModel, seed: frozenset[int]) -> frozenset[int]:
    closed = set(seed)
    queue = list(seed)
    while queue:
        v = queue.pop()
        for mat in model.matrices:
            for w in range(model.dim):
                if mat[v][w] > 0 and w not in closed:
                    closed.add(w)
                    queue.append(w)
    return frozenset(closed)


def _is_out_closed(model: KGraphModel, F: frozenset[int]) -> bool:
    for v in F:
        for mat in model.matrices:
            for w in range(model.dim):
                if mat[v][w] > 0 and w not in F:
                    return False
    return True


def _complement_escapes(model: KGraphModel, F: frozenset[int]) -> bool:
    """Every vertex outside F has, for each matrix, an out-neighbour outside F."""
    for v in range(model.dim):
        if v in F:
            continue
        for mat in model.matrices:
            if not any(mat[v][w] > 0 and w not in F for w in range(model.dim)):
                return False
    return True


def _candidate_supports(model: KGraphModel, seed: frozenset[int]):
    """Admissible finite supports containing `seed`, by size then lex order."""
    base = _out_closure(model, seed)
    rest = sorted(set(range(model.dim)) - base)
    from itertools import combinations

    options = []
    for size in range(len(rest) + 1):
        for extra in combinations(rest, size):
            options.append(frozenset(base | set(extra)))
    options.sort(key=lambda F: (len(F), tuple(sorted(F))))
    for F in options:
        if _is_out_closed(model, F) and _complement_escapes(model, F):
            yield F


def _invariance_lp(model: KGraphModel, F: frozenset[int]) -> tuple[LinearProgram, dict[int, str]]:
    lp = LinearProgram()
    names = {v: lp.variable(f"c{v}") for v in sorted(F)}
    for mat in model.matrices:
        for v in sorted(F):
            coeffs: dict[str, int] = {}
            for w in sorted(F):
                a = mat[v][w]
                if a:
                    coeffs[names[w]] = coeffs.get(names[w], 0) + a
            coeffs[names[v]] = coeffs.get(names[v], 0) - 1
            coeffs = {k: c for k, c in coeffs.items() if c}
            if coeffs:
                lp.constrain(coeffs, "==", 0)
    return lp, names


def solve_state_at(model: KGraphModel, target: Sequence[int]) -> StateCertificate | None:
    """First normalized invariant extended vector at `target`, or None.

    Supports are enumerated exhaustively (smallest first, then lexicographic),
    so None is a complete negative answer over all admissible supports.
    """
    target = tuple(int(x) for x in target)
    if len(target) != model.dim:
        raise InputError(DIMENSION_MISMATCH, "target has wrong length")
    seed = frozenset(v for v, x in enumerate(target) if x)
    if not seed:
        raise InputError(ZERO_TARGET, "target vector must be nonzero")
    for F in _candidate_supports(model, seed):
        lp, names = _invariance_lp(model, F)
        lp.constrain({names[v]: target[v] for v in sorted(F) if target[v]}, "==", 1)
        sol = lp.solve()
        if sol.status == OPTIMAL:
            values = tuple(
                sol.values[names[v]] if v in F else INFINITY for v in range(model.dim)
            )
            return StateCertificate(values=values, target=target, support=tuple(sorted(F)))
    return None


def verify_state_certificate(model: KGraphModel, cert: StateCertificate) -> bool:
    """Substitution check, independent of the solver.

    Verifies nonnegativity, invariance in extended arithmetic at every vertex
    (finite = finite, infinite = infinite), and exact normalization.
    """
    vals = cert.values
    if len(vals) != model.dim:
        return False
    support = set(cert.support)
    for v in range(model.dim):
        if (vals[v] == INFINITY) == (v in support):
            return False
    total = Fraction(0)
    for v, t in enumerate(cert.target):
        if t == 0:
            continue
        if vals[v] == INFINITY:
            return False
        total += Fraction(vals[v]) * t
    if total != 1:
        return False
    for v in range(model.dim):
        for mat in model.matrices:
            acc: Fraction | float = Fraction(0)
            for w in range(model.dim):
                a = mat[v][w]
                if not a:
                    continue
                if vals[w] == INFINITY:
                    acc = INFINITY
                    break
                acc += a * Fraction(vals[w])
            if vals[v] == INFINITY:
                if acc != INFINITY:
                    return False
            else:
                if Fraction(vals[v]) < 0 or acc != Fraction(vals[v]):
                    return False
    return True


def faithful_finite_state(model: KGraphModel) -> tuple[Fraction, ...] | None:
    """Strictly positive normalized invariant vector, or None.

    Solves the invariant cone with total mass one, then maximizes each
    coordinate separately; a coordinate whose maximum is zero is forced to
    vanish on the whole cone, so full support exists iff every maximum is
    positive, and the average of the maximizers is then a witness.
    """
    n = model.dim
    full = frozenset(range(n))
    maximizers = []
    for v in range(n):
        lp, names = _invariance_lp(model, full)
        lp.constrain({names[w]: 1 for w in range(n)}, "==", 1)
        sol = lp.solve(objective={names[v]: 1}, maximize=True)
        if sol.status != OPTIMAL or sol.objective == 0:
            return None
        maximizers.append([sol.values[names[w]] for w in range(n)])
    avg = tuple(sum(sol[w] for sol in maximizers) / n for w in range(n))
    assert all(x > 0 for x in avg) and sum(avg) == 1
    return avg


def coboundary_check(model: KGraphModel) -> CoboundaryResult:
    """Does the span of the (I - A_i^t) images meet the positive cone?

    Rational feasibility of { y = sum_i (I - A_i^t) z_i, y >= 0, sum y = 1 }
    scales to an integer witness, so HOLDS (infeasible) is exact.
    """
    n = model.dim
    lp = LinearProgram()
    ynames = [lp.variable(f"y{v}") for v in range(n)]
    znames = [
        [lp.variable(f"z{i}_{v}", free=True) for v in range(n)]
        for i in range(model.k)
    ]
    for v in range(n):
        coeffs: dict[str, Fraction | int] = {ynames[v]: -1}
        for i, mat in enumerate(model.matrices):
            for w in range(n):
                # ((I - A_i^t) z_i)_v = z_i[v] - sum_w A_i[w][v] z_i[w]
                a = int(v == w) - mat[w][v]
                if a:
                    coeffs[znames[i][w]] = coeffs.get(znames[i][w], 0) + a
        lp.constrain({k: c for k, c in coeffs.items() if c}, "==", 0)
    lp.constrain({yn: 1 for yn in ynames}, "==", 1)
    sol = lp.solve()
    if sol.status != OPTIMAL:
        return CoboundaryResult(holds=True)
    scale = 1
    for v in range(n):
        scale = lcm(scale, sol.values[ynames[v]].denominator)
    for i in range(model.k):
        for v in range(n):
            scale = lcm(scale, sol.values[znames[i][v]].denominator)
    y = tuple(int(sol.values[ynames[v]] * scale) for v in range(n))
    z = tuple(
        tuple(int(sol.values[znames[i][v]] * scale) for v in range(n))
        for i in range(model.k)
    )
    result = CoboundaryResult(holds=False, witness_y=y, witness_z=z)
    assert verify_coboundary_witness(model, result)
    return result


def verify_coboundary_witness(model: KGraphModel, result: CoboundaryResult) -> bool:
    """Check y = sum_i (I - A_i^t) z_i with y >= 0 and y != 0, by substitution."""
    if result.holds or result.witness_y is None or result.witness_z is None:
        return False
    n = model.dim
    y = result.witness_y
    if any(v < 0 for v in y) or not any(y):
        return False
    for v in range(n):
        acc = 0
        for i, mat in enumerate(model.matrices):
            zi = result.witness_z[i]
            acc += zi[v] - sum(mat[w][v] * zi[w] for w in range(n))
        if acc != y[v]:
            return False
    return True


def positive_invariant_vector(model: KGraphModel) -> tuple[Fraction, ...] | None:
    """Strictly positive y with A_i y = y for all i (entries >= 1 after scaling)."""
    n = model.dim
    lp, names = _invariance_lp(model, frozenset(range(n)))
    for v in range(n):
        lp.constrain({names[v]: 1}, ">=", 1)
    sol = lp.solve()
    if sol.status != OPTIMAL:
        return None
    return tuple(sol.values[names[v]] for v in range(n))


def stiemke_crosscheck(model: KGraphModel) -> StiemkeResult:
    """Two independent routes to the same dichotomy must agree.

    The coboundary LP and the positive-invariant-vector LP are a strict
    alternative: exactly one of them is feasible.  Disagreement indicates an
    implementation bug, not a mathematical possibility.
    """
    cob = coboundary_check(model)
    pos = positive_invariant_vector(model)
    return StiemkeResult(
        consistent=(cob.holds == (pos is not None)),
        coboundary_holds=cob.holds,
        positive_vector=pos,
    )
