"""Directed-graph and k-graph models and their monoid presentations.

A directed graph is stored with edges as (range, source) pairs; its
adjacency matrix counts A[v][w] = number of edges with range v and source w,
and all reachability below follows edges from range to source.  A k-graph
model is a vertex set with k pairwise commuting nonnegative adjacency
matrices; rows must be nonzero (no sources).

The vertex-count transfer operator is theta(n, f) = (A^n)^t f.  The
presentation of the associated commutative monoid has one move per vertex
and matrix, identifying the vertex basis vector with its transfer image.
Cylinder calculus on path space is provided for ordinary graphs: depth
normalization splits a cylinder along all one-edge extensions, and the class
map sends a union of same-depth cylinders to the sum of the source vertex
basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BAD_REFERENCE,
    DIMENSION_MISMATCH,
    NEGATIVE_ENTRY,
    NONCOMMUTING_MATRICES,
    NONCOMPOSABLE_WORD,
    OVERLAPPING_CYLINDERS,
    ROW_ZERO,
    InputError,
)
from .monoid import MonoidPresentation, Move, Vector, build_presentation, unit_vector

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Edge:
    id: str
    range: str
    source: str


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def vertex_index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise InputError(BAD_REFERENCE, f"unknown vertex {v!r}", vertex=v) from None

    def edge_by_id(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise InputError(BAD_REFERENCE, f"unknown edge {eid!r}", edge=eid)

    def edges_with_range(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.range == v]


def build_graph(vertices: Sequence[str], edges: Iterable) -> DirectedGraph:
    """Validate a directed graph: unique ids, resolvable endpoints, no sources."""
    verts = tuple(str(v) for v in vertices)
    if len(set(verts)) != len(verts):
        raise InputError(BAD_REFERENCE, "duplicate vertex ids")
    built = []
    seen_ids = set()
    for e in edges:
        if isinstance(e, Edge):
            eid, rng, src = e.id, e.range, e.source
        elif isinstance(e, dict):
            try:
                eid, rng, src = e["id"], e["range"], e["source"]
            except KeyError as k:
                raise InputError(BAD_REFERENCE, f"edge missing field {k}") from None
        elif isinstance(e, (tuple, list)) and len(e) == 3:
            eid, rng, src = e
        else:
            raise InputError(BAD_REFERENCE, f"malformed edge entry {e!r}")
        eid, rng, src = str(eid), str(rng), str(src)
        if eid in seen_ids:
            raise InputError(BAD_REFERENCE, f"duplicate edge id {eid!r}", edge=eid)
        seen_ids.add(eid)
        if rng not in verts or src not in verts:
            raise InputError(
                BAD_REFERENCE, f"edge {eid!r} references unknown vertex", edge=eid
            )
        built.append(Edge(eid, rng, src))
    graph = DirectedGraph(verts, tuple(built))
    for v in verts:
        if not graph.edges_with_range(v):
            raise InputError(ROW_ZERO, f"vertex {v!r} is not the range of any edge", vertex=v)
    return graph


def graph_adjacency(graph: DirectedGraph) -> Matrix:
    n = len(graph.vertices)
    idx = {v: i for i, v in enumerate(graph.vertices)}
    rows = [[0] * n for _ in range(n)]
    for e in graph.edges:
        rows[idx[e.range]][idx[e.source]] += 1
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class KGraphModel:
    k: int
    vertices: tuple[str, ...]
    matrices: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def validate_kgraph(vertices: Sequence[str], matrices: Sequence[Sequence[Sequence[int]]]) -> KGraphModel:
    """Check shapes, nonnegativity, nonzero rows, and exact pairwise commutation."""
    verts = tuple(str(v) for v in vertices)
    if not verts or len(set(verts)) != len(verts):
        raise InputError(BAD_REFERENCE, "vertex ids must be nonempty and unique")
    n = len(verts)
    k = len(matrices)
    if k < 1:
        raise InputError(DIMENSION_MISMATCH, "need at least one adjacency matrix")
    mats: list[Matrix] = []
    for i, m in enumerate(matrices):
        if len(m) != n or any(len(row) != n for row in m):
            raise InputError(
                DIMENSION_MISMATCH, f"matrix {i} is not {n}x{n}", matrix=i
            )
        rows = []
        for vi, row in enumerate(m):
            row = tuple(int(x) for x in row)
            if any(x < 0 for x in row):
                raise InputError(NEGATIVE_ENTRY, f"matrix {i} row {vi} has a negative entry")
            if not any(row):
                raise InputError(
                    ROW_ZERO,
                    f"matrix {i} row for vertex {verts[vi]!r} is zero",
                    vertex=verts[vi],
                    matrix=i,
                )
            rows.append(row)
        mats.append(tuple(rows))
    for i in range(k):
        for j in range(i + 1, k):
            if _mat_mul(mats[i], mats[j]) != _mat_mul(mats[j], mats[i]):
                raise InputError(
                    NONCOMMUTING_MATRICES,
                    f"matrices {i} and {j} do not commute",
                    i=i,
                    j=j,
                )
    return KGraphModel(k=k, vertices=verts, matrices=tuple(mats))


def kgraph_from_graph(graph: DirectedGraph) -> KGraphModel:
    return validate_kgraph(graph.vertices, [graph_adjacency(graph)])


def adjacency_power(model: KGraphModel, p: Sequence[int]) -> Matrix:
    """A^p = prod_i A_i^{p_i}; the factors commute so the order is immaterial."""
    if len(p) != model.k:
        raise InputError(DIMENSION_MISMATCH, f"power vector must have length {model.k}")
    if any(x < 0 for x in p):
        raise InputError(NEGATIVE_ENTRY, "power vector must be componentwise nonnegative")
    out = _identity(model.dim)
    for mat, e in zip(model.matrices, p):
        for _ in range(int(e)):
            out = _mat_mul(out, mat)
    return out


def theta(model: KGraphModel, n: Sequence[int], f: Sequence[int]) -> Vector:
    """Transfer operator: theta(n, f) = (A^n)^t f, counting weighted paths in."""
    if len(f) != model.dim:
        raise InputError(DIMENSION_MISMATCH, "vector length does not match vertex count")
    power = adjacency_power(model, n)
    return tuple(
        sum(power[v][w] * int(f[v]) for v in range(model.dim))
        for w in range(model.dim)
    )


def presentation_from_kgraph(model: KGraphModel) -> MonoidPresentation:
    """One move per (vertex, matrix): the vertex class equals its transfer image."""
    moves = []
    for vi in range(model.dim):
        lhs = unit_vector(model.dim, vi)
        for mat in model.matrices:
            moves.append(Move(lhs, tuple(mat[vi])))
    return build_presentation(model.dim, moves)


def vertex_delta(model: KGraphModel, vertex: str) -> Vector:
    idx = model.vertices.index(vertex) if vertex in model.vertices else -1
    if idx < 0:
        raise InputError(BAD_REFERENCE, f"unknown vertex {vertex!r}", vertex=vertex)
    return unit_vector(model.dim, idx)


def relabel_kgraph(model: KGraphModel, perm: Sequence[int]) -> KGraphModel:
    """Apply a vertex permutation: vertex i of the result is vertex perm[i]."""
    if sorted(perm) != list(range(model.dim)):
        raise InputError(BAD_REFERENCE, "not a permutation of the vertex indices")
    verts = tuple(model.vertices[p] for p in perm)
    mats = tuple(
        tuple(tuple(mat[pi][pj] for pj in perm) for pi in perm) for mat in model.matrices
    )
    return KGraphModel(k=model.k, vertices=verts, matrices=mats)


# ---------------------------------------------------------------------------
# cylinder calculus on path space (ordinary graphs only)


@dataclass(frozen=True)
class PathWord:
    """A finite path e1..en with s(e_i) = r(e_{i+1}); n = 0 words are vertices."""

    range: str
    source: str
    edges: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.edges)


def vertex_word(graph: DirectedGraph, vertex: str) -> PathWord:
    graph.vertex_index(vertex)
    return PathWord(vertex, vertex, ())


def path_word(graph: DirectedGraph, edge_ids: Sequence[str]) -> PathWord:
    if not edge_ids:
        raise InputError(NONCOMPOSABLE_WORD, "empty edge list; use vertex_word")
    edges = [graph.edge_by_id(str(e)) for e in edge_ids]
    for a, b in zip(edges, edges[1:]):
        if a.source != b.range:
            raise InputError(
                NONCOMPOSABLE_WORD,
                f"edges {a.id!r} and {b.id!r} do not compose",
                left=a.id,
                right=b.id,
            )
    return PathWord(edges[0].range, edges[-1].source, tuple(e.id for e in edges))


@dataclass(frozen=True)
class CylinderUnion:
    depth: int
    words: tuple[PathWord, ...]


def _extend_to_depth(graph: DirectedGraph, word: PathWord, depth: int) -> list[PathWord]:
    out = [word]
    while len(out[0]) < depth:
        nxt = []
        for w in out:
            for e in graph.edges_with_range(w.source):
                nxt.append(PathWord(w.range, e.source, w.edges + (e.id,)))
        out = nxt
    return out


def cylinder_normalize(
    graph: DirectedGraph,
    words: Sequence[PathWord],
    strict: bool = False,
    depth: int | None = None,
) -> CylinderUnion:
    """Split every cylinder to a common depth and form the union.

    The target depth defaults to the longest input word; a larger `depth` may
    be requested.  Duplicates after splitting mean the inputs overlapped (one
    word extended another, or a word repeated); in strict mode that is an
    error, otherwise the duplicates are silently merged.
    """
    longest = max((len(w) for w in words), default=0)
    if depth is None:
        depth = longest
    elif depth < longest:
        raise InputError(
            OVERLAPPING_CYLINDERS,
            f"requested depth {depth} is below the longest input word ({longest})",
        )
    seen: dict[PathWord, None] = {}
    overlapped = False
    for w in words:
        for ext in _extend_to_depth(graph, w, depth):
            if ext in seen:
                overlapped = True
            else:
                seen[ext] = None
    if strict and overlapped:
        raise InputError(OVERLAPPING_CYLINDERS, "input cylinders overlap")
    return CylinderUnion(depth=depth, words=tuple(seen))


def class_of_cylinders(graph: DirectedGraph, union: CylinderUnion) -> Vector:
    """Monoid class of the union: the sum of source-vertex basis vectors."""
    n = len(graph.vertices)
    idx = {v: i for i, v in enumerate(graph.vertices)}
    out = [0] * n
    for w in union.words:
        out[idx[w.source]] += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class StructuralReport:
    cofinal: bool
    condition_L: bool
    strongly_connected: bool
    cyclic_sccs: tuple[tuple[str, ...], ...]


def _sccs(n: int, succ: list[set[int]]) -> list[list[int]]:
    """Iterative Tarjan; components are emitted in a deterministic order."""
    index = [None] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = [0]
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(sorted(succ[root])))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] is None:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    onstack[w] = True
                    work.append((w, iter(sorted(succ[w]))))
                    advanced = True
                    break
                elif onstack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def structural_checks(graph: DirectedGraph) -> StructuralReport:
    """Cofinality and cycle-exit checks, via condensation and reachability.

    Reachability follows edges from range to source.  Cofinal: every vertex
    reaches every strongly connected component containing a cycle.  Condition
    (L): no cycle all of whose vertices have exactly one outgoing edge.
    """
    n = len(graph.vertices)
    idx = {v: i for i, v in enumerate(graph.vertices)}
    A = graph_adjacency(graph)
    succ = [set(w for w in range(n) if A[v][w] > 0) for v in range(n)]
    comps = _sccs(n, succ)
    cyclic = []
    for comp in comps:
        if len(comp) > 1 or A[comp[0]][comp[0]] > 0:
            cyclic.append(comp)
    preds = [set(v for v in range(n) if A[v][w] > 0) for w in range(n)]
    cofinal = True
    for comp in cyclic:
        reachers = set(comp)
        queue = list(comp)
        while queue:
            w = queue.pop()
            for v in preds[w]:
                if v not in reachers:
                    reachers.add(v)
                    queue.append(v)
        if len(reachers) != n:
            cofinal = False
            break
    # condition (L): walk the partial functional graph of out-degree-1 vertices
    outdeg = [sum(A[v]) for v in range(n)]
    single = {v: next(w for w in range(n) if A[v][w] > 0) for v in range(n) if outdeg[v] == 1}
    condition_l = True
    color = {v: 0 for v in single}
    for v0 in sorted(single):
        if color[v0]:
            continue
        path = []
        v = v0
        while v in single and color.get(v, 2) == 0:
            color[v] = 1
            path.append(v)
            v = single[v]
        if v in single and color.get(v) == 1:
            condition_l = False
            break
        for w in path:
            color[w] = 2
    return StructuralReport(
        cofinal=cofinal,
        condition_L=condition_l,
        strongly_connected=len(comps) == 1,
        cyclic_sccs=tuple(tuple(graph.vertices[v] for v in comp) for comp in cyclic),
    )


def kgraph_skeleton(model: KGraphModel) -> DirectedGraph:
    """Underlying one-colored graph: edge multiplicities summed over matrices."""
    edges = []
    for mi, mat in enumerate(model.matrices):
        for vi, v in enumerate(model.vertices):
            for wi, w in enumerate(model.vertices):
                for c in range(mat[vi][wi]):
                    edges.append(Edge(f"m{mi}:{v}->{w}#{c}", v, w))
    return DirectedGraph(model.vertices, tuple(edges))
