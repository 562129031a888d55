"""The split step and the level-by-level halved Farey minor pipeline.

A split takes two vertices u, v of a graph together with a finite supply of
edge-disjoint u-v paths, and produces subgraphs H_u, H_v that overlap in a
finite connected set X. Contracting X gives a triangle u, X, v; repeating
inside the two halves grows a halved Farey graph minor one level at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Protocol, Sequence, Tuple

from . import grain_lines as gl
from .errors import (
    FareyMinorError,
    GrainingError,
    InputError,
    PipelineError,
    PreconditionError,
    SupplyError,
)
from .farey import Fraction, canonical_paths
from .graph_core import (
    BLACK,
    BLUE,
    Graph,
    Path,
    components,
    contract_set,
    delete_edges,
    delete_vertices,
    edge_key,
    graph_from_paths,
    induced_subgraph,
    interior,
    is_connected,
    is_path_in,
    max_edge_disjoint_paths,
    min_vertex_separator,
    path_edges,
    union,
)
from .minor_maps import MinorMap, compose_all, restrict_pattern, validate

# -- path supplies -------------------------------------------------------------


class PathSupply(Protocol):
    def __call__(self, G: Graph, u: int, v: int, count: int) -> List[Path]:
        ...


def _thread(G: Graph, a: int, b: int) -> Optional[Path]:
    """The edge ab, or a path a..b whose interior is unlabelled degree-2 vertices."""
    if G.has_edge(a, b):
        return (a, b)
    for w in sorted(G.neighbours(a)):
        walk, prev = [a], a
        while w != b and G.label(w) is None and G.degree(w) == 2:
            walk.append(w)
            prev, w = w, next(x for x in G.neighbours(w) if x != prev)
            if w in walk:
                break
        if w == b:
            return tuple(walk) + (b,)
    return None


@dataclass(frozen=True)
class FareySupply:
    """Canonical mediant paths between two fraction-labelled vertices.

    Consecutive labels are joined by an edge or by a subdivided thread.
    ``negative`` reads the label 1/0 as -1/0, for edges of the negative half.
    """

    negative: bool = False

    def __call__(self, G: Graph, u: int, v: int, count: int) -> List[Path]:
        ends = []
        for w in (u, v):
            lab = G.label(w)
            if not isinstance(lab, Fraction):
                raise SupplyError(f"vertex {w} has no fraction label")
            ends.append((-1, 0) if (self.negative and lab.is_infinite) else (lab.num, lab.den))
        index = G.label_index()
        out = []
        for labels in canonical_paths(tuple(ends), count):
            walk: List[int] = [u]
            for p, q in zip(labels, labels[1:]):
                a, b = index.get(p), index.get(q)
                seg = _thread(G, a, b) if a is not None and b is not None else None
                if seg is None:
                    raise SupplyError(f"host has no edge or thread between {p} and {q}")
                walk += seg[1:]
            out.append(tuple(walk))
        return out


@dataclass(frozen=True)
class PrefixSupply:
    """A fixed list of u-v paths; asking for more than it holds is a supply error."""

    paths: Tuple[Path, ...]

    def __call__(self, G: Graph, u: int, v: int, count: int) -> List[Path]:
        if count > len(self.paths):
            raise SupplyError(f"supply holds {len(self.paths)} paths, {count} requested")
        for P in self.paths:
            if P[0] != u or P[-1] != v:
                raise SupplyError(f"stored path {P} does not run from {u} to {v}")
        return [tuple(P) for P in self.paths[:count]]


@dataclass(frozen=True)
class FlowSupply:
    """Edge-disjoint paths from a maximum flow, for hosts without labels."""

    def __call__(self, G: Graph, u: int, v: int, count: int) -> List[Path]:
        _, paths = max_edge_disjoint_paths(delete_edges(G, [(u, v)]) if G.has_edge(u, v) else G, u, v)
        if len(paths) < count:
            raise SupplyError(f"only {len(paths)} edge-disjoint {u}-{v} paths exist, {count} requested")
        return paths[:count]


def _check_supplied(G: Graph, u: int, v: int, paths: Sequence[Path], k: int) -> None:
    if len(paths) != k:
        raise SupplyError(f"supply returned {len(paths)} paths, {k} requested")
    seen = {}
    for i, P in enumerate(paths):
        if P[0] != u or P[-1] != v or len(P) < 3 or not is_path_in(G, P):
            raise SupplyError(f"supplied path {i} is not a {u}-{v} path of length >= 2 avoiding uv")
        for e in path_edges(P):
            if e in seen:
                raise SupplyError(f"supplied paths {seen[e]} and {i} share edge {e}")
            seen[e] = i


# -- split step ------------------------------------------------------------------


@dataclass
class SplitResult:
    u: int
    v: int
    x_vertex: int
    X: frozenset
    H_u: Graph
    H_v: Graph
    contracted_u: Graph
    contracted_v: Graph
    map_u: MinorMap
    map_v: MinorMap
    prefix: gl.GrainLinePrefix
    prefix_u: gl.GrainLinePrefix
    prefix_v: gl.GrainLinePrefix
    separator: frozenset
    s_u: int
    s_v: int
    x_u: int
    x_v: int
    had_edge: bool

    @property
    def P0(self) -> Path:
        return self.prefix.paths[0]

    def child_paths_u(self) -> Tuple[Path, ...]:
        """u-X paths of the contracted u-side, skipping those that are just the edge uX."""
        z = self.x_vertex
        return tuple(tuple(z if w == self.x_u else w for w in P) for P in self.prefix_u.paths if len(P) > 2)

    def child_paths_v(self) -> Tuple[Path, ...]:
        z = self.x_vertex
        return tuple(tuple(z if w == self.x_v else w for w in P) for P in self.prefix_v.paths if len(P) > 2)

    def audit(self) -> Dict[str, bool]:
        u, v, X, z = self.u, self.v, self.X, self.x_vertex
        inner_u = induced_subgraph(self.H_u, X)
        checks = {
            "(i) H_u[X] = H_v[X], finite and connected": bool(X)
            and inner_u == induced_subgraph(self.H_v, X)
            and is_connected(self.H_u, X),
            "(ii) X avoids u and v": u not in X and v not in X,
            "(iii) sub-prefixes valid in H_u, H_v and wildly presented": all(
                gl.validate_prefix(p).ok and gl.is_wildly_presented(p) and all(is_path_in(H, P) for P in p.paths)
                for p, H in ((self.prefix_u, self.H_u), (self.prefix_v, self.H_v))
            ),
            "(iv) uX edge of H_u/X, vX edge of H_v/X": self.contracted_u.has_edge(u, z)
            and self.contracted_v.has_edge(v, z),
            "X = V(H_u) & V(H_v)": self.H_u.vertices & self.H_v.vertices == X,
            "sub-paths meet X only in x_u / x_v": all(set(P) & X == {self.x_u} for P in self.prefix_u.paths)
            and all(set(P) & X == {self.x_v} for P in self.prefix_v.paths),
            "P_0 grains S": gl.grains(self.prefix, self.prefix.start_index, self.separator),
            "contraction maps valid": validate(self.map_u).ok and validate(self.map_v).ok,
        }
        if self.had_edge:
            both = union(self.H_u, self.H_v, Graph((u, v), [(u, v)]))
            tri, _ = contract_set(both, X, new_id=z)
            checks["triangle u, v, X after contraction"] = all(
                tri.has_edge(a, b) for a, b in ((u, v), (u, z), (z, v))
            )
        return checks


def _separates(G: Graph, S, u: int, v: int) -> bool:
    rest = delete_vertices(G, S)
    return not any(u in c and v in c for c in components(rest))


def split_step(
    G: Graph,
    u: int,
    v: int,
    supply: PathSupply,
    k: int,
    separator=None,
    new_id: Optional[int] = None,
) -> SplitResult:
    """Split G at u, v into two overlapping halves joined through a finite connected X."""
    if u == v:
        raise InputError("u and v must differ")
    if u not in G or v not in G:
        raise InputError(f"{u} or {v} is not a vertex")
    if k < 3:
        raise SupplyError(f"a split needs at least 3 paths, k = {k}")
    had_edge = G.has_edge(u, v)
    work = delete_edges(G, [(u, v)]) if had_edge else G

    if separator is None:
        S = min_vertex_separator(work, u, v)
    else:
        S = frozenset(separator)
        if u in S or v in S or not S <= work.vertices or not _separates(work, S, u, v):
            raise InputError(f"{sorted(S)} is not a u-v separator avoiding u and v")
    if not S:
        raise PreconditionError(f"{u} and {v} are not connected once uv is removed")

    paths = [tuple(P) for P in supply(work, u, v, k)]
    _check_supplied(work, u, v, paths, k)
    prefix = gl.wild_subsequence(gl.extract(paths, k - 1))

    start = next((n for n in prefix.indices if gl.grains(prefix, n, S)), None)
    if start is None:
        raise GrainingError(f"no path of the prefix grains the separator {sorted(S)}", vertices=S, prefix=prefix)
    prefix = gl.tail(prefix, start)
    if len(prefix) < 2:
        raise SupplyError("fewer than two paths remain after graining the separator")

    P0 = prefix.paths[0]
    X = frozenset(interior(P0))
    if not X:
        raise PreconditionError("P_0 is a single edge; the supply broke its contract")
    s_u = next(w for w in P0 if w in S)
    s_v = next(w for w in reversed(P0) if w in S)
    on_L = [w for w in prefix.order if w in X]
    x_u, x_v = on_L[0], on_L[-1]

    second = prefix.start_index + 1
    prefix_u = gl.restrict(prefix, u, x_u, start=second)
    prefix_v = gl.restrict(prefix, x_v, v, start=second)

    labels = G.labels
    H_u = graph_from_paths([P0[:-1], *prefix_u.paths], labels)
    H_v = graph_from_paths([P0[1:], *prefix_v.paths], labels)
    z = G.fresh_id() if new_id is None else new_id
    contracted_u, map_u = contract_set(H_u, X, new_id=z)
    contracted_v, map_v = contract_set(H_v, X, new_id=z)
    return SplitResult(
        u, v, z, X, H_u, H_v, contracted_u, contracted_v, map_u, map_v,
        prefix, prefix_u, prefix_v, frozenset(S), s_u, s_v, x_u, x_v, had_edge,
    )


# -- pipeline ------------------------------------------------------------------


@dataclass
class Attachment:
    graph: Graph
    supply: PathSupply
    k: int


@dataclass
class PipelineResult:
    stages: List[Graph]
    maps: List[MinorMap]
    final: MinorMap
    pattern: Graph
    provenance: Dict[int, Tuple[int, Tuple[int, int]]]
    splits: List[Dict[Tuple[int, int], SplitResult]] = field(default_factory=list)
    root_contraction: Optional[MinorMap] = None

    def fhat_vertices(self, n: int) -> List[int]:
        """Vertices of the order-n halved Farey subgraph, by id."""
        return sorted(x for x in self.pattern.vertices if self._level(x) <= n)

    def _level(self, x: int) -> int:
        return self.provenance[x][0] if x in self.provenance else 0


def _precontract_root(G: Graph, u: int, v: int):
    thread = _thread(G, u, v)
    if thread is None or len(thread) == 2:
        raise InputError(f"({u}, {v}) is neither an edge nor a subdivided edge")
    X = set(thread[:-1])
    H, m = contract_set(G, X, new_id=u)
    if G.label(u) is not None:
        labels = dict(H.labels)
        labels[u] = G.label(u)
        H = Graph(H.vertices, H.edges, labels=labels)
        m = MinorMap(G, H, m.assignment)
    return H, m


def foresighted_pipeline(
    G: Graph,
    root_edge: Tuple[int, int],
    supply: PathSupply,
    depth: int,
    k: int,
) -> PipelineResult:
    """Grow a halved Farey minor of order ``depth`` by splitting inside every attachment.

    Level 0 is G itself with the single attachment G - uv. Each split's
    sub-prefixes become the path supplies of the two child attachments. If
    the root pair is joined by a subdivided thread instead of an edge, the
    thread's inner vertices are first contracted into u.
    """
    u, v = root_edge
    if depth < 1:
        raise InputError("depth must be at least 1")
    if u == v or u not in G or v not in G:
        raise InputError(f"bad root pair {root_edge}")
    pre = None
    if not G.has_edge(u, v):
        G, pre = _precontract_root(G, u, v)

    fhat_path = [u, v]
    fhat_edges = {edge_key(u, v): 0}
    provenance: Dict[int, Tuple[int, Tuple[int, int]]] = {}
    attachments = {(u, v): Attachment(delete_edges(G, [(u, v)]), supply, k)}
    stages, maps, splits = [G], [], []
    next_id = G.fresh_id()

    for level in range(depth):
        current = stages[-1]
        new_path = [fhat_path[0]]
        new_attachments = {}
        level_splits = {}
        assignment = {w: w for w in fhat_path}
        for a, b in zip(fhat_path, fhat_path[1:]):
            att = attachments[(a, b)]
            try:
                res = split_step(att.graph, a, b, att.supply, att.k, new_id=next_id)
            except FareyMinorError as exc:
                raise PipelineError(
                    f"split failed at level {level} on edge ({a}, {b}): {exc}",
                    level=level,
                    edge=(a, b),
                    achieved_depth=level,
                ) from exc
            z = next_id
            next_id += 1
            provenance[z] = (level + 1, (a, b))
            level_splits[(a, b)] = res
            for m in (res.map_u, res.map_v):
                assignment.update(m.assignment)
            left = res.child_paths_u()
            right = res.child_paths_v()
            new_attachments[(a, z)] = Attachment(
                delete_edges(res.contracted_u, [(a, z)]), PrefixSupply(left), len(left)
            )
            new_attachments[(z, b)] = Attachment(
                delete_edges(res.contracted_v, [(z, b)]), PrefixSupply(right), len(right)
            )
            fhat_edges[edge_key(a, z)] = level + 1
            fhat_edges[edge_key(z, b)] = level + 1
            new_path += [z, b]
        fhat_path = new_path
        skeleton = Graph(fhat_path, fhat_edges)
        nxt = union(skeleton, *(att.graph for att in new_attachments.values()))
        phi = MinorMap(current, nxt, assignment)
        report = validate(phi)
        if not report.ok:
            raise PipelineError(f"level {level} map is invalid: {report.kinds()}", level=level, achieved_depth=level)
        stages.append(nxt)
        maps.append(phi)
        splits.append(level_splits)
        attachments = new_attachments

    pattern = _fhat_pattern(fhat_path, fhat_edges, provenance, u, v, depth)
    chain = ([pre] if pre is not None else []) + maps
    final = restrict_pattern(compose_all(chain), pattern)
    return PipelineResult(stages, maps, final, pattern, provenance, splits, pre)


def _fhat_pattern(path, born, provenance, u, v, depth) -> Graph:
    labels = {u: Fraction(0, 1), v: Fraction(1, 0)}
    for z in sorted(provenance):
        _, (a, b) = provenance[z]
        la, lb = labels[a], labels[b]
        labels[z] = Fraction(la.num + lb.num, la.den + lb.den)
    colours = {e: BLUE if lvl == depth else BLACK for e, lvl in born.items()}
    return Graph(path, born, labels=labels, colours=colours)
