"""Finite simple graphs and the primitives the rest of the package builds on.

Vertices are opaque integers. Labels (usually Farey fractions) and edge
colours are optional metadata carried alongside the structure; they never
act as identity. Graphs are immutable: every operation returns a new graph.

Paths are plain tuples of vertex ids.
"""

from __future__ import annotations

import itertools
from collections import deque
from types import MappingProxyType
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ContractionError, InputError, PreconditionError, ResourceError

Edge = Tuple[int, int]
Path = Tuple[int, ...]

BLUE = "blue"
BLACK = "black"
COLOURS = (BLUE, BLACK)

# size guards for the exhaustive routines
MINOR_MAX_HOST = 48
MINOR_MAX_PATTERN = 6
ISO_MAX_VERTICES = 200


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class Graph:
    """An immutable finite simple graph with optional labels and edge colours.

    If any edge carries a colour then every edge must.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_labels", "_colours", "_hash")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[Tuple[int, int]] = (),
        labels: Optional[Mapping[int, object]] = None,
        colours: Optional[Mapping[Tuple[int, int], str]] = None,
    ):
        verts = frozenset(vertices)
        adj: Dict[int, set] = {v: set() for v in verts}
        es = set()
        for a, b in edges:
            if a == b:
                raise InputError(f"loop at vertex {a}")
            if a not in adj or b not in adj:
                raise InputError(f"edge {a}-{b} has an endpoint outside the vertex set")
            es.add(edge_key(a, b))
            adj[a].add(b)
            adj[b].add(a)
        labs = {}
        for v, lab in (labels or {}).items():
            if v not in adj:
                raise InputError(f"label given for unknown vertex {v}")
            if lab is not None:
                labs[v] = lab
        cols = {}
        for (a, b), c in (colours or {}).items():
            e = edge_key(a, b)
            if e not in es:
                raise InputError(f"colour given for non-edge {a}-{b}")
            if c not in COLOURS:
                raise InputError(f"unknown edge colour {c!r}")
            cols[e] = c
        if cols and len(cols) != len(es):
            raise InputError("either every edge is coloured or none is")
        self._vertices = verts
        self._edges = frozenset(es)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._labels = MappingProxyType(labs)
        self._colours = MappingProxyType(cols)
        self._hash = None

    @property
    def vertices(self) -> FrozenSet[int]:
        return self._vertices

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    @property
    def labels(self) -> Mapping[int, object]:
        return self._labels

    @property
    def colours(self) -> Mapping[Edge, str]:
        return self._colours

    @property
    def is_coloured(self) -> bool:
        return bool(self._colours)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def number_of_edges(self) -> int:
        return len(self._edges)

    def neighbours(self, v: int) -> FrozenSet[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj.get(a, ())

    def label(self, v: int):
        return self._labels.get(v)

    def colour(self, a: int, b: int) -> Optional[str]:
        return self._colours.get(edge_key(a, b))

    def blue_edges(self) -> List[Edge]:
        return sorted(e for e, c in self._colours.items() if c == BLUE)

    def sorted_vertices(self) -> List[int]:
        return sorted(self._vertices)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self._edges)

    def fresh_id(self) -> int:
        return max(self._vertices) + 1 if self._vertices else 0

    def vertex_by_label(self, label) -> int:
        hits = [v for v, lab in self._labels.items() if lab == label]
        if len(hits) != 1:
            raise InputError(f"label {label} names {len(hits)} vertices")
        return hits[0]

    def label_index(self) -> Dict[object, int]:
        """Label -> vertex, for graphs whose labels are unique."""
        index = {}
        for v, lab in self._labels.items():
            if lab in index:
                raise InputError(f"label {lab} is not unique")
            index[lab] = v
        return index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and dict(self._labels) == dict(other._labels)
            and dict(self._colours) == dict(other._colours)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self._vertices)}, |E|={len(self._edges)})"


# -- structural helpers --------------------------------------------------------


def _check_vertices(G: Graph, X: Iterable[int]) -> FrozenSet[int]:
    X = frozenset(X)
    unknown = X - G.vertices
    if unknown:
        raise InputError(f"unknown vertex ids: {sorted(unknown)}")
    return X


def induced_subgraph(G: Graph, X: Iterable[int]) -> Graph:
    X = _check_vertices(G, X)
    edges = [e for e in G.edges if e[0] in X and e[1] in X]
    return Graph(
        X,
        edges,
        labels={v: lab for v, lab in G.labels.items() if v in X},
        colours={e: G.colours[e] for e in edges} if G.is_coloured else None,
    )


def delete_vertices(G: Graph, X: Iterable[int]) -> Graph:
    X = _check_vertices(G, X)
    return induced_subgraph(G, G.vertices - X)


def delete_edges(G: Graph, edges: Iterable[Tuple[int, int]]) -> Graph:
    gone = {edge_key(a, b) for a, b in edges}
    keep = [e for e in G.edges if e not in gone]
    return Graph(
        G.vertices,
        keep,
        labels=G.labels,
        colours={e: G.colours[e] for e in keep} if G.is_coloured else None,
    )


def union(*graphs: Graph) -> Graph:
    """Union of graphs sharing a vertex namespace.

    Labels merge (later graphs win on conflict); colours survive only if
    every input is coloured and the inputs agree on shared edges.
    """
    verts, edges, labels, colours = set(), set(), {}, {}
    keep_colours = all(g.is_coloured for g in graphs)
    for g in graphs:
        verts |= g.vertices
        edges |= g.edges
        labels.update(g.labels)
        if keep_colours:
            for e, c in g.colours.items():
                if colours.setdefault(e, c) != c:
                    keep_colours = False
    return Graph(verts, edges, labels, colours if keep_colours else None)


def graph_from_paths(paths: Iterable[Sequence[int]], labels: Optional[Mapping[int, object]] = None) -> Graph:
    verts, edges = set(), set()
    for p in paths:
        verts.update(p)
        edges.update(path_edges(p))
    labs = {v: labels[v] for v in verts if labels and v in labels}
    return Graph(verts, edges, labs)


def rename(G: Graph, mapping: Mapping[int, int]) -> Graph:
    """Rename vertices by an injective mapping (unmapped ids are kept)."""
    f = {v: mapping.get(v, v) for v in G.vertices}
    if len(set(f.values())) != len(f):
        raise InputError("renaming is not injective")
    return Graph(
        f.values(),
        [(f[a], f[b]) for a, b in G.edges],
        labels={f[v]: lab for v, lab in G.labels.items()},
        colours={(f[a], f[b]): c for (a, b), c in G.colours.items()} if G.is_coloured else None,
    )


def components(G: Graph, X: Optional[Iterable[int]] = None) -> List[FrozenSet[int]]:
    """Connected components of G[X] (default X = V(G)), ordered by least vertex."""
    within = G.vertices if X is None else frozenset(X)
    seen, out = set(), []
    for v in sorted(within):
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        seen.add(v)
        while queue:
            a = queue.popleft()
            for b in G.neighbours(a):
                if b in within and b not in seen:
                    seen.add(b)
                    comp.add(b)
                    queue.append(b)
        out.append(frozenset(comp))
    return out


def is_connected(G: Graph, X: Optional[Iterable[int]] = None) -> bool:
    return len(components(G, X)) == 1


# -- paths ---------------------------------------------------------------------


def path_edges(P: Sequence[int]) -> List[Edge]:
    return [edge_key(a, b) for a, b in zip(P, P[1:])]


def interior(P: Sequence[int]) -> Path:
    return tuple(P[1:-1])


def subpath(P: Sequence[int], a: int, b: int) -> Path:
    """The segment aPb; a must not come after b on P."""
    i, j = P.index(a), P.index(b)
    if i > j:
        raise InputError(f"{a} comes after {b} on the path")
    return tuple(P[i : j + 1])


def is_path(P: Sequence[int]) -> bool:
    return len(P) >= 1 and len(set(P)) == len(P)


def is_path_in(G: Graph, P: Sequence[int]) -> bool:
    return is_path(P) and all(v in G for v in P) and all(G.has_edge(a, b) for a, b in zip(P, P[1:]))


def order_compatible(P: Sequence[int], Q: Sequence[int]) -> bool:
    """Do two u-v paths traverse their common vertices in the same order?"""
    if len(P) < 2 or len(Q) < 2 or P[0] != Q[0] or P[-1] != Q[-1]:
        raise InputError("paths must share both endpoints, in the same order")
    common = set(P) & set(Q)
    return [v for v in P if v in common] == [v for v in Q if v in common]


# -- contraction ---------------------------------------------------------------


def contract_set(G: Graph, X: Iterable[int], new_id: Optional[int] = None):
    """Contract the connected set X to one vertex, by default a fresh id.

    ``new_id`` may reuse an id from X but not one outside it. Returns
    ``(G/X, minor_map)``; the map's only non-singleton fibre is X.
    Labels on X and all edge colours are dropped.
    """
    from .minor_maps import MinorMap

    X = _check_vertices(G, X)
    if not X:
        raise InputError("cannot contract the empty set")
    if not is_connected(G, X):
        raise ContractionError(f"G[X] is disconnected for X = {sorted(X)}")
    rest = G.vertices - X
    z = G.fresh_id() if new_id is None else new_id
    if z in rest:
        raise InputError(f"id {z} for the contracted vertex is already in use")
    edges = set()
    for a, b in G.edges:
        a2 = z if a in X else a
        b2 = z if b in X else b
        if a2 != b2:
            edges.add(edge_key(a2, b2))
    H = Graph(rest | {z}, edges, labels={v: lab for v, lab in G.labels.items() if v in rest})
    assignment = {v: v for v in rest}
    assignment.update({v: z for v in X})
    return H, MinorMap(G, H, assignment)


# -- flows ---------------------------------------------------------------------


class _FlowNetwork:
    """Integral Edmonds-Karp on a directed network; arc order fixes tie-breaks."""

    def __init__(self):
        self.cap: Dict[Hashable, Dict[Hashable, int]] = {}

    def add_arc(self, a, b, c):
        self.cap.setdefault(a, {})
        self.cap.setdefault(b, {})
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def run(self, s, t) -> int:
        self.flow = {a: {b: 0 for b in nbrs} for a, nbrs in self.cap.items()}
        value = 0
        while True:
            pred = {s: None}
            queue = deque([s])
            while queue and t not in pred:
                a = queue.popleft()
                for b, c in self.cap[a].items():
                    if b not in pred and c - self.flow[a][b] > 0:
                        pred[b] = a
                        queue.append(b)
            if t not in pred:
                return value
            b = t
            while pred[b] is not None:
                a = pred[b]
                self.flow[a][b] += 1
                self.flow[b][a] -= 1
                b = a
            value += 1

    def residual_reach(self, s) -> set:
        seen = {s}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if b not in seen and c - self.flow[a][b] > 0:
                    seen.add(b)
                    queue.append(b)
        return seen


def max_edge_disjoint_paths(G: Graph, x: int, y: int) -> Tuple[int, List[Path]]:
    """Maximum number of pairwise edge-disjoint x-y paths, with witnesses.

    Unit-capacity max flow; the flow is decomposed into simple paths by
    always following the smallest-id successor, cutting out any cycle met.
    """
    _check_vertices(G, (x, y))
    if x == y:
        raise InputError("endpoints must differ")
    net = _FlowNetwork()
    for a in G.sorted_vertices():
        for b in sorted(G.neighbours(a)):
            net.add_arc(a, b, 1)
    if x not in net.cap or y not in net.cap:
        return 0, []
    value = net.run(x, y)
    out = {a: sorted(b for b, f in nbrs.items() if f > 0) for a, nbrs in net.flow.items()}
    paths = []
    for _ in range(value):
        walk = [x]
        pos = {x: 0}
        while walk[-1] != y:
            a = walk[-1]
            b = out[a].pop(0)
            if b in pos:
                for c in walk[pos[b] + 1 :]:
                    del pos[c]
                del walk[pos[b] + 1 :]
            else:
                pos[b] = len(walk)
                walk.append(b)
        paths.append(tuple(walk))
    return value, paths


def min_vertex_separator(G: Graph, u: int, v: int) -> FrozenSet[int]:
    """A minimum set S of vertices other than u, v separating u from v.

    Among minimum separators the one closest to u is returned (the cut read
    off the residual network from u's side), which makes the choice
    deterministic.
    """
    _check_vertices(G, (u, v))
    if u == v:
        raise InputError("endpoints must differ")
    if G.has_edge(u, v):
        raise PreconditionError(f"{u} and {v} are adjacent; delete the edge first")
    big = len(G) + 1
    net = _FlowNetwork()
    for w in G.sorted_vertices():
        if w not in (u, v):
            net.add_arc((w, 0), (w, 1), 1)
    for a, b in G.sorted_edges():
        net.add_arc((a, 1), (b, 0), big)
        net.add_arc((b, 1), (a, 0), big)
    source, sink = (u, 1), (v, 0)
    if source not in net.cap or sink not in net.cap:
        return frozenset()
    net.run(source, sink)
    reach = net.residual_reach(source)
    return frozenset(w for w in G.vertices if w not in (u, v) and (w, 0) in reach and (w, 1) not in reach)


# -- isomorphism ---------------------------------------------------------------


def to_networkx(G: Graph):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(G.sorted_vertices())
    for e in G.sorted_edges():
        g.add_edge(*e, colour=G.colours.get(e))
    return g


def iso_check(G: Graph, H: Graph, colours: bool = False) -> Optional[Dict[int, int]]:
    """An isomorphism V(G) -> V(H), or None. Labels are ignored; colours only on request."""
    from networkx.algorithms.isomorphism import GraphMatcher

    if len(G) > ISO_MAX_VERTICES or len(H) > ISO_MAX_VERTICES:
        raise ResourceError(f"isomorphism guard is {ISO_MAX_VERTICES} vertices")
    if len(G) != len(H) or G.number_of_edges() != H.number_of_edges():
        return None
    if sorted(G.degree(v) for v in G.vertices) != sorted(H.degree(v) for v in H.vertices):
        return None
    if colours and sorted(G.colours.values()) != sorted(H.colours.values()):
        return None
    edge_match = (lambda a, b: a["colour"] == b["colour"]) if colours else None
    matcher = GraphMatcher(to_networkx(G), to_networkx(H), edge_match=edge_match)
    for mapping in matcher.isomorphisms_iter():
        return dict(sorted(mapping.items()))
    return None


# -- minor search --------------------------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _MaskGraph:
    def __init__(self, G: Graph):
        self.ids = G.sorted_vertices()
        pos = {v: i for i, v in enumerate(self.ids)}
        self.nb = [0] * len(self.ids)
        for a, b in G.edges:
            self.nb[pos[a]] |= 1 << pos[b]
            self.nb[pos[b]] |= 1 << pos[a]
        self.all = (1 << len(self.ids)) - 1

    def reach(self, start: int, within: int) -> int:
        seen = frontier = 1 << start
        while frontier:
            new = 0
            for v in _bits(frontier):
                new |= self.nb[v]
            new &= within & ~seen
            seen |= new
            frontier = new
        return seen

    def comps(self, within: int) -> List[int]:
        out = []
        while within:
            c = self.reach((within & -within).bit_length() - 1, within)
            out.append(c)
            within &= ~c
        return out

    def boundary(self, S: int) -> int:
        m = 0
        for v in _bits(S):
            m |= self.nb[v]
        return m & ~S

    def connected_sets(self, seed: int, within: int, dead):
        """Each connected subset of `within` containing `seed` exactly once.

        `dead(S)` must be monotone under inclusion; dead sets and all their
        supersets are skipped.
        """
        nb = self.nb

        def grow(S, frontier, banned):
            if dead(S):
                return
            yield S
            rest = frontier
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= ~(1 << w)
                S2 = S | (1 << w)
                new_frontier = rest | (nb[w] & within & ~S2 & ~banned & ~frontier)
                yield from grow(S2, new_frontier, banned | (frontier & ~rest))

        yield from grow(1 << seed, nb[seed] & within, 0)


def _reduce_for_pattern(G: Graph, min_pattern_degree: int):
    """Safe reductions: drop low-degree vertices, suppress degree-2 vertices.

    Returns the reduced graph and the suppressions (w, a, b) needed to lift
    a model back. Degree <= 1 vertices never help a pattern of minimum
    degree 2; for minimum degree 3 a degree-2 vertex w can always be
    contracted into a neighbour, and both choices give G - w + ab.
    """
    adj = {v: set(G.neighbours(v)) for v in G.vertices}
    suppressed = []
    changed = True
    while changed:
        changed = False
        for w in sorted(adj):
            d = len(adj[w])
            if d < min(min_pattern_degree, 2) or (d <= 1 and min_pattern_degree >= 2):
                for x in adj.pop(w):
                    adj[x].discard(w)
                changed = True
            elif d == 2 and min_pattern_degree >= 3:
                a, b = sorted(adj.pop(w))
                adj[a].discard(w)
                adj[b].discard(w)
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                    suppressed.append((w, a, b))
                changed = True
    reduced = Graph(adj, [(a, b) for a in adj for b in adj[a]])
    return reduced, suppressed


def _subgraph_model(G: Graph, H: Graph) -> Optional[Dict[int, int]]:
    """Injective homomorphism H -> G (singleton branch sets), pattern -> host."""
    order = []
    for comp in components(H):
        start = min(comp, key=lambda h: (-H.degree(h), h))
        seen, queue = {start}, deque([start])
        while queue:
            h = queue.popleft()
            order.append(h)
            for x in sorted(H.neighbours(h)):
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
    hosts = G.sorted_vertices()
    image: Dict[int, int] = {}
    used = set()

    def place(i):
        if i == len(order):
            return True
        h = order[i]
        placed = [x for x in H.neighbours(h) if x in image]
        candidates = sorted(set.intersection(*(set(G.neighbours(image[x])) for x in placed))) if placed else hosts
        for g in candidates:
            if g in used or G.degree(g) < H.degree(h):
                continue
            image[h] = g
            used.add(g)
            if place(i + 1):
                return True
            del image[h]
            used.discard(g)
        return False

    return dict(image) if place(0) else None


def _model_search(G: Graph, H: Graph) -> Optional[Dict[int, FrozenSet[int]]]:
    """Branch sets (pattern vertex -> host vertex set) of an H model in G, or None.

    Pattern vertices of degree <= 2 forming an independent set I get
    singleton branch sets without loss of generality (the rest of such a
    set can be pushed into a neighbour's set). Once I is placed, each
    component of G - W is either unused or partitioned completely into
    connected branch sets for the remaining pattern vertices, since unused
    vertices can always be absorbed by an adjacent branch set.
    """
    mg = _MaskGraph(G)
    pos = {v: i for i, v in enumerate(mg.ids)}
    hdeg = {h: H.degree(h) for h in H.vertices}
    indep: List[int] = []
    for h in sorted(H.vertices, key=lambda h: (hdeg[h], h)):
        if hdeg[h] <= 2 and not any(x in indep for x in H.neighbours(h)):
            indep.append(h)
    rest = [h for h in H.sorted_vertices() if h not in indep]
    twin_of = {}
    for i, h in enumerate(indep):
        for g in indep[:i]:
            if H.neighbours(g) == H.neighbours(h):
                twin_of[h] = g
    m = len(rest)

    def placements(i, W, used):
        if i == len(indep):
            yield W
            return
        h = indep[i]
        low = W[twin_of[h]] + 1 if h in twin_of else 0
        for v in range(low, len(mg.ids)):
            if used >> v & 1 or _popcount(mg.nb[v]) < hdeg[h]:
                continue
            W[h] = v
            yield from placements(i + 1, W, used | 1 << v)
            del W[h]

    def partitions(total, needs):
        def rec(U, left, blocks):
            if left == 1:
                if len(mg.comps(U)) == 1:
                    out = blocks + [U]
                    if all(sum(1 for B in out if N & B) >= d for N, d in needs):
                        yield out
                return
            seed = (U & -U).bit_length() - 1

            def dead(S):
                # upper bound on blocks meeting N; S's final block may still grow into R,
                # so it counts whenever N meets U. The bound only shrinks as S grows.
                R = U & ~S
                for N, d in needs:
                    have = sum(1 for B in blocks if N & B) + (1 if N & U else 0)
                    if have + min(left - 1, _popcount(N & R)) < d:
                        return True
                return False

            for S in mg.connected_sets(seed, U, dead):
                R = U & ~S
                if _popcount(R) < left - 1 or len(mg.comps(R)) > left - 1:
                    continue
                yield from rec(R, left - 1, blocks + [S])

        yield from rec(total, m, [])

    for W in placements(0, {}, 0):
        wmask = 0
        for v in W.values():
            wmask |= 1 << v
        if m == 0:
            return {h: frozenset([mg.ids[W[h]]]) for h in indep}
        remaining = mg.all & ~wmask
        comps = mg.comps(remaining)
        needs = [(mg.nb[W[h]] & remaining, hdeg[h]) for h in indep]
        for r in range(1, min(m, len(comps)) + 1):
            for chosen in itertools.combinations(comps, r):
                total = 0
                for c in chosen:
                    total |= c
                if _popcount(total) < m:
                    continue
                for blocks in partitions(total, needs):
                    bnd = [mg.boundary(B) for B in blocks]
                    for perm in itertools.permutations(range(m)):
                        sets = {rest[t]: blocks[perm[t]] for t in range(m)}
                        near = {rest[t]: bnd[perm[t]] for t in range(m)}
                        if all(near[a] & sets[b] for a in rest for b in H.neighbours(a) if b in sets) and all(
                            mg.nb[W[h]] & sets[b] for h in indep for b in H.neighbours(h)
                        ):
                            model = {h: frozenset([mg.ids[W[h]]]) for h in indep}
                            for h, B in sets.items():
                                model[h] = frozenset(mg.ids[i] for i in _bits(B))
                            return model
    return None


def find_minor(G: Graph, H: Graph):
    """Exhaustive search for a minor map G >= H; None when H is not a minor of G.

    Intended for tiny patterns (K2, K4, K2,3 and friends): the pattern must be
    connected with at most MINOR_MAX_PATTERN vertices and the host at most
    MINOR_MAX_HOST vertices.
    """
    from .minor_maps import MinorMap

    if len(H) > MINOR_MAX_PATTERN or len(G) > MINOR_MAX_HOST:
        raise ResourceError(
            f"minor search is limited to patterns of {MINOR_MAX_PATTERN} and hosts of {MINOR_MAX_HOST} vertices"
        )
    if len(H) == 0 or not is_connected(H):
        raise InputError("pattern must be non-empty and connected")
    if len(G) < len(H) or G.number_of_edges() < H.number_of_edges():
        return None

    mono = _subgraph_model(G, H)
    if mono is not None:
        return MinorMap(G, H, {g: h for h, g in mono.items()})

    min_deg = min(H.degree(h) for h in H.vertices)
    reduced, suppressed = _reduce_for_pattern(G, min_deg)
    model = None
    for comp in components(reduced):
        if len(comp) < len(H):
            continue
        model = _model_search(induced_subgraph(reduced, comp), H)
        if model is not None:
            break
    if model is None:
        return None
    # undo suppressions, latest first; an edge ab of the reduced graph stood for a-w-b
    owner = {g: h for h, B in model.items() for g in B}
    for w, a, b in reversed(suppressed):
        if a in owner:
            owner[w] = owner[a]
        elif b in owner:
            owner[w] = owner[b]
    return MinorMap(G, H, owner)
