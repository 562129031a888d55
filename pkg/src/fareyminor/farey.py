"""Farey graphs: the determinant definition and the recursive halved construction.

The halved Farey graph of order n is built from a blue K2 by repeatedly
putting a new vertex on every blue edge, joining it to both ends by blue
edges and turning the old edges black. Each new vertex is labelled with the
mediant of its parents, which recovers the determinant definition on the
labels.

Vertex ids of ``build_halved_farey(n)`` are assigned level by level, so the
order-j subgraph is always induced on ids ``0 .. 2**j``.
"""

from __future__ import annotations

import fractions
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import InputError
from .graph_core import BLACK, BLUE, Graph, Path, edge_key

Raw = Tuple[int, int]


@dataclass(frozen=True)
class Fraction:
    """A reduced fraction num/den; den == 0 means infinity, stored as 1/0.

    -1/0 is accepted and identified with 1/0. Unreduced input is rejected
    rather than silently reduced; use ``Fraction.reduced`` for that.
    """

    num: int
    den: int

    def __post_init__(self):
        if not isinstance(self.num, int) or not isinstance(self.den, int):
            raise InputError("numerator and denominator must be integers")
        if self.den < 0:
            raise InputError(f"negative denominator in {self.num}/{self.den}")
        if self.den == 0:
            if self.num not in (1, -1):
                raise InputError(f"{self.num}/0 is not in lowest terms")
            object.__setattr__(self, "num", 1)
        elif gcd(abs(self.num), self.den) != 1:
            raise InputError(f"{self.num}/{self.den} is not in lowest terms")

    @classmethod
    def reduced(cls, num: int, den: int) -> "Fraction":
        if den < 0:
            num, den = -num, -den
        if den == 0:
            if num == 0:
                raise InputError("0/0 is not a fraction")
            return cls(1, 0)
        g = gcd(abs(num), den)
        return cls(num // g, den // g)

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        try:
            a, _, b = text.strip().partition("/")
            return cls(int(a), int(b) if b else 1)
        except ValueError:
            raise InputError(f"cannot parse fraction {text!r}") from None

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def sort_key(self):
        """Position on the circle: 0, the positives, infinity, then the negatives."""
        if self.den == 0:
            return (1, fractions.Fraction(0))
        value = fractions.Fraction(self.num, self.den)
        return (2, value) if value < 0 else (0, value)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}/{self.den})"


def _as_raw(p: Union[Fraction, Raw]) -> Raw:
    if isinstance(p, Fraction):
        return (p.num, p.den)
    num, den = p
    Fraction(num, den)  # validates
    return (num, den)


def _raw_det(a: Raw, b: Raw) -> int:
    return a[0] * b[1] - b[0] * a[1]


def farey_adjacent(p: Fraction, q: Fraction) -> bool:
    if p == q:
        raise InputError(f"{p} is compared with itself")
    return abs(p.num * q.den - q.num * p.den) == 1


def mediant(p: Fraction, q: Fraction) -> Fraction:
    """(a+c)/(b+d) for Farey neighbours a/b, c/d (infinity counts as +1/0)."""
    if not farey_adjacent(p, q):
        raise InputError(f"{p} and {q} are not Farey neighbours")
    return Fraction(p.num + q.num, p.den + q.den)


# -- halved Farey graphs ---------------------------------------------------------


def _halved(n: int, a: Raw, b: Raw, ids: Tuple[int, int], next_id: int):
    """Core builder on raw pairs (signs of 1/0 kept for the negative half).

    Returns (raw labels by id, edges -> level of creation, Hamilton path by level).
    """
    if abs(_raw_det(a, b)) != 1:
        raise InputError("roots are not Farey neighbours")
    raw = {ids[0]: a, ids[1]: b}
    born = {edge_key(*ids): 0}
    path = [ids[0], ids[1]]
    levels = [tuple(path)]
    for level in range(1, n + 1):
        new_path = [path[0]]
        for x, y in zip(path, path[1:]):
            v = next_id
            next_id += 1
            raw[v] = (raw[x][0] + raw[y][0], raw[x][1] + raw[y][1])
            born[edge_key(x, v)] = level
            born[edge_key(v, y)] = level
            new_path += [v, y]
        path = new_path
        levels.append(tuple(path))
    return raw, born, levels, next_id


def _check_level(n: int):
    if not isinstance(n, int) or n < 0:
        raise InputError(f"construction depth must be a non-negative integer, got {n!r}")


def build_halved_farey(n: int, roots=(Fraction(0, 1), Fraction(1, 0))) -> Graph:
    """The edge-coloured halved Farey graph of order n with mediant labels."""
    _check_level(n)
    raw, born, _, _ = _halved(n, _as_raw(roots[0]), _as_raw(roots[1]), (0, 1), 2)
    return Graph(
        raw,
        born,
        labels={v: Fraction.reduced(*r) for v, r in raw.items()},
        colours={e: BLUE if lvl == n else BLACK for e, lvl in born.items()},
    )


def root_ids(G: Graph) -> Tuple[int, int]:
    """Ids of the vertices labelled 0/1 and 1/0."""
    return G.vertex_by_label(Fraction(0, 1)), G.vertex_by_label(Fraction(1, 0))


def build_farey(n: int) -> Graph:
    """Depth-n truncation of the Farey graph: two halved graphs glued along their root edge.

    The first half hangs on (0/1, 1/0) and the second on (0/1, -1/0), so all
    of the second half's interior labels are negative. Uncoloured.
    """
    _check_level(n)
    raw1, born1, _, next_id = _halved(n, (0, 1), (1, 0), (0, 1), 2)
    raw2, born2, _, _ = _halved(n, (0, 1), (-1, 0), (0, 1), next_id)
    raw = {**raw2, **raw1}
    return Graph(raw, list(born1) + list(born2), labels={v: Fraction.reduced(*r) for v, r in raw.items()})


def build_determinant_graph(vs: Iterable[Union[Fraction, Raw]]) -> Graph:
    """Graph on the given fractions with edges exactly the Farey-adjacent pairs.

    Vertex ids follow the circle order of the labels.
    """
    labels = sorted({Fraction(*_as_raw(p)) for p in vs}, key=Fraction.sort_key)
    ids = {p: i for i, p in enumerate(labels)}
    edges = [
        (ids[p], ids[q]) for i, p in enumerate(labels) for q in labels[i + 1 :] if abs(p.num * q.den - q.num * p.den) == 1
    ]
    return Graph(ids.values(), edges, labels={i: p for p, i in ids.items()})


def labels_of(G: Graph, path: Sequence[int]) -> Tuple[Fraction, ...]:
    return tuple(G.label(v) for v in path)


def blue_hamilton_paths(n: int) -> List[Path]:
    """P_0 .. P_n: P_j is the blue path of the order-j graph, from 0/1 to 1/0.

    Vertex ids refer to ``build_halved_farey(n)``.
    """
    _check_level(n)
    _, _, levels, _ = _halved(n, (0, 1), (1, 0), (0, 1), 2)
    return [tuple(p) for p in levels]


def canonical_paths(e: Tuple[Union[Fraction, Raw], Union[Fraction, Raw]], k: int) -> List[Tuple[Fraction, ...]]:
    """k label paths between the ends of a Farey edge, by in-order mediant depth 1..k.

    Endpoints may be given as raw (num, den) pairs, which keeps the sign of
    -1/0 for edges of the negative half.
    """
    if k < 1:
        raise InputError("k must be at least 1")
    a, b = _as_raw(e[0]), _as_raw(e[1])
    if abs(_raw_det(a, b)) != 1:
        raise InputError(f"{e[0]} and {e[1]} are not Farey neighbours")
    raw, _, levels, _ = _halved(k, a, b, (0, 1), 2)
    return [tuple(Fraction.reduced(*raw[v]) for v in levels[j]) for j in range(1, k + 1)]


# -- the K2,3 construction -----------------------------------------------------------

K23_EDGES = [(a, b) for a in (0, 1) for b in (2, 3, 4)]


def complete_bipartite_23() -> Graph:
    return Graph(range(5), K23_EDGES)


def complete_graph(k: int) -> Graph:
    return Graph(range(k), [(a, b) for a in range(k) for b in range(a + 1, k)])


def build_prop31(d: int) -> Graph:
    """K2,3 with a private copy of the depth-d Farey truncation glued onto each edge.

    Vertices 0..4 are the K2,3 (0 and 1 on the side of size two); each copy
    meets it exactly in its own edge, via the copy's root edge.
    """
    _check_level(d)
    F = build_farey(d)
    x, y = root_ids(F)
    others = [v for v in F.sorted_vertices() if v not in (x, y)]
    edges = list(K23_EDGES)
    next_id = 5
    for a, b in K23_EDGES:
        f = {x: a, y: b}
        for v in others:
            f[v] = next_id
            next_id += 1
        edges += [(f[p], f[q]) for p, q in F.edges]
    return Graph(range(next_id), edges)


def subdivide(G: Graph) -> Graph:
    """Subdivide every edge once; new vertices are unlabelled and get fresh ids."""
    next_id = G.fresh_id()
    edges = []
    for a, b in G.sorted_edges():
        edges += [(a, next_id), (next_id, b)]
        next_id += 1
    return Graph(set(G.vertices) | set(range(G.fresh_id(), next_id)), edges, labels=G.labels)


def circle_order(G: Graph) -> Dict[int, int]:
    """Rank of each vertex around the circle: by label, unlabelled vertices last by id."""
    labelled = sorted((v for v in G.vertices if isinstance(G.label(v), Fraction)), key=lambda v: (G.label(v).sort_key(), v))
    rest = sorted(v for v in G.vertices if not isinstance(G.label(v), Fraction))
    return {v: i for i, v in enumerate(labelled + rest)}
