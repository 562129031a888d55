"""Finite prefixes of grain lines: validation, extraction, restriction, wildness.

A grain-line prefix is a linearly ordered vertex set L (least x, greatest y)
together with finitely many pairwise edge-disjoint x-y paths. Conditions
that quantify over all later paths are read over the paths present; in
particular a vertex first met on the last path may or may not belong to L.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import GrainingError, InputError, PreconditionError, SupplyError
from .graph_core import Path, is_path, path_edges, subpath

FINITE_SEMANTICS = "finite semantics: GL1 read as a final segment of the path indices present"

CONDITIONS = ("shape", "edge-disjointness", "F1", "GL2", "GL3", "displayed equation")


@dataclass(frozen=True)
class GrainLinePrefix:
    x: int
    y: int
    order: Tuple[int, ...]
    paths: Tuple[Path, ...]
    start_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def indices(self) -> range:
        return range(self.start_index, self.start_index + len(self.paths))

    def path(self, n: int) -> Path:
        """P_n by absolute index."""
        if n not in self.indices:
            raise InputError(f"path index {n} outside {self.indices.start}..{self.indices.stop - 1}")
        return self.paths[n - self.start_index]

    def rank(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def below(self, n: int) -> Tuple[int, ...]:
        """L_{<n}: members of L on some path with index < n, in L order."""
        seen = set()
        for p in self.paths[: n - self.start_index]:
            seen.update(p)
        return tuple(v for v in self.order if v in seen)

    def interval(self, l1: int, l2: int) -> Tuple[int, ...]:
        r = self.rank()
        return self.order[r[l1] : r[l2] + 1]


@dataclass
class ValidationReport:
    verdicts: Dict[str, bool] = field(default_factory=dict)
    counterexamples: Dict[str, object] = field(default_factory=dict)
    note: str = FINITE_SEMANTICS

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def __bool__(self) -> bool:
        return self.ok

    def failed(self) -> List[str]:
        return [c for c, passed in self.verdicts.items() if not passed]

    def _fail(self, condition, example):
        if self.verdicts.get(condition, True):
            self.verdicts[condition] = False
            self.counterexamples[condition] = example

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "note": self.note,
            "verdicts": dict(self.verdicts),
            "counterexamples": {k: repr(v) for k, v in self.counterexamples.items()},
        }


def _index_sets(paths: Sequence[Path]) -> Dict[int, List[int]]:
    where: Dict[int, List[int]] = {}
    for i, p in enumerate(paths):
        for v in p:
            where.setdefault(v, []).append(i)
    return where


def validate_prefix(p: GrainLinePrefix) -> ValidationReport:
    report = ValidationReport({c: True for c in CONDITIONS})
    base = p.start_index
    n_paths = len(p.paths)

    if p.x == p.y:
        report._fail("shape", ("x equals y", p.x))
    if not p.paths:
        report._fail("shape", ("no paths",))
    for i, P in enumerate(p.paths):
        if len(P) < 2 or not is_path(P) or P[0] != p.x or P[-1] != p.y:
            report._fail("shape", ("not an x-y path", base + i))
    if len(set(p.order)) != len(p.order) or not p.order or p.order[0] != p.x or p.order[-1] != p.y:
        report._fail("shape", ("L must list distinct vertices from x to y", p.order))

    owner = {}
    for i, P in enumerate(p.paths):
        for e in path_edges(P):
            if e in owner and owner[e] != i:
                report._fail("edge-disjointness", (e, base + owner[e], base + i))
            owner.setdefault(e, i)

    L = set(p.order)
    where = _index_sets(p.paths)
    for v in p.order:
        idx = where.get(v, [])
        if not idx or idx != list(range(idx[0], n_paths)):
            report._fail("F1", (v, [base + i for i in idx]))
    for v, idx in sorted(where.items()):
        if len(idx) >= 2 and v not in L:
            report._fail("F1", (v, [base + i for i in idx]))
            report._fail("GL2", (v, [base + i for i in idx]))

    rank = p.rank()
    seen: set = set()
    for i, P in enumerate(p.paths):
        below = [v for v in p.order if v in seen]
        on_path = set(P)
        missing = [v for v in below if v not in on_path]
        if missing:
            report._fail("GL3", (base + i, missing[0]))
        else:
            induced = [v for v in P if v in L and v in seen]
            if induced != below:
                report._fail("GL3", (base + i, induced, below))
        if on_path & seen != set(below):
            report._fail("displayed equation", (base + i, sorted(on_path & seen), below))
        seen |= on_path
    return report


def grains(p: GrainLinePrefix, n: int, U: Iterable[int]) -> bool:
    """Does P_n grain U, i.e. every P_m (m >= n) meets U exactly in L & U, in L order?"""
    p.path(n)
    U = set(U)
    LU = [v for v in p.order if v in U]
    for P in p.paths[n - p.start_index :]:
        if set(P) & U != set(LU) or [v for v in P if v in U] != LU:
            return False
    return True


def _check_family(Q: Sequence[Sequence[int]]) -> Tuple[int, int]:
    if not Q:
        raise InputError("empty path family")
    x, y = Q[0][0], Q[0][-1]
    owner = {}
    for i, P in enumerate(Q):
        if len(P) < 2 or not is_path(P) or P[0] != x or P[-1] != y:
            raise InputError(f"path {i} is not an {x}-{y} path")
        for e in path_edges(P):
            if e in owner:
                raise InputError(f"paths {owner[e]} and {i} share edge {e}")
            owner[e] = i
    return x, y


def _signature(P: Sequence[int], X: set) -> Tuple[int, ...]:
    return tuple(v for v in P if v in X)


def _largest_class(pool: List[int], Q, X) -> List[int]:
    classes: "OrderedDict[Tuple[int, ...], List[int]]" = OrderedDict()
    for i in pool:
        classes.setdefault(_signature(Q[i], X), []).append(i)
    _, members = min(classes.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    return members


def extract(Q: Sequence[Sequence[int]], T: int) -> GrainLinePrefix:
    """Choose T paths from Q forming a grain-line prefix, by repeated pigeonholing.

    At each step the remaining pool is split by how its paths meet the
    vertices seen so far (as ordered sequences); the largest class survives
    (ties: lexicographically least signature) and its earliest path is taken.
    L is read off a path that survives every round, or off the last pick
    if none survives. Running out of candidates early is a supply error.
    """
    Q = [tuple(P) for P in Q]
    x, y = _check_family(Q)
    if T < 1:
        raise InputError("T must be at least 1")
    if T + 1 > len(Q):
        raise SupplyError(f"need {T + 1} paths to extract {T}, got {len(Q)}")
    pool = list(range(len(Q)))
    X: set = set()
    chosen = []
    for n in range(T):
        if not pool:
            raise SupplyError(f"pigeonholing left no candidates after {n} of {T} paths")
        cls = _largest_class(pool, Q, X)
        pick = cls[0]
        chosen.append(Q[pick])
        pool = cls[1:]
        before, X = X, X | set(Q[pick])
    if pool:
        return GrainLinePrefix(x, y, _signature(Q[_largest_class(pool, Q, X)[0]], X), tuple(chosen))
    # no survivor: the last pick already agrees with every earlier pick on what came before it
    return GrainLinePrefix(x, y, _signature(chosen[-1], before | {x, y}), tuple(chosen))


def tail(p: GrainLinePrefix, n: int) -> GrainLinePrefix:
    """Drop the paths before index n; L keeps only vertices still on some path."""
    p.path(n)
    paths = p.paths[n - p.start_index :]
    on = set().union(*map(set, paths))
    return GrainLinePrefix(p.x, p.y, tuple(v for v in p.order if v in on), paths, n)


def restrict(p: GrainLinePrefix, l1: int, l2: int, start: Optional[int] = None) -> GrainLinePrefix:
    """The l1-l2 grain line ([l1, l2]_L, (l1 P_n l2)_{n >= N}).

    N is the least index (not below ``start``) whose path grains {l1, l2}.
    L keeps those members of [l1, l2]_L met by some restricted path.
    """
    rank = p.rank()
    if l1 not in rank or l2 not in rank or rank[l1] >= rank[l2]:
        raise InputError(f"need {l1} <_L {l2} with both in L")
    first = p.start_index if start is None else start
    N = next((n for n in p.indices if n >= first and grains(p, n, (l1, l2))), None)
    if N is None:
        raise SupplyError(f"no path of the prefix from index {first} grains {{{l1}, {l2}}}")
    paths = tuple(subpath(P, l1, l2) for P in p.paths[N - p.start_index :])
    on = set().union(*map(set, paths))
    order = tuple(v for v in p.interval(l1, l2) if v in on)
    return GrainLinePrefix(l1, l2, order, paths, N)


def _interleaves(P: Sequence[int], known: Sequence[int], rank: Dict[int, int]) -> bool:
    """Between every two L-consecutive known vertices, P has an L-vertex strictly between them.

    Checking L-consecutive pairs suffices once P induces L's order on `known`.
    """
    pos = {v: i for i, v in enumerate(P)}
    for l1, l2 in zip(known, known[1:]):
        i, j = pos[l1], pos[l2]
        if not any(w in rank and rank[l1] < rank[w] < rank[l2] for w in P[i + 1 : j]):
            return False
    return True


def is_wildly_presented(p: GrainLinePrefix) -> bool:
    report = validate_prefix(p)
    if not report.ok:
        raise PreconditionError(f"invalid prefix: {report.failed()}")
    rank = p.rank()
    return all(_interleaves(P, p.below(n), rank) for n, P in zip(p.indices, p.paths))


def wild_subsequence(p: GrainLinePrefix) -> GrainLinePrefix:
    """Greedy earliest subsequence that is wildly presented (P at the start index is kept)."""
    report = validate_prefix(p)
    if not report.ok:
        raise PreconditionError(f"invalid prefix: {report.failed()}")
    rank = p.rank()
    L = set(p.order)
    kept = [p.paths[0]]
    known = set(p.paths[0]) & L
    for P in p.paths[1:]:
        if _interleaves(P, [v for v in p.order if v in known], rank):
            kept.append(P)
            known |= set(P) & L
    if len(p.paths) >= 2 and len(kept) == 1:
        raise SupplyError("no later path continues a wild presentation")
    on = set().union(*map(set, kept))
    return GrainLinePrefix(p.x, p.y, tuple(v for v in p.order if v in on), tuple(kept), p.start_index)


def from_compatible_paths(paths: Sequence[Sequence[int]], start_index: int = 0) -> GrainLinePrefix:
    """Prefix whose L is every vertex in the order of the last path.

    Meant for nested pairwise order-compatible families such as the blue
    Hamilton paths, where each path contains all earlier ones.
    """
    paths = [tuple(P) for P in paths]
    return GrainLinePrefix(paths[0][0], paths[0][-1], paths[-1], tuple(paths), start_index)
