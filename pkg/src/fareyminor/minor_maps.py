"""Minor-maps: a carrier set U of host vertices with a surjection onto a pattern.

The fibres of the surjection are the branch sets. All graphs here are finite,
so every branch set is finite and every minor is tight; validation still
checks it explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Tuple

from .errors import InputError, PreconditionError
from .graph_core import Graph, contract_set, delete_edges, is_connected, iso_check


class MinorMap:
    """A minor-map ``host >= pattern`` given by ``assignment: carrier -> V(pattern)``."""

    __slots__ = ("host", "pattern", "assignment")

    def __init__(self, host: Graph, pattern: Graph, assignment: Mapping[int, int]):
        self.host = host
        self.pattern = pattern
        self.assignment = MappingProxyType(dict(sorted(assignment.items())))

    @property
    def carrier(self) -> FrozenSet[int]:
        return frozenset(self.assignment)

    def fibres(self) -> Dict[int, FrozenSet[int]]:
        out: Dict[int, set] = {x: set() for x in self.pattern.sorted_vertices()}
        for a, x in self.assignment.items():
            out.setdefault(x, set()).add(a)
        return {x: frozenset(s) for x, s in out.items()}

    def branch_set(self, x: int) -> FrozenSet[int]:
        return frozenset(a for a, y in self.assignment.items() if y == x)

    def __call__(self, a: int) -> int:
        return self.assignment[a]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MinorMap):
            return NotImplemented
        return self.host == other.host and self.pattern == other.pattern and dict(self.assignment) == dict(other.assignment)

    def __repr__(self) -> str:
        big = sum(1 for s in self.fibres().values() if len(s) > 1)
        return f"MinorMap({self.host!r} >= {self.pattern!r}, non-singleton fibres={big})"


@dataclass
class Violation:
    kind: str
    where: object
    detail: str = ""


@dataclass
class MinorReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> List[str]:
        return [v.kind for v in self.violations]


def validate(m: MinorMap) -> MinorReport:
    """Check carrier, surjectivity, connected finite fibres and edge realisation."""
    report = MinorReport()
    host, pattern = m.host, m.pattern
    stray = sorted(a for a in m.assignment if a not in host)
    if stray:
        report.violations.append(Violation("carrier outside host", stray))
    bad_targets = sorted({x for x in m.assignment.values() if x not in pattern})
    if bad_targets:
        report.violations.append(Violation("assignment leaves pattern", bad_targets))
    fibres = m.fibres()
    for x in pattern.sorted_vertices():
        fibre = fibres.get(x, frozenset())
        if not fibre:
            report.violations.append(Violation("not surjective", x, "empty branch set"))
        elif not fibre <= host.vertices:
            continue
        elif not is_connected(host, fibre):
            report.violations.append(Violation("branch set not connected", x, str(sorted(fibre))))
    for x, y in pattern.sorted_edges():
        bx, by = fibres.get(x, frozenset()), fibres.get(y, frozenset())
        if not any(host.has_edge(a, b) for a in bx if a in host for b in host.neighbours(a) if b in by):
            report.violations.append(Violation("pattern edge not realised", (x, y)))
    return report


def identity_map(G: Graph) -> MinorMap:
    return MinorMap(G, G, {v: v for v in G.vertices})


def compose(phi: MinorMap, psi: MinorMap) -> MinorMap:
    """``G >= H`` followed by ``H >= K`` gives ``G >= K``: carrier phi^-1(U_psi), map psi o phi."""
    if phi.pattern != psi.host:
        raise InputError("the first map's pattern must be the second map's host")
    for name, m in (("first", phi), ("second", psi)):
        report = validate(m)
        if not report.ok:
            raise PreconditionError(f"{name} map is invalid: {report.kinds()}")
    assignment = {a: psi.assignment[x] for a, x in phi.assignment.items() if x in psi.assignment}
    return MinorMap(phi.host, psi.pattern, assignment)


def compose_all(maps) -> MinorMap:
    maps = list(maps)
    if not maps:
        raise InputError("nothing to compose")
    out = maps[0]
    for m in maps[1:]:
        out = compose(out, m)
    return out


def restrict_pattern(m: MinorMap, sub: Graph) -> MinorMap:
    """The same model viewed as a map onto a subgraph of the pattern."""
    if not (sub.vertices <= m.pattern.vertices and sub.edges <= m.pattern.edges):
        raise InputError("not a subgraph of the pattern")
    return MinorMap(m.host, sub, {a: x for a, x in m.assignment.items() if x in sub})


def with_host(m: MinorMap, host: Graph) -> MinorMap:
    """Re-home a map onto a supergraph of its host (edge deletions are free)."""
    if not (m.host.vertices <= host.vertices and m.host.edges <= host.edges):
        raise InputError("new host must contain the old one")
    return MinorMap(host, m.pattern, m.assignment)


def lemma21_witness(n: int) -> Tuple[MinorMap, bool]:
    """Contract V(F̌0) in F̌n minus the blue F̌1 edge at the 0/1 root.

    Returns the contraction map (hosted on F̌n itself) and whether the result
    is isomorphic to the full Farey truncation of depth n - 1.
    """
    from . import farey

    if n < 1:
        raise InputError("needs n >= 1")
    half = farey.build_halved_farey(n)
    x, y = farey.root_ids(half)
    e = (x, half.vertex_by_label(farey.Fraction(1, 1)))
    contracted, m = contract_set(delete_edges(half, [e]), {x, y})
    verdict = iso_check(contracted, farey.build_farey(lemma21_offset(n))) is not None
    return with_host(m, half), verdict


def lemma21_offset(n: int) -> int:
    # established by search over candidate depths in the test-suite
    return n - 1
