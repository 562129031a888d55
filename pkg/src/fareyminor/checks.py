"""Self-check suites run by ``fareyminor check``; each returns named verdicts."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import farey
from . import grain_lines as gl
from .errors import SupplyError
from .graph_core import (
    Graph,
    find_minor,
    iso_check,
    max_edge_disjoint_paths,
    order_compatible,
    path_edges,
)
from .minor_maps import lemma21_witness, validate


@dataclass
class Verdict:
    name: str
    ok: bool
    detail: str = ""


# -- random path families ------------------------------------------------------------


def random_graph(rng: random.Random, max_vertices: int = 30) -> Graph:
    n = rng.randint(4, max_vertices)
    p = rng.uniform(0.15, 0.6)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return Graph(range(n), edges)


def _random_path(rng: random.Random, adj: Dict[int, set], x: int, y: int) -> Optional[Tuple[int, ...]]:
    """A simple x-y path by randomised depth-first search."""
    stack = [(x, [x])]
    seen = {x}
    while stack:
        w, walk = stack.pop()
        if w == y:
            return tuple(walk)
        nbrs = sorted(adj[w] - seen)
        rng.shuffle(nbrs)
        for z in nbrs:
            seen.add(z)
            stack.append((z, walk + [z]))
    return None


def random_path_family(rng: random.Random, max_vertices: int = 30):
    """Pairwise edge-disjoint x-y paths (at least two) in a random graph, or None."""
    G = random_graph(rng, max_vertices)
    x, y = rng.sample(sorted(G.vertices), 2)
    adj = {v: set(G.neighbours(v)) for v in G.vertices}
    family = []
    while True:
        P = _random_path(rng, adj, x, y)
        if P is None:
            break
        family.append(P)
        for a, b in path_edges(P):
            adj[a].discard(b)
            adj[b].discard(a)
    return family if len(family) >= 2 else None


def swap_mutation(p: gl.GrainLinePrefix) -> Optional[gl.GrainLinePrefix]:
    """Swap two interior L-vertices that both lie on a path before the last one."""
    early = set(p.below(p.indices[-1]))
    cands = [i for i, v in enumerate(p.order) if v in early and v not in (p.x, p.y)]
    if len(cands) < 2:
        return None
    i, j = cands[0], cands[1]
    order = list(p.order)
    order[i], order[j] = order[j], order[i]
    return gl.GrainLinePrefix(p.x, p.y, tuple(order), p.paths, p.start_index)


def duplicate_mutation(p: gl.GrainLinePrefix) -> gl.GrainLinePrefix:
    return gl.GrainLinePrefix(p.x, p.y, p.order, p.paths + (p.paths[0],), p.start_index)


# -- suites --------------------------------------------------------------------------


def suite_counts(max_n: int = 12, max_flow_n: int = 10) -> List[Verdict]:
    out = []
    for n in range(max_n + 1):
        G = farey.build_halved_farey(n)
        x, y = farey.root_ids(G)
        blue = G.blue_edges()
        path = farey.blue_hamilton_paths(n)[-1]
        ham = (
            len(path) == len(G)
            and set(path) == set(G.vertices)
            and (path[0], path[-1]) == (x, y)
            and sorted(tuple(sorted(e)) for e in path_edges(path)) == blue
        )
        ok = len(G) == 2**n + 1 and G.number_of_edges() == 2 ** (n + 1) - 1 and len(blue) == 2**n and ham
        out.append(Verdict(f"halved Farey counts n={n}", ok, f"|V|={len(G)} |E|={G.number_of_edges()}"))
    for n in range(max_flow_n + 1):
        G = farey.build_halved_farey(n)
        x, y = farey.root_ids(G)
        value, paths = max_edge_disjoint_paths(G, x, y)
        witnesses = farey.blue_hamilton_paths(n)
        disjoint = len({e for P in witnesses for e in path_edges(P)}) == sum(len(P) - 1 for P in witnesses)
        out.append(Verdict(f"root edge-connectivity n={n}", value == n + 1 == len(witnesses) and disjoint, f"flow={value}"))
    return out


def suite_equivalence(max_n: int = 8, max_contraction: int = 6) -> List[Verdict]:
    out = []
    for n in range(max_n + 1):
        G = farey.build_halved_farey(n)
        D = farey.build_determinant_graph(G.labels.values())
        ids = {D.label(v): v for v in D.vertices}
        mapped = {tuple(sorted((ids[G.label(a)], ids[G.label(b)]))) for a, b in G.edges}
        out.append(Verdict(f"determinant edges = recursive edges n={n}", mapped == set(D.edges)))
    for n in range(1, max_contraction + 1):
        m, verdict = lemma21_witness(n)
        out.append(Verdict(f"contraction of the root pair n={n}", verdict and validate(m).ok))
    return out


def suite_grainline(max_n: int = 8, fuzz: int = 500, seed: int = 2024, restrict_depth: int = 6) -> List[Verdict]:
    out = []
    for n in range(max_n + 1):
        paths = farey.blue_hamilton_paths(n)
        p = gl.from_compatible_paths(paths)
        disjoint = all(not set(path_edges(P)) & set(path_edges(Q)) for P, Q in itertools.combinations(paths, 2))
        compatible = all(order_compatible(P, Q) for P, Q in itertools.combinations(paths, 2))
        ok = disjoint and compatible and gl.validate_prefix(p).ok and gl.is_wildly_presented(p)
        out.append(Verdict(f"blue Hamilton prefix n={n}", ok))

    rng = random.Random(seed)
    done = bad = swaps_missed = dups_missed = exhausted = 0
    while done < fuzz:
        family = random_path_family(rng)
        if family is None:
            continue
        T = rng.randint(1, len(family) - 1)
        try:
            p = gl.extract(family, T)
        except SupplyError:
            exhausted += 1
            continue
        done += 1
        if not gl.validate_prefix(p).ok:
            bad += 1
        mutated = swap_mutation(p)
        if mutated is not None and "GL3" not in gl.validate_prefix(mutated).failed():
            swaps_missed += 1
        if "edge-disjointness" not in gl.validate_prefix(duplicate_mutation(p)).failed():
            dups_missed += 1
    out.append(Verdict(f"extract valid on {fuzz} random families", bad == 0, f"invalid={bad}, exhausted={exhausted}"))
    out.append(Verdict("order swaps caught by GL3", swaps_missed == 0, f"missed={swaps_missed}"))
    out.append(Verdict("duplicated paths caught", dups_missed == 0, f"missed={dups_missed}"))

    for n in range(1, max_n + 1):
        family = farey.blue_hamilton_paths(n)
        p = gl.extract(family, n)
        out.append(Verdict(f"extract on blue Hamilton paths n={n}", gl.validate_prefix(p).ok))

    p = gl.from_compatible_paths(farey.blue_hamilton_paths(restrict_depth))
    pairs = failures = 0
    for i, j in itertools.combinations(range(len(p.order)), 2):
        q = gl.restrict(p, p.order[i], p.order[j])
        pairs += 1
        if not (gl.validate_prefix(q).ok and gl.is_wildly_presented(q)):
            failures += 1
    out.append(Verdict(f"restriction over all {pairs} pairs", failures == 0, f"failures={failures}"))
    return out


def suite_minor(max_n: int = 4, max_d: int = 2) -> List[Verdict]:
    out = []
    K4, K23 = farey.complete_graph(4), farey.complete_bipartite_23()
    for n in range(max_n + 1):
        G = farey.build_halved_farey(n)
        out.append(Verdict(f"no K4 minor n={n}", find_minor(G, K4) is None))
        out.append(Verdict(f"no K2,3 minor n={n}", find_minor(G, K23) is None))
    for d in range(max_d + 1):
        m = find_minor(farey.build_prop31(d), K23)
        out.append(Verdict(f"K2,3 minor in glued construction d={d}", m is not None and validate(m).ok))
    return out


def split_audit(m: int, k: Optional[int] = None):
    from .splitter import FareySupply, split_step

    G = farey.build_farey(m)
    u, v = farey.root_ids(G)
    return split_step(G, u, v, FareySupply(), k or m).audit()


def pipeline_audit(host_depth: int = 8, depth: int = 3, k: int = 8) -> Dict[str, bool]:
    from .splitter import FareySupply, foresighted_pipeline

    G = farey.build_farey(host_depth)
    res = foresighted_pipeline(G, farey.root_ids(G), FareySupply(), depth, k)
    checks = {
        "final map valid": validate(res.final).ok,
        "pattern is the halved Farey graph": iso_check(res.pattern, farey.build_halved_farey(depth), colours=True)
        is not None,
        "branch sets inside the host": res.final.carrier <= G.vertices,
    }
    checks["fibres are identity singletons exactly off the new vertices"] = all(
        fibre_audit(res, n) for n in range(depth)
    )
    checks["triangles u, v, v_e present"] = all(
        _has_triangle(res.stages[lvl], a, b, z) for z, (lvl, (a, b)) in res.provenance.items()
    )
    S = farey.subdivide(farey.build_farey(5))
    root = (S.vertex_by_label(farey.Fraction(0, 1)), S.vertex_by_label(farey.Fraction(1, 0)))
    sub = foresighted_pipeline(S, root, FareySupply(), 1, 5)
    checks["subdivided host: valid with a branch set of size >= 2"] = validate(sub.final).ok and any(
        len(b) >= 2 for b in sub.final.fibres().values()
    )
    return checks


def _has_triangle(G: Graph, a: int, b: int, c: int) -> bool:
    return G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c)


def fibre_audit(res, n: int) -> bool:
    """phi_n is the identity {x} on every vertex except the level n+1 new vertices."""
    phi = res.maps[n]
    fibres = phi.fibres()
    fresh = {z for z, (lvl, _) in res.provenance.items() if lvl == n + 1}
    fhat = set(res.fhat_vertices(n))
    if not fhat <= set(fibres) or any(fibres[x] != {x} for x in fhat):
        return False
    return all((fibres[x] == {x}) == (x not in fresh) for x in fibres)


def suite_pipeline() -> List[Verdict]:
    out = []
    for m in (4, 5, 6):
        for name, ok in split_audit(m).items():
            out.append(Verdict(f"split on Farey depth {m}: {name}", ok))
    for name, ok in pipeline_audit().items():
        out.append(Verdict(f"pipeline: {name}", ok))
    return out


SUITES: Dict[str, Callable[[], List[Verdict]]] = {
    "counts": suite_counts,
    "equivalence": suite_equivalence,
    "grainline": suite_grainline,
    "minor": suite_minor,
    "pipeline": suite_pipeline,
}
