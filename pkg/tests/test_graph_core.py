import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_graphs
from fareyminor.errors import ContractionError, InputError, PreconditionError, ResourceError
from fareyminor.farey import build_halved_farey, complete_bipartite_23, complete_graph, root_ids
from fareyminor.graph_core import (
    BLACK,
    BLUE,
    Graph,
    components,
    contract_set,
    delete_edges,
    delete_vertices,
    find_minor,
    graph_from_paths,
    interior,
    is_connected,
    is_path_in,
    iso_check,
    max_edge_disjoint_paths,
    min_vertex_separator,
    order_compatible,
    path_edges,
    rename,
    subpath,
    union,
)
from fareyminor.minor_maps import MinorMap, validate


def cycle(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


# -- Graph value ------------------------------------------------------------------


def test_graph_rejects_loops_and_stray_endpoints():
    with pytest.raises(InputError):
        Graph([0], [(0, 0)])
    with pytest.raises(InputError):
        Graph([0, 1], [(0, 2)])


def test_colouring_is_all_or_nothing():
    with pytest.raises(InputError):
        Graph(range(3), [(0, 1), (1, 2)], colours={(0, 1): BLUE})
    with pytest.raises(InputError):
        Graph(range(2), [(0, 1)], colours={(0, 1): "red"})
    G = Graph(range(2), [(0, 1)], colours={(1, 0): BLUE})
    assert G.colour(0, 1) == BLUE and G.is_coloured


def test_equality_sees_labels_and_colours():
    a = Graph(range(2), [(0, 1)])
    assert a == Graph([1, 0], [(1, 0)])
    assert a != Graph(range(2), [(0, 1)], labels={0: "x"})
    assert a != Graph(range(2), [(0, 1)], colours={(0, 1): BLACK})


def test_fresh_id_and_delete():
    G = cycle(5)
    assert G.fresh_id() == 5
    H = delete_vertices(G, [0])
    assert H.vertices == {1, 2, 3, 4} and H.number_of_edges() == 3
    assert delete_edges(G, [(4, 0)]).number_of_edges() == 4


def test_union_keeps_agreeing_colours():
    a = Graph(range(2), [(0, 1)], colours={(0, 1): BLUE})
    b = Graph([1, 2], [(1, 2)], colours={(1, 2): BLACK})
    u = union(a, b)
    assert u.colours == {(0, 1): BLUE, (1, 2): BLACK}
    assert not union(a, Graph([1, 2], [(1, 2)])).is_coloured


def test_components_ordered_by_least_vertex():
    G = Graph(range(6), [(4, 5), (0, 3), (1, 2)])
    assert components(G) == [frozenset({0, 3}), frozenset({1, 2}), frozenset({4, 5})]
    assert is_connected(G, [0, 3]) and not is_connected(G)


def test_rename_and_graph_from_paths():
    G = graph_from_paths([(0, 1, 2), (0, 3, 2)])
    assert G.number_of_edges() == 4
    R = rename(G, {0: 10})
    assert 10 in R and 0 not in R and R.has_edge(10, 1)


# -- paths --------------------------------------------------------------------------


def test_path_helpers():
    P = (0, 4, 2, 7, 1)
    assert interior(P) == (4, 2, 7)
    assert subpath(P, 4, 7) == (4, 2, 7)
    assert path_edges((0, 1, 2)) == [(0, 1), (1, 2)]
    assert is_path_in(cycle(4), (0, 1, 2)) and not is_path_in(cycle(4), (0, 2))


def test_order_compatible():
    assert order_compatible((0, 1, 2, 3), (0, 2, 5, 3))
    assert not order_compatible((0, 1, 2, 3), (0, 2, 1, 3))
    with pytest.raises(InputError):
        order_compatible((0, 1), (1, 0))


# -- contraction ------------------------------------------------------------------


def test_contract_connected_set():
    H, m = contract_set(cycle(5), {1, 2})
    assert H.vertices == {0, 3, 4, 5}
    assert H.has_edge(0, 5) and H.has_edge(5, 3)
    assert validate(m).ok
    assert m.branch_set(5) == {1, 2}


def test_contract_into_chosen_id():
    H, _ = contract_set(cycle(5), {1, 2}, new_id=1)
    assert H.vertices == {0, 1, 3, 4}
    with pytest.raises(InputError):
        contract_set(cycle(5), {1, 2}, new_id=3)


def test_contract_rejects_bad_sets():
    with pytest.raises(ContractionError):
        contract_set(cycle(5), {0, 2})
    with pytest.raises(InputError):
        contract_set(cycle(5), set())


# -- flows, checked against brute-force cuts -------------------------------------------


def brute_min_edge_cut(G, x, y):
    others = sorted(G.vertices - {x, y})
    best = G.number_of_edges()
    for r in range(len(others) + 1):
        for side in itertools.combinations(others, r):
            S = {x, *side}
            best = min(best, sum(1 for a, b in G.edges if (a in S) != (b in S)))
    return best


@given(small_graphs(max_vertices=8), st.data())
def test_edge_disjoint_paths_match_min_cut(G, data):
    x, y = data.draw(st.sampled_from(list(itertools.permutations(sorted(G.vertices), 2))))
    value, paths = max_edge_disjoint_paths(G, x, y)
    assert value == brute_min_edge_cut(G, x, y) == len(paths)
    used = [e for P in paths for e in path_edges(P)]
    assert len(used) == len(set(used))
    for P in paths:
        assert P[0] == x and P[-1] == y and is_path_in(G, P)


def test_edge_connectivity_of_halved_farey_roots():
    for n in range(6):
        G = build_halved_farey(n)
        value, _ = max_edge_disjoint_paths(G, *root_ids(G))
        assert value == n + 1


def test_flow_endpoints_must_differ():
    with pytest.raises(InputError):
        max_edge_disjoint_paths(cycle(3), 0, 0)


def brute_min_separators(G, u, v):
    others = sorted(G.vertices - {u, v})
    for r in range(len(others) + 1):
        found = []
        for S in itertools.combinations(others, r):
            rest = delete_vertices(G, S)
            if not any(u in c and v in c for c in components(rest)):
                found.append(frozenset(S))
        if found:
            return found
    return []


def side_of(G, S, u):
    return next(c for c in components(delete_vertices(G, S)) if u in c)


@given(small_graphs(min_vertices=3, max_vertices=8), st.data())
def test_separator_is_minimum_and_closest_to_u(G, data):
    pairs = [(a, b) for a, b in itertools.permutations(sorted(G.vertices), 2) if not G.has_edge(a, b)]
    if not pairs:
        return
    u, v = data.draw(st.sampled_from(pairs))
    S = min_vertex_separator(G, u, v)
    candidates = brute_min_separators(G, u, v)
    assert S in candidates
    mine = side_of(G, S, u)
    for other in candidates:
        assert mine <= side_of(G, other, u)


def test_separator_needs_non_adjacent_pair():
    with pytest.raises(PreconditionError):
        min_vertex_separator(cycle(4), 0, 1)


def test_separator_in_small_halved_farey():
    G = build_halved_farey(2)
    u, v = root_ids(G)
    assert min_vertex_separator(delete_edges(G, [(u, v)]), u, v) == {2}


# -- isomorphism ----------------------------------------------------------------------


def test_iso_check_relabelled():
    G = build_halved_farey(3)
    perm = {v: (7 * v + 3) % len(G) for v in G.vertices}
    H = rename(G, perm)
    iso = iso_check(G, H)
    assert iso is not None
    assert all(H.has_edge(iso[a], iso[b]) for a, b in G.edges)


def test_iso_check_colours():
    G = build_halved_farey(2)
    recoloured = Graph(G.vertices, G.edges, colours={e: BLACK if c == BLUE else BLUE for e, c in G.colours.items()})
    assert iso_check(G, recoloured) is not None
    assert iso_check(G, recoloured, colours=True) is None


def test_iso_guard():
    big = cycle(201)
    with pytest.raises(ResourceError):
        iso_check(big, big)


# -- minor search, checked against exhaustive branch-set assignment -------------------


def brute_has_minor(G, H):
    hv = H.sorted_vertices()
    gv = G.sorted_vertices()
    for choice in itertools.product([None, *hv], repeat=len(gv)):
        m = MinorMap(G, H, {g: h for g, h in zip(gv, choice) if h is not None})
        if validate(m).ok:
            return True
    return False


PATTERNS = {
    "K3": complete_graph(3),
    "K4": complete_graph(4),
    "K2,3": complete_bipartite_23(),
    "P3": Graph(range(3), [(0, 1), (1, 2)]),
    "C4": cycle(4),
}


@settings(max_examples=40)
@given(small_graphs(max_vertices=6), st.sampled_from(sorted(PATTERNS)))
def test_find_minor_agrees_with_brute_force(G, name):
    H = PATTERNS[name]
    m = find_minor(G, H)
    assert (m is not None) == brute_has_minor(G, H)
    if m is not None:
        assert validate(m).ok


def apex_planar(G):
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(G.edges)
    g.add_edges_from(("apex", v) for v in G.vertices)
    return nx.check_planarity(g)[0]


@settings(max_examples=80)
@given(small_graphs(min_vertices=4, max_vertices=11))
def test_outerplanarity_cross_check(G):
    # G is outerplanar exactly when G plus a universal vertex is planar
    free = find_minor(G, complete_graph(4)) is None and find_minor(G, complete_bipartite_23()) is None
    assert free == apex_planar(G)


def test_find_minor_witness_lifts_through_suppressed_vertices():
    # K4 with every edge subdivided: only the reduction path can find it
    K4 = complete_graph(4)
    edges, nid = [], 4
    for a, b in K4.sorted_edges():
        edges += [(a, nid), (nid, b)]
        nid += 1
    G = Graph(range(nid), edges)
    m = find_minor(G, K4)
    assert m is not None and validate(m).ok


def test_find_minor_guards():
    with pytest.raises(ResourceError):
        find_minor(cycle(49), complete_graph(3))
    with pytest.raises(ResourceError):
        find_minor(cycle(10), complete_graph(7))
    with pytest.raises(InputError):
        find_minor(cycle(10), Graph(range(2)))
