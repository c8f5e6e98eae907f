import random
from itertools import combinations

import pytest

import oracles as O
from simplicial import (
    Graph,
    InputError,
    Walk,
    WalkCertificate,
    build_complex,
    face_adjacency_graph,
    graph_of,
    is_m_connected,
    loop_erased,
    strong_chain_avoiding,
    strong_walk_avoiding,
    verify_strong_walk,
    verify_subdivision,
    vertex_connectivity,
)
from simplicial.errors import ClassificationError
from simplicial.graphs import SubdivisionEmbedding


def test_graph_construction():
    g = Graph((3, 1, 2), [(2, 1), (2, 3)])
    assert g.nodes == (1, 2, 3)
    assert g.edges == ((1, 2), (2, 3))
    assert g.neighbors(2) == (1, 3)
    assert g.degree(1) == 1
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)
    with pytest.raises(InputError):
        Graph((1, 2), [(1, 1)])
    with pytest.raises(InputError):
        Graph((1, 2), [(1, 3)])


def test_graph_connectivity_helpers():
    g = Graph((1, 2, 3, 4), [(1, 2), (3, 4)])
    assert not g.is_connected()
    assert g.without_nodes([3, 4]).is_connected()
    assert Graph((5,), []).is_connected()


def test_graph_of_octahedron(octa):
    g = graph_of(octa)
    assert len(g.nodes) == 6
    assert len(g.edges) == 12
    non_edges = [(u, v) for u, v in combinations(g.nodes, 2) if not g.has_edge(u, v)]
    assert non_edges == [(1, 4), (2, 5), (3, 6)]


def test_cross_polytope_graph_is_complete_minus_matching(cross4):
    g = graph_of(cross4)
    assert len(g.nodes) == 8
    assert len(g.edges) == 8 * 7 // 2 - 4
    for i in range(1, 5):
        assert not g.has_edge(i, i + 4)


def test_face_adjacency_zero_equals_graph(corpus):
    for name, cx in corpus.items():
        if cx.dimension < 1:
            continue
        assert face_adjacency_graph(cx, 0) == graph_of(cx), name


def test_edge_adjacency_graph_of_octahedron(octa):
    g = face_adjacency_graph(octa, 1)
    assert len(g.nodes) == 12
    assert all(g.degree(u) == 4 for u in g.nodes)


def test_face_adjacency_bad_degree(octa):
    with pytest.raises(InputError):
        face_adjacency_graph(octa, 2)
    with pytest.raises(InputError):
        face_adjacency_graph(octa, -1)


def test_octahedron_connectivity(octa):
    res = vertex_connectivity(graph_of(octa))
    assert res.value == 4
    assert not res.complete
    assert res.cut.cut == (1, 2, 4, 5)  # common neighbors of the pair {3, 6}
    a, b = res.cut.separated_pair
    assert not graph_of(octa).has_edge(a, b)


def test_complete_graph_marker():
    k5 = Graph(range(5), combinations(range(5), 2))
    res = vertex_connectivity(k5)
    assert res.value == 4 and res.complete and res.cut is None
    with pytest.raises(InputError):
        vertex_connectivity(Graph((1,), []))


def test_connectivity_matches_bruteforce_on_corpus(corpus):
    for name, cx in corpus.items():
        if cx.dimension < 1 or cx.num_vertices > 13:
            continue
        g = graph_of(cx)
        got = vertex_connectivity(g)
        want, _ = O.vertex_connectivity_bruteforce(g.nodes, g.edges)
        assert got.value == want, name
        if got.cut is not None:
            rest = g.without_nodes(got.cut.cut)
            assert not rest.is_connected(), name
            assert len(got.cut.cut) == want, name


def test_connectivity_matches_bruteforce_on_random_graphs():
    rng = random.Random(40961)
    for trial in range(40):
        n = rng.randint(2, 9)
        nodes = list(range(1, n + 1))
        pool = list(combinations(nodes, 2))
        edges = [e for e in pool if rng.random() < 0.55]
        g = Graph(nodes, edges)
        got = vertex_connectivity(g)
        want, _ = O.vertex_connectivity_bruteforce(nodes, edges)
        assert got.value == want, (trial, edges)
        if got.cut is not None:
            assert len(got.cut.cut) == want
            assert not g.without_nodes(got.cut.cut).is_connected()


def test_is_m_connected(octa):
    g = graph_of(octa)
    assert is_m_connected(g, 4)
    v = is_m_connected(g, 5)
    assert not v
    assert len(v.witness.cut) == 4
    assert not g.without_nodes(v.witness.cut).is_connected()
    with pytest.raises(InputError):
        is_m_connected(g, 0)


def test_is_m_connected_node_count_clause():
    k3 = Graph((1, 2, 3), [(1, 2), (1, 3), (2, 3)])
    v = is_m_connected(k3, 3)
    assert not v and "fewer than 4 nodes" in v.reason
    assert is_m_connected(k3, 2)


def test_m_connected_is_monotone(octa, icosa):
    for cx in (octa, icosa):
        g = graph_of(cx)
        top = vertex_connectivity(g).value
        for m in range(1, top + 1):
            assert is_m_connected(g, m)
        assert not is_m_connected(g, top + 1)


def test_walk_objects():
    w = Walk((1, 2, 3, 2))
    assert w.edges == ((1, 2), (2, 3), (2, 3))  # edges come out sorted
    assert w.length == 3
    assert not w.is_path
    assert loop_erased(w).nodes == (1, 2)
    assert loop_erased(Walk((5,))).nodes == (5,)
    p = Walk((4, 2, 7))
    assert p.is_path
    assert loop_erased(p).nodes == (4, 2, 7)


def test_strong_chain_avoiding(octa):
    chain = strong_chain_avoiding(octa, 1, (2, 3, 4), (4, 5, 6))
    assert len(chain) <= 4
    assert chain[0] == (2, 3, 4) and chain[-1] == (4, 5, 6)
    for f in chain:
        assert 1 not in f
        assert octa.has_face(f)
    for f, g in zip(chain, chain[1:]):
        assert len(set(f) & set(g)) == len(f) - 1
    with pytest.raises(InputError):
        strong_chain_avoiding(octa, 9, (2, 3, 4), (4, 5, 6))
    with pytest.raises(InputError):
        strong_chain_avoiding(octa, 1, (1, 2, 3), (4, 5, 6))


def test_walk_frozen_example(octa):
    cert = strong_walk_avoiding(octa, 2, 5, {1, 4})
    assert cert.walk.nodes == (2, 3, 5)
    assert cert.witness_facets == ((2, 3, 4), (3, 4, 5))
    assert verify_strong_walk(octa, cert)


def test_walk_avoiding_a_facet(octa):
    # the avoided set is a whole facet here
    cert = strong_walk_avoiding(octa, 1, 4, {2, 3})
    assert verify_strong_walk(octa, cert)
    assert set(cert.walk.nodes) <= {1, 4, 5, 6}
    cert = strong_walk_avoiding(octa, 1, 6, {2, 3, 4})
    assert verify_strong_walk(octa, cert)
    assert not {2, 3, 4} & set(cert.walk.nodes)


def test_walk_zero_length(octa):
    cert = strong_walk_avoiding(octa, 3, 3, {1})
    assert cert.walk.nodes == (3,)
    assert cert.witness_facets == ()
    assert verify_strong_walk(octa, cert)


def test_walk_preconditions(octa, books):
    with pytest.raises(ClassificationError) as e:
        strong_walk_avoiding(octa, 1, 4, {2, 3, 6})  # 3 labels, not a face
    assert e.value.check == "avoid-set"
    with pytest.raises(ClassificationError) as e:
        strong_walk_avoiding(books, 3, 4, set())
    assert e.value.check == "pseudomanifold"
    with pytest.raises(InputError):
        strong_walk_avoiding(octa, 1, 4, {9})
    with pytest.raises(InputError):
        strong_walk_avoiding(octa, 1, 4, {1, 2})
    with pytest.raises(InputError):
        strong_walk_avoiding(octa, 9, 4, set())


def test_walk_sweep_over_pseudomanifolds(corpus):
    # every pseudomanifold, every facet as the avoided set, all endpoint pairs
    for name, cx in corpus.items():
        if not cx.is_pseudomanifold() or cx.dimension < 1:
            continue
        if cx.num_vertices > 14:
            continue
        for sigma in cx.facets:
            rest = [u for u in cx.vertices if u not in sigma]
            for a in rest:
                for b in rest:
                    cert = strong_walk_avoiding(cx, a, b, sigma)
                    assert verify_strong_walk(cx, cert), (name, sigma, a, b)
                    assert not set(sigma) & set(cert.walk.nodes)
                    assert cert.walk.nodes[0] == a
                    assert cert.walk.nodes[-1] == b


def test_walk_sweep_small_avoid_sets(octa, torus):
    # avoided sets below facet size need not be faces
    for cx in (octa, torus):
        d = cx.dimension + 1
        for avoid in combinations(cx.vertices, d - 1):
            rest = [u for u in cx.vertices if u not in avoid]
            for a in rest:
                for b in rest:
                    cert = strong_walk_avoiding(cx, a, b, avoid)
                    assert verify_strong_walk(cx, cert)
                    assert not set(avoid) & set(cert.walk.nodes)


def test_deletion_of_pseudomanifold_is_strongly_connected(corpus):
    for name, cx in corpus.items():
        if not cx.is_pseudomanifold() or cx.dimension < 1:
            continue
        for v in cx.vertices:
            dl = cx.delete((v,))
            assert dl.strong_components().count == 1, (name, v)
            assert dl.is_pure, (name, v)


def test_link_components_of_pseudomanifold_are_pseudomanifolds(corpus):
    for name, cx in corpus.items():
        if not cx.is_pseudomanifold() or cx.dimension < 1:
            continue
        for size in range(1, cx.dimension + 1):
            for sigma in cx.faces(size - 1):
                lk = cx.link(sigma)
                for comp in lk.strong_components().components:
                    sub = build_complex(comp)
                    assert sub.is_pseudomanifold(), (name, sigma, comp)


def test_verifier_rejects_fabricated_witness(octa):
    cert = WalkCertificate(Walk((2, 3, 5)), ((2, 3, 4), (3, 5, 9)))
    v = verify_strong_walk(octa, cert)
    assert not v and v.witness["clause"] == "witness-facet"


def test_verifier_rejects_non_edge(octa):
    cert = WalkCertificate(Walk((2, 5)), ((2, 3, 4),))
    v = verify_strong_walk(octa, cert)
    assert not v and v.witness["clause"] == "edge"


def test_verifier_rejects_edge_outside_witness(octa):
    cert = WalkCertificate(Walk((2, 3)), ((3, 4, 5),))
    v = verify_strong_walk(octa, cert)
    assert not v and v.witness["clause"] == "edge-in-witness"


def test_verifier_rejects_wrong_star_component():
    pinched = build_complex([(1, 2, 3), (3, 4, 5)])
    cert = WalkCertificate(Walk((2, 3, 4)), ((1, 2, 3), (3, 4, 5)))
    v = verify_strong_walk(pinched, cert)
    assert not v and v.witness["clause"] == "star-component"
    assert v.witness["index"] == 1


def test_verifier_rejects_witness_count_and_unknown_nodes(octa):
    v = verify_strong_walk(octa, WalkCertificate(Walk((2, 3)), ()))
    assert not v and v.witness["clause"] == "witness-count"
    v = verify_strong_walk(octa, WalkCertificate(Walk((2, 9)), ((2, 3, 4),)))
    assert not v and v.witness["clause"] == "node-membership"
    v = verify_strong_walk(octa, WalkCertificate(Walk(()), ()))
    assert not v and v.witness["clause"] == "walk-empty"


def _house_graph():
    return Graph(range(1, 7), [(1, 3), (3, 2), (2, 4), (4, 3), (3, 5), (5, 1),
                               (2, 6), (6, 1)])


def test_subdivision_accepts_valid_embedding():
    host = _house_graph()
    pattern = Graph(("a", "b", "c"), [("a", "b"), ("b", "c"), ("a", "c")])
    emb = SubdivisionEmbedding(
        branch_nodes={"a": 1, "b": 2, "c": 4},
        edge_paths={("a", "b"): (1, 3, 2), ("b", "c"): (2, 4), ("a", "c"): (1, 5, 3, 4)},
    )
    v = verify_subdivision(host, pattern, emb)
    assert not v  # 3 appears inside two paths
    assert v.witness["clause"] == "interior-overlap"
    emb = SubdivisionEmbedding(
        branch_nodes={"a": 1, "b": 2, "c": 4},
        edge_paths={("a", "b"): (1, 6, 2), ("b", "c"): (2, 4), ("a", "c"): (1, 5, 3, 4)},
    )
    assert verify_subdivision(host, pattern, emb)


def test_subdivision_rejects_each_clause():
    host = _house_graph()
    pattern = Graph(("a", "b", "c"), [("a", "b"), ("b", "c"), ("a", "c")])

    def emb(branch, paths):
        return SubdivisionEmbedding(branch_nodes=branch, edge_paths=paths)

    ok_paths = {("a", "b"): (1, 6, 2), ("b", "c"): (2, 4), ("a", "c"): (1, 5, 3, 4)}

    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2}, ok_paths))
    assert not v and v.witness["clause"] == "branch-cover"
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 1, "c": 4}, ok_paths))
    assert not v and v.witness["clause"] == "branch-injective"
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2, "c": 99}, ok_paths))
    assert not v and v.witness["clause"] == "branch-membership"
    bad = dict(ok_paths)
    bad[("a", "x")] = (1, 2)
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2, "c": 4}, bad))
    assert not v and v.witness["clause"] == "unknown-edge"
    missing = {("a", "b"): (1, 6, 2), ("b", "c"): (2, 4)}
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2, "c": 4}, missing))
    assert not v and v.witness["clause"] == "missing-path"
    shape = dict(ok_paths)
    shape[("b", "c")] = (2,)
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2, "c": 4}, shape))
    assert not v and v.witness["clause"] == "path-shape"
    ends = dict(ok_paths)
    ends[("b", "c")] = (2, 3)
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2, "c": 4}, ends))
    assert not v and v.witness["clause"] == "path-endpoints"
    nonedge = dict(ok_paths)
    nonedge[("a", "c")] = (1, 4)
    v = verify_subdivision(host, pattern, emb({"a": 1, "b": 2, "c": 4}, nonedge))
    assert not v and v.witness["clause"] == "path-edge"
    v = verify_subdivision(host, pattern,
                           emb({"a": 1, "b": 2, "c": 3}, {
                               ("a", "b"): (1, 3, 2),
                               ("b", "c"): (2, 4, 3),
                               ("a", "c"): (1, 5, 3)}))
    assert not v and v.witness["clause"] == "interior-hits-branch"


def test_subdivision_path_reversal_is_accepted():
    host = Graph((1, 2, 3), [(1, 2), (2, 3)])
    pattern = Graph(("x", "y"), [("x", "y")])
    emb = SubdivisionEmbedding(branch_nodes={"x": 1, "y": 3},
                               edge_paths={("y", "x"): (3, 2, 1)})
    assert verify_subdivision(host, pattern, emb)
