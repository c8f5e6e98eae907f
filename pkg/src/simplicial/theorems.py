"""Instance checks for the structural bounds, with certificates.

Each check returns a TheoremReport: hypothesis verdicts, a conclusion
verdict (None when a hypothesis already failed), and enough detail to
recheck the claim by hand.  A report never hides a failed conclusion; a
violated report on a hypothesis-satisfying input means either a genuine
counterexample or an implementation defect, and the details say which
one to suspect.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import (
    DEFAULT_CANDIDATE_CAP,
    Face,
    SimplicialComplex,
    build_complex,
    check_face_lower_bounds,
)
from .errors import ClassificationError, InputError, InternalInvariantError
from .generators import cross_polytope_boundary, is_isomorphic
from .graphs import (
    Graph,
    SubdivisionEmbedding,
    Walk,
    WalkCertificate,
    face_adjacency_graph,
    graph_of,
    strong_walk_avoiding,
    verify_subdivision,
    vertex_connectivity,
)
from .homology import GF2, FieldSpec, is_homology_manifold, is_m_cohen_macaulay


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    ok: bool
    witness: object = None


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    hypotheses: tuple[HypothesisCheck, ...]
    conclusion_ok: bool | None
    details: dict
    field: str | None = None

    @property
    def applicable(self) -> bool:
        return all(h.ok for h in self.hypotheses)

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.conclusion_ok else "violated"

    @property
    def exit_code(self) -> int:
        return {"pass": 0, "violated": 1, "not-applicable": 4}[self.status]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "field": self.field,
            "hypotheses": [
                {"name": h.name, "ok": h.ok, "witness": h.witness}
                for h in self.hypotheses
            ],
            "conclusion_ok": self.conclusion_ok,
            "status": self.status,
            "details": self.details,
        }


def _flag_hypothesis(cx: SimplicialComplex, cap: int) -> HypothesisCheck:
    v = cx.is_flag(cap)
    return HypothesisCheck("flag", bool(v), v.witness)


def _pm_hypothesis(cx: SimplicialComplex) -> HypothesisCheck:
    v = cx.is_pseudomanifold()
    return HypothesisCheck("pseudomanifold", bool(v), v.witness)


def check_graph_connectivity_bound(
    cx: SimplicialComplex, cap: int = DEFAULT_CANDIDATE_CAP
) -> TheoremReport:
    """Flag pseudomanifolds with facets of size d have (2d-2)-connected graphs."""
    hyps = (_flag_hypothesis(cx, cap), _pm_hypothesis(cx))
    if not all(h.ok for h in hyps):
        return TheoremReport("t1", hyps, None, {})
    d = cx.dimension + 1
    bound = 2 * d - 2
    res = vertex_connectivity(graph_of(cx))
    details = {
        "facet_size": d,
        "bound": bound,
        "connectivity": res.value,
        "complete_graph": res.complete,
    }
    if res.cut is not None:
        details["minimum_cut"] = res.cut.cut
        details["separated_pair"] = res.cut.separated_pair
    return TheoremReport("t1", hyps, res.value >= bound, details)


def check_h_vector_bound(
    cx: SimplicialComplex,
    field: FieldSpec = GF2,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> TheoremReport:
    """Flag doubly Cohen-Macaulay complexes satisfy h_i >= C(d, i).

    When every inequality is tight the complex is compared against the
    cross-polytope boundary of matching dimension; the outcome of that
    comparison is informational and never affects the verdict.
    """
    hyps = [HypothesisCheck("nonvoid", not cx.is_void)]
    if hyps[0].ok:
        hyps.append(_flag_hypothesis(cx, cap))
        two_cm = is_m_cohen_macaulay(cx, 2, field, cap)
        hyps.append(HypothesisCheck("doubly-cohen-macaulay", bool(two_cm), two_cm.witness))
    hyps = tuple(hyps)
    if not all(h.ok for h in hyps):
        return TheoremReport("t3", hyps, None, {}, field=field.name)
    h = cx.h_vector()
    d = cx.dimension + 1
    rows = []
    for i in range(d + 1):
        rows.append(
            {"index": i, "value": h[i], "bound": comb(d, i), "ok": h[i] >= comb(d, i)}
        )
    equalities = [r["index"] for r in rows if r["value"] == r["bound"]]
    details = {
        "facet_size": d,
        "h_vector": tuple(h),
        "rows": rows,
        "equality_positions": tuple(equalities),
    }
    all_equal = len(equalities) == d + 1
    if all_equal and d >= 1:
        mapping = is_isomorphic(cx, cross_polytope_boundary(d))
        details["cross_polytope_isomorphic"] = mapping is not None
        if mapping is not None:
            details["cross_polytope_mapping"] = sorted(mapping.items())
    else:
        details["cross_polytope_isomorphic"] = None
    return TheoremReport(
        "t3", hyps, all(r["ok"] for r in rows), details, field=field.name
    )


def check_face_graph_connectivity_bound(
    cx: SimplicialComplex,
    k: int,
    field: FieldSpec = GF2,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> TheoremReport:
    """Adjacency graphs of k-faces of flag homology manifolds stay highly connected.

    The bound checked is 2(k+1)(d-k-1) for the graph whose nodes are the
    k-faces, adjacent when their union is a face.  Checked on the given
    instance only.
    """
    if not 0 <= k <= cx.dimension - 1:
        raise InputError(f"k={k} outside 0..{cx.dimension - 1}")
    hyps = (
        _flag_hypothesis(cx, cap),
        _homology_manifold_hypothesis(cx, field),
        HypothesisCheck("connected-graph", graph_of(cx).is_connected()),
    )
    if not all(h.ok for h in hyps):
        return TheoremReport("gk", hyps, None, {"k": k}, field=field.name)
    d = cx.dimension + 1
    bound = 2 * (k + 1) * (d - k - 1)
    res = vertex_connectivity(face_adjacency_graph(cx, k))
    details = {
        "k": k,
        "facet_size": d,
        "bound": bound,
        "connectivity": res.value,
        "complete_graph": res.complete,
        "note": "instance check only",
    }
    if res.cut is not None:
        details["minimum_cut"] = res.cut.cut
        details["separated_pair"] = res.cut.separated_pair
    return TheoremReport("gk", hyps, res.value >= bound, details, field=field.name)


def _homology_manifold_hypothesis(cx: SimplicialComplex, field: FieldSpec):
    v = is_homology_manifold(cx, field)
    return HypothesisCheck("homology-manifold", bool(v), v.witness)


def check_face_lower_bounds_report(
    cx: SimplicialComplex, cap: int = DEFAULT_CANDIDATE_CAP
) -> TheoremReport:
    """Face counts of flag pseudomanifolds dominate the cross-polytope's."""
    hyps = (_flag_hypothesis(cx, cap), _pm_hypothesis(cx))
    if not all(h.ok for h in hyps):
        return TheoremReport("lb", hyps, None, {})
    rep = check_face_lower_bounds(cx, cap)
    rows = [
        {"index": r.index, "value": r.count, "bound": r.bound, "ok": r.ok}
        for r in rep.rows
    ]
    return TheoremReport(
        "lb", hyps, rep.ok, {"facet_size": cx.dimension + 1, "rows": rows}
    )


# -- cross-polytope subdivisions ---------------------------------------------


def cross_polytope_graph(d: int) -> Graph:
    """Complete multipartite graph on d antipodal pairs: 1..2d, i not joined to d+i."""
    if d < 1:
        raise InputError(f"d must be at least 1, got {d}")
    nodes = range(1, 2 * d + 1)
    edges = [
        (i, j)
        for i in nodes
        for j in nodes
        if i < j and j - i != d
    ]
    return Graph(nodes, edges)


def _facet_flip(cx: SimplicialComplex, facet: Face, drop: int) -> int:
    """The vertex replacing drop in the unique other facet over the ridge."""
    ridge = set(facet) - {drop}
    other = None
    for f in cx.facets:
        if f != facet and ridge <= set(f):
            if other is not None:
                raise InternalInvariantError("ridge lies in three facets")
            other = f
    if other is None:
        raise InternalInvariantError("ridge lies in one facet only")
    extra = set(other) - ridge
    if len(extra) != 1:
        raise InternalInvariantError("flip facet has unexpected size")
    return extra.pop()


def _circle_path(L: SimplicialComplex, start: int, came_from: int, goal: int):
    """Walk a union of circles from start away from came_from until goal."""
    if L.dimension != 1:
        raise InternalInvariantError("expected a one-dimensional link")
    adj: dict = {}
    for x, y in L.faces(1):
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    path = [start]
    prev, cur = came_from, start
    limit = L.num_vertices + 1
    while cur != goal:
        nbrs = adj.get(cur, ())
        if len(nbrs) != 2:
            raise InternalInvariantError("link is not a disjoint union of circles")
        if nbrs[0] == prev:
            nxt = nbrs[1]
        elif nbrs[1] == prev:
            nxt = nbrs[0]
        else:
            raise InternalInvariantError("circle walk lost its previous node")
        prev, cur = cur, nxt
        path.append(cur)
        if len(path) > limit:
            raise InternalInvariantError("circle walk failed to terminate")
    return tuple(path)


def cross_polytope_subdivision(
    cx: SimplicialComplex, facet, cap: int = DEFAULT_CANDIDATE_CAP
) -> SubdivisionEmbedding:
    """Subdivided cross-polytope graph rooted at one facet of a flag pseudomanifold.

    Branch nodes: facet vertices v_1..v_d and, opposite each v_i, the
    vertex u_i completing the other facet over the ridge without v_i.
    Pattern edges between branch vertices that are adjacent in the
    complex embed directly; the edge between u_i and u_j follows the
    circle of the link of the facet minus v_i and v_j.
    """
    fl = cx.is_flag(cap)
    if not fl:
        raise ClassificationError("flag", witness=fl.witness)
    pm = cx.is_pseudomanifold()
    if not pm:
        raise ClassificationError("pseudomanifold", witness=pm.witness)
    facet = tuple(sorted(facet))
    if facet not in set(cx.facets):
        raise InputError(f"{list(facet)} is not a facet")
    vs = facet
    d = len(vs)
    us = [_facet_flip(cx, facet, v) for v in vs]
    if len(set(us)) != d:
        raise InternalInvariantError("opposite vertices collide")
    for v, u in zip(vs, us):
        if u in vs:
            raise InternalInvariantError("opposite vertex fell inside the facet")
        if cx.has_face((u, v) if u > v else (v, u)):
            raise InternalInvariantError("antipodal pair spans an edge")

    branch = {}
    for i in range(d):
        branch[i + 1] = vs[i]
        branch[d + i + 1] = us[i]

    paths: dict = {}
    for i in range(d):
        for j in range(d):
            if i < j:
                paths[frozenset((i + 1, j + 1))] = (vs[i], vs[j])
            if i != j:
                paths[frozenset((i + 1, d + j + 1))] = (vs[i], us[j])
    interiors: dict = {}
    branch_vals = set(branch.values())
    for i in range(d):
        for j in range(i + 1, d):
            rho = tuple(x for x in vs if x != vs[i] and x != vs[j])
            L = cx.link(rho)
            p = _circle_path(L, us[i], vs[j], us[j])
            for x in p[1:-1]:
                if x in branch_vals:
                    raise InternalInvariantError("path interior hit a branch vertex")
                if x in interiors:
                    raise InternalInvariantError("two path interiors intersect")
                interiors[x] = (i, j)
            paths[frozenset((d + i + 1, d + j + 1))] = p
    return SubdivisionEmbedding(branch_nodes=branch, edge_paths=paths)


def check_cross_polytope_subdivision(
    cx: SimplicialComplex,
    facet=None,
    all_facets: bool = False,
    cap: int = DEFAULT_CANDIDATE_CAP,
) -> TheoremReport:
    """Extract and independently verify cross-polytope subdivisions.

    With all_facets the construction runs rooted at every facet; the
    conclusion holds only if every embedding verifies.  An internal
    invariant failure is reported as a violation marked as a suspected
    implementation defect, since it arises from the construction and not
    from the verifier.
    """
    hyps = (_flag_hypothesis(cx, cap), _pm_hypothesis(cx))
    if not all(h.ok for h in hyps):
        return TheoremReport("t2", hyps, None, {})
    d = cx.dimension + 1
    host = graph_of(cx)
    pattern = cross_polytope_graph(d)
    if all_facets:
        targets = cx.facets
    elif facet is None:
        targets = (cx.facets[0],)
    else:
        targets = (tuple(sorted(facet)),)
    results = []
    ok_all = True
    suspect = False
    for f in targets:
        entry: dict = {"facet": f}
        try:
            emb = cross_polytope_subdivision(cx, f, cap)
            verdict = verify_subdivision(host, pattern, emb)
            entry["ok"] = bool(verdict)
            if verdict:
                if not all_facets:
                    entry["branch_nodes"] = sorted(emb.branch_nodes.items())
                    entry["paths"] = [
                        {"edge": tuple(sorted(k)), "path": p}
                        for k, p in sorted(
                            emb.edge_paths.items(), key=lambda kv: tuple(sorted(kv[0]))
                        )
                    ]
            else:
                entry["failure"] = verdict.witness
        except InternalInvariantError as e:
            entry["ok"] = False
            entry["internal_error"] = str(e)
            suspect = True
        ok_all = ok_all and entry["ok"]
        results.append(entry)
    details = {
        "facet_size": d,
        "pattern_nodes": 2 * d,
        "facets_checked": len(results),
        "results": results,
    }
    if suspect:
        details["suspect"] = (
            "construction invariant failed; suspect an implementation defect "
            "rather than a counterexample"
        )
    return TheoremReport("t2", hyps, ok_all, details)


# -- walks that dodge arbitrary small vertex sets -----------------------------


def _graph_adjacency(cx: SimplicialComplex) -> dict:
    adj: dict = {v: set() for v in cx.vertices}
    for u, w in cx.faces(1):
        adj[u].add(w)
        adj[w].add(u)
    return adj


def _same_star_component(cx: SimplicialComplex, v: int, f1: Face, f2: Face) -> bool:
    """Whether two facets through v lie in one strong component of its star."""
    lk = cx.link((v,))
    comps = lk.strong_components()
    a = tuple(x for x in f1 if x != v)
    b = tuple(x for x in f2 if x != v)
    for comp in comps.components:
        items = set(comp)
        if a in items:
            return b in items
    return False


def _component_complex(cx: SimplicialComplex, v: int, anchor: Face):
    """Strong component of the link of v containing anchor, as a complex."""
    lk = cx.link((v,))
    comps = lk.strong_components()
    if comps.count == 1:
        return lk, set(comps.components[0])
    for comp in comps.components:
        if anchor in comp:
            return build_complex(comp), set(comp)
    raise InternalInvariantError("anchor facet missing from its own link")


def strong_walk_avoiding_set(
    cx: SimplicialComplex, a: int, b: int, avoid, cap: int = DEFAULT_CANDIDATE_CAP
) -> WalkCertificate:
    """Witnessed walk joining a and b that avoids any set of fewer than 2d-2 vertices.

    Requires a flag pseudomanifold with facets of size d.  Unlike the
    face-avoiding walk, the avoided set here is arbitrary; the facet size
    alone bounds how much can be dodged.
    """
    fl = cx.is_flag(cap)
    if not fl:
        raise ClassificationError("flag", witness=fl.witness)
    pm = cx.is_pseudomanifold()
    if not pm:
        raise ClassificationError("pseudomanifold", witness=pm.witness)
    if cx.dimension < 1:
        raise InputError("walks need a complex of dimension at least one")
    avoid = frozenset(avoid)
    vset = set(cx.vertices)
    if not avoid <= vset:
        raise InputError(f"avoided labels {sorted(avoid - vset)} are not vertices")
    for x in (a, b):
        if x not in vset:
            raise InputError(f"{x!r} is not a vertex")
        if x in avoid:
            raise InputError(f"endpoint {x} lies in the avoided set")
    d = cx.dimension + 1
    if len(avoid) > 2 * d - 3:
        raise ClassificationError(
            "avoid-set",
            witness=tuple(sorted(avoid)),
            message=f"avoided set must have fewer than {2 * d - 2} vertices",
        )
    nodes, wits = _avoiding_walk(cx, a, b, avoid, 0, d, cap)
    return WalkCertificate(walk=Walk(tuple(nodes)), witness_facets=tuple(wits))


def _avoiding_walk(cx, a, b, avoid, depth, max_depth, cap):
    """Recursive engine behind strong_walk_avoiding_set.

    Vertices of the avoided set that are adjacent to nearly all of it form
    a clique, hence a face; the face-avoiding walk handles that part.  The
    remaining avoided vertices are walked around one at a time inside a
    strong component of their link, which is again flag and a
    pseudomanifold of one dimension lower, so the same routine applies.
    """
    if depth > max_depth:
        raise InternalInvariantError("avoidance recursion exceeded the facet size")
    if depth > 0:
        # at depth zero the public wrapper has already classified the input
        if not cx.is_flag(cap):
            raise InternalInvariantError("link component lost flagness")
        if not cx.is_pseudomanifold():
            raise InternalInvariantError("link component is not a pseudomanifold")
    d = cx.dimension + 1
    adj = _graph_adjacency(cx)
    core_set = frozenset(
        x for x in avoid if len(adj[x] & avoid) >= 2 * d - 4
    )
    if core_set and not cx.has_face(tuple(sorted(core_set))):
        raise InternalInvariantError("densely joined avoided vertices are not a face")
    base = strong_walk_avoiding(cx, a, b, core_set)
    nodes = list(base.walk.nodes)
    wits = list(base.witness_facets)

    i = 0
    while i < len(nodes):
        v = nodes[i]
        if v not in avoid:
            i += 1
            continue
        if i == 0 or i == len(nodes) - 1:
            raise InternalInvariantError("avoided vertex surfaced at a walk endpoint")
        if nodes[i + 1] in avoid:
            # split the avoided pair with a clean vertex from the edge link
            e = (v, nodes[i + 1]) if v < nodes[i + 1] else (nodes[i + 1], v)
            anchor = tuple(x for x in wits[i] if x not in e)
            lk = cx.link(e)
            comps = lk.strong_components()
            gamma = None
            for comp in comps.components:
                if anchor in set(comp):
                    gamma = comp
                    break
            if gamma is None:
                raise InternalInvariantError("witness missing from the edge link")
            gamma_vertices = sorted({x for f in gamma for x in f})
            clean = [x for x in gamma_vertices if x not in avoid]
            if not clean:
                raise InternalInvariantError(
                    "edge link component contains avoided vertices only"
                )
            u = clean[0]
            fu = min(f for f in gamma if u in f)
            new_witness = tuple(sorted(fu + e))
            nodes.insert(i + 1, u)
            wits[i : i + 1] = [new_witness, new_witness]
            continue
        prev, nxt = nodes[i - 1], nodes[i + 1]
        anchor = tuple(x for x in wits[i - 1] if x != v)
        lam, lam_facets = _component_complex(cx, v, anchor)
        if tuple(x for x in wits[i] if x != v) not in lam_facets:
            raise InternalInvariantError(
                "consecutive witnesses straddle link components"
            )
        tau = avoid & set(lam.vertices)
        if len(tau) > 2 * (d - 1) - 3:
            raise InternalInvariantError("link component keeps too much avoided mass")
        if prev == nxt:
            # spike: the walk enters and leaves through the same vertex
            del nodes[i : i + 2]
            del wits[i - 1 : i + 1]
            if 0 < i - 1 < len(nodes) - 1:
                if not _same_star_component(cx, nodes[i - 1], wits[i - 2], wits[i - 1]):
                    raise InternalInvariantError(
                        "spike removal broke the walk at its junction"
                    )
            continue
        mid_nodes, mid_wits = _avoiding_walk(
            lam, prev, nxt, tau, depth + 1, max_depth, cap
        )
        lifted = [tuple(sorted(w + (v,))) for w in mid_wits]
        if not lifted:
            raise InternalInvariantError("reroute produced no steps for distinct ends")
        if i - 1 > 0:
            if not _same_star_component(cx, prev, wits[i - 2], lifted[0]):
                raise InternalInvariantError("reroute broke the walk entering the detour")
        if i + 1 < len(nodes) - 1:
            if not _same_star_component(cx, nxt, lifted[-1], wits[i + 1]):
                raise InternalInvariantError("reroute broke the walk leaving the detour")
        nodes[i - 1 : i + 2] = mid_nodes
        wits[i - 1 : i + 1] = lifted
    return nodes, wits
