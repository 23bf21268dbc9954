"""Frames: induced, almost-tree scaffolds from which long anti-complete
induced A-paths are extracted.

A frame is a tuple (F, T, A_F, X, Y, Y~, Abar) over a host graph: F an induced
subgraph, T a spanning subcubic tree of F whose degree-1 vertices are exactly
the terminals inside F, X its degree-3 hubs, Y the part of F close to leaves
and hubs, Y~ the outside neighbourhood of Y, and Abar the terminals not yet in
the frame. Eleven axioms (A1..A11 below) pin the structure down; they are
machine-checked after every construction step, never assumed.

The construction is greedy: start from a shortest long induced A-path, then
repeatedly attach a shortest path from an unprocessed terminal to the frame
(avoiding Y~), each attachment adding one leaf and one hub. The loop stops
exactly when Y~ separates the remaining terminals from F, which is what the
solver's recursion needs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Graph,
    Path,
    VertexSet,
    anti_complete,
    ball,
    check_vertex_set,
    induced_subgraph,
    is_induced_path,
)
from .search import DEFAULT_BUDGET, shortest_long_induced_apath

# Successful validations, counted so the acceptance suite can confirm the
# axioms were actually exercised during a corpus run.
validation_stats = {"init_frame": 0, "extend_frame": 0, "hub_tree": 0}


class FrameInvariantError(AssertionError):
    """A frame or extension path failed its invariants: upstream bug or
    breached precondition, never a recoverable condition."""

    def __init__(self, message: str, violations: list["Violation"] | None = None):
        details = "" if not violations else "\n" + "\n".join(map(str, violations))
        super().__init__(message + details)
        self.violations = violations or []


@dataclass(frozen=True)
class Violation:
    """One failed axiom, with a witness naming the offending vertex/edge/pair."""

    axiom: str
    witness: object
    message: str

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message} (witness: {self.witness!r})"


@dataclass(frozen=True)
class Frame:
    host: Graph
    f_vertices: VertexSet
    tree_edges: frozenset[tuple[int, int]]
    a_f: VertexSet
    hubs: VertexSet
    y: VertexSet
    y_tilde: VertexSet
    a_bar: VertexSet
    ell: int

    @property
    def ell_hat(self) -> int:
        return max(self.ell, 3)

    @property
    def leaf_count(self) -> int:
        return len(self.a_f)

    @property
    def terminals(self) -> VertexSet:
        """The full terminal set of the instance: frame leaves plus the rest."""
        return self.a_f | self.a_bar


@dataclass(frozen=True)
class HubTree:
    """The (F, T, leaves, hubs) restriction of a frame, as a standalone graph."""

    graph: Graph
    tree_edges: frozenset[tuple[int, int]]
    leaves: VertexSet
    hubs: VertexSet
    ell: int


def _canonical_edges(edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) if u < v else (v, u) for u, v in edges)


def _path_edges(p: Path) -> frozenset[tuple[int, int]]:
    return _canonical_edges(zip(p, p[1:]))


def _tree_adjacency(edges: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nb in adj.values():
        nb.sort()
    return adj


def _bfs_levels(
    adj: dict[int, list[int]] | Graph, sources: Iterable[int], cutoff: int | None = None
) -> dict[int, int]:
    """Distances from a source set, over a dict adjacency or a Graph."""
    neighbors = adj.neighbors if isinstance(adj, Graph) else (
        lambda v: adj.get(v, ())
    )
    level = {s: 0 for s in sources}
    queue = deque(sorted(level))
    while queue:
        v = queue.popleft()
        d = level[v] + 1
        if cutoff is not None and d > cutoff:
            continue
        for w in neighbors(v):
            if w not in level:
                level[w] = d
                queue.append(w)
    return level


def _check_spanning_subcubic_tree(
    vertices: VertexSet, edges: frozenset[tuple[int, int]], axiom: str
) -> list[Violation]:
    viol = []
    for u, v in edges:
        if u not in vertices or v not in vertices:
            viol.append(Violation(axiom, (u, v), "tree edge leaves the vertex set"))
            return viol
    adj = _tree_adjacency(edges)
    for v, nb in adj.items():
        if len(nb) > 3:
            viol.append(Violation(axiom, v, f"tree degree {len(nb)} exceeds 3"))
    if len(edges) != max(len(vertices) - 1, 0):
        viol.append(
            Violation(axiom, len(edges), f"{len(edges)} edges cannot span {len(vertices)} vertices")
        )
    elif vertices:
        start = min(vertices)
        reached = _bfs_levels(adj, [start])
        missing = vertices - reached.keys()
        if missing:
            viol.append(Violation(axiom, min(missing), "tree does not reach this vertex"))
    return viol


def _degree_set(vertices: VertexSet, adj_source, degree: int) -> VertexSet:
    if isinstance(adj_source, Graph):
        return frozenset(v for v in vertices if adj_source.degree(v) == degree)
    return frozenset(v for v in vertices if len(adj_source.get(v, ())) == degree)


def validate_frame(fr: Frame) -> list[Violation]:
    """Check axioms A1..A11; an empty list means the frame is valid.

    The ambient terminal set is reconstructed as a_f | a_bar, which is
    faithful because A3/A7 make those two fields a partition of it.
    """
    g = fr.host
    viol: list[Violation] = []

    bad = [v for v in fr.f_vertices if not (0 <= v < g.n)]
    if bad:
        viol.append(Violation("A1", bad[0], "frame vertex outside the host graph"))
        return viol

    f_graph, new_to_old = induced_subgraph(g, fr.f_vertices)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}

    # A2: spanning subcubic tree, contained in F
    for u, v in fr.tree_edges:
        if u in fr.f_vertices and v in fr.f_vertices and not g.has_edge(u, v):
            viol.append(Violation("A2", (u, v), "tree edge is not an edge of the host"))
    viol.extend(_check_spanning_subcubic_tree(fr.f_vertices, fr.tree_edges, "A2"))
    if any(x.axiom == "A2" for x in viol):
        return viol
    tree_adj = _tree_adjacency(fr.tree_edges)

    terminals = fr.a_f | fr.a_bar

    # A3: a_f = terminals inside F = degree-1 vertices of T and of F
    if fr.a_f != terminals & fr.f_vertices:
        off = fr.a_f ^ (terminals & fr.f_vertices)
        viol.append(Violation("A3", min(off), "a_f is not the terminal set of F"))
    for name, deg1 in (
        ("tree", _degree_set(fr.f_vertices, tree_adj, 1)),
        ("frame", frozenset(v for v in fr.f_vertices
                            if len(g.neighbor_set(v) & fr.f_vertices) == 1)),
    ):
        if deg1 != fr.a_f:
            off = deg1 ^ fr.a_f
            viol.append(Violation("A3", min(off), f"a_f differs from {name} degree-1 vertices"))

    # A4: hubs = degree-3 tree vertices
    deg3 = _degree_set(fr.f_vertices, tree_adj, 3)
    if deg3 != fr.hubs:
        off = deg3 ^ fr.hubs
        viol.append(Violation("A4", min(off), "hubs differ from tree degree-3 vertices"))

    # A5: y = vertices of F within ell_hat of hubs and leaves, measured in F
    centers_new = [old_to_new[v] for v in (fr.hubs | fr.a_f) if v in old_to_new]
    level = _bfs_levels(f_graph, centers_new, cutoff=fr.ell_hat)
    expected_y = frozenset(
        new_to_old[v] for v, d in level.items() if d <= fr.ell_hat
    )
    if expected_y != fr.y:
        off = expected_y ^ fr.y
        viol.append(Violation("A5", min(off), "y is not the ell_hat ball in F around hubs and leaves"))

    # A6: y_tilde = N_G[y] outside F
    expected_yt = ball(g, fr.y, 1) - fr.f_vertices
    if expected_yt != fr.y_tilde:
        off = expected_yt ^ fr.y_tilde
        viol.append(Violation("A6", min(off), "y_tilde is not N[y] minus the frame"))

    # A7: frame leaves and unprocessed terminals partition the terminal set
    if fr.a_f & fr.a_bar:
        viol.append(Violation("A7", min(fr.a_f & fr.a_bar), "a_f and a_bar overlap"))
    if fr.a_bar & fr.f_vertices:
        viol.append(Violation("A7", min(fr.a_bar & fr.f_vertices), "a_bar vertex inside the frame"))

    # A8: every non-tree edge of F sits within tree-distance 2 of a common hub
    tree_dist_from_hub = {x: _bfs_levels(tree_adj, [x], cutoff=2) for x in fr.hubs}
    for u in sorted(fr.f_vertices):
        for v in g.neighbors(u):
            if v <= u or v not in fr.f_vertices:
                continue
            e = (u, v)
            if e in fr.tree_edges:
                continue
            if not any(
                u in lv and v in lv for lv in tree_dist_from_hub.values()
            ):
                viol.append(Violation("A8", e, "non-tree frame edge far from every hub"))

    # A9: outside vertices see the frame only locally (tree-distance <= 2)
    pair_levels: dict[int, dict[int, int]] = {}
    for v in range(g.n):
        if v in fr.f_vertices or v in fr.y_tilde:
            continue
        fn = sorted(g.neighbor_set(v) & fr.f_vertices)
        for i in range(len(fn)):
            if fn[i] not in pair_levels:
                pair_levels[fn[i]] = _bfs_levels(tree_adj, [fn[i]], cutoff=2)
            lv = pair_levels[fn[i]]
            for j in range(i + 1, len(fn)):
                if fn[j] not in lv:
                    viol.append(
                        Violation("A9", (v, fn[i], fn[j]),
                                  "outside vertex with tree-distant frame neighbours")
                    )

    # A10/A11: leaves pairwise far (>= ell), hubs pairwise far (>= 3), in F.
    # Centers outside F are already A3/A4 violations; skip them here.
    def f_dist_check(centers: VertexSet, lower: int, axiom: str, what: str):
        centers_sorted = sorted(c for c in centers if c in old_to_new)
        for i, c in enumerate(centers_sorted):
            lv = _bfs_levels(f_graph, [old_to_new[c]], cutoff=lower - 1)
            for other in centers_sorted[i + 1:]:
                d = lv.get(old_to_new[other])
                if d is not None and d < lower:
                    viol.append(Violation(axiom, (c, other), f"{what} at distance {d} < {lower}"))

    f_dist_check(fr.a_f, fr.ell, "A10", "frame leaves")
    f_dist_check(fr.hubs, 3, "A11", "hubs")

    return viol


def check_frame_claims(fr: Frame) -> list[Violation]:
    """Size bounds every valid frame must satisfy, checked independently:
    |hubs| = p - 2, |y| <= (4*ell_hat + 14)*p, and y_tilde within distance
    ell_hat + 1 of terminals and hubs."""
    viol = []
    p = fr.leaf_count
    if len(fr.hubs) != p - 2:
        viol.append(Violation("SizeX", len(fr.hubs), f"|hubs| != p - 2 = {p - 2}"))
    bound = (4 * fr.ell_hat + 14) * p
    if len(fr.y) > bound:
        viol.append(Violation("SizeY", len(fr.y), f"|y| = {len(fr.y)} > {bound}"))
    reach = ball(fr.host, fr.terminals | fr.hubs, fr.ell_hat + 1)
    stray = fr.y_tilde - (ball(fr.host, fr.y, 1) & reach)
    if stray:
        viol.append(Violation("Ytilde", min(stray), "y_tilde vertex outside its two covering balls"))
    return viol


def _assert_valid(fr: Frame, where: str) -> Frame:
    violations = validate_frame(fr)
    if not violations:
        violations = check_frame_claims(fr)
    if violations:
        raise FrameInvariantError(f"{where} produced an invalid frame", violations)
    validation_stats[where] += 1
    return fr


def _regions(
    g: Graph, f_vertices: VertexSet, centers: VertexSet, ell_hat: int
) -> tuple[VertexSet, VertexSet]:
    """Recompute (y, y_tilde) from scratch for the given frame vertex set."""
    f_graph, new_to_old = induced_subgraph(g, f_vertices)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    level = _bfs_levels(f_graph, [old_to_new[c] for c in centers], cutoff=ell_hat)
    y = frozenset(new_to_old[v] for v in level)
    y_tilde = ball(g, y, 1) - f_vertices
    return y, y_tilde


def init_frame(
    g: Graph, a: Iterable[int], ell: int, budget: int = DEFAULT_BUDGET
) -> Frame | None:
    """Frame around a shortest induced A-path of length >= ell, or None.

    Precondition (established upstream by eliminating intermediate lengths):
    every induced A-path of length >= ell has length >= 2*ell. Validation
    failure here signals that breach, not a recoverable state.
    """
    a_set = check_vertex_set(g, a)
    path = shortest_long_induced_apath(g, a_set, ell, budget)
    if path is None:
        return None
    f_vertices = frozenset(path)
    endpoints = frozenset((path[0], path[-1]))
    ell_hat = max(ell, 3)
    y, y_tilde = _regions(g, f_vertices, endpoints, ell_hat)
    fr = Frame(
        host=g,
        f_vertices=f_vertices,
        tree_edges=_path_edges(path),
        a_f=endpoints,
        hubs=frozenset(),
        y=y,
        y_tilde=y_tilde,
        a_bar=a_set - endpoints,
        ell=ell,
    )
    return _assert_valid(fr, "init_frame")


def _check_extension_path(g: Graph, fr: Frame, p: Path) -> None:
    """Assert the seven properties every shortest extension path must have.

    BFS-minimality implies all of them; checking explicitly guards the BFS
    tie-breaking choices. Failures raise, naming the property.
    """
    ps = frozenset(p)
    checks: list[tuple[str, bool, object]] = [
        ("P1", ps & fr.a_bar == {p[0]}, p[0]),
        ("P2", ps & fr.f_vertices == {p[-1]}, p[-1]),
        ("P3", is_induced_path(g, p), p),
        ("P4", anti_complete(g, p[:-2], fr.f_vertices), p),
        ("P5", not (ps & (fr.y | fr.y_tilde)), ps & (fr.y | fr.y_tilde)),
    ]
    pos = {v: i for i, v in enumerate(p)}
    tail = frozenset(p[-3:])
    p6 = p7 = True
    witness6: object = None
    witness7: object = None
    for v in range(g.n):
        if v in fr.f_vertices or v in fr.y_tilde or v in ps:
            continue
        nb = g.neighbor_set(v)
        on_p = sorted(nb & ps, key=pos.__getitem__)
        if len(on_p) >= 2 and pos[on_p[-1]] - pos[on_p[0]] > 2:
            p6, witness6 = False, (v, on_p[0], on_p[-1])
        if (nb & fr.f_vertices) and (nb & (ps - tail)):
            p7, witness7 = False, v
    checks.append(("P6", p6, witness6))
    checks.append(("P7", p7, witness7))
    checks.append(("P-hub", p[-1] not in fr.hubs | fr.a_f, p[-1]))
    failed = [
        Violation(name, witness, "extension path property failed")
        for name, ok, witness in checks
        if not ok
    ]
    if failed:
        raise FrameInvariantError("find_extension produced a bad path", failed)


def find_extension(g: Graph, a: Iterable[int], fr: Frame) -> Path | None:
    """Shortest path from an unprocessed terminal to the frame, avoiding y_tilde.

    Returns None exactly when y_tilde separates a_bar from the frame, which is
    the loop's termination condition. The returned path starts at an a_bar
    vertex, ends at its first frame contact, and satisfies P1..P7 (asserted).
    """
    sources = sorted(fr.a_bar - fr.y_tilde)
    if not sources:
        return None
    parent: dict[int, int] = {s: -1 for s in sources}
    frontier = sources
    while frontier:
        nxt: list[int] = []
        hits: list[int] = []
        for v in frontier:
            for w in g.neighbors(v):
                if w in parent or w in fr.y_tilde:
                    continue
                parent[w] = v
                if w in fr.f_vertices:
                    hits.append(w)
                else:
                    nxt.append(w)
        if hits:
            path = [min(hits)]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            path.reverse()
            result = tuple(path)
            _check_extension_path(g, fr, result)
            return result
        frontier = nxt
    return None


def extend_frame(g: Graph, a: Iterable[int], fr: Frame, p: Path) -> Frame:
    """The frame grown by one extension path: one new leaf, one new hub.

    The attachment vertex p[-1] had tree-degree 2 and becomes a hub of
    degree 3; y and y_tilde are recomputed from scratch (they are global
    definitions, not locally updatable ones). The result is re-validated.
    """
    assert g == fr.host, "extension must happen in the frame's host graph"
    assert check_vertex_set(g, a) == fr.terminals, "terminal set changed under the frame"
    v0, vm = p[0], p[-1]
    f_vertices = fr.f_vertices | frozenset(p)
    a_f = fr.a_f | {v0}
    hubs = fr.hubs | {vm}
    y, y_tilde = _regions(g, f_vertices, a_f | hubs, fr.ell_hat)
    new = Frame(
        host=g,
        f_vertices=f_vertices,
        tree_edges=fr.tree_edges | _path_edges(p),
        a_f=a_f,
        hubs=hubs,
        y=y,
        y_tilde=y_tilde,
        a_bar=fr.a_bar - {v0},
        ell=fr.ell,
    )
    _assert_valid(new, "extend_frame")
    assert new.leaf_count == fr.leaf_count + 1
    return new


def build_maximal_frame(
    g: Graph, a: Iterable[int], ell: int, budget: int = DEFAULT_BUDGET, observer=None
) -> Frame | None:
    """Greedy construction: init, then extend until no extension path exists.

    Greedy non-extendability is all the downstream separation argument needs;
    a globally leaf-maximum frame is not required. Each step increases the
    leaf count by one, so the loop ends within |a| iterations.
    """
    fr = init_frame(g, a, ell, budget)
    if fr is None:
        return None
    if observer is not None:
        observer(fr)
    while (p := find_extension(g, a, fr)) is not None:
        fr = extend_frame(g, a, fr, p)
        if observer is not None:
            observer(fr)
    return fr


def validate_hub_tree(ht: HubTree) -> list[Violation]:
    """Check hub-tree properties H1..H7; empty list means valid."""
    g = ht.graph
    viol: list[Violation] = []
    vertices = frozenset(range(g.n))
    for u, v in ht.tree_edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            viol.append(Violation("H1", (u, v), "tree edge outside the graph"))
            return viol
        if not g.has_edge(u, v):
            viol.append(Violation("H2", (u, v), "tree edge is not a graph edge"))
    viol.extend(_check_spanning_subcubic_tree(vertices, ht.tree_edges, "H2"))
    if any(x.axiom == "H2" for x in viol):
        return viol
    tree_adj = _tree_adjacency(ht.tree_edges)

    tree_deg1 = _degree_set(vertices, tree_adj, 1)
    graph_deg1 = frozenset(v for v in vertices if g.degree(v) == 1)
    if ht.leaves != tree_deg1 or ht.leaves != graph_deg1:
        off = (ht.leaves ^ tree_deg1) | (ht.leaves ^ graph_deg1)
        viol.append(Violation("H3", min(off), "leaves differ from the degree-1 vertices"))
    deg3 = _degree_set(vertices, tree_adj, 3)
    if ht.hubs != deg3:
        viol.append(Violation("H4", min(ht.hubs ^ deg3), "hubs differ from tree degree-3 vertices"))

    def pair_check(centers: VertexSet, lower: int, axiom: str):
        for c in sorted(centers):
            lv = _bfs_levels(g, [c], cutoff=lower - 1)
            for other in sorted(centers):
                if other > c and lv.get(other, lower) < lower:
                    viol.append(Violation(axiom, (c, other), f"distance below {lower}"))

    pair_check(ht.leaves, ht.ell, "H5")
    pair_check(ht.hubs, 3, "H6")

    hub_balls = {x: _bfs_levels(tree_adj, [x], cutoff=2) for x in ht.hubs}
    for u, v in g.edges():
        if (u, v) in ht.tree_edges:
            continue
        if not any(u in lv and v in lv for lv in hub_balls.values()):
            viol.append(Violation("H7", (u, v), "non-tree edge far from every hub"))
    return viol


def frame_to_hub_tree(fr: Frame) -> tuple[HubTree, tuple[int, ...]]:
    """The four-component restriction of a frame, relabelled to dense ids.

    Returns the hub tree plus the new-id -> host-id mapping (sorted order, so
    the relabelling is monotone).
    """
    f_graph, new_to_old = induced_subgraph(fr.host, fr.f_vertices)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    ht = HubTree(
        graph=f_graph,
        tree_edges=_canonical_edges(
            (old_to_new[u], old_to_new[v]) for u, v in fr.tree_edges
        ),
        leaves=frozenset(old_to_new[v] for v in fr.a_f),
        hubs=frozenset(old_to_new[v] for v in fr.hubs),
        ell=fr.ell,
    )
    return ht, new_to_old


def leaf_paths(
    tree_edges: Iterable[tuple[int, int]], leaves: Iterable[int]
) -> list[Path]:
    """floor(p/2) pairwise vertex-disjoint leaf-to-leaf paths of a subcubic tree.

    Strategy: root at the smallest leaf, then repeatedly emit the path joining
    the two leaves under the deepest vertex that still has live leaves in two
    child subtrees (ties to the smallest id). Such a path never carries another
    live leaf and never disconnects the survivors, so p//2 rounds always
    succeed; the terminal round pairs the root with the last live leaf.
    """
    edges = list(tree_edges)
    vertices = sorted({v for e in edges for v in e})
    adj = _tree_adjacency(edges)
    for v in vertices:
        if len(adj[v]) > 3:
            raise ValueError(f"vertex {v} has degree {len(adj[v])}: tree is not subcubic")
    leaf_set = frozenset(leaves)
    if not vertices:
        if leaf_set:
            raise ValueError("no tree edges but leaves were named")
        return []
    if len(edges) != len(vertices) - 1:
        raise ValueError("edge count does not match a tree")
    expected = frozenset(v for v in vertices if len(adj[v]) == 1)
    if leaf_set != expected:
        raise ValueError(f"leaves {sorted(leaf_set)} are not the degree-1 vertices {sorted(expected)}")
    p = len(leaf_set)
    if p < 2:
        return []
    root = min(leaf_set)
    if vertices and len(_bfs_levels(adj, [root])) != len(vertices):
        raise ValueError("edges do not form a connected tree")

    parent: dict[int, int | None] = {root: None}
    depth = {root: 0}
    children: dict[int, list[int]] = {v: [] for v in vertices}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                children[v].append(w)
                order.append(w)

    alive_below = {v: 0 for v in vertices}
    for v in reversed(order):
        alive_below[v] = (v in leaf_set) + sum(alive_below[c] for c in children[v])
    live_children = {
        v: sum(1 for c in children[v] if alive_below[c] > 0) for v in vertices
    }
    candidates = sorted(
        (v for v in vertices if live_children[v] >= 2),
        key=lambda v: (-depth[v], v),
    )
    alive = set(leaf_set)

    def descend(c: int) -> list[int]:
        run = [c]
        while not (run[-1] in alive):
            nxt = [w for w in children[run[-1]] if alive_below[w] > 0]
            run.append(nxt[0])
        return run

    def consume(leaf: int) -> None:
        alive.discard(leaf)
        w: int | None = leaf
        while w is not None:
            alive_below[w] -= 1
            up = parent[w]
            if alive_below[w] == 0 and up is not None:
                live_children[up] -= 1
            w = up

    out: list[Path] = []
    idx = 0
    for _ in range(p // 2):
        x = None
        while idx < len(candidates):
            v = candidates[idx]
            if live_children[v] >= 2:
                x = v
                break
            idx += 1
        if x is not None:
            live = [c for c in children[x] if alive_below[c] > 0]
            arm_a = descend(live[0])
            arm_b = descend(live[1])
            path = list(reversed(arm_a)) + [x] + arm_b
        else:
            rest = alive - {root}
            assert root in alive and len(rest) == 1, "pairing invariant broken"
            other = rest.pop()
            climb = [other]
            while climb[-1] != root:
                climb.append(parent[climb[-1]])  # type: ignore[arg-type]
            path = list(reversed(climb))
        if path[0] > path[-1]:
            path.reverse()
        out.append(tuple(path))
        consume(path[0])
        consume(path[-1])
    return out


def extract_hub_tree_paths(ht: HubTree) -> list[Path]:
    """floor(p/2) pairwise anti-complete induced leaf-to-leaf paths, each of
    length >= ell.

    Tree pairing first, then each tree path is re-routed to a shortest path
    inside the subgraph induced on its own vertices, which makes it induced
    without disturbing disjointness. Every promised property is asserted on
    the outputs before returning.
    """
    violations = validate_hub_tree(ht)
    if violations:
        raise FrameInvariantError("hub tree failed validation", violations)
    validation_stats["hub_tree"] += 1
    g = ht.graph
    out: list[Path] = []
    for tree_path in leaf_paths(ht.tree_edges, ht.leaves):
        sub, new_to_old = induced_subgraph(g, tree_path)
        old_to_new = {old: new for new, old in enumerate(new_to_old)}
        parent: dict[int, int] = {old_to_new[tree_path[0]]: -1}
        queue = deque([old_to_new[tree_path[0]]])
        target = old_to_new[tree_path[-1]]
        while queue:
            v = queue.popleft()
            if v == target:
                break
            for w in sub.neighbors(v):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        rerouted = [target]
        while parent[rerouted[-1]] != -1:
            rerouted.append(parent[rerouted[-1]])
        rerouted.reverse()
        path = tuple(new_to_old[v] for v in rerouted)
        if path[0] > path[-1]:
            path = path[::-1]
        out.append(path)

    failed = []
    for i, path in enumerate(out):
        if not is_induced_path(g, path):
            failed.append(Violation("induced", path, "extracted path has a chord"))
        if len(path) - 1 < ht.ell:
            failed.append(Violation("length", path, f"length {len(path) - 1} < {ht.ell}"))
        if not (path[0] in ht.leaves and path[-1] in ht.leaves):
            failed.append(Violation("endpoints", path, "endpoint is not a leaf"))
        for j in range(i + 1, len(out)):
            if not anti_complete(g, path, out[j]):
                failed.append(Violation("anti-complete", (i, j), "extracted paths touch"))
    if failed:
        raise FrameInvariantError("hub tree path extraction broke its contract", failed)
    return sorted(out)


def extract_frame_paths(fr: Frame) -> list[Path]:
    """The hub-tree paths of a frame, translated back to host vertex ids."""
    ht, new_to_old = frame_to_hub_tree(fr)
    return [tuple(new_to_old[v] for v in path) for path in extract_hub_tree_paths(ht)]
