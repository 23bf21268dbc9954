"""The constructive dichotomy: pack k far-apart long induced A-paths, or
produce two small hitting sets whose ball-removal kills all of them.

solve() mirrors the inductive proof step by step. Intermediate-length paths
(length in [ell, 2*ell - 1]) are peeled off first with a radius-1 ball; once
every long induced A-path has length >= 2*ell, a frame is grown greedily and
either yields enough pairwise anti-complete paths directly, or its
neighbourhood separates the leftover terminals so the recursion can continue
on a strictly smaller k. Every recursive call works on an induced subgraph
and translates its certificate back, so returned certificates always speak
the original graph's vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .frame import Frame, build_maximal_frame, extract_frame_paths
from .graph import (
    Graph,
    Path,
    VertexSet,
    anti_complete,
    ball,
    check_vertex_set,
    components,
    induced_subgraph,
    single_source_distances,
)
from .search import (
    DEFAULT_BUDGET,
    LengthRange,
    find_induced_apath_in_range,
    has_long_induced_apath,
    shortest_long_induced_apath,
)


@dataclass(frozen=True)
class SolveParams:
    k: int
    ell: int
    node_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"need k >= 0, got {self.k}")
        if self.ell < 1:
            raise ValueError(f"need ell >= 1, got {self.ell}")
        if self.node_budget < 1:
            raise ValueError(f"need a positive node budget, got {self.node_budget}")

    @property
    def ell_hat(self) -> int:
        return max(self.ell, 3)

    def cover_radius(self) -> int:
        """Ball radius for the second hitting set: max(ell + 1, 4)."""
        return self.ell_hat + 1

    def z1_limit(self) -> int:
        return (12 * self.ell_hat + 42) * max(self.k - 1, 0)

    def z2_limit(self) -> int:
        return 4 * max(self.k - 1, 0)


@dataclass(frozen=True)
class Packing:
    paths: tuple[Path, ...]


@dataclass(frozen=True)
class Cover:
    z1: VertexSet
    z2: VertexSet
    r1: int
    r2: int


Certificate = Union[Packing, Cover]

FrameObserver = Callable[[Frame], None]


def _translate_path(path: Path, new_to_old: tuple[int, ...]) -> Path:
    return tuple(new_to_old[v] for v in path)


def _translate_certificate(cert: Certificate, new_to_old: tuple[int, ...]) -> Certificate:
    if isinstance(cert, Packing):
        return Packing(tuple(_translate_path(p, new_to_old) for p in cert.paths))
    return Cover(
        z1=frozenset(new_to_old[v] for v in cert.z1),
        z2=frozenset(new_to_old[v] for v in cert.z2),
        r1=cert.r1,
        r2=cert.r2,
    )


def _sub_instance(
    g: Graph, a: VertexSet, keep: Iterable[int]
) -> tuple[Graph, VertexSet, tuple[int, ...]]:
    h, new_to_old = induced_subgraph(g, keep)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    sub_a = frozenset(old_to_new[v] for v in a if v in old_to_new)
    return h, sub_a, new_to_old


def solve(
    g: Graph,
    a: Iterable[int],
    params: SolveParams,
    frame_observer: FrameObserver | None = None,
) -> Certificate:
    """Either a Packing of k paths or a Cover (z1, z2) within the size bounds.

    The recursion strictly decreases k, so it terminates on every input. A
    returned Cover satisfies the strong intersection form: removing
    N[z1] & N[z2, r2] already leaves no induced A-path of length >= ell (and
    hence so does removing either ball family alone). frame_observer, when
    given, is called with every frame the construction passes through.
    """
    a_set = check_vertex_set(g, a)
    k, ell = params.k, params.ell
    budget = params.node_budget
    radius = params.cover_radius()

    if k == 0:
        return Packing(())
    if not has_long_induced_apath(g, a_set, ell, budget):
        return Cover(frozenset(), frozenset(), 1, radius)
    if k == 1:
        path = shortest_long_induced_apath(g, a_set, ell, budget)
        assert path is not None
        return Packing((path,))

    def recurse(sub_g: Graph, sub_a: VertexSet, new_k: int) -> Certificate:
        return solve(sub_g, sub_a, SolveParams(new_k, ell, budget), frame_observer)

    mid = find_induced_apath_in_range(g, a_set, LengthRange(ell, 2 * ell - 1), budget)
    if mid is not None:
        keep = [v for v in range(g.n) if v not in ball(g, mid, 1)]
        h, sub_a, new_to_old = _sub_instance(g, a_set, keep)
        inner = _translate_certificate(recurse(h, sub_a, k - 1), new_to_old)
        if isinstance(inner, Packing):
            return Packing((mid,) + inner.paths)
        z1 = inner.z1 | frozenset(mid)
        z2 = inner.z2 | {mid[0], mid[-1]}
        assert len(z1) <= params.z1_limit() and len(z2) <= params.z2_limit()
        return Cover(z1, z2, 1, radius)

    fr = build_maximal_frame(g, a_set, ell, budget, observer=frame_observer)
    assert fr is not None, "a long induced A-path exists, so a frame must too"
    half = fr.leaf_count // 2

    if half >= k:
        paths = extract_frame_paths(fr)
        return Packing(tuple(sorted(paths)[:k]))

    remainder_components = [
        comp
        for comp in components_after_removal(g, fr.y_tilde)
        if comp & fr.a_bar
    ]
    keep = sorted(set().union(*remainder_components)) if remainder_components else []
    assert anti_complete(g, keep, fr.f_vertices), "remainder must be separated from the frame"
    h, sub_a, new_to_old = _sub_instance(g, a_set, keep)
    inner = _translate_certificate(recurse(h, sub_a, k - half), new_to_old)
    if isinstance(inner, Packing):
        frame_paths = extract_frame_paths(fr)
        return Packing(tuple(sorted(frame_paths + list(inner.paths))))
    z1 = inner.z1 | fr.y
    z2 = inner.z2 | fr.a_f | fr.hubs
    assert len(z1) <= params.z1_limit() and len(z2) <= params.z2_limit()
    return Cover(z1, z2, 1, radius)


def components_after_removal(g: Graph, removed: VertexSet) -> list[VertexSet]:
    """Connected components of g minus a vertex set, in original ids."""
    keep = [v for v in range(g.n) if v not in removed]
    h, new_to_old = induced_subgraph(g, keep)
    return [frozenset(new_to_old[v] for v in comp) for comp in components(h)]


def combine_check_theorem_forms(
    cert: Cover, g: Graph, a: Iterable[int], params: SolveParams
) -> tuple[bool, bool]:
    """Check the two single-set theorem forms implied by a Cover.

    Returns (holds_78_form, holds_4balls_form): whether g - N[z1] and
    g - N[z2, max(ell+1, 4)] are each free of long induced A-paths with the
    advertised sizes. At ell = 1 the z1 bound specialises to 78*(k-1) and the
    z2 radius to 4.
    """
    a_set = check_vertex_set(g, a)

    def removal_is_clean(z: VertexSet, radius: int, limit: int) -> bool:
        if len(z) > limit:
            return False
        keep = [v for v in range(g.n) if v not in ball(g, z, radius)]
        h, sub_a, _ = _sub_instance(g, a_set, keep)
        return not has_long_induced_apath(h, sub_a, params.ell, params.node_budget)

    return (
        removal_is_clean(cert.z1, cert.r1, params.z1_limit()),
        removal_is_clean(cert.z2, cert.r2, params.z2_limit()),
    )


@dataclass(frozen=True)
class PowerGraphMap:
    """A graph, its d-th power, and a short witness path per power edge."""

    base: Graph
    d: int
    powered: Graph
    witness: dict[tuple[int, int], Path]

    def witness_for(self, u: int, v: int) -> Path:
        """The stored base-graph path realising the power edge uv, oriented u -> v."""
        key = (u, v) if u < v else (v, u)
        path = self.witness[key]
        return path if path[0] == u else path[::-1]


def reduce_to_d3(g: Graph, d: int) -> PowerGraphMap:
    """Build the d-th power of g with a shortest base path witnessing each new edge.

    This is the reduction showing that far-apart path packing at distance d
    follows from the d = 3 case on the powered graph: power paths lift back
    to base paths along the witnesses.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    witness: dict[tuple[int, int], Path] = {}
    edges = []
    for u in range(g.n):
        dist_u = single_source_distances(g, u)
        parents: dict[int, int] = {u: -1}
        order = sorted(
            (v for v in range(g.n) if 0 < dist_u[v] <= d),
            key=lambda v: (dist_u[v], v),
        )
        for v in order:
            best = min(
                (w for w in g.neighbors(v) if dist_u[w] == dist_u[v] - 1),
            )
            parents[v] = best
        for v in order:
            if v < u:
                continue
            edges.append((u, v))
            path = [v]
            while parents[path[-1]] != -1:
                path.append(parents[path[-1]])
            witness[(u, v)] = tuple(reversed(path))
    return PowerGraphMap(base=g, d=d, powered=Graph(g.n, edges), witness=witness)


def lift_path(pmap: PowerGraphMap, p_h: Path) -> Path:
    """A base-graph path with the same endpoints, inside the union of the
    witness paths of p_h's edges; its length is at most d times p_h's."""
    if len(p_h) == 1:
        return p_h
    allowed: set[int] = set()
    for u, v in zip(p_h, p_h[1:]):
        if not pmap.powered.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the powered graph")
        allowed.update(pmap.witness_for(u, v))
    g = pmap.base
    start, goal = p_h[0], p_h[-1]
    parent = {start: -1}
    queue = [start]
    while queue:
        nxt = []
        for v in queue:
            for w in g.neighbors(v):
                if w in allowed and w not in parent:
                    parent[w] = v
                    nxt.append(w)
        if goal in parent:
            break
        queue = nxt
    assert goal in parent, "witness union must connect the endpoints"
    path = [goal]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return tuple(reversed(path))
