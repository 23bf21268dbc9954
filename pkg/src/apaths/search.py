"""Exact detection and search for A-paths and long induced A-paths.

An A-path is a path with at least one edge whose two endpoints lie in the
terminal set; interior terminal vertices are allowed unless stated otherwise.
Long induced A-path search is NP-hard in general, so everything here is an
exhaustive chordless-extension search with pruning: exact answers at desk
scale, and a node budget that turns runaway searches into explicit errors
instead of silent hangs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import (
    Graph,
    Path,
    VertexSet,
    ball,
    check_vertex_set,
    components,
    induced_subgraph,
    is_induced_path,
)

DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The exact search spent more nodes than the configured budget allows."""

    def __init__(self, budget: int, where: str):
        super().__init__(f"search budget of {budget} nodes exhausted in {where}")
        self.budget = budget
        self.where = where


class _Budget:
    __slots__ = ("remaining", "limit", "where")

    def __init__(self, limit: int, where: str):
        self.remaining = limit
        self.limit = limit
        self.where = where

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceededError(self.limit, self.where)


@dataclass(frozen=True)
class LengthRange:
    """Closed interval of path lengths; hi=None means unbounded above."""

    lo: int
    hi: int | None = None

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError(f"length bound must be nonnegative, got lo={self.lo}")
        if self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty length range [{self.lo}, {self.hi}]")

    def contains(self, length: int) -> bool:
        return length >= self.lo and (self.hi is None or length <= self.hi)


def exists_apath(g: Graph, a: Iterable[int]) -> bool:
    """True iff some connected component contains at least two terminals."""
    a_set = check_vertex_set(g, a)
    if len(a_set) < 2:
        return False
    return any(len(comp & a_set) >= 2 for comp in components(g))


def shortest_apath(g: Graph, a: Iterable[int]) -> Path | None:
    """A minimum-length path joining two distinct terminals, or None.

    The result of minimisation is necessarily chordless with no interior
    terminal; both are asserted rather than assumed. Ties are broken by the
    deterministic BFS order (smaller start vertex first, sorted adjacency).
    """
    a_set = check_vertex_set(g, a)
    if len(a_set) < 2:
        return None
    best: Path | None = None
    for s in sorted(a_set):
        if best is not None and len(best) == 2:
            break
        parent: dict[int, int] = {s: -1}
        queue = [s]
        depth = 0
        found = None
        while queue and found is None:
            depth += 1
            if best is not None and depth > len(best) - 2:
                break  # cannot strictly improve on the incumbent from this start
            nxt = []
            for v in queue:
                for w in g.neighbors(v):
                    if w in parent:
                        continue
                    parent[w] = v
                    if w in a_set:
                        found = w
                        break
                    nxt.append(w)
                if found is not None:
                    break
            queue = nxt
        if found is not None:
            path = [found]
            while path[-1] != s:
                path.append(parent[path[-1]])
            path.reverse()
            if best is None or len(path) < len(best):
                best = tuple(path)
    if best is not None:
        assert is_induced_path(g, best), "shortest A-path must be chordless"
        assert not (set(best[1:-1]) & a_set), "shortest A-path has no interior terminal"
    return best


def _terminal_path_dfs(
    g: Graph,
    a_set: VertexSet,
    lo: int,
    accept_hi: int | None,
    budget: _Budget,
    emit,
    stop_at_terminals: bool = False,
) -> None:
    """Depth-first search over chordless paths anchored at a terminal.

    Extends partial paths one vertex at a time, refusing any extension that
    would create a chord, so every visited path is induced. emit(path) is
    called whenever the tip is a second terminal and the length falls in
    [lo, accept_hi]; its return value is the new cap on path length to keep
    exploring (None for unbounded), or the string "stop" to abort.
    With stop_at_terminals, paths are never extended past a terminal tip,
    which restricts the search to A-paths without interior terminals.
    """
    n = g.n
    on_path = bytearray(n)
    interior_adj = [0] * n
    path: list[int] = []
    ext_cap = accept_hi

    class _Stop(Exception):
        pass

    def rec() -> None:
        nonlocal ext_cap
        budget.spend()
        tip = path[-1]
        plen = len(path) - 1
        at_terminal = plen >= 1 and tip in a_set
        if at_terminal and plen >= lo and (accept_hi is None or plen <= accept_hi):
            signal = emit(tuple(path))
            if signal == "stop":
                raise _Stop
            ext_cap = signal
        if ext_cap is not None and plen >= ext_cap:
            return
        if stop_at_terminals and at_terminal:
            return
        for u in g.neighbors(tip):
            interior_adj[u] += 1
        for w in g.neighbors(tip):
            if on_path[w] or interior_adj[w] > 1:
                continue
            # interior_adj[w] == 1 here: the single count comes from tip itself
            on_path[w] = 1
            path.append(w)
            rec()
            path.pop()
            on_path[w] = 0
        for u in g.neighbors(tip):
            interior_adj[u] -= 1
    try:
        for s in sorted(a_set):
            on_path[s] = 1
            path.append(s)
            rec()
            path.pop()
            on_path[s] = 0
    except _Stop:
        pass


def find_induced_apath_in_range(
    g: Graph,
    a: Iterable[int],
    length_range: LengthRange | tuple[int, int | None],
    budget: int = DEFAULT_BUDGET,
) -> Path | None:
    """Some induced A-path whose length lies in the range, or None (exact)."""
    if isinstance(length_range, tuple):
        length_range = LengthRange(*length_range)
    if length_range.lo < 1:
        raise ValueError("A-paths have at least one edge; need lo >= 1")
    a_set = check_vertex_set(g, a)
    if len(a_set) < 2:
        return None
    found: list[Path] = []

    def emit(path: Path):
        found.append(path)
        return "stop"

    _terminal_path_dfs(
        g, a_set, length_range.lo, length_range.hi,
        _Budget(budget, "find_induced_apath_in_range"), emit,
    )
    return found[0] if found else None


def has_long_induced_apath(
    g: Graph, a: Iterable[int], ell: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """Exact decision: does g contain an induced A-path of length >= ell?"""
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    if ell == 1:
        return exists_apath(g, a)
    return find_induced_apath_in_range(g, a, LengthRange(ell, None), budget) is not None


def shortest_long_induced_apath(
    g: Graph, a: Iterable[int], ell: int, budget: int = DEFAULT_BUDGET
) -> Path | None:
    """A minimum-length induced A-path among those of length >= ell, or None.

    Branch-and-bound over the chordless-extension search: once a path of some
    length is found, extensions are pruned to strictly shorter candidates, and
    a path of length exactly ell ends the search immediately.
    """
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    a_set = check_vertex_set(g, a)
    if len(a_set) < 2:
        return None
    best: list[Path] = []

    def emit(path: Path):
        if not best or len(path) < len(best[0]):
            best[:] = [path]
        if len(best[0]) - 1 == ell:
            return "stop"
        return len(best[0]) - 2  # only explore strictly shorter paths

    _terminal_path_dfs(
        g, a_set, ell, None,
        _Budget(budget, "shortest_long_induced_apath"), emit,
    )
    return best[0] if best else None


def enumerate_induced_apaths(
    g: Graph,
    a: Iterable[int],
    ell: int,
    budget: int = DEFAULT_BUDGET,
    no_interior_terminals: bool = False,
) -> list[Path]:
    """All induced A-paths of length >= ell, one orientation each, sorted."""
    a_set = check_vertex_set(g, a)
    out: set[Path] = set()

    def emit(path: Path):
        out.add(path if path[0] < path[-1] else path[::-1])
        return None

    _terminal_path_dfs(
        g, a_set, ell, None,
        _Budget(budget, "enumerate_induced_apaths"), emit,
        stop_at_terminals=no_interior_terminals,
    )
    return sorted(out)


def _max_compatible_family(
    paths: list[Path],
    path_sets: list[frozenset[int]],
    forbidden: list[frozenset[int]],
    cap: int,
    budget: _Budget,
) -> tuple[int, tuple[Path, ...]]:
    """Largest family (up to cap) of paths with pairwise disjoint constraints.

    Path i is compatible with a chosen path j iff path_sets[i] avoids
    forbidden[j]; with forbidden = closed neighbourhoods this is
    anti-completeness, with forbidden = vertex sets it is plain disjointness.
    """
    best = 0
    best_witness: tuple[Path, ...] = ()
    chosen: list[int] = []

    def rec(start: int) -> None:
        nonlocal best, best_witness
        if len(chosen) > best:
            best = len(chosen)
            best_witness = tuple(paths[i] for i in chosen)
        if best >= cap or len(chosen) + (len(paths) - start) <= best:
            return
        for i in range(start, len(paths)):
            budget.spend()
            if all(path_sets[i].isdisjoint(forbidden[j]) for j in chosen):
                chosen.append(i)
                rec(i + 1)
                chosen.pop()
                if best >= cap:
                    return

    rec(0)
    return min(best, cap), best_witness


def max_anticomplete_packing_with_witness(
    g: Graph, a: Iterable[int], ell: int, cap: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, tuple[Path, ...]]:
    """Maximum family (up to cap) of pairwise anti-complete induced A-paths of length >= ell."""
    if cap < 1:
        raise ValueError(f"need cap >= 1, got {cap}")
    b = _Budget(budget, "oracle_max_anticomplete_packing")
    paths = enumerate_induced_apaths(g, a, ell, budget=budget)
    path_sets = [frozenset(p) for p in paths]
    closed = [frozenset(ball(g, p, 1)) for p in paths]
    return _max_compatible_family(paths, path_sets, closed, cap, b)


def oracle_max_anticomplete_packing(
    g: Graph, a: Iterable[int], ell: int, cap: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Ground-truth packing number: see max_anticomplete_packing_with_witness."""
    return max_anticomplete_packing_with_witness(g, a, ell, cap, budget)[0]


def max_vertex_disjoint_apath_packing(
    g: Graph, a: Iterable[int], cap: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Classical brute-force baseline: maximum number of vertex-disjoint A-paths.

    Restricting to chordless A-paths without interior terminals loses no
    generality, since every A-path contains one on a subset of its vertices.
    """
    if cap < 1:
        raise ValueError(f"need cap >= 1, got {cap}")
    b = _Budget(budget, "max_vertex_disjoint_apath_packing")
    paths = enumerate_induced_apaths(
        g, a, 1, budget=b.remaining, no_interior_terminals=True
    )
    path_sets = [frozenset(p) for p in paths]
    size, _ = _max_compatible_family(paths, path_sets, path_sets, cap, b)
    return size


def oracle_min_ball_cover(
    g: Graph, a: Iterable[int], ell: int, r: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, VertexSet]:
    """Smallest Z such that deleting the radius-r ball around Z kills every
    induced A-path of length >= ell; found by subset enumeration by size.

    Returns (|Z|, Z) for the lexicographically first minimum Z.
    """
    a_set = check_vertex_set(g, a)
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    b = _Budget(budget, "oracle_min_ball_cover")
    for size in range(g.n + 1):
        for z in combinations(range(g.n), size):
            b.spend(g.n)
            removed = ball(g, z, r)
            keep = [v for v in range(g.n) if v not in removed]
            h, new_to_old = induced_subgraph(g, keep)
            old_to_new = {old: new for new, old in enumerate(new_to_old)}
            sub_a = [old_to_new[v] for v in a_set if v in old_to_new]
            if not has_long_induced_apath(h, sub_a, ell, budget=b.remaining):
                return size, frozenset(z)
    raise AssertionError("deleting every vertex always works")  # pragma: no cover
