"""Independent certificate verification.

Nothing here trusts the solver: balls, induced subgraphs, and path searches
are recomputed from the raw certificate against the original instance.
Reports are structured per-check data with witnesses, so a failing test names
exactly what broke instead of returning a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .generators import complete_instance, subdivided_complete_instance
from .graph import (
    Graph,
    Path,
    VertexSet,
    anti_complete,
    ball,
    check_vertex_set,
    induced_subgraph,
    is_induced_path,
    is_path,
)
from .search import (
    DEFAULT_BUDGET,
    LengthRange,
    find_induced_apath_in_range,
    oracle_max_anticomplete_packing,
    oracle_min_ball_cover,
)
from .solver import Certificate, Packing, SolveParams


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: object = None

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAIL"
        extra = "" if self.ok or self.witness is None else f" witness={self.witness!r}"
        return f"{self.name}: {status}{extra}"


@dataclass
class Report:
    kind: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, witness: object = None) -> None:
        self.checks.append(Check(name, bool(ok), witness))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "ok": c.ok, "witness": _jsonable(c.witness)}
                for c in self.checks
            ],
        }


def _jsonable(value):
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def verify_packing(
    g: Graph,
    a: Iterable[int],
    params: SolveParams,
    paths: Iterable[Path],
) -> Report:
    """Check a claimed packing: k paths, each a valid induced A-path of
    length >= ell, pairwise anti-complete."""
    a_set = check_vertex_set(g, a)
    paths = [tuple(p) for p in paths]
    report = Report("packing")
    report.add("count", len(paths) == params.k, (len(paths), params.k))
    for i, p in enumerate(paths):
        report.add(f"path[{i}].valid", is_path(g, p), p)
        report.add(f"path[{i}].induced", is_induced_path(g, p), p)
        report.add(
            f"path[{i}].endpoints_in_terminals",
            len(p) >= 2 and p[0] in a_set and p[-1] in a_set,
            (p[0], p[-1]),
        )
        report.add(f"path[{i}].length", len(p) - 1 >= params.ell, len(p) - 1)
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            report.add(
                f"pair[{i},{j}].anti_complete",
                anti_complete(g, paths[i], paths[j]),
                (paths[i], paths[j]),
            )
    return report


def _removal_check(
    g: Graph,
    a_set: VertexSet,
    removed: VertexSet,
    ell: int,
    budget: int,
) -> tuple[bool, Path | None]:
    keep = [v for v in range(g.n) if v not in removed]
    h, new_to_old = induced_subgraph(g, keep)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    sub_a = frozenset(old_to_new[v] for v in a_set if v in old_to_new)
    witness = find_induced_apath_in_range(h, sub_a, LengthRange(ell, None), budget)
    if witness is None:
        return True, None
    return False, tuple(new_to_old[v] for v in witness)


def verify_cover(
    g: Graph,
    a: Iterable[int],
    params: SolveParams,
    z1: Iterable[int],
    z2: Iterable[int],
    budget: int = DEFAULT_BUDGET,
) -> Report:
    """Check a claimed cover: size bounds, and long-induced-A-path freeness of
    the intersection removal plus both single-ball removals.

    The single-set checks are implied by the intersection form (removing a
    superset cannot recreate an induced path on surviving vertices), but they
    are recomputed independently anyway.
    """
    a_set = check_vertex_set(g, a)
    z1_set = check_vertex_set(g, z1)
    z2_set = check_vertex_set(g, z2)
    report = Report("cover")
    report.add("z1.size", len(z1_set) <= params.z1_limit(), (len(z1_set), params.z1_limit()))
    report.add("z2.size", len(z2_set) <= params.z2_limit(), (len(z2_set), params.z2_limit()))
    radius = params.cover_radius()
    b1 = ball(g, z1_set, 1)
    b2 = ball(g, z2_set, radius)
    for name, removed in (
        ("intersection.removal", b1 & b2),
        ("z1.removal", b1),
        ("z2.removal", b2),
    ):
        ok, witness = _removal_check(g, a_set, removed, params.ell, budget)
        report.add(f"{name}.path_free", ok, witness)
    return report


def verify_certificate(
    g: Graph,
    a: Iterable[int],
    params: SolveParams,
    cert: Certificate,
    budget: int = DEFAULT_BUDGET,
) -> Report:
    """Dispatch on the certificate kind; also pins the cover radii."""
    if isinstance(cert, Packing):
        return verify_packing(g, a, params, cert.paths)
    report = verify_cover(g, a, params, cert.z1, cert.z2, budget)
    report.add("radii", cert.r1 == 1 and cert.r2 == params.cover_radius(), (cert.r1, cert.r2))
    return report


def verify_tightness_claims(kind: str, n_or_k: int, r: int = 0) -> Report:
    """Brute-force the two extremal families.

    kind="complete": K_n with all vertices terminal has packing number 1 and
    needs n-1 deletions (radius 0) to kill every A-path, so radius-1 balls
    are necessary for a count of the form c*(k-1).

    kind="subdivided": the complete graph on 2k-1 branch vertices with each
    edge subdivided into a path of length 3r has no 2 anti-complete A-paths
    and no radius-r cover of size 2k-3, so 2k-2 balls are within a factor two
    of the 4(k-1) bound.
    """
    report = Report(f"tightness.{kind}")
    if kind == "complete":
        n = n_or_k
        g, a = complete_instance(n)
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        packing = oracle_max_anticomplete_packing(g, a, ell=1, cap=2)
        report.add("max_anticomplete_packing", packing == 1, packing)
        size, z = oracle_min_ball_cover(g, a, ell=1, r=0)
        report.add("min_radius0_cover", size == n - 1, (size, sorted(z)))
    elif kind == "subdivided":
        k = n_or_k
        g, a = subdivided_complete_instance(k, r)
        packing = oracle_max_anticomplete_packing(g, a, ell=1, cap=k)
        report.add("max_anticomplete_packing", packing < k, packing)
        size, z = oracle_min_ball_cover(g, a, ell=1, r=r)
        report.add("min_cover_exceeds_2k_minus_3", size > 2 * k - 3, (size, sorted(z)))
    else:
        raise ValueError(f"unknown tightness family {kind!r}")
    return report
