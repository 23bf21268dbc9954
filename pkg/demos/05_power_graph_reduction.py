#!/usr/bin/env python3
"""Distance-d packing reduces to distance-3 packing on the graph power:
build G^d with witness paths, lift power-graph paths back, and check the
distance contrapositive that makes the reduction work.

Run from the repository root:  python demos/05_power_graph_reduction.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from apaths import Graph, dist, lift_path, reduce_to_d3

c12 = Graph(12, [(i, (i + 1) % 12) for i in range(12)])
d = 3
pmap = reduce_to_d3(c12, d)
print(f"C12 has {c12.edge_count} edges; C12^{d} has {pmap.powered.edge_count}")

print("\n-- each power edge carries a short witness path --")
for (u, v), w in sorted(pmap.witness.items())[:6]:
    print(f"  {u}-{v}: witness {w} (length {len(w) - 1} <= {d})")
print("  ...")

print("\n-- lifting a power path back to the base graph --")
ph = (0, 3, 6, 9)
pg = lift_path(pmap, ph)
print(f"  power path {ph} (length {len(ph) - 1})")
print(f"  lifts to   {pg} (length {len(pg) - 1} <= d * {len(ph) - 1})")

print("\n-- the separation transfers --")
p1, p2 = (0, 3), (6, 9)
l1, l2 = lift_path(pmap, p1), lift_path(pmap, p2)
print(f"  powered paths {p1}, {p2}: dist in C12^{d} =", dist(pmap.powered, p1, p2))
print(f"  lifted paths {l1}, {l2}: dist in C12 =", dist(c12, l1, l2))
print("  contrapositive: lifted paths closer than d would force powered distance <= 2")
