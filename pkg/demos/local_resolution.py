"""Resolve the local models (x^a d/dx + y^b d/dy quotients) by explicit blow-ups.

Each run prints the dual graph found by the engine next to the type read off
the order table. The common-pole pair (2, 4) is where the two disagree.
"""

from insepsurf.localres import LocalVF, classify_pair, fundamental_cycle, resolve

for a, b, conf in [(1, 1, "zeros"), (2, 2, "zeros"), (2, 4, "zeros"),
                   (4, 4, "zeros"), (2, 4, "poles"), (4, 4, "poles")]:
    res = resolve(LocalVF(a, b, conf))
    table = classify_pair(a, b)
    print(f"({a},{b}) {conf:5}  engine {str(res.type):13} table {str(table):13} "
          f"blow-ups {res.blowups}")
    print("    self-intersections:", res.graph.selfint)

res = resolve(LocalVF(4, 4, "zeros"))
Z, Z2, pa = fundamental_cycle(res.graph)
print(f"elliptic point: fundamental cycle {Z}, Z^2 = {Z2}, p_a = {pa}")
