"""
Exact rainbow connection numbers
================================

Small instances can be brute-forced: scan palette sizes upward from the
max(pendant count, diameter) lower bound and look for a coloring that
rainbow-connects every pair.  Colorings are enumerated in canonical
first-use order, so palette relabelings are never retried.
"""

from rainbowconn.graphs import graph_from_edges
from rainbowconn.verify import brute_force_rc, verify_all_pairs


def show(name, g):
    rc, witness = brute_force_rc(g)
    rep = verify_all_pairs(g, witness, mode="exact")
    print(f"{name:12s} rc={rc}  witness colors {witness.colors}  "
          f"revalidated {rep.pairs_connected}/{rep.pairs_checked}")


show("K4", graph_from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]))
show("P5", graph_from_edges(5, [(i, i + 1) for i in range(4)]))
show("C6", graph_from_edges(6, [(i, (i + 1) % 6) for i in range(6)]))
show("star K1,5", graph_from_edges(6, [(0, i) for i in range(1, 6)]))

# a wheel: hub plus 5-cycle; the hub shortcuts kill the C5 diameter
wheel = graph_from_edges(6, [(i, (i % 5) + 1) for i in range(1, 6)]
                         + [(0, i) for i in range(1, 6)])
show("wheel W5", wheel)

# trees need one color per edge, so rc grows linearly with size
caterpillar = graph_from_edges(7, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (3, 6)])
show("caterpillar", caterpillar)
