"""
Random graphs at the connectivity threshold
===========================================

Generate a binomial graph right at p = (log n + omega)/n, where
connectivity first appears, and a random regular graph from the
configuration model, then measure both.
"""

from rainbowconn.graphs import (GenParams, connected, degree_stats, diameter,
                                gen_gnp, gen_regular_config)

# --- G(n, p) at the threshold ------------------------------------------------
# omega controls how far above the threshold we sit; omega = 2 is barely above,
# so pendant vertices (degree 1) still exist and connectivity is not a given.
n = 5000
g = gen_gnp(GenParams(n=n, omega=2.0, seed=42))
st = degree_stats(g)

print(f"G({n}, omega=2): m={g.m}  p={g.meta['p']:.6g}")
print(f"  connected      {connected(g)}")
print(f"  degree-1 count {st.z1}")
print(f"  small vertices {len(st.small_vertices)} (threshold {st.small_threshold:.3g})")

# The exact diameter needs all-pairs BFS; the double sweep gets a lower bound
# from two well-chosen BFS passes and is what the big-n pipeline uses.
exact = diameter(g, mode="exact")
sweep = diameter(g, mode="double_sweep")
print(f"  diameter       {exact} (exact) vs {sweep} (double sweep)")

# --- random r-regular via the configuration model ----------------------------
# Points are paired uniformly and the pairing is rejected until the projected
# graph is simple; meta records how many attempts that took.
h = gen_regular_config(GenParams(n=1000, r=4, seed=7))
print(f"\n4-regular on 1000 vertices: m={h.m}  attempts={h.meta['attempts']}")
print(f"  connected      {connected(h)}")
print(f"  diameter       {diameter(h, mode='exact')}")

# Regular graphs have no pendant vertices, so the rainbow lower bound
# max(Z1, diameter) collapses to the diameter alone.
print(f"  degree-1 count {degree_stats(h).z1}")
