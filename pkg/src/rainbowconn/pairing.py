"""Rainbow tree growth, matched path pairing, and witness-path assembly.

The witness machinery turns a colored graph into explicit rainbow paths
between a vertex pair (x, y) in three stages:

1. Grow breadth-first trees: a depth-k tree from x, another from y avoiding
   the first, both pruned to exact arity d; then a depth-gamma tree hanging
   off every pruned leaf, each avoiding everything grown before it.
2. Pair root-to-leaf paths of the two pruned trees so that each pair's color
   union stays rainbow.  At every interior level a d x d bipartite
   compatibility graph H is built: branch i on the x side is compatible with
   branch j on the y side when i's entry color appears nowhere in j's branch
   and vice versa.  A maximum matching of H (size >= d-1 is guaranteed for
   rainbow trees) selects the branch pairs to recurse into, multiplying the
   path count by at least d-1 per level.  Binary trees use the same idea two
   levels at a time on the four grandchild branches, where a matching of
   size >= 2 is guaranteed.
3. Join each paired leaf to its partner through the hanging trees and a
   connecting edge found between their leaf sets, then validate the full
   x..y path end to end.

Failure is always explicit: GuaranteeViolation when a matching falls below
its floor (non-rainbow input or a bug), NoStructure when the graph cannot
host the disjoint trees or no full path can be assembled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coloring import EdgeColoring
from .errors import GuaranteeViolation, InsufficientArity, NoStructure
from .graphs import Graph, bfs_distances
from .verify import PathWitness, witness_ok

__all__ = [
    "RootedTree",
    "TreePath",
    "PairingResult",
    "WitnessBundle",
    "grow_bfs_tree",
    "prune_to_arity",
    "bipartite_matching",
    "compatibility_matrix",
    "pair_tree_paths",
    "pair_tree_paths_binary",
    "build_witness_paths",
    "bundle_text",
    "rainbow_witness",
    "witness_via_trees",
    "build_tree_pair_graph",
    "random_rainbow_tree_coloring",
]


@dataclass
class RootedTree:
    """BFS tree of fixed target depth.

    ``parent`` maps each non-root vertex to (parent, edge id); ``children``
    lists children in ascending vertex id; ``order`` is the BFS discovery
    order; ``leaves`` are the vertices at exactly ``target_depth`` in BFS
    order; ``bad_edges`` counts, per expanded vertex, adjacent edges that
    were skipped because they led into forbidden vertices or back into the
    tree; ``shortfall`` names the first interior vertex that produced fewer
    than the requested minimum of children, or None.
    """

    root: int
    target_depth: int
    parent: dict[int, tuple[int, int]]
    children: dict[int, list[int]]
    depth: dict[int, int]
    order: tuple[int, ...]
    leaves: tuple[int, ...]
    level_sizes: tuple[int, ...]
    bad_edges: dict[int, int]
    shortfall: Optional[int] = None

    def vertices(self) -> set[int]:
        return set(self.depth)

    def edge_ids(self) -> list[int]:
        return [eid for (_, eid) in self.parent.values()]

    def path_from_root(self, v: int) -> "TreePath":
        verts = [v]
        eids = []
        while verts[-1] != self.root:
            p, eid = self.parent[verts[-1]]
            eids.append(eid)
            verts.append(p)
        return TreePath(tuple(reversed(verts)), tuple(reversed(eids)))

    def arity(self) -> int:
        return len(self.children[self.root])


@dataclass(frozen=True)
class TreePath:
    """Root-to-leaf path inside one tree."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def leaf(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class PairingResult:
    """Matched (x-side path, y-side path) pairs with rainbow unions."""

    pairs: tuple[tuple[TreePath, TreePath], ...]


def grow_bfs_tree(g: Graph, root: int, depth: int, min_branching: float = 0,
                  forbidden: frozenset[int] = frozenset()) -> RootedTree:
    """Breadth-first tree of given depth avoiding ``forbidden`` vertices.

    Expansion is in BFS order with neighbors in ascending id; edges into
    forbidden vertices or back into the tree are skipped and counted per
    expanding vertex (the tree edge to the parent is not counted).  When an
    interior vertex yields fewer than ``min_branching`` children the first
    such vertex is recorded as ``shortfall``; growth continues regardless so
    callers see the whole picture.
    """
    if root in forbidden:
        raise ValueError(f"root {root} is forbidden")
    parent: dict[int, tuple[int, int]] = {}
    children: dict[int, list[int]] = {root: []}
    depth_of = {root: 0}
    order = [root]
    bad: dict[int, int] = {}
    shortfall: Optional[int] = None
    level = [root]
    for d in range(depth):
        nxt: list[int] = []
        for v in level:
            kids = []
            skipped = 0
            for w, eid in g.adj[v]:
                if v != root and w == parent[v][0]:
                    continue
                if w in forbidden or w in depth_of:
                    skipped += 1
                    continue
                depth_of[w] = d + 1
                parent[w] = (v, eid)
                children[w] = []
                kids.append(w)
                nxt.append(w)
                order.append(w)
            children[v] = kids
            bad[v] = skipped
            if len(kids) < min_branching and shortfall is None:
                shortfall = v
        level = nxt
    leaves = tuple(v for v in order if depth_of[v] == depth)
    sizes = [0] * (depth + 1)
    for v in depth_of:
        sizes[depth_of[v]] += 1
    return RootedTree(root=root, target_depth=depth, parent=parent, children=children,
                      depth=depth_of, order=tuple(order), leaves=leaves,
                      level_sizes=tuple(sizes), bad_edges=bad, shortfall=shortfall)


def prune_to_arity(t: RootedTree, d: int) -> RootedTree:
    """Keep the d lowest-id children at every surviving interior vertex.

    The result is a complete d-ary tree of the same depth.  Raises
    InsufficientArity at the first surviving vertex with fewer than d
    children; no backtracking is attempted, matching the deterministic
    contract.
    """
    if d < 1:
        raise ValueError("arity must be >= 1")
    parent: dict[int, tuple[int, int]] = {}
    children: dict[int, list[int]] = {}
    depth_of = {t.root: 0}
    order = [t.root]
    level = [t.root]
    for dep in range(t.target_depth):
        nxt = []
        for v in level:
            kids = t.children.get(v, [])
            if len(kids) < d:
                raise InsufficientArity(v, len(kids), d)
            keep = sorted(kids)[:d]
            children[v] = keep
            for w in keep:
                parent[w] = t.parent[w]
                depth_of[w] = dep + 1
                order.append(w)
                nxt.append(w)
        level = nxt
    for v in level:
        children[v] = []
    leaves = tuple(v for v in order if depth_of[v] == t.target_depth)
    sizes = [0] * (t.target_depth + 1)
    for v in depth_of:
        sizes[depth_of[v]] += 1
    bad = {v: t.bad_edges[v] for v in depth_of if v in t.bad_edges}
    return RootedTree(root=t.root, target_depth=t.target_depth, parent=parent,
                      children=children, depth=depth_of, order=tuple(order),
                      leaves=leaves, level_sizes=tuple(sizes), bad_edges=bad,
                      shortfall=None)


def bipartite_matching(adjacency: Sequence[Sequence[bool]]) -> set[tuple[int, int]]:
    """Maximum matching of a small bipartite adjacency matrix.

    Kuhn's augmenting-path scan, rows in order, columns in order; the same
    matrix always yields the same matching.
    """
    rows = len(adjacency)
    cols = len(adjacency[0]) if rows else 0
    match_col: list[Optional[int]] = [None] * cols

    def augment(i: int, visited: set[int]) -> bool:
        for j in range(cols):
            if adjacency[i][j] and j not in visited:
                visited.add(j)
                if match_col[j] is None or augment(match_col[j], visited):
                    match_col[j] = i
                    return True
        return False

    for i in range(rows):
        augment(i, set())
    return {(i, j) for j, i in enumerate(match_col) if i is not None}


# ----------------------------------------------------------------------------
# matched path pairing
# ----------------------------------------------------------------------------

def _subtree_colors(t: RootedTree, c: EdgeColoring) -> dict[int, frozenset[int]]:
    """Colors on the edges strictly below each vertex (excludes its own edge)."""
    out: dict[int, frozenset[int]] = {}
    for v in reversed(t.order):
        acc: set[int] = set()
        for w in t.children.get(v, []):
            acc |= out[w]
            acc.add(c.colors[t.parent[w][1]])
        out[v] = frozenset(acc)
    return out


def _check_complete(t: RootedTree, d: int) -> None:
    for v in t.order:
        if t.depth[v] < t.target_depth and len(t.children[v]) != d:
            raise ValueError(f"tree at {t.root}: vertex {v} has {len(t.children[v])} "
                             f"children, expected exactly {d}")


def _check_rainbow(t: RootedTree, c: EdgeColoring) -> None:
    cols = [c.colors[eid] for eid in t.edge_ids()]
    if len(set(cols)) != len(cols):
        raise GuaranteeViolation(f"tree at {t.root} is not rainbow under this coloring")


def compatibility_matrix(t1: RootedTree, t2: RootedTree, c: EdgeColoring,
                         x_node: Optional[int] = None, y_node: Optional[int] = None
                         ) -> list[list[bool]]:
    """The branch compatibility graph H at one interior node pair.

    Entry (i, j) is True when the color entering x-branch i appears neither
    on y-branch j's entry edge nor inside its subtree, and symmetrically.
    Exposed so the defect form of Hall's condition, |N_H(S)| >= |S| - 1 for
    every row set S, can be audited on real instances; that is exactly what
    the d-1 matching floor needs.  A single branch CAN be isolated outright
    (all of the other root's entry colors landing inside it), so no stronger
    per-branch degree bound holds.
    """
    x_node = t1.root if x_node is None else x_node
    y_node = t2.root if y_node is None else y_node
    sub1 = _subtree_colors(t1, c)
    sub2 = _subtree_colors(t2, c)
    return _branch_matrix(t1, t2, c, x_node, y_node, sub1, sub2)


def _branch_matrix(t1, t2, c, x_node, y_node, sub1, sub2) -> list[list[bool]]:
    xs = t1.children[x_node]
    ys = t2.children[y_node]
    cx = [c.colors[t1.parent[w][1]] for w in xs]
    cy = [c.colors[t2.parent[w][1]] for w in ys]
    H = []
    for i, xi in enumerate(xs):
        row = []
        for j, yj in enumerate(ys):
            ok = (cx[i] not in sub2[yj] and cx[i] != cy[j]
                  and cy[j] not in sub1[xi] and cy[j] != cx[i])
            row.append(ok)
        H.append(row)
    return H


def pair_tree_paths(t1: RootedTree, t2: RootedTree, c: EdgeColoring,
                    d: Optional[int] = None) -> PairingResult:
    """Pair root-to-leaf paths across two rainbow d-ary trees, d >= 3.

    Recursing level by level over matched branch pairs yields at least
    (d-1)^depth pairs whose unions are rainbow.  A matching below d-1
    anywhere raises GuaranteeViolation: for rainbow inputs the compatibility
    graph always supports d-1, so a smaller one means the input was not
    rainbow or the implementation broke.
    """
    if d is None:
        d = t1.arity()
    elif t1.arity() != d:
        raise ValueError(f"tree arity {t1.arity()} does not match requested d={d}")
    if d < 3:
        raise ValueError("pair_tree_paths needs arity >= 3; use the binary variant")
    if t2.arity() != d or t1.target_depth != t2.target_depth:
        raise ValueError("trees must share arity and depth")
    if t1.vertices() & t2.vertices():
        raise ValueError("trees must be vertex-disjoint")
    _check_complete(t1, d)
    _check_complete(t2, d)
    _check_rainbow(t1, c)
    _check_rainbow(t2, c)
    sub1 = _subtree_colors(t1, c)
    sub2 = _subtree_colors(t2, c)

    def recurse(xn: int, yn: int, remaining: int) -> list[tuple[list[int], list[int], list[int], list[int]]]:
        # returns (verts1, eids1, verts2, eids2) suffixes from xn/yn down
        if remaining == 0:
            return [([xn], [], [yn], [])]
        H = _branch_matrix(t1, t2, c, xn, yn, sub1, sub2)
        matched = bipartite_matching(H)
        if len(matched) < d - 1:
            raise GuaranteeViolation(
                f"matching of size {len(matched)} < {d - 1} at nodes ({xn}, {yn})"
            )
        out = []
        for i, j in sorted(matched):
            xi = t1.children[xn][i]
            yj = t2.children[yn][j]
            e1 = t1.parent[xi][1]
            e2 = t2.parent[yj][1]
            for v1, p1, v2, p2 in recurse(xi, yj, remaining - 1):
                out.append(([xn] + v1, [e1] + p1, [yn] + v2, [e2] + p2))
        return out

    raw = recurse(t1.root, t2.root, t1.target_depth)
    pairs = _finalize_pairs(raw, c, (d - 1) ** t1.target_depth)
    return PairingResult(pairs)


def pair_tree_paths_binary(t1: RootedTree, t2: RootedTree, c: EdgeColoring) -> PairingResult:
    """Binary-tree variant: recurse two levels at a time over grandchildren.

    The four depth-2 branches on each side form a 4x4 compatibility graph;
    each branch carries two path colors, and any one color can block at most
    two branches on the other side, which forces a matching of size >= 2.
    Depth is consumed two levels per round (a final odd level falls back to
    a 2x2 round with floor 1), so at least 2^(depth//2) pairs come out.
    """
    if t1.arity() != 2 or t2.arity() != 2:
        raise ValueError("binary variant needs arity exactly 2")
    if t1.target_depth != t2.target_depth:
        raise ValueError("trees must share depth")
    if t1.vertices() & t2.vertices():
        raise ValueError("trees must be vertex-disjoint")
    _check_complete(t1, 2)
    _check_complete(t2, 2)
    _check_rainbow(t1, c)
    _check_rainbow(t2, c)
    sub1 = _subtree_colors(t1, c)
    sub2 = _subtree_colors(t2, c)

    def grand_branches(t: RootedTree, node: int) -> list[tuple[int, list[int]]]:
        out = []
        for child in t.children[node]:
            for gc in t.children[child]:
                out.append((gc, [t.parent[child][1], t.parent[gc][1]]))
        return out

    def recurse(xn: int, yn: int, remaining: int):
        if remaining == 0:
            return [([xn], [], [yn], [])]
        if remaining == 1:
            H = _branch_matrix(t1, t2, c, xn, yn, sub1, sub2)
            matched = bipartite_matching(H)
            if len(matched) < 1:
                raise GuaranteeViolation(f"empty 2x2 matching at ({xn}, {yn})")
            out = []
            for i, j in sorted(matched):
                xi, yj = t1.children[xn][i], t2.children[yn][j]
                out.append(([xn, xi], [t1.parent[xi][1]], [yn, yj], [t2.parent[yj][1]]))
            return out
        gx = grand_branches(t1, xn)
        gy = grand_branches(t2, yn)
        H = []
        for gxi, ex in gx:
            cset_x = {c.colors[e] for e in ex}
            row = []
            for gyj, ey in gy:
                cset_y = {c.colors[e] for e in ey}
                ok = (not cset_x & (sub2[gyj] | cset_y)
                      and not cset_y & (sub1[gxi] | cset_x))
                row.append(ok)
            H.append(row)
        matched = bipartite_matching(H)
        if len(matched) < 2:
            raise GuaranteeViolation(
                f"matching of size {len(matched)} < 2 at nodes ({xn}, {yn})"
            )
        out = []
        for i, j in sorted(matched):
            gxi, ex = gx[i]
            gyj, ey = gy[j]
            vx = [xn, t1.parent[gxi][0], gxi]
            vy = [yn, t2.parent[gyj][0], gyj]
            for v1, p1, v2, p2 in recurse(gxi, gyj, remaining - 2):
                out.append((vx[:-1] + v1, ex + p1, vy[:-1] + v2, ey + p2))
        return out

    raw = recurse(t1.root, t2.root, t1.target_depth)
    pairs = _finalize_pairs(raw, c, 2 ** (t1.target_depth // 2))
    return PairingResult(pairs)


def _finalize_pairs(raw, c: EdgeColoring, floor: int) -> tuple:
    if len(raw) < floor:
        raise GuaranteeViolation(f"{len(raw)} pairs produced, floor is {floor}")
    pairs = []
    leaves1: set[int] = set()
    leaves2: set[int] = set()
    for v1, p1, v2, p2 in raw:
        cols = [c.colors[e] for e in p1] + [c.colors[e] for e in p2]
        if len(set(cols)) != len(cols):
            raise GuaranteeViolation("paired paths share a color; pairing is broken")
        if v1[-1] in leaves1 or v2[-1] in leaves2:
            raise GuaranteeViolation("leaf reused within one side")
        leaves1.add(v1[-1])
        leaves2.add(v2[-1])
        pairs.append((TreePath(tuple(v1), tuple(p1)), TreePath(tuple(v2), tuple(p2))))
    return tuple(pairs)


# ----------------------------------------------------------------------------
# witness bundles
# ----------------------------------------------------------------------------

@dataclass
class WitnessBundle:
    """Everything needed to assemble x..y paths through the tree scaffold.

    ``connectors`` hold the positional (i-th leaf to i-th leaf) middle
    segments as vertex paths; ``full_paths`` the corresponding complete x..y
    candidates as (vertices, edge_ids), colors unchecked.  ``excluded_leaves``
    counts leaves dropped for bad hanging trees on both sides; per-side
    detail sits in ``diagnostics``.
    """

    x: int
    y: int
    d: int
    k: int
    gamma: int
    tree_x: RootedTree
    tree_y: RootedTree
    hats_x: tuple[Optional[RootedTree], ...]
    hats_y: tuple[Optional[RootedTree], ...]
    connectors: tuple[tuple[int, ...], ...]
    full_paths: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    excluded_leaves: int
    diagnostics: dict
    _graph: Graph = field(repr=False, default=None)
    _leaf_owner_y: dict = field(repr=False, default_factory=dict)
    _conn_cache: dict = field(repr=False, default_factory=dict)

    def usable(self, side: str, i: int) -> bool:
        hats = self.hats_x if side == "x" else self.hats_y
        return hats[i] is not None

    def connector(self, i: int, j: int):
        """Middle segment joining x-leaf i to y-leaf j, or None.

        Looks for any graph edge between the two hanging-tree leaf sets,
        scanning the smaller side in canonical order; cached per (i, j).
        """
        key = (i, j)
        if key in self._conn_cache:
            return self._conn_cache[key]
        result = None
        hx, hy = self.hats_x[i], self.hats_y[j]
        if hx is not None and hy is not None:
            result = _find_connector(self._graph, hx, hy)
        self._conn_cache[key] = result
        return result


def _hat_is_bad(hat: RootedTree, cutoff: int) -> bool:
    """Bad: any skipped edge while building the first ``cutoff`` levels,
    or no leaves at all.

    The root's edge back into the scaffold tree it hangs from is always
    skipped and does not count.
    """
    if not hat.leaves:
        return True
    for v, cnt in hat.bad_edges.items():
        if v == hat.root:
            cnt -= 1
        if cnt > 0 and hat.depth[v] < cutoff:
            return True
    return False


def _find_connector(g: Graph, hx: RootedTree, hy: RootedTree):
    """(vertices, edge_ids) of the path hx.root ->..-> u - v ->..-> hy.root."""
    lx, ly = hx.leaves, hy.leaves
    if len(ly) < len(lx):
        swapped = _find_connector(g, hy, hx)
        if swapped is None:
            return None
        verts, eids = swapped
        return tuple(reversed(verts)), tuple(reversed(eids))
    members_y = {v: None for v in ly}
    for u in lx:
        for v, eid in g.adj[u]:
            if v in members_y:
                up = hx.path_from_root(u)
                down = hy.path_from_root(v)
                verts = up.vertices + tuple(reversed(down.vertices))
                eids = up.edge_ids + (eid,) + tuple(reversed(down.edge_ids))
                return verts, eids
    return None


def build_witness_paths(g: Graph, x: int, y: int, k: int, gamma: int, d: int,
                        bad_levels: Optional[int] = None) -> WitnessBundle:
    """Grow the disjoint tree scaffold between x and y and pre-assemble paths.

    ``bad_levels`` is how many early levels of a hanging tree must grow
    cleanly before collisions stop disqualifying its leaf; the default is a
    tenth of the hanging depth, reflecting that only the thin early levels
    are vulnerable (a single lost branch low down costs a constant fraction
    of the leaf set, while losses higher up are negligible).

    Raises NoStructure when either pruned depth-k d-ary tree cannot be grown
    (including y falling inside x's tree) or when not a single full x..y
    path can be assembled.  Otherwise returns the bundle with positional
    connectors, full-path candidates, and exclusion diagnostics; desk-scale
    shortfalls surface there instead of failing the build.
    """
    if x == y:
        raise ValueError("x and y must differ")
    if bad_levels is None:
        bad_levels = max(1, -(-gamma // 10))
    try:
        raw_x = grow_bfs_tree(g, x, k, min_branching=d)
        if raw_x.shortfall is not None:
            raise NoStructure(f"tree at {x}: branching shortfall at {raw_x.shortfall}")
        tree_x = prune_to_arity(raw_x, d)
        if y in tree_x.vertices():
            raise NoStructure(f"{y} lies inside the depth-{k} tree of {x}")
        raw_y = grow_bfs_tree(g, y, k, min_branching=d, forbidden=frozenset(tree_x.vertices()))
        if raw_y.shortfall is not None:
            raise NoStructure(f"tree at {y}: branching shortfall at {raw_y.shortfall}")
        tree_y = prune_to_arity(raw_y, d)
    except InsufficientArity as exc:
        raise NoStructure(f"cannot prune to arity {d}: {exc}") from exc

    used = tree_x.vertices() | tree_y.vertices()
    hats_x: list[Optional[RootedTree]] = []
    hats_y: list[Optional[RootedTree]] = []
    excluded = {"x": [], "y": []}
    for side, tree, hats in (("x", tree_x, hats_x), ("y", tree_y, hats_y)):
        for idx, leaf in enumerate(tree.leaves):
            hat = grow_bfs_tree(g, leaf, gamma, forbidden=frozenset(used - {leaf}))
            if _hat_is_bad(hat, bad_levels):
                hats.append(None)
                excluded[side].append(idx)
            else:
                hats.append(hat)
                used |= hat.vertices()

    bundle = WitnessBundle(
        x=x, y=y, d=d, k=k, gamma=gamma, tree_x=tree_x, tree_y=tree_y,
        hats_x=tuple(hats_x), hats_y=tuple(hats_y), connectors=(), full_paths=(),
        excluded_leaves=len(excluded["x"]) + len(excluded["y"]),
        diagnostics={"excluded_x": excluded["x"], "excluded_y": excluded["y"],
                     "missing_connectors": 0},
        _graph=g,
    )
    connectors = []
    full_paths = []
    missing = 0
    for i in range(len(tree_x.leaves)):
        if not (bundle.usable("x", i) and bundle.usable("y", i)):
            continue
        conn = bundle.connector(i, i)
        if conn is None:
            missing += 1
            continue
        connectors.append(conn[0])
        up = tree_x.path_from_root(tree_x.leaves[i])
        down = tree_y.path_from_root(tree_y.leaves[i])
        verts = up.vertices + conn[0][1:-1] + tuple(reversed(down.vertices))
        eids = up.edge_ids + conn[1] + tuple(reversed(down.edge_ids))
        full_paths.append((verts, eids))
    bundle.connectors = tuple(connectors)
    bundle.full_paths = tuple(full_paths)
    bundle.diagnostics["missing_connectors"] = missing
    if not full_paths:
        raise NoStructure(
            f"no full path between {x} and {y}: "
            f"{bundle.excluded_leaves} leaves excluded, {missing} connectors missing"
        )
    return bundle


def bundle_text(bundle: WitnessBundle) -> str:
    """Bundle diagnostics as key=value lines: tree shapes, exclusions,
    connector lengths, and the achieved path count sigma."""
    lv_x = ",".join(str(s) for s in bundle.tree_x.level_sizes)
    lv_y = ",".join(str(s) for s in bundle.tree_y.level_sizes)
    conn = ",".join(str(len(v) - 1) for v in bundle.connectors)
    return (
        f"x={bundle.x}\n"
        f"y={bundle.y}\n"
        f"d={bundle.d}\n"
        f"k={bundle.k}\n"
        f"gamma={bundle.gamma}\n"
        f"levels_x={lv_x}\n"
        f"levels_y={lv_y}\n"
        f"excluded_x={len(bundle.diagnostics['excluded_x'])}\n"
        f"excluded_y={len(bundle.diagnostics['excluded_y'])}\n"
        f"missing_connectors={bundle.diagnostics['missing_connectors']}\n"
        f"connector_lengths={conn}\n"
        f"sigma={len(bundle.full_paths)}\n"
    )


def rainbow_witness(g: Graph, c: EdgeColoring, x: int, y: int,
                    bundle: WitnessBundle) -> Optional[PathWitness]:
    """First fully rainbow x..y path assembled from the bundle under c.

    Runs the matched pairing on the two pruned trees (binary variant when
    d = 2), then walks pairs in order, fetching the connector for each
    matched leaf pair and validating the composed path end to end.  Returns
    None when the trees are not rainbow under c or no composition survives
    validation.
    """
    try:
        if bundle.d >= 3:
            pairing = pair_tree_paths(bundle.tree_x, bundle.tree_y, c)
        else:
            pairing = pair_tree_paths_binary(bundle.tree_x, bundle.tree_y, c)
    except GuaranteeViolation:
        return None
    leaf_index_x = {v: i for i, v in enumerate(bundle.tree_x.leaves)}
    leaf_index_y = {v: i for i, v in enumerate(bundle.tree_y.leaves)}
    for px, py in pairing.pairs:
        i = leaf_index_x[px.leaf]
        j = leaf_index_y[py.leaf]
        if not (bundle.usable("x", i) and bundle.usable("y", j)):
            continue
        conn = bundle.connector(i, j)
        if conn is None:
            continue
        verts = px.vertices + conn[0][1:-1] + tuple(reversed(py.vertices))
        eids = px.edge_ids + conn[1] + tuple(reversed(py.edge_ids))
        cols = [c.colors[e] for e in eids]
        if len(set(cols)) != len(cols):
            continue
        w = PathWitness(verts, tuple(eids), frozenset(cols))
        if witness_ok(g, c, w):
            return w
    return None


def witness_via_trees(g: Graph, c: EdgeColoring, x: int, y: int,
                      k: int, gamma: int, d: int) -> Optional[PathWitness]:
    """End-to-end driver: direct short path when the trees would overlap,
    otherwise bundle assembly plus matched pairing; None on any failure."""
    dist = bfs_distances(g, x)
    if dist[y] < 0:
        return None
    if dist[y] <= 2 * k + 1:
        # close pair: the shortest path spans at most the two tree depths,
        # so under a distance-2k proper coloring it is rainbow as-is
        w = _shortest_path_witness(g, c, x, y)
        if w is not None:
            return w
    try:
        bundle = build_witness_paths(g, x, y, k, gamma, d)
    except NoStructure:
        return None
    return rainbow_witness(g, c, x, y, bundle)


def _shortest_path_witness(g: Graph, c: EdgeColoring, x: int, y: int) -> Optional[PathWitness]:
    dist = bfs_distances(g, x)
    if dist[y] < 0:
        return None
    verts = [y]
    eids = []
    cur = y
    while cur != x:
        for w, eid in g.adj[cur]:
            if dist[w] == dist[cur] - 1:
                eids.append(eid)
                verts.append(w)
                cur = w
                break
    verts.reverse()
    eids.reverse()
    cols = [c.colors[e] for e in eids]
    if len(set(cols)) != len(cols):
        return None
    return PathWitness(tuple(verts), tuple(eids), frozenset(cols))


# ----------------------------------------------------------------------------
# fixtures: disjoint complete d-ary tree pairs
# ----------------------------------------------------------------------------

def build_tree_pair_graph(d: int, depth: int) -> tuple[Graph, RootedTree, RootedTree]:
    """One graph holding two disjoint complete d-ary trees of the given depth.

    Tree 1 occupies vertices 0..size-1 in BFS order, tree 2 the next block;
    the returned RootedTree structures are grown from the two roots.
    """
    if d < 1 or depth < 0:
        raise ValueError("need d >= 1 and depth >= 0")
    size = sum(d ** i for i in range(depth + 1))
    edges = []
    for base in (0, size):
        nxt = base + 1
        frontier = [base]
        for _ in range(depth):
            new_frontier = []
            for v in frontier:
                for _ in range(d):
                    edges.append((v, nxt))
                    new_frontier.append(nxt)
                    nxt += 1
            frontier = new_frontier
    g = Graph(2 * size, sorted(edges))
    t1 = grow_bfs_tree(g, 0, depth)
    t2 = grow_bfs_tree(g, size, depth)
    return g, t1, t2


def random_rainbow_tree_coloring(g: Graph, t1: RootedTree, t2: RootedTree,
                                 palette: int, seed: int = 0) -> EdgeColoring:
    """Random coloring rainbow within each tree; palettes may overlap across.

    Each tree's edges draw distinct colors from [0, palette); edges outside
    both trees (none, for fixture graphs) draw uniformly.
    """
    from .rng import stream

    n_edges = [len(t1.edge_ids()), len(t2.edge_ids())]
    if palette < max(n_edges):
        raise ValueError("palette smaller than a tree's edge count")
    rng = stream(seed, "tree-pair-coloring")
    colors = [rng.randrange(palette) for _ in range(g.m)]
    for t in (t1, t2):
        sample = rng.sample(range(palette), len(t.edge_ids()))
        for eid, col in zip(t.edge_ids(), sample):
            colors[eid] = col
    return EdgeColoring(tuple(colors), palette, ("random",) * g.m)
