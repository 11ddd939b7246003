"""Independent reference implementations used as test oracles.

Nothing here calls into the package's search code; everything is either
networkx or plain brute force over subsets and assignments.
"""

from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import strategies as st

from isk4.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def has_triangle(g: Graph) -> bool:
    return any(c >= 1 for c in nx.triangles(to_nx(g)).values())


def is_isk4_subgraph(h: nx.Graph) -> bool:
    """True if ``h`` itself is a subdivision of K4."""
    if h.number_of_nodes() < 4 or not nx.is_connected(h):
        return False
    deg = dict(h.degree())
    branch = [v for v, d in deg.items() if d == 3]
    if len(branch) != 4 or any(d not in (2, 3) for d in deg.values()):
        return False
    pairs = set()
    for b in branch:
        for start in h.neighbors(b):
            prev, cur = b, start
            while deg[cur] == 2:
                nxt = next(u for u in h.neighbors(cur) if u != prev)
                prev, cur = cur, nxt
            if cur == b:
                return False
            pairs.add(frozenset((b, cur)))
    return len(pairs) == 6


def has_isk4(g: Graph) -> bool:
    h = to_nx(g)
    for k in range(4, g.order + 1):
        for s in itertools.combinations(range(g.order), k):
            if is_isk4_subgraph(h.subgraph(s)):
                return True
    return False


def has_k4_minor(g: Graph) -> bool:
    """Brute force over assignments of vertices to four branch sets (or none)."""
    h = to_nx(g)
    n = g.order
    edges = list(g.edges())
    for assign in itertools.product(range(5), repeat=n):
        # symmetry breaking: branch labels appear in first-use order
        seen = []
        ok = True
        for a in assign:
            if a < 4 and a not in seen:
                if a != len(seen):
                    ok = False
                    break
                seen.append(a)
        if not ok or len(seen) < 4:
            continue
        touch = set()
        for u, v in edges:
            a, b = assign[u], assign[v]
            if a != b and a < 4 and b < 4:
                touch.add((min(a, b), max(a, b)))
        if len(touch) < 6:
            continue
        if all(nx.is_connected(h.subgraph([v for v in range(n) if assign[v] == i])) for i in range(4)):
            return True
    return False


def fan_exists(g, apex, base, k):
    """Brute force: some vertex set S avoiding ``base`` forms a subdivided star
    at ``apex`` whose k leaves are base vertices, with no other edges."""
    h = to_nx(g)
    others = [v for v in range(g.order) if v != apex and v not in base]
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            s = set(extra) | {apex}
            sub = h.subgraph(s | set(base)).copy()
            sub.remove_edges_from([(u, v) for u, v in itertools.combinations(base, 2)])
            leaves = [b for b in base if sub.degree(b) > 0]
            if len(leaves) != k or any(sub.degree(b) != 1 for b in leaves):
                continue
            tree = sub.subgraph(s | set(leaves))
            if not nx.is_tree(tree) or tree.degree(apex) != k:
                continue
            if all(tree.degree(v) == 2 for v in extra):
                return True
    return False


def has_k33_subgraph(g: Graph) -> bool:
    for six in itertools.combinations(range(g.order), 6):
        for side in itertools.combinations(six[1:], 2):
            a = (six[0],) + side
            b = tuple(v for v in six if v not in a)
            if all(g.adjacent(x, y) for x in a for y in b):
                return True
    return False


def holes(g: Graph) -> set[frozenset]:
    return {frozenset(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 4}


def chromatic_number(g: Graph) -> int:
    if g.order == 0:
        return 0
    edges = list(g.edges())
    for k in range(1, g.order + 1):
        for colors in itertools.product(range(k), repeat=g.order):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return g.order


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(to_nx(g))


def wheel_c8() -> Graph:
    """C8 on 0..7 plus center 8 adjacent to 0, 2, 4, 6."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(8, i) for i in (0, 2, 4, 6)]
    return build_graph(9, edges)


@st.composite
def graphs(draw, min_order=0, max_order=8, p=None):
    """Random simple graphs; edge density drawn per graph unless given."""
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        mask = [draw(st.floats(0, 1)) < p for _ in pairs]
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])
