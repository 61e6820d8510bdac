"""Trees, leaf-degree statistics, the special rooted tree and tree generators.

Vertices are always the dense integers ``0..n-1``. When a tree is parsed from
an edge list the ids found in the file are kept in :attr:`Tree.labels`, so
``labels[i]`` is the original name of internal vertex ``i``.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidParam, NotATree, ParseError


@dataclass(frozen=True)
class Tree:
    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[int, ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError("one label per vertex is required")
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_leaf(self, v: int) -> bool:
        return len(self.adjacency[v]) == 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def to_edge_list(self) -> str:
        """Edge-list text, one ``u v`` line per edge in ascending order of labels."""
        lab = self.labels
        pairs = sorted(tuple(sorted((lab[u], lab[v]))) for u, v in self.edges)
        return "".join(f"{a} {b}\n" for a, b in pairs)


def make_tree(n: int, edges, labels=()) -> Tree:
    """Validate ``edges`` over ``0..n-1`` and build a :class:`Tree`.

    Raises:
        NotATree: on self-loops, duplicate edges, cycles, disconnection or n < 2.
    """
    if n < 2:
        raise NotATree(f"a tree needs at least 2 vertices, got {n}")
    normalized = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise NotATree(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise NotATree(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in normalized:
            raise NotATree(f"duplicate edge {e}")
        normalized.add(e)
    if len(normalized) != n - 1:
        raise NotATree(f"{n} vertices need {n - 1} edges, got {len(normalized)}")
    tree = Tree(n, frozenset(normalized), tuple(labels))
    seen = {0}
    stack = [0]
    while stack:
        for w in tree.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise NotATree("graph is disconnected (so it also contains a cycle)")
    return tree


def parse_edge_list(text: str) -> Tree:
    """Parse whitespace-separated ``u v`` pairs, one per line; ``#`` starts a comment."""
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].split()
        if not body:
            continue
        if len(body) != 2:
            raise ParseError(f"line {lineno}: expected two vertex ids, got {line.strip()!r}")
        try:
            u, v = int(body[0]), int(body[1])
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers: {line.strip()!r}") from None
        if u < 0 or v < 0 or not (body[0].isdigit() and body[1].isdigit()):
            raise ParseError(f"line {lineno}: vertex ids must be non-negative integers")
        raw.append((u, v))
    labels = sorted({x for e in raw for x in e})
    index = {lab: i for i, lab in enumerate(labels)}
    return make_tree(len(labels), [(index[u], index[v]) for u, v in raw], labels)


@dataclass(frozen=True)
class LeafStats:
    alpha: int
    argmax_set: tuple[int, ...]
    beta: int


def leaf_degrees(t: Tree) -> list[int]:
    return [sum(1 for w in t.adjacency[v] if t.is_leaf(w)) for v in range(t.n)]


def leaf_stats(t: Tree) -> LeafStats:
    """Maximum leaf-degree ``alpha``, the vertices attaining it, and ``beta``."""
    deg = leaf_degrees(t)
    alpha = max(deg)
    argmax = tuple(v for v in range(t.n) if deg[v] == alpha)
    beta = alpha if len(argmax) >= 2 else alpha - 1
    return LeafStats(alpha, argmax, beta)


class Kind(Enum):
    ROOT = "root"
    LEAF = "leaf"
    PSEUDO_LEAF = "pseudo-leaf"
    NORMAL = "normal"


@dataclass(frozen=True)
class RootedTree:
    """The tree hung from a leaf next to a vertex of maximum leaf-degree.

    ``normal[u]`` lists the normal children of ``u`` in ascending order and
    ``leaves[u]`` its leaf children. A non-leaf ``u`` without leaf children has
    exactly one pseudo-leaf child, recorded in ``pseudo_leaf[u]``.
    """

    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    kind: dict[int, Kind]
    normal: dict[int, tuple[int, ...]]
    leaves: dict[int, tuple[int, ...]]
    pseudo_leaf: dict[int, int]
    order: tuple[int, ...]  # breadth-first, parents before children
    hub: int  # the max leaf-degree vertex the root hangs from

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def non_normal_children(self, u: int) -> tuple[int, ...]:
        """C(u) - A(u) in ascending id order."""
        if u in self.pseudo_leaf:
            return (self.pseudo_leaf[u],)
        return self.leaves[u]

    def depth(self) -> dict[int, int]:
        depth = {self.root: 0}
        for v in self.order[1:]:
            depth[v] = depth[self.parent[v]] + 1
        return depth


def build_special_rooted_tree(t: Tree) -> RootedTree:
    """Root ``t`` at the smallest leaf of the smallest max-leaf-degree vertex."""
    stats = leaf_stats(t)
    if t.n == 2:
        # both endpoints qualify as hub and as root; the root gets the smaller id
        hub, root = 1, 0
    else:
        hub = stats.argmax_set[0]
        root = min(w for w in t.adjacency[hub] if t.is_leaf(w))
    parent: dict[int, int] = {}
    children: dict[int, tuple[int, ...]] = {}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        kids = tuple(w for w in t.adjacency[u] if w != parent.get(u, -1))
        children[u] = kids
        for w in kids:
            parent[w] = u
            order.append(w)
            queue.append(w)

    kind = {root: Kind.ROOT}
    normal: dict[int, tuple[int, ...]] = {}
    leaves: dict[int, tuple[int, ...]] = {}
    pseudo: dict[int, int] = {}
    for u in order:
        kids = children[u]
        leaf_kids = tuple(w for w in kids if not children[w])
        leaves[u] = leaf_kids
        if kids and not leaf_kids:
            pseudo[u] = kids[0]
            normal[u] = kids[1:]
        else:
            normal[u] = tuple(w for w in kids if children[w])
        for w in kids:
            if not children[w]:
                kind[w] = Kind.LEAF
            elif pseudo.get(u) == w:
                kind[w] = Kind.PSEUDO_LEAF
            else:
                kind[w] = Kind.NORMAL
    return RootedTree(root, parent, children, kind, normal, leaves, pseudo, tuple(order), hub)


def gen_star(m: int) -> Tree:
    """K(1, m) with center 0 and leaves 1..m."""
    if m < 1:
        raise InvalidParam(f"star needs m >= 1, got {m}")
    return make_tree(m + 1, [(0, i) for i in range(1, m + 1)])


def gen_path(n: int) -> Tree:
    if n < 2:
        raise InvalidParam(f"path needs n >= 2, got {n}")
    return make_tree(n, [(i, i + 1) for i in range(n - 1)])


def gen_h_graph(beta: int) -> Tree:
    """The tree H on ``2*beta + 7`` vertices whose max leaf-degree is ``beta``.

    Layout: ``0`` is the center joined to ``1`` (x) and ``2`` (y). x carries
    leaves ``3..beta+2`` and y carries ``beta+3..2*beta+2``. The non-leaf
    neighbours x-bar ``2*beta+3`` and y-bar ``2*beta+4`` each hold one more
    leaf, ``2*beta+5`` and ``2*beta+6``.

    The original drawing is not available; this topology is rebuilt from the
    vertex count and from the independent set {x-bar, z, x_1..x_beta}.
    """
    if beta < 1:
        raise InvalidParam(f"H-graph needs beta >= 1, got {beta}")
    x, y = 1, 2
    xbar, ybar = 2 * beta + 3, 2 * beta + 4
    edges = [(0, x), (0, y), (x, xbar), (y, ybar), (xbar, 2 * beta + 5), (ybar, 2 * beta + 6)]
    edges += [(x, 3 + i) for i in range(beta)]
    edges += [(y, beta + 3 + i) for i in range(beta)]
    return make_tree(2 * beta + 7, edges)


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return edges


def gen_random_tree(n: int, seed: int = 0) -> Tree:
    """Uniform random labeled tree on ``n`` vertices via a Prüfer sequence."""
    if n < 2:
        raise InvalidParam(f"random tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return make_tree(n, prufer_decode(seq, n))


def gen_caterpillar(spine: int, max_legs: int, seed: int = 0) -> Tree:
    """A path of ``spine`` vertices, each given 0..max_legs pendant leaves at random."""
    if spine < 1 or max_legs < 0 or (spine == 1 and max_legs < 1):
        raise InvalidParam("caterpillar needs spine >= 1, max_legs >= 0 and at least 2 vertices")
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        legs = rng.randint(0, max_legs)
        if spine == 1:
            legs = max(legs, 1)
        for _ in range(legs):
            edges.append((i, nxt))
            nxt += 1
    return make_tree(nxt, edges)
