"""Finite simple undirected graphs and their exact combinatorial invariants.

Exact engines (chromatic number, independence, clique, isoperimetric
constant, isomorphism) are branch-and-bound or exhaustive with hard caps and
time budgets; past a cap they raise CapExceeded rather than approximate.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import (
    CapExceeded,
    Disconnected,
    IndexOutOfRange,
    LoopEdge,
)

INF = math.inf

CHI_CAP = 64
BETA_CAP = 24
ISO_CAP = 32
EXACT_BUDGET_SECONDS = 10.0


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Disconnected graphs are allowed as values (complements, derived graphs);
    operations that need connectivity raise Disconnected themselves.
    """

    def __init__(self, n: int, edges, labels=None, name: str = "", meta: dict | None = None):
        if n < 1:
            raise IndexOutOfRange("graph needs at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self.meta = dict(meta) if meta else {}

    # -- basics ---------------------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def average_degree(self) -> Fraction:
        return Fraction(2 * self.edge_count, self.n)

    @cached_property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitmasks, one int per vertex."""
        return tuple(sum(1 << u for u in s) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def is_connected(self) -> bool:
        return len(self._component(0)) == self.n

    def _component(self, start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    @cached_property
    def components(self) -> list[frozenset[int]]:
        left = set(range(self.n))
        out = []
        while left:
            comp = self._component(min(left))
            out.append(frozenset(comp))
            left -= comp
        return out

    def bfs_distances(self, source: int) -> list[float]:
        dist = [INF] * self.n
        dist[source] = 0
        frontier = [source]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in self.adj[u]:
                    if dist[w] == INF:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    @cached_property
    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """A 2-coloring (covering all components), or None if an odd cycle exists."""
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                u = queue.pop()
                for w in self.adj[u]:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        black = frozenset(v for v in range(self.n) if color[v] == 0)
        return black, frozenset(range(self.n)) - black

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def relabel(self, perm) -> "Graph":
        """New graph with vertex v renamed perm[v]."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = None
        if self.labels is not None:
            inv = [0] * self.n
            for v in range(self.n):
                inv[perm[v]] = v
            labels = [self.labels[inv[v]] for v in range(self.n)]
        return Graph(self.n, edges, labels=labels, name=self.name)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        tag = self.name or "graph"
        return f"<{tag}: n={self.n}, m={self.edge_count}>"


# -- text formats --------------------------------------------------------------

def from_edge_list(n: int, edges, labels=None, name: str = "") -> Graph:
    return Graph(n, edges, labels=labels, name=name)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, name: str = "") -> Graph:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    if len(edges) != m:
        raise IndexOutOfRange(f"edge list announces {m} edges, has {len(edges)}")
    return Graph(n, edges, name=name)


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    covered = set()
    for u, v in sorted(g.edges()):
        lines.append(f"  {u} -- {v};")
        covered.update((u, v))
    for v in range(g.n):
        if v not in covered:
            lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    out = {"n": g.n, "edges": [[u, v] for u, v in sorted(g.edges())]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


# -- metrics -------------------------------------------------------------------

def diameter(g: Graph) -> int:
    if not g.is_connected:
        raise Disconnected("diameter undefined for disconnected graphs")
    best = 0
    for v in range(g.n):
        best = max(best, max(g.bfs_distances(v)))
    return int(best)


def girth(g: Graph):
    """Length of a shortest cycle; math.inf for forests."""
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best < INF and dist[u] >= best / 2:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def basic_metrics(g: Graph):
    """(diameter, girth, bipartition-or-None)."""
    return diameter(g), girth(g), g.bipartition


# -- triangle counting ----------------------------------------------------------

def triangles_at(g: Graph, v: int) -> int:
    """Number of triangles through v (= edges inside the link of v)."""
    mask_v = g.masks[v]
    return sum((g.masks[u] & mask_v).bit_count() for u in g.adj[v]) // 2


def triangle_count(g: Graph) -> int:
    return sum(triangles_at(g, v) for v in range(g.n)) // 3


def k4_at(g: Graph, v: int) -> int:
    """Number of K4 subgraphs through v (= triangles inside the link of v)."""
    link = sorted(g.adj[v])
    total = 0
    for i, u in enumerate(link):
        for w in link[i + 1:]:
            if g.has_edge(u, w):
                total += (g.masks[u] & g.masks[w] & g.masks[v]).bit_count()
    return total // 3


def common_neighbours(g: Graph, u: int, v: int) -> int:
    return (g.masks[u] & g.masks[v]).bit_count()


# -- exact chromatic / independence / clique -------------------------------------

class _Deadline:
    def __init__(self, budget: float):
        self.t_end = time.monotonic() + budget

    def check(self):
        if time.monotonic() > self.t_end:
            raise CapExceeded("time budget exhausted")


def clique_number(g: Graph, cap: int = CHI_CAP, budget: float = EXACT_BUDGET_SECONDS) -> int:
    """Exact clique number by branch and bound with a greedy-colouring bound."""
    if g.n > cap:
        raise CapExceeded(f"n = {g.n} over clique cap {cap}")
    deadline = _Deadline(budget)
    masks = g.masks
    order = sorted(range(g.n), key=lambda v: g.degree(v))
    best = [1 if g.n else 0]

    def colour_bound(cand: int) -> int:
        # greedy colouring of candidate set; number of classes bounds the clique
        classes: list[int] = []
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            for i, cls in enumerate(classes):
                if not (masks[v] & cls):
                    classes[i] = cls | (1 << v)
                    break
            else:
                classes.append(1 << v)
        return len(classes)

    def expand(size: int, cand: int):
        deadline.check()
        if not cand:
            best[0] = max(best[0], size)
            return
        if size + colour_bound(cand) <= best[0]:
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & masks[v])

    full = (1 << g.n) - 1
    expand(0, full)
    return best[0]


def _max_matching_bipartite(g: Graph) -> int:
    left, _right = g.bipartition
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in g.adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match or augment(match[w], seen):
                match[w] = u
                return True
        return False

    size = 0
    for u in sorted(left):
        if augment(u, set()):
            size += 1
    return size


def independence_number(g: Graph, cap: int = CHI_CAP, budget: float = EXACT_BUDGET_SECONDS) -> int:
    """Exact independence number: Koenig's theorem on bipartite graphs,
    clique search on the complement otherwise."""
    if g.n > cap:
        raise CapExceeded(f"n = {g.n} over independence cap {cap}")
    if g.is_bipartite:
        return g.n - _max_matching_bipartite(g)
    return clique_number(complement(g), cap=cap, budget=budget)


def chromatic_number(g: Graph, cap: int = CHI_CAP, budget: float = EXACT_BUDGET_SECONDS) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    k-colourability backtracking for the gap."""
    if g.n > cap:
        raise CapExceeded(f"n = {g.n} over chromatic cap {cap}")
    if g.edge_count == 0:
        return 1
    if g.is_bipartite:
        return 2
    deadline = _Deadline(budget)

    def greedy_dsatur() -> int:
        colours = [-1] * g.n
        for _ in range(g.n):
            v = max(
                (u for u in range(g.n) if colours[u] < 0),
                key=lambda u: (len({colours[w] for w in g.adj[u] if colours[w] >= 0}), g.degree(u)),
            )
            used = {colours[w] for w in g.adj[v] if colours[w] >= 0}
            c = 0
            while c in used:
                c += 1
            colours[v] = c
        return max(colours) + 1

    lower = clique_number(g, cap=cap, budget=budget)
    upper = greedy_dsatur()

    def colourable(k: int) -> bool:
        colours = [-1] * g.n

        def rec(done: int) -> bool:
            deadline.check()
            if done == g.n:
                return True
            v = max(
                (u for u in range(g.n) if colours[u] < 0),
                key=lambda u: (len({colours[w] for w in g.adj[u] if colours[w] >= 0}), g.degree(u)),
            )
            used = {colours[w] for w in g.adj[v] if colours[w] >= 0}
            top = min(k, (max((colours[u] for u in range(g.n)), default=-1) + 2))
            for c in range(top):
                if c in used:
                    continue
                colours[v] = c
                if rec(done + 1):
                    return True
                colours[v] = -1
            return False

        return rec(0)

    for k in range(lower, upper):
        if colourable(k):
            return k
    return upper


# -- isoperimetric constant ------------------------------------------------------

def isoperimetric_constant(g: Graph, cap: int = BETA_CAP):
    """Exact min over non-empty S with |S| <= n/2 of |boundary S| / |S|,
    as a Fraction, together with one minimizing subset.

    Gray-code subset sweep: each step flips one vertex and updates the cut.
    """
    if not g.is_connected:
        raise Disconnected("isoperimetric constant needs a connected graph")
    if g.n > cap:
        raise CapExceeded(f"n = {g.n} over isoperimetric cap {cap}")
    n = g.n
    masks = g.masks
    degs = g.degrees
    half = n // 2
    best_num, best_den = degs[0], 1  # S = {0} as a starting bound
    best_mask = 1
    subset = 0
    cut = 0
    size = 0
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        inside = (masks[v] & subset).bit_count()
        if subset & bit:
            subset ^= bit
            size -= 1
            cut -= degs[v] - 2 * (masks[v] & subset).bit_count()
        else:
            subset ^= bit
            size += 1
            cut += degs[v] - 2 * inside
        if 0 < size <= half and cut * best_den < best_num * size:
            best_num, best_den = cut, size
            best_mask = subset
    witness = frozenset(v for v in range(n) if best_mask >> v & 1)
    return Fraction(best_num, best_den), witness


def boundary_size(g: Graph, subset) -> int:
    s = set(subset)
    return sum(1 for u in s for w in g.adj[u] if w not in s)


# -- structure operations ---------------------------------------------------------

def product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (u1,u2) ~ (v1,v2) iff equal in one slot, adjacent in
    the other."""
    def idx(a, b):
        return a * h.n + b

    edges = []
    for u1, v1 in g.edges():
        for a in range(h.n):
            edges.append((idx(u1, a), idx(v1, a)))
    for u2, v2 in h.edges():
        for a in range(g.n):
            edges.append((idx(a, u2), idx(a, v2)))
    name = f"({g.name or 'X'}x{h.name or 'Y'})"
    return Graph(g.n * h.n, edges, name=name)


def bipartite_double(g: Graph) -> Graph:
    """Two copies of V; u_black ~ v_white iff u ~ v. Connected iff g is
    non-bipartite."""
    edges = []
    for u, v in g.edges():
        edges.append((u, g.n + v))
        edges.append((v, g.n + u))
    return Graph(2 * g.n, edges, name=f"double({g.name or 'X'})")


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    return Graph(g.n, edges, name=f"complement({g.name or 'X'})")


def cone(g: Graph) -> Graph:
    """Add an apex adjacent to every vertex."""
    edges = g.edges() + [(v, g.n) for v in range(g.n)]
    return Graph(g.n + 1, edges, name=f"cone({g.name or 'X'})")


def induced_subgraph(g: Graph, vertices) -> Graph:
    vs = sorted(set(vertices))
    if any(not 0 <= v < g.n for v in vs):
        raise IndexOutOfRange("vertex outside graph")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    labels = [g.labels[v] for v in vs] if g.labels is not None else None
    return Graph(len(vs), edges, labels=labels)


def link_graph(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"no vertex {v}")
    return induced_subgraph(g, g.adj[v])


def remove_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def remove_edges(g: Graph, drop) -> Graph:
    dropped = {frozenset(e) for e in drop}
    for e in dropped:
        u, v = tuple(e)
        if not g.has_edge(u, v):
            raise IndexOutOfRange(f"edge {tuple(e)} not present")
    edges = [e for e in g.edges() if frozenset(e) not in dropped]
    return Graph(g.n, edges, name=g.name)


def structure_ops(kind: str, g: Graph, other=None) -> Graph:
    """Dispatcher matching the operation catalogue: product, bipartite_double,
    complement, cone, link."""
    if kind == "product":
        return product(g, other)
    if kind == "bipartite_double":
        return bipartite_double(g)
    if kind == "complement":
        return complement(g)
    if kind == "cone":
        return cone(g)
    if kind == "link":
        return link_graph(g, other)
    raise IndexOutOfRange(f"unknown structure operation {kind!r}")


# -- isomorphism -------------------------------------------------------------------

def _refined_colors_joint(g: Graph, h: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """1-WL colour refinement over both graphs with a shared palette, seeded
    with (degree, triangle, K4) counts; colour ids are assigned by sorted
    signature so they correspond across the two graphs."""
    def seed(x: Graph):
        return [(x.degree(v), triangles_at(x, v), k4_at(x, v)) for v in range(x.n)]

    sig_g, sig_h = seed(g), seed(h)
    cur_g = cur_h = None
    for _ in range(g.n + 1):
        palette = {s: i for i, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
        nxt_g = [palette[s] for s in sig_g]
        nxt_h = [palette[s] for s in sig_h]
        if nxt_g == cur_g and nxt_h == cur_h:
            break
        cur_g, cur_h = nxt_g, nxt_h
        sig_g = [(cur_g[v], tuple(sorted(cur_g[w] for w in g.adj[v]))) for v in range(g.n)]
        sig_h = [(cur_h[v], tuple(sorted(cur_h[w] for w in h.adj[v]))) for v in range(h.n)]
    return tuple(cur_g), tuple(cur_h)


def _iso_search(g: Graph, h: Graph, count_all: bool = False):
    """Backtracking isomorphism search; returns (count, first_mapping)."""
    cg, ch = _refined_colors_joint(g, h)
    if sorted(cg) != sorted(ch):
        return 0, None
    by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        by_color.setdefault(ch[v], []).append(v)

    mapping = [-1] * g.n
    used = [False] * h.n
    found = [0]
    first: list = [None]

    order: list[int] = []
    placed = set()
    while len(order) < g.n:
        v = max(
            (u for u in range(g.n) if u not in placed),
            key=lambda u: (sum(1 for w in g.adj[u] if w in placed), g.degree(u), -u),
        )
        order.append(v)
        placed.add(v)

    def rec(pos: int) -> bool:
        if pos == g.n:
            found[0] += 1
            if first[0] is None:
                first[0] = list(mapping)
            return not count_all
        v = order[pos]
        for w in by_color.get(cg[v], ()):
            if used[w]:
                continue
            ok = True
            for u in g.adj[v]:
                mu = mapping[u]
                if mu >= 0 and not h.has_edge(w, mu):
                    ok = False
                    break
            if ok:
                for u in range(g.n):
                    mu = mapping[u]
                    if mu >= 0 and u not in g.adj[v] and h.has_edge(w, mu):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if rec(pos + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    rec(0)
    return found[0], first[0]


def is_isomorphic(g: Graph, h: Graph, cap: int = ISO_CAP):
    """(decision, mapping). The mapping sends g-vertices to h-vertices."""
    if g.n > cap or h.n > cap:
        raise CapExceeded(f"isomorphism cap {cap} exceeded")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False, None
    if sorted(g.degrees) != sorted(h.degrees):
        return False, None
    count, mapping = _iso_search(g, h, count_all=False)
    return (count > 0), mapping


def automorphism_count(g: Graph, cap: int = ISO_CAP) -> int:
    if g.n > cap:
        raise CapExceeded(f"isomorphism cap {cap} exceeded")
    count, _ = _iso_search(g, g, count_all=True)
    return count


# -- friendship and universality ------------------------------------------------

def friendship_check(g: Graph):
    """("windmill", blades) when every distinct pair has exactly one common
    neighbour, else ("violation", (u, v, count))."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = common_neighbours(g, u, v)
            if c != 1:
                return "violation", (u, v, c)
    return "windmill", (g.n - 1) // 2


@dataclass(frozen=True)
class _SmallClasses:
    k: int
    canon_of_code: tuple[int, ...]
    class_codes: tuple[int, ...]


def _small_graph_classes(k: int) -> _SmallClasses:
    pairs = list(itertools.combinations(range(k), 2))
    nbits = len(pairs)
    perms = list(itertools.permutations(range(k)))

    def apply_perm(code: int, perm) -> int:
        out = 0
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                pi, pj = perm[i], perm[j]
                if pi > pj:
                    pi, pj = pj, pi
                out |= 1 << pairs.index((pi, pj))
        return out

    canon = []
    for code in range(1 << nbits):
        canon.append(min(apply_perm(code, p) for p in perms))
    return _SmallClasses(k, tuple(canon), tuple(sorted(set(canon))))


_SMALL_CACHE: dict[int, _SmallClasses] = {}


def small_graph_classes(k: int) -> _SmallClasses:
    if k not in _SMALL_CACHE:
        _SMALL_CACHE[k] = _small_graph_classes(k)
    return _SMALL_CACHE[k]


def contains_all_small_graphs(g: Graph, k: int) -> bool:
    """True iff every isomorphism class of graphs on k vertices occurs as an
    induced subgraph; exhaustive scan over k-subsets, k <= 4."""
    if k > 4:
        raise CapExceeded("small-graph scan implemented for k <= 4")
    cls = small_graph_classes(k)
    pairs = list(itertools.combinations(range(k), 2))
    need = set(cls.class_codes)
    masks = g.masks
    for subset in itertools.combinations(range(g.n), k):
        code = 0
        for b, (i, j) in enumerate(pairs):
            if masks[subset[i]] >> subset[j] & 1:
                code |= 1 << b
        need.discard(cls.canon_of_code[code])
        if not need:
            return True
    return False


# -- invariant report --------------------------------------------------------------

@dataclass
class InvariantReport:
    name: str
    n: int
    edge_count: int
    degree_min: int
    degree_max: int
    degree_avg: Fraction
    diameter: int | None
    girth: float | None  # math.inf sentinel for forests
    bipartite: bool
    chromatic: int | None
    independence: int | None
    clique: int | None
    isoperimetric: Fraction | None
    iso_witness: frozenset | None
    connected: bool
    skipped: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def frac(x):
            return None if x is None else {"num": x.numerator, "den": x.denominator}

        return {
            "name": self.name,
            "n": self.n,
            "edges": self.edge_count,
            "degree": {"min": self.degree_min, "max": self.degree_max,
                       "avg": frac(self.degree_avg)},
            "diameter": self.diameter,
            "girth": ("inf" if self.girth == INF else self.girth),
            "bipartite": self.bipartite,
            "chromatic": self.chromatic,
            "independence": self.independence,
            "clique": self.clique,
            "isoperimetric": frac(self.isoperimetric),
            "isoperimetric_witness": (sorted(self.iso_witness)
                                      if self.iso_witness is not None else None),
            "connected": self.connected,
            "skipped": self.skipped,
        }


def invariant_report(g: Graph, chi_cap: int = CHI_CAP, beta_cap: int = BETA_CAP,
                     budget: float = EXACT_BUDGET_SECONDS) -> InvariantReport:
    """All invariants at once; capped engines record a skip instead of failing."""
    skipped: list[str] = []

    def guarded(label, fn):
        try:
            return fn()
        except CapExceeded:
            skipped.append(label)
            return None

    diam = diameter(g) if g.is_connected else None
    gir = girth(g)
    chi = guarded("chromatic", lambda: chromatic_number(g, cap=chi_cap, budget=budget))
    iota = guarded("independence", lambda: independence_number(g, cap=chi_cap, budget=budget))
    omega = guarded("clique", lambda: clique_number(g, cap=chi_cap, budget=budget))
    if g.is_connected:
        beta_pair = guarded("isoperimetric", lambda: isoperimetric_constant(g, cap=beta_cap))
    else:
        beta_pair = None
        skipped.append("isoperimetric (disconnected)")
    beta, witness = beta_pair if beta_pair is not None else (None, None)
    return InvariantReport(
        name=g.name,
        n=g.n,
        edge_count=g.edge_count,
        degree_min=g.min_degree,
        degree_max=g.max_degree,
        degree_avg=g.average_degree,
        diameter=diam,
        girth=gir,
        bipartite=g.is_bipartite,
        chromatic=chi,
        independence=iota,
        clique=omega,
        isoperimetric=beta,
        iso_witness=witness,
        connected=g.is_connected,
        skipped=skipped,
    )
