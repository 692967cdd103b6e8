"""Deterministic constructors for the named graph families, plus the
strongly-regular / design / partial-design classifiers.

The family catalogue is exposed through ``build(name, *params)``; vertex
labellings follow the canonical field/group element enumerations so repeated
runs produce identical graphs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    BadParameters,
    ContainsIdentity,
    IdentityViolated,
    NotDesign,
    NotGenerating,
    NotPartialDesign,
    NotRegular,
    NotSymmetric,
)
from .finite_field import (
    FieldSpec,
    construct_field,
    prime_power_decomposition,
    quadratic_signature,
    signature_table,
    subfield_embedding,
    trace_norm,
)
from .graph_core import Graph, common_neighbours, k4_at, product

# -- abelian groups as tuples over cyclic factors --------------------------------


def _group_elements(orders: tuple[int, ...]):
    return itertools.product(*[range(m) for m in orders])


def _group_index(orders: tuple[int, ...], elem: tuple[int, ...]) -> int:
    idx = 0
    for m, x in zip(orders, elem):
        idx = idx * m + x
    return idx


def _group_add(orders, a, b):
    return tuple((x + y) % m for m, x, y in zip(orders, a, b))


def _group_neg(orders, a):
    return tuple((-x) % m for m, x in zip(orders, a))


def _generates(orders, steps) -> bool:
    """Whether the given step set reaches the whole group from 0."""
    total = 1
    for m in orders:
        total *= m
    zero = tuple(0 for _ in orders)
    seen = {zero}
    frontier = [zero]
    while frontier:
        g = frontier.pop()
        for s in steps:
            h = _group_add(orders, g, s)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return len(seen) == total


def cayley(orders, generators, name: str = "") -> Graph:
    """Cayley graph of a product of cyclic groups w.r.t. a symmetric,
    identity-free, generating subset."""
    orders = tuple(int(m) for m in orders)
    gens = [tuple(int(x) % m for x, m in zip(s, orders)) for s in generators]
    zero = tuple(0 for _ in orders)
    gen_set = set(gens)
    if zero in gen_set:
        raise ContainsIdentity("generating set contains the identity")
    for s in gen_set:
        if _group_neg(orders, s) not in gen_set:
            raise NotSymmetric(f"generator {s} lacks its inverse")
    if not _generates(orders, gen_set):
        raise NotGenerating("subset does not generate the group")
    elems = list(_group_elements(orders))
    edges = []
    for g in elems:
        gi = _group_index(orders, g)
        for s in gen_set:
            hi = _group_index(orders, _group_add(orders, g, s))
            if gi < hi:
                edges.append((gi, hi))
    n = len(elems)
    labels = [str(e) for e in elems]
    return Graph(n, edges, labels=labels, name=name or f"cayley{orders}",
                 meta={"cayley": {"orders": orders, "generators": sorted(gen_set)}})


def bi_cayley(orders, subset, name: str = "") -> Graph:
    """Bi-Cayley graph: two copies of the group, g_black ~ h_white iff
    h - g lies in the subset.  Connected iff the difference set generates."""
    orders = tuple(int(m) for m in orders)
    subs = [tuple(int(x) % m for x, m in zip(s, orders)) for s in subset]
    sub_set = set(subs)
    diffs = {_group_add(orders, s, _group_neg(orders, t)) for s in sub_set for t in sub_set}
    if not _generates(orders, diffs):
        raise NotGenerating("S - S does not generate; bi-Cayley graph disconnected")
    elems = list(_group_elements(orders))
    n = len(elems)
    edges = []
    for g in elems:
        gi = _group_index(orders, g)
        for s in sub_set:
            hi = _group_index(orders, _group_add(orders, g, s))
            edges.append((gi, n + hi))
    labels = [f"{e}b" for e in elems] + [f"{e}w" for e in elems]
    return Graph(2 * n, edges, labels=labels, name=name or f"bicayley{orders}",
                 meta={"bicayley": {"orders": orders, "subset": sorted(sub_set)}})


# -- elementary families ----------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 2:
        raise BadParameters("complete graph needs n >= 2")
    return Graph(n, itertools.combinations(range(n), 2), name=f"K_{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameters("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C_{n}")


def path(n: int) -> Graph:
    if n < 2:
        raise BadParameters("path needs n >= 2")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P_{n}")


def star(n: int) -> Graph:
    """Star on n vertices: centre 0 plus n-1 leaves."""
    if n < 3:
        raise BadParameters("star needs n >= 3")
    return Graph(n, [(0, i) for i in range(1, n)], name=f"star_{n}")


def wheel(n: int) -> Graph:
    """Wheel on n vertices: hub 0 joined to the cycle 1..n-1."""
    if n < 4:
        raise BadParameters("wheel needs n >= 4")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph(n, rim + [(0, i) for i in range(1, n)], name=f"wheel_{n}")


def windmill(k: int) -> Graph:
    """k triangle blades glued at the hub 0."""
    if k < 1:
        raise BadParameters("windmill needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * k + 1, edges, name=f"windmill_{k}")


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise BadParameters("complete bipartite needs m, n >= 1")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return Graph(m + n, edges, name=f"K_{m},{n}")


def cube(n: int) -> Graph:
    if n < 1:
        raise BadParameters("cube needs n >= 1")
    basis = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    g = cayley((2,) * n, basis, name=f"Q_{n}")
    return g


def halved_cube(n: int) -> Graph:
    """Even-weight binary strings of length n, joined when they differ in two
    slots; realized on (Z_2)^(n-1) by dropping the parity coordinate."""
    if n < 3:
        raise BadParameters("halved cube needs n >= 3")
    m = n - 1
    gens = []
    for i in range(m):
        gens.append(tuple(1 if j == i else 0 for j in range(m)))
    for i, j in itertools.combinations(range(m), 2):
        gens.append(tuple(1 if t in (i, j) else 0 for t in range(m)))
    return cayley((2,) * m, gens, name=f"halfQ_{n}")


def decked_cube(n: int, extra: tuple[int, ...]) -> Graph:
    """Q_n plus the extra generator; the generator must have weight >= 2."""
    extra = tuple(int(b) % 2 for b in extra)
    if len(extra) != n or sum(extra) < 2:
        raise BadParameters("extra generator must have length n and weight >= 2")
    basis = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return cayley((2,) * n, basis + [extra], name=f"DQ_{n}{''.join(map(str, extra))}")


def petersen() -> Graph:
    """2-element subsets of a 5-set, adjacent when disjoint."""
    verts = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(10), 2)
             if not set(verts[i]) & set(verts[j])]
    return Graph(10, edges, labels=[str(v) for v in verts], name="petersen")


def tree(d: int, radius: int, kind: str = "T") -> Graph:
    """Radially regular tree: root degree d-1 for kind "T", d for kind "Tt";
    intermediate vertices have degree d, pendants sit at the given radius."""
    if d < 2 or radius < 1 or kind not in ("T", "Tt"):
        raise BadParameters("tree needs d >= 2, radius >= 1, kind in {T, Tt}")
    edges = []
    level = [0]
    next_id = 1
    for r in range(radius):
        new_level = []
        for v in level:
            children = (d - 1) if (r > 0 or kind == "T") else d
            for _ in range(children):
                edges.append((v, next_id))
                new_level.append(next_id)
                next_id += 1
        level = new_level
    name = f"T_{d},{radius}" if kind == "T" else f"Tt_{d},{radius}"
    return Graph(next_id, edges, name=name)


# -- A-D-E diagrams ----------------------------------------------------------------


def ade(kind: str, n: int = 0) -> Graph:
    """Simply-laced diagrams: A_n path, D_n fork, E6/E7/E8."""
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise BadParameters("A_n needs n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"ADE_A{n}")
    if kind == "D":
        if n < 4:
            raise BadParameters("D_n needs n >= 4")
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
        return Graph(n, edges, name=f"ADE_D{n}")
    if kind == "E":
        if n not in (6, 7, 8):
            raise BadParameters("E_n needs n in {6,7,8}")
        # path 0-1-...-(n-2), extra vertex n-1 hanging off position 2
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
        return Graph(n, edges, name=f"ADE_E{n}")
    raise BadParameters(f"unknown A-D-E kind {kind!r}")


def extended_ade(kind: str, n: int = 0) -> Graph:
    """Extended diagrams, one more node; all have largest adjacency
    eigenvalue exactly 2."""
    kind = kind.upper()
    if kind == "A":
        if n < 2:
            raise BadParameters("extended A_n needs n >= 2")
        return Graph(n + 1, [(i, (i + 1) % (n + 1)) for i in range(n + 1)], name=f"ADE_extA{n}")
    if kind == "D":
        if n < 4:
            raise BadParameters("extended D_n needs n >= 4")
        # horns 0,1 at vertex 2; path 2..n-2; horns n-1, n at vertex n-2
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 2)]
        edges += [(n - 2, n - 1), (n - 2, n)]
        return Graph(n + 1, edges, name=f"ADE_extD{n}")
    if kind == "E":
        if n == 6:
            # E6 plus one node extending the short leg: legs 2,2,2 around centre
            edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]
            return Graph(7, edges, name="ADE_extE6")
        if n == 7:
            # legs 3,3,1 around the branch vertex: path on 7 nodes, horn at centre
            edges = [(i, i + 1) for i in range(6)] + [(3, 7)]
            return Graph(8, edges, name="ADE_extE7")
        if n == 8:
            # legs 5,2,1 around the branch vertex: path on 8 nodes, horn at node 2
            edges = [(i, i + 1) for i in range(7)] + [(2, 8)]
            return Graph(9, edges, name="ADE_extE8")
    raise BadParameters(f"unknown extended A-D-E kind {kind!r}")


# -- field-based families -------------------------------------------------------------


def _field_for(q: int) -> FieldSpec:
    pp = prime_power_decomposition(q)
    if pp is None:
        raise BadParameters(f"{q} is not a prime power")
    return construct_field(*pp)


def paley(q: int) -> Graph:
    """Cayley graph of (F, +) on the non-zero squares; q = 1 mod 4."""
    if q % 4 != 1:
        raise BadParameters("Paley graph needs q = 1 mod 4")
    spec = _field_for(q)
    sig = signature_table(spec)
    edges = []
    for i in range(q):
        a = spec.element(i)
        for j in range(i + 1, q):
            if sig[(spec.element(j) - a).index] == 1:
                edges.append((i, j))
    return Graph(q, edges, labels=[str(i) for i in range(q)], name=f"paley_{q}",
                 meta={"field": spec.to_json(), "kind": "paley"})


def bi_paley(q: int) -> Graph:
    """Bi-Cayley graph of (F, +) on the non-zero squares; q = 3 mod 4."""
    if q % 4 != 3:
        raise BadParameters("bi-Paley graph needs q = 3 mod 4")
    if q == 3:
        raise BadParameters("BP(3) is a degenerate disjoint union")
    spec = _field_for(q)
    sig = signature_table(spec)
    edges = []
    for i in range(q):
        a = spec.element(i)
        for j in range(q):
            if sig[(spec.element(j) - a).index] == 1:
                edges.append((i, q + j))
    g = Graph(2 * q, edges, name=f"bipaley_{q}",
              meta={"field": spec.to_json(), "kind": "bipaley",
                    "bicayley": {"orders": (spec.p,) * spec.d,
                                 "subset": sorted(spec.element(i).coeffs
                                                  for i in range(1, q) if sig[i] == 1)}})
    return g


def incidence(n: int, q: int) -> Graph:
    """Incidence graph of 1-spaces vs (n-1)-spaces of GF(q)^n, realized as the
    bi-Cayley graph of the cyclic group K*/F* over the trace-zero subset."""
    if n < 3:
        raise BadParameters("incidence graph needs n >= 3")
    pp = prime_power_decomposition(q)
    if pp is None:
        raise BadParameters(f"{q} is not a prime power")
    p, e = pp
    base = construct_field(p, e)
    big = construct_field(p, e * n)
    emb = subfield_embedding(big, base)
    m = (q**n - 1) // (q - 1)
    g = big.generator()
    subset = []
    x = big.one
    for j in range(m):
        if trace_norm(emb, x)[0].is_zero():
            subset.append((j,))
        x = x * g
    graph = bi_cayley((m,), subset, name=f"I_{n}({q})")
    graph.meta["kind"] = "incidence"
    graph.meta["incidence"] = {"n": n, "q": q}
    return graph


def incidence_points(n: int, q: int) -> Graph:
    """Coordinate picture of the incidence graph: two copies of the projective
    points of GF(q)^n, joined when orthogonal under the standard scalar
    product.  Labels carry the normalized coordinates (used by the
    sum-product application)."""
    if n < 3:
        raise BadParameters("incidence graph needs n >= 3")
    spec = _field_for(q)
    points = []
    for vec in itertools.product(range(q), repeat=n):
        elems = [spec.element(i) for i in vec]
        lead = next((e for e in elems if not e.is_zero()), None)
        if lead is None:
            continue
        inv = lead.inverse()
        normal = tuple((e * inv).index for e in elems)
        if normal == vec:
            points.append(tuple(spec.element(i) for i in vec))
    m = len(points)
    edges = []
    for i, u in enumerate(points):
        for j, v in enumerate(points):
            dot = spec.zero
            for a, b in zip(u, v):
                dot = dot + a * b
            if dot.is_zero():
                edges.append((i, m + j))
    labels = [str(tuple(e.index for e in pt)) + "b" for pt in points]
    labels += [str(tuple(e.index for e in pt)) + "w" for pt in points]
    graph = Graph(2 * m, edges, labels=labels, name=f"I_{n}({q})pts",
                  meta={"kind": "incidence_points", "incidence": {"n": n, "q": q}})
    return graph


def incidence_point_index(graph: Graph, vec_indices: tuple[int, ...], q: int, side: str) -> int:
    """Vertex id of the projective point with the given coordinate indices."""
    spec = _field_for(q)
    elems = [spec.element(i) for i in vec_indices]
    lead = next(e for e in elems if not e.is_zero())
    inv = lead.inverse()
    label = str(tuple((e * inv).index for e in elems)) + ("b" if side == "black" else "w")
    return graph.labels.index(label)


def sum_product(q: int) -> Graph:
    """Bipartite graph on two copies of F x F*: (a,x) ~ (b,y) iff a + b = xy."""
    if q < 3:
        raise BadParameters("sum-product graph needs q >= 3")
    spec = _field_for(q)
    m = q * (q - 1)

    def idx(a, x):
        return a.index * (q - 1) + (x.index - 1)

    edges = []
    for a in spec.elements():
        for x in spec.units():
            for y in spec.units():
                b = x * y - a
                edges.append((idx(a, x), m + idx(b, y)))
    return Graph(2 * m, edges, name=f"SP_{q}", meta={"kind": "sum_product", "q": q})


def full_sum_product(q: int) -> Graph:
    """Bipartite graph on two copies of F x F: (a,x) ~ (b,y) iff a + b = xy."""
    if q < 2:
        raise BadParameters("full sum-product graph needs q >= 2")
    spec = _field_for(q)
    m = q * q

    def idx(a, x):
        return a.index * q + x.index

    edges = []
    for a in spec.elements():
        for x in spec.elements():
            for y in spec.elements():
                b = x * y - a
                edges.append((idx(a, x), m + idx(b, y)))
    return Graph(2 * m, edges, name=f"FSP_{q}", meta={"kind": "full_sum_product", "q": q})


# -- individual graphs ------------------------------------------------------------------


def shrikhande() -> Graph:
    g = cayley((4, 4), [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)], name="shrikhande")
    return g


def rook(n: int = 4) -> Graph:
    g = product(complete(n), complete(n))
    g.name = f"rook_{n}"
    return g


def rook_twin() -> Graph:
    """K_4 x K_4 as a Cayley graph of Z_4 x Z_4 (the Shrikhande twin)."""
    return cayley((4, 4), [(1, 0), (3, 0), (0, 1), (0, 3), (2, 0), (0, 2)], name="rook_twin")


def andrasfai(n: int) -> Graph:
    if n < 2:
        raise BadParameters("Andrasfai graph needs n >= 2")
    mod = 3 * n - 1
    gens = [(x,) for x in range(1, mod) if x % 3 == 1]
    return cayley((mod,), gens, name=f"andrasfai_{n}")


def heawood() -> Graph:
    g = bi_cayley((7,), [(1,), (2,), (4,)], name="heawood")
    return g


def tutte_coxeter() -> Graph:
    """Edges of K_6 vs perfect matchings of K_6, joined by containment."""
    k6_edges = list(itertools.combinations(range(6), 2))
    matchings = []
    for triple in itertools.combinations(k6_edges, 3):
        if len({v for e in triple for v in e}) == 6:
            matchings.append(frozenset(triple))
    edges = []
    for i, e in enumerate(k6_edges):
        for j, m in enumerate(matchings):
            if e in m:
                edges.append((i, 15 + j))
    labels = [str(e) for e in k6_edges] + [f"m{j}" for j in range(len(matchings))]
    return Graph(30, edges, labels=labels, name="tutte_coxeter")


def frucht() -> Graph:
    chords = [(0, 2), (4, 6), (7, 9), (3, 11), (5, 10), (1, 8)]
    edges = [(i, (i + 1) % 12) for i in range(12)] + chords
    return Graph(12, edges, name="frucht")


def machine(orders) -> Graph:
    """The strongly-regular 'machine': Cayley graph of G x G over
    {(s,0), (0,s), (s,s) : s != 0} for an abelian G of size n; parameters are
    (n^2, 3n-3, n, 6)."""
    orders = tuple(int(m) for m in orders)
    size = 1
    for m in orders:
        size *= m
    if size < 3:
        raise BadParameters("machine construction needs |G| >= 3")
    zero = tuple(0 for _ in orders)
    gens = []
    for s in _group_elements(orders):
        if s == zero:
            continue
        gens.append(s + zero)
        gens.append(zero + s)
        gens.append(s + s)
    g = cayley(orders + orders, gens, name=f"machine_{'x'.join(map(str, orders))}")
    g.meta["machine"] = {"orders": orders, "group_size": size}
    return g


def order2_count(orders) -> int:
    """Number of order-2 elements in the product of cyclic groups."""
    total = 1
    for m in orders:
        total *= 2 if m % 2 == 0 else 1
    return total - 1


def machine_order2_census(g: Graph) -> int:
    """Recover the order-2 count of the underlying group from the graph alone:
    bridge-type triangles in a link, i.e. link triangles minus the island
    contribution 3 * C(n-1, 3)."""
    n = math.isqrt(g.n)
    if n * n != g.n:
        raise BadParameters("not a machine graph: size is not a square")
    islands = 3 * math.comb(n - 1, 3)
    return k4_at(g, 0) - islands


def small_diameter_x(k: int) -> Graph:
    """3-regular small-diameter family: the tree Tt_{3,k} with every pendant
    4-tuple (grouped by grandparent) closed into a 4-cycle."""
    if k < 3:
        raise BadParameters("small-diameter family needs k >= 3")
    t = tree(3, k, kind="Tt")
    dist = t.bfs_distances(0)
    parent = [-1] * t.n
    for u, v in t.edges():
        if dist[u] + 1 == dist[v]:
            parent[v] = u
        else:
            parent[u] = v
    pendants = [v for v in range(t.n) if dist[v] == k]
    groups: dict[int, list[int]] = {}
    for v in pendants:
        groups.setdefault(parent[parent[v]], []).append(v)
    extra = []
    for grand, four in sorted(groups.items()):
        four.sort(key=lambda v: (parent[v], v))  # sibling pairs adjacent, as drawn
        assert len(four) == 4
        for i in range(4):
            extra.append((four[i], four[(i + 1) % 4]))
    return Graph(t.n, t.edges() + extra, name=f"smalldiam_{k}")


# -- regularity classifiers --------------------------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    n: int
    d: int
    a: int
    c: int

    def __post_init__(self):
        if self.d * (self.d - self.a - 1) != (self.n - self.d - 1) * self.c:
            raise IdentityViolated(f"srg identity fails for {self}")


@dataclass(frozen=True)
class DesignParams:
    m: int
    d: int
    c: int

    def __post_init__(self):
        if self.c * (self.m - 1) != self.d * (self.d - 1):
            raise IdentityViolated(f"design identity fails for {self}")


@dataclass(frozen=True)
class PartialDesignParams:
    m: int
    d: int
    c1: int
    c2: int

    def __post_init__(self):
        if self.c1 == self.c2:
            raise IdentityViolated("partial design needs two distinct counts")


def classify_regular(g: Graph):
    """("complete", None) | ("srg", SrgParams) | ("design", DesignParams) |
    ("partial_design", PartialDesignParams) | ("not_sr", witness)."""
    if not g.is_regular:
        raise NotRegular("classification needs a regular graph")
    d = g.max_degree
    bip = g.bipartition
    if bip is None:
        adj_counts = set()
        non_counts = set()
        for u in range(g.n):
            for v in range(u + 1, g.n):
                c = common_neighbours(g, u, v)
                (adj_counts if g.has_edge(u, v) else non_counts).add(c)
        if not non_counts:
            return "complete", None
        if len(adj_counts) == 1 and len(non_counts) == 1:
            return "srg", SrgParams(g.n, d, adj_counts.pop(), non_counts.pop())
        return "not_sr", {"adjacent_counts": sorted(adj_counts),
                          "nonadjacent_counts": sorted(non_counts)}
    black, white = bip
    if len(black) != len(white):
        return "not_sr", {"unbalanced_sides": (len(black), len(white))}
    counts = set()
    for side in (black, white):
        side = sorted(side)
        for u, v in itertools.combinations(side, 2):
            counts.add(common_neighbours(g, u, v))
    if len(counts) == 1:
        return "design", DesignParams(g.n // 2, d, counts.pop())
    if len(counts) == 2:
        c1, c2 = sorted(counts)
        return "partial_design", PartialDesignParams(g.n // 2, d, c1, c2)
    return "not_sr", {"same_colour_counts": sorted(counts)}


def c1_graph(g: Graph, c1: int) -> Graph:
    """Derived graph of a partial design: black vertices, edges where the
    common-neighbour count is exactly c1.  Possibly disconnected."""
    kind, params = classify_regular(g)
    if kind != "partial_design":
        raise NotPartialDesign(f"classification is {kind}")
    if c1 not in (params.c1, params.c2):
        raise NotPartialDesign(f"{c1} not among the counts {params.c1}, {params.c2}")
    black = sorted(g.bipartition[0])
    pos = {v: i for i, v in enumerate(black)}
    edges = [(pos[u], pos[v]) for u, v in itertools.combinations(black, 2)
             if common_neighbours(g, u, v) == c1]
    labels = [g.labels[v] for v in black] if g.labels is not None else None
    return Graph(len(black), edges, labels=labels, name=f"c1graph({g.name})")


def c1_graph_degree(params: PartialDesignParams, c1: int) -> int:
    """Predicted degree of the c1-graph."""
    c2 = params.c2 if c1 == params.c1 else params.c1
    num = params.d * (params.d - 1) - (params.m - 1) * c2
    assert num % (c1 - c2) == 0
    return num // (c1 - c2)


def bp_determination(g: Graph) -> bool:
    """Whether same-colour vertex pairs of a design graph are determined by
    their common neighbours: no three same-colour vertices share an identical
    full common-neighbour set of size c."""
    kind, params = classify_regular(g)
    if kind != "design":
        raise NotDesign(f"classification is {kind}")
    for side in g.bipartition:
        side = sorted(side)
        for u, v, w in itertools.combinations(side, 3):
            if (g.masks[u] & g.masks[v] & g.masks[w]).bit_count() == params.c:
                return False
    return True


# -- registry -----------------------------------------------------------------------------

def _parse_tuple(text) -> tuple[int, ...]:
    return tuple(int(x) for x in str(text).split(","))


def _parse_tuple_list(text) -> list[tuple[int, ...]]:
    return [_parse_tuple(part) for part in str(text).split(";") if part]


FAMILY_BUILDERS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "wheel": wheel,
    "windmill": windmill,
    "complete_bipartite": complete_bipartite,
    "cube": cube,
    "halved_cube": halved_cube,
    "decked_cube": lambda n, bits: decked_cube(int(n), tuple(int(b) for b in str(bits))),
    "petersen": petersen,
    "tree": lambda d, r, kind="T": tree(int(d), int(r), kind),
    "ade": lambda kind, n=0: ade(str(kind), int(n)),
    "extended_ade": lambda kind, n=0: extended_ade(str(kind), int(n)),
    "paley": paley,
    "bi_paley": bi_paley,
    "incidence": incidence,
    "sum_product": sum_product,
    "full_sum_product": full_sum_product,
    "shrikhande": shrikhande,
    "rook": rook,
    "rook_twin": rook_twin,
    "andrasfai": andrasfai,
    "heawood": heawood,
    "tutte_coxeter": tutte_coxeter,
    "frucht": frucht,
    "machine": lambda *orders: machine(orders),
    "small_diameter_x": small_diameter_x,
    # raw group constructions: orders as "4,4", elements as "1,0;3,0;..."
    "cayley": lambda orders, gens: cayley(_parse_tuple(orders), _parse_tuple_list(gens)),
    "bi_cayley": lambda orders, subset: bi_cayley(_parse_tuple(orders),
                                                  _parse_tuple_list(subset)),
}


def build(family: str, *params) -> Graph:
    """Tagged-union entry point over the family catalogue."""
    if family not in FAMILY_BUILDERS:
        raise BadParameters(f"unknown family {family!r}")
    coerced = []
    for p in params:
        if isinstance(p, str) and p.lstrip("-").isdigit():
            coerced.append(int(p))
        else:
            coerced.append(p)
    return FAMILY_BUILDERS[family](*coerced)
