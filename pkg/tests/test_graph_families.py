"""Family constructors against the identifications, parameter formulas and
classification facts stated for them."""

import itertools
import math

import pytest

from specgraph import finite_field as ff
from specgraph import fixtures as fx
from specgraph import graph_core as gc
from specgraph import graph_families as gf
from specgraph.errors import (
    BadParameters,
    ContainsIdentity,
    NotDesign,
    NotGenerating,
    NotPartialDesign,
    NotSymmetric,
)


def iso(a, b):
    return gc.is_isomorphic(a, b)[0]


# -- identifications ----------------------------------------------------------

def test_paley_5_is_c5():
    assert iso(gf.paley(5), gf.cycle(5))


def test_paley_9_is_rook_3():
    assert iso(gf.paley(9), gc.product(gf.complete(3), gf.complete(3)))


def test_bipaley_7_heawood_incidence_all_agree():
    bp7 = gf.bi_paley(7)
    assert iso(bp7, gf.heawood())
    assert iso(bp7, gf.incidence(3, 2))
    assert iso(bp7, fx.heawood_fixture())


def test_shrikhande_matches_fixture():
    assert iso(gf.shrikhande(), fx.shrikhande_fixture())


def test_tutte_coxeter_matches_fixture():
    assert iso(gf.tutte_coxeter(), fx.tutte_coxeter_fixture())


def test_incidence_points_picture_agrees():
    for n, q in [(3, 2), (3, 3)]:
        assert iso(gf.incidence(n, q), gf.incidence_points(n, q))


def test_cayley_cycle_and_cube():
    assert iso(gf.build("cycle", 7), gf.cayley((7,), [(1,), (6,)]))
    basis = [tuple(1 if i == j else 0 for j in range(4)) for i in range(4)]
    assert iso(gf.cube(4), gf.cayley((2,) * 4, basis))


def test_bi_cayley_heawood():
    assert iso(gf.bi_cayley((7,), [(1,), (2,), (4,)]), gf.heawood())


# -- parameter formulas ---------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4])
def test_incidence_3_parameters(q):
    g = gf.incidence(3, q)
    assert g.n == 2 * (q * q + q + 1)
    assert g.is_regular and g.max_degree == q + 1


def test_incidence_degree_formula_i42():
    g = gf.incidence(4, 2)
    assert g.n == 2 * 15 and g.max_degree == 7


@pytest.mark.parametrize("q", [5, 9, 13, 17])
def test_paley_regular_degree(q):
    g = gf.paley(q)
    assert g.is_regular and g.max_degree == (q - 1) // 2


def test_paley_strong_regularity_parameters():
    for q in (5, 9, 13, 17):
        kind, params = gf.classify_regular(gf.paley(q))
        assert kind == "srg"
        assert (params.a, params.c) == ((q - 5) // 4, (q - 1) // 4)


@pytest.mark.parametrize("q", [7, 11, 19])
def test_bipaley_design_parameters(q):
    kind, params = gf.classify_regular(gf.bi_paley(q))
    assert kind == "design"
    assert (params.m, params.d, params.c) == (q, (q - 1) // 2, (q - 3) // 4)


def test_family_preconditions():
    with pytest.raises(BadParameters):
        gf.paley(7)
    with pytest.raises(BadParameters):
        gf.bi_paley(5)
    with pytest.raises(BadParameters):
        gf.bi_paley(3)
    with pytest.raises(BadParameters):
        gf.paley(12)
    with pytest.raises(BadParameters):
        gf.incidence(2, 3)


def test_cayley_preconditions():
    with pytest.raises(ContainsIdentity):
        gf.cayley((5,), [(0,), (1,), (4,)])
    with pytest.raises(NotSymmetric):
        gf.cayley((5,), [(1,)])
    with pytest.raises(NotGenerating):
        gf.cayley((6,), [(2,), (4,)])
    with pytest.raises(NotGenerating):
        gf.bi_cayley((4,), [(0,), (2,)])


def test_sum_product_shapes():
    for q in (3, 4, 5):
        g = gf.sum_product(q)
        assert g.n == 2 * q * (q - 1)
        assert g.is_regular and g.max_degree == q - 1
    g = gf.full_sum_product(3)
    assert g.n == 18 and g.is_regular and g.max_degree == 3


def test_machine_parameters_and_census():
    m4, m22 = gf.machine([4]), gf.machine([2, 2])
    for g in (m4, m22):
        kind, params = gf.classify_regular(g)
        assert kind == "srg" and (params.n, params.d, params.a, params.c) == (16, 9, 4, 6)
    assert gf.order2_count([4]) == 1 and gf.order2_count([2, 2]) == 3
    assert gf.machine_order2_census(m4) == 1
    assert gf.machine_order2_census(m22) == 3
    assert not iso(m4, m22)


def test_machine_corollary_family():
    # G(k) = (Z_2)^(k-1) x Z_{2^(N-k)} all share parameters but differ pairwise
    n_graphs = [gf.machine([2] * (k - 1) + [2 ** (3 - k)]) for k in (1, 2)]
    params = [gf.classify_regular(g)[1] for g in n_graphs]
    assert params[0] == params[1]
    assert not iso(*n_graphs)


# -- classification --------------------------------------------------------------

def test_classify_examples():
    assert gf.classify_regular(gf.petersen()) == ("srg", gf.SrgParams(10, 3, 0, 1))
    assert gf.classify_regular(gf.shrikhande()) == ("srg", gf.SrgParams(16, 6, 2, 2))
    assert gf.classify_regular(gf.complete(5)) == ("complete", None)
    assert gf.classify_regular(gf.cycle(5)) == ("srg", gf.SrgParams(5, 2, 0, 1))
    # bipartite graphs classify on the design side: C_4 = K_{2,2}, and every
    # same-side pair of Q_3 lies at distance two, so Q_3 is a (degenerate) design
    assert gf.classify_regular(gf.cycle(4)) == ("design", gf.DesignParams(2, 2, 2))
    assert gf.classify_regular(gf.cube(3)) == ("design", gf.DesignParams(4, 3, 2))
    kind, params = gf.classify_regular(gf.cube(4))
    assert kind == "partial_design" and (params.c1, params.c2) == (0, 2)
    kind, params = gf.classify_regular(gf.tutte_coxeter())
    assert kind == "partial_design"
    assert (params.m, params.d, params.c1, params.c2) == (15, 3, 0, 1)
    assert gf.classify_regular(gf.cycle(7))[0] == "not_sr"


def test_bipartite_double_of_srg_is_design_like():
    double = gc.bipartite_double(gf.petersen())
    kind, _ = gf.classify_regular(double)
    assert kind in ("design", "partial_design")


def test_c1_graph_tutte_coxeter():
    derived = gf.c1_graph(gf.tutte_coxeter(), 0)
    assert derived.n == 15 and derived.is_regular and derived.max_degree == 8
    kind, params = gf.classify_regular(derived)
    assert kind == "srg" and (params.a, params.c) == (4, 4)
    # the 0-graph is the line graph of K_6: vertices = K_6 edges sharing endpoints
    k6_edges = list(itertools.combinations(range(6), 2))
    line = gc.Graph(15, [(i, j) for i, j in itertools.combinations(range(15), 2)
                         if set(k6_edges[i]) & set(k6_edges[j])])
    assert iso(derived, line)


@pytest.mark.parametrize("q", [3, 4])
def test_c1_graph_sum_product(q):
    derived = gf.c1_graph(gf.sum_product(q), 0)
    assert iso(derived, gc.product(gf.complete(q), gf.complete(q - 1)))


def test_c1_graph_full_sum_product():
    derived = gf.c1_graph(gf.full_sum_product(3), 0)
    assert derived.n == 9 and len(derived.components) == 3
    for comp in derived.components:
        assert iso(gc.induced_subgraph(derived, comp), gf.complete(3))


def test_c1_graph_degree_formula():
    _, params = gf.classify_regular(gf.tutte_coxeter())
    assert gf.c1_graph_degree(params, 0) == 8
    _, params = gf.classify_regular(gf.sum_product(4))
    assert gf.c1_graph_degree(params, 0) == 2 * 4 - 3


def test_c1_graph_requires_partial_design():
    with pytest.raises(NotPartialDesign):
        gf.c1_graph(gf.heawood(), 0)


# -- determination (BP vs incidence distinguisher) ----------------------------------

def test_bp_determination():
    assert gf.bp_determination(gf.bi_paley(11)) is True
    assert gf.bp_determination(gf.incidence(3, 2)) is False
    assert gf.bp_determination(gf.bi_paley(7)) is False  # the exception BP(7) = I_3(2)
    with pytest.raises(NotDesign):
        gf.bp_determination(gf.tutte_coxeter())


def test_mersenne_gate():
    # BP and incidence parameters agree exactly when 2^n - 1 is a Mersenne prime
    expected = {n for n in range(3, 14) if ff.is_prime(2**n - 1)}
    hits = set()
    for n in range(3, 14):
        q = 2**n - 1
        if ff.prime_power_decomposition(q) is not None and q % 4 == 3:
            # prime-power q with matching parameter triple
            m, d, c = q, (q - 1) // 2, (q - 3) // 4
            if (m, d, c) == (2**n - 1, 2 ** (n - 1) - 1, 2 ** (n - 2) - 1):
                hits.add(n)
    assert hits == expected == {3, 5, 7, 13}


# -- smaller family facts --------------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5])
def test_andrasfai_invariants(n):
    g = gf.andrasfai(n)
    assert g.n == 3 * n - 1 and g.is_regular and g.max_degree == n
    assert gc.diameter(g) == 2
    assert gc.girth(g) == 4
    assert gc.chromatic_number(g) == 3
    assert gc.independence_number(g) == n


@pytest.mark.parametrize("q", [5, 9, 13, 17])
def test_paley_nonsquare_scaling_switches_edges(q):
    g = gf.paley(q)
    spec = ff.construct_field(*ff.prime_power_decomposition(q))
    gen = spec.generator()  # a generator is never a square
    for i in range(q):
        for j in range(i + 1, q):
            u = (spec.element(i) * gen).index
            v = (spec.element(j) * gen).index
            assert g.has_edge(i, j) != g.has_edge(u, v)


def test_decked_cube_bipartite_iff_odd_weight():
    assert gf.decked_cube(3, (1, 1, 1)).is_bipartite
    assert not gf.decked_cube(3, (1, 1, 0)).is_bipartite
    assert gf.decked_cube(4, (1, 1, 1, 0)).is_bipartite
    assert not gf.decked_cube(4, (1, 1, 0, 0)).is_bipartite


@pytest.mark.parametrize("n,weight2", [(3, (1, 1, 0)), (4, (1, 1, 0, 0))])
def test_decked_cube_double_is_next_cube(n, weight2):
    dq = gf.decked_cube(n, weight2)
    assert iso(gc.bipartite_double(dq), gf.cube(n + 1))


@pytest.mark.parametrize("q", [11, 13])
def test_every_squarefree_cubic_has_nonsquare_value(q):
    spec = ff.construct_field(q, 1)
    sig = ff.signature_table(spec)
    for c2 in range(q):
        for c1 in range(q):
            for c0 in range(q):
                roots = [x for x in range(q) if (x**3 + c2 * x * x + c1 * x + c0) % q == 0]
                if len(roots) != len(set(roots)):
                    continue
                # square-free check: no repeated roots via derivative gcd
                der = lambda x: (3 * x * x + 2 * c2 * x + c1) % q
                if any(der(r) == 0 for r in roots):
                    continue
                values = {(x**3 + c2 * x * x + c1 * x + c0) % q for x in range(q)}
                assert any(v and sig[v] == -1 for v in values)


def test_tutte_coxeter_metrics():
    g = gf.tutte_coxeter()
    assert gc.diameter(g) == 4 and gc.girth(g) == 8


def test_frucht_trivial_automorphisms():
    assert gc.automorphism_count(gf.frucht()) == 1


def test_halved_cube_shape():
    g = gf.halved_cube(4)
    assert g.n == 8 and g.is_regular and g.max_degree == math.comb(4, 2)


@pytest.mark.parametrize("k", [3, 4])
def test_small_diameter_family(k):
    g = gf.small_diameter_x(k)
    assert g.n == 3 * 2**k - 2
    assert g.is_regular and g.max_degree == 3
    assert gc.diameter(g) == 2 * k


def test_small_diameter_not_expander_witness():
    # one main branch has boundary 1: beta <= 1/(2^k - 1)
    from fractions import Fraction

    g = gf.small_diameter_x(3)
    beta, _ = gc.isoperimetric_constant(g, cap=24)
    assert beta <= Fraction(1, 2**3 - 1)


def test_trees_shape():
    t = gf.tree(3, 3, "T")
    assert t.max_degree == 3 and gc.girth(t) == math.inf
    assert t.degrees.count(1) == 8  # pendants of T_{3,3}
    tt = gf.tree(3, 3, "Tt")
    assert tt.n == 3 * 2**3 - 2
    assert tt.degree(0) == 3


def test_registry_build():
    assert gf.build("petersen").n == 10
    assert gf.build("paley", "13").n == 13
    assert gf.build("decked_cube", 3, "110").n == 8
    with pytest.raises(BadParameters):
        gf.build("nonesuch")
