"""Eigensolver contracts, closed-form spectra, classifiers and feasibility,
plus the spectral invariants over a sub-corpus."""

import math

import numpy as np
import pytest

from specgraph import graph_core as gc
from specgraph import graph_families as gf
from specgraph import spectra as sp
from specgraph.errors import IdentityViolated, Mismatch, NoClosedForm, NotSymmetric, SizeOverflow


def adj_spectrum(g):
    return sp.eig_symmetric(sp.adjacency_matrix(g))


# -- matrices -----------------------------------------------------------------

def test_matrices_sum_to_degree_diagonal():
    g = gf.paley(13)
    a, lap = sp.matrices(g)
    assert np.array_equal(a + lap, np.diag([g.degree(v) for v in range(g.n)]))


def test_k3_matrices():
    a, lap = sp.matrices(gf.complete(3))
    assert np.array_equal(a, np.ones((3, 3)) - np.eye(3))
    assert np.array_equal(lap, 3 * np.eye(3) - np.ones((3, 3)))


def test_laplacian_rows_sum_to_zero():
    for g in [gf.petersen(), gf.wheel(6), gf.tree(3, 3)]:
        lap = sp.laplacian_matrix(g)
        assert np.abs(lap.sum(axis=1)).max() == 0


def test_bipartite_adjacency_block_form():
    g = gf.heawood()
    black, white = g.bipartition
    order = sorted(black) + sorted(white)
    a = sp.adjacency_matrix(g)[np.ix_(order, order)]
    half = len(black)
    assert np.abs(a[:half, :half]).max() == 0
    assert np.abs(a[half:, half:]).max() == 0


# -- eigensolver -----------------------------------------------------------------

def test_eig_diagonal():
    s = sp.eig_symmetric(np.diag([3.0, 1.0, 2.0]))
    assert [v for v, _ in s.entries] == [3.0, 2.0, 1.0]


def test_eig_rejects_asymmetric_and_oversize():
    with pytest.raises(NotSymmetric):
        sp.eig_symmetric(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(SizeOverflow):
        sp.eig_symmetric(np.zeros((5000, 5000)))


def test_petersen_spectrum():
    s = adj_spectrum(gf.petersen())
    assert [(round(v), m) for v, m in s.entries] == [(3, 1), (1, 5), (-2, 4)]
    assert abs(s.entries[0][0] - 3) < 1e-9
    assert abs(s.entries[1][0] - 1) < 1e-9
    assert abs(s.entries[2][0] + 2) < 1e-9


def test_frucht_against_determinant_bisection_oracle():
    """The twelve Frucht eigenvalues are simple; recover each from sign
    changes of det(A - xI) computed by LU factorization (an algorithm
    independent of the symmetric eigensolver)."""
    g = gf.frucht()
    a = sp.adjacency_matrix(g)
    numeric = np.sort(adj_spectrum(g).expanded())

    def char_det(x):
        return float(np.linalg.det(a - x * np.eye(g.n)))

    grid = np.arange(-3.5, 3.51, 0.005)
    roots = []
    for lo, hi in zip(grid[:-1], grid[1:]):
        flo, fhi = char_det(lo), char_det(hi)
        if flo == 0.0:
            roots.append(lo)
            continue
        if flo * fhi < 0:
            a_, b_ = lo, hi
            for _ in range(60):
                mid = (a_ + b_) / 2
                if char_det(a_) * char_det(mid) <= 0:
                    b_ = mid
                else:
                    a_ = mid
            roots.append((a_ + b_) / 2)
    assert len(roots) == 12
    assert np.abs(np.sort(roots) - numeric).max() < 1e-8


def test_vector_output_residual():
    g = gf.paley(13)
    a = sp.adjacency_matrix(g)
    _, w, v = sp.eig_symmetric_with_vectors(a)
    residual = np.abs(a @ v - v * w).max()
    assert residual <= 1e-8 * np.abs(a).sum()


# -- closed forms -----------------------------------------------------------------

def test_srg_closed_form_twins():
    cf = sp.closed_form_spectrum("shrikhande")
    assert [(round(v), m) for v, m, _ in cf.entries] == [(6, 1), (2, 6), (-2, 9)]


def test_paley13_closed_form_values():
    cf = sp.closed_form_spectrum("paley", 13)
    values = [v for v, _, _ in cf.entries]
    mults = [m for _, m, _ in cf.entries]
    assert values == pytest.approx([6, (math.sqrt(13) - 1) / 2, (-math.sqrt(13) - 1) / 2])
    assert mults == [1, 6, 6]


def test_sp5_closed_form():
    cf = sp.closed_form_spectrum("sum_product", 5)
    as_pairs = [(round(v, 6), m) for v, m, _ in cf.entries]
    r5 = round(math.sqrt(5), 6)
    assert as_pairs == [(4, 1), (r5, 12), (1, 4), (0, 6), (-1, 4), (-r5, 12), (-4, 1)]


def test_tree_radial_top_eigenvalue():
    g = gf.tree(3, 3)
    top = adj_spectrum(g).max
    assert top == pytest.approx(2 * math.sqrt(2) * math.cos(math.pi / 5), abs=1e-9)


@pytest.mark.parametrize("d,r", [(3, 2), (3, 3), (4, 2)])
def test_radial_tree_lists_appear_in_spectrum(d, r):
    g = gf.tree(d, r)
    numeric = adj_spectrum(g).expanded()
    lap_numeric = sp.eig_symmetric(sp.laplacian_matrix(g), "laplacian").expanded()
    adj_list, lap_list = sp.radial_tree_eigenvalues(d, r)
    for value in adj_list:
        assert np.min(np.abs(numeric - value)) < 1e-7
    for value in lap_list:
        assert np.min(np.abs(lap_numeric - value)) < 1e-7
    assert max(adj_list) == pytest.approx(numeric.max())
    assert max(lap_list) == pytest.approx(lap_numeric.max())


def test_q4_binomial_multiplicities():
    cf = sp.closed_form_spectrum("cube", 4)
    assert [(round(v), m) for v, m, _ in cf.entries] == [
        (4, 1), (2, 4), (0, 6), (-2, 4), (-4, 1)]
    assert sp.verify_closed_form(gf.cube(4), cf)["ok"]


def test_corrupted_multiplicity_mismatch():
    cf = sp.closed_form_spectrum("cube", 3)
    bad = sp.ClosedForm(cf.family, cf.matrix_kind, tuple(
        (v, (m + 1 if i == 0 else m), lbl) for i, (v, m, lbl) in enumerate(cf.entries)))
    with pytest.raises(Mismatch):
        sp.verify_closed_form(gf.cube(3), bad)


def test_wrong_value_mismatch():
    cf = sp.closed_form_spectrum("complete", 5)
    bad = sp.ClosedForm(cf.family, cf.matrix_kind,
                        ((5.0, 1, "n"), (-1.0, 4, "-1")))
    with pytest.raises(Mismatch):
        sp.verify_closed_form(gf.complete(5), bad)


def test_no_closed_form_for_andrasfai():
    with pytest.raises(NoClosedForm):
        sp.closed_form_spectrum("andrasfai", 4)


def test_laplacian_closed_form_regular():
    g = gf.paley(9)
    cf = sp.closed_form_spectrum("paley", 9).laplacian_for_regular(4)
    assert sp.verify_closed_form(g, cf)["ok"]


def test_paley_eigenvalues_via_field_characters():
    """The non-trivial Paley eigenvalues are the character sums over the
    non-zero squares; each relates to a Gauss sum by G(psi, sigma) = 2a + 1,
    and the values split evenly between (+-sqrt(q) - 1)/2."""
    from specgraph import characters as ch
    from specgraph import finite_field as ff

    q = 13
    spec = ff.construct_field(13, 1)
    sig = ff.signature_table(spec)
    squares = [spec.element(i) for i in range(1, q) if sig[i] == 1]
    sigma = ch.quadratic_character(spec)
    seen = []
    for t in range(1, q):
        psi = ch.AdditiveCharacter(spec, spec.element(t))
        alpha = sum(psi(s) for s in squares)
        assert abs(alpha.imag) < 1e-9
        gauss = ch.gauss_sum(psi, sigma)
        assert abs(gauss - (2 * alpha + 1)) < 1e-9
        seen.append(alpha.real)
    plus = sum(1 for a in seen if abs(a - (math.sqrt(q) - 1) / 2) < 1e-9)
    minus = sum(1 for a in seen if abs(a - (-math.sqrt(q) - 1) / 2) < 1e-9)
    assert plus == minus == (q - 1) // 2
    cf = sp.closed_form_spectrum("paley", q)
    assert sorted(v for v, m, _ in cf.entries for _ in range(m))[:-1] == \
        pytest.approx(sorted(seen))


def test_cayley_generic_closed_form_from_meta():
    g = gf.decked_cube(4, (1, 1, 1, 0))
    cf = sp.closed_form_for_graph(g)
    assert sp.verify_closed_form(g, cf)["ok"]
    h = gf.incidence(3, 3)
    cf2 = sp.closed_form_for_graph(h)  # bi-Cayley route
    assert sp.verify_closed_form(h, cf2)["ok"]


def test_cone_and_complement_laplacian_rules():
    # laplacian of a cone: {0, n0+1} + (lambda_k + 1); complement: {0} + (n - lambda)
    base = gf.cycle(6)
    base_lap = sp.eig_symmetric(sp.laplacian_matrix(base), "laplacian")
    base_cf = sp.ClosedForm("c6lap", "laplacian",
                            tuple((v, m, "x") for v, m in base_lap.entries))
    cone_graph = gc.cone(base)
    entries = [(0.0, 1, "0"), (float(base.n + 1), 1, "n0+1")]
    dropped = False
    for v, m, lbl in sorted(base_cf.entries, key=lambda t: t[0]):
        if not dropped and abs(v) < 1e-9:
            m -= 1
            dropped = True
        if m > 0:
            entries.append((v + 1, m, lbl))
    cone_cf = sp._form("cone_c6", entries, kind="laplacian")
    assert sp.verify_closed_form(cone_graph, cone_cf)["ok"]

    comp = gc.complement(gf.petersen())
    pet_lap = sp.eig_symmetric(sp.laplacian_matrix(gf.petersen()), "laplacian")
    pet_cf = sp.ClosedForm("petlap", "laplacian",
                           tuple((v, m, "x") for v, m in pet_lap.entries))
    comp_cf = sp.complement_laplacian_closed_form(pet_cf, 10, "pet_complement")
    assert sp.verify_closed_form(comp, comp_cf)["ok"]


def test_product_rule_spectra():
    for a, b in [(gf.complete(3), gf.complete(3)), (gf.complete(2), gf.cycle(4))]:
        cf_a = sp.ClosedForm("a", "adjacency",
                             tuple((v, m, "x") for v, m in adj_spectrum(a).entries))
        cf_b = sp.ClosedForm("b", "adjacency",
                             tuple((v, m, "x") for v, m in adj_spectrum(b).entries))
        cf = sp.product_closed_form(cf_a, cf_b)
        assert sp.verify_closed_form(gc.product(a, b), cf)["ok"]


def test_double_rule_spectrum():
    pet = gf.petersen()
    cf = sp.double_closed_form(sp.closed_form_spectrum("petersen"))
    assert sp.verify_closed_form(gc.bipartite_double(pet), cf)["ok"]


def test_partial_design_closed_form_machinery():
    c1 = gf.c1_graph(gf.tutte_coxeter(), 0)
    c1_spec = adj_spectrum(c1)
    cf = sp.partial_design_closed_form(15, 3, 0, 1, c1_spec.entries)
    expected = sp.closed_form_spectrum("tutte_coxeter")
    assert [(round(v, 9), m) for v, m, _ in cf.entries] == \
        [(round(v, 9), m) for v, m, _ in expected.entries]


# -- classifiers -------------------------------------------------------------------

def test_classifiers_petersen():
    g = gf.petersen()
    adj, lap = sp.graph_spectra(g)
    out = sp.spectrum_classifiers(adj, g.n, lap)
    assert out["regular"] and not out["bipartite"]
    assert out["connected_components"] == 1
    assert out["srg"] == gf.SrgParams(10, 3, 0, 1)


def test_classifiers_heawood_extremal_design():
    g = gf.heawood()
    adj, lap = sp.graph_spectra(g)
    out = sp.spectrum_classifiers(adj, g.n, lap)
    assert out["bipartite"] and out["regular"]
    assert out["design"] == gf.DesignParams(7, 3, 1)
    assert out["extremal_design_degree"] == 3


def test_classifiers_k33():
    g = gf.complete_bipartite(3, 3)
    adj, lap = sp.graph_spectra(g)
    out = sp.spectrum_classifiers(adj, g.n, lap)
    assert out["bipartite"] and out["regular"]
    assert out["design"] == gf.DesignParams(3, 3, 3)  # c = d


def test_classifier_counts_components():
    g = gc.Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    adj, lap = sp.graph_spectra(g)
    out = sp.spectrum_classifiers(adj, g.n, lap)
    assert out["connected_components"] == 2


def test_classifier_irregular():
    g = gf.star(5)
    adj, lap = sp.graph_spectra(g)
    out = sp.spectrum_classifiers(adj, g.n, lap)
    assert not out["regular"] and out["bipartite"]


# -- feasibility ---------------------------------------------------------------------

def test_srg_feasibility_cases():
    assert sp.srg_feasibility(10, 3, 0, 1) == ("integral", 3)
    for c in (1, 2, 3):
        assert sp.srg_feasibility(4 * c + 1, 2 * c, c - 1, c) == ("quadratic", None)
    kind, reason = sp.srg_feasibility(28, 9, 0, 1)
    assert kind == "infeasible"


def test_srg_feasibility_identity_violation():
    # (18,6,2,2): integral multiplicities (7 and 10), but the double-counting
    # identity fails, so the tuple is rejected rather than reported feasible
    with pytest.raises(IdentityViolated):
        sp.srg_feasibility(18, 6, 2, 2)
    # non-square discriminant dominates: reported infeasible before identity
    assert sp.srg_feasibility(16, 6, 2, 3)[0] == "infeasible"


def test_moore_enumeration():
    assert sp.moore_graph_enumeration(100) == [(5, 2), (10, 3), (50, 7), (3250, 57)]


# -- spectral invariants over a sub-corpus ----------------------------------------------

def spectral_corpus():
    return [gf.complete(5), gf.cycle(6), gf.cube(3), gf.petersen(), gf.heawood(),
            gf.paley(13), gf.shrikhande(), gf.star(6), gf.wheel(7), gf.tree(3, 2),
            gf.sum_product(3), gf.andrasfai(3), gf.tutte_coxeter()]


def test_trace_identities_with_triangle_oracle():
    for g in spectral_corpus():
        values = adj_spectrum(g).expanded()
        assert abs(values.sum()) < 1e-8 * g.n
        assert abs((values**2).sum() - 2 * g.edge_count) < 1e-8 * g.n * g.max_degree
        # brute-force triangle count
        triangles = sum(1 for i in range(g.n) for j in range(i + 1, g.n)
                        for k in range(j + 1, g.n)
                        if g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k))
        assert abs((values**3).sum() - 6 * triangles) < 1e-7 * g.n * g.max_degree**2


def test_interval_location():
    for g in spectral_corpus():
        adj, lap = sp.graph_spectra(g)
        d = g.max_degree
        assert adj.min >= -d - 1e-9 and adj.max <= d + 1e-9
        assert lap.min >= -1e-9 and lap.max <= 2 * d + 1e-9


def test_distinct_count_vs_diameter():
    for g in spectral_corpus():
        adj, lap = sp.graph_spectra(g)
        delta = gc.diameter(g)
        assert len(adj.entries) >= delta + 1
        assert len(lap.entries) >= delta + 1


def test_lambda_max_2d_iff_regular_bipartite():
    for g in spectral_corpus():
        lap = sp.eig_symmetric(sp.laplacian_matrix(g), "laplacian")
        is_2d = abs(lap.max - 2 * g.max_degree) < 1e-6
        assert is_2d == (g.is_regular and g.is_bipartite)


def test_degree_sandwich():
    for g in spectral_corpus():
        adj, lap = sp.graph_spectra(g)
        sums = adj.expanded() + lap.ascending()
        assert sums.min() >= g.min_degree - 1e-8
        assert sums.max() <= g.max_degree + 1e-8


def test_isospectral_pairs():
    for a, b in [(gf.shrikhande(), gf.rook_twin()),
                 (gf.machine([4]), gf.machine([2, 2]))]:
        sa, sb = adj_spectrum(a), adj_spectrum(b)
        assert len(sa.entries) == len(sb.entries)
        for (va, ma), (vb, mb) in zip(sa.entries, sb.entries):
            assert abs(va - vb) < 1e-7 and ma == mb
        assert not gc.is_isomorphic(a, b)[0]


def test_spectrum_json():
    s = adj_spectrum(gf.petersen())
    data = s.to_json()
    assert data["kind"] == "adjacency"
    assert sum(e["multiplicity"] for e in data["entries"]) == 10


# recorded numeric fixtures: no closed form is claimed for these spectra
ANDRASFAI_SPECTRA = {
    3: [(3.0, 1), (1.0, 2), (0.4142135624, 2), (-1.0, 1), (-2.4142135624, 2)],
    4: [(4.0, 1), (1.3978773891, 2), (0.5462003495, 2), (0.3727855978, 2),
        (-1.0881559212, 2), (-3.2287074151, 2)],
    5: [(5.0, 1), (1.8019377358, 2), (0.6920214716, 2), (0.4450418679, 2),
        (0.3568958679, 2), (-1.0, 1), (-1.2469796037, 2), (-4.0489173395, 2)],
}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_andrasfai_numeric_spectrum_fixture(n):
    s = adj_spectrum(gf.andrasfai(n))
    expected = ANDRASFAI_SPECTRA[n]
    assert len(s.entries) == len(expected)
    for (v, m), (ev, em) in zip(s.entries, expected):
        assert v == pytest.approx(ev, abs=1e-7) and m == em
    # and the diameter-bound remark: many more distinct values than diam + 1
    assert len(s.entries) > gc.diameter(gf.andrasfai(n)) + 1
