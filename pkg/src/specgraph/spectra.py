"""Adjacency/laplacian matrices, the dense symmetric eigensolver with
multiplicity clustering, closed-form spectra for the families that have one,
and the spectrum-based classifiers.

The numeric eigensolver is LAPACK's symmetric solver (tridiagonalization plus
implicit-shift iteration) behind a clustering layer; closed forms are kept as
exact expressions and evaluated only at comparison time, so the two routes
stay independent.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import IdentityViolated, Mismatch, NoClosedForm, NotSymmetric, SizeOverflow
from .graph_core import Graph
from . import graph_families as gf

EIG_SIZE_CAP = 4096
VALUE_MERGE_TOL = 1e-9
COMPARE_TOL = 1e-7


# -- matrices -----------------------------------------------------------------

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def matrices(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """(A, L); they satisfy A + L = diag(deg) exactly."""
    a = adjacency_matrix(g)
    return a, np.diag(a.sum(axis=1)) - a


# -- spectrum -----------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Clustered eigenvalues, sorted descending, with multiplicities."""

    entries: tuple[tuple[float, int], ...]
    matrix_kind: str
    cluster_tol: float

    @property
    def n(self) -> int:
        return sum(m for _, m in self.entries)

    def expanded(self) -> np.ndarray:
        """All eigenvalues, descending."""
        return np.array([v for v, m in self.entries for _ in range(m)])

    def ascending(self) -> np.ndarray:
        return self.expanded()[::-1]

    @property
    def max(self) -> float:
        return self.entries[0][0]

    @property
    def min(self) -> float:
        return self.entries[-1][0]

    def kth_largest(self, k: int) -> float:
        """1-based: kth_largest(1) is the top eigenvalue with multiplicity."""
        return float(self.expanded()[k - 1])

    def kth_smallest(self, k: int) -> float:
        return float(self.ascending()[k - 1])

    @property
    def second_largest(self) -> float:
        return self.kth_largest(2)

    @property
    def lambda2(self) -> float:
        return self.kth_smallest(2)

    def distinct_values(self) -> list[float]:
        return [v for v, _ in self.entries]

    def multiplicity_near(self, value: float, tol: float = 1e-6) -> int:
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def to_json(self) -> dict:
        return {
            "kind": self.matrix_kind,
            "n": self.n,
            "cluster_tol": self.cluster_tol,
            "entries": [{"value": v, "multiplicity": m} for v, m in self.entries],
        }


def _cluster(values: np.ndarray, tol: float) -> tuple[tuple[float, int], ...]:
    """Group sorted-descending values into (mean, multiplicity) clusters."""
    out: list[tuple[float, int]] = []
    cluster: list[float] = [float(values[0])]
    for v in values[1:]:
        v = float(v)
        if abs(cluster[-1] - v) <= tol:
            cluster.append(v)
        else:
            out.append((sum(cluster) / len(cluster), len(cluster)))
            cluster = [v]
    out.append((sum(cluster) / len(cluster), len(cluster)))
    return tuple(out)


def eig_symmetric(matrix: np.ndarray, kind: str = "adjacency") -> Spectrum:
    """All eigenvalues of a real symmetric matrix, multiplicity-clustered.

    Cluster tolerance is 1e-6 * max(1, spectral radius): wide enough to merge
    numerically split multiplicities, narrow enough to keep genuinely distinct
    surds apart.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric("matrix must be square")
    if m.shape[0] > EIG_SIZE_CAP:
        raise SizeOverflow(f"n = {m.shape[0]} over eigensolver cap {EIG_SIZE_CAP}")
    scale = max(1.0, float(np.abs(m).max()) if m.size else 0.0)
    if float(np.abs(m - m.T).max()) > 1e-12 * scale:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    values = np.linalg.eigvalsh(m)[::-1]
    radius = max(1.0, float(np.abs(values).max()))
    tol = 1e-6 * radius
    return Spectrum(_cluster(values, tol), kind, tol)


def eig_symmetric_with_vectors(matrix: np.ndarray, kind: str = "adjacency"):
    """(Spectrum, raw ascending eigenvalues, eigenvector columns)."""
    m = np.asarray(matrix, dtype=float)
    spec = eig_symmetric(m, kind)
    w, v = np.linalg.eigh(m)
    return spec, w, v


def graph_spectra(g: Graph) -> tuple[Spectrum, Spectrum]:
    a, lap = matrices(g)
    return eig_symmetric(a, "adjacency"), eig_symmetric(lap, "laplacian")


# -- closed forms -----------------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    """Symbolically-derived spectrum: (value, multiplicity, label) entries,
    sorted descending; values are exact expressions evaluated to doubles."""

    family: str
    matrix_kind: str
    entries: tuple[tuple[float, int, str], ...]

    @property
    def n(self) -> int:
        return sum(m for _, m, _ in self.entries)

    def value_mults(self) -> tuple[tuple[float, int], ...]:
        return tuple((v, m) for v, m, _ in self.entries)

    def laplacian_for_regular(self, d: int) -> "ClosedForm":
        """lambda = d - alpha, valid for d-regular families."""
        entries = tuple((d - v, m, f"{d}-({lbl})") for v, m, lbl in reversed(self.entries))
        return ClosedForm(self.family, "laplacian", entries)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "kind": self.matrix_kind,
            "entries": [{"value": v, "multiplicity": m, "label": lbl}
                        for v, m, lbl in self.entries],
        }


def _form(family: str, pairs, kind: str = "adjacency") -> ClosedForm:
    """Merge (value, mult, label) triples that agree within tolerance and sort
    descending."""
    merged: list[list] = []
    for v, m, lbl in sorted(pairs, key=lambda t: -t[0]):
        if merged and abs(merged[-1][0] - v) <= VALUE_MERGE_TOL:
            merged[-1][1] += m
        else:
            merged.append([v, m, lbl])
    return ClosedForm(family, kind, tuple((v, m, lbl) for v, m, lbl in merged))


def srg_closed_form(n: int, d: int, a: int, c: int, family: str = "srg") -> ClosedForm:
    """Three eigenvalues of a strongly regular graph with the stated
    parameters and multiplicities."""
    gf.SrgParams(n, d, a, c)  # validates the double-counting identity
    disc = (a - c) ** 2 + 4 * (d - c)
    root = math.sqrt(disc)
    alpha2 = (a - c + root) / 2
    alpha3 = (a - c - root) / 2
    num = (n - 1) * (a - c) + 2 * d
    m2 = (n - 1 - num / root) / 2
    m3 = (n - 1 + num / root) / 2
    if abs(m2 - round(m2)) > 1e-9 or abs(m3 - round(m3)) > 1e-9:
        raise IdentityViolated(f"non-integral multiplicities for ({n},{d},{a},{c})")
    return _form(family, [
        (float(d), 1, "d"),
        (alpha2, round(m2), f"(a-c+sqrt({disc}))/2"),
        (alpha3, round(m3), f"(a-c-sqrt({disc}))/2"),
    ])


def design_closed_form(m: int, d: int, c: int, family: str = "design") -> ClosedForm:
    gf.DesignParams(m, d, c)
    r = math.sqrt(d - c)
    return _form(family, [
        (float(d), 1, "d"), (-float(d), 1, "-d"),
        (r, m - 1, f"sqrt({d - c})"), (-r, m - 1, f"-sqrt({d - c})"),
    ])


def partial_design_closed_form(m: int, d: int, c1: int, c2: int,
                               c1_graph_values, family: str = "partial_design") -> ClosedForm:
    """Spectrum of a partial design graph from its parameters and the
    spectrum of the c1-graph; the c1-graph's trivial eigenvalue d' is dropped
    and every remaining alpha' contributes +-sqrt((d-c2)+(c1-c2) alpha')."""
    params = gf.PartialDesignParams(m, d, c1, c2)
    dprime = gf.c1_graph_degree(params, c1)
    pool = [(v, mult) for v, mult in c1_graph_values]
    # remove one copy of the trivial eigenvalue d'
    for i, (v, mult) in enumerate(pool):
        if abs(v - dprime) <= 1e-6:
            pool[i] = (v, mult - 1)
            break
    else:
        raise Mismatch("c1-graph spectrum lacks its trivial eigenvalue")
    entries = [(float(d), 1, "d"), (-float(d), 1, "-d")]
    for v, mult in pool:
        if mult <= 0:
            continue
        inner = (d - c2) + (c1 - c2) * v
        if inner < -1e-6:
            raise IdentityViolated("negative value under the square root")
        if abs(inner) < 1e-9:  # snap clustering noise so +-0 merge
            inner = 0.0
        r = math.sqrt(max(inner, 0.0))
        entries.append((r, mult, f"sqrt({inner:.9g})"))
        entries.append((-r, mult, f"-sqrt({inner:.9g})"))
    return _form(family, entries)


def cayley_closed_form(orders, generators, family: str = "cayley") -> ClosedForm:
    """Character-sum spectrum of an abelian Cayley graph: one eigenvalue
    sum_{s in S} chi(s) per character chi."""
    orders = tuple(int(m) for m in orders)
    entries = []
    for ks in gf._group_elements(orders):
        total = 0j
        for s in generators:
            phase = sum(k * x / m for k, x, m in zip(ks, s, orders))
            total += cmath.exp(2j * cmath.pi * phase)
        entries.append((total.real, 1, f"chi{ks}"))
    return _form(family, entries)


def bicayley_closed_form(orders, subset, family: str = "bicayley") -> ClosedForm:
    """Spectrum +-|sum_{s in S} chi(s)| of an abelian bi-Cayley graph."""
    orders = tuple(int(m) for m in orders)
    entries = []
    for ks in gf._group_elements(orders):
        total = 0j
        for s in subset:
            phase = sum(k * x / m for k, x, m in zip(ks, s, orders))
            total += cmath.exp(2j * cmath.pi * phase)
        r = abs(total)
        entries.append((r, 1, f"+|chi{ks}|"))
        entries.append((-r, 1, f"-|chi{ks}|"))
    return _form(family, entries)


def cone_closed_form_adjacency(base: ClosedForm, base_degree: int, family: str) -> ClosedForm:
    """Adjacency spectrum of the cone over a regular graph: drop one copy of
    the base's trivial eigenvalue, add the two roots of
    x^2 - d0 x - n0 = 0."""
    n0 = base.n
    root = math.sqrt(base_degree**2 + 4 * n0)
    entries = [((base_degree + root) / 2, 1, "cone+"),
               ((base_degree - root) / 2, 1, "cone-")]
    dropped = False
    for v, m, lbl in base.entries:
        if not dropped and abs(v - base_degree) <= 1e-9:
            m -= 1
            dropped = True
        if m > 0:
            entries.append((v, m, lbl))
    if not dropped:
        raise Mismatch("base spectrum lacks its trivial eigenvalue")
    return _form(family, entries)


def complement_laplacian_closed_form(base_lap: ClosedForm, n: int, family: str) -> ClosedForm:
    """Laplacian of the complement: {0} plus {n - lambda} over the non-trivial
    part of the base laplacian spectrum."""
    entries = [(0.0, 1, "0")]
    dropped = False
    for v, m, lbl in sorted(base_lap.entries, key=lambda t: t[0]):
        if not dropped and abs(v) <= 1e-9:
            m -= 1
            dropped = True
        if m > 0:
            entries.append((float(n) - v, m, f"{n}-({lbl})"))
    if not dropped:
        raise Mismatch("laplacian spectrum lacks the 0 eigenvalue")
    return _form(family, entries, kind="laplacian")


def product_closed_form(a: ClosedForm, b: ClosedForm, family: str = "product") -> ClosedForm:
    entries = [(va + vb, ma * mb, f"{la}+{lb}")
               for va, ma, la in a.entries for vb, mb, lb in b.entries]
    return _form(family, entries)


def double_closed_form(a: ClosedForm, family: str = "double") -> ClosedForm:
    entries = [(v, m, lbl) for v, m, lbl in a.entries]
    entries += [(-v, m, f"-({lbl})") for v, m, lbl in a.entries]
    return _form(family, entries)


def radial_tree_eigenvalues(d: int, radius: int) -> tuple[list[float], list[float]]:
    """Eigenvalues of T_{d,R} carried by radial eigenfunctions: the adjacency
    list 2 sqrt(d-1) cos(pi k/(R+2)) and the laplacian list
    {0} + {d - 2 sqrt(d-1) cos(pi k/(R+1))}; all simple, and the extremes of
    the full spectrum."""
    s = 2 * math.sqrt(d - 1)
    adj = [s * math.cos(math.pi * k / (radius + 2)) for k in range(1, radius + 2)]
    lap = [0.0] + [d - s * math.cos(math.pi * k / (radius + 1)) for k in range(1, radius + 1)]
    return adj, lap


# family-specific closed forms ----------------------------------------------------


def _cf_complete(n: int) -> ClosedForm:
    return _form("complete", [(n - 1.0, 1, "n-1"), (-1.0, n - 1, "-1")])


def _cf_cycle(n: int) -> ClosedForm:
    entries = [(2.0, 1, "2cos(0)")]
    for k in range(1, (n + 1) // 2):
        entries.append((2 * math.cos(2 * math.pi * k / n), 2, f"2cos(2pi{k}/{n})"))
    if n % 2 == 0:
        entries.append((-2.0, 1, "2cos(pi)"))
    return _form("cycle", entries)


def _cf_cube(n: int) -> ClosedForm:
    return _form("cube", [(float(n - 2 * k), math.comb(n, k), f"{n}-2*{k}")
                          for k in range(n + 1)])


def _cf_complete_bipartite(m: int, n: int) -> ClosedForm:
    r = math.sqrt(m * n)
    entries = [(r, 1, "sqrt(mn)"), (-r, 1, "-sqrt(mn)")]
    if m + n > 2:
        entries.append((0.0, m + n - 2, "0"))
    return _form("complete_bipartite", entries)


def _cf_path(n: int) -> ClosedForm:
    return _form("path", [(2 * math.cos(math.pi * k / (n + 1)), 1, f"2cos(pi{k}/{n + 1})")
                          for k in range(1, n + 1)])


def _cf_paley(q: int) -> ClosedForm:
    r = math.sqrt(q)
    half = (q - 1) // 2
    return _form("paley", [
        (half, 1, "(q-1)/2"),
        (( r - 1) / 2, half, "(sqrt(q)-1)/2"),
        ((-r - 1) / 2, half, "(-sqrt(q)-1)/2"),
    ])


def _cf_bi_paley(q: int) -> ClosedForm:
    half = (q - 1) / 2
    r = math.sqrt(q + 1) / 2
    return _form("bi_paley", [
        (half, 1, "(q-1)/2"), (-half, 1, "-(q-1)/2"),
        (r, q - 1, "sqrt(q+1)/2"), (-r, q - 1, "-sqrt(q+1)/2"),
    ])


def _cf_incidence(n: int, q: int) -> ClosedForm:
    d = (q ** (n - 1) - 1) // (q - 1)
    mid = q ** (n / 2 - 1)
    mult = (q**n - q) // (q - 1)
    return _form("incidence", [
        (float(d), 1, "d"), (-float(d), 1, "-d"),
        (mid, mult, "q^(n/2-1)"), (-mid, mult, "-q^(n/2-1)"),
    ])


def _cf_sum_product(q: int) -> ClosedForm:
    r = math.sqrt(q)
    return _form("sum_product", [
        (q - 1.0, 1, "q-1"), (-(q - 1.0), 1, "-(q-1)"),
        (r, (q - 1) * (q - 2), "sqrt(q)"), (-r, (q - 1) * (q - 2), "-sqrt(q)"),
        (1.0, q - 1, "1"), (-1.0, q - 1, "-1"),
        (0.0, 2 * (q - 2), "0"),
    ])


def _cf_full_sum_product(q: int) -> ClosedForm:
    r = math.sqrt(q)
    return _form("full_sum_product", [
        (float(q), 1, "q"), (-float(q), 1, "-q"),
        (r, q * (q - 1), "sqrt(q)"), (-r, q * (q - 1), "-sqrt(q)"),
        (0.0, 2 * (q - 1), "0"),
    ])


def _cf_tutte_coxeter() -> ClosedForm:
    return _form("tutte_coxeter", [
        (3.0, 1, "3"), (-3.0, 1, "-3"),
        (2.0, 9, "2"), (-2.0, 9, "-2"),
        (0.0, 10, "0"),
    ])


def _cf_machine(orders) -> ClosedForm:
    size = 1
    for m in orders:
        size *= int(m)
    return srg_closed_form(size * size, 3 * size - 3, size, 6, family="machine")


def _cf_star(n: int) -> ClosedForm:
    return _cf_complete_bipartite(1, n - 1)


def _cf_windmill(k: int) -> ClosedForm:
    base = _form("kK2", [(1.0, k, "1"), (-1.0, k, "-1")])
    return cone_closed_form_adjacency(base, 1, "windmill")


def _cf_wheel(n: int) -> ClosedForm:
    return cone_closed_form_adjacency(_cf_cycle(n - 1), 2, "wheel")


def _cf_halved_cube(n: int) -> ClosedForm:
    g = gf.halved_cube(n)
    info = g.meta["cayley"]
    return cayley_closed_form(info["orders"], info["generators"], family="halved_cube")


def _cf_decked_cube(n: int, bits) -> ClosedForm:
    g = gf.decked_cube(n, bits)
    info = g.meta["cayley"]
    return cayley_closed_form(info["orders"], info["generators"], family="decked_cube")


_CLOSED_FORMS = {
    "complete": _cf_complete,
    "cycle": _cf_cycle,
    "cube": _cf_cube,
    "complete_bipartite": _cf_complete_bipartite,
    "path": _cf_path,
    "star": _cf_star,
    "windmill": _cf_windmill,
    "wheel": _cf_wheel,
    "paley": _cf_paley,
    "bi_paley": _cf_bi_paley,
    "incidence": _cf_incidence,
    "sum_product": _cf_sum_product,
    "full_sum_product": _cf_full_sum_product,
    "tutte_coxeter": _cf_tutte_coxeter,
    "machine": lambda *orders: _cf_machine(orders),
    "halved_cube": _cf_halved_cube,
    "decked_cube": lambda n, bits: _cf_decked_cube(int(n), tuple(int(b) for b in str(bits))),
    "petersen": lambda: srg_closed_form(10, 3, 0, 1, family="petersen"),
    "shrikhande": lambda: srg_closed_form(16, 6, 2, 2, family="shrikhande"),
    "rook_twin": lambda: srg_closed_form(16, 6, 2, 2, family="rook_twin"),
    "rook": lambda n: srg_closed_form(n * n, 2 * (n - 1), n - 2, 2, family="rook"),
    "heawood": lambda: design_closed_form(7, 3, 1, family="heawood"),
}


def closed_form_spectrum(family: str, *params) -> ClosedForm:
    """Adjacency closed form for the given family, or NoClosedForm."""
    fn = _CLOSED_FORMS.get(family)
    if fn is None:
        raise NoClosedForm(f"no closed-form spectrum for family {family!r}")
    return fn(*params)


def closed_form_for_graph(g: Graph) -> ClosedForm:
    """Generic character-sum closed form for graphs carrying Cayley or
    bi-Cayley metadata."""
    if "cayley" in g.meta:
        info = g.meta["cayley"]
        return cayley_closed_form(info["orders"], info["generators"], family=g.name)
    if "bicayley" in g.meta:
        info = g.meta["bicayley"]
        return bicayley_closed_form(info["orders"], info["subset"], family=g.name)
    raise NoClosedForm(f"graph {g.name!r} carries no group metadata")


# -- verification ------------------------------------------------------------------

def verify_closed_form(g: Graph, cf: ClosedForm, tol: float = COMPARE_TOL) -> dict:
    """Check the numeric spectrum against a closed form, value-by-value within
    tol and multiplicity-exactly.  Raises Mismatch at the first divergence."""
    if cf.n != g.n:
        raise Mismatch(f"closed form has {cf.n} eigenvalues, graph has {g.n} vertices")
    matrix = adjacency_matrix(g) if cf.matrix_kind == "adjacency" else laplacian_matrix(g)
    numeric = eig_symmetric(matrix, cf.matrix_kind)
    expected = cf.value_mults()
    got = numeric.entries
    if len(expected) != len(got):
        raise Mismatch(
            f"{g.name}: {len(expected)} distinct closed-form values vs {len(got)} numeric clusters")
    max_err = 0.0
    for (ev, em), (nv, nm) in zip(expected, got):
        if abs(ev - nv) > tol:
            raise Mismatch(f"{g.name}: eigenvalue {ev} vs numeric {nv}")
        if em != nm:
            raise Mismatch(f"{g.name}: multiplicity of {ev}: closed form {em}, numeric {nm}")
        max_err = max(max_err, abs(ev - nv))
    return {"ok": True, "max_error": max_err, "clusters": len(got)}


# -- classifiers ---------------------------------------------------------------------

def spectrum_classifiers(adj: Spectrum, n: int, lap: Spectrum | None = None,
                         tol: float = 1e-6) -> dict:
    """Structure read off the spectrum alone: bipartiteness, regularity,
    component count, and the strongly-regular / design converses."""
    values = adj.expanded()
    out: dict = {}
    sym = all(abs(values[i] + values[n - 1 - i]) <= tol for i in range(n))
    out["bipartite"] = sym
    alpha_max = adj.max
    out["regular"] = abs(float((values**2).sum()) - n * alpha_max) <= tol * n * max(1, alpha_max)
    if lap is not None:
        out["connected_components"] = lap.multiplicity_near(0.0, tol)
    out["srg"] = None
    out["design"] = None
    out["extremal_design_degree"] = None
    distinct = adj.distinct_values()
    if out["regular"] and len(distinct) == 3:
        d = round(alpha_max)
        a2, a3 = distinct[1], distinct[2]
        c = round(d + a2 * a3)
        a = round(a2 + a3 + c)
        try:
            out["srg"] = gf.SrgParams(n, d, a, c)
        except IdentityViolated:
            pass
    if out["regular"] and sym and len(distinct) == 4:
        d = round(alpha_max)
        c = round(d - distinct[1] ** 2)
        try:
            out["design"] = gf.DesignParams(n // 2, d, c)
        except IdentityViolated:
            pass
    if out["regular"] and sym and len(distinct) == 3 and abs(distinct[1]) <= tol:
        # degenerate c = d design (complete bipartite): middle eigenvalues merge at 0
        d = round(alpha_max)
        try:
            out["design"] = gf.DesignParams(n // 2, d, d)
        except IdentityViolated:
            pass
    if len(distinct) == 4 and sym:
        d = round(alpha_max)
        mid = distinct[1]
        if d >= 3 and abs(alpha_max - d) <= tol and abs(mid - math.sqrt(d - 1)) <= tol:
            out["extremal_design_degree"] = d
    return out


def srg_feasibility(n: int, d: int, a: int, c: int):
    """("quadratic", None) | ("integral", t) | ("infeasible", reason).

    Multiplicity integrality is evaluated first (the direct formula), so
    parameter tuples with irrational or negative multiplicities report
    infeasible; tuples passing integrality but failing the double-counting
    identity raise IdentityViolated.
    """
    disc = (a - c) ** 2 + 4 * (d - c)
    if disc <= 0:
        return "infeasible", "non-positive discriminant"
    num = (n - 1) * (a - c) + 2 * d

    def identity_ok() -> bool:
        return d * (d - a - 1) == (n - d - 1) * c

    if num == 0:
        if not identity_ok():
            raise IdentityViolated(f"identity fails for ({n},{d},{a},{c})")
        return "quadratic", None
    t = math.isqrt(disc)
    if t * t != disc:
        return "infeasible", "irrational eigenvalues need equal multiplicities"
    if num % t != 0:
        return "infeasible", f"sqrt(disc) = {t} does not divide {num}"
    m2 = (n - 1 - num // t)
    m3 = (n - 1 + num // t)
    if m2 % 2 or m3 % 2 or m2 < 0 or m3 < 0:
        return "infeasible", "multiplicities not non-negative integers"
    if not identity_ok():
        raise IdentityViolated(f"identity fails for ({n},{d},{a},{c})")
    return "integral", t


def moore_graph_enumeration(max_degree: int = 100) -> list[tuple[int, int]]:
    """Feasible (n, d) for strongly regular parameters with a = 0, c = 1
    (diameter-2, girth-5 graphs); n is forced to d^2 + 1."""
    out = []
    for d in range(2, max_degree + 1):
        n = d * d + 1
        kind, _ = srg_feasibility(n, d, 0, 1)
        if kind != "infeasible":
            out.append((n, d))
    return out
