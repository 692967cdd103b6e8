"""Additive and multiplicative characters of finite fields, and the four
classical character sums (Gauss, Jacobi, Eisenstein, Kloosterman) together
with empirical checks of the Weil-type magnitude bounds.

Characters are indexed deterministically: additive ones by a twist element t
(psi_t(x) = exp(2 pi i AbsTr(t x) / p)), multiplicative ones by an exponent k
modulo q-1 relative to the canonical generator of the field.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import HypothesisViolated, SpecMismatch, ZeroElement
from .finite_field import (
    FieldElement,
    FieldSpec,
    SubfieldEmbedding,
    absolute_trace,
    trace_norm,
)

MAGNITUDE_TOL = 1e-9


@lru_cache(maxsize=None)
def _log_table(spec: FieldSpec) -> dict[int, int]:
    """Discrete log base the canonical generator, keyed by element index."""
    g = spec.generator()
    table = {}
    x = spec.one
    for j in range(spec.q - 1):
        table[x.index] = j
        x = x * g
    return table


@lru_cache(maxsize=None)
def _abstr_table(spec: FieldSpec) -> tuple[int, ...]:
    return tuple(absolute_trace(x) for x in spec.elements())


@lru_cache(maxsize=None)
def _roots_of_unity(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n))


@dataclass(frozen=True)
class AdditiveCharacter:
    """psi_t with psi_t(x) = exp(2 pi i AbsTr(t x) / p); t = 0 is trivial."""

    spec: FieldSpec
    twist: FieldElement

    def __post_init__(self):
        if self.twist.spec != self.spec:
            raise SpecMismatch("twist must live in the character's field")

    @property
    def is_trivial(self) -> bool:
        return self.twist.is_zero()

    def __call__(self, x: FieldElement) -> complex:
        if x.spec != self.spec:
            raise SpecMismatch("argument not in the character's field")
        tr = _abstr_table(self.spec)[(self.twist * x).index]
        return _roots_of_unity(self.spec.p)[tr]

    def conjugate(self) -> "AdditiveCharacter":
        return AdditiveCharacter(self.spec, -self.twist)


@dataclass(frozen=True)
class MultiplicativeCharacter:
    """chi_k with chi_k(g^j) = exp(2 pi i k j / (q-1)); extended to 0 by the
    convention chi_k(0) = 0 for k != 0 and chi_0(0) = 1."""

    spec: FieldSpec
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % (self.spec.q - 1))

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    @property
    def order(self) -> int:
        n = self.spec.q - 1
        return n // math.gcd(self.exponent, n)

    def __call__(self, x: FieldElement) -> complex:
        if x.spec != self.spec:
            raise SpecMismatch("argument not in the character's field")
        if x.is_zero():
            return 1.0 + 0j if self.is_trivial else 0j
        n = self.spec.q - 1
        j = _log_table(self.spec)[x.index]
        return _roots_of_unity(n)[(self.exponent * j) % n]

    def conjugate(self) -> "MultiplicativeCharacter":
        return MultiplicativeCharacter(self.spec, -self.exponent)

    def __mul__(self, other: "MultiplicativeCharacter") -> "MultiplicativeCharacter":
        if other.spec != self.spec:
            raise SpecMismatch("characters of different fields")
        return MultiplicativeCharacter(self.spec, self.exponent + other.exponent)


def trivial_additive(spec: FieldSpec) -> AdditiveCharacter:
    return AdditiveCharacter(spec, spec.zero)


def trivial_multiplicative(spec: FieldSpec) -> MultiplicativeCharacter:
    return MultiplicativeCharacter(spec, 0)


def quadratic_character(spec: FieldSpec) -> MultiplicativeCharacter:
    """The quadratic signature as a character, chi_{(q-1)/2}; q must be odd."""
    if spec.q % 2 == 0:
        raise SpecMismatch("quadratic character needs odd q")
    return MultiplicativeCharacter(spec, (spec.q - 1) // 2)


def additive_characters(spec: FieldSpec):
    for t in spec.elements():
        yield AdditiveCharacter(spec, t)


def multiplicative_characters(spec: FieldSpec):
    for k in range(spec.q - 1):
        yield MultiplicativeCharacter(spec, k)


def eval_character(kind: str, idx, x: FieldElement) -> complex:
    """Uniform entry point, kind in {additive, multiplicative}."""
    if kind == "additive":
        if not isinstance(idx, AdditiveCharacter):
            raise SpecMismatch("additive evaluation needs an AdditiveCharacter")
        return idx(x)
    if kind == "multiplicative":
        if not isinstance(idx, MultiplicativeCharacter):
            raise SpecMismatch("multiplicative evaluation needs a MultiplicativeCharacter")
        return idx(x)
    raise SpecMismatch(f"unknown character kind {kind!r}")


# -- character sums -----------------------------------------------------------

def gauss_sum(psi: AdditiveCharacter, chi: MultiplicativeCharacter) -> complex:
    """G(psi, chi) = sum over s in F* of psi(s) chi(s)."""
    if psi.spec != chi.spec:
        raise SpecMismatch("characters of different fields")
    return sum(psi(s) * chi(s) for s in psi.spec.units())


def jacobi_sum(chi1: MultiplicativeCharacter, chi2: MultiplicativeCharacter) -> complex:
    """J(chi1, chi2) = sum over s+t=1 of chi1(s) chi2(t)."""
    if chi1.spec != chi2.spec:
        raise SpecMismatch("characters of different fields")
    spec = chi1.spec
    one = spec.one
    return sum(chi1(s) * chi2(one - s) for s in spec.elements())


def eisenstein_sum(emb: SubfieldEmbedding, chi: MultiplicativeCharacter,
                   singular: bool = False) -> complex:
    """E(chi) = sum of chi over the fiber Tr = 1 of the relative trace, or the
    singular variant E0(chi) over the punctured fiber Tr = 0."""
    if chi.spec != emb.big:
        raise SpecMismatch("character must live on the big field")
    big = emb.big
    target = big.zero if singular else big.one
    total = 0j
    for s in big.elements():
        if singular and s.is_zero():
            continue
        if trace_norm(emb, s)[0] == target:
            total += chi(s)
    return total


def restrict_to_base(emb: SubfieldEmbedding, chi: MultiplicativeCharacter) -> MultiplicativeCharacter:
    """The multiplicative character of the base field obtained by restricting
    chi along the embedding."""
    if chi.spec != emb.big:
        raise SpecMismatch("character must live on the big field")
    g = emb.base.generator()
    n_base = emb.base.q - 1
    val = chi(emb.lift(g))
    # chi(lift(g)) is an n_base-th root of unity; recover its exponent.
    for k in range(n_base):
        if abs(val - _roots_of_unity(n_base)[k]) < 1e-6:
            return MultiplicativeCharacter(emb.base, k)
    raise SpecMismatch("restriction is not a character of the base field")


def induce_additive(emb: SubfieldEmbedding, psi: AdditiveCharacter) -> AdditiveCharacter:
    """psi o Tr as an additive character of the big field.

    Transitivity of the trace makes the induced character psi_{lift(t)}.
    """
    if psi.spec != emb.base:
        raise SpecMismatch("character must live on the base field")
    return AdditiveCharacter(emb.big, emb.lift(psi.twist))


def kloosterman_sum(psi1: AdditiveCharacter, psi2: AdditiveCharacter) -> complex:
    """K(psi1, psi2) = sum over st=1 of psi1(s) psi2(t)."""
    if psi1.spec != psi2.spec:
        raise SpecMismatch("characters of different fields")
    return sum(psi1(s) * psi2(s.inverse()) for s in psi1.spec.units())


def norm_restricted_sum(emb: SubfieldEmbedding, psi: AdditiveCharacter) -> tuple[complex, float, bool]:
    """S(psi) = sum of psi over the norm-one fiber, with the Deligne bound
    n q^((n-1)/2) checked empirically."""
    if psi.spec != emb.big:
        raise SpecMismatch("character must live on the big field")
    one = emb.big.one
    total = sum(psi(s) for s in emb.big.units() if trace_norm(emb, s)[1] == one)
    n = emb.degree
    bound = n * emb.base.q ** ((n - 1) / 2)
    return total, bound, abs(total) <= bound + MAGNITUDE_TOL


# -- Weil bound on polynomial character sums -----------------------------------

@dataclass
class WeilReport:
    magnitude: float
    bound: float
    passed: bool
    hypothesis_checked: bool


def _eval_poly(f: list[FieldElement], s: FieldElement) -> FieldElement:
    acc = f[-1]
    for c in reversed(f[:-1]):
        acc = acc * s + c
    return acc


def _as_field_poly(spec: FieldSpec, f) -> list[FieldElement]:
    out = []
    for c in f:
        out.append(spec.from_int(c) if isinstance(c, int) else c)
    if not out or out[-1] != spec.one:
        raise SpecMismatch("polynomial must be monic")
    return out


def polynomial_character_sum(spec: FieldSpec, f, char) -> complex:
    """Raw sum of char(f(s)) over all s in F, with no hypothesis checks."""
    poly = _as_field_poly(spec, f)
    return sum(char(_eval_poly(poly, s)) for s in spec.elements())


def _is_mth_power(spec: FieldSpec, poly: list[FieldElement], m: int) -> bool:
    """Exhaustive check whether the monic poly equals g^m; desk scale only."""
    deg = len(poly) - 1
    if m <= 1:
        return m == 1
    if deg % m != 0:
        return False
    dg = deg // m
    # enumerate monic g of degree dg by its dg lower coefficients
    idx = [0] * dg
    while True:
        g = [spec.element(i) for i in idx] + [spec.one]
        power = g
        acc = [spec.one]
        for _ in range(m):
            new = [spec.zero] * (len(acc) + len(power) - 1)
            for i, a in enumerate(acc):
                for j, b in enumerate(power):
                    new[i + j] = new[i + j] + a * b
            acc = new
        if acc == poly:
            return True
        for pos in range(dg):
            idx[pos] += 1
            if idx[pos] < spec.q:
                break
            idx[pos] = 0
        else:
            return False


WEIL_EXHAUSTIVE_Q = 169
WEIL_EXHAUSTIVE_DEG = 4


def weil_poly_check(spec: FieldSpec, f, char) -> WeilReport:
    """Weil's polynomial character sum bound |sum char(f(s))| <= (d-1) sqrt(q).

    The multiplicative hypothesis (f not an m-th power, m the order of chi) is
    verified exhaustively at desk scale; the additive hypothesis (deg coprime
    to q) is always checked.  A testable violation raises HypothesisViolated.
    """
    poly = _as_field_poly(spec, f)
    deg = len(poly) - 1
    if deg < 1:
        raise SpecMismatch("polynomial must have degree >= 1")
    checked = True
    if isinstance(char, MultiplicativeCharacter):
        if char.is_trivial:
            raise HypothesisViolated("multiplicative character must be non-trivial")
        m = char.order
        if spec.q <= WEIL_EXHAUSTIVE_Q and deg <= WEIL_EXHAUSTIVE_DEG:
            if _is_mth_power(spec, poly, m):
                raise HypothesisViolated(f"f is an {m}-th power")
        else:
            checked = False
    elif isinstance(char, AdditiveCharacter):
        if char.is_trivial:
            raise HypothesisViolated("additive character must be non-trivial")
        if math.gcd(deg, spec.q) != 1:
            raise HypothesisViolated(f"deg f = {deg} shares a factor with q = {spec.q}")
    else:
        raise SpecMismatch("char must be a field character")
    total = polynomial_character_sum(spec, poly, char)
    magnitude = abs(total)
    bound = (deg - 1) * math.sqrt(spec.q)
    return WeilReport(magnitude, bound, magnitude <= bound + MAGNITUDE_TOL, checked)


def dth_power_count(spec: FieldSpec, d: int, a: FieldElement) -> int:
    """|{h : h^d = a}| computed by the character sum over chi with chi^d
    trivial, cross-checked against exhaustive counting."""
    if a.is_zero():
        raise ZeroElement("a must be non-zero")
    if a.spec != spec:
        raise SpecMismatch("element not in the given field")
    n = spec.q - 1
    g = math.gcd(d, n)
    step = n // g
    total = sum(MultiplicativeCharacter(spec, j * step)(a) for j in range(g))
    by_chars = round(total.real)
    if abs(total - by_chars) > 1e-6:
        raise SpecMismatch("character sum failed to land on an integer")
    exhaustive = sum(1 for h in spec.units() if h**d == a)
    assert by_chars == exhaustive, (by_chars, exhaustive)
    return exhaustive
