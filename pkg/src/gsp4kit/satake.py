"""Unramified local data: Weyl antisymmetrizer, character formula, spherical
degree-4 L-factor and numeric partial Euler products.

The four Satake values are carried by the diagonal parameter matrix
u(x1..x4) = diag(x1x2, x1x3, x3x4, x2x4); the degree-4 factor is

    L(s) = 1 / prod (1 - xi_a xi_b X),   X = p^{-s},

the product running over the four diagonal entries.  The displayed expansion
``sum_n p^{-n} tr Sym^n`` elides the s in the exponent; the series here is
implemented in the variable X, i.e. with coefficient tr Sym^n at X^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    ExactError,
    LaurentPoly,
    SATAKE_ARITY,
    TruncatedSeries,
    poly_div_exact,
    satake_monomial,
    satake_one,
    satake_var,
    series_inverse_one_minus,
)
from .rootdata import (
    GSpWeight,
    mono,
    rho,
    weyl_enumerate,
    xi_perm_on_exponents,
)

#: 0-based xi index pairs of the four diagonal entries of u(x1..x4)
SPIN_PAIRS = ((0, 1), (0, 2), (2, 3), (1, 3))


@dataclass(frozen=True)
class SatakeDatum:
    """Unramified parameters: four Satake values, two Hecke values, and the
    p^(1/2) surrogate u.  In formal mode the entries are None placeholders;
    specialized entries are nonzero rationals.  When ``central_constraint``
    is set, b1*b2 = xi1*xi2*xi3*xi4 is enforced.
    """

    xi: tuple = (None, None, None, None)
    beta: tuple = (None, None)
    u: object = None
    central_constraint: bool = True

    @property
    def mode(self) -> str:
        formal = all(v is None for v in (*self.xi, *self.beta, self.u))
        return "formal" if formal else "specialized"

    def __post_init__(self):
        vals = [*self.xi, *self.beta, self.u]
        given = [v for v in vals if v is not None]
        if given and len(given) != len(vals):
            raise ValueError("specialize all parameters or none")
        if given:
            if any(Fraction(v) == 0 for v in given):
                raise ValueError("specialized Satake parameters must be nonzero")
            if self.central_constraint:
                prod = Fraction(1)
                for v in self.xi:
                    prod *= Fraction(v)
                if Fraction(self.beta[0]) * Fraction(self.beta[1]) != prod:
                    raise ValueError("central constraint b1*b2 = xi1..xi4 violated")

    @staticmethod
    def formal(central_constraint: bool = True) -> "SatakeDatum":
        return SatakeDatum(central_constraint=central_constraint)


@dataclass(frozen=True)
class CharacterPoly:
    """A Weyl-group invariant Laurent polynomial in xi1..xi4."""

    value: LaurentPoly

    def dimension(self) -> Fraction:
        ones = [Fraction(1)] * SATAKE_ARITY
        return self.value.specialize(ones)


def xi_monomial(lam: GSpWeight, coeff=1) -> LaurentPoly:
    """The monomial xi^mono(lam) in the 8-variable ring."""
    return satake_monomial(mono(lam), coeff=coeff)


def antisymmetrize_B(poly: LaurentPoly) -> LaurentPoly:
    """B = sum_w (-1)^{l(w)} w, acting on the xi-part of every monomial.

    Exponents of b1, b2, u, X ride through untouched.  Alternating:
    B(w.m) = (-1)^{l(w)} B(m).
    """
    if poly.arity != SATAKE_ARITY:
        raise ExactError("antisymmetrizer lives in the 8-variable ring")
    terms: dict = {}
    for e, c in poly.terms.items():
        xi_e, rest = e[:4], e[4:]
        for el in weyl_enumerate():
            ne = xi_perm_on_exponents(el.xi_perm, xi_e) + rest
            nc = terms.get(ne, Fraction(0)) + el.sign * c
            if nc:
                terms[ne] = nc
            else:
                terms.pop(ne, None)
    return LaurentPoly(SATAKE_ARITY, terms)


def apply_xi_perm(poly: LaurentPoly, perm: tuple[int, int, int, int]) -> LaurentPoly:
    """Apply a single xi-index permutation to every monomial."""
    terms = {}
    for e, c in poly.terms.items():
        ne = xi_perm_on_exponents(perm, e[:4]) + e[4:]
        terms[ne] = terms.get(ne, Fraction(0)) + c
    return LaurentPoly(SATAKE_ARITY, terms)


def weyl_denominator() -> LaurentPoly:
    """B(xi^mono(rho)) = B(xi1^3 xi2^2 xi3)."""
    return antisymmetrize_B(xi_monomial(rho()))


def weyl_character(lam: GSpWeight) -> CharacterPoly:
    """Weyl character formula: B(xi^mono(lam+rho)) / B(xi^mono(rho))."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    num = antisymmetrize_B(xi_monomial(lam + rho()))
    return CharacterPoly(poly_div_exact(num, weyl_denominator()))


def spin_pair_poly(a: int, b: int) -> LaurentPoly:
    e = [0, 0, 0, 0]
    e[a] += 1
    e[b] += 1
    return satake_monomial(e)


def spin_lfactor_series(order: int) -> TruncatedSeries:
    """Expansion of 1/prod(1 - xi_a xi_b X) over the four diagonal pairs."""
    series = TruncatedSeries.one(order)
    for a, b in SPIN_PAIRS:
        series = series * series_inverse_one_minus(spin_pair_poly(a, b), order)
    return series


def spin_lfactor_denominator() -> LaurentPoly:
    """The degree-4 Euler polynomial prod(1 - xi_a xi_b X), expanded."""
    one = satake_one()
    x = satake_var("X")
    out = one
    for a, b in SPIN_PAIRS:
        out = out * (one - spin_pair_poly(a, b) * x)
    return out


def symmetric_power_series(order: int) -> TruncatedSeries:
    """sum_n tr Sym^n(diag of u(xi)) X^n, by brute-force monomial enumeration.

    tr Sym^n of a diagonal matrix is the complete homogeneous symmetric
    polynomial of its entries; this is the independent oracle for
    spin_lfactor_series.
    """
    pair_exps = []
    for a, b in SPIN_PAIRS:
        e = [0, 0, 0, 0]
        e[a] += 1
        e[b] += 1
        pair_exps.append(tuple(e))
    coeffs = []
    for n in range(order + 1):
        terms: dict = {}
        for c0 in range(n + 1):
            for c1 in range(n - c0 + 1):
                for c2 in range(n - c0 - c1 + 1):
                    c3 = n - c0 - c1 - c2
                    comp = (c0, c1, c2, c3)
                    e = [0, 0, 0, 0]
                    for mult, pe in zip(comp, pair_exps):
                        for i in range(4):
                            e[i] += mult * pe[i]
                    key = tuple(e) + (0, 0, 0, 0)
                    terms[key] = terms.get(key, Fraction(0)) + 1
        coeffs.append(LaurentPoly(SATAKE_ARITY, terms))
    return TruncatedSeries(order, coeffs)


def hecke_lfactor_series(which: int, shift_half: int, order: int) -> TruncatedSeries:
    """Expansion of 1/(1 - b_i p^(-s - shift_half/2)) = sum (b_i u^-shift_half)^m X^m."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    content = satake_var(f"b{which}") * satake_var("u", -shift_half)
    return series_inverse_one_minus(content, order)


def _primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray(b"\x01" * (bound + 1))
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(bound ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i in range(2, bound + 1) if sieve[i]]


def spin_factor_value(datum: SatakeDatum, p: int, s: float) -> float:
    """Numeric value of the local spin factor at a specialized datum."""
    if datum.mode != "specialized":
        raise ValueError("need a specialized datum")
    xs = [float(Fraction(v)) for v in datum.xi]
    ps = p ** (-s)
    value = 1.0
    for a, b in SPIN_PAIRS:
        d = 1.0 - xs[a] * xs[b] * ps
        if d == 0.0:
            raise ZeroDivisionError(f"local factor pole at p={p}, s={s}")
        value /= d
    return value


def partial_euler_product(params: Sequence[tuple[int, SatakeDatum]], s: float,
                          bound: int | None = None) -> float:
    """prod_{p <= bound} of specialized spin factors, in ascending prime order.

    Accumulated through compensated summation of logs so reruns are
    bit-for-bit deterministic.
    """
    seen = set()
    items = []
    for p, datum in params:
        if p in seen:
            raise ValueError(f"duplicate prime {p}")
        seen.add(p)
        if bound is not None and p > bound:
            continue
        items.append((p, datum))
    items.sort(key=lambda t: t[0])
    logs = []
    for p, datum in items:
        v = spin_factor_value(datum, p, s)
        if v <= 0:
            raise ValueError(f"nonpositive local factor at p={p}")
        logs.append(math.log(v))
    return math.exp(math.fsum(logs))


def trivial_datum_products(bound: int) -> list[tuple[int, SatakeDatum]]:
    """All xi = 1 (and b = 1) at every prime up to the bound."""
    datum = SatakeDatum(
        xi=(1, 1, 1, 1), beta=(1, 1), u=1, central_constraint=True
    )
    return [(p, datum) for p in _primes_up_to(bound)]
