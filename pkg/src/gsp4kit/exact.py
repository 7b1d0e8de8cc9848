"""Exact arithmetic substrate: rationals, Gaussian rationals, multivariate
Laurent polynomials and truncated power series with Laurent coefficients.

Everything here is immutable and exact.  Rational numbers are
``fractions.Fraction``; Laurent polynomials are sparse maps from integer
exponent vectors (entries may be negative) to nonzero rational coefficients.
The distinguished 8-variable ring used by the local-factor machinery is
Q[xi1^±, xi2^±, xi3^±, xi4^±, b1^±, b2^±, u^±, X] with the convention that
u^2 plays the role of the residue cardinality p, so half-integral powers of
p never appear explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

#: Variable names of the distinguished local-factor ring.
SATAKE_VARS = ("xi1", "xi2", "xi3", "xi4", "b1", "b2", "u", "X")
SATAKE_ARITY = len(SATAKE_VARS)
X_SLOT = SATAKE_VARS.index("X")


class ExactError(ValueError):
    """Raised on arity mismatches, inexact divisions and bad specializations."""


class InexactReduction(ExactError):
    """An exact Laurent division left a nonzero residual."""

    def __init__(self, message: str, residual: "LaurentPoly"):
        super().__init__(f"{message}; residual has {len(residual.terms)} terms")
        self.residual = residual


@dataclass(frozen=True)
class GaussRational:
    """Element of Q(i), componentwise normalized by Fraction."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re: RationalLike, im: RationalLike = 0) -> "GaussRational":
        return GaussRational(Fraction(re), Fraction(im))

    def __add__(self, other: "GaussRational") -> "GaussRational":
        other = _coerce_gauss(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        return self + (-_coerce_gauss(other))

    def __rsub__(self, other):
        return _coerce_gauss(other) + (-self)

    def __mul__(self, other) -> "GaussRational":
        other = _coerce_gauss(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRational":
        other = _coerce_gauss(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussRational(other.re / n, -other.im / n)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


GAUSS_I = GaussRational(Fraction(0), Fraction(1))
GAUSS_ONE = GaussRational(Fraction(1), Fraction(0))
GAUSS_ZERO = GaussRational(Fraction(0), Fraction(0))


def _coerce_gauss(x) -> GaussRational:
    if isinstance(x, GaussRational):
        return x
    return GaussRational(Fraction(x), Fraction(0))


class LaurentPoly:
    """Sparse multivariate Laurent polynomial over Q.

    ``terms`` maps exponent tuples (length ``arity``, possibly negative
    entries) to nonzero Fractions.  Two polynomials are equal iff their term
    maps are equal; the zero polynomial has an empty term map.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[tuple, RationalLike] | None = None):
        self.arity = arity
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if len(e) != arity:
                    raise ExactError(f"exponent vector {e} has wrong arity (want {arity})")
                if c != 0:
                    clean[tuple(int(x) for x in e)] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @staticmethod
    def zero(arity: int) -> "LaurentPoly":
        return LaurentPoly(arity, {})

    @staticmethod
    def constant(arity: int, c: RationalLike) -> "LaurentPoly":
        return LaurentPoly(arity, {(0,) * arity: Fraction(c)})

    @staticmethod
    def monomial(exponents: Sequence[int], coeff: RationalLike = 1) -> "LaurentPoly":
        return LaurentPoly(len(exponents), {tuple(exponents): Fraction(coeff)})

    @staticmethod
    def variable(arity: int, slot: int, power: int = 1) -> "LaurentPoly":
        e = [0] * arity
        e[slot] = power
        return LaurentPoly(arity, {tuple(e): Fraction(1)})

    # -- ring structure ----------------------------------------------------
    def _check(self, other: "LaurentPoly") -> None:
        if self.arity != other.arity:
            raise ExactError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            nc = terms.get(e, Fraction(0)) + c
            if nc:
                terms[e] = nc
            else:
                terms.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.arity = self.arity
        out.terms = terms
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.arity = self.arity
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = terms.get(e, Fraction(0)) + c1 * c2
                if nc:
                    terms[e] = nc
                else:
                    terms.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.arity = self.arity
        out.terms = terms
        return out

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly.zero(self.arity)
        out = LaurentPoly.__new__(LaurentPoly)
        out.arity = self.arity
        out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) == 1:
                ((e, c),) = self.terms.items()
                return LaurentPoly.monomial(tuple(x * n for x in e), Fraction(c) ** n)
            raise ExactError("negative powers only defined for monomials")
        result = LaurentPoly.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ------------------------------------------------------------
    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def leading_exponent(self) -> tuple:
        """Lexicographically largest exponent vector (canonical leading term)."""
        if not self.terms:
            raise ExactError("zero polynomial has no leading term")
        return max(self.terms)

    def exponent_range(self, slot: int) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        vals = [e[slot] for e in self.terms]
        return (min(vals), max(vals))

    def substitute_monomial(self, slot: int, replacement: "LaurentPoly") -> "LaurentPoly":
        """Substitute a single-term Laurent monomial for the given variable."""
        if len(replacement.terms) != 1:
            raise ExactError("substitution target must be a monomial")
        ((re, rc),) = replacement.terms.items()
        out = LaurentPoly.zero(self.arity)
        terms: dict = {}
        for e, c in self.terms.items():
            k = e[slot]
            ne = list(e)
            ne[slot] = 0
            ne = tuple(a + k * b for a, b in zip(ne, re))
            nc = terms.get(ne, Fraction(0)) + c * Fraction(rc) ** k
            if nc:
                terms[ne] = nc
            else:
                terms.pop(ne, None)
        out.terms = terms
        return out

    # -- spec operations ----------------------------------------------------
    def specialize(self, values: Sequence[RationalLike]) -> Fraction:
        """Exact evaluation at rational values, one per variable.

        A zero value at a variable occurring with negative exponent is an
        error (division by zero).
        """
        if len(values) != self.arity:
            raise ExactError("wrong number of specialization values")
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k == 0:
                    continue
                if v == 0:
                    if k < 0:
                        raise ExactError("specialization hits a pole (zero at negative exponent)")
                    term = Fraction(0)
                    break
                term *= v ** k
            total += term
        return total

    def serialize(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form: terms sorted lexicographically by exponent."""
        if self.is_zero():
            return "0"
        if names is None:
            names = SATAKE_VARS if self.arity == SATAKE_ARITY else tuple(
                f"x{i+1}" for i in range(self.arity)
            )
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k != 0:
                    factors.append(f"{name}^{k}")
            if factors:
                parts.append(f"{c} * " + " ".join(factors))
            else:
                parts.append(str(c))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.serialize()})"


def poly_arith(op: str, a: LaurentPoly, b: LaurentPoly | int | None = None) -> LaurentPoly:
    """Dispatcher for basic ring operations: add | mul | neg | pow."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise ExactError("pow exponent must be a nonnegative integer")
        return a ** b
    raise ExactError(f"unknown operation {op!r}")


def poly_div_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in the Laurent ring.

    Repeatedly cancels the lexicographically leading term.  Because the lex
    order on exponent vectors is translation invariant, the leading exponent
    of the running remainder strictly decreases, so the loop terminates with
    quotient q satisfying q*den == num, or raises InexactReduction.
    """
    if den.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    if num.arity != den.arity:
        raise ExactError("arity mismatch in division")
    dlead = den.leading_exponent()
    dcoef = den.terms[dlead]
    remainder = num
    quotient = LaurentPoly.zero(num.arity)
    while not remainder.is_zero():
        nlead = remainder.leading_exponent()
        qe = tuple(a - b for a, b in zip(nlead, dlead))
        qc = remainder.terms[nlead] / dcoef
        qterm = LaurentPoly.monomial(qe, qc)
        quotient = quotient + qterm
        remainder = remainder - qterm * den
        if not remainder.is_zero() and remainder.leading_exponent() >= nlead:
            raise InexactReduction("inexact Laurent division", remainder)
    return quotient


class TruncatedSeries:
    """Power series in the distinguished variable X, exact modulo X^{N+1}.

    Coefficients are LaurentPoly values in which X itself never occurs.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[LaurentPoly]):
        if order < 0:
            raise ExactError("series order must be nonnegative")
        if len(coeffs) != order + 1:
            raise ExactError("need exactly order+1 coefficients")
        arity = coeffs[0].arity
        for c in coeffs:
            if c.arity != arity:
                raise ExactError("inconsistent coefficient arities")
            if arity == SATAKE_ARITY and any(e[X_SLOT] != 0 for e in c.terms):
                raise ExactError("series variable X may not occur inside coefficients")
        self.order = order
        self.coeffs = list(coeffs)

    @staticmethod
    def one(order: int, arity: int = SATAKE_ARITY) -> "TruncatedSeries":
        coeffs = [LaurentPoly.constant(arity, 1)] + [
            LaurentPoly.zero(arity) for _ in range(order)
        ]
        return TruncatedSeries(order, coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = LaurentPoly.zero(self.coeffs[0].arity)
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(n, out)

    def scale_poly(self, p: LaurentPoly) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [c * p for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order})"


def series_inverse_one_minus(f: LaurentPoly, order: int) -> TruncatedSeries:
    """Expansion of 1/(1 - f X) = sum_{m<=order} f^m X^m.

    ``f`` is the X-linear content of the factor; it must not involve X.
    """
    if f.arity == SATAKE_ARITY and any(e[X_SLOT] != 0 for e in f.terms):
        raise ExactError("factor content must not involve X")
    coeffs = [LaurentPoly.constant(f.arity, 1)]
    for _ in range(order):
        coeffs.append(coeffs[-1] * f)
    return TruncatedSeries(order, coeffs)


# -- helpers for the distinguished 8-variable ring --------------------------

def satake_var(name: str, power: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(SATAKE_ARITY, SATAKE_VARS.index(name), power)


def satake_monomial(xi_exponents: Sequence[int], b1: int = 0, b2: int = 0,
                    u: int = 0, x: int = 0, coeff: RationalLike = 1) -> LaurentPoly:
    e = tuple(xi_exponents) + (b1, b2, u, x)
    return LaurentPoly.monomial(e, coeff)


def satake_one() -> LaurentPoly:
    return LaurentPoly.constant(SATAKE_ARITY, 1)
