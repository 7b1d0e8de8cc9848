"""Root and weight combinatorics for GSp(4) and GL(2).

The diagonal torus character lambda(k, k', t) sends
diag(a1, a2, a1^-1 v, a2^-1 v) to a1^k a2^k' v^t.  The Weyl group is dihedral
of order 8, generated by

    s1 : (k, k') -> (k', k)        (reflection in the short simple root)
    s2 : (k, k') -> (k, -k')       (reflection in the long simple root)

Each element carries two incarnations which the rest of the toolkit relies
on:

* a 2x2 integer matrix acting on (k, k') with t held fixed -- this is the
  action used by the dot action w(lam+rho)-rho in the cohomology strata
  computations, where the similitude coordinate is bookkept separately;

* a permutation of the four indices of the diagonal parameter matrix
  u(x1..x4) = diag(x1x2, x1x3, x3x4, x2x4).  Under the full torus action the
  generators also twist t (s2 honestly maps lambda(k,k',t) to
  lambda(k,-k',t+k')); the permutation incarnation realizes that full action
  on monomials through the ``mono`` embedding.  The two incarnations are tied
  together by tests, not by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


@dataclass(frozen=True, order=True)
class GSpWeight:
    """Character lambda(k, k', t) of the diagonal torus of GSp4."""

    k: int
    kp: int
    t: int

    def is_dominant(self) -> bool:
        return self.k >= self.kp >= 0

    def is_regular(self) -> bool:
        return self.k > self.kp > 0

    def __add__(self, other: "GSpWeight") -> "GSpWeight":
        return GSpWeight(self.k + other.k, self.kp + other.kp, self.t + other.t)

    def __sub__(self, other: "GSpWeight") -> "GSpWeight":
        return GSpWeight(self.k - other.k, self.kp - other.kp, self.t - other.t)

    def central_exponent(self) -> int:
        """Exponent of the central cocharacter z -> z*Id: c = k + k' + 2t."""
        return self.k + self.kp + 2 * self.t

    def as_list(self) -> list[int]:
        return [self.k, self.kp, self.t]

    def __str__(self) -> str:
        return f"lambda({self.k},{self.kp},{self.t})"


@dataclass(frozen=True, order=True)
class GL2Weight:
    """Character lambda(k, t): diag(a, a^-1 v) -> a^k v^t of the GL2 torus."""

    k: int
    t: int

    def is_dominant(self) -> bool:
        return self.k >= 0

    def dim(self) -> int:
        return self.k + 1

    def central_exponent(self) -> int:
        return self.k + 2 * self.t

    def hodge_weight(self) -> int:
        """Weight of the variation attached to Sym^k V2(t): -k-2t."""
        return -self.central_exponent()

    def as_list(self) -> list[int]:
        return [self.k, self.t]

    def __str__(self) -> str:
        return f"Sym^{self.k}V2({self.t})"


@dataclass(frozen=True)
class CompactWeight:
    """Character lambda'(n, n', c) of the compact maximal torus; c = n+n' mod 2."""

    n: int
    np: int
    c: int

    def __post_init__(self):
        if (self.c - self.n - self.np) % 2 != 0:
            raise ValueError(f"parity violation: c={self.c} vs n+n'={self.n + self.np}")

    def as_list(self) -> list[int]:
        return [self.n, self.np, self.c]

    def __str__(self) -> str:
        return f"lambda'({self.n},{self.np},{self.c})"


@dataclass(frozen=True)
class CompactWeight2:
    """Character lambda'(n, c) of the compact torus of GL2(R); c = n mod 2."""

    n: int
    c: int

    def __post_init__(self):
        if (self.c - self.n) % 2 != 0:
            raise ValueError(f"parity violation: c={self.c} vs n={self.n}")

    def __str__(self) -> str:
        return f"lambda'({self.n},{self.c})"


class ParabolicKind(Enum):
    SIEGEL_Q0 = "siegel"
    KLINGEN_Q1 = "klingen"
    BOREL4 = "borel4"
    BOREL2 = "borel2"
    PRODUCT_BOREL = "product-borel"


# positive roots in (k, k') coordinates, similitude part suppressed
RHO1 = GSpWeight(1, -1, 0)
RHO2 = GSpWeight(0, 2, 0)


def positive_roots() -> list[GSpWeight]:
    """R+ = {rho1, rho2, rho1+rho2, 2rho1+rho2}."""
    return [RHO1, RHO2, RHO1 + RHO2, GSpWeight(2, 0, 0)]


def rho() -> GSpWeight:
    """Half sum of positive roots: lambda(2, 1, 0)."""
    return GSpWeight(2, 1, 0)


Mat2 = tuple[tuple[int, int], tuple[int, int]]
_ID: Mat2 = ((1, 0), (0, 1))
_S1: Mat2 = ((0, 1), (1, 0))
_S2: Mat2 = ((1, 0), (0, -1))
# xi-index permutations of the generators (0-based), acting on u(x1..x4)
_P_S1 = (0, 2, 1, 3)
_P_S2 = (1, 0, 3, 2)


def _matmul(a: Mat2, b: Mat2) -> Mat2:
    return tuple(
        tuple(sum(a[i][l] * b[l][j] for l in range(2)) for j in range(2))
        for i in range(2)
    )  # type: ignore[return-value]


def _matvec(a: Mat2, v: tuple[int, int]) -> tuple[int, int]:
    return (a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1])


def _matinv(a: Mat2) -> Mat2:
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if det not in (1, -1):
        raise ValueError("not a signed permutation matrix")
    return tuple(
        tuple(x * det for x in row)
        for row in ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))
    )  # type: ignore[return-value]


@dataclass(frozen=True)
class WeylElement:
    """Element of the GSp4 Weyl group.

    word     reduced word over {'s1','s2'}, rightmost letter acts first
    mat      2x2 matrix on (k, k'), t fixed
    xi_perm  permutation sigma of {0..3}: xi_i -> xi_{sigma(i)}
    length   Coxeter length (equals len(word))
    """

    word: tuple[str, ...]
    mat: Mat2
    xi_perm: tuple[int, int, int, int]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def apply_linear(self, w: GSpWeight) -> GSpWeight:
        """Matrix action on (k, k'), similitude coordinate untouched."""
        k, kp = _matvec(self.mat, (w.k, w.kp))
        return GSpWeight(k, kp, w.t)

    def apply_torus(self, w: GSpWeight) -> GSpWeight:
        """Full torus action, with the similitude twist the generators carry
        (s2: lambda(k,k',t) -> lambda(k,-k',t+k'))."""
        k, kp, t = w.k, w.kp, w.t
        for name in reversed(self.word):
            if name == "s1":
                k, kp = kp, k
            else:
                t = t + kp
                kp = -kp
        return GSpWeight(k, kp, t)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """Group product self*other (other acts first)."""
        mat = _matmul(self.mat, other.mat)
        return _element_by_matrix(mat)

    def serialize(self) -> list[str]:
        return list(self.word)

    def __str__(self) -> str:
        return "*".join(self.word) if self.word else "e"


@lru_cache(maxsize=1)
def weyl_enumerate() -> tuple[WeylElement, ...]:
    """All 8 elements, found by closing the generators; words are reduced."""
    gens = (("s1", _S1, _P_S1), ("s2", _S2, _P_S2))
    seen: dict[Mat2, WeylElement] = {
        _ID: WeylElement((), _ID, (0, 1, 2, 3))
    }
    frontier = [seen[_ID]]
    while frontier:
        nxt = []
        for el in frontier:
            for name, gmat, gperm in gens:
                mat = _matmul(el.mat, gmat)
                if mat not in seen:
                    perm = tuple(el.xi_perm[gperm[i]] for i in range(4))
                    new = WeylElement(el.word + (name,), mat, perm)
                    seen[mat] = new
                    nxt.append(new)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def _element_by_matrix(mat: Mat2) -> WeylElement:
    for el in weyl_enumerate():
        if el.mat == mat:
            return el
    raise ValueError("matrix not in the Weyl group")


def identity_element() -> WeylElement:
    return weyl_enumerate()[0]


def coxeter_length(el: WeylElement) -> int:
    """|Delta+(w)| with Delta+(w) = {a in R+ : w^-1 a not in R+}."""
    return len(inversion_set(el))


def inversion_set(el: WeylElement) -> list[GSpWeight]:
    inv = _matinv(el.mat)
    pos = positive_roots()
    posv = {(r.k, r.kp) for r in pos}
    out = []
    for r in pos:
        if _matvec(inv, (r.k, r.kp)) not in posv:
            out.append(r)
    return out


def dot_action(el: WeylElement, lam: GSpWeight) -> GSpWeight:
    """w(lam+rho) - rho on (k, k'), with t carried through unchanged."""
    shifted = lam + rho()
    moved = el.apply_linear(shifted)
    return moved - rho()


def mono(lam: GSpWeight) -> tuple[int, int, int, int]:
    """Exponents of lambda evaluated on u(x1..x4) = diag(x1x2, x1x3, x3x4, x2x4).

    With a1 = x1x2, a2 = x1x3, v = x1x2x3x4 the value of lambda(k,k',t) is
    x1^(k+k'+t) x2^(k+t) x3^(k'+t) x4^t.  Additive in lambda.
    """
    return (lam.k + lam.kp + lam.t, lam.k + lam.t, lam.kp + lam.t, lam.t)


def mono_inverse(e: tuple[int, int, int, int]) -> GSpWeight:
    """Inverse of mono on its image {e1 + e4 = e2 + e3}."""
    if e[0] + e[3] != e[1] + e[2]:
        raise ValueError(f"exponent vector {e} is not in the weight sublattice")
    t = e[3]
    return GSpWeight(e[1] - t, e[2] - t, t)


def xi_perm_on_exponents(perm: tuple[int, int, int, int],
                         e: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Monomial action: xi_i -> xi_{perm(i)} sends prod xi_i^{e_i} to the
    monomial whose exponent at slot perm(i) is e_i."""
    out = [0, 0, 0, 0]
    for i in range(4):
        out[perm[i]] = e[i]
    return tuple(out)  # type: ignore[return-value]


def nilradical_roots(parabolic: ParabolicKind) -> list[GSpWeight]:
    """Roots of the unipotent radical, for the two maximal parabolics.

    The Siegel radical is abelian and contains the two long roots; the
    Klingen radical is a Heisenberg algebra containing rho1.
    """
    if parabolic is ParabolicKind.SIEGEL_Q0:
        return [RHO2, RHO1 + RHO2, GSpWeight(2, 0, 0)]
    if parabolic is ParabolicKind.KLINGEN_Q1:
        return [RHO1, RHO1 + RHO2, GSpWeight(2, 0, 0)]
    raise ValueError(f"no GSp4 nilradical for {parabolic}")


@dataclass(frozen=True)
class GL2WeylElement:
    """Element of the rank-1 Weyl group of GL2."""

    nontrivial: bool

    @property
    def length(self) -> int:
        return 1 if self.nontrivial else 0

    def dot_action(self, lam: GL2Weight) -> GL2Weight:
        """Dot action with the honest similitude twist.

        The reflection sends lambda(k,t) to lambda(-k, t+k); with the
        rho-shift this gives lambda(k,t) |-> lambda(-k-2, k+t+1).
        """
        if not self.nontrivial:
            return lam
        return GL2Weight(-lam.k - 2, lam.k + lam.t + 1)

    def serialize(self) -> list[str]:
        return ["s"] if self.nontrivial else []


def kostant_set(parabolic: ParabolicKind):
    """Minimal-length coset representatives W' = {w : Delta+(w) in Delta(u)}.

    Computed from the definition; for both maximal parabolics this recovers
    four elements of lengths 0,1,2,3, and for the GL2 Borel the full rank-1
    Weyl group.
    """
    if parabolic is ParabolicKind.BOREL2:
        return [GL2WeylElement(False), GL2WeylElement(True)]
    roots = {(r.k, r.kp) for r in nilradical_roots(parabolic)}
    out = [
        el
        for el in weyl_enumerate()
        if all((r.k, r.kp) in roots for r in inversion_set(el))
    ]
    return sorted(out, key=lambda w: w.length)


def restrict_to_levi(parabolic: ParabolicKind, lam: GSpWeight):
    """Restriction of lambda(k,k',t) to the Levi of a maximal parabolic.

    Klingen: the GL2 Levi block meets the torus in diag(a, a^-1 v), giving
    the GL2 weight lambda(k', t).  Siegel: the GL1 factor diag(x,x,1,1) acts
    by x^(k+k'+t); the complementary GL2 label is the pair (k, k').
    """
    if parabolic is ParabolicKind.KLINGEN_Q1:
        return GL2Weight(lam.kp, lam.t)
    if parabolic is ParabolicKind.SIEGEL_Q0:
        return SiegelLeviLabel(lam.k + lam.kp + lam.t, (lam.k, lam.kp))
    raise ValueError(f"unsupported parabolic {parabolic}")


@dataclass(frozen=True)
class SiegelLeviLabel:
    """Levi datum on the Siegel parabolic: GL1 exponent and GL2 weight pair."""

    gm_exponent: int
    gl2_pair: tuple[int, int]

    def gl2_dim(self) -> int:
        a, b = self.gl2_pair
        return a - b + 1

    def __str__(self) -> str:
        a, b = self.gl2_pair
        return f"x^{self.gm_exponent} (x) F({a},{b})"


def levi_dimension(parabolic: ParabolicKind, stratum_weight: GSpWeight) -> int:
    """Dimension of the Levi irrep attached to a Kostant stratum weight."""
    if parabolic is ParabolicKind.KLINGEN_Q1:
        return restrict_to_levi(parabolic, stratum_weight).dim()
    if parabolic is ParabolicKind.SIEGEL_Q0:
        return restrict_to_levi(parabolic, stratum_weight).gl2_dim()
    raise ValueError(f"unsupported parabolic {parabolic}")


def weyl_dim_c2(lam: GSpWeight) -> int:
    """Weyl dimension formula for Sp4 = C2 at highest weight (k, k')."""
    if not lam.is_dominant():
        raise ValueError("dimension formula needs a dominant weight")
    k, kp = lam.k, lam.kp
    num = (k - kp + 1) * (kp + 1) * (k + 2) * (k + kp + 3)
    if num % 6:
        raise ArithmeticError("C2 dimension formula did not divide by 6")
    return num // 6
