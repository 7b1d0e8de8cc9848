"""Explicit matrix realizations: gsp4 over Q(i), compact-torus weights,
symmetric-power GL2 modules, tensor-constructed GSp4 irreps and a
Chevalley-Eilenberg cohomology oracle.

Conventions.  The symplectic form is ((0, I2), (-I2, 0)) in the basis
e1..e4, so

    gsp4 = { ((A, B), (C, -A^T + c I2)) : B, C symmetric },

with similitude derivative c.  The diagonal Cartan is spanned by
H1 = diag(1,0,-1,0), H2 = diag(0,1,0,-1) and the center Z = I4; the weight
lambda(k,k',t) has eigenvalue list (k, k', k+k'+2t) on (H1, H2, Z).

All compact-torus weights are read off after conjugating by the Cayley-type
element J4 = iota(J2 x J2); the global square-root normalization of J2 is
dropped since Ad is insensitive to scalars, which keeps every entry in Q(i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import GAUSS_I, GAUSS_ONE, GaussRational
from .rootdata import (
    CompactWeight,
    CompactWeight2,
    GL2Weight,
    GSpWeight,
    ParabolicKind,
)

GR = GaussRational.of


class LieMatrix:
    """Square matrix over Q(i) with bracket support."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(
            tuple(x if isinstance(x, GaussRational) else GR(x) for x in row)
            for row in rows
        )
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @staticmethod
    def zero(n: int) -> "LieMatrix":
        return LieMatrix([[0] * n for _ in range(n)])

    @staticmethod
    def unit(n: int, i: int, j: int, c=1) -> "LieMatrix":
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = c
        return LieMatrix(rows)

    @staticmethod
    def identity(n: int) -> "LieMatrix":
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return LieMatrix(rows)

    def __add__(self, other: "LieMatrix") -> "LieMatrix":
        return LieMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "LieMatrix") -> "LieMatrix":
        return LieMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "LieMatrix":
        return LieMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "LieMatrix":
        c = c if isinstance(c, GaussRational) else GR(c)
        return LieMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "LieMatrix") -> "LieMatrix":
        n = self.n
        return LieMatrix(
            [
                [
                    sum(
                        (self.rows[i][l] * other.rows[l][j] for l in range(n)),
                        GaussRational.of(0),
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )

    def bracket(self, other: "LieMatrix") -> "LieMatrix":
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def entry(self, i: int, j: int) -> GaussRational:
        return self.rows[i][j]

    def __repr__(self) -> str:
        return "LieMatrix(" + "; ".join(" ".join(map(str, r)) for r in self.rows) + ")"


def _inverse2(m: LieMatrix) -> LieMatrix:
    a, b = m.rows[0]
    c, d = m.rows[1]
    det = a * d - b * c
    return LieMatrix([[d / det, (-b) / det], [(-c) / det, a / det]])


def _inverse4_block(j2inv: LieMatrix) -> LieMatrix:
    return iota(j2inv, j2inv)


def iota(m1: LieMatrix, m2: LieMatrix) -> LieMatrix:
    """Interleaved embedding GL2 x GL2 -> GL4 matching the symplectic basis:
    the first factor occupies rows/cols (1,3), the second rows/cols (2,4)."""
    rows = [[GR(0)] * 4 for _ in range(4)]
    idx1 = (0, 2)
    idx2 = (1, 3)
    for a in range(2):
        for b in range(2):
            rows[idx1[a]][idx1[b]] = m1.rows[a][b]
            rows[idx2[a]][idx2[b]] = m2.rows[a][b]
    return LieMatrix(rows)


# Cayley-type elements, square-root normalization dropped
J2 = LieMatrix([[GAUSS_ONE, GAUSS_I], [GAUSS_I, GAUSS_ONE]])
J2_INV = _inverse2(J2)
J4 = iota(J2, J2)
J4_INV = _inverse4_block(J2_INV)


def gsp4_basis() -> dict[str, LieMatrix]:
    """Named basis of gsp4 (11-dimensional).

    Root vectors follow the block description: entry (i,j) of the A block
    pairs with -(j,i) of the D block; B and C blocks are symmetric.
    """
    E = LieMatrix.unit
    basis = {
        "H1": LieMatrix([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 0]]),
        "H2": LieMatrix([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1]]),
        "Z": LieMatrix.identity(4),
        # positive root vectors
        "X_r1": E(4, 0, 1) - E(4, 3, 2),        # rho1 = lambda(1,-1,0)
        "X_r2": E(4, 1, 3),                     # rho2 = lambda(0,2,0)
        "X_r1r2": E(4, 0, 3) + E(4, 1, 2),      # rho1+rho2
        "X_2r1r2": E(4, 0, 2),                  # 2rho1+rho2
        # negative root vectors
        "Y_r1": E(4, 1, 0) - E(4, 2, 3),
        "Y_r2": E(4, 3, 1),
        "Y_r1r2": E(4, 3, 0) + E(4, 2, 1),
        "Y_2r1r2": E(4, 2, 0),
    }
    return basis


def gsp4_weight_of(name: str) -> GSpWeight | None:
    table = {
        "X_r1": GSpWeight(1, -1, 0),
        "X_r2": GSpWeight(0, 2, -1),
        "X_r1r2": GSpWeight(1, 1, -1),
        "X_2r1r2": GSpWeight(2, 0, -1),
        "Y_r1": GSpWeight(-1, 1, 0),
        "Y_r2": GSpWeight(0, -2, 1),
        "Y_r1r2": GSpWeight(-1, -1, 1),
        "Y_2r1r2": GSpWeight(-2, 0, 1),
    }
    return table.get(name)


def siegel_nilradical() -> list[LieMatrix]:
    b = gsp4_basis()
    return [b["X_2r1r2"], b["X_r1r2"], b["X_r2"]]


def klingen_nilradical() -> list[LieMatrix]:
    b = gsp4_basis()
    return [b["X_r1"], b["X_r1r2"], b["X_2r1r2"]]


def cartan_elements() -> tuple[LieMatrix, LieMatrix, LieMatrix]:
    b = gsp4_basis()
    return b["H1"], b["H2"], b["Z"]


# -- compact pieces ---------------------------------------------------------

def p_plus_basis() -> list[LieMatrix]:
    """Holomorphic part p4+: matrices ((Z, iZ), (iZ, -Z)), Z symmetric."""
    return [_p_matrix(z, +1) for z in _sym2_basis()]


def p_minus_basis() -> list[LieMatrix]:
    return [_p_matrix(z, -1) for z in _sym2_basis()]


def _sym2_basis() -> list[LieMatrix]:
    return [
        LieMatrix([[1, 0], [0, 0]]),
        LieMatrix([[0, 0], [0, 1]]),
        LieMatrix([[0, 1], [1, 0]]),
    ]


def _p_matrix(z: LieMatrix, sign: int) -> LieMatrix:
    i = GAUSS_I if sign > 0 else -GAUSS_I
    rows = [[GR(0)] * 4 for _ in range(4)]
    for a in range(2):
        for b in range(2):
            rows[a][b] = z.rows[a][b]
            rows[a][b + 2] = i * z.rows[a][b]
            rows[a + 2][b] = i * z.rows[a][b]
            rows[a + 2][b + 2] = -z.rows[a][b]
    return LieMatrix(rows)


def k4_basis() -> list[LieMatrix]:
    """Complexified Lie algebra of the maximal compact modulo center:
    ((A, B), (-B, A)) with A antisymmetric, B symmetric, plus the center."""
    out = []
    a = LieMatrix([[0, 1], [-1, 0]])
    out.append(_k_matrix(a, LieMatrix.zero(2)))
    for b in _sym2_basis():
        out.append(_k_matrix(LieMatrix.zero(2), b))
    out.append(LieMatrix.identity(4))
    return out


def _k_matrix(a: LieMatrix, b: LieMatrix) -> LieMatrix:
    rows = [[GR(0)] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[i][j] = a.rows[i][j]
            rows[i][j + 2] = b.rows[i][j]
            rows[i + 2][j] = -b.rows[i][j]
            rows[i + 2][j + 2] = a.rows[i][j]
    return LieMatrix(rows)


def del_holomorphic() -> LieMatrix:
    """The weight lambda'(1,-1,0) vector in k4."""
    h = Fraction(1, 2)
    i2 = GAUSS_I * GR(h)
    return LieMatrix(
        [
            [GR(0), GR(h), GR(0), i2],
            [GR(-h), GR(0), i2, GR(0)],
            [GR(0), -i2, GR(0), GR(h)],
            [-i2, GR(0), GR(-h), GR(0)],
        ]
    )


def del_antiholomorphic() -> LieMatrix:
    h = Fraction(1, 2)
    mi2 = -GAUSS_I * GR(h)
    return LieMatrix(
        [
            [GR(0), GR(h), GR(0), mi2],
            [GR(-h), GR(0), mi2, GR(0)],
            [GR(0), -mi2, GR(0), GR(h)],
            [-mi2, GR(0), GR(-h), GR(0)],
        ]
    )


def v_plus_2() -> LieMatrix:
    """Weight lambda'(2,0) raising vector of sl2(R)-complexified."""
    h = GR(Fraction(1, 2))
    ih = GAUSS_I * h
    return LieMatrix([[h, ih], [ih, -h]])


def v_minus_2() -> LieMatrix:
    h = GR(Fraction(1, 2))
    ih = GAUSS_I * h
    return LieMatrix([[-h, ih], [ih, h]])


class WeightMixingError(ValueError):
    """A vector failed to be a simultaneous eigenvector of the compact torus."""


def weight_under_torus(x: LieMatrix, torus: str):
    """Adjoint weight of x under the compact torus, via Ad J_n conjugation.

    torus = 'compact2' reads a CompactWeight2 lambda'(n, c) on 2x2 matrices;
    torus = 'compact4' reads a CompactWeight lambda'(n, n', c) on 4x4.
    """
    if torus == "compact2":
        y = J2_INV @ x @ J2
        h = LieMatrix([[1, 0], [0, -1]])       # alpha direction
        zc = LieMatrix([[1, 0], [0, 1]])       # diag(a, a^-1 v) with v = a^2
        kk = _ad_eigenvalue(h, y)
        cc = _ad_eigenvalue(zc, y)
        # weight lambda(k, t) on (h, z): eigenvalues (k, k+2t); lambda'(n, c)
        # has n = k, c = k + 2t.
        return CompactWeight2(int(kk), int(cc))
    if torus == "compact4":
        y = J4_INV @ x @ J4
        h1, h2, z = cartan_elements()
        a = _ad_eigenvalue(h1, y)
        b = _ad_eigenvalue(h2, y)
        c = _ad_eigenvalue(z, y)
        return CompactWeight(int(a), int(b), int(c))
    raise ValueError(f"unknown torus {torus!r}")


def _ad_eigenvalue(h: LieMatrix, y: LieMatrix) -> Fraction:
    br = h.bracket(y)
    lam = None
    for i in range(y.n):
        for j in range(y.n):
            v = y.rows[i][j]
            if not v.is_zero():
                cand = br.rows[i][j] / v
                if cand.im != 0:
                    raise WeightMixingError(f"non-rational eigenvalue at entry {(i, j)}")
                if lam is None:
                    lam = cand.re
                elif lam != cand.re:
                    raise WeightMixingError(
                        f"weight mixing: entry {(i, j)} gives {cand.re}, expected {lam}"
                    )
            elif not br.rows[i][j].is_zero():
                raise WeightMixingError(f"bracket has support outside the vector at {(i, j)}")
    if lam is None:
        raise WeightMixingError("zero vector has no weight")
    return lam


# -- module realizations -----------------------------------------------------

@dataclass
class ModuleRealization:
    """A finite-dimensional module given by explicit action matrices.

    ``action`` maps generator names to dimension x dimension matrices over
    Fraction (columns act on basis vectors); ``weights`` lists the torus
    weight of each basis vector.
    """

    dimension: int
    basis_labels: list[str]
    action: dict[str, list[list[Fraction]]]
    weights: list
    description: str = ""

    def act(self, name: str, vec: list[Fraction]) -> list[Fraction]:
        m = self.action[name]
        return [
            sum((m[i][j] * vec[j] for j in range(self.dimension)), Fraction(0))
            for i in range(self.dimension)
        ]

    def weight_multiset(self):
        return sorted(self.weights, key=lambda w: (w.k, w.kp, w.t) if hasattr(w, "kp") else (w.k, w.t))


def sym_module(m: int) -> ModuleRealization:
    """Dual symmetric power with basis (a_j^m), j = 0..m.

    a_j^m has compact weight lambda'(m-2j, -m); the raising and lowering
    operators act by v+ a_j = -j a_{j-1} and v- a_j = -(m-j) a_{j+1}.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    dim = m + 1
    vplus = [[Fraction(0)] * dim for _ in range(dim)]
    vminus = [[Fraction(0)] * dim for _ in range(dim)]
    for j in range(dim):
        if j >= 1:
            vplus[j - 1][j] = Fraction(-j)
        if j <= m - 1:
            vminus[j + 1][j] = Fraction(-(m - j))
    weights = [CompactWeight2(m - 2 * j, -m) for j in range(dim)]
    return ModuleRealization(
        dimension=dim,
        basis_labels=[f"a_{j}^{m}" for j in range(dim)],
        action={"v+": vplus, "v-": vminus},
        weights=weights,
        description=f"dual Sym^{m} of the standard GL2 module",
    )


# -- exact linear algebra over Fraction --------------------------------------

def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows[:r] + [row for row in rows[r:] if any(x != 0 for x in row)], pivots


def matrix_rank_fraction_free(rows: list[list[Fraction]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on cleared integers."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    m: list[list[int]] = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        m.append([int(x * den) for x in row])
    rank = 0
    prev = 1
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == nr:
            break
    return rank


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


# -- GSp4 irreps inside tensor powers ----------------------------------------

_V4_WEIGHTS = [
    GSpWeight(1, 0, 0),
    GSpWeight(0, 1, 0),
    GSpWeight(-1, 0, 1),
    GSpWeight(0, -1, 1),
]

IRREP_CAP_DEFAULT = 5


def _fraction_matrix(m: LieMatrix) -> list[list[Fraction]]:
    out = []
    for row in m.rows:
        line = []
        for x in row:
            if x.im != 0:
                raise ValueError("rational realization expected")
            line.append(x.re)
        out.append(line)
    return out


def irrep_construct(lam: GSpWeight, cap: int = IRREP_CAP_DEFAULT) -> ModuleRealization:
    """Irreducible GSp4 module of highest weight lambda inside V4^(k+k')(t).

    The highest-weight line is cut out of the lambda(k,k',0) weight space of
    the tensor power by the two simple raising operators; the module is the
    closure under the lowering operators.  The v^t twist only shifts the
    similitude component of every weight.
    """
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    n = lam.k + lam.kp
    if n > cap:
        raise ValueError(f"tensor degree {n} exceeds cap {cap}")
    basis = gsp4_basis()
    gens = {name: _fraction_matrix(m) for name, m in basis.items()}
    dim_tensor = 4 ** n if n else 1

    def tensor_action(gen: list[list[Fraction]], vec: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for idx, c in vec.items():
            digits = _digits(idx, n)
            for pos in range(n):
                d = digits[pos]
                for i in range(4):
                    v = gen[i][d]
                    if v:
                        nd = list(digits)
                        nd[pos] = i
                        key = _undigits(nd)
                        nc = out.get(key, Fraction(0)) + c * v
                        if nc:
                            out[key] = nc
                        else:
                            out.pop(key, None)
        return out

    def tensor_weight(idx: int) -> GSpWeight:
        w = GSpWeight(0, 0, 0)
        for d in _digits(idx, n):
            w = w + _V4_WEIGHTS[d]
        return w

    if n == 0:
        weights = [GSpWeight(0, 0, lam.t)]
        action = {name: [[_trivial_eigen(name, lam.t)]] for name in gens}
        return ModuleRealization(1, ["1"], action, weights, description=f"trivial({lam.t})")

    # highest-weight space: weight lambda(k,k',0), killed by both raisings
    target = GSpWeight(lam.k, lam.kp, 0)
    space = [i for i in range(dim_tensor) if tensor_weight(i) == target]
    if not space:
        raise ValueError("empty candidate weight space (internal)")
    rows = []
    for idx in space:
        vec = {idx: Fraction(1)}
        img: list[Fraction] = []
        for raiser in ("X_r1", "X_r2"):
            out = tensor_action(gens[raiser], vec)
            img.extend(out.get(j, Fraction(0)) for j in range(dim_tensor))
        rows.append(img)
    kernel = _kernel_vectors(rows)
    if not kernel:
        raise ValueError("highest-weight vector not found (internal consistency failure)")
    hw = {space[i]: c for i, c in enumerate(kernel[0]) if c != 0}

    # close under lowering operators
    vectors: list[dict[int, Fraction]] = [hw]
    echelon: list[dict[int, Fraction]] = []
    _echelon_insert(echelon, dict(hw))
    frontier = [hw]
    lowerers = ["Y_r1", "Y_r2"]
    while frontier:
        new_frontier = []
        for vec in frontier:
            for low in lowerers:
                img = tensor_action(gens[low], vec)
                if img and _echelon_insert(echelon, dict(img)):
                    vectors.append(img)
                    new_frontier.append(img)
        frontier = new_frontier
    dim = len(vectors)

    # expansion of arbitrary tensors in the module basis via echelon solve
    basis_rows = [dict(v) for v in vectors]
    action = {}
    for name, gen in gens.items():
        cols = []
        for vec in vectors:
            img = tensor_action(gen, vec)
            if name == "Z":
                for idx, c in vec.items():
                    img[idx] = img.get(idx, Fraction(0)) + 2 * lam.t * c
            coords = _solve_in_span(basis_rows, img)
            cols.append(coords)
        action[name] = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    weights = []
    for vec in vectors:
        idx = next(iter(vec))
        w = tensor_weight(idx)
        weights.append(GSpWeight(w.k, w.kp, w.t + lam.t))
    return ModuleRealization(
        dimension=dim,
        basis_labels=[f"v{i}" for i in range(dim)],
        action=action,
        weights=weights,
        description=f"irrep {lam}",
    )


def _trivial_eigen(name: str, t: int) -> Fraction:
    if name == "Z":
        return Fraction(2 * t)
    return Fraction(0)


def _digits(idx: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(idx & 3)
        idx >>= 2
    return out


def _undigits(digits: Sequence[int]) -> int:
    out = 0
    for pos, d in enumerate(digits):
        out |= d << (2 * pos)
    return out


def _kernel_vectors(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Kernel basis of the matrix whose i-th ROW is the image of basis i."""
    if not rows:
        return []
    nr = len(rows)
    nc = len(rows[0])
    mat = [[rows[i][j] for i in range(nr)] for j in range(nc)]  # transpose
    reduced, pivots = rref(mat) if mat else ([], [])
    free = [j for j in range(nr) if j not in pivots]
    out = []
    for f in free:
        vec = [Fraction(0)] * nr
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            if r < len(reduced):
                vec[p] = -reduced[r][f]
        out.append(vec)
    return out


def _echelon_insert(echelon: list[dict[int, Fraction]], vec: dict[int, Fraction]) -> bool:
    """Insert into a sparse echelon basis; returns True if independent."""
    for row in echelon:
        lead = min(row)
        if lead in vec and vec[lead] != 0:
            f = vec[lead] / row[lead]
            for k, v in row.items():
                nv = vec.get(k, Fraction(0)) - f * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    if not vec:
        return False
    echelon.append(vec)
    echelon.sort(key=lambda r: min(r))
    return True


def _solve_in_span(basis_rows: list[dict[int, Fraction]], target: dict[int, Fraction]) -> list[Fraction]:
    """Coordinates of target in the span of basis_rows (exact, dense solve)."""
    support = sorted(set().union(*[set(b) for b in basis_rows], set(target)))
    pos = {s: i for i, s in enumerate(support)}
    nr = len(basis_rows)
    aug = [[Fraction(0)] * (nr + 1) for _ in range(len(support))]
    for j, b in enumerate(basis_rows):
        for s, c in b.items():
            aug[pos[s]][j] = c
    for s, c in target.items():
        aug[pos[s]][nr] = c
    reduced, pivots = rref(aug)
    coords = [Fraction(0)] * nr
    for r, p in enumerate(pivots):
        if p == nr:
            raise ValueError("target not in span")
        coords[p] = reduced[r][nr]
    return coords


# -- Chevalley-Eilenberg cohomology ------------------------------------------

def chevalley_eilenberg_dims(parabolic: ParabolicKind, module: ModuleRealization) -> list[tuple[int, int]]:
    """Cohomology dimensions of the nilradical acting on the module.

    The Koszul complex Hom(Lambda^q u, M) is assembled from the explicit
    action matrices and structure constants; ranks are taken over Q by
    fraction-free elimination, so the dimensions are exact.
    """
    if parabolic is ParabolicKind.SIEGEL_Q0:
        nil_names = ["X_2r1r2", "X_r1r2", "X_r2"]
    elif parabolic is ParabolicKind.KLINGEN_Q1:
        nil_names = ["X_r1", "X_r1r2", "X_2r1r2"]
    elif parabolic is ParabolicKind.BOREL2:
        nil_names = ["e"]
    else:
        raise ValueError(f"unsupported parabolic {parabolic}")

    if parabolic is ParabolicKind.BOREL2:
        mats = {"e": module.action["v+"]} if "v+" in module.action else {"e": module.action["e"]}
        structure = {("e", "e"): {}}
        names = ["e"]
    else:
        basis = gsp4_basis()
        names = nil_names
        mats = {nm: module.action[nm] for nm in names}
        structure = {}
        for a in names:
            for b in names:
                br = basis[a].bracket(basis[b])
                coords = _expand_in_nilradical(br, [basis[nm] for nm in names])
                structure[(a, b)] = {names[i]: c for i, c in enumerate(coords) if c != 0}

    dim_u = len(names)
    dim_m = module.dimension
    subsets = {
        q: list(itertools.combinations(range(dim_u), q)) for q in range(dim_u + 2)
    }
    out = []
    for q in range(dim_u + 1):
        dom = subsets[q]
        cod = subsets[q + 1] if q + 1 <= dim_u else []
        # d: C^q -> C^{q+1}; build matrix of size (|cod|*dim_m) x (|dom|*dim_m)
        mat = [
            [Fraction(0)] * (len(dom) * dim_m) for _ in range(len(cod) * dim_m)
        ]
        for ci, cols in enumerate(dom):
            for ti, tgt in enumerate(cod):
                # term 1: sum_j (-1)^(j+1)... with action of x_j
                for jpos, j in enumerate(tgt):
                    rest = tuple(x for x in tgt if x != j)
                    if rest != cols:
                        continue
                    sign = (-1) ** jpos
                    act = mats[names[j]]
                    for a in range(dim_m):
                        for b in range(dim_m):
                            if act[a][b]:
                                mat[ti * dim_m + a][ci * dim_m + b] += sign * act[a][b]
                # term 2: brackets
                for jpos in range(len(tgt)):
                    for lpos in range(jpos + 1, len(tgt)):
                        j, l = tgt[jpos], tgt[lpos]
                        br = structure[(names[j], names[l])]
                        rest = tuple(x for x in tgt if x not in (j, l))
                        for bname, bc in br.items():
                            bidx = names.index(bname)
                            merged = tuple(sorted(rest + (bidx,)))
                            if len(set(rest + (bidx,))) != len(rest) + 1:
                                continue
                            if merged != cols:
                                continue
                            pos = merged.index(bidx)
                            sign = (-1) ** (jpos + lpos) * (-1) ** pos
                            for a in range(dim_m):
                                mat[ti * dim_m + a][ci * dim_m + a] += sign * bc
        rank = matrix_rank_fraction_free(mat) if cod else 0
        dim_cq = len(dom) * dim_m
        out.append((q, dim_cq, rank))
    dims = []
    prev_rank = 0
    for q, dim_cq, rank in out:
        dims.append((q, dim_cq - rank - prev_rank))
        prev_rank = rank
    return dims


def _expand_in_nilradical(x: LieMatrix, nil: list[LieMatrix]) -> list[Fraction]:
    """Coordinates of x in the span of the nilradical basis (or error)."""
    entries = [(i, j) for i in range(4) for j in range(4)]
    rows = []
    for i, j in entries:
        rows.append([_rat(m.entry(i, j)) for m in nil] + [_rat(x.entry(i, j))])
    reduced, pivots = rref(rows)
    coords = [Fraction(0)] * len(nil)
    for r, p in enumerate(pivots):
        if p == len(nil):
            raise ValueError("bracket left the nilradical")
        coords[p] = reduced[r][len(nil)]
    return coords


def _rat(x: GaussRational) -> Fraction:
    if x.im != 0:
        raise ValueError("expected rational entry")
    return x.re


def borel2_module(k: int, t: int) -> ModuleRealization:
    """Sym^k V2(t) as a module for the 1-dimensional GL2 nilradical.

    The raising operator e = E12 sends the monomial X^a Y^(k-a) to
    (k-a) X^(a+1) Y^(k-a-1); weights are read on diag(1,-1) and diag(1,1).
    """
    dim = k + 1
    e = [[Fraction(0)] * dim for _ in range(dim)]
    for a in range(k):
        e[a + 1][a] = Fraction(k - a)
    weights = [GL2Weight(2 * a - k, (k - a) + t) for a in range(dim)]
    return ModuleRealization(
        dimension=dim,
        basis_labels=[f"X^{a}Y^{k - a}" for a in range(dim)],
        action={"e": e},
        weights=weights,
        description=f"Sym^{k}V2({t})",
    )
