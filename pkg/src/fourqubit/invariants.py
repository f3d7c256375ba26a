"""Polynomial invariants of 4-qubit states and the F4 Weyl-group layer.

H is the quadratic invariant; L, M, N are determinants of the three 4x4
flattenings; D, E, F are degree-6 invariants from a 3x3 coefficient
matrix; Gamma, Sigma, Pi generate the invariants of SL_loc extended by
qubit permutations.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import product
from typing import Sequence

from .gaussian import ONE, ZERO, GaussianRational, as_gr
from .matrix import ExactMatrix, determinant
from .poly import UniPoly
from .states import PureState4, cyclic_reindex, flattening

__all__ = [
    "InvariantVector",
    "WeylPoint",
    "inv_H",
    "inv_LMN",
    "inv_D",
    "inv_DEF",
    "invariant_vector",
    "charpoly_from_invariants",
    "cubic_discriminant",
    "weyl_invariants",
    "weyl_relations",
    "weyl_group_action",
    "WEYL_GENERATORS",
    "weyl_generator_matrix",
]


@dataclass(frozen=True)
class InvariantVector:
    H: GaussianRational
    L: GaussianRational
    M: GaussianRational
    N: GaussianRational
    D: GaussianRational
    E: GaussianRational
    F: GaussianRational
    Gamma: GaussianRational
    Sigma: GaussianRational
    Pi: GaussianRational

    def __post_init__(self):
        L, M, N = self.L, self.M, self.N
        if not (L + M + N).is_zero():
            raise ArithmeticError("L + M + N != 0")
        if self.Gamma != self.D + self.E + self.F:
            raise ArithmeticError("Gamma != D + E + F")
        if self.Sigma != L * L + M * M + N * N:
            raise ArithmeticError("Sigma != L^2 + M^2 + N^2")
        if self.Pi != (L - M) * (M - N) * (N - L):
            raise ArithmeticError("Pi != (L-M)(M-N)(N-L)")

    @property
    def slocc_star(self) -> tuple[GaussianRational, ...]:
        """(H, Gamma, Sigma, Pi), invariant under qubit permutations too."""
        return (self.H, self.Gamma, self.Sigma, self.Pi)

    def to_json(self) -> dict:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


def inv_H(psi: PureState4) -> GaussianRational:
    """sum over ijk of (-1)^(i+j+k) psi_{ijk0} psi_{1-i,1-j,1-k,1}."""
    a = psi.amplitudes
    acc = ZERO
    for i, j, k in product((0, 1), repeat=3):
        term = a[8 * i + 4 * j + 2 * k] * a[8 * (1 - i) + 4 * (1 - j) + 2 * (1 - k) + 1]
        acc = acc - term if (i + j + k) % 2 else acc + term
    return acc


def inv_LMN(psi: PureState4) -> tuple[GaussianRational, GaussianRational, GaussianRational]:
    L = determinant(flattening(psi, "primary"))
    M = determinant(flattening(psi, "cyclic1"))
    N = -(L + M)
    return L, M, N


def _b_matrix(psi: PureState4) -> ExactMatrix:
    """Coefficients of det[[Psi00, Psi01], [Psi10, Psi11]] with
    Psi_jk = sum_{il} psi_{ijkl} x_i y_l, over the monomials
    {x0^2, x0 x1, x1^2} x {y0^2, y0 y1, y1^2}."""
    a = psi.amplitudes

    def form(j, k):
        return [[a[8 * i + 4 * j + 2 * k + l] for l in (0, 1)] for i in (0, 1)]

    p00, p01, p10, p11 = form(0, 0), form(0, 1), form(1, 0), form(1, 1)
    b = [[ZERO] * 3 for _ in range(3)]
    for i, l, i2, l2 in product((0, 1), repeat=4):
        term = p00[i][l] * p11[i2][l2] - p01[i][l] * p10[i2][l2]
        if not term.is_zero():
            b[i + i2][l + l2] = b[i + i2][l + l2] + term
    return ExactMatrix.from_rows(b)


def inv_D(psi: PureState4) -> GaussianRational:
    return determinant(_b_matrix(psi))


def inv_DEF(psi: PureState4) -> tuple[GaussianRational, GaussianRational, GaussianRational]:
    return (inv_D(psi), inv_D(cyclic_reindex(psi, 1)), inv_D(cyclic_reindex(psi, 2)))


def invariant_vector(psi: PureState4) -> InvariantVector:
    H = inv_H(psi)
    L, M, N = inv_LMN(psi)
    D, E, F = inv_DEF(psi)
    return InvariantVector(
        H=H, L=L, M=M, N=N, D=D, E=E, F=F,
        Gamma=D + E + F,
        Sigma=L * L + M * M + N * N,
        Pi=(L - M) * (M - N) * (N - L),
    )


def charpoly_from_invariants(psi: PureState4) -> UniPoly:
    """t^8 + 2H t^6 + (H^2 + 2L + 4M) t^4 + 2(HL + 2D) t^2 + L^2."""
    H = inv_H(psi)
    L, M, _ = inv_LMN(psi)
    D = inv_D(psi)
    return UniPoly([L * L, 0, 2 * (H * L + 2 * D), 0, H * H + 2 * L + 4 * M, 0, 2 * H, 0, 1])


def cubic_discriminant(psi: PureState4) -> GaussianRational:
    """Discriminant 16 D (H^3 - 27 D) of s^3 + 2H s^2 + H^2 s + 4D."""
    H = inv_H(psi)
    D = inv_D(psi)
    return 16 * D * (H * H * H - 27 * D)


# --- Weyl group of type F4 ---------------------------------------------------

@dataclass(frozen=True)
class WeylPoint:
    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_gr(getattr(self, name)))

    @classmethod
    def of(cls, coords: Sequence) -> "WeylPoint":
        a, b, c, d = coords
        return cls(a, b, c, d)

    def coords(self) -> tuple[GaussianRational, ...]:
        return (self.a, self.b, self.c, self.d)


def weyl_invariants(p: WeylPoint):
    """(H, Gamma, Sigma, Pi) as polynomials in the diagonal entries of R."""
    a, b, c, d = p.coords()
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    H = (a2 + b2 + c2 + d2) / 2
    gamma32 = (
        2 * (a2 ** 3 + b2 ** 3 + c2 ** 3 + d2 ** 3)
        - (a2 + b2 + c2 + d2) * (a2 * a2 + b2 * b2 + c2 * c2 + d2 * d2)
        + 18 * (a2 * b2 * c2 + b2 * c2 * d2 + c2 * d2 * a2 + d2 * a2 * b2)
    )
    Gamma = gamma32 / 32
    u = 4 * (a * d - b * c) ** 2 - (a2 - b2 - c2 + d2) ** 2
    v = 4 * (a * c + b * d) ** 2 - (a2 - b2 + c2 - d2) ** 2
    abcd16 = 16 * a * b * c * d
    Sigma = (256 * a2 * b2 * c2 * d2 + u * v) / 128
    pi = (abcd16 - u) * (u + v) * (-v - abcd16)
    Pi = pi / 4096
    return H, Gamma, Sigma, Pi


def weyl_relations(p: WeylPoint):
    """(I2, I6, I8, I12) assembled from (H, Gamma, Sigma, Pi)."""
    H, G, S, P = weyl_invariants(p)
    H2 = H * H
    H3 = H2 * H
    I2 = 12 * H
    I6 = 72 * H3 - 96 * G
    I8 = 264 * H2 * H2 - 832 * G * H + 320 * S
    I12 = 4104 * H3 * H3 - 24096 * H3 * G + 17440 * H2 * S + 3904 * G * G - 3840 * P
    return I2, I6, I8, I12


def _generator_ids() -> tuple[str, ...]:
    ids = []
    for i in range(4):
        for j in range(i + 1, 4):
            ids.append(f"swap{i + 1}{j + 1}")
    for i in range(4):
        for j in range(i + 1, 4):
            ids.append(f"flip{i + 1}{j + 1}")
    ids.append("reflect")
    ids.append("negate3")
    return tuple(ids)


WEYL_GENERATORS = _generator_ids()


def weyl_generator_matrix(g: str) -> ExactMatrix:
    """The 4x4 matrix acting on (a, b, c, d)^T for generator id g.

    ``swapXY`` transposes two coordinates and ``flipXY`` negates two; these
    generate the D4 part. ``reflect`` (the reflection in the hyperplane
    a = b + c + d) is the action of the qubit transposition (2 3), and
    ``negate3`` (c -> -c) that of (3 4). The D4 part and ``reflect`` alone
    generate only 384 elements; ``negate3`` is needed for all 1152.
    """
    if g.startswith("swap") or g.startswith("flip"):
        try:
            x, y = int(g[4]) - 1, int(g[5]) - 1
        except (ValueError, IndexError):
            raise ValueError(f"unknown Weyl generator {g!r}") from None
        if len(g) != 6 or not (0 <= x < y <= 3):
            raise ValueError(f"unknown Weyl generator {g!r}")
        rows = [[ONE if r == c else ZERO for c in range(4)] for r in range(4)]
        if g.startswith("swap"):
            rows[x], rows[y] = rows[y], rows[x]
        else:
            rows[x][x] = -ONE
            rows[y][y] = -ONE
        return ExactMatrix.from_rows(rows)
    if g == "reflect":
        h = Fraction(1, 2)
        return ExactMatrix.from_rows([
            [h, h, h, h],
            [h, h, -h, -h],
            [h, -h, h, -h],
            [h, -h, -h, h],
        ])
    if g == "negate3":
        return ExactMatrix.diag([ONE, ONE, -ONE, ONE])
    raise ValueError(f"unknown Weyl generator {g!r}")


def weyl_group_action(p: WeylPoint, g: str) -> WeylPoint:
    m = weyl_generator_matrix(g)
    v = ExactMatrix(4, 1, p.coords())
    return WeylPoint.of((m @ v).entries)
