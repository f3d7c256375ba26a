"""Canonical objects: symmetrized Jordan blocks, block sums, and the 17
normal-form families of R-matrices together with their states.

The state psi and its R-matrix are related by R = T psi~ T^dagger with
T = M / sqrt(2) for the Gaussian-integer matrix M below, so
R = M psi~ M^dagger / 2 and psi~ = M^dagger R M / 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .gaussian import ONE, ZERO, GaussianRational, I, as_gr
from .matrix import ExactMatrix
from .poly import UniPoly
from .states import PureState4

__all__ = [
    "BlockSpec",
    "sym",
    "tall",
    "wide",
    "symmetrized_jordan_block",
    "canonical_matrix",
    "FamilyParams",
    "FAMILY_PARAM_COUNT",
    "FUSED_GROUPS",
    "group_of_family",
    "family_rmatrix",
    "family_template",
    "normal_form_state",
    "state_from_rmatrix",
    "M_INT",
]

M_INT = ExactMatrix.from_rows([
    [1, 0, 0, 1],
    [0, I, I, 0],
    [0, -1, 1, 0],
    [I, 0, 0, -I],
])
_HALF = GaussianRational(1, 0) / 2


# --- blocks ------------------------------------------------------------------

_KIND_ORDER = {"sym": 0, "tall": 1, "wide": 2}


@dataclass(frozen=True)
class BlockSpec:
    """One indecomposable block.

    kind "sym": the symmetrized Jordan block of size n = ``size`` at alpha.
    When alpha is irrational it is recorded through ``alpha_sq_poly``, an
    irreducible polynomial in s having alpha^2 as a root; ``alpha`` is then
    None. kind "tall": the (m+1) x m block; "wide": its m x (m+1) transpose.
    """

    kind: str
    size: int
    alpha: GaussianRational | None = None
    alpha_sq_poly: UniPoly | None = None

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind == "sym":
            if self.size < 1:
                raise ValueError("symmetrized block needs n >= 1")
            if self.alpha is None and self.alpha_sq_poly is None:
                raise ValueError("symmetrized block needs alpha")
            if self.alpha is not None and self.alpha.is_zero() and self.size % 2 == 1:
                raise ValueError("symmetrized block of odd size needs alpha != 0")
        elif self.size < 0:
            raise ValueError("rectangular block needs m >= 0")

    @property
    def shape(self) -> tuple[int, int]:
        if self.kind == "sym":
            return (self.size, self.size)
        if self.kind == "tall":
            return (self.size + 1, self.size)
        return (self.size, self.size + 1)

    @property
    def is_nilpotent(self) -> bool:
        return self.kind != "sym" or (self.alpha is not None and self.alpha.is_zero())

    def sort_key(self):
        if self.alpha is not None:
            akey = (0, self.alpha.sort_key())
        elif self.alpha_sq_poly is not None:
            akey = (1, self.alpha_sq_poly.sort_key())
        else:
            akey = (2,)
        return (_KIND_ORDER[self.kind], self.size, akey)

    def __str__(self):
        if self.kind != "sym":
            return f"{self.kind}({self.size})"
        if self.alpha is not None:
            return f"sym({self.size}, {self.alpha})"
        return f"sym({self.size}, alpha^2 root of {self.alpha_sq_poly.to_str('s')})"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "size": self.size}
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        if self.alpha_sq_poly is not None:
            out["alpha_squared_root_of"] = self.alpha_sq_poly.to_str("s")
        return out


def sym(n: int, alpha) -> BlockSpec:
    return BlockSpec("sym", n, as_gr(alpha))


def tall(m: int) -> BlockSpec:
    return BlockSpec("tall", m)


def wide(m: int) -> BlockSpec:
    return BlockSpec("wide", m)


def _sym_matrix(n: int, alpha: GaussianRational) -> ExactMatrix:
    """alpha I_n + (sub/superdiagonal ones) + i on the antidiagonal r+c = n-2
    and -i on the antidiagonal r+c = n (0-based)."""
    rows = [[ZERO] * n for _ in range(n)]
    for r in range(n):
        rows[r][r] = alpha
        if r + 1 < n:
            rows[r][r + 1] = rows[r][r + 1] + 1
            rows[r + 1][r] = rows[r + 1][r] + 1
    for r in range(n):
        c = n - 2 - r
        if 0 <= c < n:
            rows[r][c] = rows[r][c] + I
        c = n - r
        if 0 <= c < n:
            rows[r][c] = rows[r][c] - I
    return ExactMatrix.from_rows(rows)


def _tall_matrix(m: int) -> ExactMatrix:
    if m == 0:
        return ExactMatrix(1, 0, [])
    if m == 1:
        return ExactMatrix.from_rows([[1], [I]])
    big = _sym_matrix(2 * m + 1, ZERO)
    return big.submatrix(list(range(0, 2 * m + 1, 2)), list(range(1, 2 * m, 2)))


def symmetrized_jordan_block(spec: BlockSpec) -> ExactMatrix:
    """Exact matrix of one indecomposable block."""
    if spec.kind == "sym":
        if spec.alpha is None:
            raise ValueError("cannot build a block at an irrational alpha")
        return _sym_matrix(spec.size, spec.alpha)
    if spec.kind == "tall":
        return _tall_matrix(spec.size)
    return _tall_matrix(spec.size).T


def canonical_matrix(blocks: Sequence[BlockSpec]) -> ExactMatrix:
    """Block-diagonal direct sum in the given order."""
    return ExactMatrix.block_diag([symmetrized_jordan_block(b) for b in blocks])


# --- the 17 families ---------------------------------------------------------

FAMILY_PARAM_COUNT = {1: 4, 2: 3, 3: 2, 4: 2, 5: 2, 6: 2, 7: 1, 8: 1, 9: 1, 10: 1, 11: 1,
                      12: 0, 13: 0, 14: 0, 15: 0, 16: 0, 17: 0}

FUSED_GROUPS: tuple[frozenset[int], ...] = tuple(frozenset(g) for g in (
    {1}, {2}, {3, 4, 5}, {6}, {7, 8, 9}, {10, 11}, {12, 13}, {14, 15}, {16, 17}))


def group_of_family(k: int) -> frozenset[int]:
    for g in FUSED_GROUPS:
        if k in g:
            return g
    raise ValueError(f"no family {k}")


@dataclass(frozen=True)
class FamilyParams:
    family: int
    params: tuple[GaussianRational, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.family not in FAMILY_PARAM_COUNT:
            raise ValueError(f"invalid family index {self.family}")
        object.__setattr__(self, "params", tuple(as_gr(p) for p in self.params))
        want = FAMILY_PARAM_COUNT[self.family]
        if len(self.params) != want:
            raise ValueError(f"family {self.family} takes {want} parameters, got {len(self.params)}")


def _r_rows(k: int, p: Sequence[GaussianRational]) -> list[list]:
    i = I
    z = ZERO
    if k == 1:
        a, b, c, d = p
        return [[a, z, z, z], [z, b, z, z], [z, z, c, z], [z, z, z, d]]
    if k == 2:
        a, b, c = p
        return [[a, z, z, z], [z, b, z, z], [z, z, c + i, 1], [z, z, 1, c - i]]
    if k in (3, 4):
        a, b = p
        rows = [[a, z, z, z], [z, b, z, z], [z, z, 1, z], [z, z, i, z]]
        return rows if k == 3 else _transpose(rows)
    if k == 5:
        a, b = p
        return [[a + i, 1, z, z], [1, a - i, z, z], [z, z, b + i, 1], [z, z, 1, b - i]]
    if k == 6:
        a, b = p
        return [[a, z, z, z], [z, b, 1, z], [z, 1, b, i], [z, z, i, b]]
    if k in (7, 8):
        (a,) = p
        rows = [[a, z, z, z], [z, 1, i, z], [z, 1 + i, 1 - i, z], [z, -i, 1, z]]
        return rows if k == 7 else _transpose(rows)
    if k == 9:
        (a,) = p
        return [[a, 1, i, z], [1, a + i, 1, -i], [i, 1, a - i, 1], [z, -i, 1, a]]
    if k in (10, 11):
        (a,) = p
        head = [[a + i, 1, z, z], [1, a - i, z, z]]
        tail = [[z, z, 1, z], [z, z, i, z]] if k == 10 else [[z, z, 1, i], [z, z, z, z]]
        return head + tail
    if k in (12, 13):
        rows = [[1, z, i, z], [1, 1 + i, -i, z], [i, 1 - i, 1, z], [-i, z, 1, z]]
        return rows if k == 12 else _transpose(rows)
    if k in (14, 15):
        rows = [[1, i, z, z], [1 + i, 1 - i, z, z], [-i, 1, z, z], [z, z, 1, i]]
        return rows if k == 14 else _transpose(rows)
    if k in (16, 17):
        rows = [[1, z, z, z], [i, z, z, z], [z, 1, z, z], [z, i, z, z]]
        return rows if k == 16 else _transpose(rows)
    raise ValueError(f"invalid family index {k}")


def _transpose(rows):
    return [list(r) for r in zip(*rows)]


def family_rmatrix(fp: FamilyParams) -> ExactMatrix:
    """The R-matrix representative of the family at the given parameters."""
    return ExactMatrix.from_rows(_r_rows(fp.family, fp.params))


def family_template(k: int) -> tuple[list[int], list[tuple[str, int]]]:
    """Block shape of family k: sizes of the parameterized symmetrized
    blocks (one per parameter, in order) and the fixed rectangular blocks."""
    templates = {
        1: ([1, 1, 1, 1], []),
        2: ([1, 1, 2], []),
        3: ([1, 1], [("tall", 1), ("wide", 0)]),
        4: ([1, 1], [("wide", 1), ("tall", 0)]),
        5: ([2, 2], []),
        6: ([1, 3], []),
        7: ([1], [("tall", 2), ("wide", 0)]),
        8: ([1], [("wide", 2), ("tall", 0)]),
        9: ([4], []),
        10: ([2], [("tall", 1), ("wide", 0)]),
        11: ([2], [("wide", 1), ("tall", 0)]),
        12: ([], [("tall", 3), ("wide", 0)]),
        13: ([], [("wide", 3), ("tall", 0)]),
        14: ([], [("tall", 2), ("wide", 1)]),
        15: ([], [("wide", 2), ("tall", 1)]),
        16: ([], [("tall", 1), ("tall", 1), ("wide", 0), ("wide", 0)]),
        17: ([], [("wide", 1), ("wide", 1), ("tall", 0), ("tall", 0)]),
    }
    if k not in templates:
        raise ValueError(f"invalid family index {k}")
    return templates[k]


def state_from_rmatrix(r: ExactMatrix) -> PureState4:
    """The state whose R-matrix is r: psi~ = M^dagger r M / 2."""
    if r.shape != (4, 4):
        raise ValueError("R-matrix must be 4x4")
    flat = (M_INT.H @ r @ M_INT).scale(_HALF)
    return PureState4(flat.entries)


def normal_form_state(fp: FamilyParams) -> PureState4:
    return state_from_rmatrix(family_rmatrix(fp))
