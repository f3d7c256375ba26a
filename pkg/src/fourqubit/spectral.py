"""Similarity structure of R~ and orbit labels for orthogonal equivalence.

For a state psi, R = T psi~ T^dagger and R~ = [[0, R], [-R^T, 0]] is an
8x8 skew-symmetric matrix whose similarity class is an SL_loc invariant.
For a rectangular A, the pair of maps (A, A^T) is a representation of a
two-vertex quiver; its O_m x O_n orbit is named by a multiset of blocks.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InconsistencyError
from .families import M_INT, BlockSpec
from .gaussian import ONE, ZERO, GaussianRational
from .invariants import inv_D, inv_H, inv_LMN
from .matrix import ExactMatrix, char_poly, matrix_rank, poly_eval_matrix
from .poly import (UniPoly, factor_quartic_in_s, gaussian_roots, gaussian_sqrt,
                   poly_gcd, squarefree_decomposition)
from .states import PureState4

__all__ = [
    "RTilde",
    "JordanProfile",
    "NonzeroFactor",
    "OrbitLabel",
    "r_matrix",
    "r_tilde",
    "is_nilpotent",
    "is_semisimple",
    "jordan_profile",
    "jordan_profile_of",
    "orthogonal_orbit_label",
    "rational_orthogonal",
    "word_rank_signature",
    "decode_nilpotent_signature",
]

_HALF = ONE / 2


def r_matrix(psi: PureState4) -> ExactMatrix:
    """R = M psi~ M^dagger / 2."""
    flat = ExactMatrix(4, 4, psi.amplitudes)
    return (M_INT @ flat @ M_INT.H).scale(_HALF)


@dataclass(frozen=True)
class RTilde:
    matrix: ExactMatrix

    @classmethod
    def from_r(cls, r: ExactMatrix) -> "RTilde":
        n = r.rows
        rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                rows[i][n + j] = r[i, j]
                rows[n + j][i] = -r[i, j]
        return cls(ExactMatrix.from_rows(rows))


def r_tilde(psi: PureState4) -> RTilde:
    return RTilde.from_r(r_matrix(psi))


def is_nilpotent(psi: PureState4) -> bool:
    """H = L = M = D = 0, cross-checked against R~^8 = 0."""
    L, M, _ = inv_LMN(psi)
    by_invariants = inv_H(psi).is_zero() and L.is_zero() and M.is_zero() and inv_D(psi).is_zero()
    rt = r_tilde(psi).matrix
    by_power = (rt ** 8).is_zero()
    if by_invariants != by_power:
        raise InconsistencyError("nilpotency by invariants disagrees with R~^8")
    return by_invariants


def _squarefree_part(p: UniPoly) -> UniPoly:
    return p.exact_div(poly_gcd(p, p.derivative()))


def is_semisimple(psi: PureState4) -> bool:
    """The squarefree part of the characteristic polynomial annihilates R~."""
    rt = r_tilde(psi).matrix
    return poly_eval_matrix(_squarefree_part(char_poly(rt)), rt).is_zero()


# --- Jordan profiles ---------------------------------------------------------

def _partition_from_counts(c: Sequence[int]) -> tuple[int, ...]:
    """Block sizes from c_k = sum_b min(k, b), k = 1, 2, ... (c_0 = 0)."""
    c = [0] + list(c)
    at_least = [c[k] - c[k - 1] for k in range(1, len(c))] + [0]
    sizes = []
    for k in range(1, len(at_least)):
        exactly = at_least[k - 1] - at_least[k]
        if exactly < 0:
            raise InconsistencyError(f"kernel dimensions {c[1:]} are not a Jordan signature")
        sizes.extend([k] * exactly)
    return tuple(sorted(sizes, reverse=True))


def _nilpotent_blocks(mat: ExactMatrix) -> tuple[int, ...]:
    """Sizes of Jordan blocks at eigenvalue 0 from ranks of powers."""
    n = mat.rows
    ranks = [n]
    power = ExactMatrix.identity(n)
    while True:
        power = power @ mat
        ranks.append(matrix_rank(power))
        if ranks[-1] == ranks[-2]:
            break
    kernel = [n - r for r in ranks[1:]]
    return _partition_from_counts(kernel)


@dataclass(frozen=True)
class NonzeroFactor:
    """An irreducible factor f(s) of the nonzero spectrum of R~ (s = t^2).

    kernel_dims[k] = dim ker f(R~^2)^(k+1).
    """

    factor: UniPoly
    multiplicity: int
    kernel_dims: tuple[int, ...]

    @property
    def per_root_blocks(self) -> tuple[int, ...]:
        """Jordan block sizes of R~ at each of the 2 deg f roots of f(t^2)."""
        width = 2 * self.factor.degree
        if any(d % width for d in self.kernel_dims):
            raise InconsistencyError("kernel dimensions are not uniform over the roots")
        return _partition_from_counts([d // width for d in self.kernel_dims])

    def to_json(self) -> dict:
        return {
            "factor": self.factor.to_str("s"),
            "multiplicity": self.multiplicity,
            "kernel_dims": list(self.kernel_dims),
            "blocks_per_root": list(self.per_root_blocks),
        }


@dataclass(frozen=True)
class JordanProfile:
    zero_blocks: tuple[int, ...]
    nonzero_part: tuple[NonzeroFactor, ...]

    @property
    def dimension(self) -> int:
        return sum(self.zero_blocks) + sum(
            2 * f.factor.degree * f.multiplicity for f in self.nonzero_part)

    def shape(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        """Eigenvalue-free summary: zero blocks and the block partition at each
        root s of the nonzero spectrum (one entry per root, each standing for
        the pair +-sqrt(s))."""
        parts = []
        for f in self.nonzero_part:
            parts.extend([f.per_root_blocks] * f.factor.degree)
        return (self.zero_blocks, tuple(sorted(parts)))

    def describe(self) -> str:
        items = [f"J{b}(0)" if b > 1 else "0" for b in self.zero_blocks]
        for f in self.nonzero_part:
            for b in f.per_root_blocks:
                tag = f"+-sqrt(roots of {f.factor.to_str('s')})"
                items.append(f"J{b}({tag})" if b > 1 else tag)
        return ", ".join(items) if items else "(empty)"

    def to_json(self) -> dict:
        return {
            "zero_blocks": list(self.zero_blocks),
            "nonzero_part": [f.to_json() for f in self.nonzero_part],
        }


def jordan_profile_of(mat: ExactMatrix) -> JordanProfile:
    """Jordan data of a matrix whose characteristic polynomial is even."""
    n = mat.rows
    cp = char_poly(mat)
    order = cp.valuation()
    zero_blocks = _nilpotent_blocks(mat) if order else ()
    if sum(zero_blocks) != order:
        raise InconsistencyError("zero-eigenvalue blocks do not match the characteristic polynomial")
    rest = cp.exact_div(UniPoly.monomial(order))
    p_s = rest.even_part_in_s()
    sq = mat @ mat
    factors = []
    if p_s.degree > 4:
        raise InconsistencyError("nonzero spectrum too large for the quartic factorizer")
    for f, mult in factor_quartic_in_s(p_s) if p_s.degree > 0 else []:
        y = poly_eval_matrix(f, sq)
        dims = []
        power = ExactMatrix.identity(n)
        for _ in range(mult):
            power = power @ y
            dims.append(n - matrix_rank(power))
        factors.append(NonzeroFactor(f, mult, tuple(dims)))
    factors.sort(key=lambda x: (x.factor.sort_key(), x.multiplicity))
    profile = JordanProfile(zero_blocks, tuple(factors))
    if profile.dimension != n:
        raise InconsistencyError("Jordan profile does not account for the full dimension")
    for f in factors:
        f.per_root_blocks  # validates uniformity
    return profile


def jordan_profile(psi: PureState4) -> JordanProfile:
    return jordan_profile_of(r_tilde(psi).matrix)


# --- orthogonal orbit labels -------------------------------------------------

@dataclass(frozen=True)
class OrbitLabel:
    """Canonical (sorted) block multiset of an O_m x O_n orbit."""

    rows: int
    cols: int
    blocks: tuple[BlockSpec, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.blocks, key=BlockSpec.sort_key))
        object.__setattr__(self, "blocks", ordered)
        r = sum(b.shape[0] for b in ordered)
        c = sum(b.shape[1] for b in ordered)
        if (r, c) != (self.rows, self.cols):
            raise InconsistencyError(f"blocks cover {r}x{c}, expected {self.rows}x{self.cols}")

    def __str__(self):
        return "{" + ", ".join(str(b) for b in self.blocks) + "}"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "blocks": [b.to_json() for b in self.blocks]}


def word_rank_signature(a: ExactMatrix, length: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Ranks of alternating words in A and A^T.

    Returns (ranks of A, A^T A, A A^T A, (A^T A)^2, ...) and
    (ranks of A^T, A A^T, A^T A A^T, ...), both starting with the empty
    word (identity on the respective side).
    """
    m, n = a.rows, a.cols
    if length is None:
        length = 2 * min(m, n) + 1
    at = a.T
    x = at @ a
    y = a @ at
    from_cols = [n]
    from_rows = [m]
    px = ExactMatrix.identity(n)
    py = ExactMatrix.identity(m)
    for j in range(1, length + 1):
        if j % 2:
            from_cols.append(matrix_rank(a @ px) if n and m else 0)
            from_rows.append(matrix_rank(at @ py) if n and m else 0)
        else:
            px = px @ x
            py = py @ y
            from_cols.append(matrix_rank(px) if n else 0)
            from_rows.append(matrix_rank(py) if m else 0)
    return tuple(from_cols), tuple(from_rows)


def decode_nilpotent_signature(from_cols: Sequence[int], from_rows: Sequence[int]) -> list[BlockSpec]:
    """Nilpotent blocks from alternating word ranks.

    Basis strings x1 -> x2 -> ... alternate between the column space (V1)
    and the row space (V2). The rank of the length-j word starting at V1
    counts V1 string elements with at least j successors, which determines
    the number of strings of each length ending at each vertex. Odd strings
    ending in V1 are wide blocks, odd strings ending in V2 are tall blocks,
    and even strings pair up into nilpotent symmetrized blocks.
    """
    a = list(from_cols) + [0, 0]
    b = list(from_rows) + [0, 0]
    top = len(a) - 2

    def exactly(ranks, e):
        return ranks[e] - ranks[e + 1]

    # ending[X][e] = number of strings ending at X with length > e
    end_v1 = [exactly(a, e) if e % 2 == 0 else exactly(b, e) for e in range(top + 1)] + [0]
    end_v2 = [exactly(b, e) if e % 2 == 0 else exactly(a, e) for e in range(top + 1)] + [0]
    blocks: list[BlockSpec] = []
    for length in range(1, top + 2):
        n1 = end_v1[length - 1] - end_v1[length]
        n2 = end_v2[length - 1] - end_v2[length]
        if n1 < 0 or n2 < 0:
            raise InconsistencyError("word ranks are not a string signature")
        k = length // 2
        if length % 2:
            blocks.extend([BlockSpec("wide", k)] * n1)
            blocks.extend([BlockSpec("tall", k)] * n2)
        else:
            if n1 != n2:
                raise InconsistencyError("unpaired even strings: not an orthogonal representation")
            blocks.extend([BlockSpec("sym", length, ZERO)] * n1)
    return blocks


def orthogonal_orbit_label(a: ExactMatrix) -> OrbitLabel:
    """Canonical block multiset of the O_m x O_n orbit of A."""
    m, n = a.rows, a.cols
    x = a.T @ a
    blocks: list[BlockSpec] = []
    invertible_dim = 0
    if n:
        cp = char_poly(x)
        order = cp.valuation()
        q = cp.exact_div(UniPoly.monomial(order))
        for f, mult in _factor_nonzero(q):
            y = poly_eval_matrix(f, x)
            dims = []
            power = ExactMatrix.identity(n)
            for _ in range(mult):
                power = power @ y
                dims.append(n - matrix_rank(power))
            if any(d % f.degree for d in dims):
                raise InconsistencyError("non-uniform Jordan structure over an unsplit factor")
            sizes = _partition_from_counts([d // f.degree for d in dims])
            invertible_dim += f.degree * mult
            if f.degree == 1:
                alpha = gaussian_sqrt(-f.coeff(0))
                for s in sizes:
                    if alpha is not None:
                        blocks.append(BlockSpec("sym", s, alpha))
                    else:
                        blocks.append(BlockSpec("sym", s, None, f))
            else:
                for s in sizes:
                    blocks.extend([BlockSpec("sym", s, None, f)] * f.degree)
    from_cols, from_rows = word_rank_signature(a)
    nil_cols = [from_cols[0] - invertible_dim] + [r - invertible_dim for r in from_cols[1:]]
    nil_rows = [from_rows[0] - invertible_dim] + [r - invertible_dim for r in from_rows[1:]]
    if min(nil_cols + nil_rows) < 0:
        raise InconsistencyError("invertible part larger than a word rank")
    blocks.extend(decode_nilpotent_signature(nil_cols, nil_rows))
    return OrbitLabel(m, n, tuple(blocks))


def _factor_nonzero(q: UniPoly) -> list[tuple[UniPoly, int]]:
    """Factor q (q(0) != 0) as far as Gaussian-rational roots and quadratic
    splitting of quartics allow."""
    out = []
    if q.degree <= 0:
        return out
    for g, mult in squarefree_decomposition(q):
        if g.degree <= 4:
            out.extend((f, mult) for f, _ in factor_quartic_in_s(g))
            continue
        rest = g
        for r in gaussian_roots(g):
            lin = UniPoly([-r, 1])
            out.append((lin, mult))
            rest = rest.exact_div(lin)
        if rest.degree > 0:
            if rest.degree <= 4:
                out.extend((f, mult) for f, _ in factor_quartic_in_s(rest))
            else:
                out.append((rest, mult))
    return out


# --- random orthogonal matrices ----------------------------------------------

def rational_orthogonal(n: int, seed) -> ExactMatrix:
    """X with X^T X = I via the Cayley transform (I - S)(I + S)^-1 of a
    random skew-symmetric S, composed with random sign flips."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    eye = ExactMatrix.identity(n)
    while True:
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.6:
                    v = GaussianRational(Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
                                         Fraction(rng.randint(-1, 1), rng.randint(1, 2)))
                    rows[i][j] = v
                    rows[j][i] = -v
        s = ExactMatrix.from_rows(rows)
        try:
            inv = (eye + s).inverse()
        except ZeroDivisionError:
            continue
        x = (eye - s) @ inv
        signs = ExactMatrix.diag([ONE if rng.random() < 0.5 else -ONE for _ in range(n)])
        return signs @ x
