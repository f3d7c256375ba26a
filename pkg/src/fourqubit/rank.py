"""Tensor rank of 3- and 4-qubit states.

Both algorithms follow a fixed sequence of exact tests; the returned
RankResult records which step fired and the data that made it fire.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .gaussian import GaussianRational
from .invariants import inv_LMN
from .matrix import ExactMatrix, determinant, matrix_rank
from .spectral import is_nilpotent
from .states import PureState3, PureState4, flattening

__all__ = [
    "RankResult",
    "hyperdet3",
    "rank3",
    "rank4",
    "in_closure_S2",
    "in_closure_S3",
    "first_nonzero_minor",
    "qubit_ranks",
]

RANK3_STEPS = {
    1: "hyperdeterminant nonzero: return 2",
    3: "r_k = 1 for at least two k: return 1",
    4: "some r_k = 1: return 2",
    5: "return 3",
}
RANK4_STEPS = {
    1: "L or M nonzero: return 4",
    2: "a 3x3 minor of a flattening is nonzero: return 3",
    4: "single-qubit factorization: return rank of the 3-qubit factor",
    5: "all r_k = 2 and nilpotent: return 4",
    6: "return 2",
}


@dataclass(frozen=True)
class RankResult:
    rank: int
    step: int
    description: str
    witness: dict = field(default_factory=dict)
    sub: "RankResult | None" = None

    def to_json(self) -> dict:
        out = {"rank": self.rank, "step": self.step, "description": self.description,
               "witness": self.witness}
        if self.sub is not None:
            out["factor_rank"] = self.sub.to_json()
        return out


def hyperdet3(phi: PureState3) -> GaussianRational:
    """(tr A tr B - tr AB)^2 - 4 det A det B with A = [phi_0jk], B = [phi_1jk]."""
    a = phi.amplitudes
    a00, a01, a10, a11 = a[0], a[1], a[2], a[3]
    b00, b01, b10, b11 = a[4], a[5], a[6], a[7]
    tr_a = a00 + a11
    tr_b = b00 + b11
    tr_ab = a00 * b00 + a01 * b10 + a10 * b01 + a11 * b11
    det_a = a00 * a11 - a01 * a10
    det_b = b00 * b11 - b01 * b10
    x = tr_a * tr_b - tr_ab
    return x * x - 4 * det_a * det_b


def qubit_ranks(psi) -> tuple[int, ...]:
    """r_k = rank of the single-qubit flattening, k = 1..n."""
    return tuple(matrix_rank(flattening(psi, f"qubit{k}")) for k in range(1, psi.nqubits + 1))


def rank3(phi: PureState3) -> RankResult:
    if not isinstance(phi, PureState3):
        raise TypeError("rank3 needs a 3-qubit state")
    h = hyperdet3(phi)
    if not h.is_zero():
        return RankResult(2, 1, RANK3_STEPS[1], {"hyperdeterminant": str(h)})
    r = qubit_ranks(phi)
    witness = {"qubit_ranks": list(r)}
    ones = [k + 1 for k, x in enumerate(r) if x == 1]
    if len(ones) >= 2:
        return RankResult(1, 3, RANK3_STEPS[3], {**witness, "rank_one_qubits": ones})
    if ones:
        return RankResult(2, 4, RANK3_STEPS[4], {**witness, "rank_one_qubits": ones})
    return RankResult(3, 5, RANK3_STEPS[5], witness)


_FLATTENINGS = ("primary", "cyclic1", "cyclic2")


def first_nonzero_minor(psi: PureState4):
    """(flattening, rows, cols, value) of the first nonzero 3x3 minor, or None."""
    for kind in _FLATTENINGS:
        f = flattening(psi, kind)
        if matrix_rank(f) < 3:
            continue
        for rows in combinations(range(4), 3):
            for cols in combinations(range(4), 3):
                v = determinant(f.submatrix(rows, cols))
                if not v.is_zero():
                    return kind, rows, cols, v
    return None


def in_closure_S2(psi: PureState4) -> bool:
    """All 48 3x3 minors of the three 4x4 flattenings vanish."""
    return first_nonzero_minor(psi) is None


def in_closure_S3(psi: PureState4) -> bool:
    L, M, _ = inv_LMN(psi)
    return L.is_zero() and M.is_zero()


def _factor_out(psi: PureState4, k: int) -> PureState3:
    """The 3-qubit factor phi when the qubit-k flattening has rank 1."""
    f = flattening(psi, f"qubit{k}")
    row = f.row(0) if any(not x.is_zero() for x in f.row(0)) else f.row(1)
    return PureState3(row)


def rank4(psi: PureState4) -> RankResult:
    if not isinstance(psi, PureState4):
        raise TypeError("rank4 needs a 4-qubit state")
    L, M, _ = inv_LMN(psi)
    if not (L.is_zero() and M.is_zero()):
        return RankResult(4, 1, RANK4_STEPS[1], {"L": str(L), "M": str(M)})
    minor = first_nonzero_minor(psi)
    if minor is not None:
        kind, rows, cols, v = minor
        return RankResult(3, 2, RANK4_STEPS[2], {
            "flattening": kind, "rows": list(rows), "cols": list(cols), "minor": str(v)})
    r = qubit_ranks(psi)
    witness = {"qubit_ranks": list(r)}
    for k, rk in enumerate(r, start=1):
        if rk == 1:
            phi = _factor_out(psi, k)
            sub = rank3(phi)
            return RankResult(sub.rank, 4, RANK4_STEPS[4],
                              {**witness, "factored_qubit": k, "factor": phi.to_ket()}, sub)
    if is_nilpotent(psi):
        return RankResult(4, 5, RANK4_STEPS[5], {**witness, "nilpotent": True})
    return RankResult(2, 6, RANK4_STEPS[6], {**witness, "nilpotent": False})
