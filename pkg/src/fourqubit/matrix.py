"""Dense exact matrices over the Gaussian rationals.

Rank and determinant use fraction-free (Bareiss) elimination on rows
scaled to Gaussian integers; the characteristic polynomial uses the
division-free Berkowitz recursion.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from .gaussian import ONE, ZERO, GaussianRational, as_gr
from .poly import UniPoly

__all__ = [
    "ExactMatrix",
    "matrix_rank",
    "determinant",
    "char_poly",
    "poly_eval_matrix",
]


class ExactMatrix:
    """Immutable rows x cols matrix with row-major GaussianRational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        ents = tuple(as_gr(e) for e in entries)
        if len(ents) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ents)}")
        self.rows = rows
        self.cols = cols
        self.entries = ents

    @classmethod
    def _wrap(cls, rows: int, cols: int, ents: list) -> "ExactMatrix":
        m = object.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, tuple(ents)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls._wrap(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._wrap(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        vals = [as_gr(v) for v in values]
        return cls._wrap(n, n, [vals[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def block_diag(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        ents = [ZERO] * (rows * cols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    ents[(r0 + i) * cols + c0 + j] = b.entries[i * b.cols + j]
            r0 += b.rows
            c0 += b.cols
        return cls._wrap(rows, cols, ents)

    # --- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix._wrap(len(rows), len(cols),
                                 [self.entries[i * self.cols + j] for i in rows for j in cols])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    # --- algebra -----------------------------------------------------------
    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.cols, self.rows,
                                 [self.entries[i * self.cols + j]
                                  for j in range(self.cols) for i in range(self.rows)])

    def conj(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.rows, self.cols, [e.conjugate() for e in self.entries])

    @property
    def H(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return self.conj().T

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix._wrap(self.rows, self.cols,
                                 [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix._wrap(self.rows, self.cols,
                                 [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "ExactMatrix":
        c = as_gr(c)
        return ExactMatrix._wrap(self.rows, self.cols, [c * a for a in self.entries])

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            nz = [(k, x) for k, x in enumerate(arow) if not x.is_zero()]
            for j in range(p):
                acc = ZERO
                for k, x in nz:
                    y = b[k * p + j]
                    if not y.is_zero():
                        acc = acc + x * y
                out.append(acc)
        return ExactMatrix._wrap(n, p, out)

    def __pow__(self, k: int) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def _check_same(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    # --- derived quantities -----------------------------------------------
    def rank(self) -> int:
        return matrix_rank(self)

    def det(self) -> GaussianRational:
        return determinant(self)

    def inverse(self) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not aug[r][c].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = aug[c][c].inverse()
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and not aug[r][c].is_zero():
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return ExactMatrix.from_rows([row[n:] for row in aug])

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


# --- Gaussian integer kernels ------------------------------------------------

def _integer_rows(m: ExactMatrix) -> tuple[list[list[tuple[int, int]]], list[int]]:
    """Scale each row to Gaussian integers; returns rows and the row scales."""
    rows, scales = [], []
    for i in range(m.rows):
        row = m.row(i)
        s = lcm(*(e.parts[2] for e in row)) if row else 1
        rows.append([(e.parts[0] * (s // e.parts[2]), e.parts[1] * (s // e.parts[2])) for e in row])
        scales.append(s)
    return rows, scales


def _bareiss(rows: list[list[tuple[int, int]]], ncols: int) -> tuple[int, int, tuple[int, int]]:
    """Fraction-free echelon in place. Returns (rank, sign, last pivot)."""
    nrows = len(rows)
    prev = (1, 0)
    r = 0
    sign = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != (0, 0)), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr, pi = rows[r][c]
        qr, qi = prev
        qn = qr * qr + qi * qi
        top = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            xr, xi = row[c]
            for j in range(c + 1, ncols):
                ar, ai = row[j]
                br, bi = top[j]
                # (p * a - x * b) / prev
                nr = pr * ar - pi * ai - (xr * br - xi * bi)
                ni = pr * ai + pi * ar - (xr * bi + xi * br)
                if qn != 1:
                    nr, ni = (nr * qr + ni * qi) // qn, (ni * qr - nr * qi) // qn
                elif (qr, qi) != (1, 0):
                    nr, ni = nr * qr + ni * qi, ni * qr - nr * qi
                row[j] = (nr, ni)
            row[c] = (0, 0)
        prev = (pr, pi)
        r += 1
        if r == nrows:
            break
    return r, sign, prev


def matrix_rank(m: ExactMatrix) -> int:
    """Exact rank over Q(i)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rows, _ = _integer_rows(m)
    rank, _, _ = _bareiss(rows, m.cols)
    return rank


def determinant(m: ExactMatrix) -> GaussianRational:
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    rows, scales = _integer_rows(m)
    rank, sign, (pr, pi) = _bareiss(rows, n)
    if rank < n:
        return ZERO
    denom = 1
    for s in scales:
        denom *= s
    return GaussianRational._raw(sign * pr, sign * pi, denom)


def char_poly(m: ExactMatrix) -> UniPoly:
    """det(tI - m) by the Berkowitz recursion (no divisions)."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    a = m.entries
    v = [ONE]  # coefficients, highest degree first
    for r in range(n):
        row_r = [a[r * n + j] for j in range(r)]
        col = [a[i * n + r] for i in range(r)]
        q = [ONE, -a[r * n + r]]
        w = col
        for _ in range(r):
            q.append(-_dot(row_r, w))
            w = [_dot([a[i * n + j] for j in range(r)], w) for i in range(r)]
        # Toeplitz product: new[i] = sum_j q[i - j] v[j]
        new = []
        for i in range(r + 2):
            acc = ZERO
            for j in range(max(0, i - len(q) + 1), min(i, len(v) - 1) + 1):
                acc = acc + q[i - j] * v[j]
            new.append(acc)
        v = new
    return UniPoly(list(reversed(v)))


def _dot(xs, ys) -> GaussianRational:
    acc = ZERO
    for x, y in zip(xs, ys):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc


def poly_eval_matrix(p: UniPoly, m: ExactMatrix) -> ExactMatrix:
    """p(m) by Horner's scheme."""
    if not m.is_square():
        raise ValueError("polynomial of a non-square matrix")
    n = m.rows
    acc = ExactMatrix.zeros(n)
    eye = ExactMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ m + eye.scale(c)
    return acc
