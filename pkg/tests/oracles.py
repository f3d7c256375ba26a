"""Deliberately naive reference computations, independent of the package's
fraction-free elimination and Berkowitz code."""

from itertools import product

from fourqubit.gaussian import ONE, ZERO


def echelon_rank(rows):
    """Rank by textbook Gaussian elimination with field division."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    rank = 0
    ncols = len(m[0])
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if not m[r][c].is_zero()), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = ONE / m[rank][c]
        for r in range(len(m)):
            if r != rank and not m[r][c].is_zero():
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def laplace_det(rows):
    """Cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    acc = ZERO
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * laplace_det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def kron_apply(ops, amps, n):
    """Amplitudes of (A1 x ... x An) psi by summing over all index pairs."""
    out = []
    for out_bits in product((0, 1), repeat=n):
        acc = ZERO
        for in_bits in product((0, 1), repeat=n):
            c = ONE
            for op, i, j in zip(ops, out_bits, in_bits):
                c = c * op[i, j]
                if c.is_zero():
                    break
            if not c.is_zero():
                acc = acc + c * amps[int("".join(map(str, in_bits)), 2)]
        out.append(acc)
    return out
