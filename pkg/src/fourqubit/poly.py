"""Univariate polynomials over the Gaussian rationals.

Includes the squarefree/factoring helpers needed for spectra of 8x8
skew-symmetric matrices: gcd, Yun decomposition, square roots in the
field, Gaussian-rational root extraction and the degree-4 splitting.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, Sequence

import mpmath

from .gaussian import ONE, ZERO, GaussianRational, as_gr

__all__ = [
    "UniPoly",
    "poly_gcd",
    "squarefree_decomposition",
    "gaussian_sqrt",
    "gaussian_roots",
    "factor_quartic_in_s",
]


class UniPoly:
    """Polynomial with coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_gr(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([ZERO] * k + [as_gr(c)])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_gr(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        inv = self.lc().inverse()
        return UniPoly([c * inv for c in self.coeffs])

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) + (-self)

    def __mul__(self, other):
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.lc().inverse()
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            f = c * inv
            quot[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == _poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        x = as_gr(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def compose_square(self) -> "UniPoly":
        """p(t^2) as a polynomial in t."""
        out = []
        for c in self.coeffs:
            out.extend([c, ZERO])
        return UniPoly(out)

    def even_part_in_s(self) -> "UniPoly":
        """For an even polynomial p(t) return q with q(t^2) = p(t)."""
        if any(not c.is_zero() for c in self.coeffs[1::2]):
            raise ValueError("polynomial is not even")
        return UniPoly(self.coeffs[0::2])

    def valuation(self) -> int:
        """Multiplicity of 0 as a root."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        raise ValueError("zero polynomial")

    def sort_key(self):
        return (self.degree, tuple(c.sort_key() for c in reversed(self.coeffs)))

    def to_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            cs = str(c)
            if not c.is_real() and not c.re == 0:
                cs = f"({cs})"
            if mono and c == ONE:
                term = mono
            elif mono and c == -ONE:
                term = "-" + mono
            elif mono:
                term = f"{cs}*{mono}"
            else:
                term = cs
            terms.append(term)
        out = terms[0]
        for term in terms[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({self.to_str()!r})"


def _poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly([as_gr(x)])


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: [(g_j, j)] with p = prod g_j^j, g_j squarefree, coprime.

    Only nonconstant factors are returned, sorted by multiplicity.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    j = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        if g.degree > 0:
            out.append((g, j))
        j += 1
    return out


# --- square roots and roots in Q(i) -----------------------------------------


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(x) -> GaussianRational | None:
    """Square root in Q(i) if it exists, with re > 0, or re = 0 and im >= 0."""
    x = as_gr(x)
    if x.is_zero():
        return ZERO
    a, b = x.re, x.im
    # y = u + vi with u^2 - v^2 = a, 2uv = b; u^2 = (a + |x|)/2
    modulus = _rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    u = _rational_sqrt((a + modulus) / 2)
    if u is None:
        return None
    if u == 0:
        v = _rational_sqrt((modulus - a) / 2)
        if v is None:
            return None
        y = GaussianRational(0, v)
    else:
        y = GaussianRational(u, b / (2 * u))
    if y * y != x:
        return None
    return y


def _to_mpc(z: GaussianRational) -> mpmath.mpc:
    a, b, d = z.parts
    return mpmath.mpc(mpmath.mpf(a) / d, mpmath.mpf(b) / d)


def _candidate_roots(p: UniPoly) -> list[GaussianRational]:
    """Numerical root approximations snapped to nearby Gaussian rationals.

    Candidates are proposals only; callers verify them exactly.
    """
    scale = lcm(*(c.parts[2] for c in p.coeffs))
    ints = [c * scale for c in p.coeffs]
    lead = ints[-1]
    # for a root r in Q(i) of a Z[i]-polynomial, lead * r lies in Z[i]
    size = max(len(str(abs(x.parts[0]) + abs(x.parts[1]))) for x in ints)
    digits = 30 + 4 * size * len(ints)
    out = []
    with mpmath.workdps(digits):
        try:
            roots = mpmath.polyroots([_to_mpc(c) for c in reversed(ints)],
                                     maxsteps=500, extraprec=2 * digits)
        except mpmath.libmp.NoConvergence:
            return []
        lead_mp = _to_mpc(lead)
        for z in roots:
            w = lead_mp * z
            snapped = GaussianRational(int(mpmath.nint(w.real)), int(mpmath.nint(w.imag)))
            out.append(snapped / lead)
    return out


def gaussian_roots(p: UniPoly) -> list[GaussianRational]:
    """All distinct roots of p lying in Q(i), sorted canonically.

    Roots are proposed numerically and accepted only after exact
    verification, so the result is exact.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    p = p.monic()
    if p.degree <= 0:
        return []
    roots: set[GaussianRational] = set()
    if p.coeff(0).is_zero():
        roots.add(ZERO)
    for g, _ in squarefree_decomposition(p):
        if g.degree == 1:
            roots.add(-g.coeff(0))
            continue
        if g.degree == 2:
            roots.update(_quadratic_roots(g))
            continue
        for r in _candidate_roots(g):
            if g(r).is_zero():
                roots.add(r)
    return sorted(roots, key=lambda z: z.sort_key())


def _quadratic_roots(g: UniPoly) -> list[GaussianRational]:
    b, c = g.coeff(1), g.coeff(0)
    disc = b * b - 4 * c
    sq = gaussian_sqrt(disc)
    if sq is None:
        return []
    return [(-b + sq) / 2, (-b - sq) / 2]


def _split_rootless_quartic(f: UniPoly) -> list[UniPoly] | None:
    """Split a monic squarefree quartic without roots in Q(i) into two quadratics.

    Uses the resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2)
    of x^4 + a x^3 + b x^2 + c x + d: any factorization
    (x^2 + p x + q)(x^2 + r x + s) has y = q + s as a resolvent root.
    """
    d, c, b, a = f.coeffs[0], f.coeffs[1], f.coeffs[2], f.coeffs[3]
    resolvent = UniPoly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])
    for y in gaussian_roots(resolvent):
        # p + r = a, p r = b - y ; q + s = y, q s = d
        sp = gaussian_sqrt(a * a - 4 * (b - y))
        sq = gaussian_sqrt(y * y - 4 * d)
        if sp is None or sq is None:
            continue
        ps = [((a + sp) / 2, (a - sp) / 2)]
        qs = [((y + sq) / 2, (y - sq) / 2), ((y - sq) / 2, (y + sq) / 2)]
        for p1, p2 in ps:
            for q1, q2 in qs:
                g1 = UniPoly([q1, p1, 1])
                g2 = UniPoly([q2, p2, 1])
                if g1 * g2 == f:
                    return sorted([g1, g2], key=UniPoly.sort_key)
    return None


def _factor_squarefree(g: UniPoly) -> list[UniPoly]:
    """Irreducible factors over Q(i) of a monic squarefree g with deg <= 4."""
    roots = gaussian_roots(g)
    factors = [UniPoly([-r, 1]) for r in roots]
    rest = g
    for lin in factors:
        rest = rest.exact_div(lin)
    if rest.degree == 4:
        split = _split_rootless_quartic(rest)
        if split is not None:
            factors.extend(split)
            rest = UniPoly([1])
    if rest.degree > 0:
        # degree 2 or 3 without roots in the field, or a quartic that does
        # not split into quadratics: irreducible
        factors.append(rest)
    return factors


def factor_quartic_in_s(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Factor a monic polynomial of degree <= 4 into irreducibles over Q(i).

    Returns (factor, multiplicity) pairs sorted by (multiplicity, factor).
    """
    if p.degree > 4:
        raise ValueError(f"degree {p.degree} exceeds 4")
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out = []
    for g, mult in squarefree_decomposition(p.monic()):
        for f in _factor_squarefree(g):
            out.append((f, mult))
    out.sort(key=lambda fm: (fm[1], fm[0].sort_key()))
    return out
