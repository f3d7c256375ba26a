"""Pure 3- and 4-qubit states with exact amplitudes.

Amplitudes are stored in lexicographic order of the basis kets, so the
amplitude of |ijkl> sits at index 8i + 4j + 2k + l.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .gaussian import ONE, ZERO, GaussianRational, as_gr, parse_scalar
from .matrix import ExactMatrix

__all__ = [
    "PureState",
    "PureState4",
    "PureState3",
    "QubitPermutation",
    "ALL_PERMUTATIONS",
    "parse_ket",
    "parse_state",
    "flattening",
    "permute_qubits",
    "apply_local",
    "random_sl2_local",
    "random_state",
    "random_scalar",
    "product_state",
    "random_product_sum",
    "cyclic_reindex",
]


class PureState:
    """A nonzero vector of 2**n exact amplitudes."""

    nqubits: int = 0
    __slots__ = ("amplitudes",)

    def __init__(self, amplitudes: Iterable):
        amps = tuple(as_gr(a) for a in amplitudes)
        if len(amps) != 2 ** self.nqubits:
            raise ValueError(f"expected {2 ** self.nqubits} amplitudes, got {len(amps)}")
        if all(a.is_zero() for a in amps):
            raise ValueError("zero state: a pure state must be a nonzero vector")
        self.amplitudes = amps

    @classmethod
    def from_dict(cls, amps: Mapping[str, object]) -> "PureState":
        vec = [ZERO] * (2 ** cls.nqubits)
        for bits, value in amps.items():
            if len(bits) != cls.nqubits or set(bits) - {"0", "1"}:
                raise ValueError(f"bad basis label {bits!r}")
            vec[int(bits, 2)] = vec[int(bits, 2)] + as_gr(value)
        return cls(vec)

    @classmethod
    def basis(cls, bits: str) -> "PureState":
        return cls.from_dict({bits: 1})

    def __getitem__(self, key) -> GaussianRational:
        if isinstance(key, str):
            return self.amplitudes[int(key, 2)]
        if isinstance(key, tuple):
            idx = 0
            for b in key:
                idx = 2 * idx + b
            return self.amplitudes[idx]
        return self.amplitudes[key]

    def items(self):
        """(bit string, amplitude) for the nonzero amplitudes."""
        for idx, a in enumerate(self.amplitudes):
            if not a.is_zero():
                yield format(idx, f"0{self.nqubits}b"), a

    def scale(self, c) -> "PureState":
        c = as_gr(c)
        return type(self)([c * a for a in self.amplitudes])

    def __add__(self, other: "PureState") -> "PureState":
        if type(self) is not type(other):
            return NotImplemented
        return type(self)([a + b for a, b in zip(self.amplitudes, other.amplitudes)])

    def __sub__(self, other: "PureState") -> "PureState":
        if type(self) is not type(other):
            return NotImplemented
        return type(self)([a - b for a, b in zip(self.amplitudes, other.amplitudes)])

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return type(self) is type(other) and self.amplitudes == other.amplitudes

    def __hash__(self):
        return hash((self.nqubits, self.amplitudes))

    def to_ket(self) -> str:
        out = []
        for bits, a in self.items():
            neg = (a.im == 0 and a.re < 0) or (a.re == 0 and a.im < 0)
            mag = -a if neg else a
            coef = str(mag)
            if mag.re != 0 and mag.im != 0:
                coef = f"({coef})"
            term = f"{coef}|{bits}>"
            if not out:
                out.append(("-" if neg else "") + term)
            else:
                out.append((" - " if neg else " + ") + term)
        return "".join(out)

    def to_json(self) -> dict:
        return {"qubits": self.nqubits,
                "amplitudes": {bits: str(a) for bits, a in self.items()}}

    def __str__(self):
        return self.to_ket()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_ket()!r})"


class PureState4(PureState):
    nqubits = 4
    __slots__ = ()


class PureState3(PureState):
    nqubits = 3
    __slots__ = ()


_STATE_TYPES = {3: PureState3, 4: PureState4}


# --- ket expressions ---------------------------------------------------------

_SIMPLE = r"(?:\d+(?:/\d+)?i?|i)"
_TERM_RE = re.compile(
    rf"(?P<sign>[+-]?)(?:\((?P<paren>[^()]*)\)|(?P<simple>{_SIMPLE}))?\|(?P<bits>[01]+)>"
)


def parse_ket(text: str) -> PureState:
    """Parse a sum of terms ``coef|bits>``.

    Coefficients use the scalar text format; one with both a real and an
    imaginary part must be parenthesized, e.g. ``(1+i)|0000> - 1/2|1111>``.
    A missing coefficient means 1.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty ket expression")
    pos = 0
    terms = []
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or (pos > 0 and not m.group("sign")):
            raise ValueError(f"malformed ket expression near {s[pos:pos + 20]!r}")
        coef_txt = m.group("paren") if m.group("paren") is not None else (m.group("simple") or "1")
        coef = parse_scalar(coef_txt)
        if m.group("sign") == "-":
            coef = -coef
        terms.append((m.group("bits"), coef))
        pos = m.end()
    lengths = {len(bits) for bits, _ in terms}
    if len(lengths) != 1:
        raise ValueError("mixed ket lengths")
    n = lengths.pop()
    if n not in _STATE_TYPES:
        raise ValueError(f"kets of length {n} are not supported (use 3 or 4)")
    cls = _STATE_TYPES[n]
    vec = [ZERO] * (2 ** n)
    for bits, coef in terms:
        vec[int(bits, 2)] = vec[int(bits, 2)] + coef
    return cls(vec)


def parse_state(obj) -> PureState:
    """Accept a ket string, a state JSON object, or an existing state."""
    if isinstance(obj, PureState):
        return obj
    if isinstance(obj, str):
        return parse_ket(obj)
    if isinstance(obj, Mapping):
        n = obj.get("qubits")
        if n not in _STATE_TYPES:
            raise ValueError(f"unsupported qubit count {n!r}")
        amps = obj.get("amplitudes", {})
        if not isinstance(amps, Mapping):
            raise ValueError("amplitudes must be an object")
        return _STATE_TYPES[n].from_dict({k: parse_scalar(str(v)) for k, v in amps.items()})
    raise TypeError(f"cannot interpret {type(obj).__name__} as a state")


# --- flattenings -------------------------------------------------------------

def cyclic_reindex(psi: PureState4, times: int = 1) -> PureState4:
    """psi'_{pqrs} = psi_{p s q r}: positions (j,k,l) receive (k,l,j)."""
    a = psi.amplitudes
    for _ in range(times % 3):
        a = tuple(a[8 * p + 4 * s + 2 * q + r]
                  for p, q, r, s in product((0, 1), repeat=4))
    return PureState4(a)


def flattening(psi: PureState4, kind: str) -> ExactMatrix:
    """4x4 flattenings ``primary``, ``cyclic1``, ``cyclic2``; 2x8 ``qubit1``..``qubit4``.

    primary has rows ij and columns kl; cyclic1 has rows ik and columns lj;
    cyclic2 has rows il and columns jk.
    """
    if kind == "primary":
        return ExactMatrix(4, 4, psi.amplitudes)
    if kind == "cyclic1":
        return ExactMatrix(4, 4, cyclic_reindex(psi, 1).amplitudes)
    if kind == "cyclic2":
        return ExactMatrix(4, 4, cyclic_reindex(psi, 2).amplitudes)
    if kind.startswith("qubit"):
        k = int(kind[5:])
        n = psi.nqubits
        if not 1 <= k <= n:
            raise ValueError(f"no qubit {k} in a {n}-qubit state")
        rows = [[], []]
        for idx, a in enumerate(psi.amplitudes):
            bit = (idx >> (n - k)) & 1
            rows[bit].append(a)
        return ExactMatrix.from_rows(rows)
    raise ValueError(f"unknown flattening kind {kind!r}")


# --- qubit permutations ------------------------------------------------------

@dataclass(frozen=True)
class QubitPermutation:
    """A permutation of qubit positions 1..n; image[q-1] = sigma(q)."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def from_cycle(cls, *cycle: int, n: int = 4) -> "QubitPermutation":
        img = list(range(1, n + 1))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            img[a - 1] = b
        return cls(tuple(img))

    def inverse(self) -> "QubitPermutation":
        inv = [0] * len(self.image)
        for q, s in enumerate(self.image, start=1):
            inv[s - 1] = q
        return QubitPermutation(tuple(inv))

    def __str__(self):
        return "".join(str(x) for x in self.image)


ALL_PERMUTATIONS = tuple(QubitPermutation(p) for p in permutations((1, 2, 3, 4)))


def permute_qubits(psi: PureState, sigma: QubitPermutation) -> PureState:
    """Qubit position p of the output carries qubit sigma^-1(p) of the input."""
    n = psi.nqubits
    if len(sigma.image) != n:
        raise ValueError("permutation size does not match the state")
    out = [ZERO] * (2 ** n)
    for idx, a in enumerate(psi.amplitudes):
        if a.is_zero():
            continue
        new = 0
        for q in range(1, n + 1):
            bit = (idx >> (n - q)) & 1
            new |= bit << (n - sigma.image[q - 1])
        out[new] = a
    return type(psi)(out)


# --- local operations --------------------------------------------------------

def apply_local(psi: PureState, ops: Sequence[ExactMatrix]) -> PureState:
    """(A_1 x ... x A_n) psi for invertible 2x2 factors."""
    n = psi.nqubits
    if len(ops) != n:
        raise ValueError(f"need {n} local operators")
    vec = list(psi.amplitudes)
    for q, op in enumerate(ops, start=1):
        if op.shape != (2, 2):
            raise ValueError("local operators must be 2x2")
        if op.det().is_zero():
            raise ValueError(f"local operator on qubit {q} is singular")
        a00, a01, a10, a11 = op.entries
        shift = n - q
        new = list(vec)
        for idx in range(2 ** n):
            if (idx >> shift) & 1:
                continue
            j = idx | (1 << shift)
            x0, x1 = vec[idx], vec[j]
            new[idx] = a00 * x0 + a01 * x1
            new[j] = a10 * x0 + a11 * x1
        vec = new
    return type(psi)(vec)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_scalar(rng: random.Random, size: int = 3, den: int = 3) -> GaussianRational:
    """Small random Gaussian rational."""
    return GaussianRational(Fraction(rng.randint(-size, size), rng.randint(1, den)),
                            Fraction(rng.randint(-size, size), rng.randint(1, den)))


def random_sl2_local(seed, n: int = 4) -> tuple[ExactMatrix, ...]:
    """n random 2x2 matrices of determinant 1. Seed 0 gives identities."""
    if seed == 0:
        return tuple(ExactMatrix.identity(2) for _ in range(n))
    rng = _rng(seed)
    out = []
    for _ in range(n):
        a = ZERO
        while a.is_zero():
            a = random_scalar(rng, 2, 2)
        b = random_scalar(rng, 2, 2)
        c = random_scalar(rng, 2, 2)
        d = (ONE + b * c) / a
        out.append(ExactMatrix(2, 2, [a, b, c, d]))
    return tuple(out)


def random_state(seed, n: int = 4, size: int = 3, den: int = 2, density: float = 1.0) -> PureState:
    """Random nonzero state with small Gaussian-rational amplitudes."""
    rng = _rng(seed)
    cls = _STATE_TYPES[n]
    while True:
        amps = [random_scalar(rng, size, den) if rng.random() < density else ZERO
                for _ in range(2 ** n)]
        if any(not a.is_zero() for a in amps):
            return cls(amps)


def product_state(vectors: Sequence[Sequence]) -> PureState:
    """Tensor product of single-qubit vectors."""
    vecs = [[as_gr(x) for x in v] for v in vectors]
    n = len(vecs)
    amps = []
    for bits in product((0, 1), repeat=n):
        a = ONE
        for v, b in zip(vecs, bits):
            a = a * v[b]
        amps.append(a)
    return _STATE_TYPES[n](amps)


def _nonzero_vector(rng: random.Random, size: int, den: int) -> list[GaussianRational]:
    while True:
        v = [random_scalar(rng, size, den), random_scalar(rng, size, den)]
        if not (v[0].is_zero() and v[1].is_zero()):
            return v


def random_product_sum(seed, r: int, n: int = 4, size: int = 3, den: int = 2) -> PureState:
    """Sum of r random product states; redrawn if the sum vanishes."""
    rng = _rng(seed)
    while True:
        amps = [ZERO] * (2 ** n)
        for _ in range(r):
            p = product_state([_nonzero_vector(rng, size, den) for _ in range(n)])
            amps = [x + y for x, y in zip(amps, p.amplitudes)]
        if any(not a.is_zero() for a in amps):
            return _STATE_TYPES[n](amps)
