"""Family identification, SLOCC* equivalence and low-rank types.

Families follow the 17 R-matrix normal forms; qubit permutations fuse
them into nine groups. Non-nilpotent, non-semisimple states are placed
by matching the eigenvalue-free shape of their Jordan profile against a
catalog generated from the per-family Jordan templates below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Optional

from .errors import InconsistencyError
from .families import FUSED_GROUPS, family_template, group_of_family
from .invariants import InvariantVector, invariant_vector
from .matrix import matrix_rank
from .rank import rank4
from .spectral import (JordanProfile, OrbitLabel, is_nilpotent, is_semisimple,
                       jordan_profile, orthogonal_orbit_label, r_matrix)
from .states import ALL_PERMUTATIONS, PureState4, flattening, permute_qubits

__all__ = [
    "Factorization",
    "FamilyLabel",
    "EquivalenceVerdict",
    "LowRankType",
    "is_factorizable",
    "family_of",
    "family_from_label",
    "slocc_equivalent",
    "low_rank_type",
    "JORDAN_TEMPLATES",
    "shape_catalog",
]


# --- factorizability ---------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    kind: str            # "qubit" or "pair"
    parts: tuple         # e.g. ((1,), (2, 3, 4)) or ((1, 2), (3, 4))

    def __str__(self):
        return "|".join("".join(str(q) for q in p) for p in self.parts)


_PAIR_SPLITS = (("primary", ((1, 2), (3, 4))),
                ("cyclic1", ((1, 3), (2, 4))),
                ("cyclic2", ((1, 4), (2, 3))))


def is_factorizable(psi: PureState4) -> Optional[Factorization]:
    """First product decomposition found, single-qubit splits first."""
    for k in range(1, 5):
        if matrix_rank(flattening(psi, f"qubit{k}")) == 1:
            rest = tuple(q for q in range(1, 5) if q != k)
            return Factorization("qubit", ((k,), rest))
    for kind, parts in _PAIR_SPLITS:
        if matrix_rank(flattening(psi, kind)) == 1:
            return Factorization("pair", parts)
    return None


# --- Jordan catalog ----------------------------------------------------------

# Per family: Jordan block size contributed at +-i*p for each parameter p
# (in order), and the blocks at eigenvalue 0 present for all parameters.
JORDAN_TEMPLATES: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    1: ((1, 1, 1, 1), ()),
    2: ((1, 1, 2), ()),
    3: ((1, 1), (3, 1)),
    4: ((1, 1), (3, 1)),
    5: ((2, 2), ()),
    6: ((1, 3), ()),
    7: ((1,), (5, 1)),
    8: ((1,), (5, 1)),
    9: ((4,), ()),
    10: ((2,), (3, 1)),
    11: ((2,), (3, 1)),
    12: ((), (7, 1)),
    13: ((), (7, 1)),
    14: ((), (5, 3)),
    15: ((), (5, 3)),
    16: ((), (3, 3, 1, 1)),
    17: ((), (3, 3, 1, 1)),
}

Shape = tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]


def _labelings(n: int):
    """Assignments of n slots to 'zero' (0) or to value classes 1, 2, ...
    in restricted-growth form."""
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(0, top + 2):
            yield from rec(prefix + [v], max(top, v))
    yield from rec([], 0)


def template_shapes(k: int) -> set[Shape]:
    """All Jordan shapes family k attains, over zero and coincident parameters."""
    slots, fixed = JORDAN_TEMPLATES[k]
    out = set()
    for lab in _labelings(len(slots)):
        zero = list(fixed)
        classes: dict[int, list[int]] = {}
        for size, v in zip(slots, lab):
            if v == 0:
                zero.extend([size, size])
            else:
                classes.setdefault(v, []).append(size)
        if not zero and not classes:
            continue
        parts = tuple(sorted(tuple(sorted(c, reverse=True)) for c in classes.values()))
        out.add((tuple(sorted(zero, reverse=True)), parts))
    return out


def _is_semisimple_shape(shape: Shape) -> bool:
    zero, parts = shape
    return all(b == 1 for b in zero) and all(all(b == 1 for b in p) for p in parts)


@lru_cache(maxsize=None)
def shape_catalog() -> dict[Shape, frozenset[int]]:
    """Jordan shape -> families attaining it (semisimple shapes excluded)."""
    cat: dict[Shape, set[int]] = {}
    for k in JORDAN_TEMPLATES:
        for shape in template_shapes(k):
            if k == 1 or _is_semisimple_shape(shape):
                continue
            cat.setdefault(shape, set()).add(k)
    return {s: frozenset(v) for s, v in cat.items()}


def _groups_for(families) -> frozenset[frozenset[int]]:
    return frozenset(group_of_family(k) for k in families)


# --- family labels -----------------------------------------------------------

@dataclass(frozen=True)
class FamilyLabel:
    fine: Optional[int]
    group: frozenset[int]
    nilpotent: bool
    semisimple: bool

    def __post_init__(self):
        if self.group not in FUSED_GROUPS:
            raise InconsistencyError(f"{sorted(self.group)} is not a fused family group")
        if self.semisimple and self.group != frozenset({1}):
            raise InconsistencyError("semisimple state outside family 1")
        if self.fine is not None and self.fine not in self.group:
            raise InconsistencyError("fine family outside its group")

    def group_str(self) -> str:
        return "{" + ",".join(str(k) for k in sorted(self.group)) + "}"

    def to_json(self) -> dict:
        return {"fine": self.fine, "group": sorted(self.group),
                "nilpotent": self.nilpotent, "semisimple": self.semisimple}


def _label_shape(label: OrbitLabel) -> Counter:
    c: Counter = Counter()
    for b in label.blocks:
        if b.kind == "sym":
            zero = b.alpha is not None and b.alpha.is_zero()
            c[("S0" if zero else "S", b.size)] += 1
        else:
            c[(b.kind, b.size)] += 1
    return c


def family_from_label(label: OrbitLabel) -> int:
    """The unique family template whose R-matrices have this O4 x O4 label."""
    target = _label_shape(label)
    hits = []
    for k in range(1, 18):
        sizes, rect = family_template(k)
        for zeros in product((False, True), repeat=len(sizes)):
            c: Counter = Counter(rect)
            for n, z in zip(sizes, zeros):
                if not z:
                    c[("S", n)] += 1
                elif n % 2 == 0:
                    c[("S0", n)] += 1
                else:
                    c[("tall", (n - 1) // 2)] += 1
                    c[("wide", (n - 1) // 2)] += 1
            if c == target:
                hits.append(k)
                break
    if len(hits) != 1:
        raise InconsistencyError(f"orbit label {label} matches families {hits}")
    return hits[0]


_NILPOTENT_SPECIAL = (3, 3, 1, 1)


def _nilpotent_catalog() -> dict[tuple[int, ...], frozenset[frozenset[int]]]:
    cat: dict[tuple[int, ...], set] = {}
    for k in range(2, 18):
        slots, fixed = JORDAN_TEMPLATES[k]
        zero = list(fixed)
        for size in slots:
            zero.extend([size, size])
        cat.setdefault(tuple(sorted(zero, reverse=True)), set()).add(group_of_family(k))
    return {z: frozenset(g) for z, g in cat.items()}


NILPOTENT_CATALOG = _nilpotent_catalog()


def _profile_shape(psi: PureState4) -> Shape:
    return jordan_profile(psi).shape()


def family_of(psi: PureState4) -> FamilyLabel:
    fine = family_from_label(orthogonal_orbit_label(r_matrix(psi)))
    if is_semisimple(psi):
        label = FamilyLabel(1, frozenset({1}), False, True)
    elif is_nilpotent(psi):
        zb = jordan_profile(psi).zero_blocks
        groups = NILPOTENT_CATALOG.get(zb)
        if groups is None:
            raise InconsistencyError(f"nilpotent Jordan type {zb} matches no catalog row")
        if zb == _NILPOTENT_SPECIAL:
            group = frozenset({16, 17}) if is_factorizable(psi) else frozenset({6})
        elif len(groups) == 1:
            (group,) = groups
        else:
            raise InconsistencyError(f"nilpotent Jordan type {zb} is ambiguous")
        label = FamilyLabel(fine, group, True, False)
    else:
        label = FamilyLabel(fine, _group_by_profile(psi), False, False)
    if fine not in label.group:
        raise InconsistencyError(
            f"family {fine} from the orbit label disagrees with group {label.group_str()}")
    return label


def _group_by_profile(psi: PureState4) -> frozenset[int]:
    cat = shape_catalog()
    shape = _profile_shape(psi)
    if shape not in cat:
        raise InconsistencyError(f"Jordan shape {shape} matches no catalog row")
    candidates = set(_groups_for(cat[shape]))
    if len(candidates) > 1:
        for sigma in ALL_PERMUTATIONS:
            other = _profile_shape(permute_qubits(psi, sigma))
            if other not in cat:
                raise InconsistencyError(f"Jordan shape {other} matches no catalog row")
            candidates &= set(_groups_for(cat[other]))
            if len(candidates) <= 1:
                break
    if len(candidates) != 1:
        raise InconsistencyError(f"Jordan shape {shape} does not determine a family group")
    return candidates.pop()


# --- equivalence -------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: str                     # "yes", "no" or "undetermined"
    step: int
    reason: str
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"equivalent": self.equivalent, "step": self.step, "reason": self.reason,
                "evidence": self.evidence}


_STAR_NAMES = ("H", "Gamma", "Sigma", "Pi")


def slocc_equivalent(phi: PureState4, psi: PureState4) -> EquivalenceVerdict:
    iv1, iv2 = invariant_vector(phi), invariant_vector(psi)
    for name in _STAR_NAMES:
        a, b = getattr(iv1, name), getattr(iv2, name)
        if a != b:
            return EquivalenceVerdict("no", 1, f"invariant {name} differs", {
                "invariant_mismatch": {"name": name, "values": [str(a), str(b)]}})
    s1, s2 = is_semisimple(phi), is_semisimple(psi)
    n1, n2 = is_nilpotent(phi), is_nilpotent(psi)
    kinds = {"semisimple": [s1, s2], "nilpotent": [n1, n2]}
    if s1 and s2:
        return EquivalenceVerdict("yes", 1, "both semisimple with equal invariants", kinds)
    if s1 != s2 or n1 != n2:
        return EquivalenceVerdict("no", 1, "Jordan types differ", {
            **kinds,
            "profile_mismatch": [jordan_profile(phi).describe(), jordan_profile(psi).describe()]})
    f1, f2 = family_of(phi), family_of(psi)
    groups = [sorted(f1.group), sorted(f2.group)]
    if n1:
        if f1.group == f2.group:
            return EquivalenceVerdict("yes", 2, "same nilpotent family group",
                                      {**kinds, "groups": groups})
        return EquivalenceVerdict("no", 2, "different nilpotent family groups", {
            **kinds, "groups": groups,
            "profile_mismatch": [jordan_profile(phi).describe(), jordan_profile(psi).describe(),
                                 ], "factorizable": [str(is_factorizable(phi)), str(is_factorizable(psi))]})
    if f1.group != f2.group:
        return EquivalenceVerdict("no", 3, "different family groups", {
            **kinds, "groups": groups,
            "profile_mismatch": [jordan_profile(phi).describe(), jordan_profile(psi).describe()]})
    target = jordan_profile(psi)
    for sigma in ALL_PERMUTATIONS:
        if jordan_profile(permute_qubits(phi, sigma)) == target:
            return EquivalenceVerdict("yes", 3, "equal Jordan profiles after a qubit permutation", {
                **kinds, "groups": groups, "permutation": str(sigma)})
    return EquivalenceVerdict("no", 3, "no qubit permutation matches the Jordan profiles", {
        **kinds, "groups": groups,
        "profile_mismatch": [jordan_profile(phi).describe(), target.describe()]})


def orbit_label_equivalent(phi: PureState4, psi: PureState4) -> bool:
    """Independent decision: some qubit permutation of phi has an R-matrix in
    the O4 x O4 orbit of R_psi."""
    target = orthogonal_orbit_label(r_matrix(psi))
    return any(orthogonal_orbit_label(r_matrix(permute_qubits(phi, s))) == target
               for s in ALL_PERMUTATIONS)


# --- low-rank types ----------------------------------------------------------

@dataclass(frozen=True)
class LowRankType:
    rank: int
    pattern: Optional[str]

    def __post_init__(self):
        if self.rank not in (1, 2, 3):
            raise ValueError("low-rank types have rank 1..3")
        if self.pattern is not None and not self.pattern.startswith(str(self.rank)):
            raise InconsistencyError(f"pattern {self.pattern} inconsistent with rank {self.rank}")

    def to_json(self) -> dict:
        return {"rank": self.rank, "pattern": self.pattern}


# Jordan shapes of the rank-3 normal forms that are neither semisimple nor
# nilpotent, and zero-block types of the nilpotent ones.
_RANK3_SHAPES: dict[Shape, str] = {
    ((1, 1), ((1,), (2,))): "3(a)",
    ((3, 1), ((2,),)): "3(b)",
    ((3, 1), ((1, 1),)): "3(c)",
    ((2, 2), ((2,),)): "3(c)",
    ((2, 2), ((1, 1),)): "3(e)",
    ((1, 1, 1, 1), ((2,),)): "3(e)",
}
_RANK3_NILPOTENT: dict[tuple[int, ...], str] = {
    (7, 1): "3(b)",
    (5, 3): "3(d)",
    (5, 1, 1, 1): "3(f)",
    (4, 4): "3(f)",
    (3, 2, 2, 1): "3(g)",
}


def low_rank_type(psi: PureState4) -> Optional[LowRankType]:
    r = rank4(psi).rank
    if r == 4:
        return None
    if r == 1:
        return LowRankType(1, None)
    if r == 2:
        ones = sum(1 for k in range(1, 5) if matrix_rank(flattening(psi, f"qubit{k}")) == 1)
        return LowRankType(2, {0: "2(a)", 1: "2(b)", 2: "2(c)"}[ones])
    if is_semisimple(psi):
        return LowRankType(3, "3(a)")
    profile = jordan_profile(psi)
    if is_nilpotent(psi):
        pattern = _RANK3_NILPOTENT.get(profile.zero_blocks)
    else:
        pattern = _RANK3_SHAPES.get(profile.shape())
    if pattern is None:
        raise InconsistencyError(f"rank-3 Jordan type {profile.describe()} matches no pattern")
    return LowRankType(3, pattern)
