"""Executable acceptance checks.

Each ``check_*`` function runs one criterion end to end and returns a
CriterionResult; ``run_all`` runs the ten in order. The same functions back
``tests/test_acceptance.py`` and the ``selftest`` CLI verb.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .classify import slocc_equivalent
from .families import BlockSpec, FamilyParams, canonical_matrix, normal_form_state
from .gaussian import I, ONE, ZERO, GaussianRational
from .invariants import (WEYL_GENERATORS, WeylPoint, charpoly_from_invariants,
                         invariant_vector, inv_LMN, weyl_generator_matrix,
                         weyl_invariants, weyl_relations)
from .matrix import ExactMatrix, char_poly
from .poly import UniPoly, gaussian_sqrt
from .rank import in_closure_S2, rank4
from .spectral import (JordanProfile, NonzeroFactor, OrbitLabel, decode_nilpotent_signature,
                       jordan_profile, orthogonal_orbit_label, r_tilde, rational_orthogonal,
                       word_rank_signature)
from .states import (ALL_PERMUTATIONS, PureState4, apply_local, parse_ket, permute_qubits,
                     product_state, random_product_sum, random_scalar, random_sl2_local,
                     random_state)

__all__ = ["AcceptanceConfig", "CriterionResult", "CHECKS", "run_all", "JORDAN_ROWS"]


@dataclass(frozen=True)
class AcceptanceConfig:
    seed: int = 2024
    charpoly_states: int = 1000
    lmn_states: int = 10_000
    invariance_states: int = 100
    invariance_locals: int = 100
    jordan_draws: int = 10
    rank_draws: int = 5
    rank_trials: int = 2000
    roundtrip_trials: int = 200
    roundtrip_max_dim: int = 6
    injectivity_max_dim: int = 8
    weyl_points: int = 100

    @classmethod
    def quick(cls, seed: int = 2024) -> "AcceptanceConfig":
        """Reduced trial counts, same code paths."""
        return cls(seed=seed, charpoly_states=50, lmn_states=200, invariance_states=5,
                   invariance_locals=10, jordan_draws=2, rank_draws=2, rank_trials=100,
                   roundtrip_trials=20, injectivity_max_dim=5, weyl_points=10)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail}


def _rng(cfg: AcceptanceConfig, tag: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{tag}")


def _nonzero(rng: random.Random, size: int = 3, den: int = 3) -> GaussianRational:
    while True:
        x = random_scalar(rng, size, den)
        if not x.is_zero():
            return x


def _generic_params(rng: random.Random, n: int) -> list[GaussianRational]:
    """n nonzero scalars with pairwise distinct squares."""
    while True:
        ps = [_nonzero(rng) for _ in range(n)]
        sq = [p * p for p in ps]
        if len(set(sq)) == n:
            return ps


def _random_local_image(psi: PureState4, rng: random.Random) -> PureState4:
    ops = random_sl2_local(rng.randrange(1, 2 ** 31))
    return permute_qubits(apply_local(psi, ops), rng.choice(ALL_PERMUTATIONS))


# --- 1. invariants of the example states ------------------------------------

def _cluster_phi() -> PureState4:
    """(1/2)(b+ 0 b+ 0 + b+ 0 b- 1 + b- 1 b- 0 + b- 1 b+ 1) with b+- = (|0> +- |1>)/sqrt2."""
    plus, minus, e0, e1 = [1, 1], [1, -1], [1, 0], [0, 1]
    terms = [(plus, e0, plus, e0), (plus, e0, minus, e1), (minus, e1, minus, e0),
             (minus, e1, plus, e1)]
    amps = [ZERO] * 16
    for t in terms:
        p = product_state(t)
        amps = [x + y for x, y in zip(amps, p.amplitudes)]
    return PureState4(amps).scale(Fraction(1, 4))


def example_states() -> dict[str, PureState4]:
    return {
        "GHZ": parse_ket("|0000> + |1111>"),
        "W": parse_ket("1/2|0001> + 1/2|0010> + 1/2|0100> + 1/2|1000>"),
        "phi": _cluster_phi(),
        "phi'": parse_ket("1/2|0000> + 1/2|0011> + 1/2|1100> - 1/2|1111>"),
        "chi": parse_ket("|0000> - |0011> - |0101> + |0110> + |1001> + |1010> + |1100> + |1111>"),
    }


EXPECTED_STAR = {
    "GHZ": (1, 0, 0, 0),
    "W": (0, 0, 0, 0),
    "phi": (0, 0, Fraction(1, 128), Fraction(1, 2048)),
    "phi'": (0, 0, Fraction(1, 128), Fraction(1, 2048)),
    "chi": (0, 0, 32, -128),
}


def check_example_invariants(cfg: AcceptanceConfig) -> CriterionResult:
    states = example_states()
    bad = []
    for name, want in EXPECTED_STAR.items():
        got = invariant_vector(states[name]).slocc_star
        if tuple(got) != tuple(GaussianRational(w) for w in want):
            bad.append(f"{name}: {[str(g) for g in got]}")
    detail = "5 example states match" if not bad else "; ".join(bad)
    return CriterionResult(1, "example-state invariants", not bad, detail)


# --- 2. closed-form characteristic polynomial --------------------------------

def check_charpoly(cfg: AcceptanceConfig) -> CriterionResult:
    rng = _rng(cfg, "charpoly")
    bad = 0
    for _ in range(cfg.charpoly_states):
        psi = random_state(rng)
        if charpoly_from_invariants(psi) != char_poly(r_tilde(psi).matrix):
            bad += 1
    return CriterionResult(2, "closed-form characteristic polynomial", bad == 0,
                           f"{cfg.charpoly_states - bad}/{cfg.charpoly_states} states agree")


# --- 3. L + M + N = 0 ---------------------------------------------------------

def check_lmn(cfg: AcceptanceConfig) -> CriterionResult:
    from .matrix import determinant
    from .states import flattening
    rng = _rng(cfg, "lmn")
    bad = 0
    for _ in range(cfg.lmn_states):
        psi = random_state(rng)
        # all three determinants computed directly, N included
        total = sum((determinant(flattening(psi, k)) for k in ("primary", "cyclic1", "cyclic2")),
                    ZERO)
        if not total.is_zero():
            bad += 1
    return CriterionResult(3, "L + M + N = 0", bad == 0,
                           f"{cfg.lmn_states - bad}/{cfg.lmn_states} states")


# --- 4. invariance under permutations and local operations --------------------

def check_invariance(cfg: AcceptanceConfig) -> CriterionResult:
    rng = _rng(cfg, "invariance")
    bad = 0
    checked = 0
    for _ in range(cfg.invariance_states):
        psi = random_state(rng)
        base = invariant_vector(psi)
        for sigma in ALL_PERMUTATIONS:
            checked += 1
            if invariant_vector(permute_qubits(psi, sigma)).slocc_star != base.slocc_star:
                bad += 1
        for _ in range(cfg.invariance_locals):
            checked += 1
            if invariant_vector(apply_local(psi, random_sl2_local(rng))).slocc_star != base.slocc_star:
                bad += 1
    return CriterionResult(4, "H, Gamma, Sigma, Pi invariance", bad == 0,
                           f"{checked - bad}/{checked} transformed states agree")


# --- 5. Jordan structure of the 17 families ----------------------------------

# Expected Jordan structure of R~ per family; a, b, c, d are the family
# parameters in order. "Same as k" rows are resolved through SAME_JORDAN_AS.
JORDAN_ROWS = {
    1: "±ia, ±ib, ±ic, ±id",
    2: "±ia, ±ib, J2(±ic)",
    3: "±ia, ±ib, 0, J3(0)",
    5: "J2(±ia), J2(±ib)",
    6: "±ia, J3(±ib)",
    7: "±ia, 0, J5(0)",
    9: "J4(±ia)",
    10: "J2(±ia), 0, J3(0)",
    12: "0, J7(0)",
    14: "J3(0), J5(0)",
    16: "0, 0, J3(0), J3(0)",
}
SAME_JORDAN_AS = {4: 3, 8: 7, 11: 10, 13: 12, 15: 14, 17: 16}

_TOKEN = re.compile(r"^(?:J(\d+)\((.+)\)|(.+))$")


def expected_profile(k: int, params) -> JordanProfile:
    row = JORDAN_ROWS[SAME_JORDAN_AS.get(k, k)]
    zero: list[int] = []
    nonzero: dict[str, int] = {}
    for tok in (t.strip() for t in row.split(",")):
        m = _TOKEN.match(tok)
        size = int(m.group(1)) if m.group(1) else 1
        ev = m.group(2) if m.group(1) else m.group(3)
        if ev == "0":
            zero.append(size)
        elif ev.startswith("±i") and len(ev) == 3:
            nonzero[ev[2]] = size
        else:
            raise ValueError(f"cannot read token {tok!r}")
    names = "abcd"
    factors = []
    for var, size in nonzero.items():
        p = params[names.index(var)]
        # eigenvalues +-i p of R~ are the roots of s + p^2 with s = t^2
        dims = tuple(2 * min(j, size) for j in range(1, size + 1))
        factors.append(NonzeroFactor(UniPoly([p * p, ONE]), size, dims))
    factors.sort(key=lambda f: (f.factor.sort_key(), f.multiplicity))
    return JordanProfile(tuple(sorted(zero, reverse=True)), tuple(factors))


def check_jordan_catalog(cfg: AcceptanceConfig) -> CriterionResult:
    from .families import FAMILY_PARAM_COUNT
    rng = _rng(cfg, "jordan")
    bad = []
    for k in range(1, 18):
        for _ in range(cfg.jordan_draws):
            params = _generic_params(rng, FAMILY_PARAM_COUNT[k])
            psi = normal_form_state(FamilyParams(k, tuple(params)))
            if jordan_profile(psi) != expected_profile(k, params):
                bad.append(f"family {k} at {[str(p) for p in params]}")
    n = 17 * cfg.jordan_draws
    detail = f"{n - len(bad)}/{n} family draws match" + (f"; first mismatch {bad[0]}" if bad else "")
    return CriterionResult(5, "Jordan structure per family", not bad, detail)


# --- 6. equivalence decisions ------------------------------------------------

def check_equivalence(cfg: AcceptanceConfig) -> CriterionResult:
    s = example_states()
    # sqrt2 * chi has amplitudes +-1/2, i.e. chi_int / 2
    half_chi = s["chi"].scale(Fraction(1, 2))
    v1 = slocc_equivalent(s["phi"], s["phi'"])
    v2 = slocc_equivalent(s["GHZ"], s["W"])
    v3 = slocc_equivalent(s["phi"].scale(ONE + I), half_chi)
    ok1 = v1.equivalent == "yes"
    mismatch = v2.evidence.get("invariant_mismatch", {})
    ok2 = v2.equivalent == "no" and mismatch.get("name") == "H"
    ok3 = v3.equivalent == "yes"
    detail = (f"(phi, phi') -> {v1.equivalent}; (GHZ, W) -> {v2.equivalent} via "
              f"{mismatch.get('name')}; ((1+i)phi, chi/2) -> {v3.equivalent}")
    return CriterionResult(6, "equivalence decisions", ok1 and ok2 and ok3, detail)


# --- 7. rank of the families -------------------------------------------------

def _rank_cases(rng: random.Random) -> list[tuple[str, FamilyParams, int]]:
    def nz():
        return _nonzero(rng)

    out = []
    while True:
        a, b, c, d = (nz() for _ in range(4))
        L, M, _ = inv_LMN(normal_form_state(FamilyParams(1, (a, b, c, d))))
        if not (L.is_zero() and M.is_zero()):
            break
    out.append(("family 1, L or M nonzero", FamilyParams(1, (a, b, c, d)), 4))
    while True:
        a, b = nz(), nz()
        c = -(a + b)
        if not c.is_zero():
            break
    out.append(("family 1, a+b+c=d=0, abc != 0", FamilyParams(1, (a, b, c, ZERO)), 3))
    a = nz()
    out.append(("family 1, a+b+c=d=0, c=0", FamilyParams(1, (a, -a, ZERO, ZERO)), 2))
    a = nz()
    out.append(("family 2 case (i), a=b, c=0", FamilyParams(2, (a, a, ZERO)), 3))
    out.append(("family 2 case (i), a=b=c=0", FamilyParams(2, (ZERO, ZERO, ZERO)), 1))
    out.append(("family 2 case (ii), a=b=0, c != 0", FamilyParams(2, (ZERO, ZERO, nz())), 3))
    c = nz()
    out.append(("family 2 case (iii), b=0, a=-2c", FamilyParams(2, (-2 * c, ZERO, c)), 3))
    out.append(("family 6, a=b=0", FamilyParams(6, (ZERO, ZERO)), 4))
    out.append(("family 9, a=0", FamilyParams(9, (ZERO,)), 3))
    out.append(("family 9, a != 0", FamilyParams(9, (nz(),)), 4))
    out.append(("family 10", FamilyParams(10, (random_scalar(rng),)), 3))
    out.append(("family 12", FamilyParams(12, ()), 3))
    out.append(("family 14", FamilyParams(14, ()), 3))
    out.append(("family 16", FamilyParams(16, ()), 2))
    return out


def check_rank_table(cfg: AcceptanceConfig) -> CriterionResult:
    rng = _rng(cfg, "rank-table")
    bad = []
    total = 0
    for _ in range(cfg.rank_draws):
        for name, fp, want in _rank_cases(rng):
            psi = _random_local_image(normal_form_state(fp), rng)
            total += 1
            got = rank4(psi).rank
            if got != want:
                bad.append(f"{name}: got {got}, want {want}")
    w = example_states()["W"]
    w_rank = rank4(w).rank
    w_closure = in_closure_S2(w)
    ok = not bad and w_rank == 4 and w_closure
    detail = (f"{total - len(bad)}/{total} family cases; W rank {w_rank}, "
              f"W in closure of S2: {w_closure}")
    if bad:
        detail += f"; first mismatch {bad[0]}"
    return CriterionResult(7, "rank per family", ok, detail)


# --- 8. random sums of product states -----------------------------------------

def check_rank_oracle(cfg: AcceptanceConfig) -> CriterionResult:
    rng = _rng(cfg, "rank-oracle")
    violations = 0
    generic = 0
    trials = 0
    for r in range(1, 7):
        for _ in range(cfg.rank_trials):
            trials += 1
            got = rank4(random_product_sum(rng, r)).rank
            if got > min(r, 4):
                violations += 1
            if r == 4 and got == 4:
                generic += 1
    frac = Fraction(generic, cfg.rank_trials)
    ok = violations == 0 and frac > Fraction(99, 100)
    detail = (f"{trials} trials, {violations} exceed min(r, 4); rank 4 for r = 4 in "
              f"{generic}/{cfg.rank_trials}")
    return CriterionResult(8, "rank of random product sums", ok, detail)


# --- 9. orthogonal canonical forms -------------------------------------------

def _random_blocks(rng: random.Random, max_dim: int) -> list[BlockSpec]:
    while True:
        blocks: list[BlockSpec] = []
        rows = cols = 0
        for _ in range(rng.randint(1, 6)):
            kind = rng.choice(("sym", "sym", "tall", "wide"))
            if kind == "sym":
                n = rng.randint(1, 4)
                alpha = ZERO if n % 2 == 0 and rng.random() < 0.3 else _nonzero(rng, 2, 2)
                b = BlockSpec("sym", n, alpha)
            else:
                b = BlockSpec(kind, rng.randint(0, 3))
            h, w = b.shape
            if rows + h <= max_dim and cols + w <= max_dim:
                blocks.append(b)
                rows, cols = rows + h, cols + w
        if rows and cols:
            return blocks


def _canonical_sign(b: BlockSpec) -> BlockSpec:
    if b.kind != "sym":
        return b
    return BlockSpec("sym", b.size, gaussian_sqrt(b.alpha * b.alpha))


def nilpotent_multisets(max_dim: int) -> list[tuple[BlockSpec, ...]]:
    """Every nonempty multiset of nilpotent blocks fitting in max_dim x max_dim."""
    kinds = [BlockSpec("sym", 2 * k, ZERO) for k in range(1, max_dim // 2 + 1)]
    for m in range(max_dim):
        kinds += [BlockSpec("tall", m), BlockSpec("wide", m)]
    out: list[tuple[BlockSpec, ...]] = []

    def rec(i, r, c, acc):
        if i == len(kinds):
            if acc:
                out.append(tuple(acc))
            return
        h, w = kinds[i].shape
        k = 0
        while r + k * h <= max_dim and c + k * w <= max_dim:
            rec(i + 1, r + k * h, c + k * w, acc + [kinds[i]] * k)
            k += 1

    rec(0, 0, 0, [])
    return out


def check_canonical_forms(cfg: AcceptanceConfig) -> CriterionResult:
    rng = _rng(cfg, "orbit-label")
    bad_round = 0
    for _ in range(cfg.roundtrip_trials):
        blocks = _random_blocks(rng, cfg.roundtrip_max_dim)
        a = canonical_matrix(blocks)
        p = rational_orthogonal(a.rows, rng)
        q = rational_orthogonal(a.cols, rng)
        want = OrbitLabel(a.rows, a.cols, tuple(_canonical_sign(b) for b in blocks))
        if orthogonal_orbit_label(p @ a @ q) != want:
            bad_round += 1
    seen: dict = {}
    collisions = 0
    undecoded = 0
    multisets = nilpotent_multisets(cfg.injectivity_max_dim)
    length = 2 * cfg.injectivity_max_dim + 1
    for blocks in multisets:
        a = canonical_matrix(blocks)
        sig = word_rank_signature(a, length)
        key = (a.rows, a.cols, sig)
        if key in seen:
            collisions += 1
        seen[key] = blocks
        decoded = OrbitLabel(a.rows, a.cols, tuple(decode_nilpotent_signature(*sig)))
        if decoded != OrbitLabel(a.rows, a.cols, blocks):
            undecoded += 1
    ok = bad_round == 0 and collisions == 0 and undecoded == 0
    detail = (f"{cfg.roundtrip_trials - bad_round}/{cfg.roundtrip_trials} round trips; "
              f"{len(multisets)} nilpotent multisets up to {cfg.injectivity_max_dim}x"
              f"{cfg.injectivity_max_dim}: {collisions} signature collisions, "
              f"{undecoded} decode failures")
    return CriterionResult(9, "orthogonal canonical forms", ok, detail)


# --- 10. F4 layer ---------------------------------------------------------------

def weyl_group_closure() -> set[tuple]:
    gens = [weyl_generator_matrix(g) for g in WEYL_GENERATORS]
    eye = ExactMatrix.identity(4)
    seen = {eye.entries: eye}
    frontier = [eye]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                x = g @ m
                if x.entries not in seen:
                    seen[x.entries] = x
                    nxt.append(x)
        frontier = nxt
    return set(seen)


def _long_root_power_sum(p: WeylPoint, k: int) -> GaussianRational:
    x = p.coords()
    acc = ZERO
    for i in range(4):
        for j in range(i + 1, 4):
            acc = acc + (x[i] + x[j]) ** k + (x[i] - x[j]) ** k
    return acc


def _relations_from(H, G, S, P):
    return (12 * H,
            72 * H ** 3 - 96 * G,
            264 * H ** 4 - 832 * G * H + 320 * S,
            4104 * H ** 6 - 24096 * H ** 3 * G + 17440 * H ** 2 * S + 3904 * G ** 2 - 3840 * P)


def check_weyl_layer(cfg: AcceptanceConfig) -> CriterionResult:
    order = len(weyl_group_closure())
    rng = _rng(cfg, "weyl")
    bad_rel = bad_root = bad_restrict = 0
    for _ in range(cfg.weyl_points):
        p = WeylPoint.of([random_scalar(rng) for _ in range(4)])
        rel = weyl_relations(p)
        star = invariant_vector(normal_form_state(FamilyParams(1, p.coords()))).slocc_star
        if rel != _relations_from(*star):
            bad_rel += 1
        if any(rel[n] != _long_root_power_sum(p, k) for n, k in ((0, 2), (1, 6), (2, 8))):
            bad_root += 1
        if tuple(weyl_invariants(p)) != tuple(star):
            bad_restrict += 1
    ok = order == 1152 and bad_rel == bad_root == bad_restrict == 0
    n = cfg.weyl_points
    detail = (f"group order {order}; relations {n - bad_rel}/{n}, root power sums "
              f"{n - bad_root}/{n}, restriction {n - bad_restrict}/{n}")
    return CriterionResult(10, "F4 Weyl layer", ok, detail)


CHECKS: tuple[Callable[[AcceptanceConfig], CriterionResult], ...] = (
    check_example_invariants,
    check_charpoly,
    check_lmn,
    check_invariance,
    check_jordan_catalog,
    check_equivalence,
    check_rank_table,
    check_rank_oracle,
    check_canonical_forms,
    check_weyl_layer,
)


def run_all(cfg: AcceptanceConfig | None = None, echo: Callable[[str], None] | None = None
            ) -> list[CriterionResult]:
    cfg = cfg or AcceptanceConfig()
    out = []
    for check in CHECKS:
        res = check(cfg)
        if echo is not None:
            echo(res.line())
        out.append(res)
    return out
