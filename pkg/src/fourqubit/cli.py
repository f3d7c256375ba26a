"""Command-line front end.

    fourqubit invariants "|0001> + |0010> + |0100> + |1000>"
    fourqubit rank "|0000> + |1111>" --format json
    fourqubit classify --input states.json
    fourqubit equiv STATE1 STATE2
    fourqubit normal-form --family 1 --params 1,2,3,4
    fourqubit orbit-label "1,i;0,1"
    fourqubit weyl --point 1,0,0,0 --apply reflect
    fourqubit selftest --quick

Exit status: 0 success (and "yes" for equiv), 1 input error, 2 internal
inconsistency, 3 equiv "no", 4 equiv "undetermined".
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from .acceptance import AcceptanceConfig, run_all
from .classify import family_of, is_factorizable, low_rank_type, slocc_equivalent
from .errors import InconsistencyError
from .families import FAMILY_PARAM_COUNT, FamilyParams, family_rmatrix, group_of_family, normal_form_state
from .gaussian import parse_scalar
from .invariants import (WEYL_GENERATORS, WeylPoint, invariant_vector, weyl_group_action,
                         weyl_invariants, weyl_relations)
from .matrix import ExactMatrix
from .spectral import (is_nilpotent, is_semisimple, jordan_profile, orthogonal_orbit_label,
                       word_rank_signature)
from .states import PureState3, PureState4, parse_state
from .rank import in_closure_S2, in_closure_S3, rank3, rank4

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_NOT_EQUIVALENT, EXIT_UNDETERMINED = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


# --- input handling ------------------------------------------------------------

def _read_input(path: str) -> Any:
    """JSON document, or the raw text when the file is not JSON (a ket expression)."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text.strip()


def _items(positional: list[str], path: str | None) -> list[Any]:
    items: list[Any] = list(positional)
    if path is not None:
        doc = _read_input(path)
        items.extend(doc if isinstance(doc, list) else [doc])
    if not items:
        raise InputError("no input: give a ket expression or --input PATH")
    return items


def _state(item: Any):
    try:
        return parse_state(item)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad state {item!r}: {exc}") from None


def _state4(item: Any) -> PureState4:
    psi = _state(item)
    if not isinstance(psi, PureState4):
        raise InputError("this command needs a 4-qubit state")
    return psi


def _scalar_list(text: str, what: str):
    if text.strip() == "":
        return []
    try:
        return [parse_scalar(t.strip()) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad {what}: {exc}") from None


def parse_matrix(item: Any) -> ExactMatrix:
    """Matrix JSON object, inline JSON, or inline rows "1,i;0,1"."""
    if isinstance(item, str) and item.lstrip().startswith("{"):
        try:
            item = json.loads(item)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad matrix JSON: {exc}") from None
    if isinstance(item, dict):
        try:
            m, n, entries = item["rows"], item["cols"], item["entries"]
        except KeyError as exc:
            raise InputError(f"matrix object lacks {exc}") from None
        if not (isinstance(m, int) and isinstance(n, int) and m >= 0 and n >= 0):
            raise InputError("rows and cols must be nonnegative integers")
        if len(entries) != m or any(len(r) != n for r in entries):
            raise InputError(f"entries do not form a {m}x{n} array")
        try:
            flat = [parse_scalar(str(x)) for r in entries for x in r]
        except ValueError as exc:
            raise InputError(f"bad matrix entry: {exc}") from None
        return ExactMatrix(m, n, flat)
    if isinstance(item, str):
        rows = [_scalar_list(r, "matrix entry") for r in item.split(";")]
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise InputError("inline matrix rows must be nonempty and of equal length")
        return ExactMatrix.from_rows(rows)
    raise InputError(f"cannot interpret {item!r} as a matrix")


def _matrix_json(a: ExactMatrix) -> dict:
    return {"rows": a.rows, "cols": a.cols,
            "entries": [[str(x) for x in row] for row in a.to_rows()]}


# --- reports -------------------------------------------------------------------

def invariants_report(item: Any) -> dict:
    psi = _state4(item)
    return {
        "input": item,
        "state": psi.to_ket(),
        "invariants": invariant_vector(psi).to_json(),
        "nilpotent": is_nilpotent(psi),
        "semisimple": is_semisimple(psi),
    }


def rank_report(item: Any) -> dict:
    psi = _state(item)
    res = rank3(psi) if isinstance(psi, PureState3) else rank4(psi)
    out = {"input": item, "state": psi.to_ket(), "qubits": psi.nqubits, **res.to_json()}
    if isinstance(psi, PureState4):
        out["in_closure_S2"] = in_closure_S2(psi)
        out["in_closure_S3"] = in_closure_S3(psi)
    return out


def classify_report(item: Any) -> dict:
    psi = _state4(item)
    label = family_of(psi)
    low = low_rank_type(psi)
    fac = is_factorizable(psi)
    return {
        "input": item,
        "state": psi.to_ket(),
        "invariants": invariant_vector(psi).to_json(),
        "nilpotent": label.nilpotent,
        "semisimple": label.semisimple,
        "jordan_profile": jordan_profile(psi).to_json(),
        "jordan_structure": jordan_profile(psi).describe(),
        "family": label.fine,
        "family_group": sorted(label.group),
        "rank": rank4(psi).rank,
        "low_rank_pattern": None if low is None else low.pattern,
        "factorization": None if fac is None else str(fac),
    }


def equiv_report(first: Any, second: Any) -> dict:
    phi, psi = _state4(first), _state4(second)
    verdict = slocc_equivalent(phi, psi)
    return {"input": [first, second], "states": [phi.to_ket(), psi.to_ket()],
            **verdict.to_json()}


def normal_form_report(family: int, params_text: str) -> dict:
    params = _scalar_list(params_text, "parameters")
    try:
        fp = FamilyParams(family, tuple(params))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    psi = normal_form_state(fp)
    return {
        "input": {"family": family, "params": params_text},
        "family": family,
        "family_group": sorted(group_of_family(family)),
        "params": [str(p) for p in fp.params],
        "r_matrix": _matrix_json(family_rmatrix(fp)),
        "state": psi.to_ket(),
        "amplitudes": psi.to_json()["amplitudes"],
    }


def orbit_label_report(item: Any) -> dict:
    a = parse_matrix(item)
    label = orthogonal_orbit_label(a)
    cols, rows = word_rank_signature(a)
    return {
        "input": item,
        "matrix": _matrix_json(a),
        "label": str(label),
        **label.to_json(),
        "word_ranks": {"from_columns": list(cols), "from_rows": list(rows)},
    }


def weyl_report(point_text: str, apply: list[str]) -> dict:
    coords = _scalar_list(point_text, "point")
    if len(coords) != 4:
        raise InputError("a Weyl point has four coordinates a,b,c,d")
    p = WeylPoint.of(coords)
    names = ("H", "Gamma", "Sigma", "Pi")
    out: dict = {
        "input": {"point": point_text, "apply": list(apply)},
        "point": [str(x) for x in p.coords()],
        "invariants": dict(zip(names, (str(v) for v in weyl_invariants(p)))),
        "relations": dict(zip(("I2", "I6", "I8", "I12"), (str(v) for v in weyl_relations(p)))),
    }
    if apply:
        q = p
        for g in apply:
            if g not in WEYL_GENERATORS:
                raise InputError(f"unknown Weyl generator {g!r}; choose from {', '.join(WEYL_GENERATORS)}")
            q = weyl_group_action(q, g)
        out["image"] = [str(x) for x in q.coords()]
        out["invariants_preserved"] = weyl_invariants(q) == weyl_invariants(p)
    return out


def selftest_report(seed: int, quick: bool, echo: Callable[[str], None] | None) -> dict:
    cfg = AcceptanceConfig.quick(seed) if quick else AcceptanceConfig(seed=seed)
    results = run_all(cfg, echo)
    return {"input": {"seed": seed, "quick": quick},
            "criteria": [r.to_json() for r in results],
            "all_passed": all(r.passed for r in results)}


# --- rendering -----------------------------------------------------------------

def _render_text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(obj))
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar_text(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        doc = reports[0] if len(reports) == 1 else reports
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return "\n".join("\n".join(_render_text(r)) + "\n" for r in reports)


# --- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=2024, help="seed for randomized checks")
    common.add_argument("--output", help="write the report here instead of stdout")

    batch = argparse.ArgumentParser(add_help=False)
    batch.add_argument("--input", help="JSON file: one item or a list of items")
    batch.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")

    p = argparse.ArgumentParser(prog="fourqubit", description="Exact analysis of 4-qubit states.")
    sub = p.add_subparsers(dest="verb", required=True)
    for verb, what in (("invariants", "H, L, M, N, D, E, F, Gamma, Sigma, Pi"),
                       ("rank", "tensor rank of a 3- or 4-qubit state"),
                       ("classify", "family, Jordan structure, rank and low-rank type")):
        s = sub.add_parser(verb, parents=[common, batch], help=what)
        s.add_argument("states", nargs="*", help="ket expressions")
    s = sub.add_parser("equiv", parents=[common], help="SLOCC* equivalence of two states")
    s.add_argument("states", nargs="*", help="two ket expressions")
    s.add_argument("--input", action="append", default=[],
                   help="state file; may be given twice, or once holding a list of two states")
    s = sub.add_parser("normal-form", parents=[common], help="state of a family at given parameters")
    s.add_argument("--family", type=int, required=True, choices=sorted(FAMILY_PARAM_COUNT))
    s.add_argument("--params", default="", help="comma-separated scalars, e.g. 1,2,3/2,i")
    s = sub.add_parser("orbit-label", parents=[common, batch], help="O_m x O_n canonical block multiset")
    s.add_argument("matrices", nargs="*", help='inline matrix "1,i;0,1" or matrix JSON')
    s = sub.add_parser("weyl", parents=[common], help="F4 Weyl invariants of a point (a,b,c,d)")
    s.add_argument("--point", required=True)
    s.add_argument("--apply", action="append", default=[], metavar="GENERATOR",
                   help=f"apply generators in order; one of {', '.join(WEYL_GENERATORS)}")
    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("--quick", action="store_true", help="reduced trial counts")
    return p


def _map(fn, items, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _dispatch(args) -> tuple[list[dict], int]:
    verb = args.verb
    if verb in ("invariants", "rank", "classify", "orbit-label"):
        fn = {"invariants": invariants_report, "rank": rank_report,
              "classify": classify_report, "orbit-label": orbit_label_report}[verb]
        positional = args.matrices if verb == "orbit-label" else args.states
        return _map(fn, _items(positional, args.input), args.jobs), EXIT_OK
    if verb == "equiv":
        items: list[Any] = list(args.states)
        for path in args.input:
            doc = _read_input(path)
            items.extend(doc if isinstance(doc, list) else [doc])
        if len(items) != 2:
            raise InputError(f"equiv needs exactly two states, got {len(items)}")
        rep = equiv_report(*items)
        code = {"yes": EXIT_OK, "no": EXIT_NOT_EQUIVALENT}.get(rep["equivalent"], EXIT_UNDETERMINED)
        return [rep], code
    if verb == "normal-form":
        return [normal_form_report(args.family, args.params)], EXIT_OK
    if verb == "weyl":
        return [weyl_report(args.point, args.apply)], EXIT_OK
    if verb == "selftest":
        echo = None if args.format == "json" or args.output else (lambda s: print(s, flush=True))
        rep = selftest_report(args.seed, args.quick, echo)
        if echo is not None:
            print("all criteria passed" if rep["all_passed"] else "some criteria FAILED")
            return [], EXIT_OK if rep["all_passed"] else EXIT_INTERNAL
        return [rep], EXIT_OK if rep["all_passed"] else EXIT_INTERNAL
    raise InputError(f"unknown verb {verb}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        reports, code = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InconsistencyError, ArithmeticError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if reports:
        text = render(reports, args.format)
        if args.output:
            try:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as exc:
                print(f"error: cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
                return EXIT_INPUT
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
