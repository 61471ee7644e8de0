"""Command-line interface: construct crystals, compute Demazure sets, and run
the verification suites.

Exit codes: 0 on success, 1 when a verification suite reports a failure,
2 on usage errors (unknown type, malformed or non-dominant lambda,
non-reduced word, unknown suite).
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import cartan_matrix, enumerate_weyl, SUPPORTED_TYPES
from .binf import CapacityError, b_inf
from .blambda import BLambdaCrystal, b_lambda, char_map
from .charring import render_polynomial, render_weight
from .demazure import (
    CheckReport,
    STRUCTURAL_STATEMENTS,
    binf_consistency_check,
    braid_witness_search,
    demazure_blambda,
    demazure_sum,
    refined_formula_check,
    string_property_check,
    structural_check,
    word_independence_check,
)
from .grids import GRID_TYPES, grid_lambdas, star_depth

SCHEMA = "demazure/1"


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed {what} {text!r}; expected comma-separated integers")


def _get_crystal(type_label: str, lam_text: str) -> BLambdaCrystal:
    data = cartan_matrix(type_label)
    lam = _parse_ints(lam_text, "lambda")
    if len(lam) != data.rank:
        raise ValueError(f"lambda needs {data.rank} coordinates for {type_label}")
    if any(x < 0 for x in lam):
        raise ValueError(f"lambda {lam} is not dominant")
    return b_lambda(type_label, lam)


def _parse_word(type_label: str, word_text: str) -> tuple[int, ...]:
    data = cartan_matrix(type_label)
    word = _parse_ints(word_text, "word")
    for i in word:
        if i not in data.colors:
            raise ValueError(f"word letter {i} outside the index set of {type_label}")
    return word


def _element_name(crystal: BLambdaCrystal, x) -> str:
    word = crystal.peel(x)
    if not word:
        return "u"
    return " ".join(f"f{j}" for j in word) + " · u"


def _sorted_elements(crystal: BLambdaCrystal, members):
    return sorted(members, key=crystal.sort_key)


def _crystal_payload(crystal: BLambdaCrystal) -> dict:
    elements = _sorted_elements(crystal, crystal.generate())
    names = {x: _element_name(crystal, x) for x in elements}
    edges = []
    for x in elements:
        for i in crystal.cartan.colors:
            y = crystal.f(i, x)
            if y is not None:
                edges.append({"from": names[x], "to": names[y], "color": i})
    return {
        "schema": SCHEMA,
        "type": crystal.cartan.type_label,
        "lambda": list(crystal.lam),
        "elements": [
            {
                "name": names[x],
                "word": list(crystal.peel(x)),
                "weight": list(crystal.wt(x)),
                "eps": [crystal.eps(i, x) for i in crystal.cartan.colors],
                "phi": [crystal.phi(i, x) for i in crystal.cartan.colors],
            }
            for x in elements
        ],
        "edges": edges,
    }


def _render_dot(payload: dict) -> str:
    lines = ["digraph crystal {"]
    for entry in payload["elements"]:
        weight = ",".join(str(v) for v in entry["weight"])
        lines.append(f'  "{entry["name"]}" [label="{entry["name"]}\\n({weight})"];')
    for edge in payload["edges"]:
        lines.append(f'  "{edge["from"]}" -> "{edge["to"]}" [label="{edge["color"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_crystal(args) -> int:
    crystal = _get_crystal(args.type, args.lam)
    payload = _crystal_payload(crystal)
    if args.format == "json":
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    elif args.format == "dot":
        _emit(_render_dot(payload), args.out)
    else:
        lines = [
            f'{entry["name"]}\twt={render_weight(tuple(entry["weight"]))}'
            for entry in payload["elements"]
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_demazure(args) -> int:
    crystal = _get_crystal(args.type, args.lam)
    word = _parse_word(args.type, args.word)
    group = enumerate_weyl(crystal.cartan)
    if not group.is_reduced(word):
        raise ValueError(f"word {word} is not reduced")
    dem = demazure_blambda(crystal, word)
    character = char_map(crystal, demazure_sum(dem))
    report = refined_formula_check(crystal, word)
    members = _sorted_elements(crystal, dem.members)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "type": args.type,
            "lambda": list(crystal.lam),
            "word": list(word),
            "size": len(dem),
            "members": [_element_name(crystal, x) for x in members],
            "character": [
                {"weight": list(mu), "coeff": c}
                for mu, c in sorted(character.items())
            ],
            "eq4": report.passed,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [f"size {len(dem)}", "members:"]
        lines.extend(f"  {_element_name(crystal, x)}" for x in members)
        lines.append(f"character: {render_polynomial(character)}")
        lines.append(f"eq4: {'pass' if report.passed else 'FAIL'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def _suite_grid(args):
    types = [args.type] if args.type else list(GRID_TYPES)
    for type_label in types:
        if type_label not in SUPPORTED_TYPES:
            raise ValueError(f"unsupported type {type_label!r}")
        lambdas = (
            [_parse_ints(args.lam, "lambda")] if args.lam else list(grid_lambdas(type_label))
        )
        yield type_label, lambdas


def _words_for(args, type_label, max_length=None):
    if args.word:
        return [_parse_word(type_label, args.word)]
    group = enumerate_weyl(cartan_matrix(type_label))
    words = []
    for w in group:
        if max_length is not None and w.length > max_length:
            continue
        words.append(w.canonical_word)
    return words


def _all_reduced_words(args, type_label):
    if args.word:
        return [_parse_word(type_label, args.word)]
    group = enumerate_weyl(cartan_matrix(type_label))
    words = []
    for w in group:
        words.extend(sorted(group.reduced_words(w)))
    return words


def _run_eq4(args):
    for type_label, lambdas in _suite_grid(args):
        words = _all_reduced_words(args, type_label)
        for lam in lambdas:
            crystal = b_lambda(type_label, tuple(lam))
            for word in words:
                yield refined_formula_check(crystal, word)


def _run_strings(args):
    for type_label, lambdas in _suite_grid(args):
        words = _all_reduced_words(args, type_label)
        for lam in lambdas:
            crystal = b_lambda(type_label, tuple(lam))
            for word in words:
                yield string_property_check(crystal, word)


def _run_words(args):
    for type_label, lambdas in _suite_grid(args):
        group = enumerate_weyl(cartan_matrix(type_label))
        for lam in lambdas:
            crystal = b_lambda(type_label, tuple(lam))
            for w in group:
                yield word_independence_check(crystal, w)


def _run_iota(args):
    for type_label, lambdas in _suite_grid(args):
        depth = args.depth or star_depth(type_label)
        for lam in lambdas:
            crystal = b_lambda(type_label, tuple(lam))
            for word in _words_for(args, type_label, max_length=3):
                yield binf_consistency_check(crystal, word, depth)


def _run_psi(args):
    types = [args.type] if args.type else list(GRID_TYPES)
    for type_label in types:
        depth = args.depth or star_depth(type_label)
        yield structural_check("PSI", b_inf(type_label), depth=depth)


def _run_statement(statement):
    def run(args):
        types = [args.type] if args.type else list(GRID_TYPES)
        for type_label in types:
            depth = args.depth or star_depth(type_label)
            realization = b_inf(type_label)
            if statement in ("LEM31", "LEM34"):
                yield structural_check(statement, realization, depth=depth)
            else:
                for word in _words_for(args, type_label, max_length=3):
                    yield structural_check(statement, realization, depth=depth, word=word)

    return run


def _run_star(args):
    """Involution identities on the truncated infinity crystal."""
    types = [args.type] if args.type else list(GRID_TYPES)
    for type_label in types:
        depth = args.depth or star_depth(type_label)
        realization = b_inf(type_label)
        params = {"type": type_label, "depth": depth}
        witness = None
        for b in sorted(realization.generate(depth), key=realization.sort_key):
            sb = realization.star(b)
            if realization.star(sb) != b:
                witness = f"involution fails at {b!r}"
                break
            if realization.wt(sb) != realization.wt(b):
                witness = f"weight not preserved at {b!r}"
                break
            if b.depth < depth:
                for i in realization.cartan.colors:
                    if realization.star(realization.f(i, b)) != realization.f_star(i, sb):
                        witness = f"twisted lowering fails at {b!r}, color {i}"
                        break
                if witness:
                    break
        yield CheckReport("STAR", params, witness is None, witness)


def _run_braid(args):
    for type_label, lambdas in _suite_grid(args):
        data = cartan_matrix(type_label)
        if data.rank < 2:
            continue
        for lam in lambdas:
            crystal = b_lambda(type_label, tuple(lam))
            for i in data.colors:
                for j in data.colors:
                    if i < j:
                        yield braid_witness_search(crystal, i, j)


SUITES = {
    "eq4": _run_eq4,
    "strings": _run_strings,
    "words": _run_words,
    "iota": _run_iota,
    "psi": _run_psi,
    "star": _run_star,
    "braid": _run_braid,
}
for _name in STRUCTURAL_STATEMENTS:
    if _name != "PSI":
        SUITES[_name.lower()] = _run_statement(_name)

DEFAULT_SUITES = (
    "eq4",
    "strings",
    "words",
    "iota",
    "psi",
    "star",
    "lem31",
    "thm32",
    "cor33",
    "lem34",
    "thm35",
    "thm35r",
    "p3",
    "braid",
)


def cmd_verify(args) -> int:
    names = []
    for chunk in args.suite or list(DEFAULT_SUITES):
        names.extend(part for part in chunk.split(",") if part)
    if not names:
        raise ValueError("no suites selected")
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    reports: list[tuple[str, CheckReport]] = []
    for name in names:
        for report in SUITES[name](args):
            reports.append((name, report))
    failed = [(name, r) for name, r in reports if not r.passed]
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "reports": [
                {
                    "suite": name,
                    "statement": r.statement,
                    "params": {k: str(v) for k, v in r.params.items()},
                    "passed": r.passed,
                    "witness": r.witness,
                }
                for name, r in reports
            ],
            "passed": not failed,
        }
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = []
        for name, r in reports:
            tag = "PASS" if r.passed else "FAIL"
            detail = "" if r.passed else f"  witness: {r.witness}"
            pretty = " ".join(f"{k}={v}" for k, v in r.params.items())
            lines.append(f"[{tag}] {name} {r.statement} {pretty}{detail}")
        lines.append(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
        _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demazure-crystals",
        description="Exact crystal combinatorics: construction, Demazure sets, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_crystal = sub.add_parser("crystal", help="generate a highest-weight crystal")
    p_crystal.add_argument("--type", required=True, help=f"one of {', '.join(SUPPORTED_TYPES)}")
    p_crystal.add_argument("--lambda", dest="lam", required=True, help="dominant weight, e.g. 1,0")
    p_crystal.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p_crystal.add_argument("--out", help="write output to a file instead of stdout")
    p_crystal.set_defaults(func=cmd_crystal)

    p_dem = sub.add_parser("demazure", help="compute a Demazure subset and its character")
    p_dem.add_argument("--type", required=True)
    p_dem.add_argument("--lambda", dest="lam", required=True)
    p_dem.add_argument("--word", required=True, help="reduced word, e.g. 1,2,1")
    p_dem.add_argument("--format", choices=("text", "json"), default="text")
    p_dem.add_argument("--out")
    p_dem.set_defaults(func=cmd_demazure)

    p_verify = sub.add_parser("verify", help="run verification suites over the grid")
    p_verify.add_argument(
        "--suite",
        action="append",
        help=f"suites to run (repeatable or comma-separated); known: {', '.join(sorted(SUITES))}",
    )
    p_verify.add_argument("--type")
    p_verify.add_argument("--lambda", dest="lam")
    p_verify.add_argument("--word")
    p_verify.add_argument("--depth", type=int)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
