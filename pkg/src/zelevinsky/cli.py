"""Command line interface.

Every command prints a JSON report.  Exit codes: 0 success (the verdict is in
the report), 2 bad input, 3 a cross-check failed (always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import Multisegment, langlands_sort, segment_sign
from .cosets import build_w, check_modulus_identity, enumerate_S
from .distinction import check_conj_selfdual_necessary, classify
from .dsl import SourceFile, parse
from .errors import InputError, InvariantFailure, NotConjugateSelfDual, NotGeneric
from .fuzz import run_fuzz
from .galois import (
    bc_exists,
    decompose,
    decompose_condition_A_witness,
    eta,
    is_conjugate_orthogonal,
    main_theorem_check,
    to_wd,
)
from .generic import is_generic
from .jacquet import jacquet

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class CrossCheckFailed(Exception):
    def __init__(self, report: dict):
        super().__init__("cross-check failed")
        self.report = report


def _int_list(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return parts


def _load(args) -> tuple[SourceFile, Multisegment, str]:
    raw = sys.stdin.buffer.read() if args.file == "-" else Path(args.file).read_bytes()
    sf = parse(raw)
    name = args.pi
    if name is None:
        if len(sf.bindings) != 1:
            raise InputError(f"--pi is required when the file has {len(sf.bindings)} bindings")
        name = sf.bindings[0].name
    return sf, sf.multisegment(name), name


def _segments(pi: Multisegment) -> list[dict]:
    return [
        {"index": i, "segment": str(s), "degree": s.ambient_degree, "sign": segment_sign(s)}
        for i, s in enumerate(pi.segments)
    ]


def cmd_classify(args) -> dict:
    _, pi, name = _load(args)
    verdict, witness = classify(pi, args.mode)
    return {
        "pi": name,
        "mode": args.mode,
        "verdict": verdict,
        "witness": witness.as_dict() if witness else None,
        "generic": True,
        "diagnostics": {
            "segments": _segments(pi),
            "langlands_order": [str(s) for s in langlands_sort(pi)],
            "conjugate_self_dual": check_conj_selfdual_necessary(pi),
        },
    }


def cmd_generic(args) -> dict:
    _, pi, name = _load(args)
    verdict, link = is_generic(pi)
    return {"pi": name, "verdict": verdict, "witness": link.as_dict() if link else None, "segments": _segments(pi)}


def cmd_jacquet(args) -> dict:
    _, pi, name = _load(args)
    if len(pi) != 1:
        raise InputError(f"jacquet needs a single-segment pi, {name} has {len(pi)} segments")
    result = jacquet(pi[0], args.partition)
    return {"pi": name, "segment": str(pi[0]), "partition": list(args.partition), **result.as_dict()}


def cmd_cosets(args) -> dict:
    entries = []
    for S in enumerate_S(args.partition):
        datum = build_w(S)
        check = check_modulus_identity(S)
        entries.append(
            {
                "S": [list(row) for row in S.entries],
                "t": list(datum.t),
                "d": list(datum.d),
                "w": list(datum.w),
                "cases": list(datum.cases),
                "levi_shape": {
                    "h_factors": list(datum.levi_shape.h_factors),
                    "gl_factors": [list(f) for f in datum.levi_shape.gl_factors],
                },
                "modulus_ok": bool(check),
                "modulus": check.as_dict(),
            }
        )
        if not check:
            raise CrossCheckFailed({"partition": list(args.partition), "cosets": entries})
    return {"partition": list(args.partition), "count": len(entries), "cosets": entries}


def cmd_bc(args) -> dict:
    _, pi, name = _load(args)
    M = to_wd(pi)
    try:
        dec = decompose(M).as_dict()
    except NotConjugateSelfDual:
        dec = None
    return {
        "pi": name,
        "dimension": M.dimension,
        "verdict": bc_exists(M),
        "conjugate_orthogonal": is_conjugate_orthogonal(M),
        "decomposition": dec,
    }


def cmd_eta(args) -> dict:
    _, pi, name = _load(args)
    M = to_wd(pi)
    report = eta(M)
    return {"pi": name, **report.as_dict(), "decomposition": decompose(M).as_dict()}


def cmd_check_main(args) -> dict:
    _, pi, name = _load(args)
    check = main_theorem_check(pi)
    report = {"pi": name, **check.as_dict()}
    if check.A:
        report["grouping"] = decompose_condition_A_witness(pi).as_dict()
    if not check.consistent:
        raise CrossCheckFailed(report)
    return report


def cmd_fuzz(args) -> dict:
    report = run_fuzz(args.trials, args.seed, args.max_r, args.max_l, even=args.even, jobs=args.jobs)
    if not report["ok"]:
        raise CrossCheckFailed(report)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zelevinsky", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--pi", help="binding to use (optional if the file has exactly one)")
        p.set_defaults(func=func)
        return p

    p = with_input("classify", cmd_classify, "decide GL_n(F)- or GL_m(D)-distinction")
    p.add_argument("--mode", choices=("gl", "h"), required=True)
    with_input("generic", cmd_generic, "decide genericity")
    p = with_input("jacquet", cmd_jacquet, "Jacquet module of a single segment")
    p.add_argument("--partition", type=_int_list, required=True)
    with_input("bc", cmd_bc, "unstable base change existence")
    with_input("eta", cmd_eta, "component group character")
    with_input("check-main", cmd_check_main, "check that (A) implies (B)")

    p = sub.add_parser("cosets", help="double coset data for a partition")
    p.add_argument("--partition", type=_int_list, required=True)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("fuzz", help="seeded random cross-checks")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-r", type=int, default=6)
    p.add_argument("--max-l", type=int, default=4)
    p.add_argument("--even", action="store_true", help="only even total degree instances")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)
    return parser


def _emit(report: dict, output: str | None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    head = {"command": args.command, "version": __version__}
    try:
        report = args.func(args)
    except CrossCheckFailed as exc:
        _emit({**head, **exc.report, "error": {"type": "CrossCheckFailed"}}, args.output)
        return EXIT_INVARIANT
    except InvariantFailure as exc:
        _emit({**head, "error": {"type": type(exc).__name__, "message": str(exc)}}, args.output)
        return EXIT_INVARIANT
    except (InputError, OSError) as exc:
        error = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, NotGeneric) and exc.witness is not None:
            error["witness"] = exc.witness.as_dict()
        _emit({**head, "error": error}, args.output)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit({**head, **report}, args.output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
