"""Command-line front end.

Every subcommand reads JSON and writes deterministic JSON to ``--out`` or
stdout. Exit codes: 0 success, 1 invalid input, 2 failed exact check,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import fixtures, generify, kummer, serialize, singular, zvk
from .braid import BraidWord
from .errors import OracleMismatchError, ResourceLimitError, ValidationError
from .factorization import (
    Factorization,
    apply_moves,
    conjugate_all,
    infinity_braid,
    is_generic,
)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3


def _emit(obj: Any, out: str | None) -> None:
    text = serialize.dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _int_csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ValidationError(f"expected a comma separated list of integers, got {text!r}") from exc


def _factorization(path: str) -> Factorization:
    return serialize.factorization_from_json(serialize.load(path))


# ------------------------------------------------------------------ commands


def cmd_lift(args: argparse.Namespace) -> int:
    f = _factorization(args.input)
    spec = kummer.LiftSpec(args.n, f.strands - 1, args.system)
    if not f.marked:
        f = Factorization(f.strands, f.entries, True, f.labels)
    if args.infinity:
        result: Any = kummer.kummer_infinity_braid(spec, f, args.letters)
    else:
        result = kummer.lift_factorization(spec, f, args.letters, forget=args.forget)
    _emit(result, args.out)
    return EXIT_OK


def cmd_hurwitz(args: argparse.Namespace) -> int:
    _emit(apply_moves(_factorization(args.input), _int_csv(args.moves)), args.out)
    return EXIT_OK


def cmd_conjugate(args: argparse.Namespace) -> int:
    f = _factorization(args.input)
    _emit(conjugate_all(f, BraidWord.parse(args.by, f.strands)), args.out)
    return EXIT_OK


def cmd_generify(args: argparse.Namespace) -> int:
    side = serialize.load(args.spec)
    if not isinstance(side, dict):
        raise ValidationError("the decomposition sidecar must be a JSON object")
    if args.rule == "arrangement":
        n = side.get("n")
        if not isinstance(n, int):
            raise ValidationError("arrangement sidecar needs an integer n")
        entries = tuple(
            generify.ArrangementEntry(
                serialize.braid_from_json(e["tau"], n),
                serialize.braid_from_json(e["beta"], n),
                tuple(e["partition"]),
            )
            for e in side.get("entries", [])
        )
        inp = generify.ArrangementInput(n, entries, tuple(side.get("vertical", [])))
        result = generify.arrangement_generify(
            inp,
            side.get("order", "descending"),
            bool(side.get("vertical_twist", True)),
        )
        _emit(result, args.out)
        return EXIT_OK
    if not args.input:
        raise ValidationError(f"rule {args.rule} needs --in")
    f = _factorization(args.input)
    index = side.get("index")
    if not isinstance(index, int):
        raise ValidationError("sidecar needs an integer 1-based index")
    if args.rule == "local-split":
        parts = [serialize.braid_from_json(p, f.strands) for p in side.get("parts", [])]
        result = generify.split_locally_generic(f, index, parts)
    else:
        eta = side.get("eta")
        model = generify.TangencyModel(
            args.rule,
            a=side.get("a", 1),
            eta=serialize.braid_from_json(eta, f.strands) if eta is not None else None,
            m=side.get("m", 3),
        )
        result = generify.replace_tangency(f, index, model)
    _emit(result, args.out)
    return EXIT_OK


def cmd_zvk(args: argparse.Namespace) -> int:
    f = _factorization(args.input)
    if args.variant == "affine":
        p = zvk.presentation_affine(f)
    elif args.variant == "horizontal":
        p = zvk.presentation_fully_horizontal(f, _int_csv(args.kept or ""))
    elif args.variant == "projective":
        p = zvk.presentation_projective(f)
    else:
        p = zvk.presentation_generic(f, projective=not args.affine)
    _emit(p, args.out)
    return EXIT_OK


def cmd_abelianize(args: argparse.Namespace) -> int:
    p = serialize.presentation_from_json(serialize.load(args.input))
    _emit({"invariants": zvk.abelianize(p)}, args.out)
    return EXIT_OK


def cmd_simplify(args: argparse.Namespace) -> int:
    p = serialize.presentation_from_json(serialize.load(args.input))
    _emit(zvk.tietze_simplify(p, args.budget), args.out)
    return EXIT_OK


def cmd_singular(args: argparse.Namespace) -> int:
    if args.kind == "realcubic":
        if len(args.values) != 3:
            raise ValidationError("realcubic needs exactly three coefficients a1 a2 a3")
        try:
            a = [Fraction(v) for v in args.values]
        except ValueError as exc:
            raise ValidationError(f"coefficients must be rationals: {exc}") from exc
        b = singular.real_part_cubic(*a)
        _emit({"coefficients": [str(x) for x in b]}, args.out)
        return EXIT_OK
    if args.n is None or args.data is None:
        raise ValidationError(f"singular {args.kind} needs --n and --data")
    data = serialize.local_data_from_json(serialize.load(args.data))
    fn = singular.transform_type1 if args.kind == "type1" else singular.transform_type0
    _emit(fn(args.n, data), args.out)
    return EXIT_OK


def cmd_example(args: argparse.Namespace) -> int:
    if args.list:
        _emit({"pipelines": fixtures.pipeline_names()}, None)
        return EXIT_OK
    if not args.name:
        raise ValidationError("example needs a pipeline name (see --list)")
    report = fixtures.run_pipeline(args.name, strict=False)
    if args.report:
        Path(args.report).write_text(serialize.dumps(report.to_dict()))
    _emit(report.result, args.out)
    for c in report.checks:
        if not c.passed:
            tag = "FAIL" if c.hard else "diff"
            print(f"{tag}: {c.name}: {c.detail}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    f = _factorization(args.input)
    if args.generic:
        ok = is_generic(f)
        _emit({"generic": ok, "exponent_sum": f.exponent_sum(),
               "infinity": serialize.to_json(infinity_braid(f))}, args.out)
        if not ok:
            print("pseudo-Coxeter element is not the full twist", file=sys.stderr)
            return EXIT_MISMATCH
        return EXIT_OK
    _emit({"strands": f.strands, "entries": len(f), "exponent_sum": f.exponent_sum()}, args.out)
    return EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidmono",
        description="Braid monodromy factorizations, Kummer lifts and fundamental groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        p.add_argument("--in", dest="input", required=needs_input, help="input JSON file")
        p.add_argument("--out", help="output JSON file (default: stdout)")

    p = sub.add_parser("lift", help="lift an extended monodromy through the n-fold cover")
    io(p)
    p.add_argument("--n", type=int, required=True, help="cover degree")
    p.add_argument("--system", choices=kummer.SYSTEMS, default="circular",
                   help="generator system on the cover")
    p.add_argument("--letters", choices=("artin", "native"), default="artin",
                   help="write output in circular generators or in the system's own")
    p.add_argument("--forget", action="store_true", help="delete the fixed strand")
    p.add_argument("--infinity", action="store_true",
                   help="output only the lifted braid at infinity")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("hurwitz", help="apply signed Hurwitz moves")
    io(p)
    p.add_argument("--moves", required=True, help="e.g. '2,-3,4': i is hur_i, -i its inverse")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("conjugate", help="conjugate every entry by a braid")
    io(p)
    p.add_argument("--by", required=True, help="braid in text form, e.g. 's5 s3'")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("generify", help="apply a product-preserving generification rule")
    io(p, needs_input=False)
    p.add_argument("--rule", required=True,
                   choices=("cusp", "node", "inflection", "local-split", "arrangement"))
    p.add_argument("--spec", required=True, help="JSON sidecar describing the decomposition")
    p.set_defaults(func=cmd_generify)

    p = sub.add_parser("zvk", help="fundamental-group presentation from a factorization")
    io(p)
    p.add_argument("--variant", required=True,
                   choices=("affine", "horizontal", "projective", "generic"))
    p.add_argument("--kept", help="horizontal variant: 1-based entries keeping a line generator")
    p.add_argument("--affine", action="store_true",
                   help="generic variant: omit the relation at infinity")
    p.set_defaults(func=cmd_zvk)

    p = sub.add_parser("abelianize", help="invariant factors of a presentation")
    io(p)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("simplify", help="deterministic Tietze simplification")
    io(p)
    p.add_argument("--budget", type=int, default=100, help="maximum number of moves")
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("singular", help="local invariants under the cover")
    p.add_argument("kind", choices=("type1", "type0", "realcubic"))
    p.add_argument("values", nargs="*", help="realcubic: a1 a2 a3 as rationals")
    p.add_argument("--n", type=int, help="cover degree")
    p.add_argument("--data", help="local point data JSON")
    p.add_argument("--out", help="output JSON file (default: stdout)")
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("example", help="run a worked-example pipeline")
    p.add_argument("name", nargs="?", help="pipeline name, e.g. zariski-sextic or smooth(n=4)")
    p.add_argument("--list", action="store_true", help="list pipeline names")
    p.add_argument("--report", help="write the check report as JSON")
    p.add_argument("--out", help="output JSON file for the final factorization")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("verify", help="check a factorization")
    io(p)
    p.add_argument("--generic", action="store_true",
                   help="require the pseudo-Coxeter element to be the full twist")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OracleMismatchError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (KeyError, TypeError) as exc:
        print(f"invalid input: malformed JSON field {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
