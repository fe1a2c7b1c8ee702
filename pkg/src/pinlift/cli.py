"""Command line front end.

    pinlift classify --group sn --shape 3,1
    pinlift table1 --format csv
    pinlift density --max-n 12
    pinlift oracle --shape 3,1,1 --group an

Output is JSON (with a top-level "schema" field) unless --format csv is given.
Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import clifford
from .characters import g_and_h, mn_character, perm_module_triple, skew_syt_count
from .partitions import Partition
from .reps import PermModule, Specht
from .spinoriality import (
    AnIrreducibleLabel,
    classify_an_irreducible,
    classify_an_restriction,
    classify_product,
    classify_sn,
    density_sweep,
)
from .stiefel_whitney import product_obstruction, w1_of, w1_product, w2_of, w2_product
from .tables import (
    TABLE1_HEADER,
    TABLE2_HEADER,
    diff_rows,
    emit_table1,
    emit_table2,
    format_shape,
    golden_rows,
    to_csv,
)

SCHEMA = 1


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _cycle(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad cycle type {text!r}") from exc
    if any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("cycle lengths must be positive")
    return parts


def _emit(args, payload: dict, rows: list[tuple] | None = None, header: tuple | None = None):
    if args.format == "csv":
        if rows is None:
            header = tuple(k for k in payload if k != "schema")
            rows = [tuple(_csv_cell(payload[k]) for k in header)]
        sys.stdout.write(to_csv(header, rows))
    else:
        sys.stdout.write(json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n")


def _csv_cell(value):
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, (list, tuple)):
        return " ".join(map(str, value))
    return value


def _rep(shape: Partition, perm: bool):
    return PermModule(shape) if perm else Specht(shape)


def cmd_classify(args):
    rep = _rep(args.shape, args.perm)
    if args.group == "sn":
        report = classify_sn(rep)
    elif args.group == "an":
        if args.variant:
            if args.perm:
                raise ValueError("--variant applies to Specht modules only")
            report = classify_an_irreducible(AnIrreducibleLabel(args.shape, args.variant))
        else:
            report = classify_an_restriction(rep)
    else:
        if args.shape2 is None:
            raise ValueError("--group product needs --shape2")
        report = classify_product(rep, _rep(args.shape2, args.perm2))
    payload = {"shape": list(args.shape)}
    if args.shape2 is not None and args.group == "product":
        payload["shape2"] = list(args.shape2)
    payload.update(report.to_dict())
    _emit(args, payload)


def cmd_character(args):
    value = mn_character(args.shape, args.cycle_type)
    _emit(args, {"shape": list(args.shape), "cycle_type": list(args.cycle_type), "value": value})


def cmd_skew(args):
    value = skew_syt_count(args.outer, args.inner)
    _emit(args, {"outer": list(args.outer), "inner": list(args.inner), "value": value})


def cmd_perm(args):
    t = perm_module_triple(args.shape)
    g, h = g_and_h(t)
    report = classify_sn(PermModule(args.shape))
    _emit(
        args,
        {
            "shape": list(args.shape),
            "degree": t.degree,
            "at_s1": t.at_s1,
            "at_s1s3": t.at_s1s3,
            "g": g,
            "h": h,
            "chiral": report.chiral,
            "spinorial": report.spinorial,
        },
    )


def cmd_sw(args):
    if args.n is not None and args.n != args.shape.n:
        raise ValueError(f"--n {args.n} does not match |shape| = {args.shape.n}")
    rep = _rep(args.shape, args.perm)
    w2 = w2_of(rep)
    _emit(args, {"shape": list(args.shape), "w1": w1_of(rep).sgn_coef, "w2": list(w2.coords)})


def cmd_sw_product(args):
    left, right = _rep(args.shape, args.perm), _rep(args.shape2, args.perm2)
    a, b = w1_product(left, right)
    w2 = w2_product(left, right)
    obstruction = product_obstruction(left, right)
    _emit(
        args,
        {
            "shape": list(args.shape),
            "shape2": list(args.shape2),
            "w1": [a.sgn_coef, b.sgn_coef],
            "w2": {"left": list(w2.left.coords), "cross": w2.cross, "right": list(w2.right.coords)},
            "obstruction": {
                "left": list(obstruction.left.coords),
                "cross": obstruction.cross,
                "right": list(obstruction.right.coords),
            },
            "spinorial": obstruction.is_zero(),
        },
    )


def cmd_density(args):
    if args.max_n < 4:
        raise ValueError("--max-n must be at least 4")
    rows = []
    for n in range(4, args.max_n + 1):
        count, p_n, frac = density_sweep(n, workers=args.threads)
        rows.append((n, count, p_n, f"{frac.numerator}/{frac.denominator}"))
    header = ("n", "count", "p_n", "fraction")
    if args.format == "json":
        _emit(args, {"rows": [dict(zip(header, r)) for r in rows]})
    else:
        sys.stdout.write(to_csv(header, rows))


def _row_text(row) -> str:
    if row is None:
        return "nothing"
    return ",".join([format_shape(row[0]), *row[1:]])


def _check_golden(computed, name: str) -> int:
    mismatches = diff_rows(computed, golden_rows(name))
    for _, got, want in mismatches:
        print(f"computed {_row_text(got)} but {name} has {_row_text(want)}", file=sys.stderr)
    return 1 if mismatches else 0


def cmd_table1(args):
    rows = [r.as_tuple() for r in emit_table1()]
    if args.format == "json":
        _emit(args, {"rows": [dict(zip(TABLE1_HEADER, r)) for r in rows]})
    else:
        sys.stdout.write(to_csv(TABLE1_HEADER, rows))
    return _check_golden(rows, "table1.csv") if args.check else 0


def cmd_table2(args):
    rows = emit_table2()
    if args.format == "json":
        _emit(args, {"rows": [dict(zip(TABLE2_HEADER, r)) for r in rows]})
    else:
        sys.stdout.write(to_csv(TABLE2_HEADER, rows))
    return _check_golden(rows, "table2.csv") if args.check else 0


def cmd_oracle(args):
    if args.matrices:
        rep = clifford.load_matrices(args.matrices, group=args.group)
    elif args.shape is not None:
        rep = clifford.young_orthogonal_matrices(args.shape)
        if args.group == "an":
            rep = clifford.an_generators(rep)
    else:
        raise ValueError("oracle needs --shape or --matrices")
    verify = clifford.verify_an_lift if rep.group == "an" else clifford.verify_sn_lift
    result = verify(rep, exhaustive=args.exhaustive, tol=args.tolerance)
    payload = {"group": rep.group, "n": rep.n, "degree": rep.degree}
    if args.shape is not None:
        payload["shape"] = list(args.shape)
    payload.update(result.to_dict())
    _emit(args, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pinlift", description=__doc__.split("\n")[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv"), default=None, help="default: json (csv for density)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[fmt], help="spinoriality of a Specht or permutation module")
    p.add_argument("--group", choices=("sn", "an", "product"), default="sn")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--shape2", type=_shape)
    p.add_argument("--perm", action="store_true", help="use the permutation module of --shape")
    p.add_argument("--perm2", action="store_true", help="use the permutation module of --shape2")
    p.add_argument("--variant", choices=("plus", "minus", "restriction"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("character", parents=[fmt], help="chi_shape at a cycle type")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--cycle-type", type=_cycle, required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("skew", parents=[fmt], help="number of SYT of shape outer/inner")
    p.add_argument("--outer", type=_shape, required=True)
    p.add_argument("--inner", type=_shape, default=Partition())
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("perm", parents=[fmt], help="character triple of a permutation module")
    p.add_argument("--shape", type=_shape, required=True)
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("sw", parents=[fmt], help="w1 and w2 in the basis {e_cup, w2(pi_n)}")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--perm", action="store_true")
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("sw-product", parents=[fmt], help="Stiefel-Whitney classes of an external product")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--shape2", type=_shape, required=True)
    p.add_argument("--perm", action="store_true")
    p.add_argument("--perm2", action="store_true")
    p.set_defaults(func=cmd_sw_product)

    p = sub.add_parser("density", parents=[fmt], help="fraction of achiral spinorial irreducibles")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_density)

    for name, func, help_ in (
        ("table1", cmd_table1, "chirality and spinoriality for 2 <= n <= 6"),
        ("table2", cmd_table2, "split real irreducibles of A_n, 3 <= n <= 15"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("--check", action="store_true", help="compare with the bundled transcription")
        p.set_defaults(func=func)

    p = sub.add_parser("oracle", parents=[fmt], help="Clifford-algebra lift search")
    p.add_argument("--shape", type=_shape)
    p.add_argument("--group", choices=("sn", "an"), default="sn")
    p.add_argument("--matrices", help='JSON file {"n": int, "generators": [[[row], ...], ...]}')
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--tolerance", type=float, default=clifford.RELATION_TOL)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = "csv" if args.command == "density" else "json"
    try:
        status = args.func(args)
    except (ValueError, OSError) as exc:
        json.dump({"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
