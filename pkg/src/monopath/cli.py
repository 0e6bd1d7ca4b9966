"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import arrangements, coherence, geometry, subdivisions, verify
from .errors import CapExceeded, MonopathError, UnsupportedDimension
from .words import (
    Composition,
    LambdaWord,
    coherent_count_formula,
    enumerate_words,
    is_non_nesting,
    multinomial_count,
    nesting_count,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"cap must be positive, got {value}")
    return value


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _rat(v):
    return [str(x) for x in v]


def _lam(args, required=True):
    if args.lam is None:
        if required:
            raise UsageError("--lambda is required")
        return None
    return Composition.parse(args.lam)


def _word(args):
    if args.word is None:
        raise UsageError("--word is required")
    return LambdaWord.parse(args.word, _lam(args, required=False))


def cmd_count(args):
    lam = _lam(args)
    return {
        "lambda": list(lam.parts),
        "multinomial": multinomial_count(lam),
        "coherent": coherent_count_formula(lam),
        "regions": arrangements.region_count(lam),
        "charpoly": arrangements.char_poly_closed(lam),
    }


def _certificate(result):
    return [str(c) for c in result.certificate] if result.certificate else None


def cmd_check(args):
    if args.partition is not None:
        rho = subdivisions.OrderedPartition.parse(args.partition, _lam(args, required=False))
        verdict = coherence.is_coherent_subdivision(rho)
        out = {"partition": str(rho), "lambda": list(rho.composition.parts),
               "coherent": verdict.coherent}
        if verdict.coherent:
            out["dimension"] = verdict.dimension
            out["witness"] = _rat(verdict.result.witness)
        else:
            out["certificate"] = _certificate(verdict.result)
        return out
    w = _word(args)
    verdict = coherence.is_coherent_path(w)
    out = {"word": str(w), "lambda": list(w.composition.parts), "coherent": verdict.coherent,
           "nestings": nesting_count(w)}
    if verdict.coherent:
        out["witness"] = _rat(verdict.functional.aprime)
        out["functional"] = _rat(verdict.functional.coefficients())
    else:
        out["certificate"] = _certificate(verdict.result)
    return out


def cmd_vertices(args):
    lam = _lam(args)
    rows = []
    for w in enumerate_words(lam, args.cap):
        if is_non_nesting(w):
            rows.append({"word": str(w), "I": _rat(geometry.word_integral(w))})
    return rows


def cmd_enumerate(args):
    lam = _lam(args)
    return [{"word": str(w), "non_nesting": is_non_nesting(w)} for w in enumerate_words(lam, args.cap)]


def cmd_incoherency(args):
    if args.word is not None:
        w = _word(args)
        return {"word": str(w), "incoherency": subdivisions.incoherency(w, args.cap),
                "nestings": nesting_count(w)}
    lam = _lam(args)
    table = subdivisions.incoherency_table(lam, args.cap)
    best = max(table.values())
    return {"lambda": list(lam.parts), "maximum": best,
            "attainers": [",".join(map(str, t)) for t in sorted(t for t, v in table.items() if v == best)]}


def cmd_coset(args):
    if args.word is not None:
        label = arrangements.coset_map(_word(args))
        return {"representative": list(label.representative), "modulus": label.modulus,
                "canonical": list(label.canonical())}
    lam = _lam(args)
    return {"lambda": list(lam.parts), "bijection": arrangements.verify_coset_bijection(lam, args.cap)}


def cmd_zonotope(args):
    lam = _lam(args)
    spec = geometry.zonotope_generators(lam, args.s)
    return {
        "lambda": list(lam.parts),
        "s": str(spec.s),
        "scale": str(spec.scale),
        "generators": [
            {"label": list(lab) if lab else None, "vector": _rat(g)}
            for g, lab in zip(spec.generators, spec.labels)
        ],
    }


def cmd_plot(args):
    from .plot import plot_slice

    return plot_slice(_lam(args), window=args.window)


def cmd_verify(args):
    name = args.suite
    if name not in verify.SUITES and name not in ("all", "prop51"):
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(sorted(verify.SUITES))}, all")
    checks = verify.run_suite("incoherency" if name == "prop51" else name)
    return {"suite": name, "passed": all(c.passed for c in checks),
            "checks": [c.as_dict() for c in checks]}


COMMANDS = {
    "count": cmd_count,
    "check": cmd_check,
    "vertices": cmd_vertices,
    "enumerate": cmd_enumerate,
    "incoherency": cmd_incoherency,
    "coset": cmd_coset,
    "zonotope": cmd_zonotope,
    "plot": cmd_plot,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lambda", dest="lam", metavar="A,B,C", help="composition, e.g. 2,2,2")
    common.add_argument("--word", help="lambda-permutation, e.g. 1,2,1 or 121")
    common.add_argument("--partition", help="ordered partition, e.g. 1|1,2|2|1,2|1")
    common.add_argument("--cap", type=_positive_int, help="cap on word length for exhaustive work")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "svg"), default=None)

    parser = argparse.ArgumentParser(prog="monopath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "zonotope":
            p.add_argument("--s", type=int, default=None, help="length of the vertical summand")
        if name == "plot":
            p.add_argument("--window", type=float, default=4.0)
        if name == "verify":
            p.add_argument("suite")
    return parser


def _render(result, fmt):
    if fmt == "svg":
        if not isinstance(result, str):
            raise UsageError("svg output is only available for plot")
        return result
    if isinstance(result, str):
        if fmt not in (None, "svg"):
            raise UsageError("plot only writes svg")
        return result
    if fmt == "csv":
        if not (isinstance(result, list) and result and isinstance(result[0], dict)):
            raise UsageError("csv output is only available for list-valued commands")
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(result[0]), lineterminator="\n")
        writer.writeheader()
        for row in result:
            writer.writerow({k: " ".join(v) if isinstance(v, list) else v for k, v in row.items()})
        return buf.getvalue()
    return _dumps(result)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
        text = _render(result, args.format)
    except CapExceeded as exc:
        print(f"monopath: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError, UnsupportedDimension, MonopathError) as exc:
        print(f"monopath: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
