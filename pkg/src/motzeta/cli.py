"""Command-line interface.

    motzeta compute {poincare|zeta|mv|nearby|mv-at-least} --input FILE ...
    motzeta verify {identity|unit|hadamard|ell|suite} [--input FILE] ...
    motzeta list-examples

`--input` accepts either a path to a JSON document or the name of a built-in
example.  Exit codes: 0 success / verification passed, 1 verification failed,
2 malformed input or validation error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import examples, io, verify
from .calculus import (motivic_volume, mv_at_least, nearby_cycles,
                       poincare_series, zeta_series)
from .errors import InputError, MotzetaError
from .resolution import validate
from .ring import euler_specialization


def _load_document(name: str):
    if os.path.exists(name):
        return io.load_path(name)
    if name in examples.REGISTRY:
        return examples.REGISTRY[name].document
    raise InputError(f"--input {name!r} is neither a file nor a built-in example")


def _parse_coeff_range(text: str):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InputError(f"--coeffs expects N1..N2, got {text!r}")
    if lo < 1 or hi < lo:
        raise InputError(f"--coeffs range {text!r} must satisfy 1 <= N1 <= N2")
    return lo, hi


def _parse_ell(text: str):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--ell expects a,b with integers, got {text!r}")
    return a, b


def _require_data_document(doc, what: str) -> io.DataDocument:
    if not isinstance(doc, io.DataDocument):
        raise InputError(f"{what} needs resolution data, got a "
                         f"{type(doc).__name__} document")
    return doc


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _run_compute(args) -> int:
    doc = _require_data_document(_load_document(args.input), f"compute {args.what}")
    data, gauge = doc.data, doc.gauge
    report = validate(data)
    if not report.ok:
        raise InputError("invalid resolution data:\n" + report.render())

    specialize = None
    if args.specialize == "euler":
        specialize = euler_specialization(doc.chi, missing_policy="error")

    def render(cls):
        if specialize is not None:
            return specialize.apply(cls).render()
        return cls.render()

    if args.what in ("poincare", "zeta"):
        series = (poincare_series(data, gauge) if args.what == "poincare"
                  else zeta_series(data))
        lo, hi = _parse_coeff_range(args.coeffs) if args.coeffs else (1, 10)
        lines = [f"T^{n}: {render(series.coefficient(n))}" for n in range(lo, hi + 1)]
        _emit("\n".join(lines), args.output)
        return 0
    if args.what == "mv":
        result = motivic_volume(data, gauge)
    elif args.what == "nearby":
        result = nearby_cycles(data)
    else:  # mv-at-least
        if args.gamma is None:
            raise InputError("compute mv-at-least requires --gamma")
        gamma = io.parse_gamma(args.gamma, "--gamma")
        ell = _parse_ell(args.ell) if args.ell else (0, 0)
        result = mv_at_least(data, gamma, gauge, ell)
    _emit(render(result), args.output)
    return 0


def _run_verify(args) -> int:
    if args.what == "suite":
        reports = verify.verify_suite(seed=args.seed, cases=args.cases)
    else:
        if not args.input:
            raise InputError(f"verify {args.what} requires --input")
        doc = _load_document(args.input)
        if args.what == "identity":
            if not isinstance(doc, io.IdentityDocument):
                raise InputError("verify identity needs an identity document")
            reports = [verify.verify_identity(doc)]
        elif args.what == "unit":
            if not isinstance(doc, io.UnitDocument):
                raise InputError("verify unit needs a unit document")
            reports = [verify.verify_unit_invariance(doc.a, doc.b, doc.ident)]
        elif args.what == "hadamard":
            if not isinstance(doc, io.HadamardDocument):
                raise InputError("verify hadamard needs a hadamard document")
            reports = [verify.verify_hadamard_multiplicativity(doc.a, doc.b)]
        else:  # ell
            if not isinstance(doc, io.EllDocument):
                raise InputError("verify ell needs an ell document")
            reports = [verify.verify_ell_independence(doc.doc, doc.gamma, doc.ells)]
    for report in reports:
        print(report.render())
    return 0 if all(r.passed for r in reports) else 1


def _run_list_examples() -> int:
    width = max(len(name) for name in examples.REGISTRY)
    for name, spec in examples.REGISTRY.items():
        print(f"{name:<{width}}  {spec.note}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzeta",
        description="exact motivic zeta functions and volumes from resolution data")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="evaluate an invariant of one dataset")
    comp.add_argument("what", choices=["poincare", "zeta", "mv", "nearby", "mv-at-least"])
    comp.add_argument("--input", required=True, help="JSON file or built-in example name")
    comp.add_argument("--gamma", help="rational threshold q/p for mv-at-least")
    comp.add_argument("--ell", help="linear form a,b for mv-at-least")
    comp.add_argument("--coeffs", help="coefficient range N1..N2 for series output")
    comp.add_argument("--specialize", choices=["euler"],
                      help="apply the Euler specialization (needs chi data)")
    comp.add_argument("--output", help="write the result to a file instead of stdout")

    ver = sub.add_parser("verify", help="run a verification")
    ver.add_argument("what", choices=["identity", "unit", "hadamard", "ell", "suite"])
    ver.add_argument("--input", help="JSON file or built-in example name")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cases", type=int, default=25)

    sub.add_parser("list-examples", help="list built-in examples")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return _run_compute(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_list_examples()
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except MotzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
