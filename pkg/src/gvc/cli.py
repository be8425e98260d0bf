"""Command line front end: parse a model file, dispatch a pipeline,
emit the report.

Exit status: 0 when every check passes, 1 when any check fails, 2 for
parse or usage errors.  GVC_MAX_TERMS bounds the monomial count of any
intermediate expansion.
"""

import argparse
import os
import sys
import time

from .grassmann import EVEN, ExpansionLimitError, GvcError
from .superlie import check_invariant_form, check_structure
from .models import GaugeModel
from .modelfile import ParseError, parse_model, spec_model
from .reporting import CheckResult, Report

COMMANDS = GaugeModel.PIPELINES + ("full",)
DEFAULT_TERM_LIMIT = 10 ** 6


def _spec_header(spec):
    flavor = "even" if all(p == EVEN for _, p in spec.generators) else "graded"
    return "%s dim %d metric %s" % (flavor, spec.dimension, spec.metric)


def _validation_results(algebra, deterministic):
    results = []
    for name, checker in (("algebra-structure", check_structure),
                          ("invariant-form", check_invariant_form)):
        if name == "invariant-form" and not algebra.has_form:
            continue
        t0 = time.monotonic()
        rep = checker(algebra)
        entry = CheckResult(name, rep.ok, len(rep.violations),
                            "-" if rep.ok else rep.describe())
        entry.seconds = None if deterministic else time.monotonic() - t0
        results.append(entry)
    return results


def run(spec, command, max_order=None, deterministic=False,
        term_limit=DEFAULT_TERM_LIMIT):
    """Execute one command against a parsed model spec."""
    header = _spec_header(spec)
    if command == "validate-algebra":
        from .modelfile import spec_algebra

        algebra = spec_algebra(spec)
        return Report(header, _validation_results(algebra, deterministic))
    try:
        model = spec_model(spec, max_jet_order=max_order, term_limit=term_limit)
    except GvcError as exc:
        return Report(header, [CheckResult(command, False, witness=str(exc))])
    if command == "full":
        pipelines = spec.checks or None
        return model.full_verification(deterministic=deterministic,
                                       pipelines=pipelines)
    results = model.pipeline(command, deterministic=deterministic)
    notes = ()
    if command == "euler-lagrange":
        try:
            notes = model.euler_lagrange_notes()
        except ExpansionLimitError:
            raise
        except GvcError:
            notes = ()
    return Report(model.header(), results, notes)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="gvc",
        description="exact checks for graded gauge models on jet coordinates")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--model", required=True, metavar="FILE",
                        help="model definition file")
    parser.add_argument("--report", metavar="FILE",
                        help="also write the report as JSON lines")
    parser.add_argument("--max-order", type=int, default=None,
                        help="override the maximum jet order")
    parser.add_argument("--deterministic", action="store_true",
                        help="omit timing fields for byte-stable output")
    args = parser.parse_args(argv)

    limit = os.environ.get("GVC_MAX_TERMS")
    if limit is None:
        term_limit = DEFAULT_TERM_LIMIT
    else:
        try:
            term_limit = int(limit)
        except ValueError:
            parser.error("GVC_MAX_TERMS must be an integer")

    try:
        with open(args.model, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print("gvc: %s" % exc, file=sys.stderr)
        return 2
    try:
        spec = parse_model(text)
    except ParseError as exc:
        print("gvc: %s: %s" % (args.model, exc), file=sys.stderr)
        return 2

    try:
        report = run(spec, args.command, max_order=args.max_order,
                     deterministic=args.deterministic, term_limit=term_limit)
    except GvcError as exc:
        print("gvc: %s" % exc, file=sys.stderr)
        return 2

    sys.stdout.write(report.render(with_time=not args.deterministic))
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(report.json_lines(with_time=not args.deterministic))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
