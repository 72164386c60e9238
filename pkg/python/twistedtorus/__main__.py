#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" A command line utility for twisted torus knot Alexander polynomials. """

import argparse
import json
import logging
import sys
from collections import namedtuple
from contextlib import contextmanager

import numpy as np

from . import braid, core, families, fibered, laurent, scan, utils

logger = logging.getLogger("twistedtorus")

# Exit codes.
EXIT_SUCCESS, EXIT_FAILURE, EXIT_USAGE, EXIT_IO = (0, 1, 2, 3)

COMMANDS = ("compute", "oracle", "verify", "family", "scan")
FORMATS = ("text", "json", "csv")
RANGE_FLAGS = ("--r", "--s", "--n")

FAMILY_CSV_HEADER = ("member", "p", "q", "r", "s", "predicted_leading",
    "leading_coeff", "predicted_degree", "degree", "monic", "oracle", "status")


class CliConfig(namedtuple("CliConfig", ("command", "params", "kind", "r_values",
    "s_values", "n_values", "max_crossings", "include_torus_reductions",
    "output_format", "output_path", "jobs", "verbose"))):
    """ The validated configuration of one command line invocation. """

    __slots__ = ()

    @classmethod
    def from_args(cls, args):
        """
        Build and validate a configuration from parsed arguments.

        :param args:
            The `argparse.Namespace` of a subcommand.
        """

        def _range(name):
            text = getattr(args, name, None)
            return None if text is None else utils.parse_range(text)

        params = getattr(args, "params", None)
        config = cls(args.command, None if params is None else tuple(params),
            getattr(args, "kind", None), _range("r_range"), _range("s_range"),
            _range("n_range"), getattr(args, "max_crossings", None),
            getattr(args, "include_torus_reductions", False),
            args.output_format, args.output_path, args.jobs, args.verbose)
        config.validate()
        return config


    def validate(self):
        """ Check the configuration invariants. """
        if self.command not in COMMANDS:
            raise ValueError("unknown command '{}'".format(self.command))
        if self.output_format not in FORMATS:
            raise ValueError("unknown output format '{}'".format(
                self.output_format))
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1, not {}".format(self.jobs))
        if self.max_crossings is not None and self.max_crossings < 0:
            raise ValueError("--max-crossings must be non-negative, not {}"\
                .format(self.max_crossings))
        for name in ("r_values", "s_values", "n_values"):
            if getattr(self, name) == []:
                raise ValueError("the --{} range is empty".format(name[0]))
        return None


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fp:
            yield fp


def _write_json(content, path):
    with _output(path) as fp:
        json.dump(content, fp, indent=2, sort_keys=True)
        fp.write("\n")


def _write_text(lines, path):
    with _output(path) as fp:
        fp.write("\n".join(lines) + "\n")


def _canonical_params(config):
    params = core.canonicalize(config.params)
    if params.swapped or params.mirrored:
        applied = [name for name, flag in (("swapped", params.swapped),
            ("mirrored", params.mirrored)) if flag]
        sys.stderr.write("note: T({},{};{},{}) canonicalized to {} ({})\n"\
            .format(*(config.params + (params, ", ".join(applied)))))
    return params


def _bool(value):
    return "true" if value else "false"


def _describe(result, verdict):
    return "degree={}, leading_coeff={}, monic={}, verdict={}".format(
        result.degree, result.leading_coeff, _bool(result.monic), verdict.status)


def _write_single(config, params, result, verdict, extra=None):
    if config.output_format == "json":
        content = result.to_dict()
        content.update(verdict=verdict.status, witness=verdict.witness)
        content.update(extra or {})
        _write_json(content, config.output_path)

    elif config.output_format == "csv":
        record = scan.ScanRecord(params, scan.crossing_count(params), result,
            verdict)
        with _output(config.output_path) as fp:
            scan.write_csv([record], fp)

    else:
        lines = []
        if extra and "braid" in extra:
            lines.append("braid: {}".format(extra["braid"]))
        lines.extend(["{}: {}".format(params, result.poly),
                      _describe(result, verdict)])
        _write_text(lines, config.output_path)


def compute(config):
    """
    Compute the Alexander polynomial through the closed formula.
    """

    params = _canonical_params(config)
    result = core.alexander_closed_form(params)
    verdict = fibered.fiberedness_verdict(params, result)
    _write_single(config, params, result, verdict)
    return EXIT_SUCCESS


def oracle(config):
    """
    Compute the Alexander polynomial through the Burau representation of the
    braid word.
    """

    params = _canonical_params(config)
    word = braid.ttk_braid_word(params)
    result = braid.alexander_from_braid(word, params)
    verdict = fibered.fiberedness_verdict(params, result)
    _write_single(config, params, result, verdict, dict(braid=str(word)))
    return EXIT_SUCCESS


def verify(config):
    """
    Compute the Alexander polynomial through both pipelines and compare.
    """

    params = _canonical_params(config)
    formula = core.alexander_closed_form(params)
    burau = braid.alexander_from_braid(braid.ttk_braid_word(params), params)
    agree = formula.poly == burau.poly

    if config.output_format == "json":
        _write_json(dict(params=list(params.key), formula=formula.to_dict(),
            oracle=burau.to_dict(), agree=agree), config.output_path)

    elif config.output_format == "csv":
        with _output(config.output_path) as fp:
            np.savetxt(fp, np.array([params.key + (str(formula.poly),
                str(burau.poly), _bool(agree))], dtype=object), fmt="%s",
                delimiter=",", header="p,q,r,s,formula,oracle,agree",
                comments="")

    else:
        _write_text(["{}".format(params),
                     "formula: {}".format(formula.poly),
                     "oracle:  {}".format(burau.poly),
                     "AGREE" if agree else "DISAGREE"], config.output_path)

    if not agree:
        logger.error("Closed formula and Burau oracle disagree for {}"\
            .format(params))
    return EXIT_SUCCESS if agree else EXIT_FAILURE


def _family_members(config):
    kind = config.kind or ""
    if kind == "thm1":
        if config.r_values is None or config.s_values is None:
            raise families.InvalidFamilyRange("thm1 needs --r and --s ranges")
        return [("thm1", (r, s)) for r in config.r_values
                                 for s in config.s_values]

    if config.n_values is None:
        raise families.InvalidFamilyRange("{} needs an --n range".format(kind))

    if kind == "thm2":
        return [("thm2", (n, )) for n in config.n_values]

    if kind.startswith("thm3:"):
        try:
            variant = int(kind.split(":", 1)[1])
        except ValueError:
            raise families.InvalidFamilyRange(
                "unknown family '{}'; expected thm1, thm2 or thm3:<1-8>"\
                    .format(kind))
        return [("thm3", (variant, n)) for n in config.n_values]

    raise families.InvalidFamilyRange(
        "unknown family '{}'; expected thm1, thm2 or thm3:<1-8>".format(kind))


_VERIFIERS = {
    "thm1": families.verify_theorem1,
    "thm2": families.verify_theorem2,
    "thm3": families.verify_theorem3,
}


def family(config):
    """
    Verify the predictions for a range of members of a family, and check that
    the members are pairwise distinct.
    """

    reports = []
    for kind, arguments in _family_members(config):
        try:
            report = _VERIFIERS[kind](*arguments)
        except families.TheoremMismatch as mismatch:
            report = mismatch.report
        reports.append(report)

    distinctness_failures = ()
    kind = config.kind
    if kind in ("thm1", "thm2"):
        if kind == "thm1":
            grid = dict(r_values=[r for r in config.r_values if r >= 2],
                        s_values=config.s_values)
            usable = bool(grid["r_values"])
        else:
            grid = dict(n_values=[n for n in config.n_values if n >= 2])
            usable = bool(grid["n_values"])

        if usable:
            try:
                families.verify_corollary_distinctness(kind, reports=reports,
                    **grid)
            except families.TheoremMismatch as mismatch:
                distinctness_failures = mismatch.report.failures

    def _fmt(value):
        return "-" if value is None else str(value)

    def _oracle(report):
        return {None: "skipped", True: "agree", False: "disagree"}[
            report.oracle_agrees]

    if config.output_format == "json":
        _write_json(dict(
            family=kind,
            members=[dict(member=str(report.spec),
                params=list(report.params.key),
                predicted_leading=report.spec.predicted_leading,
                predicted_degree=report.spec.predicted_degree,
                result=report.result.to_dict(),
                verdict=report.verdict.status,
                oracle_agrees=report.oracle_agrees,
                passed=report.passed,
                failures=list(report.failures)) for report in reports],
            distinct=not distinctness_failures,
            distinctness_failures=list(distinctness_failures)),
            config.output_path)

    elif config.output_format == "csv":
        rows = np.array([(str(report.spec), ) + report.params.key + (
            _fmt(report.spec.predicted_leading), report.result.leading_coeff,
            _fmt(report.spec.predicted_degree), report.result.degree,
            _bool(report.result.monic), _oracle(report),
            "pass" if report.passed else "fail") for report in reports],
            dtype=object).reshape((-1, len(FAMILY_CSV_HEADER)))
        with _output(config.output_path) as fp:
            np.savetxt(fp, rows, fmt="%s", delimiter=",",
                header=",".join(FAMILY_CSV_HEADER), comments="")

    else:
        lines = []
        for report in reports:
            lines.append("{:<18} {:<20} leading {}/{}  degree {}/{}  "
                "oracle {:<8} {}".format(str(report.spec), str(report.params),
                report.result.leading_coeff, _fmt(report.spec.predicted_leading),
                report.result.degree, _fmt(report.spec.predicted_degree),
                _oracle(report), "PASS" if report.passed else "FAIL"))
            lines.extend("    {}".format(failure) for failure in report.failures)
        if kind in ("thm1", "thm2"):
            lines.append("distinct (degree, leading coefficient) pairs: {}"\
                .format("no" if distinctness_failures else "yes"))
            lines.extend("    {}".format(failure)
                         for failure in distinctness_failures)
        _write_text(lines, config.output_path)

    failed = sum(not report.passed for report in reports)
    if failed or distinctness_failures:
        logger.error("{} of {} family members failed{}".format(failed,
            len(reports), "; members are not distinct" \
                if distinctness_failures else ""))
        return EXIT_FAILURE
    return EXIT_SUCCESS


def scan_command(config):
    """
    Scan all twisted torus knots with s < 0 up to a crossing bound.
    """

    records, summary = scan.scan(config.max_crossings,
        include_torus_reductions=config.include_torus_reductions,
        jobs=config.jobs, progress=config.output_path is not None)

    counts = summary.counts
    summary_line = "total={} positive_braid={} non_monic={} inconclusive={} "\
        "skipped={} hash={}".format(summary.total,
            counts[fibered.FIBERED_POSITIVE_BRAID],
            counts[fibered.NOT_FIBERED_NON_MONIC], counts[fibered.INCONCLUSIVE],
            summary.skipped, summary.record_hash)

    if config.output_format == "json":
        with _output(config.output_path) as fp:
            scan.write_json(records, summary, fp)

    elif config.output_format == "csv":
        with _output(config.output_path) as fp:
            scan.write_csv(records, fp)
        sys.stderr.write(summary_line + "\n")

    else:
        lines = ["{:<20} crossings={:<4} {}  {}".format(str(record.params),
            record.crossings, record.verdict.status, record.result.poly)
            for record in records]
        _write_text(lines + [summary_line], config.output_path)

    return EXIT_SUCCESS


def _join_range_arguments(argv):
    """
    Attach range values that start with a minus sign to their flag, so that
    "--s -2..-4" is not read as an option.
    """
    joined, i = ([], 0)
    while i < len(argv):
        token = argv[i]
        if token in RANGE_FLAGS and i + 1 < len(argv) \
        and argv[i + 1].startswith("-"):
            joined.append("{}={}".format(token, argv[i + 1]))
            i += 2
        else:
            joined.append(token)
            i += 1
    return joined


def _build_parser():

    # Create the main parser.
    parser = argparse.ArgumentParser(prog="ttk",
        description="Alexander polynomials and fiberedness of twisted torus "
                    "knots T(p,q;r,s)")

    # Create parent parser.
    parent_parser = argparse.ArgumentParser(add_help=False)
    parent_parser.add_argument("-v", "--verbose",
        dest="verbose", action="store_true", default=False,
        help="Verbose logging mode.")
    parent_parser.add_argument("-j", "--jobs",
        dest="jobs", type=int, default=1,
        help="The number of worker processes to use.")
    parent_parser.add_argument("--format", dest="output_format",
        choices=FORMATS, default="text", help="The output format.")
    parent_parser.add_argument("--out", dest="output_path", type=str,
        default=None, help="Write output to this path instead of stdout.")

    # Allow for multiple actions.
    subparsers = parser.add_subparsers(title="command", dest="command",
        description="Specify the command to perform.")

    for name, func, description in (
        ("compute", compute, "Compute the Alexander polynomial by the closed "
                             "formula."),
        ("oracle", oracle, "Compute the Alexander polynomial from the Burau "
                           "matrix of the braid word."),
        ("verify", verify, "Compare the closed formula with the Burau oracle.")):
        knot_parser = subparsers.add_parser(name, parents=[parent_parser],
            help=description)
        knot_parser.add_argument("params", nargs=4, type=int,
            metavar=("p", "q", "r", "s"), help="The knot parameters.")
        knot_parser.set_defaults(func=func)

    # Family parser.
    family_parser = subparsers.add_parser("family", parents=[parent_parser],
        help="Verify a family of non-fibered twisted torus knots.")
    family_parser.add_argument("kind", type=str,
        help="The family: thm1, thm2 or thm3:<variant>.")
    family_parser.add_argument("--r", dest="r_range", type=str,
        help="An r range A..B (thm1).")
    family_parser.add_argument("--s", dest="s_range", type=str,
        help="An s range A..B (thm1).")
    family_parser.add_argument("--n", dest="n_range", type=str,
        help="An n range A..B (thm2 and thm3).")
    family_parser.set_defaults(func=family)

    # Scan parser.
    scan_parser = subparsers.add_parser("scan", parents=[parent_parser],
        help="Scan twisted torus knots with s < 0 up to a crossing bound.")
    scan_parser.add_argument("--max-crossings", dest="max_crossings", type=int,
        default=100, help="The crossing bound.")
    scan_parser.add_argument("--include-torus-reductions",
        dest="include_torus_reductions", action="store_true", default=False,
        help="Also include r = 1 and r = p, which are torus knots.")
    scan_parser.set_defaults(func=scan_command)

    return parser


def main(argv=None):
    """
    The main command line interpreter. This is the console script entry point.

    :param argv: [optional]
        The arguments to parse, without the program name.

    :returns:
        The exit code.
    """

    parser = _build_parser()
    args = parser.parse_args(_join_range_arguments(
        sys.argv[1:] if argv is None else list(argv)))
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    if args.verbose:
        logger.setLevel(logging.DEBUG)

    try:
        config = CliConfig.from_args(args)
        return args.func(config)

    except OSError as error:
        logger.error("{}".format(error))
        return EXIT_IO

    except (families.TheoremMismatch, fibered.InternalContradiction,
            laurent.NonzeroRemainder, laurent.NotAKnotPolynomial) as error:
        logger.error("{}: {}".format(type(error).__name__, error))
        return EXIT_FAILURE

    except ValueError as error:
        logger.error("{}: {}".format(type(error).__name__, error))
        return EXIT_USAGE


if __name__ == "__main__":

    """
    Usage examples:
    # ttk compute 4 3 2 -2
    # ttk verify 10 3 5 -1 --format json
    # ttk family thm1 --r 2..4 --s -2..-4
    # ttk scan --max-crossings 100 --jobs 8 --format csv --out scan.csv

    """
    sys.exit(main())
