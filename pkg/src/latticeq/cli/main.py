"""The ``latticeq`` command line.

Subcommands: eval, quantify, verify, suites, plotdata, universe-info. Exit codes are
0 pass, 1 check failure, 2 parse error, 3 precondition violation, 4 I/O error.
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from latticeq.config import RunConfig, resolve_run_config
from latticeq.core.predicates import eval_gaussian
from latticeq.core.universe import (
    FiniteUniverse,
    Interval,
    divisibility_bound,
    make_universe,
    max_local_window,
    window_diameter_bound,
)
from latticeq.dsl import classify, parse, print_canonical
from latticeq.dsl.classify import ClassifiedPredicate
from latticeq.errors import PreconditionError, error_kind
from latticeq.executors import CSVExecutor, JSONExecutor, emit_report, executor_for, rows_to_csv
from latticeq.operators.kernels import KERNELS, apply_kernel_at, kernel_by_name
from latticeq.quantifier.quantifiers import (
    full_cycle_sum,
    global_quantify,
    local_quantify,
    universe_quantify,
    window_quantify,
)
from latticeq.quantifier.results import QuantifierResult, Window
from latticeq.quantifier.summation import use_terms_ceiling, use_threads
from latticeq.registry import get_default_registry
from latticeq.schemas.suite import ParameterType, Suite

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_IO = 4

EXIT_CODES = {
    "parse": EXIT_PARSE,
    "precondition": EXIT_PRECONDITION,
    "io": EXIT_IO,
    "internal": EXIT_FAIL,
}


def _integer(text: str) -> int:
    """Integers, also written as 1e6 or 1_000_000."""
    if not text.isascii():
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if not value.is_integer():
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    return int(value)


def _point(text: str) -> tuple[int, ...]:
    try:
        if not text.isascii():
            raise ValueError(text)
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a lattice point like 2 or 2,-1, got {text!r}"
        ) from None


def _key_value(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), value.strip()


def _common_flags() -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand."""
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--n", type=_integer, default=argparse.SUPPRESS, help="Universe size (even)")
    common.add_argument("--hn", dest="h_n", type=_integer, default=argparse.SUPPRESS, help="Discrete Planck integer, coprime to n")
    common.add_argument("--threads", type=_integer, default=argparse.SUPPRESS, help="Worker threads for summation")
    common.add_argument("--config", default=argparse.SUPPRESS, help="key=value config file")
    common.add_argument("--out", dest="out_dir", default=argparse.SUPPRESS, help="Directory for report files")
    common.add_argument("--format", choices=["json", "csv", "table"], default=argparse.SUPPRESS, help="Output format")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="Debug logging")
    return common


def _add_suite_parser(subparsers: Any, suite: Suite, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        suite.name, help=suite.description, parents=[common], allow_abbrev=False
    )
    for param in suite.parameters:
        kwargs: dict[str, Any] = {"dest": param.name, "default": argparse.SUPPRESS}
        help_text = param.description
        if not param.required:
            help_text += f" (default: {param.default})"
        if param.type == ParameterType.BOOLEAN:
            kwargs["action"] = argparse.BooleanOptionalAction
        elif param.type == ParameterType.ARRAY:
            kwargs["nargs"] = "*"
            kwargs["type"] = _integer if param.items_type == ParameterType.INTEGER else str
        elif param.type == ParameterType.INTEGER:
            kwargs["type"] = _integer
        elif param.type == ParameterType.NUMBER:
            kwargs["type"] = float
        if param.enum:
            kwargs["choices"] = param.enum
        parser.add_argument(param.flag, required=param.required, help=help_text, **kwargs)
    parser.set_defaults(suite=suite.name)


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="latticeq",
        description="Finite lattice universes, Gaussian quantifiers and their verification.",
        parents=[common],
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="Evaluate an expression at lattice points", allow_abbrev=False)
    p_eval.add_argument("expr", help="Predicate expression, e.g. 'exp(-pi*i*k^2/n)'")
    p_eval.add_argument("--at", dest="points", type=_point, action="append", required=True, help="Lattice point k[,p1,...] with |k| <= n/2; k = n/2 names the same point as -n/2. Repeatable")
    p_eval.add_argument("--kernel", choices=sorted(KERNELS), help="Apply an integral kernel in k before evaluating")
    p_eval.add_argument("--kernel-param", type=_key_value, action="append", default=[], help="Kernel parameter key=value (t, omega, hbar, cross)")

    p_quant = sub.add_parser("quantify", parents=[common], help="Apply a quantifier to an expression", allow_abbrev=False)
    p_quant.add_argument("expr")
    mode = p_quant.add_mutually_exclusive_group(required=True)
    mode.add_argument("--window", nargs=2, type=float, metavar=("M1", "M2"), help="Windowed quantifier E^(m1,m2)")
    mode.add_argument("--local", action="store_true", help="Local quantifier at the maximal window")
    mode.add_argument("--global", dest="global_", action="store_true", help="One-period global quantifier")
    mode.add_argument("--universe", action="store_true", help="Sum over the whole finite universe")
    mode.add_argument("--cycle", action="store_true", help="Full-cycle Gauss sum")
    p_quant.add_argument("--sequence", action="store_true", help="With --local: every window m = 1..m_max")
    p_quant.add_argument("--p", dest="params", type=_integer, nargs="*", default=[], help="Parameter values p1 ...")
    p_quant.add_argument("--domain", nargs=2, type=float, metavar=("LO", "HI"), help="Support of a sampled expression")

    p_verify = sub.add_parser("verify", parents=[common], help="Run a verification suite", allow_abbrev=False)
    suites = p_verify.add_subparsers(dest="suite", required=True)
    for suite in get_default_registry().all():
        _add_suite_parser(suites, suite, common)

    p_suites = sub.add_parser("suites", parents=[common], help="List the registered verification suites", allow_abbrev=False)
    p_suites.add_argument("--category", help="Only suites of this category")
    p_suites.add_argument("--tag", dest="tags", action="append", default=[], help="Only suites carrying this tag; repeatable")
    p_suites.add_argument("--all-tags", action="store_true", help="With several --tag: require every tag instead of any")
    p_suites.add_argument("--search", help="Text to look for in names and descriptions")
    p_suites.add_argument("--index", action="store_true", help="List categories and tags instead of suites")

    p_plot = sub.add_parser("plotdata", parents=[common], help="Extract plot columns from a JSON report", allow_abbrev=False)
    p_plot.add_argument("report", help="Path to a JSON report")
    p_plot.add_argument("--columns", nargs="+", help="Columns to extract (default depends on report kind)")
    p_plot.add_argument("--output", help="Write the CSV here instead of stdout")

    sub.add_parser("universe-info", parents=[common], help="Describe the universe of --n/--hn", allow_abbrev=False)
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _run_config(args: argparse.Namespace) -> RunConfig:
    flags = {key: getattr(args, key, None) for key in ("n", "h_n", "threads", "out_dir", "format")}
    return resolve_run_config(flags, getattr(args, "config", None))


def _universe(config: RunConfig) -> FiniteUniverse:
    if config.n is None:
        raise PreconditionError("This command needs a universe size: pass --n or set n in the config file")
    return make_universe(config.n, config.h_n)


def _write(text: str, output: Optional[str] = None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit(payload: dict[str, Any], rows: list[dict[str, Any]], config: RunConfig) -> None:
    if config.format == "json":
        _write(json.dumps(payload, indent=2) + "\n")
    else:
        _write(rows_to_csv(rows))


def _lattice_point(u: FiniteUniverse, k: int) -> int:
    """k with |k| <= n/2, wrapped onto the cyclic universe (n/2 is identified with -n/2)."""
    if abs(k) > u.n // 2:
        raise PreconditionError(
            f"Lattice point {k} outside [{-(u.n // 2)}, {u.n // 2}] for n={u.n}"
        )
    if k == u.n // 2:
        logger.info("Lattice point %d is the same point as %d", k, -k)
    return u.wrap(k)


def _classified(text: str) -> ClassifiedPredicate:
    return classify(parse(text))


def _kernel_params(pairs: Sequence[tuple[str, str]]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for key, value in pairs:
        params[key] = int(value) if key == "cross" else float(value)
    return params


def cmd_eval(args: argparse.Namespace, config: RunConfig) -> int:
    """Parse, classify and evaluate at the requested lattice points."""
    u = _universe(config)
    classified = _classified(args.expr)
    pred = classified.predicate()
    kernel = kernel_by_name(args.kernel, **_kernel_params(args.kernel_param)) if args.kernel else None

    rows: list[dict[str, Any]] = []
    for requested in args.points:
        point = tuple(_lattice_point(u, c) for c in requested)
        k, params = point[0], point[1:]
        if kernel is not None:
            value = apply_kernel_at(kernel, pred, u, k, params=params)
        elif classified.tag == "gaussian":
            value = eval_gaussian(pred, point, u)
        else:
            value = complex(pred.lattice_values(np.array([k], dtype=np.int64), u, params)[0])
        rows.append({"at": list(requested), "value": [value.real, value.imag]})

    payload = {
        "expr": args.expr,
        "canonical": print_canonical(classified.source),
        "classification": classified.describe(),
        "kernel": args.kernel,
        "values": rows,
        "config": config.echo(),
    }
    _emit(payload, rows, config)
    return EXIT_PASS


def cmd_quantify(args: argparse.Namespace, config: RunConfig) -> int:
    u = _universe(config)
    classified = _classified(args.expr)
    domain = Interval(lo=args.domain[0], hi=args.domain[1]) if args.domain else None
    pred = classified.predicate(domain)
    params = tuple(args.params)

    result: QuantifierResult | list[QuantifierResult]
    if args.window:
        result = window_quantify(pred, Window(m1=args.window[0], m2=args.window[1]), u, params)
        mode = "window"
    elif args.local:
        result = local_quantify(pred, u, params, mode="sequence" if args.sequence else "fixed_max")
        mode = "local"
    elif args.global_:
        result = global_quantify(pred, u, params)
        mode = "global"
    elif args.universe:
        result = universe_quantify(pred, u, params)
        mode = "universe"
    else:
        if classified.tag != "gaussian":
            raise PreconditionError("Full-cycle sums need a Gaussian expression")
        result = full_cycle_sum(pred, u, params)
        mode = "cycle"

    results = result if isinstance(result, list) else [result]
    rows = [r.to_json_dict() for r in results]
    payload = {
        "expr": args.expr,
        "classification": classified.describe(),
        "mode": mode,
        "p": list(params),
        "result": rows if isinstance(result, list) else rows[0],
        "config": config.echo(),
    }
    _emit(payload, rows, config)
    return EXIT_PASS


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    registry = get_default_registry()
    if args.suite not in registry:
        raise PreconditionError(
            f"Unknown suite '{args.suite}'; known suites: {', '.join(registry.names())}"
        )
    suite = registry.get(args.suite)
    assert suite is not None
    arguments = {p.name: getattr(args, p.name) for p in suite.parameters if hasattr(args, p.name)}

    executor = executor_for(config.format)
    result = asyncio.run(executor.execute(suite, arguments, config))
    if not result.success or result.data is None:
        logger.error("Suite %s failed: %s", suite.name, result.error)
        sys.stderr.write(f"latticeq: {executor.format_result(result)}")
        return EXIT_CODES.get(result.error_kind or "internal", EXIT_FAIL)

    report = result.data
    if config.out_dir:
        for path in emit_report(report, config.out_dir, stem=suite.name):
            logger.info("Wrote %s", path)
    sys.stdout.write(executor_for(config.format).format_report(report))
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_suites(args: argparse.Namespace, config: RunConfig) -> int:
    """Describe registered suites, filtered by category, tags and text."""
    registry = get_default_registry()
    if args.index:
        index = {"categories": registry.categories(), "tags": sorted(registry.tags_list())}
        if config.format == "json":
            _write(json.dumps(index, indent=2) + "\n")
        else:
            rows = [{"kind": kind, "name": name} for kind, names in index.items() for name in names]
            _write(rows_to_csv(rows))
        return EXIT_PASS

    selected = registry.search(query=args.search, category=args.category)
    if args.tags:
        tagged = {s.name for s in registry.get_by_tags(args.tags, match_all=args.all_tags)}
        selected = [s for s in selected if s.name in tagged]
    logger.debug("%d of %d suites selected", len(selected), len(registry))
    _write(executor_for(config.format).format_catalog(selected))
    return EXIT_PASS


def cmd_plotdata(args: argparse.Namespace, config: RunConfig) -> int:
    text = Path(args.report).read_text(encoding="utf-8")
    try:
        report = JSONExecutor().parse(text)
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"latticeq: {args.report} is not a JSON report: {exc}\n")
        return EXIT_PARSE
    _write(CSVExecutor().plot_data(report, args.columns), args.output)
    return EXIT_PASS


def cmd_universe_info(args: argparse.Namespace, config: RunConfig) -> int:
    u = _universe(config)
    info = {
        "n": u.n,
        "h_n": u.h_n,
        "range": [u.lo, u.hi],
        "spacing": u.spacing,
        "nu_over_pi": str(u.nu),
        "m_max": max_local_window(u),
        "window_diameter_bound": window_diameter_bound(u),
        "divisibility_bound": divisibility_bound(u.n),
    }
    _emit(info, [info], config)
    return EXIT_PASS


COMMANDS = {
    "eval": cmd_eval,
    "quantify": cmd_quantify,
    "verify": cmd_verify,
    "suites": cmd_suites,
    "plotdata": cmd_plotdata,
    "universe-info": cmd_universe_info,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(getattr(args, "verbose", False))

    try:
        config = _run_config(args)
        with use_threads(config.threads), use_terms_ceiling(config.terms_ceiling):
            return COMMANDS[args.command](args, config)
    except (ValueError, OSError) as exc:
        kind = error_kind(exc)
        sys.stderr.write(f"latticeq: {exc}\n")
        return EXIT_CODES[kind]
    except RecursionError:
        sys.stderr.write("latticeq: expression too deeply nested\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
