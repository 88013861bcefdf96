"""
Command-line harness

    rho         spectral radius of graph6 records (--graph6, --name or stdin)
    walks       exact walk counts W^1..W^L, per vertex or crossing a pair
    series-rho  rho of a complete multipartite graph by the series equation
    verify      lemma suites and cross-checks
    spex        extremal search over C_ell-free planar graphs
    construct   the extremal graph (or the planar reference) as graph6
    manifest    commands reproducing every acceptance check

Exit status is 0 when no verdict FAILs, 1 on a FAIL or an internal error,
and 2 on usage or hypothesis errors.
"""
import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from .. import __version__
from ..config import config
from ..lib.errors import HypothesisError, InvalidGraphError, SpexLabError
from ..lib.logging import LogContext, configure_logging, get_logger, log_error
from ..lib.metrics import generate_metrics, init_service_info, record_error
from ..graphs.constructions import ExtremalParams, build_extremal, build_planar_reference
from ..graphs.core import Graph
from ..graphs.graph6 import decode, encode_str, iter_records
from ..lab import crosschecks, sweeps
from ..lab.named import parse_graph_name
from ..lab.reports import LemmaReport, Verdict, verdict_counts
from ..lab.spectral_lemmas import explore_below_threshold, verify_lemma1, verify_lemma2, verify_lemma3
from ..multipartite.fixed_point import solve_series_root
from ..multipartite.spec import MultipartiteSpec
from ..spectral.solver import spectral_radius
from ..spex.search import brute_force_spex, restricted_spex, theorem_check
from ..walks.engine import crossing_counts, walk_table
from .manifest import render_manifest
from .reports import emit_report
from .run_config import RunConfig

logger = get_logger(__name__)

DESCRIPTIVE_SUFFIX = "-below-threshold"


@dataclass
class Outcome:
    """What a subcommand produced: report records, raw stdout text, verdict tallies"""

    records: List[Dict[str, Any]] = field(default_factory=list)
    text: Optional[str] = None
    failures: int = 0
    inconclusive: int = 0


def _from_lemma_reports(reports: Sequence[LemmaReport], timings: bool) -> Outcome:
    # below-threshold runs are descriptive and never decide the exit status
    counts = verdict_counts(r for r in reports if not r.lemma.endswith(DESCRIPTIVE_SUFFIX))
    return Outcome(
        records=[report.to_dict(timings) for report in reports],
        failures=counts[Verdict.FAIL.value],
        inconclusive=counts[Verdict.INCONCLUSIVE.value],
    )


def _pick(value, default):
    return default if value is None else value


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# ==================== Graph input ====================

def _single_graph(args) -> Graph:
    graphs = _input_graphs(args)
    if len(graphs) != 1:
        raise InvalidGraphError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def _input_graphs(args) -> List[Graph]:
    if args.graph6:
        return [decode(args.graph6)]
    if args.name:
        return [parse_graph_name(args.name)]
    graphs = []
    for _, item in iter_records(sys.stdin):
        if not isinstance(item, Graph):
            raise item
        graphs.append(item)
    if not graphs:
        raise InvalidGraphError("no graph6 records on stdin")
    return graphs


# ==================== Subcommands ====================

def cmd_rho(rc: RunConfig, args) -> Outcome:
    records = []
    for g in _input_graphs(args):
        result = spectral_radius(g, rc.tol).to_dict()
        if not args.perron:
            result.pop("perron")
        records.append({"graph6": encode_str(g), "n": g.n, "edges": g.edge_count, **result})
    return Outcome(records=records)


def cmd_walks(rc: RunConfig, args) -> Outcome:
    g = _single_graph(args)
    table = walk_table(g, args.length, per_vertex=args.per_vertex)
    record = {"graph6": encode_str(g), "n": g.n, "max_length": args.length, **table.to_dict()}
    if args.cross:
        u, v = args.cross
        record["crossing"] = {"u": u, "v": v, "counts": crossing_counts(g, u, v, args.length)}
    return Outcome(records=[record])


def _parse_part(text: str):
    size, _, name = text.partition(":")
    try:
        size = int(size)
    except ValueError:
        raise HypothesisError(f"part must look like SIZE or SIZE:NAME, got {text!r}")
    return size, parse_graph_name(name) if name else None


def cmd_series_rho(rc: RunConfig, args) -> Outcome:
    if args.join:
        if not args.part_graph:
            raise HypothesisError("--join needs --with")
        spec = MultipartiteSpec.from_join(parse_graph_name(args.join), parse_graph_name(args.part_graph))
    elif args.part:
        spec = MultipartiteSpec.of([_parse_part(text) for text in args.part])
    else:
        raise HypothesisError("give the parts with --part (repeated) or --join/--with")

    root = solve_series_root(spec, rc.tol, fallback=args.fallback)
    record: Dict[str, Any] = {"spec": spec.describe(), "n": spec.n, "r": spec.r, **root.to_dict()}
    if args.compare:
        direct = spectral_radius(spec.realize(), rc.tol).rho
        record["rho_direct"] = direct
        record["difference"] = abs(root.root - direct)
    if rc.timings:
        record["elapsed_s"] = root.elapsed_s
    return Outcome(records=[record])


def _single_instance(args, lemma: str, tol) -> List[LemmaReport]:
    paths = args.paths
    h = _pick(args.h, "K1")
    t = _pick(args.t, "E0")
    if lemma == "lemma1":
        if len(paths) != 2:
            raise HypothesisError(f"lemma1 takes two path orders, got {len(paths)}")
        return [verify_lemma1(paths[0], paths[1], h, t, tol)]
    if lemma == "lemma2":
        return [verify_lemma2(paths, h, t, tol)]
    if lemma == "lemma3":
        return [verify_lemma3(paths, h, t, tol)]
    return [explore_below_threshold("lemma2" if lemma == "below2" else "lemma3", paths, h, t, tol)]


def _verify_reports(rc: RunConfig, args) -> List[LemmaReport]:
    lemma, tol, jobs, seed = args.lemma, rc.tol, rc.jobs, rc.seed
    if args.paths and lemma in ("lemma1", "lemma2", "lemma3", "below2", "below3"):
        return _single_instance(args, lemma, tol)

    if lemma == "fact1":
        return sweeps.fact1_sweep(_pick(args.ell_max, 15), _pick(args.n_max, 60))
    if lemma == "wdiff":
        return sweeps.wdiff_sweep(_pick(args.n1_max, 12), _pick(args.max_length, 12), jobs)
    if lemma == "weval":
        return sweeps.weval_sweep(_pick(args.orders, [10, 25, 40]), _pick(args.points, 20), jobs=jobs)
    if lemma == "gfun":
        return sweeps.gfun_sweep()
    if lemma == "lemma1":
        hs = (args.h,) if args.h else sweeps.LEMMA1_H
        ts = (args.t,) if args.t else sweeps.LEMMA1_T
        return sweeps.lemma1_sweep(_pick(args.n1_max, 20), hs, ts, tol, jobs)
    if lemma == "lemma2":
        return sweeps.lemma2_threshold_sweep(_pick(args.count, 50), seed, tol, jobs)
    if lemma == "lemma3":
        return sweeps.lemma3_threshold_sweep(_pick(args.count, 25), seed, tol, jobs)
    if lemma in ("below2", "below3"):
        target = "lemma2" if lemma == "below2" else "lemma3"
        return sweeps.below_threshold_sweep(target, _pick(args.count, 20), seed, tol, jobs)
    if lemma == "series":
        return crosschecks.series_sweep(_pick(args.count, 100), seed, _pick(args.n_max, 60), tol, jobs)
    if lemma == "anchors":
        return crosschecks.anchor_sweep(_pick(args.n_max, 50), _pick(args.m_max, 400), tol, jobs)
    if lemma == "observation":
        return crosschecks.observation_sweep(_pick(args.max_order, 12), jobs=jobs)
    if lemma == "containment":
        return crosschecks.containment_sweep(5, _pick(args.n_max, 7), tol, jobs)
    if lemma == "rayleigh":
        return crosschecks.rayleigh_sweep(_pick(args.count, 500), seed, _pick(args.n_max, 30), tol, jobs)
    raise HypothesisError(f"unknown lemma {lemma!r}")


def cmd_verify(rc: RunConfig, args) -> Outcome:
    return _from_lemma_reports(_verify_reports(rc, args), rc.timings)


def cmd_spex(rc: RunConfig, args) -> Outcome:
    mode = args.mode
    if mode == "restricted":
        report = restricted_spex(args.n, args.ell, rc.tol, rc.jobs)
    elif mode == "theorem":
        report = theorem_check(args.n, args.ell, rc.tol, rc.jobs)
    elif mode == "brute":
        report = brute_force_spex(args.n, args.ell, "INTERNAL", rc.tol)
    elif args.source in (None, "-"):
        report = brute_force_spex(args.n, args.ell, sys.stdin, rc.tol)
    else:
        with open(args.source, "rb") as stream:
            report = brute_force_spex(args.n, args.ell, stream, rc.tol)
    failures = 1 if report.verified is False else 0
    return Outcome(records=[report.to_dict(rc.timings)], failures=failures)


def cmd_construct(rc: RunConfig, args) -> Outcome:
    if args.reference:
        g = build_planar_reference(args.n)
        record: Dict[str, Any] = {"n": args.n, "construction": "K2+P(n-2)"}
    else:
        if args.ell is None:
            raise HypothesisError("--ell is required unless --reference is given")
        params = ExtremalParams(args.n, args.ell)
        g = build_extremal(params)
        record = {"n": args.n, "ell": args.ell, "case": params.case.value,
                  "partition": str(params.partition().nonzero())}
    graph6 = encode_str(g)
    record.update({"graph6": graph6, "rho": spectral_radius(g, rc.tol).rho})
    # the bare graph6 goes to stdout; the JSON record only when --out is given
    return Outcome(records=[record] if rc.out else [], text=graph6 + "\n")


def cmd_manifest(rc: RunConfig, args) -> Outcome:
    return Outcome(text=render_manifest())


# ==================== Parser ====================

LEMMAS = (
    "fact1", "wdiff", "weval", "gfun", "lemma1", "lemma2", "lemma3", "below2", "below3",
    "series", "anchors", "observation", "containment", "rayleigh",
)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="eigensolve / bisection tolerance")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (0 = one per CPU; default $SPEXLAB_JOBS or 1)")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled sweeps")
    common.add_argument("--out", default=None, help="report path (default stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--metrics-out", default=None, help="write Prometheus metrics here after the run")
    common.add_argument("--timings", action="store_true", help="include runtimes in reports")
    common.add_argument("--log-level", default=None)
    return common


def _graph_input(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--graph6", default=None, help="graph6 record (default: read stdin)")
    source.add_argument("--name", default=None, help="named graph such as P5+2K2")


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="spexlab",
        description="Spectral radius toolkit for C_ell-free planar graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"spexlab {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("rho", parents=[common], help="spectral radius")
    _graph_input(p)
    p.add_argument("--perron", action="store_true", help="include the Perron vector")
    p.set_defaults(handler=cmd_rho)

    p = sub.add_parser("walks", parents=[common], help="exact walk counts")
    _graph_input(p)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--per-vertex", action="store_true")
    p.add_argument("--cross", type=int, nargs=2, metavar=("U", "V"), default=None)
    p.set_defaults(handler=cmd_walks)

    p = sub.add_parser("series-rho", parents=[common], help="rho of a multipartite graph by the series equation")
    p.add_argument("--part", action="append", default=None, metavar="SIZE[:NAME]")
    p.add_argument("--join", default=None, metavar="NAME", help="left side of a two-part join")
    p.add_argument("--with", dest="part_graph", default=None, metavar="NAME", help="right side of the join")
    p.add_argument("--fallback", action="store_true", help="eigensolve when no bracket exists")
    p.add_argument("--compare", action="store_true", help="also report the direct eigensolve")
    p.set_defaults(handler=cmd_series_rho)

    p = sub.add_parser("verify", parents=[common], help="lemma suites and cross-checks")
    p.add_argument("--lemma", choices=LEMMAS, required=True)
    p.add_argument("--paths", type=_int_list, default=None, help="single instance, e.g. 9,3")
    p.add_argument("--h-graph", dest="h", default=None, help="named graph H, e.g. K2")
    p.add_argument("--t-graph", dest="t", default=None, help="named graph T, e.g. 3P2+E1")
    p.add_argument("--n1-max", type=int, default=None)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--ell-max", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--orders", type=_int_list, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("spex", parents=[common], help="extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--mode", choices=("restricted", "brute", "stream", "theorem"), default="restricted")
    p.add_argument("--source", default=None, help="graph6 file for --mode stream (default stdin)")
    p.set_defaults(handler=cmd_spex)

    p = sub.add_parser("construct", parents=[common], help="extremal graph as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--reference", action="store_true", help="K_2 v P_{n-2} instead")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("manifest", parents=[common], help="commands for every acceptance check")
    p.set_defaults(handler=cmd_manifest)
    return parser


# ==================== Entry point ====================

def _write_metrics(path: Optional[str]) -> None:
    if not path or not config.METRICS_ENABLED:
        return
    try:
        Path(path).write_text(generate_metrics(), encoding="utf-8")
    except OSError as e:
        log_error(e, "cli", {"metrics_out": path}, exc_info=False)


def run(rc: RunConfig, args, handler: Callable[[RunConfig, Any], Outcome]) -> Outcome:
    """Execute one subcommand and emit its report"""
    with LogContext(subcommand=rc.subcommand, config_hash=rc.config_hash) as log:
        log.info("run_started", jobs=rc.jobs, seed=rc.seed)
        outcome = handler(rc, args)
        log.info("run_finished", records=len(outcome.records), failures=outcome.failures,
                 inconclusive=outcome.inconclusive)
    if outcome.text is not None:
        sys.stdout.write(outcome.text)
        sys.stdout.flush()
    # a subcommand with nothing to print and nothing to report is an error
    if outcome.records or outcome.text is None:
        emit_report(outcome.records, rc.format, rc.out, rc.config_hash)
    return outcome


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(log_level=args.log_level or config.LOG_LEVEL, json_format=config.LOG_JSON)
    problems = config.validate()
    if problems:
        for problem in problems:
            logger.error("configuration_error", problem=problem)
        return 2

    try:
        rc = RunConfig.from_args(args)
    except ValueError as e:
        logger.error("configuration_error", problem=str(e))
        return 2
    init_service_info(__version__, rc.subcommand, rc.config_hash)

    try:
        outcome = run(rc, args, args.handler)
    except SpexLabError as e:
        record_error("cli", type(e).__name__)
        log_error(e, "cli", {"subcommand": rc.subcommand}, exc_info=False)
        print(f"spexlab: error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        record_error("cli", type(e).__name__)
        log_error(e, "cli", {"subcommand": rc.subcommand})
        return 1
    finally:
        _write_metrics(rc.metrics_out)

    if outcome.inconclusive:
        logger.warning("inconclusive_verdicts", count=outcome.inconclusive, subcommand=rc.subcommand)
    if outcome.failures:
        logger.error("failed_verdicts", count=outcome.failures, subcommand=rc.subcommand)
        return 1
    return 0
