from __future__ import annotations

import argparse
from collections.abc import Sequence
import sys
from typing import Any, Optional

from loguru import logger
from pydantic import ValidationError

from .bounds import (
    admissible_witness,
    bounds_report,
    curve_export,
    curves_to_csv,
    nu_witness,
)
from .codec import parse_graphs, read_graphs
from .config import RunConfig
from .exception import GraphFormatError, GuardViolation, PreconditionViolation
from .extremal import (
    FILTERS,
    ResultStore,
    generate_all,
    search,
    tightness_scan,
    verify_degree2_constants,
    verify_theorem2,
)
from .graph import Graph
from .log import escape_tag, log
from .mibs import enumerate_mibs_canonical
from .mis import check_bounds, enumerate_mis
from .pipeline import pipeline_corpus, run_pipeline
from .utils import bits_to_list, dump_json, list_to_bits

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_FORMAT = 2
EXIT_GUARD = 3
EXIT_PRECONDITION = 4


def _int_list(text: str) -> list[int]:
    values = [int(part) for part in text.split(",") if part.strip()]
    if any(value < 0 for value in values):
        raise argparse.ArgumentTypeError(f"negative vertex in {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misbench",
        description="Exact MIS / MIBS counting and bound verification",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"],
    )
    parser.add_argument("--workers", type=int)
    commands = parser.add_subparsers(dest="command", required=True)

    def graph_input(sub: argparse.ArgumentParser, optional: bool = False) -> None:
        sub.add_argument(
            "input", nargs="?" if optional else None, help="graph file, or - for stdin"
        )
        sub.add_argument(
            "--format", default="auto", choices=["auto", "graph6", "edgelist"]
        )

    sub = commands.add_parser("mis", help="maximal independent set profile")
    graph_input(sub)
    sub.add_argument("--k", type=int)

    sub = commands.add_parser("mibs", help="maximal induced bipartite subgraphs")
    graph_input(sub)

    sub = commands.add_parser("bounds", help="evaluate the bounds at (n, k)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--eta", type=float)

    sub = commands.add_parser("curves", help="per-vertex exponents of the bounds")
    sub.add_argument("--eta", type=float)
    sub.add_argument("--resolution", type=int)
    sub.add_argument("--output", choices=["json", "csv"])

    sub = commands.add_parser("solve", help="admissible eps, delta, eta witness")
    sub.add_argument("--margin", type=float)
    sub.add_argument("--n", type=int)
    sub.add_argument("--xi", type=float)

    sub = commands.add_parser("pipeline", help="check the cell argument")
    graph_input(sub, optional=True)
    sub.add_argument("--I0", type=_int_list, dest="I0")
    sub.add_argument("--S", type=_int_list, dest="S")
    sub.add_argument("--seed", type=int)
    sub.add_argument("--corpus", type=int)
    sub.add_argument("--census-max-space", type=int)
    sub.add_argument("--samples", type=int)

    sub = commands.add_parser("search", help="exhaustive checks at one order")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--filter", dest="graph_filter", choices=FILTERS)
    sub.add_argument(
        "--bound", choices=["eppstein", "nielsen", "corollary1"], default="eppstein"
    )
    sub.add_argument("--eta", type=float)
    sub.add_argument("--store")
    sub.add_argument("--resume", action="store_true")
    sub.add_argument("--mibs", action="store_true")

    sub = commands.add_parser(
        "verify-theorem2", help="all orders up to --max-n, with degree <= 2 factors"
    )
    sub.add_argument("--max-n", type=int, dest="max_n")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    data = {key: value for key, value in vars(args).items() if key != "log_level"}
    limits = {
        "census_max_space": data.pop("census_max_space", None),
        "monte_carlo_samples": data.pop("samples", None),
    }
    data["limits"] = {key: value for key, value in limits.items() if value is not None}
    return RunConfig(**data)


def _read(config: RunConfig) -> list[Graph]:
    assert config.input is not None
    if str(config.input) == "-":
        try:
            text = sys.stdin.read()
        except UnicodeDecodeError as e:
            raise GraphFormatError("stdin is not valid text", e.start) from e
        return parse_graphs(text, config.format)
    return read_graphs(config.input, config.format)


def _single_or_list(items: list[dict[str, Any]]) -> Any:
    return items[0] if len(items) == 1 else items


def cmd_mis(config: RunConfig) -> tuple[Any, bool]:
    out = []
    ok = True
    for g in _read(config):
        family = enumerate_mis(g)
        report = check_bounds(g, family.profile)
        ok = ok and not report.violations
        item: dict[str, Any] = {
            "n": g.n,
            "mis": family.profile.total,
            "profile": family.profile.counts,
            "sets": [bits_to_list(s) for s in family.sets],
            "bounds": [c.model_dump() for c in report.checks],
            "violations": [c.model_dump() for c in report.violations],
        }
        if config.k is not None:
            item["mis_at_most_k"] = family.profile.at_most(config.k)
            item["mis_k"] = family.profile.exactly(config.k)
        out.append(item)
    return _single_or_list(out), ok


def cmd_mibs(config: RunConfig) -> tuple[Any, bool]:
    out = []
    for g in _read(config):
        census = enumerate_mibs_canonical(g, workers=config.workers)
        out.append(
            {
                "n": g.n,
                "distinct": census.distinct_count,
                "ordered_pairs": census.ordered_pair_count,
                "nonmaximal_candidates": census.nonmaximal_candidates,
                "records_without_witness": census.records_without_witness,
                "a_size_histogram": census.a_size_histogram,
                "envelope": [row.model_dump() for row in census.envelope],
                "subgraphs": [bits_to_list(mask) for mask in census.vertex_sets],
            }
        )
    return _single_or_list(out), True


def cmd_bounds(config: RunConfig) -> tuple[Any, bool]:
    assert config.n is not None and config.k is not None
    report = bounds_report(config.n, config.k, config.eta)
    return report.model_dump(), report.identity_holds


def cmd_curves(config: RunConfig) -> tuple[Any, bool]:
    rows = curve_export(config.eta, config.resolution)
    if config.output == "csv":
        return curves_to_csv(rows), True
    return [row.model_dump() for row in rows], True


def cmd_solve(config: RunConfig) -> tuple[Any, bool]:
    n = 40 if config.n is None else config.n
    witness = admissible_witness(config.margin, n)
    out = witness.model_dump()
    ok = witness.witness.holds
    if config.xi is not None:
        custom = nu_witness(n, witness.solve.eta, config.xi, witness.solve.eps)
        out["custom_witness"] = custom.model_dump()
    return out, ok


def cmd_pipeline(config: RunConfig) -> tuple[Any, bool]:
    if config.corpus is not None:
        corpus = pipeline_corpus(config.corpus, config.seed, workers=config.workers)
        return corpus.model_dump(), corpus.ok
    out = []
    ok = True
    for g in _read(config):
        report = run_pipeline(
            g,
            I0=None if config.I0 is None else list_to_bits(config.I0),
            S=config.S,
            seed=config.seed,
            max_space=config.limits.census_max_space,
            samples=config.limits.monte_carlo_samples,
        )
        ok = ok and report.ok
        out.append(report.model_dump())
    return _single_or_list(out), ok


def cmd_search(config: RunConfig) -> tuple[Any, bool]:
    assert config.n is not None
    store = None if config.store is None else ResultStore(config.store)
    report = search(
        config.n,
        config.graph_filter,
        workers=config.workers,
        store=store,
        resume=config.resume,
        mibs=config.mibs,
    )
    tightness = tightness_scan(
        config.n,
        config.graph_filter,
        config.bound,
        eta=config.eta if config.bound == "corollary1" else None,
        graphs=generate_all(config.n, config.graph_filter, config.workers),
        workers=config.workers,
    )
    out = report.model_dump()
    out["ok"] = report.ok
    out["tightness"] = tightness.model_dump()
    return out, report.ok


def cmd_verify_theorem2(config: RunConfig) -> tuple[Any, bool]:
    orders = []
    ok = True
    for n in range(config.max_n + 1):
        reports = verify_theorem2(n, config.workers)
        degree2 = verify_degree2_constants(n)
        order_ok = all(r.ok for r in reports) and degree2.ok
        ok = ok and order_ok
        orders.append(
            {
                "n": n,
                "classes": reports[0].classes,
                "attainers": {str(r.k): r.attainers for r in reports if r.attainers},
                "violations": sum(len(r.violations) for r in reports),
                "mismatches": sum(len(r.mismatches) for r in reports),
                "degree2": degree2.model_dump(),
                "ok": order_ok,
            }
        )
    return {"orders": orders, "ok": ok}, ok


COMMANDS = {
    "mis": cmd_mis,
    "mibs": cmd_mibs,
    "bounds": cmd_bounds,
    "curves": cmd_curves,
    "solve": cmd_solve,
    "pipeline": cmd_pipeline,
    "search": cmd_search,
    "verify-theorem2": cmd_verify_theorem2,
}


def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level, diagnose=False)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        config = to_config(args)
    except ValidationError as e:
        parser.error(str(e))
    log("DEBUG", f"dispatching <y>{config.command}</y>")
    try:
        result, ok = COMMANDS[config.command](config)
    except GraphFormatError as e:
        log("ERROR", f"malformed input at {e.position}: {escape_tag(e.message)}")
        return EXIT_FORMAT
    except GuardViolation as e:
        log("ERROR", escape_tag(str(e)))
        return EXIT_GUARD
    except PreconditionViolation as e:
        log("ERROR", escape_tag(str(e)))
        return EXIT_PRECONDITION
    print(result if isinstance(result, str) else dump_json(result))
    if not ok:
        log("WARNING", f"{config.command}: some checks failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK
