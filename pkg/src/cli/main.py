"""Command-Line Entry Point.

This module defines the sensitivity-workbench commands. Every command
prints a JSON document on stdout, except ``family --emit-table`` which
prints the table text. Logs go to stderr.

Exit codes: 0 on success, 2 for domain errors (invalid input, capacity,
solver configuration or protocol problems), 1 for anything unexpected and
for a record log that fails re-verification.
"""

import argparse
import asyncio
import sys
from collections.abc import Callable
from pathlib import Path

from pydantic import BaseModel

from src.application.dtos.analysis_dto import AnalysisDto, FamilyReportDto
from src.application.dtos.search_dto import (
    EncodedInstanceDto,
    EncodeResultDto,
    LogAuditDto,
    MaxBsDto,
    OracleResultDto,
    PointResultDto,
    SeparationTableDto,
)
from src.cli.dependencies import (
    RunOptions,
    get_analysis_service,
    get_encoder_service,
    get_family_service,
    get_oracle_service,
    get_search_service,
)
from src.domain.entities.boolean_function import TruthTable
from src.domain.entities.partition import Partition
from src.domain.exceptions import DomainException
from src.domain.families import paired_sections_family, rubinstein_family
from src.infrastructure.config import settings
from src.infrastructure.logging.logger import LOG_LEVELS, configure_logging, get_logger
from src.infrastructure.storage.files import write_text_files

logger = get_logger(__name__)

Handler = Callable[[argparse.Namespace, RunOptions], int]


def _emit(dto: BaseModel) -> None:
    sys.stdout.write(dto.model_dump_json(indent=2) + "\n")


def analyze(args: argparse.Namespace, options: RunOptions) -> int:
    """Print s(f) and bs(f) of a truth-table file with their witnesses."""
    f = TruthTable.from_text(Path(args.file).read_text(encoding="ascii"))
    measures = get_analysis_service().measure(f)
    _emit(AnalysisDto.from_measures(f.n, measures))
    return 0


def family(args: argparse.Namespace, options: RunOptions) -> int:
    """Check a family member, or print its truth table."""
    service = get_family_service()
    if args.emit_table:
        if args.paired_k is not None:
            f = paired_sections_family(args.paired_k)
        else:
            f = rubinstein_family(args.rubinstein_m)
        sys.stdout.write(service.table(f).to_text())
        return 0
    if args.paired_k is not None:
        report = service.check_paired_sections(args.paired_k, allow_large=args.allow_large)
    else:
        report = service.check_rubinstein(args.rubinstein_m, allow_large=args.allow_large)
    _emit(FamilyReportDto.from_report(report))
    return 0


def encode(args: argparse.Namespace, options: RunOptions) -> int:
    """Write one DIMACS file per partition of (n, s, bs)."""
    encoder = get_encoder_service()
    if args.partition:
        partitions = [Partition.parse(args.partition)]
    else:
        limit = args.s if options.prune_singletons else None
        partitions = encoder.enumerate_partitions(args.n, args.bs, max_singletons=limit)

    instances = [encoder.build_instance(args.n, args.s, args.bs, p) for p in partitions]
    files = {
        _instance_name(args.n, args.s, args.bs, p): encoder.emit_dimacs(instance)
        for p, instance in zip(partitions, instances, strict=True)
    }
    paths = write_text_files(Path(args.out), files)
    _emit(
        EncodeResultDto(
            n=args.n,
            s=args.s,
            bs=args.bs,
            instances=[
                EncodedInstanceDto(
                    partition=list(instance.partition.parts) if instance.partition else [],
                    path=str(path),
                    var_count=instance.var_count,
                    clause_count=len(instance.clauses),
                )
                for instance, path in zip(instances, paths, strict=True)
            ],
        )
    )
    return 0


def search(args: argparse.Namespace, options: RunOptions) -> int:
    """Decide one (n, s, bs) point."""
    result = asyncio.run(get_search_service(options).search_point(args.n, args.s, args.bs))
    _emit(PointResultDto.from_result(result))
    return 0


def max_bs(args: argparse.Namespace, options: RunOptions) -> int:
    """Find the largest feasible bs for (n, s)."""
    service = get_search_service(options)
    result = asyncio.run(service.max_bs(args.n, args.s, start_bs=args.start_bs))
    _emit(MaxBsDto.from_result(result))
    return 0


def table(args: argparse.Namespace, options: RunOptions) -> int:
    """Build the separation table up to --max-n."""
    max_n = args.max_n if args.max_n is not None else settings.search.table_max_n
    result = asyncio.run(get_search_service(options).build_table(max_n))
    _emit(SeparationTableDto.from_table(result))
    return 0


def oracle(args: argparse.Namespace, options: RunOptions) -> int:
    """Enumerate every function on n variables."""
    result = get_oracle_service().oracle_max_bs(
        args.n, s_filter=args.s, allow_large=args.allow_large
    )
    written: list[str] = []
    if args.out:
        files = {f"oracle_n{result.n}_s{s}.txt": t.to_text() for s, t in result.witnesses.items()}
        written = [str(p) for p in write_text_files(Path(args.out), files)]
    _emit(OracleResultDto.from_result(result, written))
    return 0


def verify_log(args: argparse.Namespace, options: RunOptions) -> int:
    """Re-verify every sat record of the log."""
    audit = asyncio.run(get_search_service(options).reverify_log())
    _emit(LogAuditDto.from_audit(audit))
    return 1 if audit.mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser; global flags are accepted by every command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--solver-cmd",
        default=None,
        help="Solver command template; '{instance}' is replaced by the DIMACS path",
    )
    common.add_argument("--time-limit", type=float, default=None, help="Seconds per instance")
    common.add_argument("--workers", type=int, default=None, help="Concurrent solver processes")
    common.add_argument(
        "--no-prune-singletons",
        action="store_true",
        help="Keep partitions with more singleton parts than s",
    )
    common.add_argument("--records", type=Path, default=None, help="Record log file")
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Override LOG_LEVEL",
    )

    parser = argparse.ArgumentParser(
        prog=settings.app.name,
        description="Sensitivity and block sensitivity of Boolean functions",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("analyze", parents=[common], help="Analyze a truth-table file")
    p.add_argument("file", help="File in the 'n=<int>' / bits format")
    p.set_defaults(handler=analyze)

    p = commands.add_parser("family", parents=[common], help="Check a separating family")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument(
        "--virza-k",
        "--paired-k",
        dest="paired_k",
        type=int,
        help="Paired-sections family on (2k+1)^2 variables",
    )
    which.add_argument("--rubinstein-m", type=int, help="Rubinstein family on m^2 variables")
    action = p.add_mutually_exclusive_group()
    action.add_argument("--emit-table", action="store_true", help="Print the truth table")
    action.add_argument("--check", action="store_true", help="Check s and bs (default)")
    p.add_argument("--allow-large", action="store_true", help="Allow the extended scan limit")
    p.set_defaults(handler=family)

    p = commands.add_parser("encode", parents=[common], help="Write DIMACS instances")
    _point_arguments(p, bs=True)
    p.add_argument("--partition", default=None, help="Single partition, e.g. 2,1,1")
    p.add_argument("--out", required=True, help="Output directory")
    p.set_defaults(handler=encode)

    p = commands.add_parser("search", parents=[common], help="Decide one (n, s, bs) point")
    _point_arguments(p, bs=True)
    p.set_defaults(handler=search)

    p = commands.add_parser("max-bs", parents=[common], help="Largest feasible bs for (n, s)")
    _point_arguments(p, bs=False)
    p.add_argument("--start-bs", type=int, default=None, help="Known achievable bs to start from")
    p.set_defaults(handler=max_bs)

    p = commands.add_parser("table", parents=[common], help="Build the separation table")
    p.add_argument("--max-n", type=int, default=None, help="Largest n (default SEARCH_TABLE_MAX_N)")
    p.set_defaults(handler=table)

    p = commands.add_parser("oracle", parents=[common], help="Brute-force max bs per s")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="Only report this sensitivity")
    p.add_argument("--out", default=None, help="Directory for witness tables")
    p.add_argument("--allow-large", action="store_true", help="Allow n up to the extended limit")
    p.set_defaults(handler=oracle)

    p = commands.add_parser("verify-log", parents=[common], help="Re-verify the record log")
    p.set_defaults(handler=verify_log)
    return parser


def _instance_name(n: int, s: int, bs: int, partition: Partition) -> str:
    return f"n{n}_s{s}_bs{bs}_p{'-'.join(map(str, partition.parts))}.cnf"


def _point_arguments(parser: argparse.ArgumentParser, bs: bool) -> None:
    parser.add_argument("--n", type=int, required=True, help="Number of variables")
    parser.add_argument("--s", type=int, required=True, help="Sensitivity bound")
    if bs:
        parser.add_argument("--bs", type=int, required=True, help="Block sensitivity target")


def run(handler: Handler, args: argparse.Namespace, options: RunOptions) -> int:
    """Run one command, mapping failures to exit codes."""
    try:
        return handler(args, options)
    except DomainException as exc:
        logger.error(
            "domain_exception",
            exception_type=type(exc).__name__,
            message=exc.message,
            command=args.command,
        )
        sys.stderr.write(f"error: {exc.message}\n")
        return 2
    except OSError as exc:
        logger.error("io_error", message=str(exc), command=args.command)
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except Exception as exc:
        logger.exception(
            "unexpected_exception",
            exception_type=type(exc).__name__,
            message=str(exc),
            command=args.command,
        )
        return 1


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the console script."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    options = RunOptions.resolve(
        solver_cmd=args.solver_cmd,
        time_limit=args.time_limit,
        workers=args.workers,
        no_prune_singletons=args.no_prune_singletons,
        records=args.records,
    )
    logger.debug("command_started", command=args.command, version=settings.app.version)
    handler: Handler = args.handler
    return run(handler, args, options)


if __name__ == "__main__":
    sys.exit(main())
