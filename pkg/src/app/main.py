"""명령행 진입점"""
import argparse
import json
import sys
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from src.app.di import Container, build_container
from src.core.exceptions import EXIT_SUCCESS, EXIT_USAGE_ERROR, HeckeError, exit_code_for
from src.presentation.mappers.text import render_text
from src.presentation.schemas.commands import RunConfig
from src.shared.logging import configure_logging, get_logger
from src.shared.result import Result, Success

logger = get_logger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """하위 명령별 인자 정의"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=["json", "text"], default="json",
                        help="report format (default: json)")
    common.add_argument("--element-cap", type=int, default=None,
                        help="ball size guard (overrides HECKE_ELEMENT_CAP)")
    common.add_argument("--log-level", default=None, help="structlog level (default: WARNING)")

    parser = argparse.ArgumentParser(
        prog="hecke",
        description="K-theoretic invariants of Hecke C*-algebras of right-angled Coxeter groups",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    cliques_parser = subparsers.add_parser("cliques", parents=[common], help="enumerate and count cliques")
    cliques_parser.add_argument("graph", help="graph file")

    ktheory_parser = subparsers.add_parser("ktheory", parents=[common], help="K_0 basis and trace pairing")
    ktheory_parser.add_argument("graph", help="graph file")
    ktheory_parser.add_argument("--q", default="1", help="'1/3' or 'a=1/3,b=1/2'")

    compare_parser = subparsers.add_parser("compare", parents=[common], help="compare two graphs' invariants")
    compare_parser.add_argument("graphs", nargs=2, metavar="graph", help="graph files")
    compare_parser.add_argument("--q", default="1", help="q for the first graph (and the second by default)")
    compare_parser.add_argument("--q-second", default=None, help="q for the second graph")

    classify_parser = subparsers.add_parser("classify", parents=[common], help="classify Z/2Z^{*n} parameters")
    classify_parser.add_argument("-n", type=int, required=True, help="number of generators (>= 3)")
    classify_parser.add_argument("--q1", required=True)
    classify_parser.add_argument("--q2", required=True)
    classify_parser.add_argument("--thickness", action="store_true", help="list recognised thickness d <= n-1")

    growth_parser = subparsers.add_parser("growth", parents=[common], help="growth sequence s_0..s_L")
    growth_parser.add_argument("graph", help="graph file")
    growth_parser.add_argument("-L", dest="radius", type=int, required=True)

    verify_parser = subparsers.add_parser("verify", parents=[common], help="numerical oracle report")
    verify_parser.add_argument("graph", help="graph file")
    verify_parser.add_argument("--q", default="1", help="'1/3' or 'a=1/3,b=1/2'")
    verify_parser.add_argument("-L", dest="radius", type=int, default=None)
    verify_parser.add_argument("--tol", dest="tolerance", type=float, default=None)
    verify_parser.add_argument("--exact", action="store_true", help="integer arithmetic (q rational squares)")

    subparsers.add_parser("reproduce", parents=[common], help="run the acceptance suite")
    return parser


def build_config(args: argparse.Namespace, container: Optional[Container] = None) -> RunConfig:
    """argparse 결과 -> 검증된 RunConfig"""
    values = {
        "command": args.command,
        "output": args.output,
        "element_cap": args.element_cap,
    }
    if getattr(args, "graph", None) is not None:
        values["graphs"] = [args.graph]
    if getattr(args, "graphs", None) is not None:
        values["graphs"] = list(args.graphs)
    for field in ("q", "q_second", "n", "q1", "q2", "thickness", "radius", "tolerance", "exact"):
        value = getattr(args, field, None)
        if value is not None:
            values[field] = value
    return RunConfig(**values)


def dispatch(config: RunConfig, container: Container) -> Result:
    """명령을 서비스 호출로 연결"""
    service = container.invariant_service
    graphs = config.graphs
    if config.command == "cliques":
        return service.cliques(graphs[0])
    if config.command == "ktheory":
        return service.ktheory(graphs[0], config.q)
    if config.command == "compare":
        return service.compare(graphs[0], graphs[1], config.q, config.q_second)
    if config.command == "classify":
        return service.classify(config.n, config.q1, config.q2, config.thickness)
    if config.command == "growth":
        return service.growth(graphs[0], config.radius)
    if config.command == "verify":
        radius = config.radius if "radius" in config.model_fields_set else None
        tolerance = config.tolerance if "tolerance" in config.model_fields_set else None
        return service.verify(graphs[0], config.q, radius, tolerance, config.exact)
    return Success(container.reproduce_service.run())


def render(report: BaseModel, output: str) -> str:
    """보고서 직렬화 (같은 입력이면 같은 바이트)"""
    if output == "text":
        return render_text(report)
    return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False)


def run(config: RunConfig, container: Optional[Container] = None) -> int:
    """명령 실행: 보고서는 표준 출력, 오류는 표준 에러"""
    container = container or build_container(config.element_cap)
    result = dispatch(config, container)
    if result.is_failure():
        print(f"error: {result.get_error().message}", file=sys.stderr)
        return result.exit_code

    report = result.get_value()
    print(render(report, config.output))
    if config.command == "reproduce" and not report.passed:
        return 1
    return EXIT_SUCCESS


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(level=args.log_level)
    try:
        config = build_config(args)
    except ValidationError as e:
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or "arguments"
            print(f"error: {location}: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except HeckeError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return exit_code_for(e)

    logger.debug("run_config", command=config.command, output=config.output)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
