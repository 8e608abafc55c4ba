import argparse
import json
import logging
import sys
from typing import List, Optional
from GroupShifts import GroupShiftAnalyzer
from GroupShifts.constants import DEFAULT_PERIOD_BOUND, DEFAULT_SIZE_BUDGET, EXIT_OK, EXIT_PARSE_ERROR, \
    EXIT_VERIFICATION_FAILURE, SDK_NAME, SDK_VERSION
from GroupShifts.exceptions import GroupShiftError
from GroupShifts.utils import LOGGER

OPERATIONS = ("analyze", "decompose", "invariants", "star", "dot")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="groupshift",
                                     description="Structure analysis of one-sided group shifts.")
    parser.add_argument("--version", action="version", version="{} {}".format(SDK_NAME, SDK_VERSION))

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--period-bound", type=int, default=DEFAULT_PERIOD_BOUND, metavar="P",
                        help="Largest period for periodic point counts")
    common.add_argument("--budget", type=int, default=DEFAULT_SIZE_BUDGET, metavar="ELEMENTS",
                        help="Largest group or block enumeration to build")
    common.add_argument("--certificates", action="store_true", help="Dump full certificate block tables")
    common.add_argument("--cache", action="store_true", help="Keep reports in the on-disk cache")
    common.add_argument("--verbose", "-v", action="count", default=0)

    commands = parser.add_subparsers(dest="command", required=True)
    for operation in OPERATIONS:
        command = commands.add_parser(operation, parents=[common])
        command.add_argument("manifest", help="Manifest JSON file")
        command.add_argument("shift", help="Shift name in the manifest")
        if operation == "dot":
            command.add_argument("--output", "-o", metavar="PATH", help="DOT file to write")

    run = commands.add_parser("run", parents=[common], help="Run the manifest's task list")
    run.add_argument("manifest", help="Manifest JSON file")
    run.add_argument("--jobs", "-j", type=int, default=1)
    run.add_argument("--output", "-o", metavar="PATH", help="DOT file for dot tasks")
    return parser


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append("{}: {}".format(key, value))
    return "\n".join(lines)


def exit_code_of(report: dict) -> int:
    """
    Nonzero when the report carries an error or a failed verification.
    """
    if "exit_code" in report:
        return report["exit_code"]
    if report.get("verified") is False:
        return EXIT_VERIFICATION_FAILURE
    series = report.get("series")
    if isinstance(series, dict) and series.get("verified") is False:
        return EXIT_VERIFICATION_FAILURE
    return EXIT_OK


def emit(reports: List[dict], as_json: bool) -> None:
    if as_json:
        payload = reports[0] if len(reports) == 1 else reports
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for i, report in enumerate(reports):
        if i:
            print()
        if report.get("operation") == "dot" and not report.get("output"):
            print(report["dot"])
            continue
        print(render_text({k: v for k, v in report.items() if k != "dot"}))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        with open(args.manifest, encoding="utf-8") as manifest_file:
            text = manifest_file.read()
    except OSError as excep:
        print("error: cannot read {}: {}".format(args.manifest, excep.strerror), file=sys.stderr)
        return EXIT_PARSE_ERROR

    context = {"certificates": args.certificates, "output": getattr(args, "output", None)}
    try:
        analyzer = GroupShiftAnalyzer(text,
                                      size_budget=args.budget,
                                      period_bound=args.period_bound,
                                      disable_cache=not args.cache)
        if args.command == "run":
            reports = analyzer.run_all(jobs=args.jobs, context=context)
        else:
            reports = [analyzer.run_task(args.command, args.shift, context=context)]
    except GroupShiftError as excep:
        LOGGER.debug("Command %s failed", args.command, exc_info=True)
        print("error: {}".format(excep), file=sys.stderr)
        return excep.exit_code

    emit(reports, args.json)
    codes = [exit_code_of(report) for report in reports]
    return next((code for code in codes if code != EXIT_OK), EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())
