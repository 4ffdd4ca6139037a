"""Command-line front end.

Subcommands mirror the solve service: ``rank``, ``extensions`` and
``properties`` read an APX (or JSON) framework file and print text, TSV or
JSON; ``serve`` starts the HTTP service. Exit codes: 0 success, 2 input
parse error, 3 framework too large, 4 invalid flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .framework import (
    DEFAULT_MAX_ARGS,
    ParseError,
    SizeLimitError,
    parse_apx,
    parse_json,
    serialize,
)
from .indexes import INDEXES
from .properties import PROPERTIES, search_counterexample
from .semantics import SEMANTICS
from .solve import RequestError, payload_bytes, solve

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_FLAGS = 4


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 4 on bad flags instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FLAGS, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="afrank",
        description="Rank arguments of abstract argumentation frameworks "
        "with exact cooperative-game power indexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p):
        p.add_argument("file", help="framework file (.apx facts or .json)")
        p.add_argument(
            "--semantics", required=True, choices=SEMANTICS, help="labelling semantics"
        )
        p.add_argument(
            "--max-args",
            type=int,
            default=DEFAULT_MAX_ARGS,
            help="argument-count cap (enumeration is exponential)",
        )

    p_rank = sub.add_parser("rank", help="score and rank every argument")
    add_common(p_rank)
    p_rank.add_argument("--index", required=True, choices=INDEXES, help="power index")
    p_rank.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    p_rank.add_argument(
        "--exact",
        action="store_true",
        help="compare exact rationals instead of 5-decimal roundings, and "
        "include the exact values in the output",
    )
    p_rank.add_argument("--output", help="write the output to a file instead of stdout")

    p_ext = sub.add_parser("extensions", help="enumerate extensions")
    add_common(p_ext)
    p_ext.add_argument("--format", choices=("text", "json"), default="text")
    p_ext.add_argument(
        "--count", action="store_true", help="print only the number of extensions"
    )

    p_prop = sub.add_parser("properties", help="check ranking properties")
    add_common(p_prop)
    p_prop.add_argument("--index", choices=INDEXES, default="shapley")
    p_prop.add_argument(
        "--property",
        default="all",
        choices=("all",) + PROPERTIES,
        help="property to check on the input framework",
    )
    p_prop.add_argument("--format", choices=("text", "json"), default="text")
    p_prop.add_argument(
        "--search",
        metavar="PROPERTY",
        choices=PROPERTIES,
        help="search for a counterexample framework instead of checking the input",
    )
    p_prop.add_argument("--samples", type=int, default=10000)
    p_prop.add_argument("--seed", type=int, default=0)

    p_serve = sub.add_parser("serve", help="run the JSON solve service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--max-args", type=int, default=DEFAULT_MAX_ARGS)
    p_serve.add_argument("--timeout-ms", type=int, default=None)
    p_serve.add_argument(
        "--ui-dir", default=None, help="serve this directory at /ui (the web editor)"
    )
    return parser


def _load_framework(path: str, max_args: int):
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".json"):
        return parse_json(text, max_args=max_args)
    return parse_apx(text, max_args=max_args)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _request(af, task, args) -> dict:
    req = {
        "framework": json.loads(serialize(af, "json")),
        "semantics": args.semantics,
        "task": task,
        "options": {"max_args": args.max_args},
    }
    index = getattr(args, "index", None)
    if index:
        req["index"] = index
    if getattr(args, "exact", False):
        req["options"]["exact"] = True
    if task == "properties":
        req["property"] = args.property
    return req


def _rank_text(payload: dict, tsv: bool) -> str:
    rows = payload["result"]["scores"]
    lines = []
    if tsv:
        lines.append("argument\tpi_in\tpi_out\tclass")
        for row in rows:
            lines.append(f"{row['argument']}\t{row['pi_in']}\t{row['pi_out']}\t{row['class']}")
    else:
        lines.append(f"{'argument':<10}{'pi_in':>12}{'pi_out':>12}{'class':>7}")
        for row in rows:
            lines.append(
                f"{row['argument']:<10}{row['pi_in']:>12}{row['pi_out']:>12}{row['class']:>7}"
            )
    lines.append("ranking: " + payload["result"]["ranking"])
    for w in payload["warnings"]:
        lines.append("warning: " + w)
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        from .service import serve

        serve(
            port=args.port,
            host=args.host,
            max_args=args.max_args,
            timeout_ms=args.timeout_ms,
            static_dir=args.ui_dir,
        )
        return EXIT_OK

    if args.command == "properties" and args.search:
        report = search_counterexample(
            args.search,
            args.semantics,
            args.index,
            max_args=min(args.max_args, 7),
            samples=args.samples,
            seed=args.seed,
        )
        obj = report.to_json()
        if args.format == "json":
            print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
        else:
            print(f"{report.property} [{report.semantics}/{report.index}]: {report.verdict}")
            print(f"tested: {report.tested}  skipped: {report.skipped}")
            if report.witness:
                print("witness pair: " + ", ".join(report.witness["pair"]))
                print(report.witness["apx"])
        return EXIT_OK

    try:
        af = _load_framework(args.file, args.max_args)
    except OSError as exc:
        print(f"afrank: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeLimitError as exc:
        print(f"afrank: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ParseError as exc:
        print(f"afrank: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    task = args.command
    try:
        payload = solve(_request(af, task, args), max_args_cap=args.max_args)
    except SizeLimitError as exc:
        print(f"afrank: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (RequestError, ParseError) as exc:
        print(f"afrank: {exc}", file=sys.stderr)
        return EXIT_PARSE

    fmt = getattr(args, "format", "text")
    output = getattr(args, "output", None)

    if fmt == "json":
        _emit(payload_bytes(payload).decode("utf-8"), output)
        return EXIT_OK

    if task == "rank":
        _emit(_rank_text(payload, tsv=(fmt == "tsv")), output)
    elif task == "extensions":
        result = payload["result"]
        if args.count:
            _emit(str(result["count"]), output)
        else:
            lines = ["{" + ",".join(members) + "}" for members in result["extensions"]]
            lines += ["warning: " + w for w in payload["warnings"]]
            _emit("\n".join(lines), output)
    else:
        lines = []
        for rep in payload["result"]["reports"]:
            line = f"{rep['property']} [{rep['semantics']}/{rep['index']}]: {rep['verdict']}"
            if rep["witness"]:
                line += f"  (pair {', '.join(rep['witness']['pair'])})"
            lines.append(line)
        lines += ["warning: " + w for w in payload["warnings"]]
        _emit("\n".join(lines), output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
