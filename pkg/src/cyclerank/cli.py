"""Batch command-line interface.

    cyclerank run --input graph.csv --algorithm cyclerank --source "Fake news" --k 3
    cyclerank compare --input graph.csv --spec columns.txt --output table
    cyclerank serve --port 8080 --data-dir ./data

``run`` executes one algorithm and prints rank,label,score rows.
``compare`` executes several request lines against one input file and
renders the rankings side by side, one column per request.  ``serve``
starts the HTTP task service.  Scores print with 6 significant digits
in csv/table modes; json mode keeps full precision.
"""
from __future__ import annotations

import argparse
import csv
import json
import shlex
import sys
from pathlib import Path

from .exceptions import GraphFormatError, UnknownNodeError
from .formats import FORMATS, load_graph
from .rankers import ALGORITHMS, PERSONALIZED_ALGORITHMS, make_ranker


class CliError(Exception):
    pass


class _RaisingParser(argparse.ArgumentParser):
    """Parser that raises instead of exiting, for per-line spec parsing."""

    def error(self, message):
        raise CliError(message)


def _add_query_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algorithm", required=True, choices=sorted(ALGORITHMS))
    parser.add_argument("--source", help="reference node label (personalized algorithms)")
    parser.add_argument("--alpha", type=float, help="damping factor in (0,1)")
    parser.add_argument("--k", type=int, help="maximum cycle length (cyclerank)")
    parser.add_argument("--sigma", help="cycle scoring: exponential|reciprocal|constant")
    parser.add_argument("--top-k", dest="top_k", type=int, default=50)


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="graph file to read")
    parser.add_argument("--format", default="auto", choices=("auto",) + FORMATS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclerank",
        description="Personalized relevance rankings for directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one algorithm and print the top-k ranking")
    _add_input_flags(run)
    _add_query_flags(run)
    run.add_argument("--output", default="csv", choices=("table", "csv", "json"))

    comp = sub.add_parser("compare", help="run several algorithms side by side")
    _add_input_flags(comp)
    comp.add_argument(
        "--spec",
        required=True,
        help="file with one request per line, e.g. `--algorithm pagerank --alpha 0.3`",
    )
    comp.add_argument("--output", default="table", choices=("table", "csv", "json"))

    srv = sub.add_parser("serve", help="start the HTTP task service")
    srv.add_argument("--host")
    srv.add_argument("--port", type=int)
    srv.add_argument("--data-dir", dest="data_dir")
    srv.add_argument("--workers", type=int)
    srv.add_argument("--max-upload-bytes", dest="max_upload_bytes", type=int)
    srv.add_argument("--static-dir", dest="static_dir", help="serve a built dashboard from here")
    return parser


def _check_source(args) -> None:
    if args.algorithm in PERSONALIZED_ALGORITHMS and not args.source:
        raise CliError(f"--source is required for {args.algorithm}")


def _fit(graph, args):
    _check_source(args)
    ranker = make_ranker(
        args.algorithm, source=args.source, alpha=args.alpha, k=args.k, sigma=args.sigma
    )
    ranker.fit(graph)
    return ranker


def _fmt_score(score: float | None) -> str:
    return "" if score is None else f"{score:.6g}"


def _column_title(args) -> str:
    bits = [args.algorithm]
    if args.algorithm == "cyclerank":
        bits.append(f"k={args.k if args.k is not None else 3}")
        bits.append(f"sigma={args.sigma or 'exponential'}")
    else:
        bits.append(f"alpha={args.alpha if args.alpha is not None else 0.85}")
    if args.source:
        bits.append(f"src={args.source}")
    return " ".join(bits)


def _print_table(header: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    line = "  ".join(h.ljust(w) for h, w in zip(header, widths))
    print(line.rstrip())
    print("  ".join("-" * w for w in widths))
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


def cmd_run(args) -> int:
    graph = load_graph(args.input, args.format)
    ranker = _fit(graph, args)
    rows = ranker.top_k(args.top_k)

    if args.output == "json":
        payload = {
            "algorithm": args.algorithm,
            "source": args.source,
            "parameters": ranker.get_params(),
            "rows": [
                {"rank": r.rank, "label": r.label}
                | ({"score": r.score} if r.score is not None else {})
                for r in rows
            ],
        }
        if hasattr(ranker, "converged_"):
            payload["converged"] = bool(ranker.converged_)
        print(json.dumps(payload, indent=2))
    elif args.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["rank", "label", "score"])
        for r in rows:
            writer.writerow([r.rank, r.label, _fmt_score(r.score)])
    else:
        _print_table(
            ["rank", "label", "score"],
            [[str(r.rank), r.label, _fmt_score(r.score)] for r in rows],
        )
    return 0


def _parse_spec_lines(path: str) -> list[argparse.Namespace]:
    spec_parser = _RaisingParser(prog="compare-spec", add_help=False)
    _add_query_flags(spec_parser)
    requests = []
    text = Path(path).read_text(encoding="utf-8")
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        requests.append(spec_parser.parse_args(shlex.split(line)))
    if len(requests) < 2:
        raise CliError("compare needs at least 2 request lines in --spec")
    return requests


def cmd_compare(args) -> int:
    graph = load_graph(args.input, args.format)
    requests = _parse_spec_lines(args.spec)

    columns = []
    for req in requests:
        try:
            ranker = _fit(graph, req)
            columns.append(
                {"title": _column_title(req), "top_k": req.top_k, "rows": ranker.top_k(req.top_k)}
            )
        except (CliError, ValueError, UnknownNodeError) as exc:
            columns.append({"title": _column_title(req), "top_k": req.top_k, "error": str(exc)})

    failures = sum(1 for c in columns if "error" in c)
    depth = max(c["top_k"] for c in columns)

    if args.output == "json":
        payload = {"input": args.input, "columns": []}
        for col in columns:
            if "error" in col:
                payload["columns"].append({"title": col["title"], "error": col["error"]})
            else:
                payload["columns"].append(
                    {
                        "title": col["title"],
                        "rows": [
                            {"rank": r.rank, "label": r.label}
                            | ({"score": r.score} if r.score is not None else {})
                            for r in col["rows"]
                        ],
                    }
                )
        print(json.dumps(payload, indent=2))
    elif args.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        header = ["rank"]
        for col in columns:
            header += [f"{col['title']} label", f"{col['title']} score"]
        writer.writerow(header)
        for i in range(depth):
            row = [i + 1]
            for col in columns:
                row += _compare_cell(col, i, split=True)
            writer.writerow(row)
    else:
        header = ["rank"] + [c["title"] for c in columns]
        body = []
        for i in range(depth):
            body.append([str(i + 1)] + [_compare_cell(c, i, split=False) for c in columns])
        _print_table(header, body)

    return 1 if failures else 0


def _compare_cell(col: dict, i: int, split: bool):
    if "error" in col:
        text = f"error: {col['error']}" if i == 0 else ""
        return [text, ""] if split else text
    rows = col["rows"]
    if i >= len(rows) or i >= col["top_k"]:
        return ["", ""] if split else ""
    r = rows[i]
    if split:
        return [r.label, _fmt_score(r.score)]
    return r.label if r.score is None else f"{r.label} ({_fmt_score(r.score)})"


def cmd_serve(args) -> int:
    from .service import ServiceConfig, serve

    config = ServiceConfig.from_env(
        host=args.host,
        port=args.port,
        data_dir=Path(args.data_dir) if args.data_dir else None,
        workers=args.workers,
        max_upload_bytes=args.max_upload_bytes,
        static_dir=Path(args.static_dir) if args.static_dir else None,
    )
    print(f"serving on http://{config.host}:{config.port} (data: {config.data_dir})")
    serve(config)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args)
        if args.command == "compare":
            return cmd_compare(args)
        return cmd_serve(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, UnknownNodeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
