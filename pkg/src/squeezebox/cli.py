"""Command line interface.

Subcommands: ``encode`` (trace -> timed byte log), ``decode`` (bytes ->
timeline), ``simulate`` (trace -> link statistics), ``serve`` (live bridge
for the browser panel). Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from .config import ConfigError, RunConfig, load_config
from .engine import format_encode_log, format_timeline, parse_encode_log, run_decode, run_encode
from .traces import TraceError, load_trace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="squeezebox", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    encode = sub.add_parser("encode", help="encode a gesture trace to a timed MIDI byte log")
    encode.add_argument("--trace", required=True, help="trace CSV file")
    encode.add_argument("--config", help="run config JSON file")
    encode.add_argument("--out", help="output log path (default: stdout)")
    encode.add_argument(
        "--emit-initial", action="store_true",
        help="transmit a value snapshot at the first sample",
    )

    decode = sub.add_parser("decode", help="decode raw MIDI bytes to a state timeline")
    decode.add_argument("--in", dest="infile", required=True, help="input byte file")
    decode.add_argument("--config", help="run config JSON file")
    decode.add_argument(
        "--from-log", action="store_true",
        help="input is a timed byte log from 'encode' rather than raw bytes",
    )

    simulate = sub.add_parser("simulate", help="run a trace through the link and report stats")
    simulate.add_argument("--trace", required=True, help="trace CSV file")
    simulate.add_argument("--config", help="run config JSON file")
    simulate.add_argument("--stats", action="store_true", help="print the full counter block")

    serve = sub.add_parser("serve", help="serve the live bridge (and UI, if built)")
    serve.add_argument("--port", type=int, required=True)
    serve.add_argument("--config", help="run config JSON file")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--ui-dir", help="directory of built panel assets to serve at /")

    return parser


def _load_run_config(path: Optional[str]) -> RunConfig:
    if path is None:
        return RunConfig()
    return load_config(path)


def _cmd_encode(args) -> int:
    config = _load_run_config(args.config)
    if args.emit_initial:
        config = replace(config, emit_initial=True)
    records = load_trace(args.trace)
    result = run_encode(records, config)
    log = format_encode_log(result, config.output_format)
    if args.out:
        Path(args.out).write_text(log, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(log)
    return EXIT_OK


def _cmd_decode(args) -> int:
    config = _load_run_config(args.config)
    raw = Path(args.infile).read_bytes()
    if args.from_log:
        data = parse_encode_log(raw.decode("utf-8"))
    else:
        data = raw
    result = run_decode(data, config)
    sys.stdout.write(format_timeline(result, config.output_format))
    return EXIT_OK


def _cmd_simulate(args) -> int:
    config = _load_run_config(args.config)
    records = load_trace(args.trace)
    result = run_encode(records, config)
    stats = result.stats
    print(
        f"records={len(records)} events={result.events_encoded}"
        f" messages_sent={stats.messages_sent}"
    )
    if args.stats:
        print(f"ccs_coalesced={stats.ccs_coalesced}")
        print(f"peak_queue_depth={stats.peak_queue_depth}")
        print(f"peak_msgs_per_sec={stats.peak_msgs_per_sec}")
        print(f"link_capacity_msgs_per_sec={config.link().messages_per_second}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .bridge import serve_live  # deferred: pulls in the asgi stack

    config = _load_run_config(args.config)
    serve_live(host=args.host, port=args.port, config=config, ui_dir=args.ui_dir)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    handlers = {
        "encode": _cmd_encode,
        "decode": _cmd_decode,
        "simulate": _cmd_simulate,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (TraceError, ConfigError) as exc:
        print(f"squeezebox: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"squeezebox: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"squeezebox: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
