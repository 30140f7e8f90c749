"""Command line entry point.

One subcommand per pipeline stage plus `run` (all stages) and `serve`
(audit server over a finished run). Configuration resolves in three
layers: built-in defaults, then --config file, then individual flags.

Exit codes: 0 success, 2 bad usage or configuration, 3 a stage failed.
"""

from __future__ import annotations

import argparse
import sys

from .config import load_config
from .errors import ConfigError, EthosError, StageFailed
from .pipeline import STAGES, Run, ingest_current, run_all, run_stage

USAGE_EXIT = 2
FAILURE_EXIT = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ethos",
        description="Audit app-store reviews: topics, ethics alignment, sentiment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--run-dir", required=True, help="run directory holding the artifacts")
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--seed", type=int, help="override the RNG seed")
    common.add_argument("--k", type=int, help="override the topic count (0 = pick from the sweep)")
    common.add_argument("--threshold", type=float, help="override the alignment threshold")
    common.add_argument("--force", action="store_true", help="re-run even when artifacts are current")

    sources = argparse.ArgumentParser(add_help=False)
    sources.add_argument("--input", action="append", default=[], help="reviews jsonl file (repeatable)")
    sources.add_argument("--app", action="append", default=[], help="app id to fetch from a store (repeatable)")
    sources.add_argument("--store", choices=("play", "appstore"), help="store for --app fetches")
    sources.add_argument("--country", help="store country code")
    sources.add_argument("--max-pages", type=int, help="page budget per store fetch")

    sub.add_parser("ingest", parents=[common, sources], help="collect reviews into the run directory")
    for stage in STAGES[1:]:
        sub.add_parser(stage, parents=[common], help=f"run the {stage} stage")
    sub.add_parser("run", parents=[common, sources], help="run every stage in order")

    serve = sub.add_parser("serve", parents=[common], help="serve the audit API and UI for a run")
    serve.add_argument("--host", help="bind address")
    serve.add_argument("--port", type=int, help="bind port")

    return parser


def _config_from_args(args: argparse.Namespace):
    overrides = {}
    for key in ("seed", "k", "threshold", "country", "max_pages", "host", "port"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    return load_config(args.config, overrides)


def _sources(args: argparse.Namespace) -> tuple[list[str], list[str], str]:
    inputs = list(args.input)
    apps = list(args.app)
    if apps and not args.store:
        raise ConfigError("--app requires --store")
    if args.store and not apps:
        raise ConfigError("--store requires at least one --app")
    return inputs, apps, args.store or ""


def _report_stage_lines(run: Run, result) -> list[str]:
    if result is None:
        return []
    return [str(p.relative_to(run.dir.parent) if p.is_relative_to(run.dir.parent) else p) for p in result]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        run = Run(args.run_dir, cfg)

        if args.command == "ingest":
            inputs, apps, store = _sources(args)
            if not inputs and not apps:
                raise ConfigError("ingest needs --input and/or --app")
            if not args.force and ingest_current(run, inputs, apps):
                print("ingest: current, skipped")
            else:
                n = run_stage(run, "ingest", force=True, inputs=inputs, apps=apps, store=store)
                print(f"ingest: {n} reviews")
            return 0

        if args.command == "run":
            inputs, apps, store = _sources(args)
            outcome = run_all(run, inputs=inputs, apps=apps, store=store, force=args.force)
            for stage, state in outcome.items():
                print(f"{stage}: {state}")
            report = run.path("report.md")
            if report.exists():
                print(f"report: {report}")
            return 0

        if args.command == "serve":
            from . import server

            server.serve(run)
            return 0

        # single pipeline stage
        stage = args.command
        result = run_stage(run, stage, force=args.force)
        if result is None and not args.force:
            print(f"{stage}: current, skipped")
        elif stage == "prep":
            filt = result["filter"]
            print(f"prep: kept {filt['kept']} of {filt['input']}")
        elif stage == "corpus":
            print(f"corpus: {result} vocabulary terms")
        elif stage == "sweep":
            print(f"sweep: best k = {result.best_k}")
        elif stage == "train":
            print(f"train: k = {result}")
        elif stage == "align":
            emergent = sum(1 for a in result if a.emergent)
            print(f"align: {len(result)} topics, {emergent} emergent")
        elif stage == "sentiment":
            print(f"sentiment: {len(result)} classifications")
        elif stage == "report":
            for line in _report_stage_lines(run, result):
                print(f"report: {line}")
        else:
            print(f"{stage}: done")
        return 0

    except StageFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE_EXIT
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except EthosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE_EXIT


if __name__ == "__main__":
    sys.exit(main())
