"""Command-line interface.

Four commands: validate, hist, bench, map. Option precedence is CLI flag
over config-file entry over built-in default, and every run prints its
resolved configuration to stderr so results can be reproduced.

Exit codes are a stable scripting contract: 0 success, 2 input/parse
problems (bad CSV, unreadable file, bad flags), 3 domain problems (unknown
category, empty data), 4 internal errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import traceback
from pathlib import Path

from .benchmark import (
    DEFAULT_ALPHA,
    DEFAULT_BIN_COUNT,
    DEFAULT_TOP_K,
    BenchmarkRequest,
    cross_indicator_summary,
    run_benchmark,
    top_k,
)
from .corpus import Indicator, category_values, load_corpus, validate_corpus
from .errors import CorpusFormatError, HeliobenchError
from .heliomap import layout_map, load_prestige_order, render_svg
from .histogram import build_histogram, pooled_bin_spec

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4

DEFAULTS = {
    "indicator": "all",
    "bins": DEFAULT_BIN_COUNT,
    "scale": None,  # None = per-indicator default (log for es, linear otherwise)
    "alpha": DEFAULT_ALPHA,
    "k": DEFAULT_TOP_K,
    "format": "json",
    "min_records": 5,
    "category": None,
    "reference": None,
    "prestige": None,
    "out": None,
    "summary": False,
}

_COERCE = {
    "bins": int,
    "k": int,
    "min_records": int,
    "alpha": float,
    "summary": lambda s: str(s).strip().lower() in ("1", "true", "yes", "on"),
    "category": lambda s: [s],
}


def _read_config_file(path: str) -> dict:
    """key=value lines; blank lines and # comments ignored."""
    entries = {}
    for n, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CorpusFormatError(f"config entry is not key=value: {raw!r}", line=n)
        key, _, value = line.partition("=")
        entries[key.strip()] = value.strip()
    return entries


def _resolve(args: argparse.Namespace) -> dict:
    file_cfg = _read_config_file(args.config) if getattr(args, "config", None) else {}
    resolved = {}
    for key, default in DEFAULTS.items():
        cli_value = getattr(args, key, None)
        if cli_value is not None and cli_value is not False:
            resolved[key] = cli_value
        elif key in file_cfg:
            coerce = _COERCE.get(key, str)
            resolved[key] = coerce(file_cfg[key])
        else:
            resolved[key] = default
    resolved["input"] = args.input
    resolved["command"] = args.command
    return resolved


def _indicators(resolved: dict) -> list[Indicator]:
    code = resolved["indicator"]
    if code == "all":
        return list(Indicator)
    return [Indicator.from_code(code)]


def _scales(resolved: dict) -> dict:
    if resolved["scale"] is None:
        return {}
    return {ind: resolved["scale"] for ind in Indicator}


def _slug(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-") or "unnamed"


def _emit(text: str, out_dir: str | None, filename: str) -> None:
    if out_dir is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        (directory / filename).write_text(text, encoding="utf-8")


def cmd_validate(resolved: dict) -> int:
    corpus = load_corpus(resolved["input"])
    report = validate_corpus(corpus, min_records=resolved["min_records"])
    _emit(json.dumps(report.to_dict(), indent=2, sort_keys=True), resolved["out"], "validation.json")
    return EXIT_OK


def cmd_hist(resolved: dict) -> int:
    corpus = load_corpus(resolved["input"])
    categories = resolved["category"] or corpus.category_names()
    for indicator in _indicators(resolved):
        scale = resolved["scale"] or ("log" if indicator is Indicator.EIGENFACTOR else "linear")
        spec = pooled_bin_spec(corpus, indicator, resolved["bins"], scale)
        for cat in categories:
            values, skipped = category_values(corpus, cat, indicator)
            hist = build_histogram(values, spec, resolved["alpha"])
            doc = {"category": cat, "indicator": indicator.code, "skipped": skipped}
            doc.update(hist.to_dict())
            _emit(
                json.dumps(doc, sort_keys=True),
                resolved["out"],
                f"hist_{_slug(cat)}_{indicator.code}.json",
            )
    return EXIT_OK


def _bench_results(corpus, resolved: dict):
    request = BenchmarkRequest(
        reference=resolved["reference"],
        indicators=tuple(_indicators(resolved)),
        bin_count=resolved["bins"],
        scales=_scales(resolved),
        alpha=resolved["alpha"],
        k=resolved["k"],
        prestige_path=resolved["prestige"],
    )
    return [top_k(result, request.k) for result in run_benchmark(corpus, request)]


def cmd_bench(resolved: dict) -> int:
    corpus = load_corpus(resolved["input"])
    results = _bench_results(corpus, resolved)
    fmt = resolved["format"]
    ref_slug = _slug(resolved["reference"])
    for result in results:
        text = (
            result.to_csv()
            if fmt == "csv"
            else json.dumps(result.to_dict(), indent=2, sort_keys=True)
        )
        _emit(text, resolved["out"], f"bench_{ref_slug}_{result.indicator.code}.{fmt}")
    if resolved["summary"]:
        summary = cross_indicator_summary(results)
        text = (
            summary.to_csv()
            if fmt == "csv"
            else json.dumps(summary.to_dict(), indent=2, sort_keys=True)
        )
        _emit(text, resolved["out"], f"bench_{ref_slug}_summary.{fmt}")
    return EXIT_OK


def cmd_map(resolved: dict) -> int:
    corpus = load_corpus(resolved["input"])
    results = _bench_results(corpus, resolved)
    order = load_prestige_order(resolved["prestige"]) if resolved["prestige"] else None
    ref_slug = _slug(resolved["reference"])
    for result in results:
        svg = render_svg(layout_map(result, order))
        _emit(svg, resolved["out"], f"map_{ref_slug}_{result.indicator.code}.svg")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heliobench",
        description="Benchmark journal categories by impact-indicator histograms "
        "and Kullback-Leibler information gain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, reference: bool = False) -> None:
        p.add_argument("--input", required=True, help="corpus CSV file")
        p.add_argument("--config", help="optional key=value config file")
        p.add_argument("--indicator", choices=["if", "es", "ii", "all"], default=None)
        p.add_argument("--bins", type=int, default=None, help="bin count (default 20)")
        p.add_argument("--scale", choices=["linear", "log"], default=None,
                       help="override binning scale for all indicators")
        p.add_argument("--alpha", type=float, default=None,
                       help="smoothing pseudo-count (default 0.5)")
        p.add_argument("--out", default=None, help="output directory (default: stdout)")
        if reference:
            p.add_argument("--reference", required=True, help="reference category name")
            p.add_argument("--k", type=int, default=None, help="top-k size (default 30)")
            p.add_argument("--prestige", default=None,
                           help="prestige-order file (one category per line, best first)")

    p_validate = sub.add_parser("validate", help="parse a corpus and report its shape")
    p_validate.add_argument("--input", required=True)
    p_validate.add_argument("--config", help="optional key=value config file")
    p_validate.add_argument("--out", default=None)
    p_validate.add_argument("--min-records", dest="min_records", type=int, default=None,
                            help="flag categories smaller than this (default 5)")
    p_validate.set_defaults(func=cmd_validate)

    p_hist = sub.add_parser("hist", help="export per-category histograms as JSON")
    common(p_hist)
    p_hist.add_argument("--category", action="append", default=None,
                        help="category to export (repeatable; default: all)")
    p_hist.set_defaults(func=cmd_hist)

    p_bench = sub.add_parser("bench", help="rank categories by information gain")
    common(p_bench, reference=True)
    p_bench.add_argument("--format", choices=["json", "csv"], default=None)
    p_bench.add_argument("--summary", action="store_true", default=False,
                         help="also write the cross-indicator summary table")
    p_bench.set_defaults(func=cmd_bench)

    p_map = sub.add_parser("map", help="render heliocentric clockwise maps as SVG")
    common(p_map, reference=True)
    p_map.set_defaults(func=cmd_map)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    try:
        resolved = _resolve(args)
        print(f"resolved-config: {json.dumps(resolved, sort_keys=True)}", file=sys.stderr)
        return args.func(resolved)
    except (CorpusFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HeliobenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
