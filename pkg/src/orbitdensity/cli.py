"""
Command-line frontend.

EXAMPLE RUNS (from the project root, after `pip install -e .`)
    orbitdensity density --set '{"type":"progression","m":2,"r":0}' --folner standard --horizon 200
    orbitdensity coa --point example51 --folner standard -k 2 --horizon 5040 --tol 0.05
    orbitdensity setclass --triple example52 --hi 100000
    orbitdensity chaos --x z --y '{"type":"periodic","word":"1"}' --horizon 10000 -R 6
    orbitdensity example 5.3 --format tsv
    orbitdensity folner --folner example53_H --horizon 80

Exit codes: 0 success, 1 an `example` claim failed, 2 malformed
specification or unknown example, 3 any other rejected parameter.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import polars as pl
import yaml

from orbitdensity.attraction.cover import coa_cover, cover_in_orbit, cover_shift_consistent
from orbitdensity.chaos.pairs import f_chaotic_witness, li_yorke_verdict
from orbitdensity.chaos.probes import tuple_sensitivity_witness
from orbitdensity.data.io_utils import (
    approx_decimal,
    dumps_record,
    format_fraction,
    frame_to_tsv,
    get_config_dir,
    to_fraction,
    write_output,
)
from orbitdensity.data.specs import (
    SpecError,
    parse_cylinder,
    parse_folner,
    parse_point,
    parse_set,
)
from orbitdensity.density.report import DEFAULT_HEADLINE_FRACTION, density_report, ratios_frame
from orbitdensity.density.visits import sojourn
from orbitdensity.folner.sequences import defect_table
from orbitdensity.sets.classify import (
    classify_triple,
    horizon_ladder,
    max_gap,
    max_run,
    thickly_syndetic_gaps,
)
from orbitdensity.sets.examples import example52_sets, example52_symmetrized
from orbitdensity.shift.points import window
from orbitdensity.verification import EXAMPLES

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
THREADS_ENV = "ORBITDENSITY_THREADS"

COMMANDS = ("density", "coa", "setclass", "chaos", "example", "folner")
DEFAULT_RESOLUTION = {"coa": 1, "chaos": 6}
DEFAULT_HORIZON = {"density": 200, "coa": 200, "chaos": 1000, "folner": 80}

# expected YAML types per option; documents (set, point, x, y, folner) are checked by their parsers
INT_OPTIONS = ("horizon", "resolution", "lo", "hi", "count", "threads")
RATIO_OPTIONS = ("tol", "headline_fraction", "threshold", "separation")
BOOL_OPTIONS = ("fchaotic", "verbose")
STR_OPTIONS = ("triple", "which", "format", "output")
NULLABLE_OPTIONS = ("horizon", "resolution", "triple", "which", "output")


@dataclass
class RunConfig:
    command: str
    set: Optional[Any] = None
    point: Optional[Any] = None
    x: Optional[Any] = None
    y: Optional[Any] = None
    folner: Any = "standard"
    cylinders: list[str] = field(default_factory=list)
    targets: list[Any] = field(default_factory=list)
    triple: Optional[str] = None
    which: Optional[str] = None
    horizon: Optional[int] = None
    resolution: Optional[int] = None
    tol: Fraction = Fraction(1, 20)
    headline_fraction: Fraction = DEFAULT_HEADLINE_FRACTION
    lo: int = 1
    hi: int = 10_000
    threshold: Fraction = Fraction(1, 32)
    separation: Fraction = Fraction(1, 2)
    tails: list[int] = field(default_factory=lambda: [10, 100, 1000])
    fchaotic: bool = False
    count: int = 5
    format: str = "json"
    output: Optional[str] = None
    threads: int = 1
    verbose: bool = False

    def __post_init__(self):
        if self.horizon is None:
            self.horizon = DEFAULT_HORIZON.get(self.command, 200)
        if self.resolution is None:
            self.resolution = DEFAULT_RESOLUTION.get(self.command, 1)
        self.tol = to_fraction(self.tol)
        self.headline_fraction = to_fraction(self.headline_fraction)
        self.threshold = to_fraction(self.threshold)
        self.separation = to_fraction(self.separation)

    def validate(self) -> None:
        """Reject parameters outside the operations' preconditions."""
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        if self.resolution < 0:
            raise ValueError(f"resolution must be >= 0, got {self.resolution}")
        if not 0 < self.tol < 1:
            raise ValueError(f"tol must lie strictly between 0 and 1, got {self.tol}")
        if not 0 < self.headline_fraction <= 1:
            raise ValueError(f"headline fraction must lie in (0, 1], got {self.headline_fraction}")
        if self.lo > self.hi:
            raise ValueError(f"lo must be <= hi, got [{self.lo}, {self.hi}]")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.format not in ("json", "tsv"):
            raise ValueError(f"format must be 'json' or 'tsv', got {self.format!r}")
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")


@dataclass
class CommandResult:
    record: dict[str, Any]
    table: pl.DataFrame
    exit_code: int = 0


# ========================== COMMANDS ==========================

def cmd_density(config: RunConfig) -> CommandResult:
    F = parse_folner(config.folner, "$.folner")
    if config.set is not None:
        A = parse_set(config.set, "$.set")
        report = density_report(A, F, config.horizon, config.headline_fraction)
    elif config.point is not None and config.cylinders:
        x = parse_point(config.point, "$.point")
        region = [parse_cylinder(c, x.alphabet, f"$.cylinders[{i}]") for i, c in enumerate(config.cylinders)]
        report = sojourn(x, region, F, config.horizon, config.headline_fraction)
    else:
        raise SpecError("$", "density needs --set, or --point with at least one --cylinder")
    record = report.to_record()
    record["density"] = format_fraction(report.density) if report.density is not None else None
    return CommandResult(record, ratios_frame(report))


def cmd_coa(config: RunConfig) -> CommandResult:
    if config.point is None:
        raise SpecError("$.point", "coa needs --point")
    x = parse_point(config.point, "$.point")
    F = parse_folner(config.folner, "$.folner")
    k, N = config.resolution, config.horizon
    cover = coa_cover(x, F, k, N, config.tol, config.headline_fraction, config.threads)
    central = str(window(x, -k, 2 * k + 1))
    record = cover.to_record()
    record["checks"] = {
        "shift_consistency_violations": cover_shift_consistent(cover, x, N),
        "in_orbit": cover_in_orbit(cover, x, N),
        "central_word": central,
        "central_word_kept": central in cover.kept_words,
    }
    kept = set(cover.kept_words)
    table = pl.DataFrame(
        {
            "word": [str(e.word) for e in cover.scores],
            "upper": [format_fraction(e.upper) for e in cover.scores],
            "upper_approx": [approx_decimal(e.upper) for e in cover.scores],
            "lower": [format_fraction(e.lower) for e in cover.scores],
            "kept": [str(e.word) in kept for e in cover.scores],
        },
        schema={"word": pl.Utf8, "upper": pl.Utf8, "upper_approx": pl.Utf8, "lower": pl.Utf8, "kept": pl.Boolean},
    )
    return CommandResult(record, table)


def _ladder_his(lo: int, hi: int) -> list[int]:
    span = hi - lo
    return sorted({h for h in (lo + span // 100, lo + span // 10, hi) if h > lo} or {hi})


def cmd_setclass(config: RunConfig) -> CommandResult:
    lo, hi = config.lo, config.hi
    if config.triple is not None:
        if config.triple != "example52":
            raise SpecError("$.triple", f"unknown triple {config.triple!r}; known: ['example52']")
        A, B, C = example52_sets()
        evidence = classify_triple(A, B, C, lo, hi)
        star = classify_triple(*example52_symmetrized(), -hi, hi)
        his = _ladder_his(lo, hi)
        ladders = {name: horizon_ladder(S, lo, his) for name, S in zip("ABC", (A, B, C))}
        record = {
            "triple": "example52",
            "A∩B∩C empty": evidence.triple_empty,
            "evidence": evidence.to_record(),
            "symmetrized": star.to_record(),
            "ladders": {name: df.to_dicts() for name, df in ladders.items()},
        }
        table = pl.concat(
            [df.with_columns(pl.lit(name).alias("set")) for name, df in ladders.items()]
        ).select(["set", "hi", "max_gap", "max_run", "pw_start", "pw_end"])
        return CommandResult(record, table)

    if config.set is None:
        raise SpecError("$.set", "setclass needs --set or --triple")
    S = parse_set(config.set, "$.set")
    ladder = horizon_ladder(S, lo, _ladder_his(lo, hi))
    record = {
        "set": S.render(),
        "lo": lo,
        "hi": hi,
        "max_gap": max_gap(S, lo, hi),
        "max_run": max_run(S, lo, hi),
        "thickly_syndetic_gap_3": thickly_syndetic_gaps(S, 3, lo, hi),
        "ladder": ladder.to_dicts(),
    }
    return CommandResult(record, ladder)


def cmd_chaos(config: RunConfig) -> CommandResult:
    if config.x is None or config.y is None:
        raise SpecError("$", "chaos needs --x and --y")
    x = parse_point(config.x, "$.x")
    y = parse_point(config.y, "$.y")
    H, R = config.horizon, config.resolution
    tails = [n for n in config.tails if n < H]
    if not tails:
        raise ValueError(f"No tail index below horizon {H}: {config.tails}")
    verdict = li_yorke_verdict(x, y, H, R, config.threshold, tails, config.separation)
    record: dict[str, Any] = {"x": x.to_spec(), "y": y.to_spec(), "verdict": verdict.to_record()}
    if config.fchaotic:
        record["fchaotic"] = f_chaotic_witness(x, y, H, R, config.count).to_record()
    if config.targets:
        targets = [parse_point(t, f"$.targets[{i}]") for i, t in enumerate(config.targets)]
        record["tuple_witness"] = {}
        for mode in ("splice", "orbit"):
            witness = tuple_sensitivity_witness(x, targets, R, H, mode)
            record["tuple_witness"][mode] = witness.to_record() if witness else None
    table = pl.DataFrame(
        {
            "g": [g for g, _ in verdict.proximal_evidence],
            "kind": [v.kind for _, v in verdict.proximal_evidence],
            "distance": [format_fraction(v.value) for _, v in verdict.proximal_evidence],
        },
        schema={"g": pl.Int64, "kind": pl.Utf8, "distance": pl.Utf8},
    )
    return CommandResult(record, table)


def cmd_example(config: RunConfig) -> CommandResult:
    if config.which not in EXAMPLES:
        raise SpecError("$.which", f"unknown example {config.which!r}; known: {sorted(EXAMPLES)}")
    if config.which == "5.1":
        result = EXAMPLES["5.1"](threads=config.threads)
    else:
        result = EXAMPLES[config.which]()
    return CommandResult(result.to_record(), result.claims_frame(), 0 if result.passed else 1)


def cmd_folner(config: RunConfig) -> CommandResult:
    F = parse_folner(config.folner, "$.folner")
    ns = []
    n = 10
    while n <= config.horizon:
        ns.append(n)
        n *= 2
    if not ns:
        ns = [config.horizon]
    table = defect_table(F, range(-5, 6), ns)
    return CommandResult({"folner": F.label, "ns": ns, "defects": table.to_dicts()}, table)


HANDLERS: dict[str, Callable[[RunConfig], CommandResult]] = {
    "density": cmd_density,
    "coa": cmd_coa,
    "setclass": cmd_setclass,
    "chaos": cmd_chaos,
    "example": cmd_example,
    "folner": cmd_folner,
}


# ========================== ARGUMENTS & CONFIG ==========================

def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="orbitdensity", description="Følner densities and centers of attraction on the full shift")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML run configuration; explicit flags override it")
    common.add_argument("--format", choices=("json", "tsv"), default=None)
    common.add_argument("--output", default=None, help="Write here instead of stdout")
    common.add_argument("--threads", type=int, default=None, help=f"Worker threads (env {THREADS_ENV}, default 1)")
    common.add_argument("--verbose", action="store_true", default=None)
    common.add_argument("--horizon", "-N", type=int, default=None)
    common.add_argument("--headline-fraction", dest="headline_fraction", default=None)
    common.add_argument("--folner", default=None, help="Følner name or document")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", parents=[common], help="Density report of a set, or sojourn of a point")
    p.add_argument("--set", default=None)
    p.add_argument("--point", default=None)
    p.add_argument("--cylinder", dest="cylinders", action="append", default=None, help="word@position, repeatable")

    p = sub.add_parser("coa", parents=[common], help="Cylinder cover of the center of attraction")
    p.add_argument("--point", default=None)
    p.add_argument("-k", "--resolution", dest="resolution", type=int, default=None)
    p.add_argument("--tol", default=None)

    p = sub.add_parser("setclass", parents=[common], help="Gap/run classification of integer sets")
    p.add_argument("--set", default=None)
    p.add_argument("--triple", default=None)
    p.add_argument("--lo", type=int, default=None)
    p.add_argument("--hi", type=int, default=None)

    p = sub.add_parser("chaos", parents=[common], help="Li-Yorke and F-chaotic evidence for a pair")
    p.add_argument("--x", default=None)
    p.add_argument("--y", default=None)
    p.add_argument("-R", "--resolution", dest="resolution", type=int, default=None)
    p.add_argument("--threshold", default=None, help="Proximal threshold, default 1/32")
    p.add_argument("--separation", default=None, help="Tail separation, default 1/2")
    p.add_argument("--tail", dest="tails", type=int, action="append", default=None)
    p.add_argument("--fchaotic", action="store_true", default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--target", dest="targets", action="append", default=None, help="Tuple-sensitivity target, repeatable")

    p = sub.add_parser("example", parents=[common], help="Scripted verification of a construction")
    p.add_argument("which", help="5.1, 5.2 or 5.3")

    sub.add_parser("folner", parents=[common], help="Følner defect table")
    return parser.parse_args(argv)


def load_yaml_config(path: str) -> dict[str, Any]:
    """A file path, or the name of a run under configs/ (``--config example53``)."""
    source = Path(path)
    if not source.is_file():
        source = get_config_dir() / (path if source.suffix else f"{path}.yaml")
    if not source.is_file():
        raise SpecError("$.config", f"config file {path!r} not found")
    try:
        data = yaml.safe_load(source.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as exc:
        raise SpecError("$.config", f"cannot parse {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecError("$.config", "expected a mapping of run options")
    return {k.replace("-", "_"): v for k, v in data.items()}


def _check_yaml_option(key: str, value: Any) -> None:
    path = f"$.config.{key}"
    if value is None and key in NULLABLE_OPTIONS:
        return
    if key in INT_OPTIONS and (isinstance(value, bool) or not isinstance(value, int)):
        raise SpecError(path, f"expected an integer, got {value!r}")
    if key in RATIO_OPTIONS and (isinstance(value, bool) or not isinstance(value, (int, float, str))):
        raise SpecError(path, f"expected a number or a ratio string, got {value!r}")
    if key in BOOL_OPTIONS and not isinstance(value, bool):
        raise SpecError(path, f"expected true or false, got {value!r}")
    if key in STR_OPTIONS and not isinstance(value, str):
        raise SpecError(path, f"expected a string, got {value!r}")
    if key in ("cylinders", "targets", "tails") and not isinstance(value, list):
        raise SpecError(path, f"expected a list, got {value!r}")
    if key == "cylinders" and not all(isinstance(item, str) for item in value):
        raise SpecError(path, f"expected a list of cylinder strings, got {value!r}")
    if key == "tails" and not all(isinstance(n, int) and not isinstance(n, bool) for n in value):
        raise SpecError(path, f"expected a list of integers, got {value!r}")


def build_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the YAML file, then explicit flags."""
    known = {f.name for f in fields(RunConfig)}
    values: dict[str, Any] = {}
    if getattr(args, "config", None):
        for key, value in load_yaml_config(args.config).items():
            if key not in known or key == "command":
                raise SpecError(f"$.config.{key}", "unknown option")
            _check_yaml_option(key, value)
            values[key] = value
    for key, value in vars(args).items():
        if key in known and value is not None:
            values[key] = value
    if "threads" not in values:
        env = os.environ.get(THREADS_ENV)
        if env:
            try:
                values["threads"] = int(env)
            except ValueError as exc:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from exc
    config = RunConfig(**values)
    config.validate()
    return config


def render(result: CommandResult, fmt: str) -> str:
    if fmt == "tsv":
        return frame_to_tsv(result.table)
    return dumps_record(result.record)


# ========================== SCRIPT ENTRYPOINT ==========================

def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
        stream=sys.stderr,
    )
    try:
        config = build_config(args)
        result = HANDLERS[config.command](config)
    except SpecError as exc:
        logger.error(f"specification error: {exc}")
        return 2
    except ValueError as exc:
        logger.error(f"rejected parameters: {exc}")
        return 3

    text = render(result, config.format)
    if config.output:
        path = write_output(text, config.output)
        logger.info(f"report written to {path}")
    else:
        sys.stdout.write(text)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
