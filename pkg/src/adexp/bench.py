"""Benchmark CLI: random instances, wall-clock and count measurement,
and report rendering.

Instances are derived deterministically from (seed, bit-length, sample
index) via SHA-256 seeding of an MT19937 stream, so counts and reports
are reproducible byte-for-byte; only wall-clock fields vary across runs.

Subcommands: run (timed benchmark), counts (count-vs-model report),
thresholds (cost-model table export), backends (compiled vs pure kernels).
"""

from __future__ import annotations

import argparse
import enum
import hashlib
import random
import statistics
import sys
import time
from dataclasses import dataclass

from . import _backend
from .bignum import CountingContext
from .cost_model import (
    Method,
    Policy,
    optimal_m,
    predicted_mults,
    threshold_csv,
    threshold_table,
)
from .modexp import Baseline, adaptive_exp, baseline_exp, baseline_m

RNG_ID = "sha256(seed:bits:index)-seeded mt19937"

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MISMATCH = 3


class ConfigError(ValueError):
    """Invalid benchmark configuration."""


class ResultMismatchError(RuntimeError):
    """Two strategies disagreed on the same instance."""


class BenchMethod(enum.Enum):
    ADAPTIVE_MARY = "adaptive-mary"
    ADAPTIVE_WINDOW = "adaptive-window"
    BINARY = "binary"
    CPYTHON_5ARY = "cpython5"


class OutputFormat(enum.Enum):
    CSV = "csv"
    MARKDOWN = "markdown"


@dataclass
class BenchConfig:
    bit_lengths: tuple[int, ...] = (1024, 2048, 3072, 4096)
    samples: int = 1000
    methods: tuple[BenchMethod, ...] = (
        BenchMethod.CPYTHON_5ARY,
        BenchMethod.ADAPTIVE_MARY,
        BenchMethod.ADAPTIVE_WINDOW,
    )
    policy: Policy = Policy.PAPER
    seed: int = 42
    output_format: OutputFormat = OutputFormat.CSV
    baseline: BenchMethod = BenchMethod.CPYTHON_5ARY

    def validate(self) -> None:
        if not self.methods:
            raise ConfigError("no methods configured")
        if not self.bit_lengths:
            raise ConfigError("no bit lengths configured")
        if self.samples < 2:
            raise ConfigError("need at least 2 samples for a stddev")
        if any(k < 8 for k in self.bit_lengths):
            raise ConfigError("bit lengths must be >= 8")


@dataclass
class SummaryRow:
    bits: int
    method: BenchMethod
    mean_ms: float
    stddev_ms: float
    mean_total_mults: float
    change_ratio_pct: float | None = None


@dataclass
class CountRow:
    bits: int
    method: BenchMethod
    m_used: int
    mean_total_mults: float
    predicted: float
    relative_error: float


def instance_rng(seed: int, k: int, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{k}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest, "big"))


def gen_instance(rng: random.Random, k: int) -> tuple[int, int, int]:
    """Random (g, e, N): N and e are k-bit with top bit set, g < N, e < N."""
    if k < 8:
        raise ConfigError("bit length must be >= 8")
    top = 1 << (k - 1)
    n = top | rng.getrandbits(k - 1)
    while n == top:  # no k-bit e below N would exist
        n = top | rng.getrandbits(k - 1)
    e = top | rng.getrandbits(k - 1)
    while e >= n:
        e = top | rng.getrandbits(k - 1)
    g = rng.randrange(2, n)
    return g, e, n


def _execute(
    method: BenchMethod, g: int, e: int, n: int, policy: Policy
) -> tuple[int, CountingContext]:
    ctx = CountingContext()
    if method is BenchMethod.ADAPTIVE_MARY:
        value = adaptive_exp(Method.MARY, g, e, n, policy, ctx)
    elif method is BenchMethod.ADAPTIVE_WINDOW:
        value = adaptive_exp(Method.WINDOW, g, e, n, policy, ctx)
    elif method is BenchMethod.BINARY:
        value = baseline_exp(Baseline.BINARY, g, e, n, ctx)
    else:
        value = baseline_exp(Baseline.CPYTHON_5ARY, g, e, n, ctx)
    return value, ctx


def method_m_used(method: BenchMethod, k: int, policy: Policy) -> int:
    """Digit width / window size the method uses for full-k-bit exponents."""
    if method is BenchMethod.ADAPTIVE_MARY:
        return optimal_m(Method.MARY, k, policy)
    if method is BenchMethod.ADAPTIVE_WINDOW:
        return optimal_m(Method.WINDOW, k, policy)
    if method is BenchMethod.BINARY:
        return 1
    return baseline_m(Baseline.CPYTHON_5ARY, 1 << (k - 1))


def _method_predicted(method: BenchMethod, k: int, m: int) -> float:
    cost_method = Method.WINDOW if method is BenchMethod.ADAPTIVE_WINDOW else Method.MARY
    return predicted_mults(cost_method, k, m)


def run_benchmark(config: BenchConfig) -> list[SummaryRow]:
    """Timed, strictly serial measurement over identical instances per sample."""
    config.validate()
    rows: list[SummaryRow] = []
    for bits in config.bit_lengths:
        instances = [
            gen_instance(instance_rng(config.seed, bits, i), bits)
            for i in range(config.samples)
        ]
        per_method: dict[BenchMethod, SummaryRow] = {}
        results: list[int | None] = [None] * config.samples
        for method in config.methods:
            times_ms: list[float] = []
            totals: list[int] = []
            for i, (g, e, n) in enumerate(instances):
                start = time.perf_counter()
                value, ctx = _execute(method, g, e, n, config.policy)
                times_ms.append((time.perf_counter() - start) * 1e3)
                totals.append(ctx.total)
                if results[i] is None:
                    results[i] = value
                elif results[i] != value:
                    raise ResultMismatchError(
                        f"{method.value} disagreed at bits={bits} sample={i}"
                    )
            per_method[method] = SummaryRow(
                bits=bits,
                method=method,
                mean_ms=statistics.mean(times_ms),
                stddev_ms=statistics.stdev(times_ms),
                mean_total_mults=statistics.mean(totals),
            )
        base = per_method.get(config.baseline)
        for method in config.methods:
            row = per_method[method]
            if base is not None:
                row.change_ratio_pct = 100.0 * (row.mean_ms - base.mean_ms) / base.mean_ms
            rows.append(row)
    return rows


def count_report(config: BenchConfig) -> list[CountRow]:
    """Counting-only run joined against the analytical model."""
    config.validate()
    rows: list[CountRow] = []
    for bits in config.bit_lengths:
        instances = [
            gen_instance(instance_rng(config.seed, bits, i), bits)
            for i in range(config.samples)
        ]
        results: list[int | None] = [None] * config.samples
        for method in config.methods:
            totals: list[int] = []
            for i, (g, e, n) in enumerate(instances):
                value, ctx = _execute(method, g, e, n, config.policy)
                totals.append(ctx.total)
                if results[i] is None:
                    results[i] = value
                elif results[i] != value:
                    raise ResultMismatchError(
                        f"{method.value} disagreed at bits={bits} sample={i}"
                    )
            m_used = method_m_used(method, bits, config.policy)
            mean_total = statistics.mean(totals)
            predicted = _method_predicted(method, bits, m_used)
            rows.append(
                CountRow(
                    bits=bits,
                    method=method,
                    m_used=m_used,
                    mean_total_mults=mean_total,
                    predicted=predicted,
                    relative_error=abs(mean_total - predicted) / predicted,
                )
            )
    return rows


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.3f}"


def render_report(rows: list[SummaryRow], fmt: OutputFormat) -> str:
    if not rows:
        raise ValueError("no rows to render")
    if fmt is OutputFormat.CSV:
        lines = ["bits,method,mean_ms,stddev_ms,mean_total_mults,change_ratio_pct"]
        for r in rows:
            lines.append(
                f"{r.bits},{r.method.value},{_fmt(r.mean_ms)},{_fmt(r.stddev_ms)},"
                f"{_fmt(r.mean_total_mults)},{_fmt(r.change_ratio_pct)}"
            )
        return "\n".join(lines) + "\n"
    lines = []
    for bits in sorted({r.bits for r in rows}):
        lines.append(f"### {bits} bits")
        lines.append("| method | mean ms | stddev ms | mean mults | change % |")
        lines.append("|---|---|---|---|---|")
        for r in rows:
            if r.bits == bits:
                lines.append(
                    f"| {r.method.value} | {_fmt(r.mean_ms)} | {_fmt(r.stddev_ms)} |"
                    f" {_fmt(r.mean_total_mults)} | {_fmt(r.change_ratio_pct)} |"
                )
        lines.append("")
    return "\n".join(lines)


def render_count_report(rows: list[CountRow], fmt: OutputFormat) -> str:
    if not rows:
        raise ValueError("no rows to render")
    if fmt is OutputFormat.CSV:
        lines = ["bits,method,m_used,mean_total_mults,predicted,relative_error"]
        for r in rows:
            lines.append(
                f"{r.bits},{r.method.value},{r.m_used},{_fmt(r.mean_total_mults)},"
                f"{_fmt(r.predicted)},{r.relative_error:.6f}"
            )
        return "\n".join(lines) + "\n"
    lines = [
        "| bits | method | m | mean mults | predicted | rel. error |",
        "|---|---|---|---|---|---|",
    ]
    for r in rows:
        lines.append(
            f"| {r.bits} | {r.method.value} | {r.m_used} | {_fmt(r.mean_total_mults)} |"
            f" {_fmt(r.predicted)} | {r.relative_error:.6f} |"
        )
    return "\n".join(lines) + "\n"


def _parse_methods(text: str) -> tuple[BenchMethod, ...]:
    by_name = {m.value: m for m in BenchMethod}
    methods = []
    for part in text.split(","):
        part = part.strip()
        if part not in by_name:
            raise ConfigError(f"unknown method {part!r}; choose from {sorted(by_name)}")
        methods.append(by_name[part])
    return tuple(methods)


def _parse_bits(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad bit-length list {text!r}") from exc


def _config_from_args(args: argparse.Namespace) -> BenchConfig:
    cfg = BenchConfig(
        bit_lengths=_parse_bits(args.bits),
        samples=args.samples,
        methods=_parse_methods(args.methods),
        policy=Policy(args.policy),
        seed=args.seed,
        output_format=OutputFormat(args.format),
        baseline=BenchMethod.BINARY if args.baseline_binary else BenchMethod.CPYTHON_5ARY,
    )
    cfg.validate()
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--bits", default="1024,2048,3072,4096")
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument(
        "--methods", default="cpython5,adaptive-mary,adaptive-window"
    )
    sub.add_argument("--policy", choices=["paper", "argmin"], default="paper")
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument("--format", choices=["csv", "markdown"], default="csv")
    sub.add_argument("--out", default=None)
    sub.add_argument(
        "--baseline-binary",
        action="store_true",
        help="compare against the LR binary baseline instead of the 5-ary one",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench", description="modular exponentiation benchmark"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="timed benchmark (Tables 3/4-style report)")
    _add_common(run)

    counts = sub.add_parser("counts", help="multiplication counts vs the cost model")
    _add_common(counts)

    thresholds = sub.add_parser("thresholds", help="export a dispatch threshold table")
    thresholds.add_argument("--method", choices=["mary", "window"], required=True)
    thresholds.add_argument("--policy", choices=["paper", "argmin"], default="argmin")
    thresholds.add_argument("--kmax", type=int, default=8000)
    thresholds.add_argument("--out", default=None)

    backends = sub.add_parser("backends", help="compare compiled vs pure kernels")
    backends.add_argument("--bits", default="1024,2048,4096")
    backends.add_argument("--samples", type=int, default=50)
    backends.add_argument("--seed", type=int, default=42)

    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    print(f"# rng: {RNG_ID}, seed={cfg.seed}, backend={_backend.backend_name()}", file=sys.stderr)
    rows = run_benchmark(cfg)
    _emit(render_report(rows, cfg.output_format), args.out)
    return EXIT_OK


def _cmd_counts(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args)
    print(f"# rng: {RNG_ID}, seed={cfg.seed}, backend={_backend.backend_name()}", file=sys.stderr)
    rows = count_report(cfg)
    _emit(render_count_report(rows, cfg.output_format), args.out)
    return EXIT_OK


def _cmd_thresholds(args: argparse.Namespace) -> int:
    if args.kmax < 1:
        raise ConfigError("kmax must be >= 1")
    table = threshold_table(Method(args.method), args.kmax, Policy(args.policy))
    _emit(threshold_csv(table), args.out)
    return EXIT_OK


def _cmd_backends(args: argparse.Namespace) -> int:
    names = _backend.available_backends()
    if len(names) < 2:
        print(f"only one backend built: {names}", file=sys.stderr)
    bits = _parse_bits(args.bits)
    if args.samples < 2:
        raise ConfigError("need at least 2 samples")
    original = _backend.backend_name()
    print("backend,bits,method,mean_ms")
    try:
        for name in names:
            _backend.set_backend(name)
            for k in bits:
                instances = [
                    gen_instance(instance_rng(args.seed, k, i), k)
                    for i in range(args.samples)
                ]
                for method in (BenchMethod.ADAPTIVE_MARY, BenchMethod.ADAPTIVE_WINDOW):
                    start = time.perf_counter()
                    for g, e, n in instances:
                        _execute(method, g, e, n, Policy.PAPER)
                    mean_ms = (time.perf_counter() - start) * 1e3 / args.samples
                    print(f"{name},{k},{method.value},{mean_ms:.3f}")
    finally:
        _backend.set_backend(original)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "counts": _cmd_counts,
        "thresholds": _cmd_thresholds,
        "backends": _cmd_backends,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResultMismatchError as exc:
        print(f"correctness error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
