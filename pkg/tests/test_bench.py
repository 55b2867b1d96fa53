import random

import pytest

from adexp.bench import (
    BenchConfig,
    BenchMethod,
    ConfigError,
    CountRow,
    OutputFormat,
    SummaryRow,
    count_report,
    gen_instance,
    instance_rng,
    main,
    method_m_used,
    render_count_report,
    render_report,
    run_benchmark,
)
from adexp.cost_model import Policy


class TestGenInstance:
    def test_properties(self):
        rng = random.Random(1)
        for _ in range(200):
            g, e, n = gen_instance(rng, 64)
            assert n.bit_length() == 64
            assert e.bit_length() == 64
            assert e < n
            assert 2 <= g < n

    def test_top_bit_always_set(self):
        for i in range(1000):
            g, e, n = gen_instance(instance_rng(9, 32, i), 32)
            assert n >> 31 == 1
            assert e >> 31 == 1

    def test_deterministic(self):
        a = gen_instance(instance_rng(42, 64, 0), 64)
        b = gen_instance(instance_rng(42, 64, 0), 64)
        assert a == b
        c = gen_instance(instance_rng(42, 64, 1), 64)
        assert a != c

    def test_too_small(self):
        with pytest.raises(ConfigError):
            gen_instance(random.Random(0), 4)


class TestRunBenchmark:
    def test_smallest_config(self):
        cfg = BenchConfig(
            bit_lengths=(64,), samples=2, methods=(BenchMethod.BINARY,), seed=1
        )
        rows = run_benchmark(cfg)
        assert len(rows) == 1
        assert rows[0].stddev_ms >= 0
        # BINARY is not the configured baseline, so no ratio is defined
        assert rows[0].change_ratio_pct is None

    def test_baseline_ratio(self):
        cfg = BenchConfig(
            bit_lengths=(256,),
            samples=5,
            methods=(BenchMethod.CPYTHON_5ARY, BenchMethod.ADAPTIVE_MARY),
            seed=3,
        )
        rows = run_benchmark(cfg)
        by_method = {r.method: r for r in rows}
        assert by_method[BenchMethod.CPYTHON_5ARY].change_ratio_pct == pytest.approx(0.0)
        assert by_method[BenchMethod.ADAPTIVE_MARY].change_ratio_pct is not None

    def test_invalid_configs(self):
        with pytest.raises(ConfigError):
            run_benchmark(BenchConfig(methods=()))
        with pytest.raises(ConfigError):
            run_benchmark(BenchConfig(bit_lengths=()))
        with pytest.raises(ConfigError):
            run_benchmark(BenchConfig(samples=1))
        with pytest.raises(ConfigError):
            run_benchmark(BenchConfig(bit_lengths=(4,)))


class TestCountReport:
    def test_model_fit_512(self):
        cfg = BenchConfig(
            bit_lengths=(512,),
            samples=50,
            methods=(
                BenchMethod.BINARY,
                BenchMethod.ADAPTIVE_MARY,
                BenchMethod.ADAPTIVE_WINDOW,
            ),
            policy=Policy.ARGMIN,
            seed=7,
        )
        rows = count_report(cfg)
        by_method = {r.method: r for r in rows}
        binary = by_method[BenchMethod.BINARY]
        assert binary.m_used == 1
        assert binary.predicted == pytest.approx(766.5)
        assert binary.relative_error < 0.02
        mary = by_method[BenchMethod.ADAPTIVE_MARY]
        assert mary.m_used == 5
        assert mary.relative_error < 0.02
        window = by_method[BenchMethod.ADAPTIVE_WINDOW]
        assert window.m_used == 5  # argmin sits one below the printed table
        assert window.relative_error < 0.02

    def test_deterministic(self):
        cfg = BenchConfig(
            bit_lengths=(64,), samples=5, methods=(BenchMethod.BINARY,), seed=11
        )
        a = render_count_report(count_report(cfg), OutputFormat.CSV)
        b = render_count_report(count_report(cfg), OutputFormat.CSV)
        assert a == b

    def test_m_used(self):
        assert method_m_used(BenchMethod.ADAPTIVE_MARY, 2048, Policy.ARGMIN) == 6
        assert method_m_used(BenchMethod.ADAPTIVE_WINDOW, 4096, Policy.PAPER) == 8
        assert method_m_used(BenchMethod.CPYTHON_5ARY, 1024, Policy.PAPER) == 5
        assert method_m_used(BenchMethod.CPYTHON_5ARY, 64, Policy.PAPER) == 1


class TestRendering:
    def row(self, **kw):
        defaults = dict(
            bits=4096,
            method=BenchMethod.ADAPTIVE_WINDOW,
            mean_ms=218.0,
            stddev_ms=10.67,
            mean_total_mults=4679.111,
            change_ratio_pct=-4.98,
        )
        defaults.update(kw)
        return SummaryRow(**defaults)

    def test_csv_single_row(self):
        text = render_report([self.row()], OutputFormat.CSV)
        lines = text.splitlines()
        assert len(lines) == 2
        assert lines[0] == "bits,method,mean_ms,stddev_ms,mean_total_mults,change_ratio_pct"
        assert lines[1] == "4096,adaptive-window,218.000,10.670,4679.111,-4.980"

    def test_csv_row_count(self):
        rows = [
            self.row(bits=b, method=m)
            for b in (1024, 2048, 3072, 4096)
            for m in (
                BenchMethod.CPYTHON_5ARY,
                BenchMethod.ADAPTIVE_MARY,
                BenchMethod.ADAPTIVE_WINDOW,
            )
        ]
        assert len(render_report(rows, OutputFormat.CSV).splitlines()) == 13

    def test_missing_ratio_serializes_empty(self):
        text = render_report([self.row(change_ratio_pct=None)], OutputFormat.CSV)
        assert text.splitlines()[1].endswith(",4679.111,")

    def test_markdown_grouped(self):
        rows = [self.row(bits=1024), self.row(bits=4096)]
        text = render_report(rows, OutputFormat.MARKDOWN)
        assert "### 1024 bits" in text
        assert "### 4096 bits" in text

    def test_count_csv(self):
        row = CountRow(4096, BenchMethod.ADAPTIVE_WINDOW, 8, 4680.0, 4679.111, 0.00019)
        lines = render_count_report([row], OutputFormat.CSV).splitlines()
        assert lines[0] == "bits,method,m_used,mean_total_mults,predicted,relative_error"
        assert lines[1] == "4096,adaptive-window,8,4680.000,4679.111,0.000190"


class TestCli:
    def test_counts_roundtrip(self, tmp_path, capsys):
        out = tmp_path / "counts.csv"
        code = main(
            [
                "counts",
                "--bits",
                "64",
                "--samples",
                "3",
                "--methods",
                "binary",
                "--seed",
                "5",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("bits,method,m_used")
        assert lines[1].startswith("64,binary,1,")

    def test_thresholds(self, capsys):
        code = main(["thresholds", "--method", "mary", "--policy", "argmin", "--kmax", "40"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "method,k_lo,k_hi,m_star,policy"
        assert "mary,6,34,2,argmin" in out

    def test_config_error_exit_code(self, capsys):
        assert main(["run", "--bits", "64", "--samples", "1", "--methods", "binary"]) == 2
        assert main(["counts", "--bits", "64", "--methods", "nope"]) == 2

    def test_run_csv(self, capsys):
        code = main(
            [
                "run",
                "--bits",
                "64",
                "--samples",
                "3",
                "--methods",
                "cpython5,adaptive-mary",
                "--seed",
                "2",
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].startswith("bits,method,mean_ms")
        assert len(out.splitlines()) == 3

    def test_backends(self, capsys):
        code = main(["backends", "--bits", "64", "--samples", "3"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "backend,bits,method,mean_ms"
