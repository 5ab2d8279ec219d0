"""End-to-end runs of the command line through main(argv)."""

from __future__ import annotations

import csv

import numpy as np
import pytest

from primepairs import count_pairs, ratio
from primepairs.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAIL, main
from primepairs.paircount import read_cache


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("PRIMEPAIR_CACHE", str(tmp_path / "cache"))
    monkeypatch.delenv("PRIMEPAIR_ZEROS", raising=False)
    return tmp_path


def run(*argv):
    return main(list(argv))


def test_count_writes_csv_and_caches(isolated_cache, capsys):
    out = isolated_cache / "counts.csv"
    code = run("count", "--x-list", "300,1000", "--max-gap", "30", "--out", str(out))
    assert code == EXIT_OK
    err = capsys.readouterr().err
    assert "cache write" in err
    assert "segments sieved" in err

    table = count_pairs([300, 1000], 15)
    rows = [r for r in out.read_text().splitlines() if not r.startswith("#")]
    reader = csv.DictReader(rows)
    seen = {(int(r["x"]), int(r["two_r"])): int(r["count"]) for r in reader}
    assert len(seen) == 30
    for (x, two_r), c in seen.items():
        assert c == table.count(two_r // 2, x)

    # second run hits the cache and performs no re-sieving
    code = run("count", "--x-list", "300,1000", "--max-gap", "30", "--out", str(out))
    assert code == EXIT_OK
    err = capsys.readouterr().err
    assert "cache hit" in err
    assert "segments sieved: 0" in err
    cache_files = list((isolated_cache / "cache").glob("pairs-*.csv"))
    assert len(cache_files) == 1
    assert read_cache(cache_files[0]).count(1, 1000) == table.count(1, 1000)


def test_count_stdout_and_header(capsys):
    code = run("count", "--x-list", "100", "--max-gap", "6")
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("#")
    assert "config" in lines[0]
    assert lines[1] == "x,two_r,count"
    # pi_2(100): (3,5),(5,7),(11,13),(17,19),(29,31),(41,43),(59,61),(71,73)
    assert lines[2] == "100,2,8"


def test_count_dump_primes(isolated_cache, capsys):
    dump = isolated_cache / "primes.csv"
    code = run("count", "--x-list", "50", "--max-gap", "4", "--dump-primes", str(dump))
    assert code == EXIT_OK
    body = [l for l in dump.read_text().splitlines() if not l.startswith("#")]
    assert body[0] == "p"
    assert [int(v) for v in body[1:]] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                          31, 37, 41, 43, 47]


def test_count_usage_errors(capsys):
    assert run("count", "--x-list", "1000,100") == EXIT_USAGE      # not ascending
    assert run("count", "--x-list", "1000", "--max-gap", "7") == EXIT_USAGE
    assert run("count", "--x-list", "1000", "--max-gap", "0") == EXIT_USAGE
    assert run("count", "--x-list", "abc") == EXIT_USAGE
    assert run("count", "--x-list", "2e9") == EXIT_USAGE           # needs --big
    assert run("count", "--x-list", "1e6,2e7", "--max-gap", "4",
               "--dump-primes", "x.csv") == EXIT_USAGE             # dump cap


def test_workers_and_segment_size_flags(isolated_cache):
    out = isolated_cache / "a.csv"
    code = run("count", "--x-list", "100000", "--max-gap", "40",
               "--segment-size", "4096", "--workers", "2", "--out", str(out))
    assert code == EXIT_OK
    table = count_pairs([100000], 20)
    got = read_cache(out)
    assert np.array_equal(got.counts, table.counts)


def test_constants_csv(capsys):
    code = run("constants", "--max-gap", "20")
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == "two_r,ratio_num,ratio_den,s_over_c2"
    rows = list(csv.reader(lines[2:]))
    assert len(rows) == 10
    for row in rows:
        r = int(row[0]) // 2
        assert (int(row[1]), int(row[2])) == (ratio(r).numerator, ratio(r).denominator)
    assert rows[0][3] == "1.0000000"


def test_constants_usage(capsys):
    assert run("constants", "--max-gap", "3") == EXIT_USAGE


def test_tx_psi(capsys):
    code = run("tx", "--x", "1e6")
    assert code == EXIT_OK
    out = capsys.readouterr().out.strip()
    assert out == "0.41156"


def test_tx_zeros_fixture(capsys):
    code = run("tx", "--x", "1e6", "--method", "zeros")
    assert code == EXIT_OK
    captured = capsys.readouterr()
    val = float(captured.out.strip())
    assert abs(val - 0.41156) < 0.02
    assert "zeros loaded: 100000" in captured.err


def test_tx_zeros_truncated(capsys):
    code = run("tx", "--x", "1e6", "--method", "zeros", "--max-zeros", "500")
    assert code == EXIT_OK
    assert "zeros loaded: 500" in capsys.readouterr().err


def test_tx_missing_zeros_file(capsys):
    code = run("tx", "--x", "1e6", "--method", "zeros",
               "--zeros-file", "/nonexistent/zeros.txt")
    assert code == EXIT_DATA


def test_tx_env_var_zeros(isolated_cache, monkeypatch, capsys):
    bad = isolated_cache / "bad.txt"
    bad.write_text("14.2\n13.0\n")
    monkeypatch.setenv("PRIMEPAIR_ZEROS", str(bad))
    code = run("tx", "--x", "1e6", "--method", "zeros")
    assert code == EXIT_DATA
    assert "not strictly increasing" in capsys.readouterr().err


def test_table_small(isolated_cache, capsys):
    out = isolated_cache / "table.csv"
    code = run("table", "--x", "1e4", "--n-list", "5,10,20", "--out", str(out))
    assert code == EXIT_OK
    body = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    assert body[0].startswith("two_n,")
    rows = list(csv.DictReader(body))
    assert [int(r["two_n"]) for r in rows] == [10, 20, 40]
    table = count_pairs([10**4], 20)
    assert int(rows[2]["pi_n"]) == int(table.counts[1:21, 0].sum())


def test_table_n_list_range_syntax(isolated_cache, capsys):
    code = run("table", "--x", "1e4", "--n-list", "5:20:5")
    assert code == EXIT_OK
    lines = [l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")]
    rows = list(csv.DictReader(lines))
    assert [int(r["two_n"]) for r in rows] == [10, 20, 30, 40]


def test_table_usage(capsys):
    assert run("table", "--x", "1e4", "--n-list", "0") == EXIT_USAGE
    assert run("table", "--x", "1e4", "--n-list", "10,5") == EXIT_USAGE
    assert run("table", "--x", "1e4", "--n-list", "5:1:1") == EXIT_USAGE


def test_figure_fixed_x(isolated_cache, capsys):
    code = run("figure", "--kind", "fixed-x", "--x", "1e4",
               "--out-dir", str(isolated_cache / "figs"))
    assert code == EXIT_OK
    out_lines = capsys.readouterr().out.splitlines()
    csv_path, gp_path = out_lines[0], out_lines[1]
    assert csv_path.endswith("figure_fixed-x_10000.csv")
    assert gp_path.endswith("figure_fixed-x_10000.gp")
    body = [l for l in open(csv_path).read().splitlines() if not l.startswith("#")]
    assert body[0] == "two_n,delta_n"          # no model overlay at 1e4
    assert len(body) == 1 + 100                # default grid 50..5000 step 50
    gp = open(gp_path).read()
    assert "figure_fixed-x_10000.csv" in gp


def test_figure_fixed_n(isolated_cache, capsys):
    code = run("figure", "--kind", "fixed-n", "--n", "100", "--x-max", "3e6",
               "--out-dir", str(isolated_cache / "figs"))
    assert code == EXIT_OK
    csv_path = capsys.readouterr().out.splitlines()[0]
    body = [l for l in open(csv_path).read().splitlines() if not l.startswith("#")]
    assert body[0] == "x,delta_n"
    assert [int(r.split(",")[0]) for r in body[1:]] == [10**6, 2 * 10**6, 3 * 10**6]


def test_figure_usage(capsys):
    assert run("figure", "--kind", "fixed-x") == EXIT_USAGE
    assert run("figure", "--kind", "fixed-n") == EXIT_USAGE
    assert run("figure", "--kind", "fixed-n", "--n", "7") == EXIT_USAGE
    assert run("figure", "--kind", "fixed-n", "--n", "100",
               "--x-max", "1e5") == EXIT_USAGE


def test_verify_small_checkpoints(capsys):
    code = run("verify", "--x", "1000,10000")
    captured = capsys.readouterr()
    assert code == EXIT_OK
    assert "FAIL" not in captured.out
    assert captured.out.count("PASS") >= 40
    assert "all checks passed" in captured.err


def test_verify_rejects_unknown_checkpoint(capsys):
    assert run("verify", "--x", "12345") == EXIT_USAGE


def test_version_and_missing_subcommand(capsys):
    assert run("--version") == EXIT_OK
    assert run() == EXIT_USAGE
