"""CLI contract tests: outputs, formats, exit codes."""

import json

import pytest

from gridthresh import GridSpec, count_total, sieve
from gridthresh.cli import EXIT_CAPACITY, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_by_k(capsys):
    code, out, _ = run(capsys, "count", "--k", "2")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["P"] == "14"
    assert record["total"] == "14"
    assert record["m"] == 1 and record["n"] == 1


def test_count_degenerate_grid(capsys):
    code, out, _ = run(capsys, "count", "--m", "0", "--n", "0")
    assert code == EXIT_OK
    assert json.loads(out)["total"] == "2"


def test_count_large_k_exact_decimal(capsys):
    code, out, _ = run(capsys, "count", "--k", "1000000")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["P"] == "607927101897802895986966"   # frozen; 24 exact digits


def test_count_json_round_trips(capsys):
    code, out, _ = run(capsys, "count", "--m", "7", "--n", "5", "--breakdown")
    assert code == EXIT_OK
    record = json.loads(out)
    tables = sieve(16)
    assert int(record["total"]) == count_total(GridSpec(7, 5), tables)
    assert int(record["stable"]) + int(record["unstable"]) == int(record["f_class"])
    assert 2 * (int(record["f_class"]) + 1) == int(record["total"])


def test_count_is_deterministic_modulo_timing(capsys):
    _, out1, _ = run(capsys, "count", "--k", "17", "--breakdown")
    _, out2, _ = run(capsys, "count", "--k", "17", "--breakdown")
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("elapsed_ms")
    r2.pop("elapsed_ms")
    assert r1 == r2


def test_count_csv_format(capsys):
    code, out, _ = run(capsys, "count", "--m", "2", "--n", "2", "--format", "csv")
    assert code == EXIT_OK
    header, row = out.strip().split("\n")
    assert header.split(",")[:4] == ["command", "m", "n", "total"]
    assert row.split(",")[3] == "58"


def test_count_usage_errors(capsys):
    assert run(capsys, "count")[0] == EXIT_USAGE
    assert run(capsys, "count", "--k", "0")[0] == EXIT_USAGE
    assert run(capsys, "count", "--k", "2", "--m", "1", "--n", "1")[0] == EXIT_USAGE
    assert run(capsys, "count", "--m", "3")[0] == EXIT_USAGE
    assert run(capsys, "count", "--m", "-1", "--n", "2")[0] == EXIT_USAGE


def test_unknown_flag_is_usage_error(capsys):
    assert run(capsys, "count", "--bogus")[0] == EXIT_USAGE


def test_oracle_match_exit_zero(capsys):
    code, out, _ = run(capsys, "oracle", "--m", "2", "--n", "2", "--method", "subsets")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["all_match"] is True
    assert record["subset_total"] == "58"


def test_oracle_lines_method(capsys):
    code, out, _ = run(capsys, "oracle", "--m", "6", "--n", "6", "--method", "lines")
    assert code == EXIT_OK
    assert json.loads(out)["all_match"] is True


def test_oracle_capacity_exit(capsys):
    code, _, err = run(capsys, "oracle", "--m", "10", "--n", "10", "--method", "subsets")
    assert code == EXIT_CAPACITY
    assert "capacity" in err.lower()


def test_oracle_dump(capsys, tmp_path):
    path = tmp_path / "fns.txt"
    code, _, _ = run(capsys, "oracle", "--m", "1", "--n", "1", "--dump", str(path))
    assert code == EXIT_OK
    assert len(path.read_text().splitlines()) == 14


def test_oeis_a114146(capsys):
    code, out, _ = run(capsys, "oeis", "--sequence", "A114146", "--count", "3")
    assert code == EXIT_OK
    assert out.splitlines() == ["1 2", "2 14", "3 58"]


def test_oeis_a114043(capsys):
    code, out, _ = run(capsys, "oeis", "--sequence", "A114043", "--count", "2")
    assert code == EXIT_OK
    assert out.splitlines()[1] == "2 7"


def test_oeis_a018805(capsys):
    code, out, _ = run(capsys, "oeis", "--sequence", "A018805", "--count", "4")
    assert code == EXIT_OK
    assert out.splitlines()[3] == "4 11"


def test_oeis_to_file(capsys, tmp_path):
    path = tmp_path / "b114146.txt"
    code, out, _ = run(capsys, "oeis", "--sequence", "A114146", "--count", "5",
                       "--output", str(path))
    assert code == EXIT_OK
    assert out == ""
    assert path.read_text().endswith("5 402\n")


def test_oeis_unknown_sequence_is_usage_error(capsys):
    assert run(capsys, "oeis", "--sequence", "A000001")[0] == EXIT_USAGE


def test_teach_census_csv(capsys):
    code, out, _ = run(capsys, "teach", "--m", "2", "--n", "2")
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0] == "grid_m,grid_n,min_size,count"
    sizes = {int(line.split(",")[2]) for line in lines[1:]}
    assert sizes == {3, 4}


def test_teach_check_passes(capsys):
    assert run(capsys, "teach", "--m", "2", "--n", "2", "--check")[0] == EXIT_OK


def test_asympt_square_csv(capsys):
    code, out, _ = run(capsys, "asympt", "--family", "square", "--max-k", "64")
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0].startswith("theorem_id,")
    assert len(lines) == 1 + 3 * 3   # three families at k = 16, 32, 64


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--k", "500", "--repeat", "1")
    assert code == EXIT_OK
    record = json.loads(out)
    tables = sieve(500)
    from gridthresh import count_p

    assert record["P"] == str(count_p(500, tables))
    assert record["best_seconds"] > 0


def test_mismatch_exit_code_is_reserved():
    assert EXIT_MISMATCH == 3
