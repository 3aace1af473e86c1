import json

import pytest

from ifpmine import to_fimi, TransactionDatabase
from ifpmine.cli import BENCH_CSV_HEADER, RunSpec, bench_sweep, main, run

from conftest import MII_ROWS, MLMS_ROWS


@pytest.fixture
def table1_path(tmp_path):
    path = tmp_path / "table1.fimi"
    path.write_text(to_fimi(TransactionDatabase.from_itemsets(MII_ROWS)))
    return str(path)


@pytest.fixture
def table2_path(tmp_path):
    path = tmp_path / "table2.fimi"
    path.write_text(to_fimi(TransactionDatabase.from_itemsets(MLMS_ROWS)))
    return str(path)


class TestMineMii:
    def test_text_output(self, table1_path, capsys):
        assert main(["mine-mii", "--input", table1_path, "--min-sup", "2", "--algo", "ifp"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert lines[0] == "5 (1)"
        assert "1 3 (1)" in lines

    def test_all_algorithms_agree(self, table1_path, capsys):
        outputs = []
        for algo in ("ifp", "apriori", "oracle"):
            assert main(["mine-mii", "--input", table1_path, "--min-sup", "2", "--algo", algo]) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1] == outputs[2]

    def test_json_output(self, table1_path, capsys):
        assert main(["mine-mii", "--input", table1_path, "--min-sup", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload) == 8
        assert {"items": [0, 4], "support": 0} in payload

    def test_percent_threshold(self, table1_path, capsys):
        # 20% of 9 transactions resolves to ceil(1.8) = 2
        assert main(["mine-mii", "--input", table1_path, "--min-sup", "20%"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 8

    def test_output_file(self, table1_path, tmp_path):
        out = tmp_path / "result.txt"
        assert main(["mine-mii", "--input", table1_path, "--min-sup", "2", "--out", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 8

    def test_missing_input_is_io_error(self, capsys):
        assert main(["mine-mii", "--input", "/no/such/file", "--min-sup", "2"]) == 3

    def test_sigma_zero_is_usage_error(self, table1_path, capsys):
        assert main(["mine-mii", "--input", table1_path, "--min-sup", "0"]) == 2

    def test_malformed_file_is_io_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.fimi"
        bad.write_text("1 2\n3 oops\n")
        assert main(["mine-mii", "--input", str(bad), "--min-sup", "2"]) == 3

    def test_oracle_guard_exit_code(self, tmp_path, capsys):
        wide = tmp_path / "wide.fimi"
        wide.write_text(" ".join(str(i) for i in range(30)) + "\n")
        assert main(["mine-mii", "--input", str(wide), "--min-sup", "1", "--algo", "oracle"]) == 4


class TestMineMlms:
    def test_text_output(self, table2_path, capsys):
        assert main(["mine-mlms", "--input", table2_path, "--thresholds", "4,4,3,2,1"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 18

    def test_json_output(self, table2_path, capsys):
        assert main(["mine-mlms", "--input", table2_path, "--thresholds", "4,4,3,2,1",
                     "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert {"items": [0, 2, 3, 4, 5], "support": 1} in payload

    def test_zero_threshold_is_usage_error(self, table2_path, capsys):
        assert main(["mine-mlms", "--input", table2_path, "--thresholds", "4,0,1"]) == 2


class TestCheck:
    def test_agreement(self, table1_path, capsys):
        assert main(["check", "--input", table1_path, "--min-sup", "2"]) == 0
        out = capsys.readouterr().out
        assert "OK" in out and "8 itemsets" in out


class TestBench:
    def test_cross_product_rows_and_header(self, table1_path, capsys):
        rc = main(["bench", "--inputs", table1_path, "--algos", "ifp,apriori",
                   "--thresholds", "2,3,4"])
        assert rc == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == BENCH_CSV_HEADER
        assert len(lines) == 1 + 6
        for line in lines[1:]:
            dataset, algo, threshold, elapsed, itemsets, peak = line.split(",")
            assert dataset == table1_path
            assert algo in ("ifp", "apriori")
            assert threshold in ("2", "3", "4")
            assert float(elapsed) >= 0
            assert int(itemsets) >= 0
            assert int(peak) >= 0

    def test_row_order_is_deterministic(self, table1_path, capsys):
        main(["bench", "--inputs", table1_path, "--algos", "apriori,ifp", "--thresholds", "3,2"])
        rows = [l.split(",")[:3] for l in capsys.readouterr().out.splitlines()[1:]]
        assert rows == [
            [table1_path, "apriori", "3"],
            [table1_path, "apriori", "2"],
            [table1_path, "ifp", "3"],
            [table1_path, "ifp", "2"],
        ]

    def test_jobs_do_not_change_measured_columns(self, table1_path, table2_path, capsys):
        def columns(jobs):
            rc = main(["bench", "--inputs", table1_path, table2_path,
                       "--algos", "ifp,apriori,oracle", "--thresholds", "2,3",
                       "--jobs", str(jobs)])
            assert rc == 0
            out = capsys.readouterr().out.splitlines()
            return [
                (d, a, t, i, p)
                for d, a, t, _, i, p in (line.split(",") for line in out[1:])
            ]

        assert columns(1) == columns(4)

    def test_timeout_records_minus_one(self, table1_path, capsys):
        rc = main(["bench", "--inputs", table1_path, "--algos", "ifp",
                   "--thresholds", "2", "--timeout", "0"])
        assert rc == 0
        row = capsys.readouterr().out.splitlines()[1]
        assert row == f"{table1_path},ifp,2,-1,-1,-1"

    def test_unknown_algorithm_is_usage_error(self, table1_path, capsys):
        assert main(["bench", "--inputs", table1_path, "--algos", "magic",
                     "--thresholds", "2"]) == 2

    def test_same_dataset_twice_counts_identical(self, table1_path, capsys):
        main(["bench", "--inputs", table1_path, table1_path, "--algos", "ifp",
              "--thresholds", "2"])
        rows = capsys.readouterr().out.splitlines()[1:]
        assert rows[0].split(",")[4] == rows[1].split(",")[4]

    def test_sweep_api_yields_records(self, table1_path):
        records = list(bench_sweep([table1_path], ["ifp"], ["2"], jobs=1, timeout=30))
        assert len(records) == 1
        assert records[0].itemsets == 8

    def test_cross_check_flags_mismatched_counts(self):
        from ifpmine.cli import BenchRecord, cross_check_counts

        agree = [
            BenchRecord("d", "ifp", "2", 1.0, 8, 63),
            BenchRecord("d", "apriori", "2", 1.0, 8, 0),
            BenchRecord("d", "oracle", "2", -1, -1, -1),  # timeout ignored
        ]
        assert cross_check_counts(agree) == []
        disagree = agree + [BenchRecord("d", "oracle", "3", 1.0, 11, 0),
                            BenchRecord("d", "ifp", "3", 1.0, 12, 63)]
        assert cross_check_counts(disagree) == [("d", "3", [11, 12])]


class TestGen:
    def test_writes_fimi_and_reproducible(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a.fimi", tmp_path / "b.fimi"
        args = ["gen", "--items", "6", "--transactions", "30", "--density", "0.4"]
        assert main(args + ["--seed", "9", "--out", str(out1)]) == 0
        assert main(args + ["--seed", "9", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        assert len(out1.read_text().splitlines()) == 30

    def test_bad_density_is_usage_error(self, tmp_path, capsys):
        assert main(["gen", "--items", "6", "--transactions", "3", "--density", "1.5",
                     "--seed", "1", "--out", str(tmp_path / "x.fimi")]) == 2


class TestRunSpecApi:
    def test_direct_runspec_invocation(self, table1_path, capsys):
        rc = run(RunSpec(command="mine-mii", input=table1_path, min_sup="2"))
        assert rc == 0
        assert len(capsys.readouterr().out.splitlines()) == 8

    def test_unknown_command(self, capsys):
        assert run(RunSpec(command="fly")) == 2
