"""CLI behaviour: formats, determinism, exit codes."""

import json

import pytest
from click.testing import CliRunner

from cranktab import identities, verify
from cranktab.cli import main
from cranktab.identities import IdentityEntry
from cranktab.series import Series


@pytest.fixture()
def runner():
    return CliRunner()


def test_table_crank_csv(runner):
    result = runner.invoke(main, ["table", "--stat", "crank", "--n-max", "1"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["n,m,count", "0,0,1", "1,-1,1", "1,0,-1", "1,1,1"]


def test_table_ocrank_contains_point_value(runner):
    result = runner.invoke(
        main, ["table", "--stat", "ocrank", "--n-max", "50", "--format", "csv"]
    )
    assert result.exit_code == 0
    assert "4,0,2\n" in result.output


def test_table_kcrank_json_row_sums(runner):
    result = runner.invoke(
        main,
        ["table", "--stat", "kcrank", "--k", "3", "--n-max", "20", "--format", "json"],
    )
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["statistic"] == "kcrank(3)"
    from cranktab.series import partition_series

    expected = partition_series(20).pow(3).coeffs
    for row in obj["rows"]:
        assert sum(int(v) for v in row["counts"].values()) == expected[row["n"]]


def test_table_output_is_byte_identical(runner, tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (out1, out2):
        result = runner.invoke(
            main, ["table", "--stat", "m2crank", "--n-max", "12", "-o", str(out)]
        )
        assert result.exit_code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_table_rank_defaults_to_oracle(runner):
    result = runner.invoke(main, ["table", "--stat", "rank", "--n-max", "4"])
    assert result.exit_code == 0
    assert "4,3,1" in result.output


def test_table_usage_errors(runner):
    assert runner.invoke(main, ["table", "--stat", "kcrank", "--n-max", "4"]).exit_code == 2
    assert runner.invoke(main, ["table", "--stat", "bogus"]).exit_code == 2
    assert (
        runner.invoke(
            main, ["table", "--stat", "rank", "--n-max", "4", "--provenance", "gf"]
        ).exit_code
        == 2
    )
    assert (
        runner.invoke(
            main, ["table", "--stat", "crank", "--n-max", "9", "--order", "4"]
        ).exit_code
        == 2
    )


def test_verify_single_check(runner):
    result = runner.invoke(main, ["verify", "--check", "thm-1.4", "--n-max", "40"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["all_passed"] is True
    (check,) = obj["checks"]
    assert check["verdict"] == "pass"
    assert [[e["m"], e["n"]] for e in check["exceptions"]] == [[1, 1], [1, 2]]


def test_verify_check_list_and_output_file(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        main,
        ["verify", "--check", "thm-1.4,thm-1.5", "--n-max", "30", "-o", str(out)],
    )
    assert result.exit_code == 0
    obj = json.loads(out.read_text())
    assert [c["check_id"] for c in obj["checks"]] == ["thm-1.4", "thm-1.5"]


def test_verify_conj_with_k_list(runner):
    result = runner.invoke(
        main, ["verify", "--check", "conj-1.8", "--k", "2,3", "--n-max", "30"]
    )
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert [c["check_id"] for c in obj["checks"]] == [
        "conj-1.8[k=2]",
        "conj-1.8[k=3]",
    ]


def test_verify_all_aggregated(runner):
    result = runner.invoke(main, ["verify", "--check", "all", "--n-max", "40", "--order", "80"])
    assert result.exit_code == 0, result.output
    obj = json.loads(result.output)
    assert obj["all_passed"] is True
    ids = [c["check_id"] for c in obj["checks"]]
    assert ids == sorted(ids)
    assert "thm-1.4" in ids and "euler" in ids and "conj-1.8[k=2]" in ids


def test_verify_unknown_check_is_usage_error(runner):
    result = runner.invoke(main, ["verify", "--check", "thm-9.9"])
    assert result.exit_code == 2


def test_verify_bad_k_list(runner):
    result = runner.invoke(main, ["verify", "--check", "conj-1.8", "--k", "2,x"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["verify", "--check", "conj-1.8", "--k", "1"])
    assert result.exit_code == 2


def test_identity_command(runner):
    result = runner.invoke(main, ["identity", "--id", "euler", "--order", "100"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["checks"][0]["check_id"] == "euler"

    result = runner.invoke(main, ["identity", "--id", "nope"])
    assert result.exit_code == 2


def test_failing_check_exits_one(runner, monkeypatch):
    broken = IdentityEntry(
        "broken",
        "always fails",
        lambda order: [
            identities.Clause(
                "c",
                lambda N: Series.constant(N, -1),
                None,
                ("nonneg_from", 0),
            )
        ],
    )
    monkeypatch.setitem(identities.CATALOG, "broken", broken)
    result = runner.invoke(main, ["identity", "--id", "broken", "--order", "5"])
    assert result.exit_code == 1
    obj = json.loads(result.output)
    assert obj["all_passed"] is False


def test_crosscheck_command(runner):
    for args in (
        ["crosscheck", "--stat", "ocrank", "--n-max", "12"],
        ["crosscheck", "--stat", "m2crank", "--n-max", "12"],
        ["crosscheck", "--stat", "crank", "--n-max", "15"],
        ["crosscheck", "--stat", "kcrank", "--k", "2", "--n-max", "10"],
    ):
        result = runner.invoke(main, args)
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["all_passed"] is True


def test_crosscheck_usage_errors(runner):
    assert runner.invoke(main, ["crosscheck", "--stat", "rank"]).exit_code == 2
    assert runner.invoke(main, ["crosscheck", "--stat", "kcrank"]).exit_code == 2
    assert (
        runner.invoke(main, ["crosscheck", "--stat", "ocrank", "--n-max", "99"]).exit_code
        == 2
    )


def test_threads_hint_parsing(monkeypatch):
    from cranktab import cli

    monkeypatch.setenv("CRANKTAB_THREADS", "4")
    assert cli._threads_hint() == 4
    monkeypatch.setenv("CRANKTAB_THREADS", "junk")
    assert cli._threads_hint() == 1
