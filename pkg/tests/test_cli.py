"""Tests for gl_homotopy.cli.main (the ``gl-homotopy`` command)."""

from __future__ import annotations

import io
import json

import pytest

from gl_homotopy.cli.main import EXIT_CHECK
from gl_homotopy.cli.main import EXIT_INPUT
from gl_homotopy.cli.main import EXIT_OK
from gl_homotopy.cli.main import main
from gl_homotopy.cli.main import run


@pytest.fixture(autouse=True)
def _packaged_config(fresh_config):
    """Every invocation starts from the packaged iconfig."""
    return fresh_config


# ---------------------------------------------------------------------------
# text output
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["hom", "dim", "S(2)", "S(0)"], "1"),
        (["hom", "dim", "S(1)", "S(0)"], "0"),
        (["hom", "dim", "B[0,2]", "S(0)"], "1"),
        (["partitions", "selfconj", "-n", "3"], "8"),
        (["partitions", "cauchy", "-n", "2"], "16"),
        (["partitions", "dim", "2,1", "-n", "3"], "8"),
        (["object", "reduce", "B[0,1] + P(4)"], "0"),
        (["object", "reduce", "R[0,3] + B[0,2]"], "EvenR[0,3] + S(2)"),
        (["object", "dual", "R[0,3]"], "B[0,3]"),
        (["hom", "compose", "f(0,2)", "f(2,4)"], "f_{0,4}"),
        (["hom", "image", "S(0) + S(2) + S(1)"], "ev: 2, odd: 1"),
        (["block", "key", "0,0|0"], "core={0} base=-1 index=0"),
        (["weight", "twist", "0,0|0,0", "-k", "1"], "1,1|-1,-1"),
    ],
)
def test_text_output(argv, expected):
    assert run(argv) == (EXIT_OK, expected)


def test_euler_check_text():
    status, text = run(["series", "euler-check", "--u", "0", "-N", "2"])
    assert status == EXIT_OK
    assert text.splitlines() == [
        "main: [L(0)]q^0 + O(q^-5)",
        "tail: [L(-5)]q^-5",
        "bound: -4",
    ]


def test_hom_table_columns():
    status, text = run(["hom", "table", "--range", "0..3"])
    assert status == EXIT_OK
    assert text.splitlines()[0].split() == ["S(0)", "S(1)", "S(2)", "S(3)"]


def test_block_deg_over_trivial_block():
    status, text = run(
        ["--json", "block", "deg", "--weight", "0,0|0", "--range", "-2..1"]
    )
    assert status == EXIT_OK
    assert [row["deg"] for row in json.loads(text)] == [-2, -1, 0, 2]


def test_negative_values_are_not_options():
    status, text = run(["--json", "hom", "table", "--range", "-2..1"])
    assert status == EXIT_OK
    assert json.loads(text)["range"] == [-2, 1]
    status, text = run(["--json", "block", "key", "-1|1"])
    assert status == EXIT_OK
    assert json.loads(text)["block"] == {"core": [], "base": -1}


def test_core_with_base():
    status, text = run(
        ["--json", "block", "deg", "--core", "0", "--base", "-1"]
        + ["--range", "0..0"]
    )
    assert status == EXIT_OK
    assert json.loads(text)[0]["weight"] == "0,0|0"


# ---------------------------------------------------------------------------
# JSON output and input
# ---------------------------------------------------------------------------


def test_json_scalar_and_object():
    assert run(["--json", "hom", "dim", "S(2)", "S(0)"]) == (EXIT_OK, "1")
    status, text = run(["--json", "object", "reduce", "B[0,2]"])
    data = json.loads(text)
    assert data["summands"] == [{"kind": "S", "i": 2, "mult": 1}]
    assert data["block"] == {"core": [], "base": 0}


def test_json_lr_product():
    status, text = run(["--json", "partitions", "lr", "1", "1"])
    assert status == EXIT_OK
    assert json.loads(text) == [
        {"coeff": 1, "nu": [1, 1]},
        {"coeff": 1, "nu": [2]},
    ]


def test_json_object_input():
    payload = json.dumps([{"kind": "R", "a": 0, "b": 2, "mult": 2}])
    assert run(["object", "reduce", payload]) == (EXIT_OK, "2*S(0)")


def test_series_pipeline():
    """A series printed with --json can be fed back to another action."""
    status, text = run(
        ["--json", "series", "minimal-model", "--u", "0", "-N", "3"]
    )
    omega = json.dumps(json.loads(text)["omega"])
    assert run(["series", "growth", omega]) == (EXIT_OK, "pol")
    status, text = run(["--json", "series", "dual", omega])
    assert json.loads(text)["variant"] == "KacMinus"


def test_stdin_payload():
    stdin = io.StringIO("R[0,2]\n")
    assert run(["object", "reduce", "-"], stdin=stdin) == (EXIT_OK, "S(0)")


# ---------------------------------------------------------------------------
# errors and exit codes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, message",
    [
        (["weight", "info", "0,1|0"], "not dominant"),
        (["hom", "dim", "EvenR[0,3]", "S(0)"], "EvenR"),
        (["hom", "compose", "f(0,2)", "f(1,3)"], "Cannot compose"),
        (["object", "flags", "Q[0,1]"], "Cannot parse"),
        (["partitions", "dim", "1,1,1", "-n", "2"], "at most 2"),
        (["check", "no-such-check"], "Unknown check"),
        (["block", "deg", "--core", "0"], "--core needs --base"),
    ],
)
def test_input_errors(capsys, argv, message):
    assert run(argv) == (EXIT_INPUT, "")
    assert message in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    status, text = run(["nonsense"])
    assert status == EXIT_INPUT
    assert text == ""


def test_missing_config_file(tmp_path, capsys):
    missing = str(tmp_path / "none.yml")
    status, _ = run(["--config", missing, "hom", "dim", "S(0)", "S(0)"])
    assert status == EXIT_INPUT
    assert "does not exist" in capsys.readouterr().err


def test_config_changes_default_depth(tmp_path):
    iconfig = tmp_path / "iconfig.yml"
    iconfig.write_text("SERIES:\n  DEFAULT_DEPTH: 1\n")
    status, text = run(
        ["--config", str(iconfig), "--json", "series", "minimal-model", "--u", "0"]
    )
    assert status == EXIT_OK
    assert len(json.loads(text)["omega"]["terms"]) == 2


# ---------------------------------------------------------------------------
# acceptance suite
# ---------------------------------------------------------------------------


def test_check_subset_passes():
    status, text = run(["check", "hom-table", "vanishing", "self-conjugate"])
    assert status == EXIT_OK
    assert "FAIL" not in text


def test_check_failure_exit_code(monkeypatch):
    from gl_homotopy.cli import checks
    from gl_homotopy.errors import CheckFailed

    def broken(cfg, rng):
        raise CheckFailed("deliberately broken")

    monkeypatch.setitem(checks.CRITERIA, "broken", broken)
    status, text = run(["check", "broken"])
    assert status == EXIT_CHECK
    assert "deliberately broken" in text


def test_main_prints(capsys):
    assert main(["partitions", "selfconj", "-n", "2"]) == EXIT_OK
    assert capsys.readouterr().out == "4\n"
