import json

import pytest

from afrank.cli import main

from conftest import FIXTURE_DIR
from expected import SHAPLEY_TABLE

FIG9 = str(FIXTURE_DIR / "fig9.apx")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- rank ---------------------------------------------------------------------------

def test_rank_fig9_complete_shapley_text(capsys):
    code, out, _ = run(capsys, "rank", FIG9, "--semantics", "complete", "--index", "shapley")
    assert code == 0
    assert "ranking: a = c > d = e > b" in out
    for name in "abcde":
        for polarity in ("in", "out"):
            assert SHAPLEY_TABLE["complete"][polarity][name][1] in out


def test_rank_tsv(capsys):
    code, out, _ = run(
        capsys, "rank", FIG9, "--semantics", "complete", "--index", "shapley",
        "--format", "tsv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "argument\tpi_in\tpi_out\tclass"
    assert lines[1] == "a\t0.11667\t-0.11667\t0"
    assert lines[-1] == "ranking: a = c > d = e > b"


def test_rank_json(capsys):
    code, out, _ = run(
        capsys, "rank", FIG9, "--semantics", "preferred", "--index", "deegan-packel",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["ranking"] == "a = c > d = e > b"
    rows = {r["argument"]: r for r in payload["result"]["scores"]}
    assert rows["a"]["pi_in"] == "0.33333"
    assert rows["b"]["pi_out"] == "0.66667"


def test_rank_exact_mode_includes_rationals(capsys):
    code, out, _ = run(
        capsys, "rank", FIG9, "--semantics", "complete", "--index", "shapley",
        "--format", "json", "--exact",
    )
    rows = {r["argument"]: r for r in json.loads(out)["result"]["scores"]}
    assert rows["a"]["pi_in_exact"] == "7/60"
    assert rows["b"]["pi_out_exact"] == "3/10"


def test_rank_deegan_packel_warning_for_conflict_free(capsys):
    code, out, _ = run(
        capsys, "rank", FIG9, "--semantics", "conflict-free", "--index", "deegan-packel"
    )
    assert code == 0
    assert "warning:" in out and "minimal winning coalition" in out


def test_rank_empty_framework(capsys):
    code, out, _ = run(
        capsys, "rank", str(FIXTURE_DIR / "empty.apx"),
        "--semantics", "complete", "--index", "shapley",
    )
    assert code == 0
    assert "warning: empty framework" in out
    assert "ranking: " in out


def test_rank_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(
        capsys, "rank", FIG9, "--semantics", "complete", "--index", "shapley",
        "--format", "json", "--output", str(target),
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["ranking"] == "a = c > d = e > b"


# -- extensions ------------------------------------------------------------------------

def test_extensions_preferred(capsys):
    code, out, _ = run(capsys, "extensions", FIG9, "--semantics", "preferred")
    assert code == 0
    assert out.strip().splitlines() == ["{a,c,d}", "{a,c,e}"]


def test_extensions_count(capsys):
    code, out, _ = run(capsys, "extensions", FIG9, "--semantics", "conflict-free", "--count")
    assert code == 0
    assert out.strip() == "13"


def test_extensions_no_stable_warning(capsys):
    code, out, _ = run(
        capsys, "extensions", str(FIXTURE_DIR / "selfloop.apx"), "--semantics", "stable"
    )
    assert code == 0
    assert "warning: no stable extension" in out


# -- properties ------------------------------------------------------------------------

def test_properties_all_reports(capsys):
    code, out, _ = run(
        capsys, "properties", FIG9, "--semantics", "complete", "--index", "shapley"
    )
    assert code == 0
    lines = [l for l in out.strip().splitlines() if not l.startswith("warning")]
    assert len(lines) == 9


def test_properties_single(capsys):
    code, out, _ = run(
        capsys, "properties", FIG9, "--semantics", "complete", "--index", "shapley",
        "--property", "totality",
    )
    assert code == 0
    assert "totality [complete/shapley]: holds-on-instance" in out


def test_properties_search_prints_witness(capsys):
    code, out, _ = run(
        capsys, "properties", FIG9, "--semantics", "conflict-free",
        "--search", "cardinality-precedence", "--max-args", "6",
        "--samples", "100", "--seed", "1",
    )
    assert code == 0
    assert "violated" in out
    assert "arg(" in out  # witness APX printed


# -- error paths -----------------------------------------------------------------------

def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.apx"
    bad.write_text("att(a,b).")
    code, _, err = run(capsys, "rank", str(bad), "--semantics", "complete", "--index", "shapley")
    assert code == 2
    assert "undeclared" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "rank", "nope.apx", "--semantics", "complete", "--index", "shapley")
    assert code == 2


def test_size_limit_exit_3(tmp_path, capsys):
    big = tmp_path / "big.apx"
    big.write_text("\n".join(f"arg(a{i})." for i in range(30)))
    code, _, err = run(capsys, "rank", str(big), "--semantics", "complete", "--index", "shapley")
    assert code == 3
    assert "exceed" in err


def test_invalid_flags_exit_4(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rank", "x.apx", "--semantics", "bogus", "--index", "shapley"])
    assert exc.value.code == 4
    with pytest.raises(SystemExit) as exc:
        main(["rank", "x.apx", "--semantics", "complete", "--index", "bogus"])
    assert exc.value.code == 4
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 4
