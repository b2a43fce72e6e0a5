import json

import pytest

from quivalg.cli import main, paper_example, paper_example_text, parse_algebra
from quivalg.errors import AlgebraParseError, BadRelationError, NotAdmissibleError


GOOD = """\
# comment line
vertices: 5
arrows: a1 1 2; a2 3 2   # trailing comment
arrows: a3 2 4; a4 2 5
relations: a1 a3; a2 a4
"""


def test_parse_algebra_roundtrip():
    a = parse_algebra(GOOD)
    assert a.quiver.vertex_count == 5
    assert len(a.quiver.arrows) == 4
    assert len(a.relations) == 2
    assert a.dimension == 11


def test_parse_algebra_matches_fixture(branching_algebra):
    assert parse_algebra(paper_example_text()) == branching_algebra


def test_parse_minimal():
    a = parse_algebra("vertices: 1")
    assert a.dimension == 1


@pytest.mark.parametrize("text,fragment", [
    ("arrows: a 1 2", "missing 'vertices:'"),
    ("vertices: 0", "line 1"),
    ("vertices: two", "line 1"),
    ("vertices: 2\nvertices: 2", "line 2"),
    ("vertices: 2\narrows: a 1", "line 2"),
    ("vertices: 2\narrows: a 1 3", "line 2"),
    ("vertices: 2\narrows: a 1 2; a 1 2", "duplicate arrow"),
    ("vertices: 2\narrows: a 1 2\nrelations: a b", "unknown arrow 'b'"),
    ("vertices: 3\narrows: a 1 2; b 1 3\nrelations: a b", "do not form a path"),
    ("vertices: 2\nwidgets: 7", "unknown key"),
    ("vertices: 2\njust text", "expected"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(AlgebraParseError) as err:
        parse_algebra(text)
    assert fragment in str(err.value)


def test_parse_surfaces_construction_errors():
    with pytest.raises(BadRelationError):
        parse_algebra("vertices: 2\narrows: a 1 2\nrelations: a")
    with pytest.raises(NotAdmissibleError):
        parse_algebra("vertices: 1\narrows: x 1 1")


def test_paper_example_record():
    record = paper_example()
    assert record["dominant_dimension"] == 1
    assert record["nakayama"] is False
    assert record["qf2_right"] is False
    assert record["min_faithful_proj_inj_right"] == [1, 3]
    assert record["base_algebra"] == "K x K"
    assert record["base_algebra_dimension"] == 2
    assert record["double_centralizer"] is False


def test_cli_paper_example_json(capsys):
    assert main(["paper-example", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dominant_dimension"] == 1 and data["nakayama"] is False


def test_cli_check_and_domdim(tmp_path, capsys):
    path = tmp_path / "alg.txt"
    path.write_text(GOOD)
    assert main(["check", str(path)]) == 0
    out = capsys.readouterr().out
    assert "dimension: 11" in out
    assert main(["domdim", str(path)]) == 0
    assert "dominant dimension: 1" in capsys.readouterr().out


def test_cli_coresolve_nakayama_qf2(tmp_path, capsys):
    path = tmp_path / "alg.txt"
    path.write_text(GOOD)
    assert main(["coresolve", str(path), "--terms", "2"]) == 0
    out = capsys.readouterr().out
    assert "I_0" in out and "projective=yes" in out
    assert main(["nakayama", str(path)]) == 0
    assert "not a Nakayama" in capsys.readouterr().out
    assert main(["qf2", str(path), "--side", "right"]) == 0
    assert "QF-2 (right): False" in capsys.readouterr().out


def test_cli_base_and_dc(tmp_path, capsys):
    path = tmp_path / "alg.txt"
    path.write_text(GOOD)
    assert main(["base", str(path)]) == 0
    out = capsys.readouterr().out
    assert "K x K" in out and "idempotent vertices: [4, 5]" in out
    assert main(["dc", str(path)]) == 0
    assert "double centraliser: False" in capsys.readouterr().out


def test_cli_endo(capsys):
    code = main(["endo", "--kupisch", "cyclic:2",
                 "--summands", "P1 top=1,len=1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "kupisch: cyclic:3,2" in out
    assert "nakayama: True" in out


def test_cli_endo_summand_tokens(capsys):
    code = main(["endo", "--kupisch", "linear:3,2,1",
                 "--summands", "P1 P2 P3 I1 I2 I3 I2/s"])
    assert code == 0
    assert "summands: 5" in capsys.readouterr().out


def test_cli_endo_bad_token(capsys):
    assert main(["endo", "--kupisch", "cyclic:2", "--summands", "Q1"]) == 1
    assert "bad summand token" in capsys.readouterr().err


def test_cli_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("vertices: 2\narrows: a 1 5\n")
    assert main(["check", str(path)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_cli_missing_file(capsys):
    assert main(["check", "/nonexistent/file.alg"]) == 1


def test_cli_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "not-a-suite"])
    assert exc.value.code == 1


def test_cli_verify_pass(tmp_path, capsys):
    report_path = tmp_path / "r.json"
    csv_path = tmp_path / "r.csv"
    code = main(["verify", "qf2-chain", "--max-vertices", "2", "--max-arrows", "2",
                 "--max-rel-len", "2", "--report", str(report_path),
                 "--csv", str(csv_path)])
    assert code == 0
    data = json.loads(report_path.read_text())
    assert data["passed"] is True
    assert "suite,qf2-chain" in csv_path.read_text()


def test_cli_verify_stdout_json(capsys):
    code = main(["verify", "cross-checks", "--max-vertices", "1", "--max-arrows", "1",
                 "--max-rel-len", "2", "--max-n", "2", "--max-c", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert json.loads(out)["suite"] == "cross-checks"


def test_cli_verify_counterexample_exit(monkeypatch, capsys):
    from quivalg import cli as cli_module
    from quivalg.verify import VerificationReport

    def fake(*args, **kwargs):
        return VerificationReport(suite="qf2-chain", bounds={}, counts={},
                                  counterexamples=[{"implication": "x"}])

    monkeypatch.setattr(cli_module, "run_suite", fake)
    assert main(["verify", "qf2-chain"]) == 2


def test_cli_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("vertices: 1\n"))
    assert main(["check", "-"]) == 0
    assert "dimension: 1" in capsys.readouterr().out
