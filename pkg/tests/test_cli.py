import json

import pytest

from rainbow_ren.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_cycle5(capsys):
    code, out, _ = run(capsys, "report", "cycle:5", "--jobs", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["schema"] == 1
    assert rep["chi"] == 3
    assert rep["j"]["value"] is None
    assert rep["ren"]["ren"] == 1
    assert rep["profile"]["r_chi"] == 3
    assert "timings_ms" not in rep


def test_report_path3(capsys):
    _, out, _ = run(capsys, "report", "path:3", "--jobs", "1")
    rep = json.loads(out)
    assert (rep["chi"], rep["j"]["value"], rep["j-star"]["value"], rep["ren"]["ren"]) == (2, 2, 3, 0)


def test_report_file_only_chi(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("D?{\nC~\n\n@\n")
    code, out, _ = run(capsys, "report", f"@{f}", "--only", "chi", "--jobs", "1")
    reps = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["chi"] for r in reps] == [2, 4, 1]
    assert all(set(r) == {"schema", "input", "n", "m", "chi"} for r in reps)


def test_report_timings_and_skip(capsys):
    _, out, _ = run(capsys, "report", "path:16", "--only", "ren,chi", "--timings", "--jobs", "1")
    rep = json.loads(out)
    assert "skipped" in rep["ren"]
    assert all(v >= 0 for v in rep["timings_ms"].values())


def test_report_table(capsys):
    code, out, _ = run(capsys, "report", "wheel:5", "--format", "table", "--jobs", "1")
    assert code == 0 and "ren:" in out


@pytest.mark.parametrize("argv", [
    ("report", "D?"), ("report", "cycle:2"), ("report", "cycle:5", "--only", "colour"),
    ("survey", "9"), ("verify", "blobs", "3"), ("nonsense",), ("report",),
])
def test_usage_and_parse_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(list(argv))
        raise SystemExit(code)
    assert exc.value.code == 1


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "cycles", "3..12", "--jobs", "1")
    assert code == 0 and "20 agree" in out
    code, out, _ = run(capsys, "verify", "jahangir", "n=1", "m=3..6", "--jobs", "1")
    assert code == 2 and "disagree *" in out
    code, _, _ = run(capsys, "verify", "jahangir", "n=1", "m=3..6", "--findings-ok", "--jobs", "1")
    assert code == 0
    code, out, _ = run(capsys, "verify", "join", "cycle:5", "cycle:5", "--format", "json", "--jobs", "1")
    row = json.loads(out)
    assert code == 0 and (row["predicted"], row["exact"]) == (2, 2)


def test_verify_quantity_list(capsys):
    code, out, _ = run(capsys, "verify", "corona", "complete:2", "cycle:5",
                       "--quantity", "ren,chromatic-diameter", "--format", "json", "--jobs", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [(r["quantity"], r["exact"]) for r in rows] == [("ren", 2), ("chromatic-diameter", 1)]


def test_survey_outputs(capsys):
    code, out, _ = run(capsys, "survey", "4", "--connected", "--format", "json", "--jobs", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert json.loads(lines[-1])["summary"]["rows"] == 6
    _, out, _ = run(capsys, "survey", "1", "--jobs", "1")
    assert "# 1 graphs" in out


def test_survey_from_file(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Dhc\nC~\n")
    code, out, _ = run(capsys, "survey", "--input", str(f), "--format", "json", "--jobs", "1")
    rows = [json.loads(line) for line in out.splitlines()[:-1]]
    assert code == 0 and [r["n"] for r in rows] == [4, 5]
