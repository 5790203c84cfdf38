"""Command-line behavior: outputs, exit codes, determinism."""

import json

from kumjian_pask.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalize_representative_example(capsys):
    code, out, err = run_cli(capsys, "normalize", "--k", "2", "--level", "2",
                             "p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*")
    assert code == 0 and err == ""
    assert out == "1 * p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*\n"


def test_normalize_trace_measures_decrease(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--k", "2", "--level", "2",
                           "--trace", "p[(1,0)->(0,0);1] . p[(1,0)->(0,0);1]*")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "1 * v(1,0) + -1 * p[(1,0)->(1,-1);2] . p[(1,0)->(1,-1);2]*"
    measures = []
    for line in lines[:-1]:
        assert line.startswith("rule=") and " pos=" in line and " measure=(" in line
        measures.append(tuple(
            int(x) for x in line.split("measure=(")[1].rstrip(")").split(",")))
    assert measures == sorted(measures, reverse=True)
    assert len(set(measures)) == len(measures)


def test_mul_and_star(capsys):
    code, out, _ = run_cli(capsys, "mul", "--k", "2", "--level", "2",
                           "p[(1,1)->(1,0);2]*", "p[(1,1)->(1,0);2]")
    assert code == 0 and out == "1 * v(1,0)\n"
    code, out, _ = run_cli(capsys, "star", "--k", "2", "--level", "2",
                           "p[(1,1)->(1,0);2]")
    assert code == 0 and out == "1 * p[(1,1)->(1,0);2]*\n"


def test_mul_orthogonal_vertices(capsys):
    code, out, _ = run_cli(capsys, "mul", "--k", "1", "--level", "2",
                           "v(0)", "v(1)")
    assert code == 0 and out == "0\n"


def test_basis_pair_filter(capsys):
    code, out, _ = run_cli(capsys, "basis", "--k", "1", "--level", "2",
                           "--window", "-2..2", "--degree-bound", "1",
                           "--shape", "pair", "--range-left", "0",
                           "--range-right", "0")
    assert code == 0
    assert out.splitlines() == [
        "p[(0)->(-1);1] . p[(0)->(-1);2]*",
        "p[(0)->(-1);2] . p[(0)->(-1);1]*",
        "p[(0)->(-1);2] . p[(0)->(-1);2]*",
    ]


def test_basis_structured(capsys):
    code, out, _ = run_cli(capsys, "basis", "--k", "1", "--level", "2",
                           "--window", "-1..1", "--degree-bound", "0",
                           "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"words": ["v(-1)", "v(0)", "v(1)"]}


def test_normalize_structured(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--k", "1", "--level", "1",
                           "--format", "structured",
                           "p[(1)->(0);1] . p[(1)->(0);1]*")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"element": {"ring": "int",
                                   "terms": [{"coeff": "1", "word": ["v(1)"]}]}}


def test_ring_flag(capsys):
    code, out, _ = run_cli(capsys, "normalize", "--k", "1", "--level", "2",
                           "--ring", "zmod:2",
                           "p[(1)->(0);1] + p[(1)->(0);1]")
    assert code == 0 and out == "0\n"


def test_check_command_passes(capsys):
    code, out, _ = run_cli(capsys, "check", "lemma8", "--k", "2", "--level", "2",
                           "--seed", "5", "--cases", "20")
    assert code == 0
    assert out == "name=lemma8 cases=20 failures=0 seed=5\n"


def test_check_all_structured(capsys):
    code, out, _ = run_cli(capsys, "check", "all", "--k", "1", "--level", "2",
                           "--seed", "3", "--cases", "5",
                           "--window", "-1..1", "--degree-bound", "2",
                           "--format", "structured")
    assert code == 0
    payload = json.loads(out)
    names = [r["name"] for r in payload["reports"]]
    assert names == ["lemma3", "lemma8", "lemma12", "lemma13",
                     "confluence", "kp"]
    assert all(r["failures"] == [] for r in payload["reports"])


def test_per_coordinate_window(capsys):
    code, out, _ = run_cli(capsys, "basis", "--k", "2", "--level", "1",
                           "--window", "0..1,-1..0", "--degree-bound", "0")
    assert code == 0
    assert out.splitlines() == ["v(0,-1)", "v(0,0)", "v(1,-1)", "v(1,0)"]


def test_element_from_file(tmp_path, capsys):
    path = tmp_path / "element.txt"
    path.write_text("p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "normalize", "--k", "2", "--level", "2",
                           f"@{path}")
    assert code == 0
    assert out == "1 * p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*\n"


def test_usage_errors_exit_two(capsys):
    # malformed element
    code, _, err = run_cli(capsys, "normalize", "--k", "2", "--level", "2",
                           "p[(1,1)->(0,0);3,1]")
    assert code == 2 and "level entry" in err
    # wrong dimension
    code, _, err = run_cli(capsys, "normalize", "--k", "2", "--level", "2",
                           "v(0)")
    assert code == 2
    # missing required flags
    code, _, _ = run_cli(capsys, "normalize", "v(0)")
    assert code == 2
    # bad window
    code, _, err = run_cli(capsys, "basis", "--k", "2", "--level", "2",
                           "--window", "2..-2")
    assert code == 2
    # bad ring
    code, _, err = run_cli(capsys, "normalize", "--k", "1", "--level", "1",
                           "--ring", "float", "v(0)")
    assert code == 2
    # missing element file
    code, _, err = run_cli(capsys, "normalize", "--k", "1", "--level", "1",
                           "@/nonexistent/element.txt")
    assert code == 2


def test_byte_reproducibility(capsys):
    args = ("check", "confluence", "--k", "2", "--level", "2",
            "--seed", "12", "--cases", "15", "--format", "structured")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


def test_check_failure_exits_one(capsys, monkeypatch):
    from kumjian_pask import verify

    def broken_check(graph, seed, cases, window=None, ring=None,
                     case_index=None):
        report = verify.CheckReport(name="lemma8", cases=cases, seed=seed)
        report.failures.append(verify.CaseFailure(
            index=0, case_seed=f"{seed}:lemma8:0",
            input_text="1 * v(0,0)", detail="synthetic failure"))
        return report

    monkeypatch.setitem(verify.CHECKS, "lemma8", broken_check)
    code, out, _ = run_cli(capsys, "check", "lemma8", "--k", "2",
                           "--level", "2", "--seed", "9", "--cases", "4")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "name=lemma8 cases=4 failures=1 seed=9"
    assert lines[1].startswith("failure index=0 seed=9:lemma8:0")
    assert lines[2] == ("repro: kpalg check lemma8 --k 2 --level 2 --seed 9 "
                        "--cases 4 --case-index 0 --window -3..3 "
                        "--degree-bound 3")
