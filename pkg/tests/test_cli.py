import json

import pytest

from cli import main


@pytest.fixture
def square(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("ring n=2\nideal: x1^2, x2^2\n", encoding="utf-8")
    return str(path)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_hilbert(square, capsys):
    assert main(["hilbert", "--ideal", square, "--bound", "3"]) == 0
    assert capsys.readouterr().out == "1,2,1,0 tail=zero\n"


def test_hilbert_json(square, capsys):
    assert main(["hilbert", "--ideal", square, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"values": [1, 2, 1, 0], "tail": "zero"}


def test_lex(capsys):
    assert main(["lex", "--hf", "1,2,1,0", "--n", "2", "--tail", "zero"]) == 0
    assert capsys.readouterr().out == "ring n=2\nideal: x1^2, x1*x2, x2^3\n"


def test_lex_infeasible(capsys):
    assert main(["lex", "--hf", "1,1,2", "--n", "2"]) == 3
    assert "error:" in capsys.readouterr().err


def test_lpp(capsys):
    argv = ["lpp", "--hf", "1,2,1,0", "--n", "2", "--tail", "zero", "--degrees", "2,3"]
    assert main(argv) == 0
    assert capsys.readouterr().out == "ring n=2\nideal: x1^2, x1*x2, x2^3\n"


def test_lpp_nonexistent():
    argv = ["lpp", "--hf", "1,2,2,0", "--n", "2", "--tail", "zero", "--degrees", "2,2"]
    assert main(argv) == 3


def test_betti_grid(square, capsys):
    assert main(["betti", "--ideal", square]) == 0
    assert capsys.readouterr().out == "   0 1\n2: 2 -\n3: - 1\n"


def test_betti_methods_agree(tmp_path, capsys):
    path = write(tmp_path, "lpp.txt", "ring n=2\nideal: x1^2, x1*x2, x2^3\n")
    outputs = []
    methods = (["--method", "ek"], ["--method", "koszul"], ["--method", "spp", "--degrees", "2,3"])
    for extra in methods:
        assert main(["betti", "--ideal", path, *extra]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_betti_json(square, capsys):
    assert main(["betti", "--ideal", square, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["convention"] == "ideal"
    assert payload["entries"] == [{"i": 0, "j": 2, "b": 2}, {"i": 1, "j": 4, "b": 1}]


def test_betti_errors(square):
    assert main(["betti", "--ideal", square, "--method", "ek"]) == 3
    assert main(["betti", "--ideal", square, "--method", "spp"]) == 2
    assert main(["betti", "--ideal", square, "--cap", "1"]) == 4


def test_link(tmp_path, capsys):
    path = write(tmp_path, "self.txt", "ring n=2\nideal: x1, x2^2\n")
    assert main(["link", "--ideal", path, "--degrees", "2,2"]) == 0
    assert capsys.readouterr().out == "ring n=2\nideal: x1, x2^2\n"


def test_link_requires_containment(tmp_path):
    path = write(tmp_path, "small.txt", "ring n=2\nideal: x1^3, x2^2\n")
    assert main(["link", "--ideal", path, "--degrees", "2,2"]) == 3


def test_check_json(square, capsys):
    assert main(["check", "--ideal", square, "--degrees", "2,2", "--json"]) == 0
    facts = json.loads(capsys.readouterr().out)
    assert facts["stable"] is False
    assert facts["artinian"] is True
    assert facts["spp"] is True
    assert facts["lpp"] is True
    assert facts["minimal_powers"] == "2,2"
    assert facts["lpp_degree_sequences"] == ["2,2"]


def test_check_text(tmp_path, capsys):
    path = write(tmp_path, "principal.txt", "ring n=2\nideal: x1^2\n")
    assert main(["check", "--ideal", path]) == 0
    out = capsys.readouterr().out
    assert "artinian: no" in out
    assert "missing_power: 2" in out


def test_malformed_ideal_file(tmp_path):
    path = write(tmp_path, "bad.txt", "ring n=2\nideal: x3\n")
    assert main(["hilbert", "--ideal", path]) == 2
    assert main(["hilbert", "--ideal", str(tmp_path / "missing.txt")]) == 2


def test_missing_arguments_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["lex", "--n", "2"])
    assert info.value.code == 2


def test_reproduce(capsys):
    assert main(["reproduce", "4.2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# example-4.2 lex\n")
    assert out.rstrip().endswith("PASS")


def test_reproduce_json(capsys):
    assert main(["reproduce", "example-4.1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert [t["table"] for t in payload["tables"]] == ["lex", "lpp-4,4,8"]


def test_reproduce_unknown_example():
    assert main(["reproduce", "example-7.7"]) == 2


def test_verify_is_deterministic(tmp_path, capsys):
    report = tmp_path / "out" / "linkage.json"
    argv = ["verify", "--suite", "linkage", "--trials", "3", "--degrees", "2,3", "--seed", "5"]
    assert main([*argv, "--json-report", str(report)]) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert "PASS" in first
    assert json.loads(report.read_text(encoding="utf-8"))["passed"] is True


def test_verify_uses_config_file(tmp_path, capsys):
    config = write(tmp_path, "lexpow.yaml", "verify:\n  trials: 1\n  main_theorem_degrees: ['2,2']\n")
    assert main(["verify", "--suite", "main-theorem", "--config", config, "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["suite"] == "main-theorem"
    assert payload["properties"]["lpp-dominates"]["failed"] == 0
