import io
import json
import subprocess
import sys

import pytest

from ringlab.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_json():
    code, text = run("classify", "Z(9)", "--json")
    assert code == 0
    data = json.loads(text)
    assert data["properties"]["clean"] is True
    assert data["properties"]["sqrtj_clean"] is False


def test_json_output_is_byte_identical():
    assert run("classify", "M(2,GF(2))", "--json") == run("classify", "M(2,GF(2))", "--json")


def test_classify_text():
    code, text = run("classify", "Z(4)")
    assert code == 0 and text.startswith("ring Z(4) (order 4)")


def test_subsets():
    code, text = run("subsets", "Z(9)", "--set", "J")
    assert code == 0
    assert [line.split("\t")[0] for line in text.splitlines()] == ["0", "3", "6"]
    code, text = run("subsets", "M(2,GF(2))", "--set", "units")
    assert len(text.splitlines()) == 6
    for name in ("sqrtJ", "idem", "nilp", "center"):
        assert run("subsets", "Z(12)", "--set", name)[0] == 0


def test_decompose(capsys):
    code, text = run("decompose", "Z(4)", "--element", "3", "--kind", "sqrtj")
    assert code == 0
    assert text == "3 = 1 + 2\t3 = 1 + 2\tcommutes=true\n"
    code, text = run("decompose", "Z(6)", "--element", "5", "--kind", "unit", "--all")
    assert len(text.splitlines()) == 2
    code, text = run("decompose", "Z(6)", "--element", "5", "--kind", "unit", "--count")
    assert text.strip() == "2"
    code, text = run("decompose", "M(2,GF(2))", "--element", "6", "--kind", "sqrtj", "--strong")
    assert code == 0
    assert all(line.endswith("commutes=true") for line in text.splitlines())
    code, text = run("decompose", "Z(9)", "--element", "2", "--kind", "sqrtj")
    assert code == 0 and text == ""
    assert "no sqrtj decomposition" in capsys.readouterr().err


def test_decompose_out_of_range():
    assert run("decompose", "Z(4)", "--element", "9", "--kind", "unit")[0] == 3


def test_elements_and_parse():
    code, text = run("elements", "T(2,Z(2))")
    assert code == 0 and text.splitlines()[2] == "2\t[[0,1],[0,0]]"
    code, text = run("parse", "Z(4) x Z(2) x Z(2)")
    assert text.strip() == "Prod(Prod(ZMod(4), ZMod(2)), ZMod(2))"


def test_exit_codes(capsys):
    assert run("parse", "M(2 Z(2))")[0] == 2
    assert "offset 5" in capsys.readouterr().err
    assert run("classify", "Z(1)")[0] == 3
    assert run("classify", "M(4,Z(4))")[0] == 3
    assert run("bogus")[0] == 2
    assert run("subsets", "Z(4)", "--set", "nope")[0] == 2
    assert run("verify", "--theorem", "L9.9")[0] == 2
    assert run("import", "/nonexistent/file.ring")[0] == 3


def test_export_import(tmp_path):
    path = tmp_path / "r.ring"
    assert run("export", "Triv(Z(4))", "-o", str(path))[0] == 0
    code, text = run("import", str(path))
    assert code == 0 and "order 16" in text
    code, text = run("import", str(path), "--json")
    assert json.loads(text)["ring"] == "Triv(Z(4))"
    assert text == run("classify", "Triv(Z(4))", "--json")[1]
    path.write_text(path.read_text().replace("RINGFILE", "RINGFYLE"))
    assert run("import", str(path))[0] == 2


def test_import_rejects_non_ring(tmp_path):
    path = tmp_path / "bad.ring"
    path.write_text("RINGFILE v1\norder 2\nzero 0\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 0\nend\n")
    assert run("import", str(path))[0] == 3


def test_verify_single_theorem_and_corpus_file(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# small corpus\nZ(8)\n\nZ(9)\n")
    code, text = run("verify", "--theorem", "L2.2", "--corpus", str(corpus))
    assert code == 0
    lines = text.splitlines()
    assert json.loads(lines[-1])["summary"]["FAIL"] == 0
    assert [json.loads(x)["verdict"] for x in lines[:-1]] == ["PASS", "VACUOUS"]


def test_verify_exit_codes(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("M(2,GF(2))\n")
    assert run("verify", "--theorem", "L5.1-literal", "--corpus", str(corpus))[0] == 1
    corpus.write_text("Z(2)\nZ(1)\n")
    assert run("verify", "--theorem", "L2.2", "--corpus", str(corpus))[0] == 3


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ringlab.cli", "parse", "K(Z(4), s=2)"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "K(ZMod(4), 2)"
    proc = subprocess.run([sys.executable, "-m", "ringlab.cli", "parse", "Z("], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and proc.stdout == "" and "offset" in proc.stderr


@pytest.mark.parametrize("argv", [["classify", "GF(3)", "--json"], ["subsets", "Z(8)", "--set", "sqrtJ"]])
def test_repeat_invocations_identical(argv):
    assert run(*argv) == run(*argv)
