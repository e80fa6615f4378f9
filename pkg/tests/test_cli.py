import io
import json
import subprocess
import sys

import pytest

from eulerpoincare import build
from eulerpoincare.builders import CATALOG_MODELS
from eulerpoincare.cli import main
from eulerpoincare.io.scx import serialize_scx


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv, stdin=""):
    code, out, err = run("--json", *argv, stdin=stdin)
    doc = json.loads(out)
    assert doc["exit_code"] == code
    return code, doc


@pytest.fixture
def scx_file(tmp_path):
    def write(model, name=None):
        path = tmp_path / f"{name or model}.scx"
        path.write_text(serialize_scx(build(model)))
        return str(path)
    return write


def test_build_pipe_chi():
    code, text, _ = run("build", "torus")
    assert code == 0
    code, out, _ = run("chi", stdin=text)
    assert (code, out.strip()) == (0, "0")


def test_reduce_tetrahedron(scx_file):
    code, out, _ = run("reduce", "--trace", scx_file("sphere-tetra"))
    assert code == 0
    assert out.strip().splitlines()[-1] == "residual 3 3 1, total chi 2"
    code, out, _ = run("reduce", scx_file("sphere-tetra"))
    assert out.strip() == "residual 3 3 1, total chi 2"


def test_reduce_seed_option(scx_file):
    code, doc = run_json("reduce", "--trace", "--seed", "1,2,3", scx_file("sphere-tetra"))
    assert code == 0 and doc["steps"][0]["removed"] == [[1, 2, 3]]
    code, _, err = run("reduce", "--seed", "1,2", scx_file("sphere-tetra"))
    assert code == 2 and "--seed" in err


def test_classify_klein(scx_file):
    code, out, _ = run("classify", scx_file("klein"))
    assert code == 0
    assert out.splitlines()[0] == "non-orientable, genus 2, chi 0"


def test_orientable_outputs(scx_file):
    code, out, _ = run("orientable", scx_file("torus"))
    assert (code, out.strip()) == (0, "orientable")
    code, out, _ = run("orientable", scx_file("projective-plane"))
    assert out.startswith("non-orientable\nwitness: ")
    code, doc = run_json("orientable", scx_file("klein"))
    assert doc["orientable"] is False and doc["witness"][0] == doc["witness"][-1]


def test_validate(tmp_path):
    ok = tmp_path / "ok.scx"
    ok.write_text("scx 1\n0 1 2\n")
    assert run("validate", str(ok))[0] == 0
    impure = tmp_path / "impure.scx"
    impure.write_text("scx 1\n0 1 2\n5\n")
    code, out, _ = run("validate", "--pure", "2", str(impure))
    assert code == 1 and "[5]" in out


def test_build_and_connect_sum_files(tmp_path):
    a, b, out = tmp_path / "a.scx", tmp_path / "b.scx", tmp_path / "ab.scx"
    assert run("build", "torus", "-o", str(a))[0] == 0
    assert run("build", "genus(2)", "-o", str(b))[0] == 0
    code, doc = run_json("connect-sum", str(a), str(b), "-o", str(out))
    assert code == 0 and doc["chi"] == -4
    code, doc = run_json("classify", str(out))
    assert doc["genus"] == 3 and doc["orientable"] is True


def test_off_input(data_dir):
    code, out, _ = run("chi", str(data_dir / "truncated_icosahedron.off"))
    assert (code, out.strip()) == (0, "2")
    text = (data_dir / "cube.off").read_text()
    assert run("chi", stdin=text)[1].strip() == "2"
    assert run("--format", "off", "chi", stdin=text)[1].strip() == "2"
    assert run("chi", "--format", "off", stdin=text)[1].strip() == "2"


@pytest.mark.parametrize(
    "argv, stdin, code, kind",
    [
        (["chi"], "scx 1\n0 1 1\n", 2, "DegenerateSimplex"),
        (["chi"], "scx 9\n0 1\n", 2, "ParseError"),
        (["chi"], "scx 1\n0 1 2\n1 0 2\n", 2, "DuplicateMaximalFace"),
        (["chi"], "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n", 2, "IndexOutOfRange"),
        (["chi", "--format", "off"], "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n2 0 1\n", 2, "DegenerateFace"),
        (["chi", "/nonexistent/file.scx"], "", 2, "FileNotFoundError"),
        (["build", "genus(-2)"], "", 2, "InvalidParameter"),
        (["chi"], "scx 1\n", 1, "EmptyComplex"),
        (["classify"], "scx 1\n0 1 2\n3 4 5\n", 1, "Disconnected"),
        (["classify"], "scx 1\n0 1 2\n4\n", 1, "NotPure"),
        (["orientable"], "scx 1\n0 1 2\n0 1 3\n0 1 4\n", 1, "NotASurfaceComplex"),
        (["reduce"], serialize_scx(build("pinched-torus")), 1, "NotClosedSurface"),
    ],
)
def test_error_exit_codes(argv, stdin, code, kind):
    got, doc = run_json(*argv, stdin=stdin)
    assert got == code
    assert doc["error"]["type"] == kind
    c2, out, err = run(*argv, stdin=stdin)
    assert c2 == code and out == "" and err.startswith("error: ")


def test_not_surface_classification_exit():
    code, doc = run_json("classify", stdin="scx 1\n0 1 2\n")
    assert code == 1 and doc["kind"] == "not-surface"


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["chi", "--bogus"], ["reduce", "--max-backtrack", "x"]])
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2 and err.startswith("usage error")


def _parse_report_lines(text):
    lines = text.strip().splitlines()
    fields = dict(line.split(": ", 1) for line in lines[1:])
    return lines[0], fields


def _human(value):
    if value is None:
        return "undefined"
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


@pytest.mark.parametrize("model", [str(m) for m in CATALOG_MODELS])
def test_json_and_human_agree(scx_file, model):
    path = scx_file(model, name=model.replace("(", "_").replace(")", ""))
    code_h, out, _ = run("classify", path)
    code_j, doc = run_json("classify", path)
    assert code_h == code_j
    summary, fields = _parse_report_lines(out)
    assert fields["label"] == doc["label"]
    assert fields["kind"] == doc["kind"]
    assert fields["closed"] == _human(doc["closed"])
    assert fields["orientable"] == _human(doc["orientable"])
    assert fields["genus"] == ("none" if doc["genus"] is None else str(doc["genus"]))
    assert fields["chi"] == str(doc["chi"])
    assert fields["pinch vertices"] == (" ".join(map(str, doc["pinch_vertices"])) or "none")
    assert f"chi {doc['chi']}" in summary
    # chi and reduce agree with their JSON forms too
    assert run("chi", path)[1].strip() == str(run_json("chi", path)[1]["chi"])


@pytest.mark.parametrize("model", ["sphere-cube", "torus", "klein"])
def test_reduce_json_and_human_agree(scx_file, model):
    path = scx_file(model)
    _, out, _ = run("reduce", path)
    _, doc = run_json("reduce", path)
    counts = " ".join(map(str, doc["residual_counts"]))
    assert out.strip() == f"residual {counts}, total chi {doc['total_chi']}"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerpoincare", "build", "sphere-tetra"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.startswith("scx 1\n")
