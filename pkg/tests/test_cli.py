import io
import json
import subprocess
import sys

import pytest

from semilab.cli import run
from semilab.constructions import b2, munn, named_semilattice, times0
from semilab.sgio import loads, write_sg


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def b2_file(tmp_path):
    p = tmp_path / "b2.sg"
    write_sg(b2(), p)
    return str(p)


def test_validate(b2_file):
    code, out, _ = call("validate", b2_file)
    assert code == 0 and "size 5" in out


def test_validate_broken(tmp_path):
    p = tmp_path / "broken.sg"
    p.write_text("2\n1 0\n0 0\n")
    code, _, err = call("validate", str(p))
    assert code == 2
    assert "broken.sg" in err and "(" in err


def test_missing_file():
    code, _, err = call("validate", "/nonexistent/x.sg")
    assert code == 2 and "x.sg" in err


def test_usage_errors():
    assert call()[0] == 1
    assert call("frobnicate")[0] == 1
    assert call("construct", "brandt:zero")[0] == 1
    assert call("construct", "times0")[0] == 1


def test_analyze_b2(b2_file):
    code, out, _ = call("analyze", b2_file)
    assert code == 0
    assert "max subsemilattice: 3" in out
    code, out, _ = call("analyze", "--json", b2_file)
    r = json.loads(out)
    assert r["schema"] == 1
    assert r["s_indecomposable"]["graph"] is True
    assert r["max_subsemilattice"]["size"] == 3
    assert r["algebra_summary"] == {"dim": 5, "radical_dim": 0, "num_blocks": 2, "one_dim_blocks": 1}
    assert json.loads(json.dumps(r)) == r


def test_output_is_deterministic(b2_file):
    assert call("analyze", "--json", b2_file) == call("analyze", "--json", b2_file)
    assert call("classify-b2c", "--order", "9") == call("classify-b2c", "--order", "9")


def test_iso(tmp_path):
    tu, c3 = tmp_path / "tu.sg", tmp_path / "c3xb2.sg"
    write_sg(munn(named_semilattice("U")), tu)
    write_sg(times0(named_semilattice("C3"), b2()), c3)
    code, out, _ = call("iso", str(tu), str(c3))
    assert code == 0 and out.startswith("isomorphic")
    assert len(out.strip().splitlines()) == 10


def test_iso_negative(tmp_path, b2_file):
    p = tmp_path / "c3.sg"
    write_sg(named_semilattice("C3"), p)
    code, out, _ = call("iso", b2_file, str(p))
    assert code == 0 and "not isomorphic: size" in out


@pytest.mark.parametrize("what", ["b2", "brandt:3", "chain:4", "semilattice:F", "rees:11/01"])
def test_construct_output_revalidates(what, tmp_path):
    code, out, _ = call("construct", what)
    assert code == 0
    p = tmp_path / "c.sg"
    p.write_text(out)
    assert call("validate", str(p))[0] == 0


def test_construct_from_files(tmp_path, b2_file):
    c3 = tmp_path / "c3.sg"
    write_sg(named_semilattice("C3"), c3)
    for what, files in [("times0", [str(c3), b2_file]), ("zprime", [b2_file]), ("adjoin-zero", [b2_file]),
                        ("embed", [str(c3)]), ("munn", [str(c3)])]:
        code, out, err = call("construct", what, *files)
        assert code == 0, err
        loads(out)


def test_enumerate():
    assert call("enumerate", "--order", "3", "--count-only")[1].strip() == "24"
    assert call("enumerate", "--order", "5", "--filter", "b2c", "--count-only")[1].strip() == "1"
    code, out, _ = call("enumerate", "--order", "2")
    assert code == 0 and out.count("# order 2 class") == 5
    assert call("enumerate", "--order", "6")[0] == 2


def test_classify_b2c():
    code, out, _ = call("classify-b2c", "--order", "9")
    assert code == 0 and out.startswith("# 3 B2-combinatorial")
    assert call("classify-b2c", "--order", "7")[0] == 2


def test_algebra_command(b2_file):
    code, out, _ = call("algebra", "--contracted", "--blocks", b2_file)
    assert code == 0
    assert "dim 4, radical 0, blocks 1, 1-dim blocks 0" in out
    assert "block sizes: [2]" in out


def test_verify_prop8(tmp_path):
    p = tmp_path / "c3xb2.sg"
    write_sg(times0(named_semilattice("C3"), b2()), p)
    code, out, _ = call("verify-prop8", "--json", str(p))
    r = json.loads(out)
    assert code == 0 and r["ok"]
    assert r["summary"] == [9, 0, 3, 1] and r["blocks"] == [1, 2, 2]


def test_module_entry_point(b2_file):
    proc = subprocess.run([sys.executable, "-m", "semilab", "validate", b2_file], capture_output=True, text=True)
    assert proc.returncode == 0
