import subprocess
import sys

import pytest

from wminus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "w[1,0]", "w[0,3]")
    assert code == 0
    assert out.strip() == "-3*w[1,2] + -3*w[1,1] + -1*w[1,0]"


def test_act(capsys):
    assert run(capsys, "act", "b[-1,0]", "[]")[1].strip() == "1*[1]"
    assert run(capsys, "act", "w[2,1]", "[1,1]")[1].strip() == "1*[]"


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--max-rank", "3", "--max-dot", "2")
    rows = [line.split() for line in out.splitlines()]
    assert rows[0] == ["k\\r", "0", "1", "2", "3"]
    assert rows[2][2] == "1"
    code, out, _ = run(capsys, "dims", "--max-rank", "3", "--max-dot", "2", "--format", "machine")
    assert "dim[1,1]\t1" in out.splitlines()


def test_machine_format(capsys):
    _, out, _ = run(capsys, "normalize", "b[1,0]*b[-1,0]", "--format", "machine")
    assert out.strip() == "normal_form\t1*C + 1*b[-1,0]*b[1,0]"


def test_heis_and_phi(capsys):
    assert run(capsys, "heis", "h[1/2]", "h[-1/2]")[1].strip() == "1/2"
    assert run(capsys, "heis", "h[1/2]")[1].strip() == "1/2*s2*w[1,0]"
    assert run(capsys, "phi", "[h[1], H[-1]]")[1].strip() == "-2"
    assert run(capsys, "expand", "h[1]")[1].strip() == "-1/4*H2X*H[-1] + 1/4*H[-1]*H2X"


def test_calibrate(capsys):
    code, out, _ = run(capsys, "calibrate")
    assert code == 0
    assert "H2X -> -4*(w[-2,1] - w[-2,0])" in out
    assert out.strip().endswith("ok")


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "bracket", "w[1,0", "w[0,1]")
    assert code == 2
    assert "column 6" in err and "^" in err


def test_unknown_name(capsys):
    assert run(capsys, "phi", "zz")[0] == 2
    assert run(capsys, "expand", "zz")[0] == 2


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_verify_with_figures(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "dims", "--format", "machine", "--figures", str(tmp_path))
    assert code == 0
    assert "summary/unexpected\t0" in out
    assert (tmp_path / "verify.png").stat().st_size > 0
    run(capsys, "dims", "--figures", str(tmp_path))
    assert (tmp_path / "dims.png").stat().st_size > 0


def test_bad_manifest_path(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "phi", "--manifest", str(tmp_path / "absent.txt"))
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wminus", "bracket", "w[1,0]", "w[-1,0]"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "1*C"
