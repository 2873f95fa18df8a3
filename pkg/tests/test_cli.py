import io
import json
import subprocess
import sys

from helpers import FIXTURES
from montap.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_alexander_7_5():
    code, out = call("alexander", "--link", "N([2,2,3])")
    assert code == 0
    assert out == "2*t^4 - 4*t^3 + 5*t^2 - 4*t + 2\n"


def test_alexander_pretzel_derived_value():
    code, out = call("alexander", "--link", "P(3,3,3)")
    assert (code, out) == (0, "7*t^2 - 13*t + 7\n")


def test_compute_with_oracle():
    code, out = call("compute", "--link", "P(3,3,3)", "--rep", str(FIXTURES / "pretzel_333_f11.json"), "--oracle-check")
    lines = out.splitlines()
    assert code == 0
    assert lines[1] == "degenerate-path: no"
    assert lines[2] == "oracle: agree"


def test_compute_forced_degenerate():
    code, out = call("compute", "--link", "P(3,3,3)", "--rep", str(FIXTURES / "pretzel_333_f11.json"),
                     "--force-degenerate")
    assert code == 0
    assert out.splitlines() == ["t^2 + 5*t + 1", "degenerate-path: yes"]


def test_output_is_byte_stable():
    args = ("compute", "--link", "N([2,2,3])", "--rep", str(FIXTURES / "7_5_metabelian_plus.json"))
    assert call(*args) == call(*args)


def test_dump_boundaries():
    code, out = call("alexander", "--link", "P(2,2,2)", "--dump-boundaries")
    assert code == 0
    assert "T3 b_se = [t3]" in out


def test_diagram_dump():
    code, out = call("diagram", "--link", "N([3])")
    assert code == 0
    first = out.splitlines()[0].split()
    assert first[0] in ("+1", "-1") and len(first) == 4


def test_verify_ok_and_bad(tmp_path):
    code, out = call("verify", "--link", "N([2,2,3])", "--rep", str(FIXTURES / "7_5_metabelian_plus.json"))
    assert (code, out) == (0, "Ok\n")
    bad = {"ring": {"kind": "Fp", "p": 11}, "dim": 2,
           "seeds": {"T1.x0": [["1", "1"], ["0", "1"]], "T2.x0": [["1", "0"], ["1", "1"]], "T3.x0": [["1", "1"], ["0", "1"]]}}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out = call("verify", "--link", "P(3,3,3)", "--rep", str(path))
    assert code == 2
    assert "crossing" in out


def test_parse_error_exit_code():
    assert call("alexander", "--link", "X(1)")[0] == 1
    assert call("compute", "--link", "N([3])")[0] == 1  # --rep is required
    assert call("alexander", "--link", "N([3])", "--ring", "Fp:12")[0] == 1


def test_invalid_rep_exit_code(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"ring": {"kind": "Z"}, "dim": 1, "seeds": {"T1.x0": [["2"]]}}))
    assert call("compute", "--link", "N([3])", "--rep", str(path))[0] == 2
    path.write_text("{not json")
    assert call("compute", "--link", "N([3])", "--rep", str(path))[0] == 2


def test_ring_override():
    code, _ = call("compute", "--link", "P(3,3,3)", "--rep", str(FIXTURES / "pretzel_333_f11.json"),
                   "--ring", "Fp:13")
    # the F_11 matrices are not a representation mod 13
    assert code == 2


def test_engine_error_exit_code(monkeypatch):
    import montap.cli as cli
    from montap.engine import DivisionFailed

    def boom(*a, **k):
        raise DivisionFailed("not exact")

    monkeypatch.setattr(cli, "compute_tap", boom)
    assert call("alexander", "--link", "N([3])")[0] == 3


def test_oracle_mismatch_exit_code(monkeypatch):
    import montap.cli as cli
    from montap.engine import alexander_polynomial
    from montap.tangles import parse_link

    other = alexander_polynomial(parse_link("N([5])"))
    monkeypatch.setattr(cli, "wada_invariant", lambda d, r: other)
    assert call("alexander", "--link", "N([3])", "--oracle-check")[0] == 4


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "montap.cli", "alexander", "--link", "N([3])"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "t^2 - t + 1\n"
