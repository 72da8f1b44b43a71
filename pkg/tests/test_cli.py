import json
import subprocess
import sys

import pytest

from negabeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_zero(capsys):
    code, out, _ = run(capsys, "expand", "--poly", "1,-1,-1,-1", "--num", "0")
    assert code == 0 and out.strip() == "0 • 0^ω"


def test_finiteness_tribonacci(capsys):
    code, out, _ = run(capsys, "finiteness", "--poly", "1,-1,-1,-1", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "MinusF"


def test_frmax(capsys):
    code, out, _ = run(capsys, "frmax", "--m", "2", "--op", "sub")
    assert code == 0 and out.strip() == "9"
    code, out, _ = run(capsys, "frmax", "--m", "1", "--op", "add", "--oracle-depth", "4", "--json")
    data = json.loads(out)
    assert data["certified"] == 6 and data["oracle"] <= 6 and data["witness"] is None


def test_frmax_witness_json(capsys):
    _, out, _ = run(capsys, "frmax", "--m", "2", "--json")
    assert json.loads(out)["witness"] == {"x": "0000220000", "y": "0220000012", "fr": 9}


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--poly", "1,-2,-2,-2", "--num=-1/2")
    assert code == 0
    assert "d(x) =" in out


def test_orbit_ell(capsys):
    # l_beta for x^3 - 2x^2 - 2x - 2 is -b/(b+1); its word is 2 0 (per: 2)
    from negabeta.cli import _base
    from negabeta.exactfield import format_element
    from negabeta.negabase import ell_beta
    ell = format_element(ell_beta(_base("1,-2,-2,-2")))
    code, out, _ = run(capsys, "orbit", "--poly", "1,-2,-2,-2", f"--num={ell}", "--json")
    assert json.loads(out)["word"] == {"preperiod": [2, 0], "period": [2], "radix": 0}


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "--poly", "1,-1,-1,-1,-1,-1,-1,-1", "--json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "NotInD0" and len(data["cycle"]) == 3
    assert all(isinstance(v, str) and v.startswith("~") for v in data["r"])


def test_regions(capsys):
    code, out, _ = run(capsys, "regions", "--m", "3", "--box", "5")
    assert code == 0 and "....vv###.." in out


def test_domain_errors(capsys):
    assert run(capsys, "finiteness", "--poly", "1,0,-1")[0] == 1
    assert run(capsys, "orbit", "--poly", "1,-1,-1", "--num", "5")[0] == 1
    assert run(capsys, "expand", "--poly", "1,-1,-1", "--num", "b^^2")[0] == 1
    assert run(capsys, "frmax", "--m", "0")[0] == 1


def test_usage_errors(capsys):
    code, _, err = run(capsys, "frmax", "--m", "2", "--bogus")
    assert code == 2 and "--bogus" in err
    assert run(capsys, "nosuch")[0] == 2
    assert run(capsys)[0] == 2


@pytest.mark.parametrize("argv", [
    ["finiteness", "--poly", "1,-2,-1,-1", "--json"],
    ["expand", "--poly", "1,-1,-1,-1", "--num", "b^-3", "--json"],
    ["witness", "--poly", "1,-1,-1,-1", "--json"],
    ["regions", "--m", "1", "--box", "2", "--json"],
])
def test_json_canonical_and_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    data = json.loads(first)
    assert json.dumps(data, sort_keys=True, ensure_ascii=False) + "\n" == first

    def no_floats(v):
        if isinstance(v, dict):
            return all(no_floats(x) for x in v.values())
        if isinstance(v, list):
            return all(no_floats(x) for x in v)
        return not isinstance(v, float)
    assert no_floats(data)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "negabeta", "frmax", "--m", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "6"
