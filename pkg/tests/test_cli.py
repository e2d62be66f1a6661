import json
import subprocess
import sys

import pytest

from symnewton.cli import garland_lines, main
from symnewton.partitions import parse_partition


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand(capsys):
    assert run(capsys, "expand", "2,1", "--vars", "2")[:2] == (0, "1*x1^2*x2^1\n1*x1^1*x2^2\n")
    assert run(capsys, "expand", "1,1,1", "--vars", "2")[1] == "0\n"
    code, out, _ = run(capsys, "expand", "1", "--vars", "3")
    assert out.splitlines() == ["1*x1^1", "1*x2^1", "1*x3^1"]


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "2,1", "--vars", "2", "--json")
    assert json.loads(out) == {
        "partition": [2, 1],
        "vars": 2,
        "terms": [
            {"exponents": [2, 1], "coeff": {"num": 1, "den": 1}},
            {"exponents": [1, 2], "coeff": {"num": 1, "den": 1}},
        ],
    }


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "expand", "2,x", "--vars", "2")
    assert code == 2 and out == ""
    assert "'x'" in err


def test_m2p(capsys):
    assert run(capsys, "m2p", "2,1")[1] == "p[2,1] − p[3]\n"
    assert run(capsys, "m2p", "3")[1] == "p[3]\n"
    assert run(capsys, "m2p", "1,1")[1] == "1/2·p[1,1] − 1/2·p[2]\n"
    assert run(capsys, "m2p", "1^2")[1] == "1/2·p[1,1] − 1/2·p[2]\n"
    assert run(capsys, "m2p", "()")[0] == 2


def test_m2p_json(capsys):
    code, out, _ = run(capsys, "m2p", "1,1", "--json")
    assert json.loads(out) == {
        "partition": [1, 1],
        "basis": "p",
        "terms": [
            {"partition": [1, 1], "coeff": {"num": 1, "den": 2}},
            {"partition": [2], "coeff": {"num": -1, "den": 2}},
        ],
    }


def test_pieri_and_e2p(capsys):
    assert run(capsys, "pieri", "1", "2,1")[1] == "m[3,1] + 2·m[2,2] + 2·m[2,1,1]\n"
    assert run(capsys, "pieri", "2", "()")[1] == "m[2]\n"
    assert run(capsys, "e2p", "3")[1] == "1/6·p[1,1,1] − 1/2·p[2,1] + 1/3·p[3]\n"
    assert run(capsys, "e2p", "0")[0] == 2


def test_garland(capsys):
    assert run(capsys, "garland", "2,1")[1] == "2·p(2,1) = (h⊗t^2)p(1) + (h⊗t^1)p(2) − 2(h⊗t^3)p()\n"
    out = run(capsys, "garland", "1,1")[1]
    assert "2Λ_2 = (h⊗t^1)Λ_1 − (h⊗t^2)Λ_0" in out.splitlines()
    assert run(capsys, "garland", "3")[1] == "1·p(3) = (h⊗t^3)p()\n"
    assert run(capsys, "garland", "")[0] == 2


def test_garland_json(capsys):
    code, out, _ = run(capsys, "garland", "2,1", "--json")
    data = json.loads(out)
    assert data["length"] == 2
    assert [t["composition"] for t in data["terms"]] == [[1, 0], [0, 1], [1, 1]]
    assert data["terms"][2] == {
        "sign": -1, "coeff": 2, "power_degree": 3, "residual": [], "composition": [1, 1],
    }


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "1", "--json")
    assert code == 0
    assert json.loads(out) == {
        "bound": 1,
        "policy": "paper",
        "partitions": 1,
        "checked": 2,
        "formal_checked": 1,
        "classical_checked": 1,
        "failures": [],
    }


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "6", "--policy", "paper")
    assert code == 0
    assert "partitions: 29" in out and "failures: 0" in out and "time:" in out


def test_verify_json_has_no_timing(capsys):
    _, out, _ = run(capsys, "verify", "--max-weight", "4", "--json", "--policy", "extended")
    assert "time" not in out


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "--max-weight", "7", "--json")[1]
    parallel = run(capsys, "verify", "--max-weight", "7", "--json", "--jobs", "3")[1]
    assert serial == parallel


def test_verify_failure_exit_code(capsys, monkeypatch):
    from symnewton import sweep
    from symnewton.newton import Verdict

    def bad(lam, n):
        return Verdict(False, lam, n, (1,) + (0,) * (n - 1), 1, 2)

    monkeypatch.setattr(sweep, "verify_theorem", bad)
    code, out, _ = run(capsys, "verify", "--max-weight", "2", "--json")
    data = json.loads(out)
    assert code == 1
    assert len(data["failures"]) == data["checked"]
    assert data["failures"][0]["lhs"] == {"num": 1, "den": 1}


def test_usage_errors_exit_2():
    for argv in (["verify"], ["expand", "1"], ["nope"], ["verify", "--max-weight", "3", "--policy", "x"]):
        proc = subprocess.run([sys.executable, "-m", "symnewton", *argv], capture_output=True)
        assert proc.returncode == 2, argv


@pytest.mark.parametrize("lam", ["2,1", "3,3,1", "1^4", "4,2^2,1"])
def test_printed_partitions_reparse(capsys, lam):
    # every bracketed partition in rendered output must parse back
    import re

    for argv in (["m2p", lam], ["pieri", "2", lam], ["garland", lam]):
        out = run(capsys, *argv)[1]
        for inner in re.findall(r"[\[(]([\d,]*)[\])]", out):
            parsed = parse_partition(f"({inner})")
            assert ",".join(map(str, parsed.flat())) == inner


def test_garland_lines_elementary():
    assert garland_lines(parse_partition("1^3"))[1] == "3Λ_3 = (h⊗t^1)Λ_2 − (h⊗t^2)Λ_1 + (h⊗t^3)Λ_0"
