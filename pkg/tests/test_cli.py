"""Command line interface"""
import io
import json

import pytest

from conifolddt import cli
from conifolddt.conifold import universal_series
from conifolddt.series import TruncSeries


def run(*argv):
    stream = io.StringIO()
    code = cli.run(list(argv), stream=stream)
    return code, stream.getvalue()


def test_universal_text():
    code, out = run("universal", "--order", "2")
    assert code == cli.EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0] == "y0^0 y1^0 : 1"
    assert "y0^1 y1^0 : -q/(q^2 - 1)" in lines


def test_universal_text_exp_form():
    code, out = run("universal", "--order", "4", "--form", "exp",
                    "--output", "text")
    assert code == cli.EXIT_OK
    # binary operators are set off by single spaces
    assert "y0^1 y1^0 : -q/(q^2 - 1)" in out.split("\n")
    assert "q^2-1" not in out


def test_universal_json():
    code, out = run("universal", "--order", "3", "--form", "product",
                    "--output", "json")
    assert code == cli.EXIT_OK
    assert TruncSeries.from_json(out) == universal_series(3)


def test_zeta_routes():
    code1, out1 = run("zeta", "--zeta", "-1,1", "--eps", "1,0",
                      "--order", "4")
    code2, out2 = run("zeta", "--zeta", "-1,1", "--eps", "1,0",
                      "--order", "4", "--route", "framed")
    assert code1 == code2 == cli.EXIT_OK
    assert out1 == out2
    assert "y0^1 y1^0 : 1" in out1


def test_zeta_on_wall(capsys):
    code, out = run("zeta", "--zeta", "-1,1", "--order", "3")
    assert code == cli.EXIT_USAGE
    assert out == ""
    assert "lies on the wall" in capsys.readouterr().err


@pytest.mark.parametrize("zeta,eps,label", [
    ("-1,-1", "0,0", "NCDT"),
    ("-1,1", "-1,0", "DT_Y"),
    ("-1,1", "1,0", "PT_Y"),
    ("1,-1", "0,-1", "DT_Yflop"),
    ("1,-1", "0,1", "PT_Yflop"),
    ("1,1", "0,0", "Empty"),
])
def test_chamber(zeta, eps, label):
    code, out = run("chamber", "--zeta", zeta, "--eps", eps)
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["label"] == label
    assert data["generic"] is True
    assert data["witness"] is None


def test_chamber_wall():
    code, out = run("chamber", "--zeta", "-2,3", "--root-bound", "4")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["generic"] is False
    assert data["witness"] == [3, 2]


def test_chamber_bad_vector(capsys):
    code, out = run("chamber", "--zeta", "1,2,3")
    assert code == cli.EXIT_USAGE
    assert "argument --zeta" in capsys.readouterr().err


def test_dtpt_checks(capsys):
    code, out = run("dtpt", "--s-order", "3", "--t-order", "2", "--which",
                    "DT", "--check-factorization", "--euler")
    assert code == cli.EXIT_OK
    assert out.startswith("s^0 T^0 : 1")
    err = capsys.readouterr().err
    assert "factorization: PASS" in err
    assert "euler HILB: PASS" in err


def test_vertex():
    code, out = run("vertex", "--s-order", "2", "--t-order", "1",
                    "--output", "json")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["vars"] == ["s", "T"]
    assert data["s_order"] == 2


def test_count():
    code, out = run("count", "--alpha", "2,1", "--prime", "2", "--strata")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["count"] == 46
    assert data["predicted"] == 46
    assert data["match"] is True
    assert data["strata"]["match"] is True
    assert sum(data["strata"]["count"].values()) == 46


def test_count_errors(capsys):
    code, _ = run("count", "--alpha", "2,2", "--prime", "3", "--cap", "100")
    assert code == cli.EXIT_USAGE
    assert "exceeds the cap" in capsys.readouterr().err
    code, _ = run("count", "--alpha", "1,1", "--prime", "4")
    assert code == cli.EXIT_USAGE


def test_count_cap_from_environment(cap_env, capsys):
    cap_env(100)
    code, _ = run("count", "--alpha", "2,2", "--prime", "3")
    assert code == cli.EXIT_USAGE
    assert "exceeds the cap" in capsys.readouterr().err
    # the flag wins over the environment
    code, out = run("count", "--alpha", "1,1", "--prime", "2", "--cap", "200")
    assert code == cli.EXIT_OK
    assert json.loads(out)["count"] == 8


def test_verify():
    code, out = run("verify", "--suite", "vertex", "--order", "3")
    assert code == cli.EXIT_OK
    lines = out.strip().split("\n")
    assert lines[0] == "[vertex]"
    assert lines[1].startswith("  PASS")
    assert lines[-1] == "3 of 3 checks passed"


def test_usage_errors():
    assert run()[0] == cli.EXIT_USAGE
    assert run("universal", "--form", "sum")[0] == cli.EXIT_USAGE
    assert run("verify", "--suite", "nothing")[0] == cli.EXIT_USAGE
    assert run("--version")[0] == cli.EXIT_OK


def test_join_vectors():
    assert cli._join_vectors(["chamber", "--zeta", "-1,1", "--eps", "1,0"]) \
        == ["chamber", "--zeta=-1,1", "--eps=1,0"]
    assert cli._join_vectors(["--zeta"]) == ["--zeta"]


if __name__ == "__main__":
    # Run all tests
    _loc = locals()
    for _key in list(_loc.keys()):
        if _key.startswith("test_") and hasattr(_loc[_key], "__call__"):
            _loc[_key]()
