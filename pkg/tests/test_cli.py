import io
import json

import pytest

from qschur_hh import __version__
from qschur_hh.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, Outcome, RunConfig, build_report, main, run


def run_cfg(**kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(RunConfig(**kw), out, err)
    return code, out.getvalue(), err.getvalue()


def test_hh_json():
    code, out, _ = run_cfg(command="hh", e=3, format="json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["result"]["dims"] == [3, 1, 1, 1, 1]
    assert doc["version"] == __version__
    assert doc["config"]["e"] == 3 and doc["config"]["field"] == "rational"


def test_resolution_verify_table():
    code, out, _ = run_cfg(command="resolution", e=4, verify=True)
    assert code == EXIT_OK
    for line in ("d o d = 0: pass", "exactness: pass", "minimality: pass", "repair choices:",
                 "matches generic minimal resolution: True"):
        assert line in out


def test_kernel_pi_report():
    code, out, _ = run_cfg(command="kernel-pi", e=2, w=2, max_degree=6)
    assert code == EXIT_OK
    assert "degree 2" in out and "outside <p_3, p_4, p_5>: p_2" in out


def test_other_commands_succeed():
    for kw in (dict(command="algebra", e=3), dict(command="ring", e=3, format="csv"),
               dict(command="wreath", e=2, w=2, format="json"), dict(command="blocks", e=3, n=5),
               dict(command="quotient", w=2, generators="2,3", max_degree=5),
               dict(command="quotient", e=2, w=2, generators="kernel", max_degree=5, format="csv"),
               dict(command="hh", e=2, field="prime(2)", format="csv")):
        code, out, err = run_cfg(**kw)
        assert code == EXIT_OK, (kw, err)
        assert out


def test_csv_has_header():
    _, out, _ = run_cfg(command="hh", e=2, format="csv")
    assert out.splitlines()[0] == "degree,hh_dim,cochain_dim,hom_kernel_dim"
    assert out.splitlines()[1] == "0,2,3,2"


@pytest.mark.parametrize("kw", [
    dict(command="hh", e=1), dict(command="hh", e=3, field="prime(4)"), dict(command="wreath", e=2),
    dict(command="kernel-pi", e=2, w=2, max_degree=3), dict(command="blocks", e=3),
    dict(command="quotient", w=2, generators="x-y", max_degree=3), dict(command="hh", e=2, format="xml"),
])
def test_usage_errors(kw):
    code, out, err = run_cfg(**kw)
    assert code == EXIT_USAGE
    assert "usage error" in err and out == ""


def test_verification_failure_exit_code(monkeypatch):
    from qschur_hh import cli
    monkeypatch.setitem(cli.PIPELINES, "hh", lambda cfg, F: Outcome({}, [["x"]], ["x"], "y^e != 0"))
    code, out, err = run_cfg(command="hh", e=2)
    assert code == EXIT_VERIFY
    assert "y^e != 0" in err and "VERIFICATION FAILED" in out


def test_json_round_trip():
    _, out, _ = run_cfg(command="ring", e=2, format="json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    assert doc["result"]["passed"] is True


def test_cache_hit_is_byte_identical(tmp_path):
    cache = str(tmp_path / "r.json")
    cold = run_cfg(command="resolution", e=3, cache_path=cache, format="json")
    warm = run_cfg(command="resolution", e=3, cache_path=cache, format="json")
    assert cold == warm
    hh_warm = run_cfg(command="hh", e=3, cache_path=cache, format="json")
    assert json.loads(hh_warm[1])["result"]["dims"] == [3, 1, 1, 1, 1]


def test_deterministic_output():
    assert run_cfg(command="blocks", e=2, n=6) == run_cfg(command="blocks", e=2, n=6)


def test_main_entry(capsys):
    assert main(["hh", "--e", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["dims"] == [2, 1, 1]
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == EXIT_USAGE


def test_report_envelope():
    cfg = RunConfig(command="hh", e=2)
    rep = build_report(cfg, Outcome({"k": (1, 2)}, [], []))
    assert rep["status"] == "ok" and rep["result"] == {"k": [1, 2]}
