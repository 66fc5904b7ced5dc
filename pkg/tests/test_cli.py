import io
import json

import pytest

from khtorus.cache import CODE_VERSION, ResultCache, cache_key
from khtorus.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_hopf(cache_dir):
    code, out = run("compute", "--torus", "2", "2", "--ring", "z")
    assert code == 0
    res = json.loads(out)
    assert [(g["i"], g["j"]) for g in res["homology"]["groups"]] == [(0, 0), (0, 2), (2, 4), (2, 6)]
    assert res["delta_width"] == 2


def test_compute_t34_q(cache_dir):
    code, out = run("compute", "--torus", "3", "4", "--ring", "q")
    assert code == 0
    assert len(json.loads(out)["poincare"]) == 8


def test_compute_torus_prime(cache_dir):
    code, out = run("compute", "--torus-prime", "1", "1", "--ring", "q", "--format", "csv")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "i,j,free,torsion"
    assert "0,0,1," in rows and "0,-2,1," in rows


def test_compute_braid_and_text(cache_dir):
    code, out = run("compute", "--braid", "1 1 1", "--strands", "2", "--format", "text")
    assert code == 0
    assert "H^(3,7) = Z/2" in out


def test_compute_lee(cache_dir):
    code, out = run("compute", "--torus", "2", "4", "--lee")
    assert code == 0
    assert json.loads(out)["lee_total"] == 4


def test_cache_hit_is_byte_identical(cache_dir):
    _, fresh = run("compute", "--torus", "3", "4", "--no-cache")
    _, first = run("compute", "--torus", "3", "4")
    assert any(cache_dir.rglob("*.json"))
    _, second = run("compute", "--torus", "3", "4")
    assert fresh == first == second


def test_corrupted_entry_is_recomputed(cache_dir):
    _, first = run("compute", "--torus", "2", "3")
    for p in cache_dir.rglob("*.json"):
        raw = json.loads(p.read_text())
        raw["value"] = raw["value"].replace('"free":1', '"free":7', 1)
        p.write_text(json.dumps(raw))
    _, again = run("compute", "--torus", "2", "3")
    assert again == first


def test_usage_errors(cache_dir, capsys):
    assert run("compute", "--braid", "1 1")[0] == 2
    assert run("compute", "--torus", "4", "5")[0] == 2
    assert "--reduce" in capsys.readouterr().err
    assert run("verify", "nonsense")[0] == 2
    assert run("verify", "theorem2")[0] == 2
    assert run()[0] == 2


def test_verify_pass_and_report():
    code, out = run("verify", "theorem2", "--k", "1", "--n", "2")
    assert code == 0 and out.startswith("PASS")
    code, out = run("verify", "center", "--k", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["lines"]


def test_verify_other_checks():
    assert run("verify", "admissible", "--k-max", "5")[0] == 0
    assert run("verify", "binomial")[0] == 0
    assert run("verify", "cone", "--torus", "2", "3")[0] == 0
    assert run("verify", "lee", "--torus", "2", "4")[0] == 0
    assert run("verify", "theorem3", "--q", "5")[0] == 0
    assert run("verify", "stable", "--family", "2", "--n", "3")[0] == 0
    assert run("verify", "tprime", "--k", "1", "--n", "1")[0] == 0
    assert run("verify", "fixtures", "--family", "3", "--n", "0")[0] == 0


def test_hk():
    code, out = run("hk", "--matchings", "2")
    assert code == 0 and out.split() == ["(())", "()()"]
    code, out = run("hk", "--center", "2")
    assert "total 6" in out
    assert run("hk", "--axioms", "2")[0] == 0


def test_cache_round_trip_and_version(tmp_path):
    c = ResultCache(tmp_path)
    k = cache_key("diagram", "KHOVANOV", "Z")
    assert c.get(k) is None
    assert c.put(k, '{"x":1}')
    assert c.get(k).value == '{"x":1}'
    assert cache_key("diagram", "KHOVANOV", "Z", CODE_VERSION + "x") != k
    assert cache_key("diagram", "LEE", "Z") != k


def test_cache_io_failure_is_silent(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    c = ResultCache(blocker)
    assert c.put("ab" * 32, "v") is False
    assert c.get("ab" * 32) is None
