"""Command line entry points: exit codes, output formats, determinism."""

import json

import pytest

from grstacks import cli, dsl
from grstacks.report import CheckReport
from grstacks.suites import SUITES


# -- verify -----------------------------------------------------------


def test_verify_passing_suite(capsys):
    assert cli.main(["verify", "g2"]) == 0
    out = capsys.readouterr().out
    assert "suite g2" in out and "PASS" in out and "0 failures" in out


def test_verify_failure_exits_one(capsys, monkeypatch):
    def broken(seed=0, samples=100, q=5):
        rep = CheckReport("broken", seed)
        rep.add("always", False, "forced failure", "0", "1")
        return rep

    monkeypatch.setitem(SUITES, "g2", broken)
    assert cli.main(["verify", "g2"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_json_is_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(["verify", "ring", "--seed", "3", "--json", str(p1)]) == 0
    assert cli.main(["verify", "ring", "--seed", "3", "--json", str(p2)]) == 0
    capsys.readouterr()
    b1, b2 = p1.read_bytes(), p2.read_bytes()
    assert b1 == b2
    payload = json.loads(b1)
    assert payload["suite"] == "ring" and payload["seed"] == 3
    ids = [c["id"] for c in payload["checks"]]
    assert ids == sorted(ids)
    assert all(
        set(c) == {"id", "status", "detail", "lhs", "rhs"} for c in payload["checks"]
    )


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nope"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_rejects_unsupported_field(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "finite", "--q", "7"])
    assert exc.value.code == 2
    capsys.readouterr()


# -- eval -------------------------------------------------------------


def test_eval_renders_value(capsys):
    assert cli.main(["eval", "GL(2)"]) == 0
    assert capsys.readouterr().out.strip() == "L * (L-1) * (L^2-1)"


def test_eval_specializes(capsys):
    assert cli.main(["eval", "GL(2)", "--at", "3"]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("at L=3: 48")


def test_eval_deltas_one(capsys):
    assert cli.main(["eval", "BSpin(7)", "--deltas-one"]) == 0
    got = capsys.readouterr().out.strip()
    assert got == "L^-9 * (L^2-1)^-1 * (L^4-1)^-1 * (L^6-1)^-1"


def test_eval_parse_error(capsys):
    assert cli.main(["eval", "Spin(7"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:") and "offset 6" in err


def test_eval_domain_error(capsys):
    assert cli.main(["eval", "BDelta(2)*BDelta(3)"]) == 2
    assert "error:" in capsys.readouterr().err


def test_eval_at_with_atoms_left_is_an_error(capsys):
    assert cli.main(["eval", "BSpin(4)", "--at", "5"]) == 2
    assert "--deltas-one" in capsys.readouterr().err


# -- bspin ------------------------------------------------------------


def test_bspin_text_roundtrips(capsys):
    assert cli.main(["bspin", "4"]) == 0
    text = capsys.readouterr().out.strip()
    from grstacks.motive import bspin

    assert dsl.eval(dsl.parse(text)) == bspin(4)


def test_bspin_json_shape(capsys):
    assert cli.main(["bspin", "12", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"scalar", "atoms"}
    ms = [a["m"] for a in payload["atoms"]]
    assert ms == sorted(ms) and max(ms) <= 11
    for a in payload["atoms"]:
        dsl.parse(a["coeff"])  # every coefficient reparses
    dsl.parse(payload["scalar"])


def test_bspin_rejects_zero(capsys):
    assert cli.main(["bspin", "0"]) == 2
    capsys.readouterr()


# -- delta ------------------------------------------------------------


def test_delta_summary(capsys):
    assert cli.main(["delta", "2"]) == 0
    out = capsys.readouterr().out
    assert "order 8" in out and "center 2" in out and "abelianization 4" in out
    assert "abelian\n" not in out


def test_delta_rank_one_is_abelian(capsys):
    assert cli.main(["delta", "1"]) == 0
    out = capsys.readouterr().out
    assert "order 4" in out and out.rstrip().endswith("abelian")


def test_delta_table(tmp_path, capsys):
    path = tmp_path / "mult.csv"
    assert cli.main(["delta", "3", "--table", str(path)]) == 0
    capsys.readouterr()
    lines = path.read_text().splitlines()
    assert len(lines) == 17  # order 16 plus the header


def test_delta_out_of_range(capsys):
    assert cli.main(["delta", "44"]) == 2
    assert "1 and 12" in capsys.readouterr().err


# -- suites registry --------------------------------------------------


def test_registry_names():
    assert set(SUITES) == {"ring", "g2", "spin78", "tower", "clifford", "finite", "all"}


def test_fast_suites_pass():
    for name in ("ring", "g2", "spin78", "tower"):
        rep = SUITES[name](seed=0, samples=25)
        assert rep.ok, rep.to_text()
