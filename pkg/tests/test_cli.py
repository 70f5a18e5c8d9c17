import json

import pytest

from braidcurves import curves_classical as cc
from braidcurves import curves_dual as cd
from braidcurves.braid import parse_braid
from braidcurves.cli import main
from braidcurves.reducibility import PunctureSet, curve_is_invariant

SLOW_SLIDE = "a(4,5) a(3,5)^-1 a(1,6)^-1 a(2,5)^-1 a(1,4)^-1 a(3,5) a(2,3) a(1,2)^-1 a(1,4) a(2,6)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["nf", "-n", "4", "--dual", "a(1,2) a(1,4)"], "p=0; [{1,2}] [{1,4}]"),
        (["nf", "-n", "3", "--classical", "s1 s2 s1"], "p=1;"),
        (["nf", "-n", "3", "--classical", ""], "p=0;"),
        (["nt", "-n", "4", "d"], "periodic"),
        (["nt", "-n", "3", "s1 s2^-1"], "pseudo-anosov-candidate"),
        (["sset", "-n", "4", "--set", "1,2", "a(1,3)"], "{1,2,3}"),
    ],
)
def test_documented_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_act_outputs(capsys):
    code, out, _ = run(capsys, "act", "-n", "4", "--classical", "--curve", "round:1-2", "s2")
    assert code == 0
    assert out.splitlines()[-2] == "prefix 1: 0 ^ 1 v 2 ^ 3 v  round=false almost_round=true"
    assert out.splitlines()[-1] == "image: 0 ^ 1 v 2 ^ 3 v"
    code, out, _ = run(capsys, "act", "-n", "4", "--curve", "std:{1,2}", "a(1,2)")
    assert out.splitlines()[-1] == f"image: {cd.standard_curve({1, 2}, 4)}"
    code, out, _ = run(capsys, "act", "-n", "5", "--curve", "3 ( 5 v", "")
    assert out.splitlines()[-1] == f"image: {cd.parse_dual_curve('3 ( 5 v', 5)}"


def test_nt_witness_is_valid(capsys):
    code, out, _ = run(capsys, "nt", "-n", "4", "--json", "s1 s3")
    payload = json.loads(out)
    assert code == 0 and payload["verdict"] == "reducible"
    k, I = payload["witness"]["k"], PunctureSet.of(4, payload["witness"]["I"])
    assert curve_is_invariant(I, parse_braid("s1 s3", 4) ** k)


@pytest.mark.parametrize(
    "argv,code",
    [
        (["nf", "-n", "4", "s5"], 2),
        (["nf", "-n", "4", "s1 x"], 2),
        (["nf", "-n", "4"], 2),
        (["act", "-n", "4", "--classical", "--curve", "0 ^ 2", "s1"], 2),
        (["act", "-n", "4", "--classical", "--curve", "round:1-4", "s1"], 3),
        (["act", "-n", "4", "--curve", "std:{1}", "s1"], 3),
        (["sset", "-n", "4", "--set", "1,2,3,4", "s1"], 3),
        (["invariant-curve", "-n", "4", "--pair", "2,2", "s1"], 3),
        (["nf", "-n", "1", ""], 3),
        (["nt", "-n", "6", "--max-steps", "1", SLOW_SLIDE], 4),
        (["orbit", "-n", "6", "--max-steps", "1", SLOW_SLIDE], 4),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_json_schema_round_trips(capsys):
    code, out, _ = run(capsys, "act", "-n", "4", "--classical", "--json", "--curve", "round:1-3", "s1 s2^-1 s3")
    payload = json.loads(out)
    assert code == 0 and payload["verdict"] == "ok"
    for i, entry in enumerate(payload["trace"]):
        assert entry["prefix_index"] == i
        assert set(entry["flags"]) == {"round", "almost_round"}
        assert str(cc.parse_curve(entry["word"], 4)) == entry["word"]
    assert payload["image"] == payload["trace"][-1]["word"]

    code, out, _ = run(capsys, "act", "-n", "5", "--json", "--curve", "std:{2,4}", "a(1,3) a(2,5)^-1")
    payload = json.loads(out)
    for entry in payload["trace"]:
        assert set(entry["flags"]) == {"standard", "round"}
        assert str(cd.parse_dual_curve(entry["word"], 5)) == entry["word"]

    code, out, _ = run(capsys, "invariant-curve", "-n", "4", "--json", "s1 s3")
    w = json.loads(out)["witness"]
    assert cd.enclosed_punctures_standard(cd.parse_dual_curve(w["curve"], 4)) == set(w["I"])


def test_errors_in_json_mode(capsys):
    code, out, _ = run(capsys, "nf", "-n", "4", "--json", "s9")
    assert code == 2 and json.loads(out)["verdict"] == "error"
    code, out, _ = run(capsys, "nt", "-n", "6", "--json", "--max-steps", "1", SLOW_SLIDE)
    assert code == 4 and json.loads(out)["verdict"] == "inconclusive"


def test_pair_and_fixpoint(capsys):
    code, out, _ = run(capsys, "invariant-curve", "-n", "4", "--pair", "1,2", "s1 s3")
    assert out == "I={1,2}"
    code, out, _ = run(capsys, "invariant-curve", "-n", "4", "d")
    assert out == "none"
    code, out, _ = run(capsys, "sset", "-n", "5", "--set", "1,2", "--fixpoint", "a(2,3)")
    sets = out.splitlines()
    assert len(sets) == 4 and sets[0] == "{1,2}"


def test_check_subcommand_is_seeded(capsys):
    a = run(capsys, "check", "sset-fixpoint", "--seed", "7", "--trials", "30", "--json")
    b = run(capsys, "check", "sset-fixpoint", "--seed", "7", "--trials", "30", "--json")
    assert a[0] == 0 and a[1] == b[1]
    assert json.loads(a[1])["verdict"] == "pass"
