"""Smoke tests for the compiled module: one pass over each exposed surface."""

import json

import pytest

import pairlab


@pytest.fixture
def desk():
    return pairlab.PairingParams.desk_scale()


def test_params_and_algebra(desk):
    assert (desk.q, desk.p, desk.gt_gen) == (11, 23, 2)
    assert pairlab.params_from_q(11) == desk
    assert pairlab.pair(desk, 3, 4) == 2
    assert pairlab.gt_mul(desk, 18, 2) == 13
    assert pairlab.gt_pow(desk, 2, 0) == 1
    assert pairlab.gt_mul(desk, 2, pairlab.gt_inv(desk, 2)) == 1
    with pytest.raises(pairlab.ConfigError):
        pairlab.params_from_q(15)

    large = pairlab.PairingParams.large_scale()
    assert pairlab.make_params(12, 42) == pairlab.make_params(12, 42)
    assert large.q == 2**31 - 1


def test_honest_session_is_exact(desk):
    table = pairlab.generate_table(desk, 3, seed=1)
    r = pairlab.run_session(desk, "chen", 3, 4, table=table, seed=9)
    assert r.verdict == "accepted"
    assert r.output == r.truth == pairlab.pair(desk, 3, 4)
    assert r.costs["outsourcer"]["pairings"] == 0
    assert r.costs["outsourcer"]["scalar_muls"] == 0
    assert table.remaining == 0


def test_substitution_attack_slips_through(desk):
    table = pairlab.generate_table(desk, 3, seed=2)
    r = pairlab.run_session(
        desk, "chen", 7, 9, u1={"kind": "rho_substitution", "seed": 7}, table=table, seed=4
    )
    assert r.verdict == "accepted"  # the check never looks at the poisoned slot
    assert r.output != r.truth


def test_exhausted_table_raises(desk):
    table = pairlab.generate_table(desk, 2, seed=3)
    with pytest.raises(pairlab.TableExhausted):
        pairlab.run_session(desk, "chen", 1, 2, table=table)


def test_eavesdrop_needs_cleartext(desk):
    table = pairlab.generate_table(desk, 1, seed=4)
    r = pairlab.run_session(desk, "revised", 8, 5, table=table, seed=6)
    assert pairlab.eavesdrop_recover(desk, r) == (8, 5)

    table = pairlab.generate_table(desk, 1, seed=4)
    r = pairlab.run_session(desk, "revised", 8, 5, table=table, seed=6, encrypted=True)
    assert pairlab.eavesdrop_recover(desk, r) is None


def test_cm_tamper_detection(desk):
    honest = pairlab.run_session(desk, "cm", 9, 10, setup_seed=1, seed=2)
    assert honest.verdict == "accepted"
    assert honest.output == honest.truth

    tampered = pairlab.run_session(
        desk, "cm", 9, 10, u1={"kind": "index_tamper", "index": 3}, setup_seed=1, seed=2
    )
    assert tampered.verdict == "rejected"
    assert tampered.output is None


def test_transcript_and_dict_views(desk):
    table = pairlab.generate_table(desk, 3, seed=5)
    r = pairlab.run_session(desk, "chen", 1, 2, table=table, seed=3)
    lines = [json.loads(line) for line in r.transcript_jsonl.splitlines()]
    assert [m["direction"] for m in lines] == ["T->U1", "U1->T", "T->U2", "U2->T"]
    assert [m["channel"] for m in lines] == ["U1", "U1", "U2", "U2"]
    assert all(m["protocol"] == "chen" for m in lines)
    d = r.to_dict()
    assert d["verdict"] == "accepted"
    assert d["output_equals_truth"] is True


def test_scenario_round_trip(tmp_path, desk):
    config = {
        "name": "smoke",
        "protocol": "chen",
        "params": {"preset": "desk"},
        "seed": 3,
        "inputs": {"random": 5},
        "behaviors": {"u1": {"kind": "rho_substitution", "seed": 7}, "u2": {"kind": "honest"}},
        "expect": "attack_undetected",
    }
    path = tmp_path / "smoke.json"
    path.write_text(json.dumps(config))
    report = pairlab.run_scenario_file(str(path), str(tmp_path / "out"))
    assert report["expectation_met"] is True
    assert (tmp_path / "out" / "smoke.report.json").exists()
    assert (tmp_path / "out" / "smoke.transcript.jsonl").exists()
    assert all(s["residual_matches"] for s in report["sessions"])
