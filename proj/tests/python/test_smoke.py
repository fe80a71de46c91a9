"""Smoke tests for the Python bindings."""

import json

import matroidwb as mwb


def test_geometry_and_rank():
    fano = mwb.pg(3, 2)
    assert fano.size() == 7
    assert fano.full_rank() == 3
    assert fano.rank([0, 1, 2]) == 2
    assert fano.closure([0, 1]) == [0, 1, 2]
    assert fano.epsilon() == 7
    assert fano.is_simple()
    assert mwb.ag(3, 2).size() == 4
    assert mwb.pg(2, 3).size() == 4


def test_minors_and_sums():
    fano = mwb.pg(3, 2)
    contracted = fano.contract([0])
    assert contracted.full_rank() == 2
    assert contracted.epsilon() == 3

    s = mwb.direct_sum(mwb.uniform(2, 4), mwb.uniform(2, 4))
    assert s.full_rank() == 4
    assert s.epsilon() == 8


def test_json_round_trip():
    fano = mwb.pg(3, 2)
    text = fano.to_json()
    doc = json.loads(text)
    assert doc["kind"] == "linear"
    again = mwb.from_json(text)
    assert again.size() == 7
    assert again.full_rank() == 3
    assert again.flats(2) == fano.flats(2)


def test_restriction_search():
    fano = mwb.pg(3, 2)
    res = mwb.find_restriction(fano, mwb.ag(3, 2))
    assert res["outcome"] == "found"
    assert sorted(res["map"]) == [0, 1, 3, 6]
    assert mwb.verify_restriction(fano, mwb.ag(3, 2), res["map"])

    none = mwb.find_restriction(fano, mwb.uniform(2, 4))
    assert none["outcome"] == "none"


def test_representability_and_lines():
    assert mwb.is_representable(mwb.uniform(2, 4), 2, 2)["outcome"] == "not-representable"
    assert mwb.is_representable(mwb.uniform(2, 4), 3, 2)["outcome"] == "representable"
    u2 = mwb.has_u2_minor(mwb.uniform(3, 5), 4)
    assert u2["outcome"] == "found"
    assert u2["contract"] == [0]


def test_density_reports():
    rep = mwb.kung_check(mwb.pg(3, 2), 2, 2)
    assert rep["epsilon"] == 7
    assert rep["kung_bound"] == 7
    assert all(v["holds"] for v in rep["verdicts"])
    assert rep["ratio"] == {"num": 7, "den": 8}

    rel = mwb.kungrel_check(mwb.pg(3, 2), [0], 2)
    assert rel["holds"] and rel["identity_holds"]

    assert mwb.projection_bound(2, 2, 1) == (5, 1)


def test_stacks_and_roundness():
    s = mwb.direct_sum(mwb.uniform(2, 4), mwb.uniform(2, 4))
    cert = mwb.build_stack_greedy(s, 2, 2)
    assert len(cert["layers"]) == 2
    verdict = mwb.verify_stack(s, cert)
    assert verdict["valid"]

    w = mwb.is_weakly_round(s)
    assert w["verdict"] == "not-weakly-round"
    assert w["B"] == [0, 1, 2, 3]

    maj = mwb.majority_flat(mwb.pg(3, 2), [0], 2)
    assert maj["flat"] == [0, 1, 2]
    assert maj["inequality_holds"] and maj["identity_holds"]

    pt = mwb.dense_point_above(mwb.pg(3, 2), [0], [])
    assert pt["found"] and pt["size"] == 2


def test_weakly_round_restriction():
    ff = mwb.direct_sum(mwb.pg(3, 2), mwb.pg(3, 2))
    res = mwb.weakly_round_restriction(ff, 1, 8, 2, 3)
    assert res["outcome"] == "ok"
    assert res["ground"] == [8, 9, 10, 11, 12, 13]
    assert res["matroid"].epsilon() == 6


def test_cli_round_trip():
    code, out, err = mwb.run_cli(["gen", "pg", "--rank", "3", "--q", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["elements"] == 7
    code2, out2, _ = mwb.run_cli(["gen", "pg", "--rank", "3", "--q", "2"])
    assert out == out2  # byte-identical reports
