"""Search engine: power tables, all seven modes, chunking and checkpoints."""

import json
import os
from fractions import Fraction

import pytest

from fcspread import search
from fcspread.search import (
    CheckpointMismatch,
    SearchConfig,
    build_power_table,
    canon_json,
    make_config,
    run_chunked,
    verify_record,
)


def _records(cfg, **kw):
    res = run_chunked(cfg, **kw)
    assert res.completed
    return res.records


def _assert_all_verify(records, cfg):
    for rec in records:
        assert verify_record(rec, cfg) == [], rec


# ---------------------------------------------------------------------------
# power table


def test_build_power_table_examples():
    t = build_power_table(100, 3, 100)
    assert set(t.values) == {8, 16, 27, 32, 64, 81}
    assert t.representations(64) == [(4, 3), (2, 6)]
    assert 27 in t and 28 not in t
    assert len(t) == 6

    t = build_power_table(8, 2, 2)
    assert set(t.values) == {4}


def test_build_power_table_against_comprehension():
    bound = 10**6
    t = build_power_table(bound, 3, 100)
    want = {
        x**e
        for e in range(3, bound.bit_length())
        for x in range(2, int(round(bound ** (1 / e))) + 2)
        if x**e <= bound
    }
    assert set(t.values) == want
    for v in (4096, 59049, 2**19):
        got = t.representations(v)
        assert got == sorted(
            ((x, e) for x, e in (
                (x, e)
                for e in range(3, 101)
                for x in range(2, 2**7)
            ) if x**e == v),
            key=lambda be: be[1],
        )


def test_build_power_table_budget():
    with pytest.raises(MemoryError):
        build_power_table(10**6, 2, 3, memory_budget=100)
    with pytest.raises(ValueError):
        build_power_table(3, 3, 5)
    with pytest.raises(ValueError):
        build_power_table(100, 1, 5)


# ---------------------------------------------------------------------------
# config


def test_make_config_defaults_and_validation():
    cfg = make_config("fermat-catalan")
    assert (cfg.max_bits, cfg.sign) == (34, "plus")
    cfg = make_config("gbtz", max_bits=20)
    assert cfg.degree == (3, 10)
    with pytest.raises(ValueError):
        make_config("no-such-mode")
    with pytest.raises(ValueError):
        make_config("fermat-catalan", sign="sideways")
    with pytest.raises(ValueError):
        make_config("fermat-catalan", max_bits=0)
    with pytest.raises(ValueError):
        make_config("pillai")  # difference is required
    with pytest.raises(ValueError):
        make_config("survey")  # n_range/m_range required
    with pytest.raises(ValueError):
        make_config("gbtz", coeffs=(2, 1, 1))


def test_config_round_trip_and_digest():
    cfg = make_config("fermat-catalan", max_bits=14, f_bound="41/42")
    again = SearchConfig.from_dict(cfg.to_dict())
    assert again == cfg
    assert again.digest() == cfg.digest()
    other = make_config("fermat-catalan", max_bits=15, f_bound="41/42")
    assert other.digest() != cfg.digest()


def test_spread_cap():
    # 1/3 + 1/3 + 1/3 = 1 is not strictly below 1, so no spread qualifies
    assert search._spread_cap(3, 3, 3, Fraction(1), True) == -1
    assert search._spread_cap(3, 3, 3, Fraction(1), False) == 0
    assert search._spread_cap(4, 14, 3, Fraction(1), True) == 1
    assert search._spread_cap(5, 5, 5, Fraction(1), True) == 1
    assert search._spread_cap(5, 5, 5, Fraction(1), False) == 2
    # exact check: every spread up to the cap satisfies the inequality
    for n, m, d in ((3, 4, 3), (4, 6, 4), (5, 7, 5), (9, 9, 8)):
        cap = search._spread_cap(n, m, d, Fraction(1), True)
        for s in range(0, cap + 1):
            assert Fraction(1, n) + Fraction(1, m) + Fraction(1 + s, d) < 1
        assert Fraction(1, n) + Fraction(1, m) + Fraction(2 + cap, d) >= 1


# ---------------------------------------------------------------------------
# fermat-catalan mode


FC_TRIPLES_14 = [
    (1, 8, 9),
    (32, 49, 81),
    (169, 343, 512),
    (128, 4913, 5041),
    (243, 14641, 14884),
]


def test_fc_small_bounds():
    cfg = make_config("fermat-catalan", max_bits=7)
    recs = _records(cfg)
    assert [tuple(r["values"]) for r in recs] == FC_TRIPLES_14[:2]
    _assert_all_verify(recs, cfg)

    cfg = make_config("fermat-catalan", max_bits=13)
    recs = _records(cfg)
    assert [tuple(r["values"]) for r in recs] == [
        (1, 8, 9), (32, 49, 81), (169, 343, 512), (128, 4913, 5041),
    ]


def test_fc_at_2_14():
    cfg = make_config("fermat-catalan", max_bits=14)
    recs = _records(cfg)
    assert [tuple(r["values"]) for r in recs] == FC_TRIPLES_14
    assert [r["weight"] for r in recs] == [
        "5/6", "19/20", "17/18", "41/42", "19/20",
    ]
    assert recs[0]["assignment"] == [0, 3, 2]
    assert recs[0]["reps"] == [[], [[2, 3]], [[3, 2]]]
    assert all(r["sign"] == "plus" and r["coeffs"] == [1, 1, 1] for r in recs)
    _assert_all_verify(recs, cfg)
    ok, msg = search.expectation_report(cfg, recs)
    assert ok, msg


def test_fc_monotone_in_bound():
    small = {tuple(r["values"]) for r in _records(make_config("fermat-catalan", max_bits=13))}
    large = {tuple(r["values"]) for r in _records(make_config("fermat-catalan", max_bits=14))}
    assert small <= large


def test_fc_expected_triples_helper():
    cfg = make_config("fermat-catalan", max_bits=14)
    assert search.expected_fc_triples(cfg) == sorted(FC_TRIPLES_14)
    cfg = make_config("fermat-catalan", max_bits=7)
    assert search.expected_fc_triples(cfg) == FC_TRIPLES_14[:2]


def test_fc_with_coefficients():
    # 3*1 + 1*1 = 1*4 exercises the general-coefficient wildcard path
    cfg = make_config("fermat-catalan", max_bits=8, coeffs=(3, 1, 1))
    recs = _records(cfg)
    assert any(r["values"] == [1, 1, 4] for r in recs)
    _assert_all_verify(recs, cfg)


# ---------------------------------------------------------------------------
# product-target modes


def test_nonmaxgcd3_at_2_24():
    cfg = make_config("nonmaxgcd3", max_bits=24)
    recs = _records(cfg)
    assert [(r["p"], r["q"], r["z"]) for r in recs] == [
        (20736, 16384, 4352),
        (331776, 65536, 266240),
        (1679616, 262144, 1417472),
    ]
    assert [r["witness"] for r in recs] == [
        [16, 16, 17], [64, 64, 65], [112, 112, 113],
    ]
    assert recs[0]["assignments"] == [[4, 14]]
    assert recs[1]["assignments"] == [[4, 16]]
    assert recs[2]["assignments"] == [[4, 18], [8, 6], [8, 9], [8, 18]]
    assert all(r["sign"] == "minus" and not r["maxgcd"] for r in recs)
    _assert_all_verify(recs, cfg)
    ok, msg = search.expectation_report(cfg, recs)
    assert ok, msg


def test_gbtz_empty_at_2_20():
    cfg = make_config("gbtz", max_bits=20)
    recs = _records(cfg)
    assert recs == []
    ok, _ = search.expectation_report(cfg, recs)
    assert ok


def test_fp_empty_at_2_24():
    cfg = make_config("fp", max_bits=24)
    recs = _records(cfg)
    assert recs == []
    ok, _ = search.expectation_report(cfg, recs)
    assert ok


def test_maxgcd_spread1_at_2_26():
    cfg = make_config("maxgcd-spread1", max_bits=26, degree=(5, 5))
    recs = _records(cfg)
    got = [(r["sign"], r["p"], r["q"], r["z"], tuple(r["witness"]), r["standard"])
           for r in recs]
    assert got == [
        ("plus", 1, 1, 2, (1, 1, 1, 1, 2), [1, 1]),
        ("minus", 32**5, 16**5, 32505856, (31, 32, 32, 32, 32), [1, 2]),
        ("plus", 32**5, 16**5, 34603008, (32, 32, 32, 32, 33), [1, 2]),
    ]
    assert all(r["maxgcd"] for r in recs)
    _assert_all_verify(recs, cfg)
    ok, msg = search.expectation_report(cfg, recs)
    assert ok, msg


# ---------------------------------------------------------------------------
# pillai and survey modes


def test_pillai_examples():
    recs = _records(make_config("pillai", difference=1, max_bits=10,
                                f_bound="9/10"))
    assert [(r["x"], r["z"]) for r in recs] == [(8, 9)]
    assert recs[0]["x_witness"] == [2, 2, 2]
    assert recs[0]["z_witness"] == [3, 3]
    assert recs[0]["weight"] == "5/6"

    recs = _records(make_config("pillai", difference=2, max_bits=10,
                                f_bound="9/10"))
    assert [(r["x"], r["z"]) for r in recs] == [(25, 27)]

    recs = _records(make_config("pillai", difference=1, max_bits=3,
                                f_bound="1/2"))
    assert recs == []


def test_pillai_verify_and_api():
    cfg = make_config("pillai", difference=1, max_bits=10, f_bound="9/10")
    recs = _records(cfg)
    _assert_all_verify(recs, cfg)
    sols = search.search_pillai_products(1, cfg)
    assert [s.values() for s in sols] == [(8, 9)]
    with pytest.raises(ValueError):
        search.search_pillai_products(2, cfg)


def test_survey_small_grid():
    cfg = make_config("survey", max_bits=16, n_range=(3, 5), m_range=(3, 5),
                      degree=(2, 4))
    counts = search.survey_combinations(cfg)
    assert len(counts) == 27  # every cell reported, zeros included
    assert {k: v for k, v in counts.items() if v} == {
        (3, 4, 3): 1, (4, 3, 3): 1, (5, 3, 3): 1,
    }
    # degree-2 cells are vacuous, matching-degree cells were fully checked
    assert all(v == 0 for (n, m, d), v in counts.items() if d == 2)
    recs = _records(cfg)
    _assert_all_verify(recs, cfg)


def test_survey_cell_4_14_3():
    cfg = make_config("survey", max_bits=28, n_range=(4, 4), m_range=(14, 14),
                      degree=(3, 3))
    recs = _records(cfg)
    assert len(recs) == 1 and recs[0]["cell"] == [4, 14, 3]
    assert recs[0]["count"] >= 1
    sols = {(s["p"], s["q"], s["z"]) for s in recs[0]["solutions"]}
    assert (20736, 16384, 4352) in sols
    _assert_all_verify(recs, cfg)


# ---------------------------------------------------------------------------
# chunking, determinism, checkpointing


def test_chunk_plan_covers_and_balances():
    cfg = make_config("fermat-catalan", max_bits=13)
    for n_chunks in (1, 3, 16):
        plan = search.plan_chunks(cfg, n_chunks)
        assert 1 <= len(plan) <= n_chunks
        assert all(plan)
    with pytest.raises(ValueError):
        search.plan_chunks(cfg, 0)


def test_records_independent_of_chunking_and_threads():
    cfg = make_config("fermat-catalan", max_bits=13)
    baseline = canon_json(_records(cfg, n_chunks=1))
    assert canon_json(_records(cfg, n_chunks=7)) == baseline
    assert canon_json(_records(cfg, n_chunks=16)) == baseline
    assert canon_json(_records(cfg, n_chunks=16, threads=2)) == baseline

    cfg = make_config("nonmaxgcd3", max_bits=22)
    assert canon_json(_records(cfg, n_chunks=1)) == canon_json(
        _records(cfg, n_chunks=9)
    )


def test_checkpoint_interrupt_and_resume(tmp_path):
    cfg = make_config("fermat-catalan", max_bits=13)
    baseline = canon_json(_records(cfg, n_chunks=8))
    ckpt = str(tmp_path / "run.ckpt")
    first = run_chunked(cfg, n_chunks=8, checkpoint_path=ckpt, max_chunks=3)
    assert not first.completed
    assert first.chunks_run == 3
    assert first.records == []
    state = search.load_checkpoint(ckpt)
    assert state["config_digest"] == cfg.digest()
    assert len(state["done"]) == 3

    second = run_chunked(cfg, checkpoint_path=ckpt, resume=True)
    assert second.completed
    assert second.chunks_run == second.chunks_total - 3
    assert canon_json(second.records) == baseline

    # resuming a finished run reruns nothing and returns the same records
    third = run_chunked(cfg, checkpoint_path=ckpt, resume=True)
    assert third.completed and third.chunks_run == 0
    assert canon_json(third.records) == baseline


def test_checkpoint_config_mismatch(tmp_path):
    ckpt = str(tmp_path / "run.ckpt")
    cfg = make_config("fermat-catalan", max_bits=13)
    run_chunked(cfg, n_chunks=4, checkpoint_path=ckpt, max_chunks=1)
    other = make_config("fermat-catalan", max_bits=14)
    with pytest.raises(CheckpointMismatch):
        run_chunked(other, checkpoint_path=ckpt, resume=True)
    with pytest.raises(ValueError):
        run_chunked(cfg, resume=True)  # no path given


def test_checkpoint_rejects_foreign_file(tmp_path):
    path = tmp_path / "bogus.ckpt"
    path.write_text(json.dumps({"format": "something-else", "version": 1}))
    with pytest.raises(CheckpointMismatch):
        search.load_checkpoint(str(path))


def test_run_result_candidates_vs_records():
    cfg = make_config("fermat-catalan", max_bits=13)
    res = run_chunked(cfg, n_chunks=16)
    assert res.completed and res.chunks_total == 16
    assert res.candidates >= len(res.records)


# ---------------------------------------------------------------------------
# record verification catches tampering


def test_verify_record_flags_tampering():
    cfg = make_config("fermat-catalan", max_bits=14)
    rec = json.loads(canon_json(_records(cfg)[0]))
    assert verify_record(rec, cfg) == []
    bad = dict(rec, values=[2, 8, 9])
    assert verify_record(bad, cfg)
    bad = dict(rec, weight="1/2")
    assert verify_record(bad, cfg)
    bad = dict(rec, assignment=[0, 0, 0])
    assert verify_record(bad, cfg)

    cfg = make_config("nonmaxgcd3", max_bits=24)
    rec = json.loads(canon_json(_records(cfg)[0]))
    assert verify_record(rec, cfg) == []
    assert verify_record(dict(rec, z=rec["z"] + 1), cfg)
    assert verify_record(dict(rec, witness=[1, 2, 3]), cfg)
    assert verify_record(dict(rec, gcd=7), cfg)


def test_search_entry_points_guard_mode():
    fc = make_config("fermat-catalan", max_bits=10)
    with pytest.raises(ValueError):
        search.search_product_target(fc)
    gb = make_config("gbtz", max_bits=12)
    with pytest.raises(ValueError):
        search.search_fermat_catalan(gb)
    with pytest.raises(ValueError):
        search.survey_combinations(fc)
