import json
import math
from pathlib import Path

import pytest

from hhfrac import DomainError, GenerationError, ParseError
from hhfrac.engine import FAIL, PASS
from hhfrac.harness import (
    SUITES,
    Instance,
    InstanceConfig,
    gen_instance,
    parse_alphas,
    replay,
    run_suite,
    sweep_alpha,
)

GOLDEN = Path(__file__).parent / "data" / "golden_instance_seed42.json"


def test_same_seed_and_index_repeat():
    cfg = InstanceConfig(seed=99)
    assert gen_instance(cfg, 17) == gen_instance(cfg, 17)
    assert gen_instance(cfg, 17) != gen_instance(cfg, 18)


def test_golden_instance():
    frozen = json.loads(GOLDEN.read_text())["instance"]
    assert gen_instance(InstanceConfig(seed=42), 0).to_record() == frozen


def test_pinned_alpha():
    cfg = InstanceConfig(alpha_range=(1.0, 1.0), seed=3)
    assert {gen_instance(cfg, i).alpha for i in range(20)} == {1.0}


def test_samples_respect_ranges_and_conjugacy():
    cfg = InstanceConfig(seed=5)
    for i in range(40):
        inst = gen_instance(cfg, i)
        assert 0 <= inst.a <= 2 and 0.5 <= inst.b - inst.a <= 3
        assert 0.2 <= inst.alpha <= 3 and 1.2 <= inst.q <= 4
        assert 1 / inst.p + 1 / inst.q == pytest.approx(1.0)
        assert inst.a <= inst.x <= inst.b


def test_split_point_cycle():
    cfg = InstanceConfig(seed=8)
    xs = [gen_instance(cfg, i) for i in range(4)]
    assert xs[0].x == xs[0].a and xs[1].x == pytest.approx(xs[1].interval.midpoint) and xs[2].x == xs[2].b


def test_invalid_draws_are_resampled():
    # pow:1.5 lacks the |f'| claim, so only exp can come out
    cfg = InstanceConfig(function_pool=("pow:1.5", "exp"), seed=1)
    assert {gen_instance(cfg, i).f for i in range(10)} == {"exp"}


def test_retry_budget_exhaustion():
    cfg = InstanceConfig(function_pool=("pow:1.5",), max_retries=3)
    with pytest.raises(GenerationError):
        gen_instance(cfg, 0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"function_pool": ()},
        {"alpha_range": (0.0, 1.0)},
        {"q_range": (1.0, 2.0)},
        {"a_range": (2.0, 1.0)},
        {"length_range": (0.0, 1.0)},
        {"seed": -1},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        InstanceConfig(**kwargs)


def test_identities_single_analytic_instance():
    cfg = InstanceConfig(("pow:2",), ("one",), (0.0, 0.0), (1.0, 1.0), (1.0, 1.0), seed=0)
    rep = run_suite("identities", 1, cfg)
    lemma = next(r for _, r in rep.results if r.name == "lemma23")
    assert rep.counts[PASS] == 3 and -lemma.slack <= 1e-9


def test_negative_controls_fail_by_design():
    rep = run_suite("negative-controls", 3, InstanceConfig(seed=2))
    assert rep.counts[FAIL] == 12 and rep.controls_missed == 0 and rep.ok


def test_reductions_at_unit_order():
    rep = run_suite("reductions", 20, InstanceConfig(alpha_range=(1.0, 1.0), seed=11))
    assert rep.counts[PASS] == 60


def test_summary_shape():
    rep = run_suite("bounds", 6, InstanceConfig(seed=4))
    s = rep.summary()
    assert sum(s["counts"].values()) == s["reports"] == 6 * len(SUITES["bounds"])
    assert set(s["tightness"]) == {"kirmaci-1", "kirmaci-2", "thm24", "thm25", "thm26"}
    assert set(s["power_mean_candidates"]) == {"stmt", "proof", "final", "printed_weak"}
    assert s["worst"]["instance"]["seed"] == 4


def test_parallel_matches_serial():
    cfg = InstanceConfig(seed=21)
    a = run_suite("all", 6, cfg).to_dict()
    b = run_suite("all", 6, cfg, jobs=2).to_dict()
    a["summary"].pop("wall_time_s")
    b["summary"].pop("wall_time_s")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("everything", 1)


def test_replay_reproduces_verdicts():
    rep = run_suite("all", 2, InstanceConfig(seed=13))
    for g, r in rep.results:
        new, same = replay(dict(r.to_dict(), tolerance={"atol": 1e-9, "rtol": 1e-7}))
        assert same, (g, r.name)


def test_parse_alphas():
    assert parse_alphas("0.1:0.5:0.1") == [0.1, 0.2, 0.3, 0.4, 0.5]
    assert parse_alphas("1,1,2") == [1.0, 1.0, 2.0]
    for bad in ["0:1:0.5", "2,1", "a:b:c", "1:2:0", ""]:
        with pytest.raises((ParseError, DomainError)):
            parse_alphas(bad)


def test_sweep_square_row():
    inst = Instance("pow:2", "one", 0.0, 1.0, 1.0, 2.0, 2.0, 0.5)
    (row,) = sweep_alpha(inst, [1.0], "thm24")
    assert row["lhs"] == pytest.approx(1 / 12) and row["rhs_final"] == pytest.approx(0.25)
    assert row["ratio"] == pytest.approx(1 / 3) and row["status"] == PASS
    assert row["rhs_stmt"] is None


def test_sweep_records_row_errors_and_keeps_going():
    inst = Instance("maxaffine:(-1,0),(2,0)", "one", -1.0, 1.0, 1.0, 2.0, 2.0, 0.0)
    rows = sweep_alpha(inst, [0.5, 1.0], "thm24")
    assert [r["status"] for r in rows] == ["skipped", "skipped"]
    assert all(r["lhs"] is None for r in rows)


def test_sweep_duplicates_preserved():
    inst = Instance("exp", "sym:bump:2", 0.0, 1.0, 1.0, 2.0, 2.0, 0.5)
    rows = sweep_alpha(inst, [0.5, 0.5, 2.0], "thm25")
    assert [r["alpha"] for r in rows] == [0.5, 0.5, 2.0]
    assert rows[0] == rows[1]
    assert all(math.isfinite(r["rhs_proof"]) for r in rows)
