import csv
from dataclasses import replace

import pytest

from softhappy.exceptions import ParameterError
from softhappy.experiment import PRESETS, ExperimentConfig, instance_params, run_experiment

SMALL = ExperimentConfig(
    mode="grid", n=(80,), k=(2, 4), p=(0.4,), q=(0.05,), pcc=(2,), rho=(0.3, 0.7),
    instances=2, time_limit_ms=0,
)


def rows_of(path):
    return list(csv.DictReader(open(path)))


def test_desk_slice_row_count(tmp_path):
    out = run_experiment(PRESETS["desk-grid"], tmp_path / "desk.csv")
    rows = rows_of(out)
    for algo in ("greedy", "ngc", "lmc", "growth", "community"):
        assert sum(r["algo"] == algo for r in rows) == 120


def test_q_above_half_p_rejected():
    with pytest.raises(ParameterError):
        ExperimentConfig(p=(0.4,), q=(0.3,))
    with pytest.raises(ParameterError):
        ExperimentConfig(p=(0.4,), q_fraction=(0.6,))


def test_grid_filter_keeps_q_within_half_p():
    cfg = ExperimentConfig(p=(0.2, 0.6), q=(0.01, 0.11, 0.21, 0.31), skip_invalid_q=True)
    pairs = [(pr.p, pr.q) for pr, _ in instance_params(cfg)]
    assert all(q <= p / 2 for p, q in pairs)
    assert (0.2, 0.01) in pairs and (0.6, 0.21) in pairs and len(pairs) == 1 + 3


def test_seeds_follow_base_plus_index():
    cfg = replace(SMALL, base_seed=100)
    seeds = [pr.seed for pr, _ in instance_params(cfg)]
    assert seeds == [100, 101, 102, 103]


def test_random_mode_respects_bounds():
    for params, rhos in instance_params(replace(PRESETS["benchmark-mixed"], instances=200)):
        assert 200 <= params.n <= 2999 and 2 <= params.k <= 20
        assert 0 < params.q <= params.p / 2
        assert 1 <= params.pcc <= 10
        assert len(rhos) == 1 and 0 < rhos[0] <= 1


def test_rerun_byte_identical(tmp_path):
    cfg = replace(SMALL, deterministic=True)
    a = run_experiment(cfg, tmp_path / "a.csv").read_bytes()
    b = run_experiment(cfg, tmp_path / "b.csv").read_bytes()
    assert a == b
    cfg = replace(SMALL, timings=False)
    a = run_experiment(cfg, tmp_path / "c.csv").read_bytes()
    b = run_experiment(cfg, tmp_path / "d.csv").read_bytes()
    assert a == b


def test_parallel_matches_serial(tmp_path):
    cfg = replace(SMALL, timings=False)
    a = run_experiment(cfg, tmp_path / "a.csv").read_bytes()
    b = run_experiment(replace(cfg, jobs=2), tmp_path / "b.csv").read_bytes()
    assert a == b


def test_resume_skips_existing_rows(tmp_path):
    cfg = replace(SMALL, timings=False)
    full = run_experiment(cfg, tmp_path / "full.csv").read_bytes()
    out = tmp_path / "resumed.csv"
    lines = full.decode().splitlines(keepends=True)
    # an interrupted run: header, a few complete rows and a cut-off one
    partial = out.with_name(out.name + ".partial")
    partial.write_text("".join(lines[:6]) + lines[6][:10])
    run_experiment(cfg, out)
    assert out.read_bytes() == full
    assert not partial.exists()


def test_rows_carry_instance_parameters(tmp_path):
    rows = rows_of(run_experiment(replace(SMALL, instances=1), tmp_path / "r.csv"))
    for r in rows:
        assert r["n"] == "80" and r["p"] == "0.4" and r["q"] == "0.05" and r["pcc"] == "2"
        assert r["seed"] in {"0", "1"}


def test_config_json_round_trip(tmp_path):
    path = tmp_path / "c.json"
    import json

    path.write_text(json.dumps(SMALL.to_dict()))
    assert ExperimentConfig.from_json(path) == SMALL
    with pytest.raises(ParameterError):
        ExperimentConfig.from_dict({"bogus": 1})
