import json

import pytest

from matroidlimit.experiments import ExperimentConfig, run_convergence


def small(**kw):
    base = dict(family="cycle", sizes=[3, 4, 6], K=2, mode="exact", budget=10**5, samples=100, seed=1)
    base.update(kw)
    return ExperimentConfig(**base)


def test_config_validation():
    with pytest.raises(ValueError):
        small(sizes=[6, 4]).validate()
    with pytest.raises(ValueError):
        small(mode="guess").validate()
    with pytest.raises(ValueError):
        small(family="petersen").validate()
    with pytest.raises(ValueError):
        small(K=0).validate()
    small(sizes=[4, 4]).validate()


def test_config_json_round_trip():
    cfg = small()
    assert ExperimentConfig.from_json(cfg.to_json()) == cfg


def test_report_shape_and_determinism(tmp_path):
    rep = run_convergence(small())
    assert rep.ok and len(rep.pairs) == 2
    assert all(p.dq.lower >= 0 and not p.dq.estimate for p in rep.pairs)
    assert run_convergence(small()).to_csv() == rep.to_csv()
    csv_path, json_path = rep.write(str(tmp_path / "run"))
    doc = json.loads(open(json_path).read())
    assert doc["ok"] and len(doc["pairs"]) == 2
    assert open(csv_path).readline().strip() == "pair,size_a,size_b,metric,value,exact"


def test_equal_sizes_give_zero():
    rep = run_convergence(small(sizes=[5, 5], mode="sampled"))
    assert rep.pairs[0].dq.lower == 0
    assert rep.pairs[0].dq.estimate


def test_random_regular_family():
    rep = run_convergence(small(family="random_regular", sizes=[6, 8], degree=3, K=1))
    assert rep.ok and len(rep.pairs) == 1
