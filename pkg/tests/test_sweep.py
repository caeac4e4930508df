import pytest

from src.checks.report import Verdict
from src.checks.sweep import REGISTRY, get_spec, index_values, plan_cells, run_cell, sweep
from src.utils.config import Settings


@pytest.fixture
def settings():
    return Settings()


def test_registry_names():
    assert {"eq15", "p3-remark", "dp-theorem", "checkerboard", "conj"} <= set(REGISTRY)
    with pytest.raises(ValueError):
        get_spec("nope")


def test_index_values():
    assert index_values("prime", 3, 13) == [3, 5, 7, 11, 13]
    assert index_values("odd", 4, 9) == [5, 7, 9]
    assert index_values("int", 2, 4) == [2, 3, 4]
    assert index_values("none", 0, 0) == [0]


def test_plan_order_and_residue_filter():
    cells = plan_cells("eq15", 3, 5, {"c": [0, 1, 3], "d": [1, 4]})
    assert [(kw["p"], kw["c"], kw["d"]) for _, kw in cells] == [
        (3, 0, 1),
        (3, 1, 1),
        (5, 0, 1),
        (5, 0, 4),
        (5, 1, 1),
        (5, 1, 4),
        (5, 3, 1),
        (5, 3, 4),
    ]


def test_plan_keeps_all_values_on_request():
    cells = plan_cells("eq15", 3, 3, {"c": [0, 5], "d": [7]}, all_values=True)
    assert len(cells) == 2


def test_plan_empty_range():
    assert plan_cells("eq15", 24, 28, {"c": [0], "d": [0]}) == []
    assert plan_cells("wolstenholme", 10, 9) == []


def test_plan_defaults_and_variant_grid():
    cells = plan_cells("dp-theorem", 7, 7, {"c": [1, 2], "d": [1]})
    assert cells == [("dp-theorem", {"variant": "two_two", "p": 7})]

    cells = plan_cells("dp-theorem", 7, 7, {"c": [1, 2], "d": [1]}, {"variant": "c_minus1"})
    assert [kw["c"] for _, kw in cells] == [1, 2]
    assert all("d" not in kw for _, kw in cells)


def test_plan_conjecture_indexing():
    cells = plan_cells("conj", 3, 9, {"c": [0], "d": [2]}, {"conj_id": 1})
    assert [kw["n"] for _, kw in cells] == [3, 5, 7, 9]
    cells = plan_cells("conj", 3, 7, {"c": [0], "d": [2]}, {"conj_id": 5})
    assert cells == [("conj", {"conj_id": 5, "p": p}) for p in (3, 5, 7)]


def test_plan_integer_index():
    cells = plan_cells("checkerboard", 2, 3, {"seed": [0, 1]})
    assert [(kw["n"], kw["seed"]) for _, kw in cells] == [(2, 0), (2, 1), (3, 0), (3, 1)]
    assert cells[0][1]["variant"] == "general"


def test_run_cell(settings):
    [report] = run_cell(("eq15", {"p": 7, "c": 1, "d": 2}), settings)
    assert report.verdict is Verdict.PASS
    reports = run_cell(("conj", {"conj_id": 5, "p": 5}), settings)
    assert [r.check_id for r in reports] == ["conj5.per", "conj5.det"]


def test_parallel_matches_serial(settings):
    cells = plan_cells("eq15", 3, 13, {"c": [0, 1, 2], "d": [1, 2]})
    serial = [r.model_dump(exclude={"elapsed_ms"}) for r in sweep(cells, settings, jobs=1)]
    parallel = [r.model_dump(exclude={"elapsed_ms"}) for r in sweep(cells, settings, jobs=2)]
    assert serial == parallel
    assert len(serial) == len(cells)


def test_sweep_p3_remark(settings):
    cells = plan_cells("p3-remark", 0, 0, {"c": [-1, 2], "d": [3]})
    reports = list(sweep(cells, settings))
    assert [r.params for r in reports] == [{"c": -1, "d": 3}, {"c": 2, "d": 3}]
    assert all(r.verdict is Verdict.PASS for r in reports)
