"""
Sweeps: a registry of checkers, deterministic cell planning over an index
range and a parameter grid, and serial or process-parallel evaluation that
always yields reports in plan order.
"""
from __future__ import annotations

import inspect
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

from src.checks import conjectures, theorems
from src.checks.report import CheckReport
from src.numtheory.modnum import odd_between, primes_between
from src.utils.config import Settings
from src.utils.logger import get_logger

logger = get_logger(__name__)

Cell = tuple[str, dict[str, Any]]


@dataclass(frozen=True)
class CheckSpec:
    """How a named check is indexed and which grid parameters it takes."""

    name: str
    run: Callable[..., CheckReport | list[CheckReport]]
    index: str | None = "p"
    index_kind: str = "prime"
    grid: tuple[str, ...] = ()
    residue_grid: bool = False
    defaults: dict[str, Any] = field(default_factory=dict)

    def indexing(self, fixed: dict[str, Any]) -> tuple[str | None, str]:
        if self.name == "conj" and fixed.get("conj_id") == 1:
            return "n", "odd"
        return self.index, self.index_kind


REGISTRY: dict[str, CheckSpec] = {
    spec.name: spec
    for spec in (
        CheckSpec("eq15", theorems.check_det_zero_mod_p, grid=("c", "d"), residue_grid=True),
        CheckSpec("p3-remark", theorems.check_p3_remark, index=None, index_kind="none", grid=("c", "d")),
        CheckSpec("reflection", theorems.check_reflection, grid=("c", "d"), residue_grid=True),
        CheckSpec("dp-theorem", theorems.check_dp_theorem, defaults={"variant": "two_two"}),
        CheckSpec("column-relation", theorems.check_column_relation, grid=("c", "d"), residue_grid=True),
        CheckSpec("column-sum", theorems.check_column_sum, grid=("c", "d"), residue_grid=True),
        CheckSpec("background", theorems.check_background, defaults={"which": "half_range_sq"}),
        CheckSpec("wolstenholme", theorems.check_wolstenholme),
        CheckSpec("power-sums", theorems.check_power_sums),
        CheckSpec(
            "checkerboard",
            theorems.check_checkerboard,
            index="n",
            index_kind="int",
            grid=("seed",),
            defaults={"variant": "general", "mode": "det"},
        ),
        CheckSpec("prime-indicator", theorems.check_prime_indicator, index="n", index_kind="int"),
        CheckSpec("poly-degeneracy", theorems.check_poly_degeneracy, index="n", index_kind="int", grid=("seed",)),
        CheckSpec("conj", conjectures.check_conjecture, grid=("c", "d"), defaults={"conj_id": 2}),
    )
}


def get_spec(name: str) -> CheckSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; choose from {', '.join(REGISTRY)}") from None


def index_values(kind: str, lo: int, hi: int) -> list[int]:
    if kind == "prime":
        return primes_between(lo, hi)
    if kind == "odd":
        return odd_between(lo, hi)
    if kind == "int":
        return list(range(lo, hi + 1))
    return [0]


def grid_names(spec: CheckSpec, fixed: dict[str, Any], grid: dict[str, list[int]]) -> list[str]:
    names = list(spec.grid)
    if spec.name == "dp-theorem":
        variant = fixed.get("variant", "two_two")
        names = ["c"] if variant == "c_minus1" else ["c", "d"] if variant == "criterion" else []
    elif spec.name == "conj" and fixed.get("conj_id") != 1:
        names = []
    return [g for g in names if g in grid]


def plan_cells(
    name: str,
    lo: int,
    hi: int,
    grid: dict[str, list[int]] | None = None,
    fixed: dict[str, Any] | None = None,
    all_values: bool = False,
) -> list[Cell]:
    """Cells in deterministic order: index ascending, then the grid in product order.

    Unless all_values is set, c and d values outside [0, p) are dropped since
    they repeat a residue already in the grid.
    """
    spec = get_spec(name)
    fixed = {**spec.defaults, **(fixed or {})}
    grid = grid or {}
    index, kind = spec.indexing(fixed)
    names = grid_names(spec, fixed, grid)
    reduce_grid = spec.residue_grid and not all_values and kind == "prime"

    cells: list[Cell] = []
    for value in index_values(kind, lo, hi):
        for combo in itertools.product(*(grid[g] for g in names)):
            kwargs = dict(fixed)
            if index is not None:
                kwargs[index] = value
            kwargs.update(zip(names, combo))
            if reduce_grid and any(kwargs[g] >= value for g in names if g in ("c", "d")):
                continue
            cells.append((name, kwargs))
    return cells


def run_cell(cell: Cell, settings: Settings) -> list[CheckReport]:
    name, kwargs = cell
    func = get_spec(name).run
    if "settings" in inspect.signature(func).parameters:
        kwargs = {**kwargs, "settings": settings}
    result = func(**kwargs)
    return result if isinstance(result, list) else [result]


def sweep(cells: Iterable[Cell], settings: Settings, jobs: int = 1) -> Iterator[CheckReport]:
    """Evaluate cells and yield their reports in plan order, whatever jobs is."""
    cells = list(cells)
    logger.info("[SWEEP] %d cells, jobs=%d", len(cells), jobs)
    if jobs <= 1 or len(cells) <= 1:
        for cell in cells:
            yield from run_cell(cell, settings)
        return

    # workers already run in parallel; no nested Ryser pools
    engines = settings.engines.model_copy(update={"ryser_jobs": 1})
    worker_settings = settings.model_copy(update={"engines": engines})
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for reports in pool.map(run_cell, cells, itertools.repeat(worker_settings)):
            yield from reports
