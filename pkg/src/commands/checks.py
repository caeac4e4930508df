import inspect

import click

from src.checks.conjectures import CONJECTURE_IDS
from src.checks.sweep import REGISTRY, get_spec, grid_names, plan_cells, sweep
from src.checks.theorems import BACKGROUND_KINDS, CHECKERBOARD_VARIANTS, DP_VARIANTS
from src.utils.logger import log_alert
from src.utils.serializer import FORMATS, write_reports
from src.utils.stats import format_summary, summarize

VARIANTS = {"dp-theorem": DP_VARIANTS, "checkerboard": CHECKERBOARD_VARIANTS}


def parse_grid(text: str) -> list[int]:
    """ "lo:hi" (inclusive) or a comma list such as "1,3,-2"."""
    try:
        if ":" in text:
            lo, hi = (int(part) for part in text.split(":", 1))
            return list(range(lo, hi + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"{text!r} is neither lo:hi nor a comma list of integers") from None


def _fixed_params(name: str, variant, which, conj_id, mode) -> dict:
    spec = get_spec(name)
    accepted = inspect.signature(spec.run).parameters
    given = {"variant": variant, "which": which, "conj_id": conj_id, "mode": mode}
    fixed = {k: v for k, v in given.items() if v is not None and k in accepted}
    if variant is not None and name in VARIANTS and variant not in VARIANTS[name]:
        raise click.BadParameter(f"{name} variants are {', '.join(VARIANTS[name])}", param_hint="--variant")
    if which is not None and which not in BACKGROUND_KINDS:
        raise click.BadParameter(f"choose from {', '.join(BACKGROUND_KINDS)}", param_hint="--which")
    if name == "conj" and conj_id is None:
        raise click.BadParameter("conj needs --id", param_hint="--id")
    return fixed


def check_options(func):
    options = [
        click.argument("names", nargs=-1, required=True, type=click.Choice(list(REGISTRY))),
        click.option("--variant", default=None, help="dp-theorem or checkerboard variant."),
        click.option("--which", default=None, help="Background congruence."),
        click.option("--id", "conj_id", type=click.IntRange(min(CONJECTURE_IDS), max(CONJECTURE_IDS)), default=None),
        click.option("--mode", type=click.Choice(["det", "per"]), default=None),
        click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True),
        click.option("--format", "fmt", type=click.Choice(FORMATS), default="jsonl", show_default=True),
        click.option("--no-elapsed", is_flag=True, help="Write elapsed_ms as 0 (byte-stable output)."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _run(ctx: click.Context, cells, jobs: int, fmt: str, no_elapsed: bool, show_summary: bool):
    settings = ctx.obj
    reports = []
    stream = click.get_text_stream("stdout")
    for report in write_reports(sweep(cells, settings, jobs), stream, fmt, with_elapsed=not no_elapsed):
        if report.verdict.value in ("fail", "inconclusive"):
            log_alert(report, settings.logging.alerts_file)
        reports.append(report)
    if show_summary:
        click.echo(format_summary(summarize(reports)), err=True)
    ctx.exit(1 if any(r.failed for r in reports) else 0)


def _check_cells(name: str, fixed: dict, p, n, grid: dict) -> list:
    spec = get_spec(name)
    index, _ = spec.indexing({**spec.defaults, **fixed})
    value = n if index == "n" else p
    if index is not None and value is None:
        raise click.UsageError(f"{name} needs --{index}")
    value = 0 if value is None else value
    cells = plan_cells(name, value, value, grid, fixed, all_values=True)
    if index is not None and not cells:
        # plan_cells keeps only primes (or odd n); run the checker so it reports not-applicable
        kwargs = {**spec.defaults, **fixed}
        kwargs.update({g: grid[g][0] for g in grid_names(spec, kwargs, grid)}, **{index: value})
        cells = [(name, kwargs)]
    return cells


@click.command()
@check_options
@click.option("--p", type=int, default=None, help="Prime index.")
@click.option("--n", type=int, default=None, help="Order index.")
@click.option("--c", default="1", show_default=True, help="Value, lo:hi or comma list.")
@click.option("--d", default="1", show_default=True, help="Value, lo:hi or comma list.")
@click.option("--seeds", default="0", show_default=True)
@click.pass_context
def check(ctx, names, variant, which, conj_id, mode, jobs, fmt, no_elapsed, p, n, c, d, seeds):
    """Run one or more checks at one index value."""
    grid = {"c": parse_grid(c), "d": parse_grid(d), "seed": parse_grid(seeds)}
    cells = []
    for name in names:
        fixed = _fixed_params(name, variant, which, conj_id, mode)
        cells += _check_cells(name, fixed, p, n, grid)
    _run(ctx, cells, jobs, fmt, no_elapsed, show_summary=False)


@click.command(name="sweep")
@check_options
@click.option("--pmin", type=int, default=3, show_default=True)
@click.option("--pmax", type=int, default=None, help="Defaults to gates.det_pmax.")
@click.option("--nmin", type=int, default=1, show_default=True)
@click.option("--nmax", type=int, default=12, show_default=True)
@click.option("--c", default="0:5", show_default=True, help="lo:hi or comma list.")
@click.option("--d", default="0:5", show_default=True, help="lo:hi or comma list.")
@click.option("--seeds", default="0:4", show_default=True)
@click.option("--all-values", is_flag=True, help="Keep c, d outside [0, p).")
@click.pass_context
def sweep_command(ctx, names, variant, which, conj_id, mode, jobs, fmt, no_elapsed,
                  pmin, pmax, nmin, nmax, c, d, seeds, all_values):
    """Run checks over a range of primes (or orders) and a parameter grid."""
    grid = {"c": parse_grid(c), "d": parse_grid(d), "seed": parse_grid(seeds)}
    pmax = ctx.obj.gates.det_pmax if pmax is None else pmax
    cells = []
    for name in names:
        fixed = _fixed_params(name, variant, which, conj_id, mode)
        spec = get_spec(name)
        index, _ = spec.indexing({**spec.defaults, **fixed})
        lo, hi = (nmin, nmax) if index == "n" else (pmin, pmax)
        cells += plan_cells(name, lo, hi, grid, fixed, all_values=all_values)
    _run(ctx, cells, jobs, fmt, no_elapsed, show_summary=True)
