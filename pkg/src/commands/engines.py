import click

from src.engines.detper import (
    DET_ENGINES,
    PER_ENGINES,
    determinant,
    permanent,
    resolve_det_engine,
    resolve_per_engine,
)
from src.matrices.matrix import Matrix
from src.numtheory.modnum import ModCtx
from src.utils.errors import MatrixFormatError


def load_matrix(source, modulus: int | None) -> Matrix:
    """Read a matrix file; --mod re-reduces it (0 keeps exact mode only for exact input)."""
    M = Matrix.from_text(source.read())
    if modulus:
        return M.reduced(ModCtx.of(modulus))
    if modulus == 0 and M.ctx is not None:
        raise MatrixFormatError("--mod 0 cannot lift a modular matrix back to the integers")
    return M


@click.command()
@click.argument("source", type=click.File("r"), default="-")
@click.option("--mod", "modulus", type=int, default=None, help="Reduce the input modulo M first.")
@click.option("--engine", type=click.Choice(DET_ENGINES), default="auto", show_default=True)
def det(source, modulus, engine):
    """Determinant of a matrix file (or - for stdin)."""
    M = load_matrix(source, modulus)
    used = resolve_det_engine(M, engine)
    click.echo(str(determinant(M, used)))
    click.echo(f"engine: {used}", err=True)


@click.command()
@click.argument("source", type=click.File("r"), default="-")
@click.option("--mod", "modulus", type=int, default=None, help="Reduce the input modulo M first.")
@click.option("--engine", type=click.Choice(PER_ENGINES), default="auto", show_default=True)
@click.pass_obj
def per(settings, source, modulus, engine):
    """Permanent of a matrix file (or - for stdin)."""
    M = load_matrix(source, modulus)
    used = resolve_per_engine(M, engine)
    engines = settings.engines
    value = permanent(M, used, cap=engines.max_per_n, chunks=engines.ryser_chunks, jobs=engines.ryser_jobs)
    click.echo(str(value))
    click.echo(f"engine: {used}", err=True)
