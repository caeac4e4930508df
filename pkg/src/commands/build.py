import click

from src.matrices.matgen import (
    IndexRange,
    cauchy_index_set,
    cauchy_type_matrix,
    prime_indicator_matrix,
    quad_form_matrix,
    random_checkerboard_matrix,
    random_matrix,
    random_skew_checkerboard_matrix,
)
from src.matrices.matrix import CAUCHY_KINDS, DiagonalPolicy, Matrix
from src.numtheory.modnum import ModCtx

out_option = click.option(
    "--out", type=click.File("w"), default="-", show_default=True, help="Matrix file to write."
)


def _emit(M: Matrix, out):
    out.write(M.to_text())


@click.group()
def build():
    """Write a matrix in the plain-text format ("n m" header, m = 0 for exact)."""


@build.command()
@click.option("--p", "n", type=int, required=True, help="Order parameter N (usually a prime).")
@click.option("--c", type=int, default=0, show_default=True)
@click.option("--d", type=int, default=1, show_default=True)
@click.option("--range", "index", type=click.Choice([r.value for r in IndexRange]), default="full0", show_default=True)
@click.option("--exact", is_flag=True, help="Exact integers instead of residues.")
@click.option("--exponent", type=int, default=None, help="Defaults to N - 2.")
@click.option("--mod", "modulus", type=int, default=None, help="Defaults to N.")
@out_option
def quadform(n, c, d, index, exact, exponent, modulus, out):
    """(i^2 + c ij + d j^2)^e over the chosen index range."""
    exponent = n - 2 if exponent is None else exponent
    ctx = None if exact else ModCtx.of(modulus or n)
    _emit(quad_form_matrix(n, c, d, index, exponent, ctx), out)


@build.command()
@click.option("--n", type=int, required=True)
@out_option
def primeind(n, out):
    """[1 if i + j is prime else 0] on 1..n."""
    _emit(prime_indicator_matrix(n), out)


@build.command()
@click.option("--kind", type=click.Choice([k.value for k in CAUCHY_KINDS]), required=True)
@click.option("--p", type=int, required=True)
@click.option("--mod", "modulus", type=int, default=None, help="Defaults to p.")
@click.option("--diag", type=click.Choice(["zero", "one"]), default="zero", show_default=True)
@click.option("--set", "index_set", type=click.Choice(["p-1", "p", "half"]), default="p-1", show_default=True)
@out_option
def cauchy(kind, p, modulus, diag, index_set, out):
    """Cauchy-type fractions n(j,k)/d(j,k) off the diagonal."""
    ctx = ModCtx.of(modulus or p)
    _emit(cauchy_type_matrix(kind, cauchy_index_set(index_set, p), DiagonalPolicy(diag), ctx), out)


@build.command()
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--variant", type=click.Choice(["general", "symmetric", "skew"]), default="general", show_default=True)
@out_option
def checkerboard(n, seed, variant, out):
    """Seeded matrix supported off the cells with i + j even and > 2."""
    if variant == "skew":
        if n % 2:
            raise click.BadParameter("skew checkerboard matrices have even order", param_hint="--n")
        M = random_skew_checkerboard_matrix(n // 2, seed)
    else:
        M = random_checkerboard_matrix(n, seed, symmetric=variant == "symmetric")
    _emit(M, out)


@build.command()
@click.option("--n", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--mod", "modulus", type=int, default=0, show_default=True, help="0 for exact integers.")
@out_option
def random(n, seed, modulus, out):
    """Seeded dense matrix."""
    _emit(random_matrix(n, seed, ModCtx.of(modulus) if modulus else None), out)
