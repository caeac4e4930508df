"""
Builders for every matrix family the lab works with.

Row index j and column index k run over an explicit index set; the matrix
position (r, s) holds the formula evaluated at (indices[r], indices[s]).
"""
from __future__ import annotations

import random
from enum import Enum

import sympy
from sympy.abc import x, y

from src.matrices.matrix import (
    CAUCHY_KINDS,
    DiagonalPolicy,
    EntryKind,
    Matrix,
    Provenance,
    cauchy_fraction,
)
from src.numtheory.modnum import ModCtx, inv_mod, is_prime
from src.utils.errors import NonUnitDenominator, NonUnitError


class IndexRange(str, Enum):
    FULL0 = "full0"  # 0..N-1
    FULL1 = "full1"  # 1..N-1
    HALF = "half"  # 1..(N-1)/2


def index_range(kind: IndexRange | str, n: int) -> range:
    kind = IndexRange(kind)
    if kind is IndexRange.FULL0:
        return range(0, n)
    if kind is IndexRange.FULL1:
        return range(1, n)
    return range(1, (n - 1) // 2 + 1)


def quad_form_matrix(
    n: int,
    c: int,
    d: int,
    index: IndexRange | str,
    exponent: int,
    ctx: ModCtx | None,
) -> Matrix:
    """Entries (i^2 + c i j + d j^2)^exponent; ctx None builds exact integers.

    No inverse is ever taken: 1/x modulo p is realised as x^(p-2), so a zero
    base simply gives a zero entry.
    """
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    indices = index_range(index, n)
    if ctx is None:
        rows = [[(i * i + c * i * j + d * j * j) ** exponent for j in indices] for i in indices]
    else:
        m = ctx.modulus
        rows = [[pow((i * i + c * i * j + d * j * j) % m, exponent, m) for j in indices] for i in indices]
    tag = Provenance.of(
        "quadform",
        n=n,
        c=c,
        d=d,
        range=IndexRange(index).value,
        exponent=exponent,
        m=0 if ctx is None else ctx.modulus,
    )
    return Matrix.from_rows(rows, ctx, tag)


def dp_matrix(p: int, c: int, d: int) -> Matrix:
    """The D_p(c, d) matrix [(i^2 + c i j + d j^2)^(p-2)] on 1..p-1, modulo p."""
    return quad_form_matrix(p, c, d, IndexRange.FULL1, p - 2, ModCtx.prime_field(p))


def _unit_inverse(den: int, j: int, k: int, ctx: ModCtx) -> int:
    try:
        return inv_mod(den, ctx.modulus)
    except NonUnitError:
        raise NonUnitDenominator(j, k, den, ctx.modulus) from None


def inverse_form_matrix(c: int, d: int, indices: range, ctx: ModCtx) -> Matrix:
    """Entries 1/(i^2 + c i j + d j^2) by true modular inverse."""
    m = ctx.modulus
    rows = [
        [_unit_inverse(i * i + c * i * j + d * j * j, i, j, ctx) for j in indices]
        for i in indices
    ]
    tag = Provenance.of(
        EntryKind.INV_QUAD_FORM.value, c=c, d=d, start=indices.start, stop=indices.stop, m=m
    )
    return Matrix.from_rows(rows, ctx, tag)


def cauchy_type_matrix(
    kind: EntryKind | str,
    indices: range,
    diagonal: DiagonalPolicy | str,
    ctx: ModCtx,
) -> Matrix:
    """Off-diagonal entries n(j,k) * d(j,k)^-1 in ctx, diagonal 0 or 1.

    A zero diagonal turns det/per into sums over derangements; a unit
    diagonal turns them into sums over all permutations that skip fixed
    points in the product.
    """
    kind = EntryKind(kind)
    diagonal = DiagonalPolicy(diagonal)
    if kind not in CAUCHY_KINDS:
        raise ValueError(f"{kind.value} is not a Cauchy-type kind")
    m = ctx.modulus
    diag = 0 if diagonal is DiagonalPolicy.ZERO else 1
    rows = []
    for j in indices:
        row = []
        for k in indices:
            if j == k:
                row.append(diag)
                continue
            num, den = cauchy_fraction(kind, j, k)
            row.append(num * _unit_inverse(den, j, k, ctx) % m)
        rows.append(row)
    tag = Provenance.of(
        "cauchy",
        kind=kind.value,
        start=indices.start,
        stop=indices.stop,
        diag=diagonal.value,
        m=m,
    )
    return Matrix.from_rows(rows, ctx, tag)


def cauchy_index_set(name: str, p: int) -> range:
    """Named index sets: "p-1" (1..p-1), "p" (1..p), "half" (1..(p-1)/2)."""
    if name == "p-1":
        return range(1, p)
    if name == "p":
        return range(1, p + 1)
    if name == "half":
        return range(1, (p - 1) // 2 + 1)
    raise ValueError(f"unknown index set {name!r}")


def prime_indicator_matrix(n: int) -> Matrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [[1 if is_prime(i + j) else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]
    return Matrix.from_rows(rows, None, Provenance.of(EntryKind.PRIME_INDICATOR.value, n=n))


def in_checkerboard_support(i: int, j: int) -> bool:
    """1-based cell (i, j) may be nonzero unless i + j is even and greater than two."""
    s = i + j
    return s % 2 == 1 or s == 2


def random_checkerboard_matrix(
    n: int,
    seed: int,
    symmetric: bool = False,
    bound: int = 9,
) -> Matrix:
    """Random small integers on the checkerboard support; other cells exactly 0.

    The symmetric variant puts a perfect square at a(1,1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not in_checkerboard_support(i, j):
                continue
            if symmetric and j < i:
                rows[i - 1][j - 1] = rows[j - 1][i - 1]
            elif symmetric and i == j == 1:
                rows[0][0] = rng.randint(0, 4) ** 2
            else:
                rows[i - 1][j - 1] = rng.randint(-bound, bound)
    tag = Provenance.of("checkerboard", n=n, seed=seed, symmetric=symmetric, bound=bound)
    return Matrix.from_rows(rows, None, tag)


def random_skew_checkerboard_matrix(m: int, seed: int, bound: int = 9) -> Matrix:
    """Skew-symmetric supported matrix of order 2m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m
    rng = random.Random(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if in_checkerboard_support(i, j):
                v = rng.randint(-bound, bound)
                rows[i - 1][j - 1] = v
                rows[j - 1][i - 1] = -v
    tag = Provenance.of("skew-checkerboard", m=m, seed=seed, bound=bound)
    return Matrix.from_rows(rows, None, tag)


def random_matrix(n: int, seed: int, ctx: ModCtx | None = None, bound: int = 9) -> Matrix:
    rng = random.Random(seed)
    if ctx is None:
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    else:
        rows = [[rng.randrange(ctx.modulus) for _ in range(n)] for _ in range(n)]
    tag = Provenance.of("random", n=n, seed=seed, m=0 if ctx is None else ctx.modulus, bound=bound)
    return Matrix.from_rows(rows, ctx, tag)


def random_polynomial(n: int, seed: int, bound: int = 5) -> sympy.Expr:
    """Random P(x, y) with x-degree < n - 1 and coefficients polynomial in y."""
    rng = random.Random(seed)
    x_degree = rng.randint(0, max(n - 2, 0))
    expr = sympy.Integer(0)
    for k in range(x_degree + 1):
        coeff = sum(rng.randint(-bound, bound) * y**t for t in range(rng.randint(0, 3) + 1))
        expr += coeff * x**k
    return sympy.expand(expr)


def poly_eval_matrix(P: sympy.Expr, n: int) -> Matrix:
    """Exact matrix [P(i, j)] on 1..n; P is a polynomial in x (row) and y (column).

    The x-degree must stay below n - 1, which forces the determinant to vanish.
    """
    poly = sympy.Poly(P, x, y)
    if n >= 2 and poly.degree(x) >= n - 1:
        raise ValueError(f"x-degree {poly.degree(x)} is not below n - 1 = {n - 1}")
    rows = [[int(poly.eval({x: i, y: j})) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return Matrix.from_rows(rows, None, Provenance.of("poly", P=sympy.srepr(poly.as_expr()), n=n))
