"""
Exact determinant and permanent engines.

Prime moduli go through in-place elimination; every other ring goes through
fraction-free Bareiss on the lifted representatives and is reduced at the
end. Permanents use Ryser's inclusion-exclusion in the Nijenhuis-Wilf form
(2^(n-1) Gray-code steps, one column update per step).
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

import numpy as np

from src.matrices.matgen import in_checkerboard_support
from src.matrices.matrix import Matrix
from src.numtheory.modnum import ModCtx, Residue, inv_mod
from src.utils.errors import InvalidModulus, OrderTooLarge, SupportViolation
from src.utils.logger import get_logger

logger = get_logger(__name__)

Scalar = int | Residue

DEFAULT_PER_CAP = 28
PER_HARD_CAP = 32
NAIVE_CAP = 9
# largest p with (p - 1)^2 + (p - 1)^2 inside int64
_INT64_PRIME_LIMIT = 2_147_483_647

DET_ENGINES = ("auto", "field", "bareiss", "naive", "checkerboard")
PER_ENGINES = ("auto", "ryser", "naive", "checkerboard")


# --- determinants -----------------------------------------------------------

def det_field(M: Matrix) -> Residue:
    """Determinant over a prime field by Gaussian elimination with pivot search."""
    ctx = M.ctx
    if ctx is None or not ctx.is_field:
        raise InvalidModulus("det_field needs a matrix over a prime modulus")
    p = ctx.modulus
    n = M.n
    if n == 0:
        return ctx.residue(1)
    a = np.array(M.rows, dtype=np.int64 if p <= _INT64_PRIME_LIMIT else object)
    det = 1
    for col in range(n):
        nonzero = np.flatnonzero(a[col:, col])
        if nonzero.size == 0:
            return ctx.residue(0)
        pivot_row = col + int(nonzero[0])
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            det = -det
        pivot = int(a[col, col])
        det = det * pivot % p
        factors = a[col + 1 :, col] * inv_mod(pivot, p) % p
        a[col + 1 :, col:] = (a[col + 1 :, col:] - np.outer(factors, a[col, col:])) % p
    return ctx.residue(det)


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Exact integer determinant; every division is exact."""
    a = [list(row) for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot_row = a[k]
        pivot = pivot_row[k]
        tail = pivot_row[k + 1 :]
        for i in range(k + 1, n):
            row = a[i]
            lead = row[k]
            a[i] = row[: k + 1] + [
                (x * pivot - lead * y) // prev for x, y in zip(row[k + 1 :], tail)
            ]
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact(M: Matrix, reduce_ctx: ModCtx | None = None) -> Scalar:
    """Bareiss determinant of the lifted entries.

    Reduced modulo reduce_ctx, or modulo the matrix's own context when it has
    one; exact-integer matrices without reduce_ctx give a plain int.
    """
    value = bareiss_determinant(M.lift())
    ctx = reduce_ctx or M.ctx
    return value if ctx is None else ctx.residue(value)


# --- naive permutation sums -------------------------------------------------

def heap_permutations(n: int) -> Iterator[tuple[list[int], int]]:
    """Heap's algorithm: yields (perm, sign); perm is mutated in place between yields."""
    perm = list(range(n))
    counters = [0] * n
    sign = 1
    yield perm, sign
    i = 1
    while i < n:
        if counters[i] < i:
            swap = 0 if i % 2 == 0 else counters[i]
            perm[swap], perm[i] = perm[i], perm[swap]
            sign = -sign
            yield perm, sign
            counters[i] += 1
            i = 1
        else:
            counters[i] = 0
            i += 1


def _naive_sum(M: Matrix, signed: bool) -> Scalar:
    n = M.n
    if n > NAIVE_CAP:
        raise OrderTooLarge(n, NAIVE_CAP, f"{math.factorial(n)} permutations")
    rows = M.rows
    total = 0
    for perm, sign in heap_permutations(n):
        term = 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += sign * term if signed else term
    return M.scalar(total)


def det_naive(M: Matrix) -> Scalar:
    return _naive_sum(M, signed=True)


def per_naive(M: Matrix) -> Scalar:
    return _naive_sum(M, signed=False)


# --- Ryser ------------------------------------------------------------------

def _ryser_chunk(rows: tuple[tuple[int, ...], ...], modulus: int, start: int, stop: int) -> int:
    """Scaled partial sum over Gray-code steps start..stop-1.

    Row sums are kept doubled (2 x_i + 2 sum_{j in S} a_ij) so exact mode stays
    integral; modulus 0 means exact arithmetic.
    """
    if start >= stop:
        return 0
    n = len(rows)
    last = n - 1
    cols = [[2 * rows[i][j] for i in range(n)] for j in range(last)]
    sums = [2 * rows[i][last] - sum(rows[i]) for i in range(n)]
    gray = start ^ (start >> 1)
    for j in range(last):
        if gray >> j & 1:
            sums = [s + c for s, c in zip(sums, cols[j])]
    if modulus:
        cols = [[c % modulus for c in col] for col in cols]
        sums = [s % modulus for s in sums]
    sign = -1 if bin(gray).count("1") % 2 else 1
    total = 0
    k = start
    while True:
        prod = 1
        if modulus:
            for s in sums:
                prod = prod * s % modulus
        else:
            for s in sums:
                prod *= s
        total += prod if sign > 0 else -prod
        k += 1
        if k >= stop:
            break
        bit = (k & -k).bit_length() - 1
        col = cols[bit]
        if (k ^ (k >> 1)) >> bit & 1:
            sums = [s + c for s, c in zip(sums, col)]
        else:
            sums = [s - c for s, c in zip(sums, col)]
        if modulus:
            sums = [s % modulus for s in sums]
        sign = -sign
    return total % modulus if modulus else total


def _chunk_bounds(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    bounds, start = [], 0
    for c in range(chunks):
        stop = start + step + (1 if c < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def per_ryser(
    M: Matrix,
    ctx: ModCtx | None = None,
    cap: int = DEFAULT_PER_CAP,
    chunks: int = 1,
    jobs: int = 1,
) -> Scalar:
    """Permanent by Ryser's formula, optionally split into independent chunks.

    Chunked and serial evaluation give identical results: each chunk derives
    its starting row sums from its first Gray-code mask.
    """
    if ctx is not None and M.ctx != ctx:
        M = M.reduced(ctx)
    n = M.n
    limit = min(cap, PER_HARD_CAP)
    if n > limit:
        raise OrderTooLarge(n, limit, f"~{n * 2 ** max(n - 1, 0):.3g} row-sum updates")
    if n > DEFAULT_PER_CAP:
        logger.warning("[RYSER] order %d above the default cap, ~%.3g row-sum updates", n, n * 2 ** (n - 1))
    if n == 0:
        return M.scalar(1)
    modulus = 0 if M.ctx is None else M.ctx.modulus
    if modulus % 2 == 0 and modulus:
        raise InvalidModulus("Ryser's scaled form needs an odd modulus")
    bounds = _chunk_bounds(1 << (n - 1), chunks)
    if jobs > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(
                    _ryser_chunk,
                    [M.rows] * len(bounds),
                    [modulus] * len(bounds),
                    [b[0] for b in bounds],
                    [b[1] for b in bounds],
                )
            )
    else:
        parts = [_ryser_chunk(M.rows, modulus, start, stop) for start, stop in bounds]
    total = sum(parts)
    sign = -1 if (n - 1) % 2 else 1
    if modulus:
        value = sign * total * pow(inv_mod(2, modulus), n - 1, modulus)
    else:
        value = sign * (total // (1 << (n - 1)))
    return M.scalar(value)


# --- checkerboard factorization ---------------------------------------------

def support_violations(M: Matrix) -> list[tuple[int, int]]:
    """1-based cells with i + j even and > 2 holding a nonzero entry."""
    return [
        (i, j)
        for i in range(1, M.n + 1)
        for j in range(1, M.n + 1)
        if not in_checkerboard_support(i, j) and M.entry(i, j) != 0
    ]


def has_checkerboard_support(M: Matrix) -> bool:
    return not support_violations(M)


def checkerboard_blocks(M: Matrix) -> tuple[Matrix, Matrix]:
    """The two half-size submatrices.

    Even n = 2m: [a(2i, 2j-1)] and [a(2i-1, 2j)].
    Odd n = 2m+1: [a(2i, 2j+1)] and [a(2i+1, 2j)].
    """
    m = M.n // 2
    idx = range(1, m + 1)
    if M.n % 2 == 0:
        first = M.submatrix([2 * i for i in idx], [2 * j - 1 for j in idx])
        second = M.submatrix([2 * i - 1 for i in idx], [2 * j for j in idx])
    else:
        first = M.submatrix([2 * i for i in idx], [2 * j + 1 for j in idx])
        second = M.submatrix([2 * i + 1 for i in idx], [2 * j for j in idx])
    return first, second


def _direct_det(M: Matrix) -> Scalar:
    if M.ctx is not None and M.ctx.is_field:
        return det_field(M)
    return det_exact(M)


def factor_checkerboard(M: Matrix, mode: str = "det", cap: int = DEFAULT_PER_CAP) -> Scalar:
    """det or per of a checkerboard-supported matrix through its two half-size blocks."""
    violations = support_violations(M)
    if violations:
        raise SupportViolation(violations)
    n = M.n
    if n == 0:
        return M.scalar(1)
    first, second = checkerboard_blocks(M)
    m = n // 2
    if mode == "per":
        value = int(per_ryser(first, cap=cap)) * int(per_ryser(second, cap=cap))
    elif mode == "det":
        value = (-1) ** m * int(_direct_det(first)) * int(_direct_det(second))
    else:
        raise ValueError(f"mode must be det or per, got {mode!r}")
    if n % 2:
        value *= M.rows[0][0]
    return M.scalar(value)


# --- dispatch ---------------------------------------------------------------

def resolve_det_engine(M: Matrix, engine: str = "auto") -> str:
    if engine not in DET_ENGINES:
        raise ValueError(f"unknown determinant engine {engine!r}")
    if engine != "auto":
        return engine
    if M.n >= 2 and has_checkerboard_support(M):
        return "checkerboard"
    if M.ctx is not None and M.ctx.is_field:
        return "field"
    return "bareiss"


def resolve_per_engine(M: Matrix, engine: str = "auto") -> str:
    if engine not in PER_ENGINES:
        raise ValueError(f"unknown permanent engine {engine!r}")
    if engine != "auto":
        return engine
    if M.n >= 2 and has_checkerboard_support(M):
        return "checkerboard"
    return "ryser"


def determinant(M: Matrix, engine: str = "auto") -> Scalar:
    engine = resolve_det_engine(M, engine)
    if engine == "field":
        return det_field(M)
    if engine == "bareiss":
        return det_exact(M)
    if engine == "naive":
        return det_naive(M)
    return factor_checkerboard(M, "det")


def permanent(M: Matrix, engine: str = "auto", cap: int = DEFAULT_PER_CAP, chunks: int = 1, jobs: int = 1) -> Scalar:
    engine = resolve_per_engine(M, engine)
    if engine == "ryser":
        return per_ryser(M, cap=cap, chunks=chunks, jobs=jobs)
    if engine == "naive":
        return per_naive(M)
    return factor_checkerboard(M, "per", cap=cap)


# --- squares ----------------------------------------------------------------

def isqrt(n: int) -> int:
    """Floor square root by Newton iteration."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def is_perfect_square(x: int) -> bool:
    if x < 0:
        return False
    r = isqrt(x)
    return r * r == x
