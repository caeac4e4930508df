import random

import pytest
import sympy

from src.engines.detper import (
    bareiss_determinant,
    det_exact,
    det_field,
    det_naive,
    determinant,
    factor_checkerboard,
    is_perfect_square,
    isqrt,
    per_naive,
    per_ryser,
    permanent,
    resolve_det_engine,
    resolve_per_engine,
    support_violations,
)
from src.matrices.matgen import (
    IndexRange,
    quad_form_matrix,
    random_checkerboard_matrix,
    random_matrix,
)
from src.matrices.matrix import Matrix
from src.numtheory.modnum import ModCtx
from src.utils.errors import InvalidModulus, OrderTooLarge, SupportViolation

ONES3 = Matrix.from_rows([[1] * 3] * 3)


@pytest.mark.parametrize("seed", range(20))
def test_bareiss_matches_sympy(seed):
    n = random.Random(seed).randint(1, 7)
    M = random_matrix(n, seed)
    assert det_exact(M) == sympy.Matrix(M.rows).det()


def test_bareiss_edge_cases():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 0], [0, 5]]) == 0
    assert bareiss_determinant([[2, 4], [1, 2]]) == 0


@pytest.mark.parametrize("c, d", [(1, 1), (2, -3), (0, 5), (-4, 7)])
def test_p3_remark_determinant(c, d):
    M = quad_form_matrix(3, c, d, IndexRange.FULL0, 1, None)
    assert det_exact(M) == -4 * c * d


@pytest.mark.parametrize("p", [2, 3, 7, 101, 2_147_483_647, 2**61 - 1])
def test_det_field_matches_bareiss(p):
    ctx = ModCtx.prime_field(p)
    for seed in range(8):
        M = random_matrix(6, seed, ctx)
        assert det_field(M) == det_exact(M)


@pytest.mark.parametrize("seed", range(10))
def test_row_swap_negates_det_and_keeps_per(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    a, b = rng.sample(range(n), 2)
    M = random_matrix(n, seed, ModCtx.prime_field(101))
    swapped = M.swap_rows(a, b)
    assert det_field(swapped) == -det_field(M)
    assert per_ryser(swapped) == per_ryser(M)

    exact = random_matrix(n, seed)
    assert det_exact(exact.swap_rows(a, b)) == -det_exact(exact)
    assert per_ryser(exact.swap_rows(a, b)) == per_ryser(exact)


def matmul(A, B, ctx=None):
    rows = [[sum(x * y for x, y in zip(row, col)) for col in zip(*B.rows)] for row in A.rows]
    return Matrix.from_rows(rows, ctx)


@pytest.mark.parametrize("p", [3, 7, 101])
def test_det_is_multiplicative(p):
    ctx = ModCtx.prime_field(p)
    for seed in range(6):
        A = random_matrix(5, seed, ctx)
        B = random_matrix(5, seed + 50, ctx)
        assert det_field(matmul(A, B, ctx)) == det_field(A) * det_field(B)

    A, B = random_matrix(4, 1), random_matrix(4, 2)
    assert det_exact(matmul(A, B)) == det_exact(A) * det_exact(B)


def test_det_field_singular_and_empty():
    ctx = ModCtx.prime_field(7)
    M = Matrix.from_rows([[1, 2], [3, 6]], ctx)
    assert det_field(M) == 0
    assert det_field(Matrix((), ctx)) == 1
    with pytest.raises(InvalidModulus):
        det_field(Matrix.from_rows([[1]], ModCtx.of(9)))


@pytest.mark.parametrize("seed", range(25))
def test_engines_agree_on_random_matrices(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    exact = random_matrix(n, seed)
    assert det_naive(exact) == det_exact(exact)
    assert per_naive(exact) == per_ryser(exact)

    ctx = ModCtx.of(rng.choice([7, 25, 101, 343, 15]))
    reduced = random_matrix(n, seed, ctx)
    assert det_naive(reduced) == det_exact(reduced)
    assert per_naive(reduced) == per_ryser(reduced)
    assert per_ryser(reduced, chunks=3) == per_ryser(reduced)


def test_ryser_reduces_into_given_context():
    M = random_matrix(5, 4)
    ctx = ModCtx.prime_field(13)
    assert per_ryser(M, ctx=ctx) == ctx.residue(int(per_naive(M)))


def test_ryser_parallel_chunks_match_serial():
    M = random_matrix(9, 1, ModCtx.prime_power(7, 2))
    assert per_ryser(M, chunks=4, jobs=2) == per_ryser(M)


def test_small_permanents():
    assert per_ryser(ONES3) == 6
    assert per_naive(ONES3) == 6
    assert per_ryser(Matrix.from_rows([[5]])) == 5
    assert per_ryser(Matrix(())) == 1


def test_ryser_cap():
    M = random_matrix(6, 0)
    with pytest.raises(OrderTooLarge) as info:
        per_ryser(M, cap=5)
    assert info.value.cap == 5


def test_ryser_rejects_even_modulus():
    with pytest.raises(InvalidModulus):
        per_ryser(Matrix.from_rows([[1, 1], [1, 1]], ModCtx.prime_field(2)))


def test_naive_cap():
    with pytest.raises(OrderTooLarge):
        det_naive(random_matrix(10, 0))


@pytest.mark.parametrize("n", range(1, 9))
def test_checkerboard_factorization(n):
    for seed in range(3):
        A = random_checkerboard_matrix(n, seed)
        assert factor_checkerboard(A, "det") == det_exact(A)
        assert factor_checkerboard(A, "per") == per_naive(A)


def test_checkerboard_factorization_modular():
    ctx = ModCtx.prime_field(11)
    A = random_checkerboard_matrix(7, 2).reduced(ctx)
    assert factor_checkerboard(A, "det") == det_exact(A)
    assert factor_checkerboard(A, "per") == per_ryser(A)


def test_support_violation():
    assert support_violations(ONES3) == [(1, 3), (2, 2), (3, 1), (3, 3)]
    with pytest.raises(SupportViolation):
        factor_checkerboard(ONES3)


def test_auto_engine_selection():
    board = random_checkerboard_matrix(6, 0)
    assert resolve_det_engine(board) == "checkerboard"
    assert resolve_per_engine(board) == "checkerboard"
    assert resolve_det_engine(ONES3) == "bareiss"
    assert resolve_per_engine(ONES3) == "ryser"
    assert resolve_det_engine(ONES3.reduced(ModCtx.prime_field(7))) == "field"
    assert resolve_det_engine(ONES3.reduced(ModCtx.of(9))) == "bareiss"


def test_dispatch_agrees():
    M = random_matrix(6, 9, ModCtx.prime_field(31))
    values = {int(determinant(M, engine)) for engine in ("field", "bareiss", "naive")}
    assert len(values) == 1
    assert permanent(M, "ryser") == permanent(M, "naive")


def test_squares():
    assert [isqrt(k) for k in (0, 1, 3, 4, 99, 100)] == [0, 1, 1, 2, 9, 10]
    assert isqrt(10**40 + 1) == 10**20
    assert is_perfect_square(0)
    assert is_perfect_square(144)
    assert not is_perfect_square(-4)
    assert not is_perfect_square(2**61)
