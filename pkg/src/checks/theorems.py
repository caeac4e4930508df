"""
Checkers for the proven statements: the vanishing determinant over 0..p-1,
the p = 3 remark, the reflection identity, the D_p theorems and their
sufficient criterion, the column relation behind the proof, the cited
background congruences, and the checkerboard factorization with its
corollaries.
"""
from __future__ import annotations

from src.checks.report import CheckReport, checker, judged, not_applicable
from src.engines.detper import (
    NAIVE_CAP,
    checkerboard_blocks,
    det_exact,
    det_field,
    det_naive,
    factor_checkerboard,
    is_perfect_square,
    per_naive,
    per_ryser,
)
from src.matrices.matgen import (
    IndexRange,
    dp_matrix,
    inverse_form_matrix,
    poly_eval_matrix,
    prime_indicator_matrix,
    quad_form_matrix,
    random_checkerboard_matrix,
    random_matrix,
    random_polynomial,
    random_skew_checkerboard_matrix,
)
from src.matrices.matrix import Matrix
from src.numtheory.modnum import (
    ModCtx,
    Residue,
    harmonic2_mod,
    inv_mod,
    is_prime,
    legendre,
    power_sum_mod,
)
from src.utils.config import Settings, get_settings

DP_VARIANTS = ("c_minus1", "two_two", "six_six", "criterion")
BACKGROUND_KINDS = ("half_range_sq", "full_range_ij")
CHECKERBOARD_VARIANTS = ("general", "symmetric", "skew")


def is_odd_prime(p: int) -> bool:
    return p > 2 and is_prime(p)


def dp_value(p: int, c: int, d: int) -> Residue:
    """D_p(c, d) modulo p."""
    return det_field(dp_matrix(p, c, d))


@checker("eq15")
def check_det_zero_mod_p(p: int, c: int, d: int) -> CheckReport:
    params = {"p": p, "c": c, "d": d}
    if not is_odd_prime(p):
        return not_applicable("eq15", params, "p must be an odd prime")
    if p == 3:
        exact = det_exact(quad_form_matrix(3, c, d, IndexRange.FULL0, 1, None))
        return not_applicable("eq15", params, "p = 3 follows the -4cd remark instead", computed=exact)
    value = det_field(quad_form_matrix(p, c, d, IndexRange.FULL0, p - 2, ModCtx.prime_field(p)))
    return judged("eq15", params, value, 0, value == 0)


@checker("p3-remark")
def check_p3_remark(c: int, d: int) -> CheckReport:
    value = det_exact(quad_form_matrix(3, c, d, IndexRange.FULL0, 1, None))
    expected = -4 * c * d
    return judged("p3-remark", {"c": c, "d": d}, value, expected, value == expected)


@checker("reflection")
def check_reflection(p: int, c: int, d: int) -> CheckReport:
    params = {"p": p, "c": c, "d": d}
    if not is_odd_prime(p):
        return not_applicable("reflection", params, "p must be an odd prime")
    forward = dp_value(p, c, d)
    reflected = dp_value(p, -c, d)
    expected = legendre(-1, p) * forward
    return judged(
        "reflection",
        params,
        reflected,
        expected,
        reflected == expected,
        detail=f"D_p(c,d) = {forward}, D_p(-c,d) = {reflected}",
    )


@checker("dp-theorem")
def check_dp_theorem(p: int, variant: str, c: int = 1, d: int | None = None) -> CheckReport:
    params: dict = {"p": p, "variant": variant}
    if variant not in DP_VARIANTS:
        raise ValueError(f"unknown D_p variant {variant!r}")
    if variant == "c_minus1":
        params["c"] = c
        form = (c, -1)
    elif variant == "criterion":
        if d is None:
            raise ValueError("the criterion variant needs both c and d")
        params.update(c=c, d=d)
        form = (c, d)
    else:
        form = (2, 2) if variant == "two_two" else (6, 6)

    if not is_prime(p) or p <= 3:
        return not_applicable("dp-theorem", params, "needs a prime p > 3")
    if variant in ("c_minus1", "two_two") and p % 4 != 3:
        return not_applicable("dp-theorem", params, "needs p = 3 (mod 4)")
    if variant == "six_six" and p % 12 not in (1, 11):
        return not_applicable("dp-theorem", params, "needs p = +-1 (mod 12)")
    if variant == "criterion":
        disc = c * c - 4 * d
        if (d * disc) % p == 0:
            return not_applicable("dp-theorem", params, "needs p not dividing d(c^2-4d)")
        lhs = disc * inv_mod(2 * d, p) % p
        if lhs != legendre(disc, p) % p:
            return not_applicable("dp-theorem", params, "(c^2-4d)/(2d) differs from ((c^2-4d)/p)")

    value = dp_value(p, *form)
    return judged("dp-theorem", params, value, 0, value == 0)


def _quad_columns(p: int, c: int, d: int) -> tuple[list[list[int]], int]:
    rows = quad_form_matrix(p, c, d, IndexRange.FULL0, p - 2, ModCtx.prime_field(p)).rows
    coeff = (1 - 2 * d * pow((c * c - 4 * d) % p, (p - 3) // 2, p)) % p
    return [list(r) for r in rows], coeff


@checker("column-relation")
def check_column_relation(p: int, c: int, d: int) -> CheckReport:
    """(1 - 2d(c^2-4d)^((p-3)/2)) a_0j + sum_{i>=1} a_ij = 0 (mod p) for every column j."""
    params = {"p": p, "c": c, "d": d}
    if not is_prime(p) or p <= 3:
        return not_applicable("column-relation", params, "needs a prime p > 3")
    if d % p == 0:
        return not_applicable("column-relation", params, "needs p not dividing d")
    rows, coeff = _quad_columns(p, c, d)
    bad = [
        j
        for j in range(p)
        if (coeff * rows[0][j] + sum(rows[i][j] for i in range(1, p))) % p
    ]
    detail = f"violating columns {bad}" if bad else ""
    return judged("column-relation", params, len(bad), 0, not bad, detail)


@checker("column-sum")
def check_column_sum(p: int, c: int, d: int) -> CheckReport:
    """sum_{i=0}^{p-1} a_ij = (2/j^2)(c^2-4d)^((p-3)/2) (mod p) for j = 1..p-1."""
    params = {"p": p, "c": c, "d": d}
    if not is_prime(p) or p <= 3:
        return not_applicable("column-sum", params, "needs a prime p > 3")
    if d % p == 0:
        return not_applicable("column-sum", params, "needs p not dividing d")
    rows, _ = _quad_columns(p, c, d)
    power = pow((c * c - 4 * d) % p, (p - 3) // 2, p)
    bad = [
        j
        for j in range(1, p)
        if (sum(rows[i][j] for i in range(p)) - 2 * inv_mod(j * j, p) * power) % p
    ]
    detail = f"violating columns {bad}" if bad else ""
    return judged("column-sum", params, len(bad), 0, not bad, detail)


@checker("background")
def check_background(p: int, which: str) -> CheckReport:
    params = {"p": p, "which": which}
    if which not in BACKGROUND_KINDS:
        raise ValueError(f"unknown background congruence {which!r}")
    if not is_odd_prime(p):
        return not_applicable("background", params, "p must be an odd prime")
    ctx = ModCtx.prime_field(p)
    if which == "half_range_sq":
        if p % 4 != 3:
            return not_applicable("background", params, "needs p = 3 (mod 4)")
        M = inverse_form_matrix(0, 1, range(1, (p - 1) // 2 + 1), ctx)
    else:
        if p % 3 != 2:
            return not_applicable("background", params, "needs p = 2 (mod 3)")
        M = inverse_form_matrix(-1, 1, range(1, p), ctx)
    value = det_field(M)
    symbol = legendre(2, p)
    expected = ctx.residue(symbol)
    return judged("background", params, value, expected, value == expected, f"(2/p) = {symbol}")


@checker("wolstenholme")
def check_wolstenholme(p: int) -> CheckReport:
    params = {"p": p}
    if not is_prime(p) or p <= 3:
        return not_applicable("wolstenholme", params, "needs a prime p > 3")
    value = harmonic2_mod(p)
    return judged("wolstenholme", params, value, 0, value == 0)


@checker("power-sums")
def check_power_sums(p: int) -> CheckReport:
    """sum_{i=1}^{p-1} i^e is -1 (mod p) when (p-1) | e and 0 otherwise."""
    params = {"p": p}
    if not is_odd_prime(p):
        return not_applicable("power-sums", params, "p must be an odd prime")
    bad = [
        e
        for e in range(1, 2 * (p - 1) + 1)
        if power_sum_mod(p, e) != (p - 1 if e % (p - 1) == 0 else 0)
    ]
    detail = f"violating exponents {bad}" if bad else ""
    return judged("power-sums", params, len(bad), 0, not bad, detail)


def _direct(A, mode: str, cap: int) -> int:
    if A.n <= NAIVE_CAP:
        return int(det_naive(A) if mode == "det" else per_naive(A))
    return int(det_exact(A) if mode == "det" else per_ryser(A, cap=cap))


@checker("checkerboard")
def check_checkerboard(
    n: int,
    seed: int,
    variant: str = "general",
    mode: str = "det",
    settings: Settings | None = None,
) -> CheckReport:
    """Factorization identity on a seeded supported matrix, plus the corollary squares."""
    settings = settings or get_settings()
    cap = settings.engines.max_per_n
    params = {"n": n, "seed": seed, "variant": variant, "mode": mode}
    if variant not in CHECKERBOARD_VARIANTS or mode not in ("det", "per"):
        raise ValueError(f"unknown checkerboard variant/mode {variant!r}/{mode!r}")
    if variant == "skew" and n % 2:
        # odd skew-symmetric: per(A) = per(-A^T) = -per(A), same for det
        B = random_matrix(n, seed)
        A = Matrix.from_rows([[B.entry(i, j) - B.entry(j, i) for j in range(1, n + 1)] for i in range(1, n + 1)])
        value = _direct(A, mode, cap)
        return judged("checkerboard", params, value, 0, value == 0, "odd skew-symmetric order")
    if variant == "skew":
        A = random_skew_checkerboard_matrix(n // 2, seed)
    else:
        A = random_checkerboard_matrix(n, seed, symmetric=variant == "symmetric")

    direct = _direct(A, mode, cap)
    factored = int(factor_checkerboard(A, mode, cap=cap))
    problems = []
    if direct != factored:
        problems.append("factorization mismatch")

    if variant != "general":
        m = n // 2
        block, _ = checkerboard_blocks(A)
        half = int(det_exact(block)) if mode == "det" else int(per_ryser(block, cap=cap))
        a11 = A.entry(1, 1) if n % 2 else 1
        if variant == "symmetric":
            lhs = direct if mode == "per" else (-1) ** m * direct
            if lhs != a11 * half * half:
                problems.append("symmetric corollary square fails")
            if mode == "det" and not is_perfect_square(abs(direct)):
                problems.append("|det| with square a11 is not a perfect square")
        else:
            lhs = direct if mode == "det" else (-1) ** m * direct
            if lhs != half * half:
                problems.append("skew corollary square fails")
            if mode == "det" and not is_perfect_square(direct):
                problems.append("skew determinant is not a perfect square")

    return judged("checkerboard", params, direct, factored, not problems, "; ".join(problems))


@checker("prime-indicator")
def check_prime_indicator(n: int) -> CheckReport:
    params = {"n": n}
    if n < 1:
        return not_applicable("prime-indicator", params, "needs n >= 1")
    A = prime_indicator_matrix(n)
    value = int(det_exact(A))
    factored = int(factor_checkerboard(A, "det"))
    problems = []
    if not is_perfect_square(abs(value)):
        problems.append("|det| is not a perfect square")
    if factored != value:
        problems.append(f"factorization gives {factored}")
    return judged("prime-indicator", params, value, "|det| a perfect square", not problems, "; ".join(problems))


@checker("poly-degeneracy")
def check_poly_degeneracy(n: int, seed: int) -> CheckReport:
    params = {"n": n, "seed": seed}
    if n < 2:
        return not_applicable("poly-degeneracy", params, "needs n >= 2")
    P = random_polynomial(n, seed)
    value = int(det_exact(poly_eval_matrix(P, n)))
    return judged("poly-degeneracy", params, value, 0, value == 0, "" if value == 0 else f"P = {P}")

