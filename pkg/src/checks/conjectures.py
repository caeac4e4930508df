"""
Checkers for the open congruences C1..C10.

Each part runs only where its hypotheses hold (otherwise not-applicable)
and only below the configured size gates (otherwise inconclusive).
"""
from __future__ import annotations

from typing import Callable

from src.checks.report import CheckReport, checker, inconclusive, judged, not_applicable
from src.checks.theorems import dp_value, is_odd_prime
from src.engines.detper import det_exact, per_ryser
from src.matrices.matgen import IndexRange, cauchy_index_set, cauchy_type_matrix, quad_form_matrix
from src.matrices.matrix import DiagonalPolicy, EntryKind, Matrix
from src.numtheory.modnum import (
    ModCtx,
    Residue,
    double_factorial_mod,
    inv_mod,
    is_prime,
    jacobi,
    legendre,
    padic_valuation,
)
from src.utils.config import Settings, get_settings

CONJECTURE_IDS = tuple(range(1, 11))


def _permanent(M: Matrix, settings: Settings) -> Residue:
    engines = settings.engines
    return per_ryser(M, cap=engines.max_per_n, chunks=engines.ryser_chunks, jobs=engines.ryser_jobs)


def _per_gate(check_id: str, p: int, limit: int) -> CheckReport | None:
    if p > limit:
        return inconclusive(check_id, {"p": p}, f"p = {p} is above the permanent gate {limit}")
    return None


def _cauchy(kind: EntryKind, p: int, index_set: str, ctx: ModCtx) -> Matrix:
    return cauchy_type_matrix(kind, cauchy_index_set(index_set, p), DiagonalPolicy.ONE, ctx)


@checker("conj1")
def check_conj1(n: int, c: int, d: int) -> CheckReport:
    """det[(i^2 + c ij + d j^2)^(n-2)] over 0..n-1 vanishes mod n^2 when (d/n) = -1."""
    params = {"n": n, "c": c, "d": d}
    if n <= 3 or n % 2 == 0:
        return not_applicable("conj1", params, "needs odd n > 3")
    if jacobi(d, n) != -1:
        return not_applicable("conj1", params, "needs (d/n) = -1")
    ctx = ModCtx.of(n * n)
    value = det_exact(quad_form_matrix(n, c, d, IndexRange.FULL0, n - 2, ctx))
    return judged("conj1", params, value, 0, value == 0, f"mod {ctx.describe()}")


@checker("conj2")
def check_conj2(p: int, settings: Settings | None = None) -> CheckReport:
    params = {"p": p}
    if not is_odd_prime(p) or p % 4 != 1 or p % 5 not in (2, 3):
        return not_applicable("conj2", params, "needs p = 1 (mod 4) and p = +-2 (mod 5)")
    D = dp_value(p, 1, -1)
    symbol = legendre(int(D), p)
    return judged("conj2", params, symbol, 1, symbol == 1, f"D_p(1,-1) = {D}")


@checker("conj3")
def check_conj3(p: int, settings: Settings | None = None) -> CheckReport:
    params = {"p": p}
    if not is_odd_prime(p):
        return not_applicable("conj3", params, "p must be an odd prime")
    D = dp_value(p, 2, -1)
    symbol = legendre(int(D), p)
    minus = p % 8 == 5
    expected = "-1" if minus else "0 or 1"
    return judged("conj3", params, symbol, expected, (symbol == -1) == minus, f"D_p(2,-1) = {D}")


@checker("conj4")
def check_conj4(p: int, settings: Settings | None = None) -> CheckReport:
    params = {"p": p}
    if not is_odd_prime(p) or p % 5 not in (2, 3):
        return not_applicable("conj4", params, "needs p = +-2 (mod 5)")
    D = dp_value(p, 3, 1)
    symbol = legendre(int(D), p)
    expected = legendre(6, p) if p % 4 == 1 else 0
    return judged("conj4", params, symbol, expected, symbol == expected, f"D_p(3,1) = {D}")


@checker("conj5.per")
def check_conj5_per(p: int, settings: Settings | None = None) -> CheckReport:
    settings = settings or get_settings()
    if not is_odd_prime(p):
        return not_applicable("conj5.per", {"p": p}, "p must be an odd prime")
    gated = _per_gate("conj5.per", p, settings.gates.per_pmax_large)
    if gated:
        return gated
    ctx = ModCtx.prime_power(p, 2)
    M = cauchy_type_matrix(EntryKind.INV_DIFF, range(1, p), DiagonalPolicy.ZERO, ctx)
    value = _permanent(M, settings)
    expected = ctx.residue(legendre(-1, p))
    return judged("conj5.per", {"p": p}, value, expected, value == expected)


@checker("conj5.det")
def check_conj5_det(p: int, settings: Settings | None = None) -> CheckReport:
    if not is_odd_prime(p):
        return not_applicable("conj5.det", {"p": p}, "p must be an odd prime")
    ctx = ModCtx.prime_power(p, 2)
    M = cauchy_type_matrix(EntryKind.INV_DIFF, range(1, p), DiagonalPolicy.ZERO, ctx)
    value = det_exact(M)
    return judged("conj5.det", {"p": p}, value, 1, value == 1)


@checker("conj6.i")
def check_conj6_per(p: int, settings: Settings | None = None) -> CheckReport:
    settings = settings or get_settings()
    if not is_odd_prime(p):
        return not_applicable("conj6.i", {"p": p}, "p must be an odd prime")
    gated = _per_gate("conj6.i", p, settings.gates.per_pmax_large)
    if gated:
        return gated
    ctx = ModCtx.prime_field(p)
    M = cauchy_type_matrix(EntryKind.RATIO_SUM_DIFF, range(1, p), DiagonalPolicy.ZERO, ctx)
    value = _permanent(M, settings)
    expected = ctx.residue(1 - 2 * legendre(-1, p))
    return judged("conj6.i", {"p": p}, value, expected, value == expected)


@checker("conj6.ii")
def check_conj6_det(p: int, settings: Settings | None = None) -> CheckReport:
    """det / p^(3-(-1/p)) must be a quadratic residue mod p."""
    settings = settings or get_settings()
    params = {"p": p}
    if not is_prime(p) or p <= 3:
        return not_applicable("conj6.ii", params, "needs a prime p > 3")
    cap = settings.gates.valuation_cap
    ctx = ModCtx.prime_power(p, cap)
    M = cauchy_type_matrix(EntryKind.RATIO_SUM_DIFF, range(1, p), DiagonalPolicy.ZERO, ctx)
    x = int(det_exact(M))
    val = padic_valuation(x, p, cap)
    exponent = 3 - legendre(-1, p)
    expected = f"v_p = {exponent}, unit part a quadratic residue"
    if val.inconclusive:
        return inconclusive("conj6.ii", params, f"determinant vanishes modulo p^{cap}", computed=x)
    symbol = legendre(int(val.unit_part), p)
    detail = f"v_p = {val.value}, unit part {val.unit_part}, symbol {symbol}"
    ok = val.value == exponent and symbol == 1
    return judged("conj6.ii", params, x, expected, ok, detail)


@checker("conj7.full")
def check_conj7_full(p: int, settings: Settings | None = None) -> CheckReport:
    settings = settings or get_settings()
    if not is_odd_prime(p):
        return not_applicable("conj7.full", {"p": p}, "p must be an odd prime")
    gated = _per_gate("conj7.full", p, settings.gates.per_pmax_small)
    if gated:
        return gated
    ctx = ModCtx.prime_field(p)
    value = _permanent(_cauchy(EntryKind.INV_DIFF, p, "p-1", ctx), settings)
    expected = ctx.residue(1 + legendre(-1, p))
    return judged("conj7.full", {"p": p}, value, expected, value == expected)


@checker("conj7.half")
def check_conj7_half(p: int, settings: Settings | None = None) -> CheckReport:
    settings = settings or get_settings()
    if not is_odd_prime(p) or p % 4 != 3:
        return not_applicable("conj7.half", {"p": p}, "needs p = 3 (mod 4)")
    ctx = ModCtx.prime_field(p)
    value = _permanent(_cauchy(EntryKind.INV_DIFF_SQUARES, p, "half", ctx), settings)
    return judged("conj7.half", {"p": p}, value, 1, value == 1)


@checker("conj8.per")
def check_conj8_per(p: int, settings: Settings | None = None) -> CheckReport:
    settings = settings or get_settings()
    if not is_odd_prime(p):
        return not_applicable("conj8.per", {"p": p}, "p must be an odd prime")
    gated = _per_gate("conj8.per", p, settings.gates.per_pmax_small)
    if gated:
        return gated
    ctx = ModCtx.prime_field(p)
    value = _permanent(_cauchy(EntryKind.RATIO_SUM_DIFF, p, "p", ctx), settings)
    expected = ctx.residue(1 - legendre(-1, p))
    return judged("conj8.per", {"p": p}, value, expected, value == expected)


@checker("conj8.det")
def check_conj8_det(p: int, settings: Settings | None = None) -> CheckReport:
    if not is_odd_prime(p):
        return not_applicable("conj8.det", {"p": p}, "p must be an odd prime")
    ctx = ModCtx.prime_power(p, 2)
    value = det_exact(_cauchy(EntryKind.RATIO_SUM_DIFF, p, "p", ctx))
    expected = ctx.residue(-p * inv_mod(2, ctx.modulus))
    return judged("conj8.det", {"p": p}, value, expected, value == expected)


@checker("conj9.per")
def check_conj9_per(p: int, settings: Settings | None = None) -> CheckReport:
    settings = settings or get_settings()
    if not is_odd_prime(p):
        return not_applicable("conj9.per", {"p": p}, "p must be an odd prime")
    gated = _per_gate("conj9.per", p, settings.gates.per_pmax_small)
    if gated:
        return gated
    ctx = ModCtx.prime_power(p, 2)
    value = _permanent(_cauchy(EntryKind.RATIO_SUM_DIFF, p, "p-1", ctx), settings)
    df = double_factorial_mod(p - 2, ctx)
    expected = df * df
    return judged("conj9.per", {"p": p}, value, expected, value == expected)


@checker("conj9.det")
def check_conj9_det(p: int, settings: Settings | None = None) -> CheckReport:
    if not is_odd_prime(p):
        return not_applicable("conj9.det", {"p": p}, "p must be an odd prime")
    ctx = ModCtx.prime_power(p, 2)
    value = det_exact(_cauchy(EntryKind.RATIO_SUM_DIFF, p, "p-1", ctx))
    df = double_factorial_mod(p - 2, ctx)
    sign = -1 if ((p + 1) // 2) % 2 else 1
    expected = df * df * (sign * inv_mod(p - 2, ctx.modulus))
    return judged("conj9.det", {"p": p}, value, expected, value == expected)


def _conj10_det(p: int) -> int:
    ctx = ModCtx.prime_power(p, 3)
    return int(det_exact(_cauchy(EntryKind.RATIO_SUM_SQUARES, p, "half", ctx)))


@checker("conj10.p2")
def check_conj10_p2(p: int, settings: Settings | None = None) -> CheckReport:
    if not is_prime(p) or p <= 3 or p % 4 != 3:
        return not_applicable("conj10.p2", {"p": p}, "needs a prime p > 3 with p = 3 (mod 4)")
    x = _conj10_det(p)
    return judged("conj10.p2", {"p": p}, x, "0 mod p^2", x % (p * p) == 0, "mod p^3")


@checker("conj10.p3")
def check_conj10_p3(p: int, settings: Settings | None = None) -> CheckReport:
    if not is_prime(p) or p <= 3 or p % 8 != 7:
        return not_applicable("conj10.p3", {"p": p}, "needs p = 7 (mod 8)")
    x = _conj10_det(p)
    return judged("conj10.p3", {"p": p}, x, 0, x == 0, "mod p^3")


CONJECTURE_PARTS: dict[int, tuple[Callable[..., CheckReport], ...]] = {
    2: (check_conj2,),
    3: (check_conj3,),
    4: (check_conj4,),
    5: (check_conj5_per, check_conj5_det),
    6: (check_conj6_per, check_conj6_det),
    7: (check_conj7_full, check_conj7_half),
    8: (check_conj8_per, check_conj8_det),
    9: (check_conj9_per, check_conj9_det),
    10: (check_conj10_p2, check_conj10_p3),
}


def conjecture_part_ids(conj_id: int) -> list[str]:
    if conj_id == 1:
        return [check_conj1.check_id]
    return [f.check_id for f in CONJECTURE_PARTS[conj_id]]


def check_conjecture(
    conj_id: int,
    p: int | None = None,
    n: int | None = None,
    c: int = 0,
    d: int = -1,
    settings: Settings | None = None,
) -> list[CheckReport]:
    """Every part of conjecture conj_id at one index, one record per part."""
    if conj_id not in CONJECTURE_IDS:
        raise ValueError(f"conjecture id must be in 1..10, got {conj_id}")
    if conj_id == 1:
        order = n if n is not None else p
        if order is None:
            raise ValueError("conjecture 1 needs n")
        return [check_conj1(order, c, d)]
    if p is None:
        raise ValueError(f"conjecture {conj_id} needs p")
    return [part(p, settings=settings) for part in CONJECTURE_PARTS[conj_id]]

