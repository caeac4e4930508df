import pytest
from sympy.functions.combinatorial.numbers import jacobi_symbol, legendre_symbol

from src.numtheory.modnum import (
    ModCtx,
    ModKind,
    double_factorial_mod,
    harmonic2_mod,
    inv,
    inv_mod,
    jacobi,
    legendre,
    odd_between,
    padic_valuation,
    pow_mod,
    power_sum_mod,
    primes_between,
)
from src.utils.errors import InvalidModulus, NonUnitError


@pytest.mark.parametrize(
    "m, kind, prime, exponent",
    [
        (7, ModKind.PRIME, 7, 1),
        (25, ModKind.PRIME_POWER, 5, 2),
        (3**5, ModKind.PRIME_POWER, 3, 5),
        (3**6, ModKind.ODD_COMPOSITE, None, 1),
        (15, ModKind.ODD_COMPOSITE, None, 1),
    ],
)
def test_modulus_classification(m, kind, prime, exponent):
    ctx = ModCtx.of(m)
    assert ctx.kind is kind
    assert ctx.prime == prime
    assert ctx.exponent == exponent
    assert ctx.is_field == (kind is ModKind.PRIME)


@pytest.mark.parametrize("m", [0, 1, 2, 4, 12])
def test_rejected_moduli(m):
    with pytest.raises(InvalidModulus):
        ModCtx.of(m)


def test_prime_power_exponent_limit():
    with pytest.raises(InvalidModulus):
        ModCtx.prime_power(5, 6)


def test_residue_arithmetic():
    ctx = ModCtx.prime_field(7)
    a = ctx.residue(3)
    assert a + 5 == 1
    assert 5 - a == 2
    assert a * a == 2
    assert -a == 4
    assert a**6 == 1
    assert inv(a) * a == 1
    assert int(ctx.residue(-1)) == 6
    with pytest.raises(InvalidModulus):
        a + ModCtx.prime_field(11).residue(1)


def test_inverse_of_non_unit():
    assert inv_mod(3, 7) == 5
    assert inv_mod(2, 25) == 13
    with pytest.raises(NonUnitError) as info:
        inv_mod(10, 25)
    assert info.value.gcd == 5


@pytest.mark.parametrize("p", primes_between(2, 100))
def test_fermat_inverse_agrees_with_euclid(p):
    ctx = ModCtx.prime_field(p)
    for x in range(1, p):
        a = ctx.residue(x)
        assert pow_mod(a, p - 2) == inv(a)


def test_inverse_modulo_prime_power():
    ctx = ModCtx.of(25)
    assert inv(ctx.residue(3)) == 17
    assert inv_mod(3, 25) == 17
    assert ctx.residue(3) * 17 == 1


def test_zero_to_the_zero():
    for m in (7, 25, 15):
        assert pow_mod(ModCtx.of(m).residue(0), 0) == 1
    with pytest.raises(ValueError):
        pow_mod(ModCtx.of(7).residue(2), -1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_legendre_matches_sympy(p):
    for a in range(p):
        assert legendre(a, p) == legendre_symbol(a, p)
    assert legendre(-1, p) == (1 if p % 4 == 1 else -1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 29, 47])
def test_legendre_is_multiplicative(p):
    for a in range(p):
        for b in range(p):
            assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 29, 47, 97])
def test_half_the_units_are_residues(p):
    symbols = [legendre(a, p) for a in range(1, p)]
    assert symbols.count(1) == symbols.count(-1) == (p - 1) // 2


def test_legendre_needs_odd_prime():
    with pytest.raises(InvalidModulus):
        legendre(1, 9)


@pytest.mark.parametrize("n", [1, 3, 9, 15, 21, 25, 45, 49, 51])
def test_jacobi_matches_sympy(n):
    for a in range(n):
        assert jacobi(a, n) == jacobi_symbol(a, n)


def test_jacobi_negative_numerator():
    assert jacobi(-1, 5) == 1
    assert jacobi(-1, 7) == -1
    assert jacobi(2, 15) == 1


def test_double_factorial():
    ctx = ModCtx.prime_power(5, 2)
    assert double_factorial_mod(3, ctx) == 3
    assert double_factorial_mod(5, ctx) == 15
    assert double_factorial_mod(11, ModCtx.prime_power(13, 2)) == 10395 % 169


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_wolstenholme_sum(p):
    assert harmonic2_mod(p) == 0


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_power_sums(p):
    for e in range(1, 3 * (p - 1)):
        assert power_sum_mod(p, e) == (p - 1 if e % (p - 1) == 0 else 0)


def test_padic_valuation():
    v = padic_valuation(50, 5, 5)
    assert (v.value, int(v.unit_part), v.inconclusive) == (2, 2, False)
    assert padic_valuation(0, 5, 3).inconclusive
    assert padic_valuation(5**5, 5, 5).inconclusive
    assert padic_valuation(-7, 7, 2).value == 1


def test_index_generators():
    assert primes_between(1, 20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_between(10, 9) == []
    assert primes_between(24, 28) == []
    assert odd_between(4, 9) == [5, 7, 9]
