"""
Exact arithmetic over Z/m and the scalar number theory the rest of the lab uses.

Residues are canonical representatives in [0, m). Python ints are the
arbitrary-precision scalars, so nothing here ever wraps around.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from sympy import isprime, perfect_power, sieve

from src.utils.errors import InvalidModulus, NonUnitError

MAX_PRIME_POWER = 5


class ModKind(str, Enum):
    PRIME = "prime"
    PRIME_POWER = "prime-power"
    ODD_COMPOSITE = "odd-composite"


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


@dataclass(frozen=True)
class ModCtx:
    """An immutable modulus context. Safe to share between workers."""

    modulus: int
    kind: ModKind
    prime: int | None = None
    exponent: int = 1

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {self.modulus}")
        if self.kind is ModKind.PRIME:
            if not is_prime(self.modulus) or self.prime != self.modulus:
                raise InvalidModulus(f"{self.modulus} is not prime")
        elif self.kind is ModKind.PRIME_POWER:
            p, k = self.prime, self.exponent
            if p is None or p == 2 or not is_prime(p):
                raise InvalidModulus(f"prime-power base must be an odd prime, got {p}")
            if not 1 <= k <= MAX_PRIME_POWER:
                raise InvalidModulus(f"exponent {k} outside 1..{MAX_PRIME_POWER}")
            if p**k != self.modulus:
                raise InvalidModulus(f"{self.modulus} != {p}^{k}")
        elif self.modulus % 2 == 0:
            raise InvalidModulus(f"even modulus {self.modulus} is not supported")

    @classmethod
    def prime_field(cls, p: int) -> "ModCtx":
        return cls(modulus=p, kind=ModKind.PRIME, prime=p)

    @classmethod
    def prime_power(cls, p: int, k: int) -> "ModCtx":
        if k == 1:
            return cls.prime_field(p)
        return cls(modulus=p**k, kind=ModKind.PRIME_POWER, prime=p, exponent=k)

    @classmethod
    def of(cls, m: int) -> "ModCtx":
        """Classify m as prime, prime power (k <= 5) or odd composite, without factoring."""
        if m < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {m}")
        if m % 2 == 0:
            raise InvalidModulus(f"even modulus {m} is not supported")
        if is_prime(m):
            return cls.prime_field(m)
        power = perfect_power(m)
        if power:
            base, k = power
            if is_prime(base) and k <= MAX_PRIME_POWER:
                return cls.prime_power(int(base), int(k))
        # p^k with k > 5 lands here too; only Bareiss-and-reduce ever runs on it.
        return cls(modulus=m, kind=ModKind.ODD_COMPOSITE)

    @property
    def is_field(self) -> bool:
        return self.kind is ModKind.PRIME

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def residue(self, x: int) -> "Residue":
        return Residue(x % self.modulus, self)

    def describe(self) -> str:
        if self.kind is ModKind.PRIME_POWER:
            return f"{self.prime}^{self.exponent}"
        return str(self.modulus)


@dataclass(frozen=True)
class Residue:
    value: int
    ctx: ModCtx

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.modulus:
            raise ValueError(f"{self.value} is not canonical modulo {self.ctx.modulus}")

    def _coerce(self, other: "Residue | int") -> int:
        if isinstance(other, Residue):
            if other.ctx.modulus != self.ctx.modulus:
                raise InvalidModulus(
                    f"mixed moduli {self.ctx.modulus} and {other.ctx.modulus}"
                )
            return other.value
        return other

    def __add__(self, other):
        return self.ctx.residue(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ctx.residue(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self.ctx.residue(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self.ctx.residue(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.ctx.residue(-self.value)

    def __pow__(self, e: int):
        return pow_mod(self, e)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.ctx.modulus == other.ctx.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.modulus))

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _egcd(a: int, b: int) -> tuple[int, int]:
    """Return (g, x) with a*x = g (mod b)."""
    x, u, g, r = 1, 0, a, b
    while r:
        q = g // r
        g, r = r, g - q * r
        x, u = u, x - q * u
    return g, x


def inv_mod(a: int, m: int) -> int:
    g, x = _egcd(a % m, m)
    if g != 1:
        raise NonUnitError(a % m, m, g)
    return x % m


def inv(a: Residue) -> Residue:
    return Residue(inv_mod(a.value, a.ctx.modulus), a.ctx)


def pow_mod(a: Residue, e: int) -> Residue:
    if e < 0:
        raise ValueError("negative exponents go through inv()")
    # pow(0, 0, m) is already 1 for m >= 2
    return Residue(pow(a.value, e, a.ctx.modulus), a.ctx)


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InvalidModulus(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol by the reciprocity loop; n is never factored."""
    if n < 1 or n % 2 == 0:
        raise InvalidModulus(f"Jacobi symbol needs an odd positive modulus, got {n}")
    sign = 1
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def double_factorial_mod(n: int, ctx: ModCtx) -> Residue:
    acc = 1
    for k in range(n, 0, -2):
        acc = acc * k % ctx.modulus
    return ctx.residue(acc)


def harmonic2_mod(p: int) -> Residue:
    """Sum of 1/i^2 over i = 1..p-1, modulo p."""
    ctx = ModCtx.prime_field(p)
    return ctx.residue(sum(inv_mod(i * i, p) for i in range(1, p)))


def power_sum_mod(p: int, e: int) -> int:
    return sum(pow(i, e, p) for i in range(1, p)) % p


class Valuation(NamedTuple):
    """Tri-state p-adic valuation: inconclusive means x = 0 modulo p^cap."""

    value: int | None
    unit_part: Residue | None
    inconclusive: bool


def padic_valuation(x: int, p: int, cap: int) -> Valuation:
    """Valuation of x known modulo p^cap, with (x / p^v) mod p."""
    _require_odd_prime(p)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    x %= p**cap
    if x == 0:
        return Valuation(None, None, True)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return Valuation(v, ModCtx.prime_field(p).residue(x), False)


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, from sympy's Eratosthenes sieve."""
    if hi < lo:
        return []
    return [int(p) for p in sieve.primerange(max(lo, 2), hi + 1)]


def odd_between(lo: int, hi: int) -> list[int]:
    start = lo if lo % 2 else lo + 1
    return list(range(start, hi + 1, 2))
