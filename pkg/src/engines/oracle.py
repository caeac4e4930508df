"""
Brute-force permutation sums for tiny orders.

The oracle never builds a matrix: each term is the exact fraction of its
entry formula, the product over a permutation is kept as N/D, and only then
lifted into the modulus. It anchors the zero-diagonal and unit-diagonal
reductions used by the conjecture checkers.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterator, NamedTuple

from src.engines.detper import det_exact, per_ryser
from src.matrices.matgen import cauchy_type_matrix
from src.matrices.matrix import CAUCHY_KINDS, DiagonalPolicy, EntryKind, cauchy_fraction
from src.numtheory.modnum import ModCtx, Residue, inv_mod
from src.utils.errors import NonUnitDenominator, OrderTooLarge

ORACLE_CAP = 9


class Domain(str, Enum):
    ALL = "all"
    DERANGEMENTS = "derangements"


class ProductRule(str, Enum):
    ALL_POSITIONS = "all"
    SKIP_FIXED_POINTS = "skip-fixed"


@dataclass(frozen=True)
class OracleSpec:
    """One permutation sum over the index set, term evaluated at (j, tau(j))."""

    indices: range
    signed: bool
    domain: Domain
    product_rule: ProductRule
    term: EntryKind
    ctx: ModCtx

    def __post_init__(self):
        if EntryKind(self.term) not in CAUCHY_KINDS:
            raise ValueError(f"{self.term} has no fraction form for the oracle")
        if self.domain is Domain.ALL and self.product_rule is ProductRule.ALL_POSITIONS:
            # Fixed points would hit the zero denominator j - j.
            raise ValueError("summing over all of S_n needs the skip-fixed-points rule")

    @property
    def n(self) -> int:
        return len(self.indices)

    @property
    def diagonal(self) -> DiagonalPolicy:
        return DiagonalPolicy.ZERO if self.domain is Domain.DERANGEMENTS else DiagonalPolicy.ONE


class OracleResult(NamedTuple):
    value: Residue
    visited: int
    contributing: int


def lexicographic_permutations(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """(permutation of 0..n-1, sign) in lexicographic order.

    A next-permutation step is one swap plus a suffix reversal of length L,
    so the inversion parity flips 1 + L // 2 times.
    """
    perm = list(range(n))
    sign = 1
    while True:
        yield tuple(perm), sign
        i = n - 2
        while i >= 0 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        perm[i], perm[j] = perm[j], perm[i]
        perm[i + 1 :] = reversed(perm[i + 1 :])
        if (1 + (n - 1 - i) // 2) % 2:
            sign = -sign


def evaluate(spec: OracleSpec) -> OracleResult:
    n = spec.n
    if n > ORACLE_CAP:
        raise OrderTooLarge(n, ORACLE_CAP, "oracle enumerates n! permutations")
    idx = list(spec.indices)
    term = EntryKind(spec.term)
    m = spec.ctx.modulus
    total = 0
    visited = contributing = 0
    for perm, sign in lexicographic_permutations(n):
        visited += 1
        if spec.domain is Domain.DERANGEMENTS and any(perm[t] == t for t in range(n)):
            continue
        contributing += 1
        num, den = 1, 1
        for t in range(n):
            if perm[t] == t:
                continue
            a, b = cauchy_fraction(term, idx[t], idx[perm[t]])
            num *= a
            den *= b
            g = gcd(num, den)
            num //= g
            den //= g
        if gcd(den, m) != 1:
            raise NonUnitDenominator(idx[0], idx[perm[0]], den, m)
        value = num * inv_mod(den, m)
        total += sign * value if spec.signed else value
    return OracleResult(spec.ctx.residue(total), visited, contributing)


def permutation_sum(spec: OracleSpec) -> Residue:
    return evaluate(spec).value


def reduction_check(spec: OracleSpec) -> bool:
    """True iff the oracle sum equals det/per of the matching Cauchy-type matrix."""
    M = cauchy_type_matrix(spec.term, spec.indices, spec.diagonal, spec.ctx)
    engine_value = det_exact(M) if spec.signed else per_ryser(M)
    return permutation_sum(spec) == engine_value
