from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Sequence

from src.numtheory.modnum import ModCtx, Residue
from src.utils.errors import MatrixFormatError


class EntryKind(str, Enum):
    """Entry formulas of the matrix families (evaluated at row j, column k)."""

    QUAD_FORM_POW = "quadform"  # (j^2 + c j k + d k^2)^e
    INV_QUAD_FORM = "invquadform"  # 1 / (j^2 + c j k + d k^2)
    INV_DIFF = "invdiff"  # 1 / (j - k)
    RATIO_SUM_DIFF = "ratiosumdiff"  # (j + k) / (j - k)
    INV_DIFF_SQUARES = "invdiffsquares"  # 1 / (j^2 - k^2)
    RATIO_SUM_SQUARES = "ratiosumsquares"  # (j^2 + k^2) / (j^2 - k^2)
    PRIME_INDICATOR = "primeind"


class DiagonalPolicy(str, Enum):
    ZERO = "zero"
    ONE = "one"


# Kinds whose off-diagonal entries are fractions n(j,k) / d(j,k).
CAUCHY_KINDS = (
    EntryKind.INV_DIFF,
    EntryKind.RATIO_SUM_DIFF,
    EntryKind.INV_DIFF_SQUARES,
    EntryKind.RATIO_SUM_SQUARES,
)


def cauchy_fraction(kind: EntryKind, j: int, k: int) -> tuple[int, int]:
    """Exact (numerator, denominator) of a Cauchy-type term."""
    if kind is EntryKind.INV_DIFF:
        return 1, j - k
    if kind is EntryKind.RATIO_SUM_DIFF:
        return j + k, j - k
    if kind is EntryKind.INV_DIFF_SQUARES:
        return 1, j * j - k * k
    if kind is EntryKind.RATIO_SUM_SQUARES:
        return j * j + k * k, j * j - k * k
    raise ValueError(f"{kind.value} is not a Cauchy-type kind")


@dataclass(frozen=True)
class Provenance:
    """Builder tag plus the parameters that rebuild the matrix exactly."""

    builder: str
    params: tuple[tuple[str, Any], ...] = ()

    @classmethod
    def of(cls, builder: str, **params: Any) -> "Provenance":
        return cls(builder, tuple(params.items()))

    def __str__(self):
        args = " ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.builder} {args}".strip()


@dataclass(frozen=True)
class Matrix:
    """Dense square matrix; ctx None means exact-integer mode."""

    rows: tuple[tuple[int, ...], ...]
    ctx: ModCtx | None = None
    provenance: Provenance = field(default_factory=lambda: Provenance("literal"))

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise MatrixFormatError(f"matrix is not square: row of length {len(row)} in order {n}")
            if self.ctx is not None:
                for x in row:
                    if not 0 <= x < self.ctx.modulus:
                        raise MatrixFormatError(
                            f"entry {x} is not canonical modulo {self.ctx.modulus}"
                        )

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        ctx: ModCtx | None = None,
        provenance: Provenance | None = None,
    ) -> "Matrix":
        if ctx is None:
            data = tuple(tuple(int(x) for x in row) for row in rows)
        else:
            m = ctx.modulus
            data = tuple(tuple(int(x) % m for x in row) for row in rows)
        return cls(data, ctx, provenance or Provenance("literal"))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def is_exact(self) -> bool:
        return self.ctx is None

    def entry(self, i: int, j: int) -> int:
        """1-based entry a(i, j)."""
        return self.rows[i - 1][j - 1]

    def lift(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def reduced(self, ctx: ModCtx) -> "Matrix":
        return Matrix.from_rows(self.rows, ctx, self.provenance)

    def scalar(self, x: int) -> int | Residue:
        return x if self.ctx is None else self.ctx.residue(x)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        """Submatrix on 1-based row and column indices."""
        data = tuple(tuple(self.rows[i - 1][j - 1] for j in cols) for i in rows)
        tag = Provenance.of("submatrix", parent=str(self.provenance), rows=tuple(rows), cols=tuple(cols))
        return Matrix(data, self.ctx, tag)

    def swap_rows(self, a: int, b: int) -> "Matrix":
        data = list(self.rows)
        data[a], data[b] = data[b], data[a]
        return Matrix(tuple(data), self.ctx, self.provenance)

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def to_text(self) -> str:
        """Plain-text format: "n m" (m = 0 for exact mode), then n rows."""
        m = 0 if self.ctx is None else self.ctx.modulus
        lines = [f"{self.n} {m}"]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        lines = [line.split() for line in text.splitlines() if line.strip()]
        if not lines or len(lines[0]) != 2:
            raise MatrixFormatError('first line must be "n m"')
        try:
            n, m = int(lines[0][0]), int(lines[0][1])
            rows = [[int(x) for x in line] for line in lines[1:]]
        except ValueError as exc:
            raise MatrixFormatError(f"non-integer token: {exc}") from None
        if n < 0 or len(rows) != n:
            raise MatrixFormatError(f"expected {n} rows, found {len(rows)}")
        ctx = None if m == 0 else ModCtx.of(m)
        if ctx is not None and any(x < 0 for row in rows for x in row):
            raise MatrixFormatError("negative entries are only allowed in exact mode (m = 0)")
        return cls(tuple(tuple(row) for row in rows), ctx, Provenance.of("file", n=n, m=m))
