class CongruenceLabError(Exception):
    """Base class for every error raised by the workbench."""


class InvalidModulus(CongruenceLabError):
    pass


class InvalidConfig(CongruenceLabError):
    pass


class MatrixFormatError(CongruenceLabError):
    pass


class NonUnitError(CongruenceLabError):
    def __init__(self, value: int, modulus: int, gcd: int):
        self.value = value
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"{value} is not a unit modulo {modulus} (gcd = {gcd})")


class NonUnitDenominator(CongruenceLabError):
    """A builder or the oracle met a denominator that is not invertible."""

    def __init__(self, j: int, k: int, denominator: int, modulus: int):
        self.j = j
        self.k = k
        self.denominator = denominator
        self.modulus = modulus
        super().__init__(
            f"denominator {denominator} at ({j},{k}) is not a unit modulo {modulus}"
        )


class OrderTooLarge(CongruenceLabError):
    def __init__(self, n: int, cap: int, detail: str = ""):
        self.n = n
        self.cap = cap
        message = f"order {n} exceeds cap {cap}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class SupportViolation(CongruenceLabError):
    """Nonzero entries where i+j is even and greater than two (1-based cells)."""

    def __init__(self, cells: list[tuple[int, int]]):
        self.cells = cells
        shown = ", ".join(f"({i},{j})" for i, j in cells[:10])
        more = f" and {len(cells) - 10} more" if len(cells) > 10 else ""
        super().__init__(f"checkerboard support violated at {shown}{more}")
