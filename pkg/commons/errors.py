from typing import Optional


class OrbitMethodError(Exception):
    """Base class for every error raised by the orbit-method toolkit"""


class DimensionMismatch(OrbitMethodError):
    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} has length {actual}, expected {expected}")


class JacobiViolation(OrbitMethodError):
    def __init__(self, i: int, j: int, k: int):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")


class NotNilpotent(OrbitMethodError):
    def __init__(self, stalled_dim: int):
        self.stalled_dim = stalled_dim
        super().__init__(f"lower central series stalls at a term of dimension {stalled_dim}")


class NotAnIdeal(OrbitMethodError):
    pass


class NotClosed(OrbitMethodError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"bracket of basis elements {i} and {j} leaves the subspace")


class AlgebraMismatch(OrbitMethodError):
    pass


class NotAFlag(OrbitMethodError):
    pass


class NotIdeals(OrbitMethodError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"flag term {position} is not an ideal")


class WrongDepth(OrbitMethodError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"functional has depth {actual}, expected {expected}")


class TrivialFunctional(OrbitMethodError):
    pass


class NotHorizontal(OrbitMethodError):
    pass


class NotDiagonalAction(OrbitMethodError):
    pass


class InexactExponential(OrbitMethodError):
    pass


class CatalogError(OrbitMethodError):
    pass


class UnknownCaseSet(OrbitMethodError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown case set '{name}'")


class ParseError(OrbitMethodError):
    def __init__(self, field: str, detail: str, line: Optional[int] = None):
        self.field = field
        self.detail = detail
        self.line = line
        location = f"line {line}, " if line is not None else ""
        super().__init__(f"{location}field '{field}': {detail}")
