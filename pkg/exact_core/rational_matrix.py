from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from commons.errors import DimensionMismatch

Vector = Tuple[Fraction, ...]


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, index: int) -> Vector:
    return tuple(Fraction(1 if i == index else 0) for i in range(n))


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(len(u), len(v))
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(len(u), len(v))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact rationals"""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(self.rows * self.cols, len(self.entries), "entries")
        object.__setattr__(self, 'entries', vector(self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> 'Matrix':
        """
        Build a matrix from a list of rows

        Args:
            rows: the rows, all of equal length
            cols: column count, needed only when rows is empty
        """
        if cols is None:
            if not rows:
                raise ValueError("column count is required for a matrix without rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch(cols, len(row), "row")
        return cls(len(rows), cols, tuple(v for row in rows for v in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'Matrix':
        return cls(rows, cols, zero_vector(rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls.from_rows([unit_vector(n, i) for i in range(n)], n)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> 'Matrix':
        return Matrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix times column vector"""
        if len(v) != self.cols:
            raise DimensionMismatch(self.cols, len(v))
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def apply_left(self, v: Sequence[Fraction]) -> Vector:
        """Row vector times matrix"""
        if len(v) != self.rows:
            raise DimensionMismatch(self.rows, len(v))
        return tuple(dot(v, self.column(j)) for j in range(self.cols))

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if self.cols != other.rows:
            raise DimensionMismatch(self.cols, other.rows, "matrix product")
        columns = [other.column(j) for j in range(other.cols)]
        return Matrix.from_rows([[dot(self.row(i), c) for c in columns] for i in range(self.rows)], other.cols)

    def __add__(self, other: 'Matrix') -> 'Matrix':
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(self.rows * self.cols, other.rows * other.cols, "matrix sum")
        return Matrix(self.rows, self.cols, add_vectors(self.entries, other.entries))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        return self + other.scale(Fraction(-1))

    def scale(self, c: Fraction) -> 'Matrix':
        return Matrix(self.rows, self.cols, scale_vector(Fraction(c), self.entries))

    def is_zero(self) -> bool:
        return is_zero(self.entries)


def reduced_row_echelon(rows: Sequence[Sequence[Fraction]], cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Gauss-Jordan elimination over the rationals

    Args:
        rows: the rows to reduce
        cols: row length

    Returns:
        The nonzero rows of the reduced echelon form and their pivot columns
    """
    work = [[Fraction(v) for v in row] for row in rows]
    for row in work:
        if len(row) != cols:
            raise DimensionMismatch(cols, len(row), "row")
    pivots = []
    piv_r = 0
    for piv_c in range(cols):
        if piv_r == len(work):
            break
        for i_row in range(piv_r, len(work)):
            if work[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            work[piv_r], work[i_row] = work[i_row], work[piv_r]
        fp = work[piv_r][piv_c]
        work[piv_r] = [v / fp for v in work[piv_r]]
        for r in range(len(work)):
            fr = work[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            work[r] = [a - fr * b for a, b in zip(work[r], work[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return work[:piv_r], pivots


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    reduced, pivots = reduced_row_echelon(m.to_rows(), m.cols)
    return Matrix.from_rows(reduced, m.cols), pivots


def rank(m: Matrix) -> int:
    return len(reduced_row_echelon(m.to_rows(), m.cols)[1])


def null_space_basis(rows: Sequence[Sequence[Fraction]], cols: int) -> List[Vector]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column"""
    reduced, pivots = reduced_row_echelon(rows, cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][free]
        basis.append(tuple(v))
    return basis
