from fractions import Fraction
from typing import Optional, Sequence, Tuple

from commons.errors import DimensionMismatch
from exact_core.rational_matrix import Matrix, Vector, null_space_basis, reduced_row_echelon
from exact_core.subspace import Subspace


def kernel(m: Matrix) -> Subspace:
    """Right null space of m"""
    return Subspace(m.cols, tuple(null_space_basis(m.to_rows(), m.cols)))


def solve(m: Matrix, b: Sequence[Fraction]) -> Optional[Tuple[Vector, Subspace]]:
    """
    Solve m.x = b exactly

    Args:
        m: coefficient matrix
        b: right-hand side, one entry per row of m

    Returns:
        A particular solution and the kernel of m, or None when the system is inconsistent
    """
    if len(b) != m.rows:
        raise DimensionMismatch(m.rows, len(b), "right-hand side")
    augmented = [list(row) + [Fraction(c)] for row, c in zip(m.to_rows(), b)]
    reduced, pivots = reduced_row_echelon(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    particular = [Fraction(0)] * m.cols
    for row, p in zip(reduced, pivots):
        particular[p] = row[m.cols]
    return tuple(particular), kernel(m)
