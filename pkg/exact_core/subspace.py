from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from commons.errors import DimensionMismatch
from exact_core.rational_matrix import (
    Matrix, Vector, add_vectors, null_space_basis, reduced_row_echelon, scale_vector, unit_vector, vector,
)


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of Q^n stored by its reduced echelon basis, so equal subspaces compare equal

    Attributes:
        ambient_dim: n
        basis: rows of the reduced echelon form of any spanning set
    """
    ambient_dim: int
    basis: Tuple[Vector, ...] = ()
    pivots: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        spanning = [vector(v) for v in self.basis]
        for v in spanning:
            if len(v) != self.ambient_dim:
                raise DimensionMismatch(self.ambient_dim, len(v))
        reduced, pivots = reduced_row_echelon(spanning, self.ambient_dim)
        object.__setattr__(self, 'basis', tuple(tuple(row) for row in reduced))
        object.__setattr__(self, 'pivots', tuple(pivots))

    @classmethod
    def zero(cls, n: int) -> 'Subspace':
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> 'Subspace':
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def from_coordinates(cls, n: int, coordinates: Iterable[int]) -> 'Subspace':
        return cls(n, tuple(unit_vector(n, i) for i in sorted(set(coordinates))))

    @classmethod
    def span(cls, n: int, vectors: Iterable[Sequence]) -> 'Subspace':
        return cls(n, tuple(vector(v) for v in vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Remainder of v after clearing every pivot coordinate"""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, len(v))
        remainder = vector(v)
        for row, p in zip(self.basis, self.pivots):
            if remainder[p] != 0:
                remainder = add_vectors(remainder, scale_vector(-remainder[p], row))
        return remainder

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(a == 0 for a in self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> Optional[Vector]:
        """Coefficients of v in the stored basis, or None when v is outside"""
        if not self.contains(v):
            return None
        return tuple(Fraction(v[p]) for p in self.pivots)

    def is_subspace_of(self, other: 'Subspace') -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(other.ambient_dim, self.ambient_dim, "subspace")
        return all(other.contains(v) for v in self.basis)

    def sum(self, other: 'Subspace') -> 'Subspace':
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, other.ambient_dim, "subspace")
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def annihilator(self) -> 'Subspace':
        """Coordinate vectors pairing to zero with every vector of the subspace"""
        return Subspace(self.ambient_dim, tuple(null_space_basis(self.basis, self.ambient_dim)))

    def intersect(self, other: 'Subspace') -> 'Subspace':
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, other.ambient_dim, "subspace")
        equations = self.annihilator().basis + other.annihilator().basis
        return Subspace(self.ambient_dim, tuple(null_space_basis(equations, self.ambient_dim)))

    def complement_coordinates(self) -> List[int]:
        """Coordinates that are not pivots; their unit vectors span a complement"""
        pivot_set = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivot_set]

    def as_matrix(self) -> Matrix:
        return Matrix.from_rows(self.basis, self.ambient_dim)
