import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from commons.constants import KEY_ALGEBRA, KEY_COEFFS, MSG_UNKNOWN_LABEL
from commons.errors import (
    DimensionMismatch, JacobiViolation, NotDiagonalAction, NotNilpotent, OrbitMethodError, ParseError,
)
from commons.utils import format_rational, to_rational
from exact_core.rational_matrix import Matrix, Vector, add_vectors, dot, is_zero, scale_vector, unit_vector, vector
from exact_core.subspace import Subspace

logger = logging.getLogger(__name__)

SparseVector = Tuple[Tuple[int, Fraction], ...]
BracketTable = Tuple[Tuple[Tuple[int, int], SparseVector], ...]


@dataclass(frozen=True)
class NilpotentLieAlgebra:
    """
    Nilpotent Lie algebra given by structure constants on a labelled basis

    Only brackets [x_i, x_j] with i < j are stored; the rest follow from antisymmetry.
    Construction checks the Jacobi identity on all basis triples and that the lower
    central series reaches zero.
    """
    dim: int
    basis_labels: Tuple[str, ...]
    brackets: BracketTable
    name: Optional[str] = field(default=None, compare=False)
    table: Tuple[Tuple[Vector, ...], ...] = field(init=False, repr=False, compare=False)
    series: Tuple[Subspace, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.basis_labels) != self.dim:
            raise DimensionMismatch(self.dim, len(self.basis_labels), "basis_labels")
        normalized = []
        pairs = self.brackets.items() if isinstance(self.brackets, Mapping) else self.brackets
        for (i, j), out in sorted(pairs, key=lambda item: item[0]):
            out = out.items() if isinstance(out, Mapping) else out
            if not (0 <= i < j < self.dim):
                raise ParseError("brackets", f"pair ({i}, {j}) is not an ordered pair of basis indices")
            entries = tuple((k, Fraction(c)) for k, c in sorted(out) if Fraction(c) != 0)
            for k, _ in entries:
                if not 0 <= k < self.dim:
                    raise ParseError("brackets", f"output index {k} out of range")
            if entries:
                normalized.append(((i, j), entries))
        object.__setattr__(self, 'basis_labels', tuple(self.basis_labels))
        object.__setattr__(self, 'brackets', tuple(normalized))
        object.__setattr__(self, 'table', self._dense_table())
        self._check_jacobi()
        object.__setattr__(self, 'series', self._lower_central_series())

    def _dense_table(self) -> Tuple[Tuple[Vector, ...], ...]:
        zero = (Fraction(0),) * self.dim
        rows = [[zero] * self.dim for _ in range(self.dim)]
        for (i, j), out in self.brackets:
            v = [Fraction(0)] * self.dim
            for k, c in out:
                v[k] += c
            rows[i][j] = tuple(v)
            rows[j][i] = tuple(-c for c in v)
        return tuple(tuple(row) for row in rows)

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    total = add_vectors(
                        add_vectors(self.bracket_with_basis(i, self.table[j][k]),
                                    self.bracket_with_basis(j, self.table[k][i])),
                        self.bracket_with_basis(k, self.table[i][j]))
                    if not is_zero(total):
                        raise JacobiViolation(i, j, k)

    def _lower_central_series(self) -> Tuple[Subspace, ...]:
        current = Subspace.full(self.dim)
        series = [current]
        while current.dim > 0:
            following = Subspace.span(self.dim, [
                self.bracket_with_basis(j, v) for v in current.basis for j in range(self.dim)
            ])
            if following.dim == current.dim:
                raise NotNilpotent(current.dim)
            series.append(following)
            current = following
        return tuple(series)

    def bracket_with_basis(self, i: int, v: Sequence[Fraction]) -> Vector:
        """[x_i, v]"""
        result = [Fraction(0)] * self.dim
        for j, c in enumerate(v):
            if c == 0:
                continue
            for k, entry in enumerate(self.table[i][j]):
                if entry != 0:
                    result[k] += c * entry
        return tuple(result)

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch(self.dim, len(u) if len(u) != self.dim else len(v))
        result = (Fraction(0),) * self.dim
        for i, c in enumerate(u):
            if c != 0:
                result = add_vectors(result, scale_vector(c, self.bracket_with_basis(i, v)))
        return result

    def ad(self, y: Sequence[Fraction]) -> Matrix:
        """Matrix of ad y, column j holding [y, x_j]"""
        columns = [self.bracket(y, unit_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_rows([[columns[j][i] for j in range(self.dim)] for i in range(self.dim)], self.dim)

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise ParseError(KEY_COEFFS, MSG_UNKNOWN_LABEL.format(label=label))

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)


@dataclass(frozen=True)
class Functional:
    """Linear functional on a nilpotent Lie algebra, in the dual basis"""
    algebra: NilpotentLieAlgebra
    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', vector(self.coeffs))
        if len(self.coeffs) != self.algebra.dim:
            raise DimensionMismatch(self.algebra.dim, len(self.coeffs), "functional")

    @classmethod
    def zero(cls, algebra: NilpotentLieAlgebra) -> 'Functional':
        return cls(algebra, (Fraction(0),) * algebra.dim)

    @classmethod
    def from_labels(cls, algebra: NilpotentLieAlgebra, values: Mapping[str, object]) -> 'Functional':
        """Build a functional from {label: rational}; omitted coordinates are zero"""
        coeffs = [Fraction(0)] * algebra.dim
        for label, value in values.items():
            coeffs[algebra.label_index(label)] = to_rational(value, f"{KEY_COEFFS}.{label}")
        return cls(algebra, tuple(coeffs))

    @classmethod
    def from_dict(cls, algebra: NilpotentLieAlgebra, payload: Mapping[str, object]) -> 'Functional':
        """Inverse of to_dict; a bare {label: rational} mapping is accepted too"""
        if KEY_COEFFS in payload:
            named = payload.get(KEY_ALGEBRA)
            if named is not None and named != algebra.name:
                raise ParseError(KEY_ALGEBRA, f"functional names {named}, expected {algebra.name}")
            payload = payload[KEY_COEFFS]
        return cls.from_labels(algebra, payload)

    def __call__(self, v: Sequence[Fraction]) -> Fraction:
        return dot(self.coeffs, v)

    def __neg__(self) -> 'Functional':
        return Functional(self.algebra, scale_vector(Fraction(-1), self.coeffs))

    def __add__(self, other: 'Functional') -> 'Functional':
        return Functional(self.algebra, add_vectors(self.coeffs, other.coeffs))

    def __sub__(self, other: 'Functional') -> 'Functional':
        return self + (-other)

    def scale(self, c) -> 'Functional':
        return Functional(self.algebra, scale_vector(Fraction(c), self.coeffs))

    def is_zero(self) -> bool:
        return is_zero(self.coeffs)

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coeffs) if c != 0]

    def to_dict(self) -> Dict[str, object]:
        return {
            KEY_ALGEBRA: self.algebra.name,
            KEY_COEFFS: {self.algebra.basis_labels[i]: format_rational(self.coeffs[i]) for i in self.support()},
        }


@dataclass(frozen=True)
class WeightedLeviAction:
    """
    Reductive Levi algebra Lie M acting on Lie N by derivations

    Attributes:
        algebra: the nilpotent algebra acted on
        levi_dim: dimension of Lie M
        action: one matrix per Levi basis direction, column j holding X_k . x_j
        brackets_m: brackets_m[k][l] is the coordinate vector of [X_k, X_l] in Lie M
        labels: names of the Levi basis directions
        realization: optional matrices realizing the Levi directions inside the ambient group
    """
    algebra: NilpotentLieAlgebra
    levi_dim: int
    action: Tuple[Matrix, ...]
    brackets_m: Tuple[Tuple[Vector, ...], ...]
    labels: Tuple[str, ...] = ()
    realization: Tuple[Matrix, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.action) != self.levi_dim:
            raise DimensionMismatch(self.levi_dim, len(self.action), "action")
        if len(self.brackets_m) != self.levi_dim or any(len(row) != self.levi_dim for row in self.brackets_m):
            raise DimensionMismatch(self.levi_dim, len(self.brackets_m), "brackets_m")
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(f"X_{k + 1}" for k in range(self.levi_dim)))
        object.__setattr__(self, 'brackets_m',
                           tuple(tuple(vector(v) for v in row) for row in self.brackets_m))
        self._check_derivations()
        self._check_levi_brackets()

    def _check_derivations(self) -> None:
        alg = self.algebra
        for k, a in enumerate(self.action):
            if (a.rows, a.cols) != (alg.dim, alg.dim):
                raise DimensionMismatch(alg.dim * alg.dim, a.rows * a.cols, "action matrix")
            images = [a.column(j) for j in range(alg.dim)]
            for i in range(alg.dim):
                for j in range(i + 1, alg.dim):
                    lhs = a.apply(alg.table[i][j])
                    rhs = add_vectors(alg.bracket(images[i], alg.basis_vector(j)),
                                      alg.bracket(alg.basis_vector(i), images[j]))
                    if lhs != rhs:
                        raise OrbitMethodError(f"Levi direction {self.labels[k]} is not a derivation on ({i}, {j})")

    def _check_levi_brackets(self) -> None:
        for k in range(self.levi_dim):
            for l in range(self.levi_dim):
                if self.brackets_m[k][l] != scale_vector(Fraction(-1), self.brackets_m[l][k]):
                    raise OrbitMethodError(f"Levi brackets are not antisymmetric at ({k}, {l})")
                commutator = (self.action[k] @ self.action[l]) - (self.action[l] @ self.action[k])
                if commutator != self.action_matrix(self.brackets_m[k][l]):
                    raise OrbitMethodError(f"Levi action does not respect the bracket at ({k}, {l})")
        for k in range(self.levi_dim):
            for l in range(k + 1, self.levi_dim):
                for m in range(l + 1, self.levi_dim):
                    total = add_vectors(
                        add_vectors(self.bracket_m(unit_vector(self.levi_dim, k), self.brackets_m[l][m]),
                                    self.bracket_m(unit_vector(self.levi_dim, l), self.brackets_m[m][k])),
                        self.bracket_m(unit_vector(self.levi_dim, m), self.brackets_m[k][l]))
                    if not is_zero(total):
                        raise JacobiViolation(k, l, m)

    def action_matrix(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix by which the Levi element with coordinates x acts on Lie N"""
        if len(x) != self.levi_dim:
            raise DimensionMismatch(self.levi_dim, len(x), "Levi vector")
        result = Matrix.zeros(self.algebra.dim, self.algebra.dim)
        for c, a in zip(x, self.action):
            if c != 0:
                result = result + a.scale(c)
        return result

    def bracket_m(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        result = (Fraction(0),) * self.levi_dim
        for k, a in enumerate(x):
            for l, b in enumerate(y):
                if a != 0 and b != 0:
                    result = add_vectors(result, scale_vector(a * b, self.brackets_m[k][l]))
        return result

    def torus_weights(self) -> List[Vector]:
        """
        Weights of a diagonal action

        Returns:
            For each basis coordinate i of Lie N, the vector (weight under X_1, ..., weight under X_L)
        """
        for k, a in enumerate(self.action):
            for i in range(a.rows):
                for j in range(a.cols):
                    if i != j and a.entry(i, j) != 0:
                        raise NotDiagonalAction(f"Levi direction {self.labels[k]} is not diagonal")
        return [tuple(a.entry(i, i) for a in self.action) for i in range(self.algebra.dim)]

    def is_torus(self) -> bool:
        return all(is_zero(v) for row in self.brackets_m for v in row)
