from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from commons.errors import CatalogError
from exact_core.linalg import solve
from exact_core.rational_matrix import Matrix, dot
from lie_structures.catalog import catalog_gl_upper, catalog_sp_unipotent
from lie_structures.models import WeightedLeviAction


class GroupType(Enum):
    GL = "GL"
    SP = "Sp"


@dataclass(frozen=True)
class Root:
    """Positive root, its epsilon-coordinates and the basis coordinate of Lie N carrying it"""
    label: str
    weight: Tuple[int, ...]
    coordinate: int


@dataclass(frozen=True)
class RootDatum:
    group: GroupType
    rank: int
    roots: Tuple[Root, ...]
    simple_roots: Tuple[int, ...]
    parabolic_J: Tuple[int, ...] = ()

    def root_of_coordinate(self, coordinate: int) -> Root:
        for root in self.roots:
            if root.coordinate == coordinate:
                return root
        raise CatalogError(f"no root carried by coordinate {coordinate}")

    def is_simple(self, root: Root) -> bool:
        return self.roots.index(root) in self.simple_roots

    def orthogonal_to_parabolic(self, root: Root) -> bool:
        return all(dot(root.weight, self.roots[j].weight) == 0 for j in self.parabolic_J)

    def simple_coefficients(self, root: Root) -> Optional[Tuple[Fraction, ...]]:
        """Coefficients of root in the simple roots"""
        columns = Matrix.from_rows([self.roots[i].weight for i in self.simple_roots], self.rank).transpose()
        solution = solve(columns, root.weight)
        return None if solution is None else solution[0]


def _weights_as_roots(levi: WeightedLeviAction) -> Tuple[Root, ...]:
    roots = []
    for i, weight in enumerate(levi.torus_weights()):
        if any(w.denominator != 1 for w in weight):
            raise CatalogError("torus weights are not integral")
        roots.append(Root(levi.algebra.basis_labels[i], tuple(int(w) for w in weight), i))
    return tuple(roots)


def _simple_indices(roots: Sequence[Root]) -> Tuple[int, ...]:
    """Positive roots that are not a sum of two positive roots"""
    weights = {root.weight for root in roots}
    simple = []
    for i, root in enumerate(roots):
        decomposable = any(
            tuple(a - b for a, b in zip(root.weight, other.weight)) in weights
            for other in roots if other is not root
        )
        if not decomposable:
            simple.append(i)
    return tuple(simple)


def _build(group: GroupType, rank: int, levi: WeightedLeviAction, parabolic_J: Sequence[int]) -> RootDatum:
    roots = _weights_as_roots(levi)
    simple = _simple_indices(roots)
    for j in parabolic_J:
        if j not in simple:
            raise CatalogError(f"parabolic index {j} is not a simple root")
    return RootDatum(group, rank, roots, simple, tuple(parabolic_J))


def gl_root_datum(n: int, parabolic_J: Sequence[int] = ()) -> RootDatum:
    """Roots eps_i - eps_j carried by e_{i,j}; the torus coordinates are the epsilon coordinates"""
    _, levi = catalog_gl_upper(n)
    return _build(GroupType.GL, n, levi, parabolic_J)


def sp_root_datum(n: int, parabolic_J: Sequence[int] = ()) -> RootDatum:
    """Roots eps_p - eps_l (l <= n) and eps_p + eps_l' (l > n) carried by the Sp coordinates"""
    _, levi = catalog_sp_unipotent(n)
    return _build(GroupType.SP, n, levi, parabolic_J)
