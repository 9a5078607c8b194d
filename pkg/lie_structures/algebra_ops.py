import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from commons.errors import NotAnIdeal, NotClosed
from exact_core.linalg import kernel
from exact_core.rational_matrix import Matrix
from exact_core.subspace import Subspace
from lie_structures.models import NilpotentLieAlgebra

logger = logging.getLogger(__name__)


def make_algebra(dim: int, brackets, labels: Optional[Sequence[str]] = None,
                 name: Optional[str] = None) -> NilpotentLieAlgebra:
    """
    Validated nilpotent Lie algebra from a bracket table

    Args:
        dim: dimension
        brackets: {(i, j): {k: c}} or [((i, j), [(k, c), ...])] with i < j
        labels: basis labels, defaulting to x_1..x_dim
        name: optional catalog name

    Returns:
        The algebra; raises JacobiViolation or NotNilpotent when the table is not valid
    """
    if labels is None:
        labels = [f"x_{i + 1}" for i in range(dim)]
    return NilpotentLieAlgebra(dim, tuple(labels), brackets, name)


def lower_central_series(alg: NilpotentLieAlgebra) -> List[Subspace]:
    """N_1 = Lie N, N_{k+1} = [N_k, Lie N], ending with the zero subspace"""
    return list(alg.series)


def algebra_depth(alg: NilpotentLieAlgebra) -> int:
    return len(alg.series) - 1


def bracket_span(alg: NilpotentLieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[a, b] as a subspace"""
    return Subspace.span(alg.dim, [alg.bracket(u, v) for u in a.basis for v in b.basis])


def is_ideal(alg: NilpotentLieAlgebra, ideal: Subspace) -> bool:
    return all(ideal.contains(alg.bracket_with_basis(j, v)) for v in ideal.basis for j in range(alg.dim))


def check_subalgebra(alg: NilpotentLieAlgebra, h: Subspace) -> Subspace:
    """Raise NotClosed(i, j) naming the first pair of basis vectors of h whose bracket leaves h"""
    for i, u in enumerate(h.basis):
        for j in range(i + 1, h.dim):
            if not h.contains(alg.bracket(u, h.basis[j])):
                raise NotClosed(i, j)
    return h


def quotient(alg: NilpotentLieAlgebra, ideal: Subspace) -> Tuple[NilpotentLieAlgebra, Matrix]:
    """
    Quotient of alg by an ideal

    The quotient basis is the image of the coordinates that are not pivots of the ideal's
    echelon basis, so labels carry over from alg.

    Returns:
        The quotient algebra and the projection matrix (quotient dim x alg dim)
    """
    if not is_ideal(alg, ideal):
        raise NotAnIdeal(f"subspace of dimension {ideal.dim} is not an ideal of {alg.name or 'the algebra'}")
    kept = ideal.complement_coordinates()
    columns = [ideal.reduce(alg.basis_vector(j)) for j in range(alg.dim)]
    projection = Matrix.from_rows([[columns[j][c] for j in range(alg.dim)] for c in kept], alg.dim)
    brackets = {}
    for a, ca in enumerate(kept):
        for b in range(a + 1, len(kept)):
            image = projection.apply(alg.table[ca][kept[b]])
            out = {k: c for k, c in enumerate(image) if c != 0}
            if out:
                brackets[(a, b)] = out
    labels = [alg.basis_labels[c] for c in kept]
    logger.debug(f"Quotient of dimension {alg.dim} by ideal of dimension {ideal.dim}")
    return make_algebra(len(kept), brackets, labels), projection


def subalgebra_from_pattern(alg: NilpotentLieAlgebra, coordinates: Iterable[int]) -> Subspace:
    """Span of the listed basis coordinates, certified closed under the bracket"""
    coords = sorted(set(coordinates))
    h = Subspace.from_coordinates(alg.dim, coords)
    for a, i in enumerate(coords):
        for j in coords[a + 1:]:
            if not h.contains(alg.table[i][j]):
                raise NotClosed(i, j)
    return h


def pattern_from_labels(alg: NilpotentLieAlgebra, labels: Iterable[str]) -> Subspace:
    return subalgebra_from_pattern(alg, [alg.label_index(label) for label in labels])


def center(alg: NilpotentLieAlgebra) -> Subspace:
    """{x : [x, x_j] = 0 for every basis element x_j}"""
    rows = []
    for j in range(alg.dim):
        for k in range(alg.dim):
            rows.append([alg.table[i][j][k] for i in range(alg.dim)])
    if not rows:
        return Subspace.zero(alg.dim)
    return kernel(Matrix.from_rows(rows, alg.dim))


def jordan_holder_flag(alg: NilpotentLieAlgebra, reverse_layers: bool = False) -> List[Subspace]:
    """
    Complete flag of ideals refining the lower central series

    The deepest layer comes first; inside a layer the echelon basis of N_k is added in
    label order of its pivots, or in reverse order when reverse_layers is set.

    Returns:
        [n_1, ..., n_dim] with dim n_k = k (the zero term is implied)
    """
    ordered: List[Sequence[Fraction]] = []
    series = alg.series
    for k in range(len(series) - 2, -1, -1):
        layer = [v for v in series[k].basis if not series[k + 1].contains(v)]
        # echelon vectors of N_k not in N_{k+1} complete a basis of N_{k+1}
        complement = []
        running = series[k + 1]
        for v in layer:
            if not running.contains(v):
                complement.append(v)
                running = running.sum(Subspace.span(alg.dim, [v]))
        if reverse_layers:
            complement.reverse()
        ordered.extend(complement)
    flag = []
    for m in range(1, len(ordered) + 1):
        flag.append(Subspace.span(alg.dim, ordered[:m]))
    return flag


def flag_step_vectors(flag: Sequence[Subspace]) -> List[Sequence[Fraction]]:
    """For each term n_m of a complete flag, a vector of n_m outside n_{m-1}"""
    vectors = []
    previous: Optional[Subspace] = None
    for term in flag:
        for v in term.basis:
            if previous is None or not previous.contains(v):
                vectors.append(v)
                break
        previous = term
    return vectors
