import logging
from typing import Optional, Sequence

from commons.errors import DimensionMismatch, NotAFlag, NotIdeals
from exact_core.linalg import kernel
from exact_core.rational_matrix import Matrix, add_vectors, scale_vector
from exact_core.subspace import Subspace
from lie_structures.algebra_ops import check_subalgebra, is_ideal, jordan_holder_flag
from lie_structures.models import Functional, NilpotentLieAlgebra, WeightedLeviAction
from orbit_method.models import Polarization
from orbit_method.orbits import orbit_dimension

logger = logging.getLogger(__name__)


def is_subordinate(alg: NilpotentLieAlgebra, psi: Functional, h: Subspace) -> bool:
    """psi([h, h]) = 0; raises NotClosed when h is not a subalgebra"""
    check_subalgebra(alg, h)
    for i, u in enumerate(h.basis):
        for v in h.basis[i + 1:]:
            if psi(alg.bracket(u, v)) != 0:
                return False
    return True


def is_polarization(alg: NilpotentLieAlgebra, psi: Functional, h: Subspace) -> bool:
    """Subordinate subalgebra of the maximal dimension dim n - dim O_psi / 2"""
    if not is_subordinate(alg, psi, h):
        return False
    return h.dim == alg.dim - orbit_dimension(alg, psi) // 2


def radical_in(alg: NilpotentLieAlgebra, psi: Functional, term: Subspace) -> Subspace:
    """Radical of B_psi restricted to the subspace term"""
    basis = term.basis
    if not basis:
        return term
    rows = [[psi(alg.bracket(basis[i], basis[j])) for i in range(len(basis))] for j in range(len(basis))]
    combos = kernel(Matrix.from_rows(rows, len(basis))).basis
    vectors = []
    for c in combos:
        v = (0,) * alg.dim
        for coefficient, b in zip(c, basis):
            if coefficient != 0:
                v = add_vectors(v, scale_vector(coefficient, b))
        vectors.append(v)
    return Subspace.span(alg.dim, vectors)


def _validate_flag(alg: NilpotentLieAlgebra, flag: Sequence[Subspace]) -> Sequence[Subspace]:
    terms = [term for term in flag if term.dim > 0]
    if len(terms) != alg.dim:
        raise NotAFlag(f"a complete flag of {alg.dim}-dimensional algebra needs {alg.dim} nonzero terms")
    for position, term in enumerate(terms):
        if term.ambient_dim != alg.dim:
            raise DimensionMismatch(alg.dim, term.ambient_dim, "flag term")
        if term.dim != position + 1:
            raise NotAFlag(f"flag term {position + 1} has dimension {term.dim}")
        if position > 0 and not terms[position - 1].is_subspace_of(term):
            raise NotAFlag(f"flag term {position} is not contained in term {position + 1}")
    for position, term in enumerate(terms):
        if not is_ideal(alg, term):
            raise NotIdeals(position + 1)
    return terms


def vergne_polarization(alg: NilpotentLieAlgebra, psi: Functional,
                        flag: Optional[Sequence[Subspace]] = None) -> Polarization:
    """
    Vergne's polarization h = sum_k rad(B_psi restricted to n_k)

    Args:
        alg: the algebra
        psi: the functional
        flag: complete chain of ideals n_1 < ... < n_d, defaulting to the Jordan-Hoelder flag
            refining the lower central series

    Returns:
        The polarization with both certificates recomputed from scratch
    """
    terms = _validate_flag(alg, flag if flag is not None else jordan_holder_flag(alg))
    h = Subspace.zero(alg.dim)
    for term in terms:
        h = h.sum(radical_in(alg, psi, term))
    subordinate = is_subordinate(alg, psi, h)
    maximal = h.dim == alg.dim - orbit_dimension(alg, psi) // 2
    logger.debug(f"Vergne polarization of dimension {h.dim} on {alg.name}")
    return Polarization(h, tuple(terms), subordinate, maximal)


def certify_polarization(alg: NilpotentLieAlgebra, psi: Functional, h: Subspace) -> Polarization:
    """Wrap a given subalgebra with its certificates"""
    subordinate = is_subordinate(alg, psi, h)
    maximal = h.dim == alg.dim - orbit_dimension(alg, psi) // 2
    return Polarization(h, None, subordinate, maximal)


def stabilizes_flag(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, s: Subspace, h: Subspace) -> bool:
    """True iff X . h is inside h for every basis element X of the Levi subalgebra s"""
    if s.ambient_dim != levi.levi_dim:
        raise DimensionMismatch(levi.levi_dim, s.ambient_dim, "Levi subspace")
    if h.ambient_dim != alg.dim:
        raise DimensionMismatch(alg.dim, h.ambient_dim, "subspace")
    for x in s.basis:
        a = levi.action_matrix(x)
        for v in h.basis:
            if not h.contains(a.apply(v)):
                return False
    return True
