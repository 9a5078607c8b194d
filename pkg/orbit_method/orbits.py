import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from commons.errors import AlgebraMismatch, DimensionMismatch, InexactExponential
from exact_core.linalg import kernel
from exact_core.rational_matrix import Matrix, Vector, add_vectors, is_zero, scale_vector, vector
from exact_core.subspace import Subspace
from lie_structures.algebra_ops import flag_step_vectors, jordan_holder_flag
from lie_structures.models import Functional, NilpotentLieAlgebra, WeightedLeviAction
from orbit_method.models import OrbitDescriptor, SkewForm

logger = logging.getLogger(__name__)


def _exp_series_left(row: Sequence[Fraction], a: Matrix) -> Vector:
    """row . exp(a) for nilpotent a; raises InexactExponential otherwise"""
    result = vector(row)
    term = vector(row)
    k = 1
    while not is_zero(term):
        if k > a.rows + 1:
            raise InexactExponential("exponential series does not terminate: the operator is not nilpotent")
        term = scale_vector(Fraction(1, k), a.apply_left(term))
        result = add_vectors(result, term)
        k += 1
    return result


def _check_same_algebra(alg: NilpotentLieAlgebra, *functionals: Functional) -> None:
    for psi in functionals:
        if psi.algebra != alg:
            raise AlgebraMismatch(f"functional lives on {psi.algebra.name}, expected {alg.name}")


def coadjoint_act(alg: NilpotentLieAlgebra, y: Sequence[Fraction], psi: Functional) -> Functional:
    """
    exp(y) . psi = psi o exp(-ad y)

    Args:
        alg: the algebra
        y: log-coordinates of the group element
        psi: the functional moved

    Returns:
        The moved functional, exact; the exponential series stops by nilpotency
    """
    _check_same_algebra(alg, psi)
    if len(y) != alg.dim:
        raise DimensionMismatch(alg.dim, len(y), "group element")
    if is_zero(y):
        return psi
    return Functional(alg, _exp_series_left(psi.coeffs, alg.ad(y).scale(Fraction(-1))))


def replay_witness(alg: NilpotentLieAlgebra, psi: Functional, witness: Sequence[Sequence[Fraction]]) -> Functional:
    for y in witness:
        psi = coadjoint_act(alg, y, psi)
    return psi


def skew_form(alg: NilpotentLieAlgebra, psi: Functional) -> SkewForm:
    _check_same_algebra(alg, psi)
    rows = [[psi(alg.table[i][j]) for j in range(alg.dim)] for i in range(alg.dim)]
    return SkewForm(Matrix.from_rows(rows, alg.dim) if rows else Matrix.zeros(0, 0))


def orbit_dimension(alg: NilpotentLieAlgebra, psi: Functional) -> int:
    return skew_form(alg, psi).rank


def n_stabilizer(alg: NilpotentLieAlgebra, psi: Functional) -> Subspace:
    """Radical of B_psi, the Lie algebra of the stabilizer of psi in N"""
    return kernel(skew_form(alg, psi).matrix)


def _pairing_with(alg: NilpotentLieAlgebra, psi: Functional, u: Sequence[Fraction], f: Sequence[Fraction]) -> Fraction:
    return psi(alg.bracket(u, f))


def canonical_form_with_witness(alg: NilpotentLieAlgebra, psi: Functional) -> Tuple[Functional, List[Vector]]:
    """
    Canonical orbit representative together with the flows that reach it

    Walks the Jordan-Hoelder flag f_1, ..., f_d of ideals refining the lower central series
    (deepest layer first). s is the stabilizer of psi restricted to the previous flag term.
    At a step where u -> psi([u, f_m]) is nonzero on s, the coordinate psi(f_m) is cleared by
    the flow along the first basis vector of s pairing nontrivially with f_m; flows from s
    leave the restriction to the previous term untouched. At the other steps psi(f_m) is an
    orbit invariant and is kept.
    """
    _check_same_algebra(alg, psi)
    steps = flag_step_vectors(jordan_holder_flag(alg))
    s = Subspace.full(alg.dim)
    witness: List[Vector] = []
    for m, f in enumerate(steps):
        pairings = [_pairing_with(alg, psi, u, f) for u in s.basis]
        jump = next((k for k, c in enumerate(pairings) if c != 0), None)
        if jump is None:
            continue
        value = psi(f)
        if value != 0:
            y = scale_vector(value / pairings[jump], s.basis[jump])
            psi = coadjoint_act(alg, y, psi)
            witness.append(y)
            logger.debug(f"Cleared flag step {m} of {alg.name} by a flow along {s.basis[jump]}")
        pairings = [_pairing_with(alg, psi, u, f) for u in s.basis]
        s = Subspace.span(alg.dim, kernel_combinations(s.basis, pairings))
    return psi, witness


def kernel_combinations(basis: Sequence[Vector], pairings: Sequence[Fraction]) -> List[Vector]:
    """Vectors of span(basis) on which the linear form with the given values on the basis vanishes"""
    pivot = next((k for k, c in enumerate(pairings) if c != 0), None)
    if pivot is None:
        return list(basis)
    combos = []
    for k, u in enumerate(basis):
        if k == pivot:
            continue
        combos.append(add_vectors(u, scale_vector(-pairings[k] / pairings[pivot], basis[pivot])))
    return combos


def canonical_form(alg: NilpotentLieAlgebra, psi: Functional) -> Functional:
    return canonical_form_with_witness(alg, psi)[0]


def same_orbit(alg: NilpotentLieAlgebra, psi1: Functional, psi2: Functional) -> Optional[List[Vector]]:
    """
    Decide whether psi1 and psi2 lie in one coadjoint orbit

    Returns:
        A list of log-coordinates whose flows, applied in order, carry psi1 to psi2 exactly,
        or None when the orbits differ
    """
    _check_same_algebra(alg, psi1, psi2)
    if psi1 == psi2:
        return []
    canonical1, witness1 = canonical_form_with_witness(alg, psi1)
    canonical2, witness2 = canonical_form_with_witness(alg, psi2)
    if canonical1 != canonical2:
        return None
    return witness1 + [scale_vector(Fraction(-1), y) for y in reversed(witness2)]


def describe_orbit(alg: NilpotentLieAlgebra, psi: Functional) -> OrbitDescriptor:
    stabilizer = n_stabilizer(alg, psi)
    canonical, witness = canonical_form_with_witness(alg, psi)
    return OrbitDescriptor(
        representative=psi,
        dimension=alg.dim - stabilizer.dim,
        n_stabilizer=stabilizer,
        canonical_form=canonical,
        witness=tuple(witness),
    )


def dual_functional(psi: Functional) -> Functional:
    """The functional of the contragredient representation"""
    return -psi


def _is_diagonal(a: Matrix) -> bool:
    return all(a.entry(i, j) == 0 for i in range(a.rows) for j in range(a.cols) if i != j)


def conjugate_functional(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, g_log: Sequence[Fraction],
                         psi: Functional) -> Functional:
    """
    psi o exp(ad X) for the Levi element X with coordinates g_log

    Exact when X acts nilpotently on Lie N, or diagonally with zero weight on the support of psi.
    Other semisimple directions need transcendental scalars; use torus_conjugate_functional
    for torus points instead.
    """
    _check_same_algebra(alg, psi)
    if levi.algebra != alg:
        raise AlgebraMismatch("Levi action belongs to another algebra")
    a = levi.action_matrix(vector(g_log))
    if a.is_zero():
        return psi
    if _is_diagonal(a):
        # exp(ad X) scales coordinate i by e^(a_ii)
        moving = [alg.basis_labels[i] for i in psi.support() if a.entry(i, i) != 0]
        if not moving:
            return psi
        raise InexactExponential(f"torus direction rescales {moving} by a transcendental factor; "
                                 f"pass t = exp(X) to torus_conjugate_functional instead")
    power = a
    for _ in range(alg.dim):
        power = power @ a
    if not power.is_zero():
        raise InexactExponential("Levi element does not act nilpotently; exp(ad X) is not rational")
    return Functional(alg, _exp_series_left(psi.coeffs, a))


def torus_conjugate_functional(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, t: Sequence[Fraction],
                               psi: Functional) -> Functional:
    """
    psi^g(X) = psi(g^-1 X g) for the torus point g = prod_k exp(log t_k X_k)

    The coordinate of weight w is scaled by prod_k t_k^(-w_k).
    """
    _check_same_algebra(alg, psi)
    t = vector(t)
    if len(t) != levi.levi_dim:
        raise DimensionMismatch(levi.levi_dim, len(t), "torus point")
    if any(c == 0 for c in t):
        raise ValueError("torus point needs nonzero entries")
    coeffs = []
    for c, weight in zip(psi.coeffs, levi.torus_weights()):
        factor = Fraction(1)
        for tk, wk in zip(t, weight):
            if wk.denominator != 1:
                raise InexactExponential(f"weight {wk} is not integral")
            factor *= tk ** (-int(wk))
        coeffs.append(c * factor)
    return Functional(alg, tuple(coeffs))
