import logging
from typing import Sequence

from commons.errors import DimensionMismatch, NotClosed, OrbitMethodError, WrongDepth
from exact_core.rational_matrix import Matrix, Vector, is_zero
from exact_core.subspace import Subspace
from lie_structures.algebra_ops import center, jordan_holder_flag, quotient
from lie_structures.models import Functional, NilpotentLieAlgebra, WeightedLeviAction
from orbit_method.models import (
    Bound, Classification, DepthReport, HeisenbergQuotient, MetaplecticBound, Reason, SkewForm,
)
from orbit_method.polarizations import certify_polarization, is_polarization, stabilizes_flag, vergne_polarization

logger = logging.getLogger(__name__)


def depth(alg: NilpotentLieAlgebra, psi: Functional) -> DepthReport:
    """
    Least n with psi vanishing on N_{n+1}

    N_{n+1} is an ideal stable under the coadjoint action, so every point of the orbit
    vanishes on it exactly when psi does.
    """
    for n, term in enumerate(alg.series):
        if all(psi(v) == 0 for v in term.basis):
            return DepthReport(n, n, Classification.for_depth(n))
    raise OrbitMethodError("lower central series does not end in zero")


def is_character(alg: NilpotentLieAlgebra, psi: Functional) -> bool:
    """Nonzero and vanishing on [n, n]"""
    if psi.is_zero():
        return False
    derived = alg.series[1] if len(alg.series) > 1 else Subspace.zero(alg.dim)
    return all(psi(v) == 0 for v in derived.basis)


def _push_forward(alg: NilpotentLieAlgebra, kept_labels: Sequence[str], psi: Functional) -> Functional:
    """psi on a quotient whose basis is the image of the kept coordinates; psi must kill the ideal"""
    coeffs = [psi.coeffs[psi.algebra.label_index(label)] for label in kept_labels]
    return Functional(alg, tuple(coeffs))


def heisenberg_quotient(alg: NilpotentLieAlgebra, psi: Functional) -> HeisenbergQuotient:
    """
    Quotient chain reducing a depth-2 functional to a Heisenberg algebra

    First divides out N_3 = [[n, n], n], then keeps dividing out the part of the center where the
    pushed-forward functional vanishes until the center is one-dimensional.
    """
    report = depth(alg, psi)
    if report.depth != 2:
        raise WrongDepth(2, report.depth)
    chain = []
    current, projection = quotient(alg, alg.series[2])
    current_psi = _push_forward(current, current.basis_labels, psi)
    chain.append((current, projection))
    while True:
        z = center(current)
        if z.dim == 1:
            break
        ideal = z.intersect(Subspace.span(current.dim, [current_psi.coeffs]).annihilator())
        following, step = quotient(current, ideal)
        projection = step @ projection
        current_psi = _push_forward(following, following.basis_labels, current_psi)
        current = following
        chain.append((current, projection))
        logger.debug(f"Heisenberg reduction step: dimension {current.dim}, center dimension {z.dim}")
    z = center(current)
    central_coefficient = current_psi(z.basis[0])
    symplectic = z.complement_coordinates()
    rows = [[current_psi(current.table[a][b]) for b in symplectic] for a in symplectic]
    pairing = SkewForm(Matrix.from_rows(rows, len(symplectic)))
    if central_coefficient == 0 or pairing.rank != len(symplectic):
        raise OrbitMethodError("quotient is not a Heisenberg algebra with a non-degenerate pairing")
    return HeisenbergQuotient(
        quotient_chain=tuple(chain),
        final_algebra=current,
        symplectic_space_dim=len(symplectic),
        pairing=pairing,
        central_coefficient=central_coefficient,
        pushed_functional=current_psi,
    )


def metaplectic_degree_bound(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, s: Subspace, psi: Functional,
                             candidate_polarizations: Sequence[Subspace] = ()) -> MetaplecticBound:
    """
    Degree bound for the cover of the Levi stabilizer over which rho_psi extends

    Characters give degree one. Otherwise a polarization stable under s gives degree one:
    the candidates are tried first, then Vergne's polarization for the Jordan-Hoelder flag
    and for its layer-reversed variant. Depth two gives at most two; anything else is unknown.
    """
    report = depth(alg, psi)
    if report.depth <= 1:
        return MetaplecticBound(Bound.EXACTLY_ONE, Reason.CHARACTER)
    for h in candidate_polarizations:
        try:
            if is_polarization(alg, psi, h) and stabilizes_flag(alg, levi, s, h):
                return MetaplecticBound(Bound.EXACTLY_ONE, Reason.FLAG_STABLE, certify_polarization(alg, psi, h))
        except NotClosed as e:
            logger.debug(f"Skipping candidate that is not a subalgebra: {e}")
    for reverse_layers in (False, True):
        polarization = vergne_polarization(alg, psi, jordan_holder_flag(alg, reverse_layers))
        if stabilizes_flag(alg, levi, s, polarization.subspace):
            return MetaplecticBound(Bound.EXACTLY_ONE, Reason.FLAG_STABLE, polarization)
    if report.depth == 2:
        return MetaplecticBound(Bound.AT_MOST_TWO, Reason.DEPTH2)
    return MetaplecticBound(Bound.UNKNOWN, Reason.NONE)


def assumption_reductive_check(u_dim: int, torus_weights: Sequence[Vector]) -> bool:
    """A generic central torus element acts on Lie U without kernel iff no weight is zero"""
    if len(torus_weights) != u_dim:
        raise DimensionMismatch(u_dim, len(torus_weights), "weight list")
    return all(not is_zero(w) for w in torus_weights)
