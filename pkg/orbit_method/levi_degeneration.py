import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from commons.constants import DEFAULT_COCHARACTER_BOUND
from commons.errors import AlgebraMismatch, DimensionMismatch, NotHorizontal, OrbitMethodError, TrivialFunctional
from commons.utils import format_vector
from exact_core.linalg import kernel
from exact_core.rational_matrix import Matrix, Vector, is_zero, rank, scale_vector
from exact_core.subspace import Subspace
from lie_structures.models import Functional, NilpotentLieAlgebra, WeightedLeviAction
from orbit_method.models import DegenerationCertificate, HorizontalChecks, SimpleChecks
from orbit_method.orbits import orbit_dimension, same_orbit, skew_form
from orbit_method.root_datum import RootDatum

logger = logging.getLogger(__name__)


def _levi_covectors(levi: WeightedLeviAction, psi: Functional) -> List[Vector]:
    """X_k . psi = -psi o ad X_k as coordinate rows"""
    return [scale_vector(Fraction(-1), a.apply_left(psi.coeffs)) for a in levi.action]


def _check_levi(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, *functionals: Functional) -> None:
    if levi.algebra != alg:
        raise AlgebraMismatch("Levi action belongs to another algebra")
    for psi in functionals:
        if psi.algebra != alg:
            raise AlgebraMismatch(f"functional lives on {psi.algebra.name}, expected {alg.name}")


def levi_orbit_stabilizer_lie(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional) -> Subspace:
    """
    Lie algebra of the Levi stabilizer of the orbit of psi

    {X in Lie M : X . psi lies in the tangent space {psi o ad Y : Y in Lie N}}, computed as the
    kernel of [X . psi columns | -B_psi rows] projected onto the Levi coordinates.
    """
    _check_levi(alg, levi, psi)
    covectors = _levi_covectors(levi, psi)
    tangent = skew_form(alg, psi).matrix.to_rows()
    rows = [[w[j] for w in covectors] + [-b[j] for b in tangent] for j in range(alg.dim)]
    if not rows:
        return Subspace.full(levi.levi_dim)
    solutions = kernel(Matrix.from_rows(rows, levi.levi_dim + alg.dim))
    s = Subspace.span(levi.levi_dim, [v[:levi.levi_dim] for v in solutions.basis])
    for i, x in enumerate(s.basis):
        for y in s.basis[i + 1:]:
            if not s.contains(levi.bracket_m(x, y)):
                raise OrbitMethodError("Levi stabilizer is not closed under the bracket")
    return s


def p_orbit_dimension(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional) -> int:
    """Rank of Lie M + Lie N -> (Lie N)*, the dimension of the P-orbit of psi"""
    _check_levi(alg, levi, psi)
    rows = _levi_covectors(levi, psi) + skew_form(alg, psi).matrix.to_rows()
    if not rows or alg.dim == 0:
        return 0
    return rank(Matrix.from_rows(rows, alg.dim))


def coordinate_weights(torus_weights: Sequence[Sequence[Fraction]], lam: Sequence[int]) -> List[int]:
    """
    lambda-weight of each dual coordinate: lambda(t) scales the coefficient of a coordinate of
    torus weight alpha by t^(-<lambda, alpha>)
    """
    weights = []
    for alpha in torus_weights:
        if len(alpha) != len(lam):
            raise DimensionMismatch(len(alpha), len(lam), "cocharacter")
        pairing = sum((Fraction(a) * l for a, l in zip(alpha, lam)), Fraction(0))
        weights.append(-int(pairing))
    return weights


def cocharacter_limit(alg: NilpotentLieAlgebra, torus_weights: Sequence[Sequence[Fraction]], lam: Sequence[int],
                      psi: Functional) -> Optional[Functional]:
    """lim_{t -> 0} lambda(t) . psi, or None when it diverges"""
    if len(torus_weights) != alg.dim:
        raise DimensionMismatch(alg.dim, len(torus_weights), "weight list")
    weights = coordinate_weights(torus_weights, lam)
    if any(weights[i] < 0 for i in psi.support()):
        return None
    return Functional(alg, tuple(c if w == 0 else Fraction(0) for c, w in zip(psi.coeffs, weights)))


class DegenerationContext:
    """Orbit data of a fixed psi shared by every cocharacter tried against it"""

    def __init__(self, alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional):
        _check_levi(alg, levi, psi)
        if psi.is_zero():
            raise TrivialFunctional("the trivial character is excluded from degenerations")
        self.alg = alg
        self.levi = levi
        self.psi = psi
        self.torus_weights = levi.torus_weights()
        self.orbit_dim = orbit_dimension(alg, psi)
        self.stabilizer = levi_orbit_stabilizer_lie(alg, levi, psi)
        self._orbit_cache: Dict[Vector, Tuple[bool, int]] = {}

    def _target_data(self, psi0: Functional) -> Tuple[bool, int]:
        key = psi0.coeffs
        if key not in self._orbit_cache:
            distinct = same_orbit(self.alg, self.psi, psi0) is None
            self._orbit_cache[key] = (distinct, orbit_dimension(self.alg, psi0))
        return self._orbit_cache[key]

    def certificate(self, psi0: Functional, lam: Sequence[int]) -> DegenerationCertificate:
        _check_levi(self.alg, self.levi, psi0)
        if psi0.is_zero():
            raise TrivialFunctional("the trivial character is excluded from degenerations")
        if len(lam) != self.levi.levi_dim:
            raise DimensionMismatch(self.levi.levi_dim, len(lam), "cocharacter")
        distinct, target_dim = self._target_data(psi0)
        limit = cocharacter_limit(self.alg, self.torus_weights, lam, self.psi)
        d_lambda = tuple(Fraction(l) for l in lam)
        commutes = all(is_zero(self.levi.bracket_m(d_lambda, x)) for x in self.stabilizer.basis)
        checks = HorizontalChecks(
            distinct_orbits=distinct,
            equal_orbit_dims=self.orbit_dim == target_dim,
            limit_matches=limit is not None and limit == psi0,
            lambda_commutes_with_stabilizer=commutes,
        )
        witnesses = {
            "coordinate_weights": coordinate_weights(self.torus_weights, lam),
            "orbit_dims": [self.orbit_dim, target_dim],
            "same_orbit": "refused" if distinct else "found",
            "limit": None if limit is None else limit.to_dict(),
            "stabilizer_dim": self.stabilizer.dim,
        }
        return DegenerationCertificate(self.psi, psi0, tuple(int(l) for l in lam), checks, None, witnesses)


def check_horizontal(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional, psi0: Functional,
                     lam: Sequence[int]) -> DegenerationCertificate:
    """
    Certificate for psi degenerating horizontally to psi0 along the cocharacter lam

    Args:
        alg: the algebra
        levi: a torus action (diagonal on the basis)
        psi: the functional that degenerates, nonzero
        psi0: the limit, nonzero
        lam: integer cocharacter in the Levi coordinates
    """
    return DegenerationContext(alg, levi, psi).certificate(psi0, lam)


def check_simple(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, root_datum: RootDatum, psi: Functional,
                 psi0: Functional, lam: Sequence[int]) -> DegenerationCertificate:
    """
    Horizontal certificate completed with the simple-degeneration checks

    delta = psi - psi0 must sit on one coordinate; under the trace form the dual coordinate
    of a positive root is the negative root vector, so delta is a multiple of a simple negative
    root exactly when that coordinate carries a simple root, which must also be orthogonal to J.
    """
    certificate = check_horizontal(alg, levi, psi, psi0, lam)
    if not certificate.is_horizontal:
        raise NotHorizontal(f"horizontal checks failed: {certificate.checks}")
    p_psi = p_orbit_dimension(alg, levi, psi)
    p_psi0 = p_orbit_dimension(alg, levi, psi0)
    delta = psi - psi0
    support = delta.support()
    root_ok = False
    root_label = None
    root_coefficients = None
    if len(support) == 1:
        root = root_datum.root_of_coordinate(support[0])
        root_label = root.label
        coefficients = root_datum.simple_coefficients(root)
        root_coefficients = None if coefficients is None else format_vector(coefficients)
        root_ok = root_datum.is_simple(root) and root_datum.orthogonal_to_parabolic(root)
    witnesses = dict(certificate.witnesses)
    witnesses.update({"p_orbit_dims": [p_psi, p_psi0], "delta_support": [alg.basis_labels[i] for i in support],
                      "delta_root": root_label, "delta_root_simple_coefficients": root_coefficients})
    return DegenerationCertificate(
        psi, psi0, certificate.lambda_weights, certificate.checks,
        SimpleChecks(p_orbit_dim_drop_one=p_psi == p_psi0 + 1,
                     delta_is_simple_negative_root_multiple_orthogonal_to_J=root_ok),
        witnesses,
    )


def stabilizer_monotonicity_check(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional,
                                  psi0: Functional) -> bool:
    return levi_orbit_stabilizer_lie(alg, levi, psi).is_subspace_of(levi_orbit_stabilizer_lie(alg, levi, psi0))


def search_cocharacters(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional,
                        psi0: Optional[Functional] = None,
                        bound: int = DEFAULT_COCHARACTER_BOUND) -> List[DegenerationCertificate]:
    """
    Horizontal certificates for every integer cocharacter with entries in [-bound, bound]

    When psi0 is given only limits equal to psi0 are certified; otherwise every nonzero limit
    is tried. An empty result means no certificate was found in the box, not that psi does
    not degenerate.
    """
    context = DegenerationContext(alg, levi, psi)
    found = []
    tried = 0
    for lam in itertools.product(range(-bound, bound + 1), repeat=levi.levi_dim):
        limit = cocharacter_limit(alg, context.torus_weights, lam, psi)
        if limit is None or limit.is_zero() or limit == psi:
            continue
        if psi0 is not None and limit != psi0:
            continue
        tried += 1
        certificate = context.certificate(limit, lam)
        if certificate.is_horizontal:
            found.append(certificate)
    logger.info(f"Cocharacter search on {alg.name}: {tried} limits checked, {len(found)} horizontal")
    return found
