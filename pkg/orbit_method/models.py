from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from commons.utils import format_rational, format_vector
from exact_core.rational_matrix import Matrix, Vector, rank
from exact_core.subspace import Subspace
from lie_structures.models import Functional, NilpotentLieAlgebra


def subspace_to_dict(s: Subspace, labels: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    payload = {"dim": s.dim, "basis": [format_vector(v) for v in s.basis]}
    if labels is not None and all(sum(1 for c in v if c != 0) == 1 for v in s.basis):
        payload["coordinates"] = [labels[p] for p in s.pivots]
    return payload


@dataclass(frozen=True)
class SkewForm:
    """B_psi(x_i, x_j) = psi([x_i, x_j])"""
    matrix: Matrix

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    def to_dict(self) -> Dict[str, Any]:
        return {"rank": self.rank, "matrix": [format_vector(r) for r in self.matrix.to_rows()]}


@dataclass(frozen=True)
class OrbitDescriptor:
    representative: Functional
    dimension: int
    n_stabilizer: Subspace
    canonical_form: Functional
    witness: Tuple[Vector, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        labels = self.representative.algebra.basis_labels
        return {
            "representative": self.representative.to_dict(),
            "dimension": self.dimension,
            "n_stabilizer": subspace_to_dict(self.n_stabilizer, labels),
            "canonical_form": self.canonical_form.to_dict(),
            "witness": [format_vector(y) for y in self.witness],
        }


@dataclass(frozen=True)
class Polarization:
    subspace: Subspace
    flag_used: Optional[Tuple[Subspace, ...]]
    subordinate_certificate: bool
    maximal_certificate: bool

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def to_dict(self, labels: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        payload = {
            "subspace": subspace_to_dict(self.subspace, labels),
            "subordinate_certificate": self.subordinate_certificate,
            "maximal_certificate": self.maximal_certificate,
        }
        if self.flag_used is not None:
            payload["flag"] = [list(term.pivots) for term in self.flag_used]
        return payload


class Classification(Enum):
    TRIVIAL_FUNCTIONAL_ORBIT = "TrivialFunctionalOrbit"
    CHARACTER = "Character"
    WEIL_PULLBACK = "WeilPullback"
    HIGH_DEPTH = "HighDepth"

    @classmethod
    def for_depth(cls, depth: int) -> 'Classification':
        if depth == 0:
            return cls.TRIVIAL_FUNCTIONAL_ORBIT
        if depth == 1:
            return cls.CHARACTER
        if depth == 2:
            return cls.WEIL_PULLBACK
        return cls.HIGH_DEPTH


@dataclass(frozen=True)
class DepthReport:
    depth: int
    vanishing_layer: int
    classification: Classification

    def to_dict(self) -> Dict[str, Any]:
        return {"depth": self.depth, "vanishing_layer": self.vanishing_layer,
                "classification": self.classification.value}


@dataclass(frozen=True)
class HeisenbergQuotient:
    """
    Chain of quotients ending in a Heisenberg algebra on which the pushed-forward functional
    is nonzero on the one-dimensional center
    """
    quotient_chain: Tuple[Tuple[NilpotentLieAlgebra, Matrix], ...]
    final_algebra: NilpotentLieAlgebra
    symplectic_space_dim: int
    pairing: SkewForm
    central_coefficient: Fraction
    pushed_functional: Functional

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain_dims": [alg.dim for alg, _ in self.quotient_chain],
            "final_labels": list(self.final_algebra.basis_labels),
            "symplectic_space_dim": self.symplectic_space_dim,
            "pairing_rank": self.pairing.rank,
            "central_coefficient": format_rational(self.central_coefficient),
        }


class Bound(Enum):
    EXACTLY_ONE = "ExactlyOne"
    AT_MOST_TWO = "AtMostTwo"
    UNKNOWN = "Unknown"


class Reason(Enum):
    CHARACTER = "Character"
    FLAG_STABLE = "FlagStable"
    DEPTH2 = "Depth2"
    NONE = "None"


@dataclass(frozen=True)
class MetaplecticBound:
    bound: Bound
    reason: Reason
    polarization: Optional[Polarization] = None

    def to_dict(self, labels: Optional[Sequence[str]] = None) -> Dict[str, Any]:
        payload = {"bound": self.bound.value, "reason": self.reason.value}
        if self.polarization is not None:
            payload["polarization"] = self.polarization.to_dict(labels)
        return payload


@dataclass(frozen=True)
class HorizontalChecks:
    distinct_orbits: bool
    equal_orbit_dims: bool
    limit_matches: bool
    lambda_commutes_with_stabilizer: bool

    def all_pass(self) -> bool:
        return self.distinct_orbits and self.equal_orbit_dims and self.limit_matches \
            and self.lambda_commutes_with_stabilizer


@dataclass(frozen=True)
class SimpleChecks:
    p_orbit_dim_drop_one: bool
    delta_is_simple_negative_root_multiple_orthogonal_to_J: bool

    def all_pass(self) -> bool:
        return self.p_orbit_dim_drop_one and self.delta_is_simple_negative_root_multiple_orthogonal_to_J


@dataclass(frozen=True)
class DegenerationCertificate:
    psi: Functional
    psi0: Functional
    lambda_weights: Tuple[int, ...]
    checks: HorizontalChecks
    simple_checks: Optional[SimpleChecks] = None
    witnesses: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def is_horizontal(self) -> bool:
        return self.checks.all_pass()

    @property
    def is_simple(self) -> bool:
        return self.is_horizontal and self.simple_checks is not None and self.simple_checks.all_pass()

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "psi": self.psi.to_dict(),
            "psi0": self.psi0.to_dict(),
            "lambda": list(self.lambda_weights),
            "checks": vars(self.checks).copy(),
            "horizontal": self.is_horizontal,
            "witnesses": self.witnesses,
        }
        if self.simple_checks is not None:
            payload["simple_checks"] = vars(self.simple_checks).copy()
            payload["simple"] = self.is_simple
        return payload

