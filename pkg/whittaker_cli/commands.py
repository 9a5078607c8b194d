import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from commons.constants import (
    CATALOG_SP, CMD_CLASSIFY, CMD_COSETS, CMD_DEGENERATE, CMD_ORBIT, CMD_POLARIZE, CMD_STABILIZER,
    DEFAULT_COCHARACTER_BOUND, MSG_EPSILON_CAVEAT, MSG_NO_CERTIFICATE,
)
from commons.errors import ParseError
from commons.utils import format_rational, format_vector
from exact_core.rational_matrix import Matrix
from exact_core.subspace import Subspace
from lie_structures.algebra_ops import center
from lie_structures.models import Functional, WeightedLeviAction
from orbit_method.classification import depth, heisenberg_quotient, is_character, metaplectic_degree_bound
from orbit_method.cosets import double_coset_reps, inner_coset_reps
from orbit_method.levi_degeneration import (
    check_horizontal, check_simple, cocharacter_limit, levi_orbit_stabilizer_lie, p_orbit_dimension,
    search_cocharacters, stabilizer_monotonicity_check,
)
from orbit_method.models import subspace_to_dict
from orbit_method.orbits import describe_orbit
from orbit_method.polarizations import certify_polarization, is_polarization, vergne_polarization
from whittaker_cli.parsing import (
    AlgebraInput, parse_algebra, parse_coordinate_set, parse_flag, parse_functional, parse_lambda,
)
from whittaker_cli.report import Report

logger = logging.getLogger(__name__)


def matrix_rows(m: Matrix) -> List[List[str]]:
    return [format_vector(row) for row in m.to_rows()]


def _linear_form(coefficients: Sequence[Fraction]) -> str:
    """a1 - a3, 2*a2, 0 ..."""
    terms = []
    for j, c in enumerate(coefficients):
        if c == 0:
            continue
        name = f"a{j + 1}"
        if c == 1:
            term = name
        elif c == -1:
            term = f"-{name}"
        else:
            term = f"{format_rational(c)}*{name}"
        terms.append(term)
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


def torus_pattern(levi: WeightedLeviAction, s: Subspace) -> Optional[str]:
    """
    Generic element of s written as diag(...) through the matrix realization of the Levi

    The j-th basis vector of s contributes the parameter a_j. None when the Levi has no
    realization or s is not diagonal there.
    """
    if not levi.realization:
        return None
    size = levi.realization[0].rows
    generators = []
    for x in s.basis:
        m = Matrix.zeros(size, size)
        for c, r in zip(x, levi.realization):
            if c != 0:
                m = m + r.scale(c)
        if any(m.entry(i, j) != 0 for i in range(size) for j in range(size) if i != j):
            return None
        generators.append(m)
    entries = [_linear_form([g.entry(i, i) for g in generators]) for i in range(size)]
    return f"diag({','.join(entries)})"


def levi_or_trivial(source: AlgebraInput) -> WeightedLeviAction:
    """The catalog Levi action, or the zero Levi for algebras entered as JSON"""
    if source.levi is not None:
        return source.levi
    return WeightedLeviAction(source.algebra, 0, (), ())


def levi_stabilizer(source: AlgebraInput, psi: Functional) -> Subspace:
    levi = levi_or_trivial(source)
    if levi.levi_dim == 0:
        return Subspace.zero(0)
    return levi_orbit_stabilizer_lie(source.algebra, levi, psi)


def cmd_orbit(algebra_spec: str, psi_text: str) -> Report:
    """Orbit dimension, N-stabilizer, canonical form and depth of psi"""
    source = parse_algebra(algebra_spec)
    psi = parse_functional(source, psi_text)
    descriptor = describe_orbit(source.algebra, psi)
    report = depth(source.algebra, psi)
    results = {
        "orbit_dimension": descriptor.dimension,
        "n_stabilizer_dim": descriptor.n_stabilizer.dim,
        "depth": report.depth,
        "classification": report.classification.value,
    }
    results.update({key: value for key, value in descriptor.to_dict().items() if key != "dimension"})
    return Report(CMD_ORBIT, {"algebra": algebra_spec, "psi": psi_text}, results)


def cmd_classify(algebra_spec: str, psi_text: str, h_text: Optional[str] = None) -> Report:
    """Depth classification, the Heisenberg reduction for depth two, and the metaplectic degree bound"""
    source = parse_algebra(algebra_spec)
    alg = source.algebra
    psi = parse_functional(source, psi_text)
    report = depth(alg, psi)
    results: Dict[str, Any] = report.to_dict()
    results["is_character"] = is_character(alg, psi)
    if report.depth == 2:
        reduction = heisenberg_quotient(alg, psi)
        results["heisenberg_quotient"] = reduction.to_dict()
        results["symplectic_space_dim"] = reduction.symplectic_space_dim
    candidates = [parse_coordinate_set(source, h_text)] if h_text else []
    bound = metaplectic_degree_bound(alg, levi_or_trivial(source), levi_stabilizer(source, psi), psi, candidates)
    results["metaplectic_bound"] = bound.to_dict(alg.basis_labels)
    inputs = {"algebra": algebra_spec, "psi": psi_text}
    if h_text:
        inputs["h"] = h_text
    return Report(CMD_CLASSIFY, inputs, results)


def cmd_polarize(algebra_spec: str, psi_text: str, flag_text: Optional[str] = None,
                 h_text: Optional[str] = None) -> Report:
    """Vergne polarization for a flag (default: Jordan-Hoelder), or the certificates of a given subalgebra"""
    source = parse_algebra(algebra_spec)
    alg = source.algebra
    psi = parse_functional(source, psi_text)
    inputs = {"algebra": algebra_spec, "psi": psi_text}
    if h_text:
        inputs["h"] = h_text
        h = parse_coordinate_set(source, h_text)
        polarization = certify_polarization(alg, psi, h)
    else:
        if flag_text:
            inputs["flag"] = flag_text
        flag = parse_flag(source, flag_text) if flag_text else None
        polarization = vergne_polarization(alg, psi, flag)
    results = {
        "polarization": polarization.to_dict(alg.basis_labels),
        "dim": polarization.dim,
        "is_polarization": polarization.subordinate_certificate and polarization.maximal_certificate,
        "contains_center": center(alg).is_subspace_of(polarization.subspace),
    }
    return Report(CMD_POLARIZE, inputs, results)


def cmd_stabilizer(algebra_spec: str, psi_text: str) -> Report:
    """N-stabilizer and Levi stabilizer of the orbit of psi"""
    source = parse_algebra(algebra_spec)
    alg = source.algebra
    levi = source.require_levi()
    psi = parse_functional(source, psi_text)
    s = levi_orbit_stabilizer_lie(alg, levi, psi)
    descriptor = describe_orbit(alg, psi)
    results = {
        "orbit_dimension": descriptor.dimension,
        "n_stabilizer_dim": descriptor.n_stabilizer.dim,
        "levi_stabilizer_dim": s.dim,
        "levi_stabilizer": subspace_to_dict(s, levi.labels),
        "torus_pattern": torus_pattern(levi, s),
        "p_orbit_dimension": p_orbit_dimension(alg, levi, psi),
    }
    caveats = [MSG_EPSILON_CAVEAT] if source.family == CATALOG_SP else []
    return Report(CMD_STABILIZER, {"algebra": algebra_spec, "psi": psi_text}, results, caveats=caveats)


def cmd_degenerate(algebra_spec: str, psi_text: str, psi0_text: Optional[str] = None,
                   lambda_text: Optional[str] = None, bound: int = DEFAULT_COCHARACTER_BOUND) -> Report:
    """
    Horizontal (and simple) degeneration certificate for a given cocharacter, or a bounded
    search over cocharacters when none is given
    """
    source = parse_algebra(algebra_spec)
    alg = source.algebra
    levi = source.require_levi()
    psi = parse_functional(source, psi_text)
    psi0 = parse_functional(source, psi0_text) if psi0_text else None
    inputs = {"algebra": algebra_spec, "psi": psi_text}
    if psi0_text:
        inputs["psi0"] = psi0_text
    if lambda_text is None:
        inputs["bound"] = bound
        found = search_cocharacters(alg, levi, psi, psi0, bound)
        results = {
            "found": len(found),
            "lambdas": [list(c.lambda_weights) for c in found],
            "certificates": [c.to_dict() for c in found],
        }
        caveats = [] if found else [MSG_NO_CERTIFICATE.format(bound=bound)]
        return Report(CMD_DEGENERATE, inputs, results, caveats=caveats)
    inputs["lambda"] = lambda_text
    lam = parse_lambda(lambda_text)
    if psi0 is None:
        psi0 = cocharacter_limit(alg, levi.torus_weights(), lam, psi)
        if psi0 is None:
            raise ParseError("psi0", "the cocharacter limit of psi diverges; give psi0 explicitly")
    certificate = check_horizontal(alg, levi, psi, psi0, lam)
    results = {"horizontal": certificate.is_horizontal, "simple": None}
    root_datum = source.root_datum()
    if certificate.is_horizontal:
        results["stabilizer_monotonicity"] = stabilizer_monotonicity_check(alg, levi, psi, psi0)
        if root_datum is not None:
            certificate = check_simple(alg, levi, root_datum, psi, psi0, lam)
            results["simple"] = certificate.is_simple
    results["certificate"] = certificate.to_dict()
    return Report(CMD_DEGENERATE, inputs, results)


def cmd_cosets(n: int) -> Report:
    """Double-coset representatives g_k and the inner representatives h_l for GL_n"""
    doubles = double_coset_reps(n)
    results: Dict[str, Any] = {
        "double_coset_count": len(doubles),
        "double_coset_reps": [matrix_rows(g) for g in doubles],
    }
    if n >= 5:
        inner = inner_coset_reps(n)
        results["inner_coset_count"] = len(inner)
        results["inner_coset_reps"] = [matrix_rows(h) for h in inner]
    return Report(CMD_COSETS, {"n": n}, results)
