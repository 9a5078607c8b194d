import json
import logging
import os
import random
from fractions import Fraction
from typing import Any, Callable, Dict, List

from commons.constants import (
    CASE_COSETS, CASE_DEGENERATION, CASE_GL4, CASE_GLN, CASE_HEISENBERG, CASE_SP, CATALOG_GL_UPPER,
    CATALOG_HEISENBERG, CATALOG_SEPARATOR, CATALOG_SP, LABEL_HEIS_P, LABEL_HEIS_Z, LABEL_MATRIX_ENTRY,
    MSG_EPSILON_CAVEAT,
)
from commons.errors import UnknownCaseSet
from exact_core.subspace import Subspace
from lie_structures.algebra_ops import algebra_depth, center, pattern_from_labels
from lie_structures.catalog import load_catalog, sp_pairs
from lie_structures.models import Functional, NilpotentLieAlgebra, WeightedLeviAction
from orbit_method.classification import depth, heisenberg_quotient, metaplectic_degree_bound
from orbit_method.cosets import double_coset_reps, inner_coset_reps
from orbit_method.levi_degeneration import (
    check_horizontal, check_simple, levi_orbit_stabilizer_lie, p_orbit_dimension, search_cocharacters,
    stabilizer_monotonicity_check,
)
from orbit_method.orbits import orbit_dimension, replay_witness, same_orbit
from orbit_method.polarizations import is_polarization, stabilizes_flag, vergne_polarization
from orbit_method.root_datum import gl_root_datum
from whittaker_cli.commands import matrix_rows, torus_pattern
from whittaker_cli.config_manager import ConfigManager
from whittaker_cli.report import Report

logger = logging.getLogger(__name__)

EXPECTATIONS_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden_expectations.json")

GL4_FAMILY = ((1, 1), (2, 3), (1, 0), (-1, 0))
GLN_SCALARS = (1, 3)
QUADRIC_POINTS = 20
GOLDEN_SEED = 20240


def load_expectations(path: str = EXPECTATIONS_FILE) -> Dict[str, Any]:
    with open(path, 'r') as f:
        return json.load(f)


def _attach_expectations(report: Report, table: Dict[str, Any]) -> Report:
    """Copy the stored expectations and known discrepancies for this case onto the report"""
    anchors = table.get("anchors", {})
    default_anchor = table["anchor"]
    for key, expected in table.get("cases", {}).get(report.case_name, {}).items():
        report.expect(key, expected, anchors.get(key, default_anchor))
    for key, stated in table.get("known_discrepancies", {}).get(report.case_name, {}).items():
        report.known_discrepancies.append({
            "key": key,
            "stated": stated,
            "computed": report.results.get(key),
            "anchor": anchors.get(key, default_anchor),
        })
    if report.case_name not in table.get("cases", {}):
        logger.warning(f"No stored expectations for {report.case_name}; reporting results only")
    return report


def gl_polarization_labels(n: int) -> List[str]:
    """Strictly upper triangular matrices whose first row is zero except the corner"""
    labels = [LABEL_MATRIX_ENTRY.format(i=i, j=j) for i in range(2, n + 1) for j in range(i + 1, n + 1)]
    return [LABEL_MATRIX_ENTRY.format(i=1, j=n)] + labels


def sp_polarization_labels(n: int) -> List[str]:
    """Every coordinate except e_1,2 .. e_1,n"""
    return [LABEL_MATRIX_ENTRY.format(i=p, j=l) for p, l in sp_pairs(n) if not (p == 1 and l <= n)]


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def gl4_quadric_point(alg: NilpotentLieAlgebra, a, b, rng: random.Random, on_quadric: bool = True) -> Functional:
    """
    Random y with y_1,4 = a and a (y_2,3 - b) = y_1,3 y_2,4, or a point of the plane y_1,4 = a
    off that quadric
    """
    y13, y24, y12, y34 = (_random_rational(rng) for _ in range(4))
    y23 = Fraction(b) + y13 * y24 / Fraction(a)
    if not on_quadric:
        y23 += rng.choice([-1, 1]) * Fraction(rng.randint(1, 5), rng.randint(1, 3))
    return Functional.from_labels(alg, {"e_1,2": y12, "e_1,3": y13, "e_1,4": a, "e_2,3": y23, "e_2,4": y24,
                                        "e_3,4": y34})


def _stabilizer_results(alg: NilpotentLieAlgebra, levi: WeightedLeviAction, psi: Functional,
                        h: Subspace) -> Dict[str, Any]:
    s = levi_orbit_stabilizer_lie(alg, levi, psi)
    return {
        "orbit_dimension": orbit_dimension(alg, psi),
        "depth": depth(alg, psi).depth,
        "levi_stabilizer_dim": s.dim,
        "torus_pattern": torus_pattern(levi, s),
        "displayed_h_is_polarization": is_polarization(alg, psi, h),
        "displayed_h_stable": stabilizes_flag(alg, levi, s, h),
    }


def _gl4_reports(config: ConfigManager) -> List[Report]:
    alg, levi = load_catalog(f"{CATALOG_GL_UPPER}{CATALOG_SEPARATOR}4")
    h = pattern_from_labels(alg, gl_polarization_labels(4))
    reports = []
    for a, b in GL4_FAMILY:
        rng = random.Random(f"{GOLDEN_SEED}:{a}:{b}")
        psi = Functional.from_labels(alg, {"e_1,4": a, "e_2,3": b})
        results = _stabilizer_results(alg, levi, psi, h)
        bound = metaplectic_degree_bound(alg, levi, levi_orbit_stabilizer_lie(alg, levi, psi), psi, [h])
        results["metaplectic_bound"] = bound.bound.value
        results["metaplectic_reason"] = bound.reason.value
        in_orbit = replayed = 0
        for _ in range(QUADRIC_POINTS):
            target = gl4_quadric_point(alg, a, b, rng)
            witness = same_orbit(alg, psi, target)
            if witness is not None:
                in_orbit += 1
                replayed += int(replay_witness(alg, psi, witness) == target)
        off_quadric = sum(same_orbit(alg, psi, gl4_quadric_point(alg, a, b, rng, on_quadric=False)) is not None
                          for _ in range(QUADRIC_POINTS))
        results.update({"quadric_points_in_orbit": in_orbit, "quadric_witnesses_replayed": replayed,
                        "off_quadric_points_in_orbit": off_quadric})
        reports.append(Report(f"{CASE_GL4}:psi_ab({a},{b})", {"algebra": "gl_upper:4", "a": a, "b": b}, results))
    return reports


def _gln_reports(config: ConfigManager) -> List[Report]:
    reports = []
    for n in config.get_golden_sizes(CASE_GLN):
        alg, levi = load_catalog(f"{CATALOG_GL_UPPER}{CATALOG_SEPARATOR}{n}")
        h = pattern_from_labels(alg, gl_polarization_labels(n))
        for a in GLN_SCALARS:
            psi = Functional.from_labels(alg, {LABEL_MATRIX_ENTRY.format(i=1, j=n): a})
            reports.append(Report(f"{CASE_GLN}:n={n}:a={a}", {"algebra": f"gl_upper:{n}", "f": f"f({a})"},
                                  _stabilizer_results(alg, levi, psi, h)))
    return reports


def _sp_reports(config: ConfigManager) -> List[Report]:
    reports = []
    for n in config.get_golden_sizes(CASE_SP):
        alg, levi = load_catalog(f"{CATALOG_SP}{CATALOG_SEPARATOR}{n}")
        psi = Functional.from_labels(alg, {LABEL_MATRIX_ENTRY.format(i=1, j=2 * n): 1})
        h = pattern_from_labels(alg, sp_polarization_labels(n))
        results = _stabilizer_results(alg, levi, psi, h)
        results.update({"algebra_dim": alg.dim, "center_dim": center(alg).dim, "algebra_depth": algebra_depth(alg)})
        reports.append(Report(f"{CASE_SP}:n={n}", {"algebra": f"sp:{n}", "f": "f(1)"}, results,
                              caveats=[MSG_EPSILON_CAVEAT]))
    return reports


def _heisenberg_reports(config: ConfigManager) -> List[Report]:
    reports = []
    for m in config.get_golden_sizes(CASE_HEISENBERG):
        alg, levi = load_catalog(f"{CATALOG_HEISENBERG}{CATALOG_SEPARATOR}{m}")
        for kind, label in (("central", LABEL_HEIS_Z), ("noncentral", LABEL_HEIS_P.format(i=1))):
            psi = Functional.from_labels(alg, {label: 1})
            report = depth(alg, psi)
            polarization = vergne_polarization(alg, psi)
            bound = metaplectic_degree_bound(alg, levi, levi_orbit_stabilizer_lie(alg, levi, psi), psi)
            results = {
                "classification": report.classification.value,
                "orbit_dimension": orbit_dimension(alg, psi),
                "polarization_dim": polarization.dim,
                "polarization_contains_center": center(alg).is_subspace_of(polarization.subspace),
                "is_polarization": polarization.subordinate_certificate and polarization.maximal_certificate,
                "metaplectic_bound": bound.bound.value,
                "metaplectic_reason": bound.reason.value,
            }
            if report.depth == 2:
                results["symplectic_space_dim"] = heisenberg_quotient(alg, psi).symplectic_space_dim
            reports.append(Report(f"{CASE_HEISENBERG}:m={m}:{kind}", {"algebra": f"heis:{m}", "psi": {label: "1"}},
                                  results))
    return reports


DEGENERATION_CASES = (
    ("gl4", 4, {"e_1,4": 1, "e_2,3": 1}, {"e_1,4": 1}, (0, 0, 1, 0)),
    ("gl3", 3, {"e_1,2": 1, "e_2,3": 1}, {"e_1,2": 1}, (0, 0, 1)),
    ("gl5", 5, {"e_1,2": 1, "e_2,3": 1, "e_3,4": 1, "e_4,5": 1}, {"e_1,2": 1, "e_4,5": 1}, (0, 0, 1, 2, 2)),
)


def _degeneration_reports(config: ConfigManager) -> List[Report]:
    reports = []
    bound = config.get_cocharacter_bound()
    for name, n, psi_values, psi0_values, lam in DEGENERATION_CASES:
        alg, levi = load_catalog(f"{CATALOG_GL_UPPER}{CATALOG_SEPARATOR}{n}")
        psi = Functional.from_labels(alg, psi_values)
        psi0 = Functional.from_labels(alg, psi0_values)
        certificate = check_horizontal(alg, levi, psi, psi0, lam)
        results = {"horizontal": certificate.is_horizontal, "simple": None}
        if certificate.is_horizontal:
            certificate = check_simple(alg, levi, gl_root_datum(n), psi, psi0, lam)
            results["simple"] = certificate.is_simple
            results["stabilizer_monotonicity"] = stabilizer_monotonicity_check(alg, levi, psi, psi0)
        results["p_orbit_dims"] = [p_orbit_dimension(alg, levi, psi), p_orbit_dimension(alg, levi, psi0)]
        found = search_cocharacters(alg, levi, psi, bound=bound)
        results["search_found_any"] = bool(found)
        results["search_finds_psi0"] = any(c.psi0 == psi0 for c in found)
        results["certificate"] = certificate.to_dict()
        inputs = {"algebra": f"gl_upper:{n}", "psi": psi.to_dict(), "psi0": psi0.to_dict(), "lambda": list(lam),
                  "bound": bound}
        reports.append(Report(f"{CASE_DEGENERATION}:{name}", inputs, results))
    return reports


def _coset_reports(config: ConfigManager) -> List[Report]:
    reports = []
    for n in config.get_golden_sizes(CASE_COSETS):
        doubles = double_coset_reps(n)
        results = {"double_coset_count": len(doubles), "double_coset_reps": [matrix_rows(g) for g in doubles]}
        if n >= 5:
            results["inner_coset_count"] = len(inner_coset_reps(n))
        reports.append(Report(f"{CASE_COSETS}:n={n}", {"n": n}, results))
    return reports


CASE_BUILDERS: Dict[str, Callable[[ConfigManager], List[Report]]] = {
    CASE_GL4: _gl4_reports,
    CASE_GLN: _gln_reports,
    CASE_SP: _sp_reports,
    CASE_HEISENBERG: _heisenberg_reports,
    CASE_DEGENERATION: _degeneration_reports,
    CASE_COSETS: _coset_reports,
}


def cmd_golden(case_set: str, config: ConfigManager, expectations_file: str = EXPECTATIONS_FILE) -> List[Report]:
    """
    Run the battery for one case set and hold every result to the stored expectations

    Args:
        case_set: one of gl4, gln, sp, heisenberg, degeneration, cosets
        config: supplies the sizes and the cocharacter bound
        expectations_file: JSON table of expected values with their source anchors

    Returns:
        Reports in a fixed order; a report matches iff every stored expectation equals its result
    """
    if case_set not in CASE_BUILDERS:
        raise UnknownCaseSet(case_set)
    table = load_expectations(expectations_file)[case_set]
    reports = [_attach_expectations(report, table) for report in CASE_BUILDERS[case_set](config)]
    for report in reports:
        for message in report.mismatches():
            logger.error(message)
        logger.info(f"Golden case {report.case_name}: {'match' if report.match else 'MISMATCH'}")
    return reports
