import pytest

from commons.errors import (
    AlgebraMismatch, CatalogError, DimensionMismatch, NotDiagonalAction, NotHorizontal, TrivialFunctional,
)
from lie_structures.catalog import catalog_gl_upper, catalog_sp_unipotent, heisenberg_symplectic_action
from lie_structures.models import Functional
from orbit_method.levi_degeneration import (
    check_horizontal, check_simple, cocharacter_limit, coordinate_weights, levi_orbit_stabilizer_lie,
    p_orbit_dimension, search_cocharacters, stabilizer_monotonicity_check,
)
from orbit_method.root_datum import GroupType, gl_root_datum, sp_root_datum
from tests.conftest import psi_ab
from whittaker_cli.commands import torus_pattern


@pytest.mark.parametrize("a, b, dim, pattern", [
    (1, 1, 2, "diag(a1,a2,a2,a1)"),
    (2, 3, 2, "diag(a1,a2,a2,a1)"),
    (1, 0, 3, "diag(a1,a2,a3,a1)"),
    (-1, 0, 3, "diag(a1,a2,a3,a1)"),
])
def test_gl4_family_stabilizer(gl4, a, b, dim, pattern):
    alg, levi = gl4
    s = levi_orbit_stabilizer_lie(alg, levi, psi_ab(alg, a, b))
    assert s.dim == dim
    assert torus_pattern(levi, s) == pattern


def test_gl4_family_p_orbit_dimensions(gl4):
    alg, levi = gl4
    assert p_orbit_dimension(alg, levi, psi_ab(alg, 1, 1)) == 6
    assert p_orbit_dimension(alg, levi, psi_ab(alg, 1, 0)) == 5


@pytest.mark.parametrize("n", (4, 5, 6))
def test_gl_corner_stabilizer(n):
    alg, levi = catalog_gl_upper(n)
    s = levi_orbit_stabilizer_lie(alg, levi, Functional.from_labels(alg, {f"e_1,{n}": 3}))
    assert s.dim == n - 1
    entries = [f"a{k}" for k in range(1, n)] + ["a1"]
    assert torus_pattern(levi, s) == f"diag({','.join(entries)})"


@pytest.mark.parametrize("n", (2, 3, 4))
def test_sp_corner_stabilizer(n):
    alg, levi = catalog_sp_unipotent(n)
    s = levi_orbit_stabilizer_lie(alg, levi, Functional.from_labels(alg, {f"e_1,{2 * n}": 1}))
    assert s.dim == n - 1
    middle = [f"a{k}" for k in range(1, n)]
    entries = ["0"] + middle + [f"-a{k}" for k in reversed(range(1, n))] + ["0"]
    assert torus_pattern(levi, s) == f"diag({','.join(entries)})"


def test_trivial_functional_keeps_the_whole_levi(gl4):
    alg, levi = gl4
    assert levi_orbit_stabilizer_lie(alg, levi, Functional.zero(alg)).dim == 4


def test_coordinate_weights(gl4):
    _, levi = gl4
    assert coordinate_weights(levi.torus_weights(), (0, 0, 1, 0)) == [0, 1, 0, 1, 0, -1]
    with pytest.raises(DimensionMismatch):
        coordinate_weights(levi.torus_weights(), (0, 1))


def test_cocharacter_limit(gl4):
    alg, levi = gl4
    weights = levi.torus_weights()
    assert cocharacter_limit(alg, weights, (0, 0, 1, 0), psi_ab(alg, 1, 1)) == psi_ab(alg, 1, 0)
    assert cocharacter_limit(alg, weights, (0, 1, 0, 0), psi_ab(alg, 1, 1)) is None
    assert cocharacter_limit(alg, weights, (0, 0, 0, 0), psi_ab(alg, 1, 1)) == psi_ab(alg, 1, 1)


def test_gl4_degeneration_is_simple(gl4):
    alg, levi = gl4
    psi, psi0 = psi_ab(alg, 1, 1), psi_ab(alg, 1, 0)
    horizontal = check_horizontal(alg, levi, psi, psi0, (0, 0, 1, 0))
    assert horizontal.is_horizontal
    assert horizontal.simple_checks is None
    certificate = check_simple(alg, levi, gl_root_datum(4), psi, psi0, (0, 0, 1, 0))
    assert certificate.is_simple
    assert certificate.witnesses["p_orbit_dims"] == [6, 5]
    assert certificate.witnesses["delta_support"] == ["e_2,3"]
    assert certificate.witnesses["delta_root_simple_coefficients"] == ["0", "1", "0"]
    assert certificate.to_dict()["simple"] is True
    assert stabilizer_monotonicity_check(alg, levi, psi, psi0)


def test_gl3_degeneration_is_simple():
    alg, levi = catalog_gl_upper(3)
    psi = Functional.from_labels(alg, {"e_1,2": 1, "e_2,3": 1})
    psi0 = Functional.from_labels(alg, {"e_1,2": 1})
    certificate = check_simple(alg, levi, gl_root_datum(3), psi, psi0, (0, 0, 1))
    assert certificate.is_simple
    assert certificate.witnesses["p_orbit_dims"] == [2, 1]


def test_gl5_degeneration_is_horizontal_but_not_simple():
    alg, levi = catalog_gl_upper(5)
    psi = Functional.from_labels(alg, {"e_1,2": 1, "e_2,3": 1, "e_3,4": 1, "e_4,5": 1})
    psi0 = Functional.from_labels(alg, {"e_1,2": 1, "e_4,5": 1})
    certificate = check_simple(alg, levi, gl_root_datum(5), psi, psi0, (0, 0, 1, 2, 2))
    assert certificate.is_horizontal
    assert not certificate.is_simple
    assert not certificate.simple_checks.delta_is_simple_negative_root_multiple_orthogonal_to_J
    assert certificate.witnesses["delta_root_simple_coefficients"] is None


def test_stabilizer_monotonicity_can_fail():
    alg, levi = catalog_gl_upper(5)
    psi = Functional.from_labels(alg, {"e_1,2": 1})
    psi0 = Functional.from_labels(alg, {"e_2,3": 1})
    assert not stabilizer_monotonicity_check(alg, levi, psi, psi0)


def test_same_orbit_is_not_a_degeneration(gl4):
    alg, levi = gl4
    psi = psi_ab(alg, 1, 1)
    certificate = check_horizontal(alg, levi, psi, psi, (0, 0, 0, 0))
    assert not certificate.is_horizontal
    assert not certificate.checks.distinct_orbits
    with pytest.raises(NotHorizontal):
        check_simple(alg, levi, gl_root_datum(4), psi, psi, (0, 0, 0, 0))


def test_trivial_functional_is_rejected(gl4):
    alg, levi = gl4
    with pytest.raises(TrivialFunctional):
        check_horizontal(alg, levi, Functional.zero(alg), psi_ab(alg, 1, 0), (0, 0, 1, 0))
    with pytest.raises(TrivialFunctional):
        check_horizontal(alg, levi, psi_ab(alg, 1, 1), Functional.zero(alg), (0, 0, 1, 0))


def test_functional_from_another_algebra_is_rejected(gl4):
    alg, levi = gl4
    other, _ = catalog_gl_upper(3)
    with pytest.raises(AlgebraMismatch):
        check_horizontal(alg, levi, psi_ab(alg, 1, 1), Functional.from_labels(other, {"e_1,2": 1}), (0, 0, 1, 0))


def test_search_finds_the_gl4_cocharacter(gl4):
    alg, levi = gl4
    found = search_cocharacters(alg, levi, psi_ab(alg, 1, 1), psi_ab(alg, 1, 0), bound=1)
    assert found
    assert (0, 0, 1, 0) in [c.lambda_weights for c in found]
    assert all(c.is_horizontal and c.psi0 == psi_ab(alg, 1, 0) for c in found)


def test_search_without_target_only_returns_horizontal_limits(gl4):
    alg, levi = gl4
    for certificate in search_cocharacters(alg, levi, psi_ab(alg, 1, 1), bound=1):
        assert certificate.is_horizontal
        assert not certificate.psi0.is_zero()


def test_non_diagonal_levi_is_rejected():
    levi = heisenberg_symplectic_action(1)
    psi = Functional.from_labels(levi.algebra, {"z": 1, "p_1": 1})
    with pytest.raises(NotDiagonalAction):
        search_cocharacters(levi.algebra, levi, psi, bound=1)


def test_gl_root_datum():
    alg, _ = catalog_gl_upper(4)
    datum = gl_root_datum(4)
    assert datum.group == GroupType.GL
    assert [datum.roots[i].label for i in datum.simple_roots] == ["e_1,2", "e_2,3", "e_3,4"]
    corner = datum.root_of_coordinate(alg.label_index("e_1,4"))
    assert corner.weight == (1, 0, 0, -1)
    assert not datum.is_simple(corner)
    assert datum.simple_coefficients(corner) == (1, 1, 1)


def test_parabolic_orthogonality():
    alg, _ = catalog_gl_upper(4)
    datum = gl_root_datum(4, (0,))
    assert not datum.orthogonal_to_parabolic(datum.root_of_coordinate(alg.label_index("e_2,3")))
    assert datum.orthogonal_to_parabolic(datum.root_of_coordinate(alg.label_index("e_3,4")))
    with pytest.raises(CatalogError):
        gl_root_datum(4, (1,))


@pytest.mark.parametrize("n", [2, 3])
def test_sp_roots_are_nonnegative_integer_sums_of_simple_roots(n):
    datum = sp_root_datum(n)
    assert datum.group == GroupType.SP
    assert len(datum.roots) == n * n
    assert len(datum.simple_roots) == n
    for root in datum.roots:
        coefficients = datum.simple_coefficients(root)
        assert all(c >= 0 and c.denominator == 1 for c in coefficients)
        rebuilt = [sum(c * datum.roots[i].weight[k] for c, i in zip(coefficients, datum.simple_roots))
                   for k in range(n)]
        assert rebuilt == list(root.weight)
