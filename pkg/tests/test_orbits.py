import random
from fractions import Fraction

import pytest

from commons.errors import AlgebraMismatch, InexactExponential
from exact_core.rational_matrix import vector
from lie_structures.catalog import gl_upper_with_root_direction
from lie_structures.models import Functional
from orbit_method.orbits import (
    canonical_form, canonical_form_with_witness, coadjoint_act, conjugate_functional, describe_orbit,
    dual_functional, n_stabilizer, orbit_dimension, replay_witness, same_orbit, skew_form,
    torus_conjugate_functional,
)
from tests.conftest import psi_ab, random_element, sympy_rank
from whittaker_cli.golden import gl4_quadric_point

GL4_FAMILY = ((1, 1), (2, 3), (1, 0), (-1, 0))


def _on_quadric(psi: Functional, a, b) -> bool:
    alg = psi.algebra
    y = {label: psi.coeffs[i] for i, label in enumerate(alg.basis_labels)}
    return y["e_1,4"] == a and a * (y["e_2,3"] - b) == y["e_1,3"] * y["e_2,4"]


@pytest.mark.parametrize("a,b", GL4_FAMILY)
def test_gl4_family_orbits_are_four_dimensional(gl4_algebra, a, b):
    psi = psi_ab(gl4_algebra, a, b)
    assert orbit_dimension(gl4_algebra, psi) == 4
    assert n_stabilizer(gl4_algebra, psi).dim == 2


def test_skew_form_is_antisymmetric_with_oracle_rank(gl4_algebra):
    form = skew_form(gl4_algebra, psi_ab(gl4_algebra, 1, 1))
    m = form.matrix
    assert m == m.transpose().scale(-1)
    assert form.rank == sympy_rank(m) == 4


def test_small_orbits(heis1):
    assert orbit_dimension(heis1, Functional.from_labels(heis1, {"z": 1})) == 2
    assert orbit_dimension(heis1, Functional.from_labels(heis1, {"p_1": 1})) == 0
    assert orbit_dimension(heis1, Functional.zero(heis1)) == 0


@pytest.mark.parametrize("a,b", GL4_FAMILY)
def test_coadjoint_action_stays_on_the_quadric(gl4_algebra, a, b):
    rng = random.Random(f"quadric-{a}-{b}")
    psi = psi_ab(gl4_algebra, a, b)
    for _ in range(10):
        moved = coadjoint_act(gl4_algebra, random_element(rng, gl4_algebra), psi)
        assert _on_quadric(moved, a, b)


def test_coadjoint_action_by_zero_is_identity(gl4_algebra):
    psi = psi_ab(gl4_algebra, 1, 1)
    assert coadjoint_act(gl4_algebra, (0,) * 6, psi) == psi


@pytest.mark.parametrize("a,b", GL4_FAMILY)
def test_same_orbit_on_and_off_the_quadric(gl4_algebra, a, b):
    rng = random.Random(f"membership-{a}-{b}")
    psi = psi_ab(gl4_algebra, a, b)
    for _ in range(5):
        target = gl4_quadric_point(gl4_algebra, a, b, rng)
        witness = same_orbit(gl4_algebra, psi, target)
        assert witness is not None
        assert replay_witness(gl4_algebra, psi, witness) == target
        assert same_orbit(gl4_algebra, psi, gl4_quadric_point(gl4_algebra, a, b, rng, on_quadric=False)) is None


def test_same_orbit_of_identical_functionals_is_empty(gl4_algebra):
    psi = psi_ab(gl4_algebra, 2, 3)
    assert same_orbit(gl4_algebra, psi, psi) == []


def test_functionals_on_other_algebras_are_refused(gl4_algebra, heis1):
    with pytest.raises(AlgebraMismatch):
        same_orbit(gl4_algebra, psi_ab(gl4_algebra, 1, 1), Functional.from_labels(heis1, {"z": 1}))


def test_canonical_form_clears_the_quadric_coordinates(gl4_algebra):
    rng = random.Random(11)
    target = gl4_quadric_point(gl4_algebra, 1, 1, rng)
    canonical, witness = canonical_form_with_witness(gl4_algebra, target)
    assert canonical == canonical_form(gl4_algebra, psi_ab(gl4_algebra, 1, 1))
    assert replay_witness(gl4_algebra, target, witness) == canonical
    assert canonical_form(gl4_algebra, canonical) == canonical


def test_describe_orbit(gl4_algebra):
    psi = psi_ab(gl4_algebra, 1, 0)
    descriptor = describe_orbit(gl4_algebra, psi)
    assert descriptor.dimension == 4
    assert descriptor.n_stabilizer.dim == 2
    assert descriptor.representative == psi
    payload = descriptor.to_dict()
    assert payload["dimension"] == 4
    assert payload["representative"]["coeffs"] == {"e_1,4": "1"}


def test_dual_functional_negates(gl4_algebra):
    psi = psi_ab(gl4_algebra, 1, 1)
    assert dual_functional(psi) == psi_ab(gl4_algebra, -1, -1)
    assert orbit_dimension(gl4_algebra, dual_functional(psi)) == 4


def test_conjugation_by_a_nilpotent_levi_element(gl4_algebra):
    levi = gl_upper_with_root_direction(4, 1, 2)
    psi = Functional.from_labels(gl4_algebra, {"e_1,3": 1})
    moved = conjugate_functional(gl4_algebra, levi, (0, 0, 0, 0, 1), psi)
    assert moved == Functional.from_labels(gl4_algebra, {"e_1,3": 1, "e_2,3": 1})


def test_conjugation_by_a_torus_direction_is_inexact(gl4):
    alg, levi = gl4
    with pytest.raises(InexactExponential):
        conjugate_functional(alg, levi, (1, 0, 0, 0), psi_ab(alg, 1, 1))


def test_torus_direction_fixing_the_support_is_exact(gl4):
    alg, levi = gl4
    assert conjugate_functional(alg, levi, (0, 0, 1, 0), psi_ab(alg, 1, 0)) == psi_ab(alg, 1, 0)
    assert conjugate_functional(alg, levi, (1, 0, 0, 1), psi_ab(alg, 0, 1)) == psi_ab(alg, 0, 1)
    with pytest.raises(InexactExponential, match="torus_conjugate_functional"):
        conjugate_functional(alg, levi, (0, 0, 1, 0), psi_ab(alg, 1, 1))


def test_torus_conjugation_scales_by_weights(gl4):
    alg, levi = gl4
    t = Fraction(5, 2)
    moved = torus_conjugate_functional(alg, levi, (1, 1, t, 1), psi_ab(alg, 1, 1))
    assert moved == psi_ab(alg, 1, t)
    assert torus_conjugate_functional(alg, levi, (1, 1, 1, 1), psi_ab(alg, 2, 3)) == psi_ab(alg, 2, 3)
    with pytest.raises(ValueError):
        torus_conjugate_functional(alg, levi, (0, 1, 1, 1), psi_ab(alg, 1, 1))


def test_witness_flows_are_vectors(gl4_algebra):
    rng = random.Random(3)
    target = gl4_quadric_point(gl4_algebra, 2, 3, rng)
    witness = same_orbit(gl4_algebra, psi_ab(gl4_algebra, 2, 3), target)
    assert all(len(y) == 6 for y in witness)
    assert all(isinstance(c, Fraction) for y in witness for c in vector(y))
