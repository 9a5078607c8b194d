import random
from fractions import Fraction

import pytest
import sympy

from exact_core.rational_matrix import Matrix
from lie_structures.catalog import catalog_gl_upper, catalog_heisenberg, catalog_sp_unipotent, load_catalog
from lie_structures.models import Functional, NilpotentLieAlgebra

CATALOG_SAMPLE = ("gl_upper:3", "gl_upper:4", "gl_upper:5", "sp:2", "sp:3", "heis:1", "heis:2", "heis:3")


def psi_ab(alg: NilpotentLieAlgebra, a, b) -> Functional:
    return Functional.from_labels(alg, {"e_1,4": a, "e_2,3": b})


def sympy_rank(m: Matrix) -> int:
    """Independent rank oracle"""
    if m.rows == 0 or m.cols == 0:
        return 0
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(c.numerator, c.denominator) for c in m.entries]).rank()


def random_rational(rng: random.Random, spread: int = 5) -> Fraction:
    return Fraction(rng.randint(-spread, spread), rng.randint(1, 3))


def random_functional(rng: random.Random, alg: NilpotentLieAlgebra, density: float = 0.6) -> Functional:
    return Functional(alg, tuple(random_rational(rng) if rng.random() < density else Fraction(0)
                                 for _ in range(alg.dim)))


def random_element(rng: random.Random, alg: NilpotentLieAlgebra):
    return tuple(random_rational(rng, 3) if rng.random() < 0.5 else Fraction(0) for _ in range(alg.dim))


@pytest.fixture
def gl4():
    return catalog_gl_upper(4)


@pytest.fixture
def gl4_algebra(gl4):
    return gl4[0]


@pytest.fixture
def sp3():
    return catalog_sp_unipotent(3)


@pytest.fixture
def heis1():
    return catalog_heisenberg(1)


@pytest.fixture
def heis2():
    return catalog_heisenberg(2)


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture(params=CATALOG_SAMPLE)
def catalog_entry(request):
    return load_catalog(request.param)
