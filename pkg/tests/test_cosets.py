import pytest

from commons.errors import CatalogError
from exact_core.rational_matrix import Matrix
from orbit_method.cosets import double_coset_reps, inner_coset_reps, permutation_matrix


def _targets(m: Matrix):
    return [row.index(1) for row in m.to_rows()]


@pytest.mark.parametrize("n", (4, 5, 6, 7, 8))
def test_coset_counts(n):
    assert len(double_coset_reps(n)) == n - 2
    if n >= 5:
        assert len(inner_coset_reps(n)) == n - 3


def test_double_coset_reps_for_five():
    reps = double_coset_reps(5)
    assert reps[0] == Matrix.identity(5)
    assert _targets(reps[1]) == [0, 2, 1, 3, 4]
    assert _targets(reps[2]) == [0, 3, 1, 2, 4]


def test_inner_coset_reps_for_five():
    reps = inner_coset_reps(5)
    assert reps[0] == Matrix.identity(5)
    assert _targets(reps[1]) == [0, 1, 3, 2, 4]


@pytest.mark.parametrize("n", (4, 6, 8))
def test_reps_are_permutation_matrices(n):
    for g in double_coset_reps(n) + (inner_coset_reps(n) if n >= 5 else []):
        assert sorted(_targets(g)) == list(range(n))
        assert all(sum(row) == 1 for row in g.to_rows())


def test_small_sizes_are_rejected():
    with pytest.raises(CatalogError):
        double_coset_reps(3)
    with pytest.raises(CatalogError):
        inner_coset_reps(4)


def test_permutation_matrix_rejects_repeated_targets():
    with pytest.raises(ValueError):
        permutation_matrix(3, [0, 0, 2])
