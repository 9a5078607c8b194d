from typing import List, Sequence

from commons.errors import CatalogError
from exact_core.rational_matrix import Matrix, unit_vector


def permutation_matrix(n: int, row_targets: Sequence[int]) -> Matrix:
    """Row r is the unit vector e_{row_targets[r]} (0-based)"""
    if sorted(row_targets) != list(range(n)):
        raise ValueError("row targets do not form a permutation")
    return Matrix.from_rows([unit_vector(n, c) for c in row_targets], n)


def double_coset_reps(n: int) -> List[Matrix]:
    """
    g_0 = I_n and, for 1 <= k <= n - 3, the block permutation matrix for the partition
    (1, k, 1, n - k - 2): row 1 = e_1, row 2 = e_{k+2}, rows 3..k+2 = e_2..e_{k+1}, then identity
    """
    if n < 4:
        raise CatalogError(f"double coset representatives need n >= 4, got {n}")
    reps = [Matrix.identity(n)]
    for k in range(1, n - 2):
        targets = [0, k + 1] + list(range(1, k + 1)) + list(range(k + 2, n))
        reps.append(permutation_matrix(n, targets))
    return reps


def inner_coset_reps(n: int) -> List[Matrix]:
    """
    h_0 = I_n and, for 1 <= l <= n - 4, the block permutation matrix for the partition
    (1, 1, l, 1, n - l - 3): rows 1, 2 = e_1, e_2, row 3 = e_{l+3}, rows 4..l+3 = e_3..e_{l+2}, then identity
    """
    if n < 5:
        raise CatalogError(f"inner coset representatives need n >= 5, got {n}")
    reps = [Matrix.identity(n)]
    for l in range(1, n - 3):
        targets = [0, 1, l + 2] + list(range(2, l + 2)) + list(range(l + 3, n))
        reps.append(permutation_matrix(n, targets))
    return reps
