import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from commons.constants import (
    CATALOG_GL_UPPER, CATALOG_HEISENBERG, CATALOG_SEPARATOR, CATALOG_SP, LABEL_HEIS_P, LABEL_HEIS_Q, LABEL_HEIS_Z,
    LABEL_MATRIX_ENTRY, LABEL_TORUS, MSG_CATALOG_PARAMETER, MSG_UNKNOWN_CATALOG,
)
from commons.errors import CatalogError
from exact_core.linalg import kernel
from exact_core.rational_matrix import Matrix
from lie_structures.algebra_ops import make_algebra
from lie_structures.models import NilpotentLieAlgebra, WeightedLeviAction

logger = logging.getLogger(__name__)

Position = Tuple[int, int]


def matrix_unit(size: int, i: int, j: int, c=1) -> Matrix:
    """c * E_{i,j} with 0-based indices"""
    entries = [Fraction(0)] * (size * size)
    entries[i * size + j] = Fraction(c)
    return Matrix(size, size, tuple(entries))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return (a @ b) - (b @ a)


def _read_coordinates(m: Matrix, basis: Sequence[Matrix], positions: Sequence[Position]) -> List[Fraction]:
    coords = [m.entry(r, c) for r, c in positions]
    rebuilt = Matrix.zeros(m.rows, m.cols)
    for c, b in zip(coords, basis):
        if c != 0:
            rebuilt = rebuilt + b.scale(c)
    if rebuilt != m:
        raise CatalogError("matrix is not in the span of the realized basis")
    return coords


def matrix_lie_algebra(basis: Sequence[Matrix], positions: Sequence[Position], labels: Sequence[str],
                       name: str = None) -> NilpotentLieAlgebra:
    """
    Nilpotent Lie algebra realized by matrices

    Args:
        basis: basis matrices
        positions: for each basis matrix, an entry that only this basis matrix touches
        labels: basis labels
        name: catalog name

    Returns:
        The algebra whose structure constants are read off the commutators
    """
    brackets = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            coords = _read_coordinates(commutator(basis[i], basis[j]), basis, positions)
            out = {k: c for k, c in enumerate(coords) if c != 0}
            if out:
                brackets[(i, j)] = out
    return make_algebra(len(basis), brackets, labels, name)


def levi_from_matrices(algebra: NilpotentLieAlgebra, levi_matrices: Sequence[Matrix], levi_positions: Sequence[Position],
                       action: Sequence[Matrix], labels: Sequence[str]) -> WeightedLeviAction:
    """
    Levi action whose own brackets are read off the commutators of a faithful matrix realization

    Args:
        algebra: the algebra acted on
        levi_matrices: the realization of Lie M
        levi_positions: for each Levi matrix, an entry where it is 1 and every other Levi matrix is 0
        action: matrices of the action on Lie N, one per Levi matrix
        labels: Levi basis labels
    """
    for k, x in enumerate(levi_matrices):
        if [x.entry(r, c) for r, c in levi_positions] != [Fraction(1 if l == k else 0) for l in range(len(levi_matrices))]:
            raise CatalogError(f"Levi matrix {labels[k]} does not match its coordinate position")
    brackets_m = [[tuple(_read_coordinates(commutator(x, y), levi_matrices, levi_positions)) for y in levi_matrices]
                  for x in levi_matrices]
    return WeightedLeviAction(algebra, len(levi_matrices), tuple(action), tuple(tuple(r) for r in brackets_m),
                              tuple(labels), tuple(levi_matrices))


def realized_levi(algebra: NilpotentLieAlgebra, basis: Sequence[Matrix], positions: Sequence[Position],
                  levi_matrices: Sequence[Matrix], levi_positions: Sequence[Position],
                  labels: Sequence[str]) -> WeightedLeviAction:
    """Levi acting on a matrix-realized algebra by commutators inside the ambient matrix algebra"""
    action = []
    for x in levi_matrices:
        columns = [_read_coordinates(commutator(x, b), basis, positions) for b in basis]
        action.append(Matrix.from_rows([[columns[j][i] for j in range(len(basis))] for i in range(len(basis))],
                                       len(basis)))
    return levi_from_matrices(algebra, levi_matrices, levi_positions, action, labels)


def _gl_basis(n: int) -> Tuple[List[Matrix], List[Position], List[str]]:
    basis, positions, labels = [], [], []
    for i in range(n):
        for j in range(i + 1, n):
            basis.append(matrix_unit(n, i, j))
            positions.append((i, j))
            labels.append(LABEL_MATRIX_ENTRY.format(i=i + 1, j=j + 1))
    return basis, positions, labels


@lru_cache(maxsize=None)
def catalog_gl_upper(n: int) -> Tuple[NilpotentLieAlgebra, WeightedLeviAction]:
    """Strictly upper triangular n x n matrices with the diagonal torus acting"""
    if n < 2:
        raise CatalogError(MSG_CATALOG_PARAMETER.format(name=CATALOG_GL_UPPER, minimum=2, value=n))
    basis, positions, labels = _gl_basis(n)
    algebra = matrix_lie_algebra(basis, positions, labels, f"{CATALOG_GL_UPPER}{CATALOG_SEPARATOR}{n}")
    torus = [matrix_unit(n, k, k) for k in range(n)]
    levi = realized_levi(algebra, basis, positions, torus, [(k, k) for k in range(n)],
                         [LABEL_TORUS.format(k=k + 1) for k in range(n)])
    logger.debug(f"Built gl_upper({n}) of dimension {algebra.dim}")
    return algebra, levi


@lru_cache(maxsize=None)
def gl_upper_with_root_direction(n: int, i: int, j: int) -> WeightedLeviAction:
    """
    Diagonal torus enlarged by the root vector E_{i,j} (1-based, i < j)

    E_{i,j} acts on the strictly upper triangular matrices through the commutator,
    which is the smallest Levi-type input where a flag stops being stable.
    """
    algebra, _ = catalog_gl_upper(n)
    basis, positions, _ = _gl_basis(n)
    levi_matrices = [matrix_unit(n, k, k) for k in range(n)] + [matrix_unit(n, i - 1, j - 1)]
    labels = [LABEL_TORUS.format(k=k + 1) for k in range(n)] + [LABEL_MATRIX_ENTRY.format(i=i, j=j)]
    levi_positions = [(k, k) for k in range(n)] + [(i - 1, j - 1)]
    return realized_levi(algebra, basis, positions, levi_matrices, levi_positions, labels)


def _sp_sign(k: int, n: int) -> int:
    """Entry J[k][2n-1-k] of the anti-diagonal form, 0-based"""
    return 1 if k < n else -1


def sp_form(n: int) -> Matrix:
    size = 2 * n
    rows = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        rows[k][size - 1 - k] = Fraction(_sp_sign(k, n))
    return Matrix.from_rows(rows, size)


def _is_symplectic(a: Matrix, j: Matrix) -> bool:
    return ((a.transpose() @ j) + (j @ a)).is_zero()


def sp_pairs(n: int) -> List[Position]:
    """1-based (p, l), p < l, p + l <= 2n + 1: the free upper triangular entries"""
    return [(p, l) for p in range(1, n + 1) for l in range(p + 1, 2 * n + 2 - p)]


@lru_cache(maxsize=None)
def catalog_sp_unipotent(n: int) -> Tuple[NilpotentLieAlgebra, WeightedLeviAction]:
    """
    Nilradical of the upper triangular Borel of Sp_2n for the anti-diagonal form J = [[0, D], [-D, 0]]

    Basis matrices are X_{p,l} = E_{p,l} - eps_p eps_l E_{l',p'} with k' = 2n + 1 - k, collapsing to
    E_{p,p'} on the anti-diagonal. The torus diag(x_1..x_n, x_n^-1..x_1^-1) acts through
    H_k = E_{k,k} - E_{k',k'}.
    """
    if n < 2:
        raise CatalogError(MSG_CATALOG_PARAMETER.format(name=CATALOG_SP, minimum=2, value=n))
    size = 2 * n
    j_form = sp_form(n)
    basis, positions, labels = [], [], []
    for p, l in sp_pairs(n):
        p0, l0 = p - 1, l - 1
        m = matrix_unit(size, p0, l0)
        if p + l < size + 1:
            c = -_sp_sign(p0, n) * _sp_sign(l0, n)
            m = m + matrix_unit(size, size - 1 - l0, size - 1 - p0, c)
        if not _is_symplectic(m, j_form):
            raise CatalogError(f"basis matrix for ({p}, {l}) does not preserve the symplectic form")
        basis.append(m)
        positions.append((p0, l0))
        labels.append(LABEL_MATRIX_ENTRY.format(i=p, j=l))
    algebra = matrix_lie_algebra(basis, positions, labels, f"{CATALOG_SP}{CATALOG_SEPARATOR}{n}")
    torus = [matrix_unit(size, k, k) - matrix_unit(size, size - 1 - k, size - 1 - k) for k in range(n)]
    levi = realized_levi(algebra, basis, positions, torus, [(k, k) for k in range(n)],
                         [LABEL_TORUS.format(k=k + 1) for k in range(n)])
    logger.debug(f"Built sp({n}) nilradical of dimension {algebra.dim}")
    return algebra, levi


def _heisenberg_labels(m: int) -> List[str]:
    return ([LABEL_HEIS_P.format(i=i + 1) for i in range(m)] + [LABEL_HEIS_Q.format(i=i + 1) for i in range(m)]
            + [LABEL_HEIS_Z])


@lru_cache(maxsize=None)
def catalog_heisenberg(m: int) -> NilpotentLieAlgebra:
    """Basis p_1..p_m, q_1..q_m, z with [p_i, q_i] = z"""
    if m < 1:
        raise CatalogError(MSG_CATALOG_PARAMETER.format(name=CATALOG_HEISENBERG, minimum=1, value=m))
    z = 2 * m
    brackets = {(i, m + i): {z: 1} for i in range(m)}
    return make_algebra(2 * m + 1, brackets, _heisenberg_labels(m), f"{CATALOG_HEISENBERG}{CATALOG_SEPARATOR}{m}")


def symplectic_gram(m: int) -> Matrix:
    """Gram matrix of the pairing <p_i, q_i> = 1 on W = span(p, q)"""
    rows = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        rows[i][m + i] = Fraction(1)
        rows[m + i][i] = Fraction(-1)
    return Matrix.from_rows(rows, 2 * m)


@lru_cache(maxsize=None)
def heisenberg_symplectic_action(m: int) -> WeightedLeviAction:
    """
    sp(W) acting on heis(m) by derivations that fix z

    sp(W) is the solution space of X^T G + G X = 0 for the Gram matrix G, and X acts on W = span(p, q)
    through its matrix; z is killed.
    """
    algebra = catalog_heisenberg(m)
    w = 2 * m
    gram = symplectic_gram(m)
    # unknowns are the entries of X, row-major
    equations = []
    for r in range(w):
        for c in range(w):
            row = [Fraction(0)] * (w * w)
            for k in range(w):
                row[k * w + r] += gram.entry(k, c)
                row[k * w + c] += gram.entry(r, k)
            equations.append(row)
    solutions = kernel(Matrix.from_rows(equations, w * w))
    levi_matrices = [Matrix(w, w, v) for v in solutions.basis]
    action = []
    for x in levi_matrices:
        rows = [[Fraction(0)] * algebra.dim for _ in range(algebra.dim)]
        for r in range(w):
            for c in range(w):
                rows[r][c] = x.entry(r, c)
        action.append(Matrix.from_rows(rows, algebra.dim))
    labels = [f"S_{k + 1}" for k in range(len(levi_matrices))]
    levi_positions = [divmod(p, w) for p in solutions.pivots]
    return levi_from_matrices(algebra, levi_matrices, levi_positions, action, labels)


def parse_catalog_name(text: str) -> Tuple[str, int]:
    family, sep, value = text.strip().partition(CATALOG_SEPARATOR)
    if family not in (CATALOG_GL_UPPER, CATALOG_SP, CATALOG_HEISENBERG) or not sep:
        raise CatalogError(MSG_UNKNOWN_CATALOG.format(name=text))
    try:
        parameter = int(value)
    except ValueError:
        raise CatalogError(MSG_CATALOG_PARAMETER.format(name=family, minimum=1, value=value))
    return family, parameter


def load_catalog(text: str) -> Tuple[NilpotentLieAlgebra, WeightedLeviAction]:
    """
    Resolve "gl_upper:4", "sp:3" or "heis:2"

    Returns:
        The algebra and its Levi action; Heisenberg algebras come with the symplectic algebra acting
    """
    family, parameter = parse_catalog_name(text)
    if family == CATALOG_GL_UPPER:
        return catalog_gl_upper(parameter)
    if family == CATALOG_SP:
        return catalog_sp_unipotent(parameter)
    return catalog_heisenberg(parameter), heisenberg_symplectic_action(parameter)
