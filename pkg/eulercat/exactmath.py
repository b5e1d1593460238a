# Copyright the eulercat developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact linear algebra over the rationals.

Every scalar is a :py:class:`fractions.Fraction`. Matrices are square and are
backed by read-only numpy arrays of ``dtype=object`` so that numpy's product,
transpose and trace keep the arithmetic exact.
"""

import itertools
import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Optional, Union

import numpy as np
from numpy.typing import NDArray

if TYPE_CHECKING:
    from .polyrat import Poly

_logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]


class NonSquareMatrixError(ValueError):
    """Raised when matrix data is not a square grid"""

    def __init__(self, shape: tuple[int, ...]) -> None:
        super().__init__(f"Expected a square matrix, got data of shape {shape}.")


class IndexOutOfRangeError(IndexError):
    """Raised when a row/column index does not exist in a matrix"""

    def __init__(self, index: int, dim: int) -> None:
        super().__init__(f"Index {index} is out of range for a {dim}x{dim} matrix.")


def _as_object_array(rows: Any) -> NDArray[Any]:
    if isinstance(rows, np.ndarray):
        data = [[Fraction(x) for x in row] for row in rows.tolist()]
    else:
        data = [[Fraction(x) for x in row] for row in rows]
    n = len(data)
    if any(len(row) != n for row in data):
        raise NonSquareMatrixError((n, *sorted({len(row) for row in data})))
    arr = np.empty((n, n), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            arr[i, j] = x
    arr.setflags(write=False)
    return arr


class QMatrix:
    """A dense square matrix of rationals.

    Values are immutable: every operation returns a new matrix. The 0x0 matrix is
    a legal value.

    :param rows: Row-major data; each entry is converted to a Fraction.
    """

    __slots__ = ("_array",)

    def __init__(self, rows: Union[Iterable[Iterable[Scalar]], NDArray[Any]]):
        if not isinstance(rows, np.ndarray):
            rows = [list(row) for row in rows]
        self._array = _as_object_array(rows)

    @classmethod
    def identity(cls, dim: int) -> "QMatrix":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, dim: int) -> "QMatrix":
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def ones(cls, dim: int) -> "QMatrix":
        return cls([[1] * dim for _ in range(dim)])

    @property
    def dim(self) -> int:
        return int(self._array.shape[0])

    @property
    def array(self) -> NDArray[Any]:
        """Read-only object array of Fractions."""
        return self._array

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        return self._array[index]  # type: ignore

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self._array]

    def row(self, i: int) -> list[Fraction]:
        return list(self._array[i])

    def column(self, j: int) -> list[Fraction]:
        return list(self._array[:, j])

    def transpose(self) -> "QMatrix":
        return QMatrix(self._array.T)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self._array + other._array)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self._array - other._array)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self._array)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.dim == 0:
            return self
        return QMatrix(self._array @ other._array)

    def scale(self, c: Scalar) -> "QMatrix":
        return QMatrix(self._array * Fraction(c))

    def shift(self, c: Scalar) -> "QMatrix":
        """Return ``self + c * I``."""
        return self + QMatrix.identity(self.dim).scale(c)

    def power(self, n: int) -> "QMatrix":
        if n < 0:
            raise ValueError("Only nonnegative powers are supported.")
        result = QMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, vector: Sequence[Scalar]) -> list[Fraction]:
        """Matrix-vector product ``M x``."""
        return [
            sum((a * Fraction(x) for a, x in zip(row, vector)), Fraction(0))
            for row in self._array
        ]

    def trace(self) -> Fraction:
        return sum(self._array.diagonal(), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._array.flat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self._array.shape == other._array.shape and bool(
            np.all(self._array == other._array)
        )

    def __hash__(self) -> int:
        return hash(tuple(self._array.flat))

    def __repr__(self) -> str:
        return f"QMatrix({[[str(x) for x in row] for row in self.rows()]})"


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of solving ``M x = b`` exactly.

    ``particular`` is present iff the system is consistent; it is the reduced row
    echelon solution with every free variable set to zero.
    """

    consistent: bool
    particular: Optional[tuple[Fraction, ...]]
    nullity: int


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers, returning the rows and the product of scales."""
    scaled = []
    denominator = 1
    for row in rows:
        d = math.lcm(*(x.denominator for x in row)) if row else 1
        scaled.append([int(x * d) for x in row])
        denominator *= d
    return scaled, denominator


def _bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(m: QMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers so the elimination runs over the integers.
    The determinant of the 0x0 matrix is 1.
    """
    int_rows, denominator = _integer_rows(m.rows())
    return Fraction(_bareiss(int_rows), denominator)


def det_leibniz(m: QMatrix) -> Fraction:
    """Determinant by permutation expansion. Factorial cost; used as an oracle."""
    total = Fraction(0)
    for perm in itertools.permutations(range(m.dim)):
        term = Fraction(permutation_sign(perm))
        for i, j in enumerate(perm):
            term *= m[i, j]
            if term == 0:
                break
        total += term
    return total


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def entry_sum(m: QMatrix) -> Fraction:
    """The sum ``s(M)`` of all entries; 0 for the 0x0 matrix."""
    return sum(m.array.flat, Fraction(0))


def _rref(
    rows: list[list[Fraction]], n_cols: int
) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``rows`` over the first ``n_cols`` columns.

    Extra columns (e.g. an augmented right-hand side) are carried along.
    Returns the reduced rows and the pivot columns.
    """
    a = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def solve_linear_system(
    rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]
) -> LinearSolution:
    """Solve a possibly rectangular system ``A x = b`` over the rationals."""
    if len(rows) != len(rhs):
        raise ValueError("Right-hand side length does not match the number of rows.")
    n_cols = len(rows[0]) if rows else 0
    augmented = [
        [Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)
    ]
    reduced, pivots = _rref(augmented, n_cols)
    rank_a = len(pivots)
    if any(
        all(x == 0 for x in row[:n_cols]) and row[n_cols] != 0 for row in reduced
    ):
        return LinearSolution(False, None, n_cols - rank_a)
    solution = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r][n_cols]
    return LinearSolution(True, tuple(solution), n_cols - rank_a)


def solve_right(m: QMatrix, b: Sequence[Scalar]) -> LinearSolution:
    """Solve ``M x = b``.

    :param m: Square coefficient matrix.
    :param b: Right-hand side, of length ``m.dim``.
    :return: Consistency flag, the canonical solution (free variables zeroed) and
        the nullity of ``m``.
    """
    if len(b) != m.dim:
        raise ValueError(f"Expected a vector of length {m.dim}, got {len(b)}.")
    return solve_linear_system(m.rows(), b)


def rank(m: QMatrix) -> int:
    _, pivots = _rref(m.rows(), m.dim)
    return len(pivots)


def augmented_rank(m: QMatrix, b: Sequence[Scalar]) -> int:
    """Rank of ``[M | b]``."""
    rows = [row + [Fraction(x)] for row, x in zip(m.rows(), b)]
    _, pivots = _rref(rows, m.dim + 1)
    return len(pivots)


def inverse(m: QMatrix) -> Optional[QMatrix]:
    """Exact inverse by Gauss-Jordan elimination, or None if ``m`` is singular."""
    n = m.dim
    augmented = [
        row + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m.rows())
    ]
    reduced, pivots = _rref(augmented, n)
    if len(pivots) < n:
        return None
    return QMatrix([row[n:] for row in reduced])


def delete_rc(m: QMatrix, indices: Iterable[int]) -> QMatrix:
    """Delete the i-th row and i-th column of ``m`` for every i in ``indices``.

    Indices are 0-based. Deleting nothing returns an equal matrix; deleting every
    index gives the 0x0 matrix.
    """
    removed = set(indices)
    for i in removed:
        if not 0 <= i < m.dim:
            raise IndexOutOfRangeError(i, m.dim)
    keep = [i for i in range(m.dim) if i not in removed]
    return QMatrix([[m[i, j] for j in keep] for i in keep])


def _cofactor_adjugate(m: QMatrix) -> QMatrix:
    n = m.dim
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = QMatrix(
                [[m[r, c] for c in range(n) if c != i] for r in range(n) if r != j]
            )
            entries[i][j] = (-1) ** (i + j) * det(minor)
    return QMatrix(entries)


def adjugate(m: QMatrix) -> QMatrix:
    """The adjugate ``adj(M)``, satisfying ``M adj(M) = adj(M) M = det(M) I``.

    Invertible matrices use ``det(M) M^-1``; singular ones fall back to cofactor
    expansion. The adjugate of the 0x0 matrix is the 0x0 matrix, and every 1x1
    matrix has adjugate ``[[1]]``.
    """
    if m.dim == 0:
        return m
    if m.dim == 1:
        return QMatrix([[1]])
    inv = inverse(m)
    if inv is None:
        return _cofactor_adjugate(m)
    return inv.scale(det(m))


def adjugate_entry_sum(m: QMatrix) -> Fraction:
    """``s(adj(M))`` without forming the adjugate.

    For the all-ones matrix ``J``, ``det(M + J) = det(M) + s(adj(M))``, which
    holds for singular ``M`` as well. Gives 0 for the 0x0 matrix.
    """
    return det(m + QMatrix.ones(m.dim)) - det(m)


def faddeev_leverrier(m: QMatrix) -> tuple[list[Fraction], list[QMatrix]]:
    """Characteristic polynomial and adjugate pencil of ``m``.

    Returns ``(c, b)`` with ``det(uI - M) = sum(c[k] u^k)`` (so ``c[-1] == 1``)
    and ``adj(uI - M) = sum(b[k] u^k)`` for ``k < dim``.
    """
    n = m.dim
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    pencil: list[QMatrix] = []
    current = QMatrix.zeros(n)
    for k in range(1, n + 1):
        current = (m @ current).shift(c[n - k + 1])
        pencil.append(current)
        c[n - k] = -(m @ current).trace() / k
    # pencil[k - 1] multiplies u^(n - k)
    return c, list(reversed(pencil))


def charpoly(m: QMatrix) -> "Poly":
    """``det(uI - M)`` as a monic polynomial in u."""
    from .polyrat import Poly

    coefficients, _ = faddeev_leverrier(m)
    return Poly(coefficients, "u")


def _krylov_vectors(m: QMatrix) -> Iterator[list[Fraction]]:
    power = QMatrix.identity(m.dim)
    while True:
        yield list(power.array.flat)
        power = power @ m


def minimal_polynomial(m: QMatrix) -> "Poly":
    """Monic polynomial p of least degree with ``p(M) = 0``.

    Found as the first linear dependency among ``I, M, M^2, ...`` flattened into
    vectors.
    """
    from .polyrat import Poly

    if m.dim == 0:
        raise ValueError("The minimal polynomial needs a matrix of dimension >= 1.")
    basis: list[list[Fraction]] = []
    for k, vector in enumerate(_krylov_vectors(m)):
        if basis:
            columns = [list(col) for col in zip(*basis)]
            solution = solve_linear_system(columns, vector)
            if solution.consistent:
                assert solution.particular is not None
                coefficients = [-x for x in solution.particular] + [Fraction(1)]
                _logger.debug("Minimal polynomial of degree %d found", k)
                return Poly(coefficients, "u")
        basis.append(vector)
    raise AssertionError("unreachable")  # pragma: no cover


def evaluate_polynomial(coefficients: Sequence[Fraction], m: QMatrix) -> QMatrix:
    """``p(M)`` for ascending coefficients, by Horner's scheme."""
    result = QMatrix.zeros(m.dim)
    for c in reversed(coefficients):
        result = (result @ m).shift(c)
    return result
