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

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies

from eulercat.exactmath import (
    IndexOutOfRangeError,
    NonSquareMatrixError,
    QMatrix,
    adjugate,
    adjugate_entry_sum,
    augmented_rank,
    charpoly,
    delete_rc,
    det,
    det_leibniz,
    entry_sum,
    evaluate_polynomial,
    faddeev_leverrier,
    inverse,
    minimal_polynomial,
    rank,
    solve_right,
)
from eulercat.polyrat import Poly

from .strategies import rational_matrices, singular_matrices


def test_det_examples() -> None:
    assert det(QMatrix([[2, 4], [1, 2]])) == 0
    assert det(QMatrix([[2]])) == 2
    assert det(QMatrix([])) == 1
    assert det(QMatrix([[Fraction(1, 2), 1], [0, Fraction(2, 3)]])) == Fraction(1, 3)
    # a zero pivot forces a row swap
    assert det(QMatrix([[0, 1], [1, 0]])) == -1


@settings(max_examples=100, deadline=None)
@given(m=rational_matrices(max_dim=5))
def test_det_matches_permutation_expansion(m: QMatrix) -> None:
    assert det(m) == det_leibniz(m)


def test_non_square() -> None:
    with pytest.raises(NonSquareMatrixError):
        QMatrix([[1, 2]])
    with pytest.raises(NonSquareMatrixError):
        QMatrix([[1, 2], [3]])


def test_adjugate_examples() -> None:
    assert adjugate(QMatrix([[3, 3], [2, 2]])) == QMatrix([[2, -3], [-2, 3]])
    assert adjugate(QMatrix([[7]])) == QMatrix([[1]])
    assert adjugate(QMatrix([])).dim == 0
    assert adjugate(QMatrix([[1, 2], [3, 4]])) == QMatrix([[4, -2], [-3, 1]])


@settings(max_examples=200, deadline=None)
@given(m=rational_matrices(max_dim=6))
def test_adjugate_identity(m: QMatrix) -> None:
    expected = QMatrix.identity(m.dim).scale(det(m))
    a = adjugate(m)
    assert m @ a == expected
    assert a @ m == expected
    assert adjugate_entry_sum(m) == entry_sum(a)


@settings(max_examples=50, deadline=None)
@given(m=singular_matrices(max_dim=4))
def test_adjugate_of_singular(m: QMatrix) -> None:
    assert det(m) == 0
    a = adjugate(m)
    assert (m @ a).is_zero()
    assert adjugate_entry_sum(m) == entry_sum(a)


def test_entry_sum() -> None:
    assert entry_sum(QMatrix([[1, 4], [1, 1]])) == 7
    assert entry_sum(QMatrix([[2, -3], [-2, 3]])) == 0
    assert entry_sum(QMatrix([])) == 0


def test_solve_right() -> None:
    inconsistent = solve_right(QMatrix([[2, 4], [1, 2]]), [1, 1])
    assert not inconsistent.consistent
    assert inconsistent.particular is None

    free = solve_right(QMatrix([[2, 3], [2, 3]]), [1, 1])
    assert free.consistent
    assert free.particular == (Fraction(1, 2), Fraction(0))
    assert free.nullity == 1

    unique = solve_right(QMatrix([[2, 1], [1, 1]]), [1, 1])
    assert unique.particular == (Fraction(0), Fraction(1))
    assert unique.nullity == 0

    with pytest.raises(ValueError):
        solve_right(QMatrix([[1]]), [1, 1])


def test_inverse_and_rank() -> None:
    m = QMatrix([[2, 1], [1, 1]])
    inv = inverse(m)
    assert inv == QMatrix([[1, -1], [-1, 2]])
    assert inverse(QMatrix([[2, 4], [1, 2]])) is None
    assert rank(QMatrix([[2, 4], [1, 2]])) == 1
    assert rank(QMatrix.identity(3)) == 3
    assert rank(QMatrix.zeros(2)) == 0


def test_delete_rc() -> None:
    z_b = QMatrix([[3, 3, 3], [2, 2, 2], [2, 2, 2]])
    assert delete_rc(z_b, [2]) == QMatrix([[3, 3], [2, 2]])
    assert delete_rc(z_b, []) == z_b
    assert delete_rc(QMatrix([[5]]), [0]).dim == 0
    with pytest.raises(IndexOutOfRangeError):
        delete_rc(z_b, [3])


@settings(max_examples=100, deadline=None)
@given(m=rational_matrices(max_dim=5, min_dim=2), data=strategies.data())
def test_delete_rc_composes(m: QMatrix, data: strategies.DataObject) -> None:
    i, j = data.draw(
        strategies.lists(
            strategies.integers(min_value=0, max_value=m.dim - 1),
            min_size=2,
            max_size=2,
            unique=True,
        )
    )
    # j moves up by one once row and column i are gone
    shifted = j - 1 if j > i else j
    assert delete_rc(delete_rc(m, [i]), [shifted]) == delete_rc(m, [i, j])


@settings(max_examples=200, deadline=None)
@given(
    m=rational_matrices(max_dim=5, min_dim=1) | singular_matrices(max_dim=5),
    data=strategies.data(),
)
def test_solve_right_consistency_matches_ranks(
    m: QMatrix, data: strategies.DataObject
) -> None:
    b = data.draw(
        strategies.lists(
            strategies.integers(min_value=-3, max_value=3),
            min_size=m.dim,
            max_size=m.dim,
        )
    )
    solution = solve_right(m, b)
    assert solution.consistent == (rank(m) == augmented_rank(m, b))
    assert rank(m) <= augmented_rank(m, b) <= rank(m) + 1
    assert solution.nullity == m.dim - rank(m)
    if solution.consistent:
        assert solution.particular is not None
        assert m.apply(solution.particular) == b
    else:
        assert solution.particular is None


def test_matrix_arithmetic() -> None:
    m = QMatrix([[1, 1], [0, 1]])
    assert m.power(3) == QMatrix([[1, 3], [0, 1]])
    assert m.power(0) == QMatrix.identity(2)
    assert m.transpose() == QMatrix([[1, 0], [1, 1]])
    assert m.shift(-1) == QMatrix([[0, 1], [0, 0]])
    assert m.trace() == 2
    assert m.apply([1, 2]) == [3, 2]
    assert -m + m == QMatrix.zeros(2)


def test_minimal_polynomial() -> None:
    assert minimal_polynomial(QMatrix([[1, 1], [0, 1]])) == Poly([1, -2, 1], "u")
    assert minimal_polynomial(QMatrix([[2, 3], [2, 3]])) == Poly([0, -5, 1], "u")
    assert minimal_polynomial(QMatrix.identity(3)) == Poly([-1, 1], "u")
    assert minimal_polynomial(QMatrix.zeros(2)) == Poly([0, 1], "u")


@settings(max_examples=50, deadline=None)
@given(m=rational_matrices(max_dim=3, min_dim=1))
def test_minimal_polynomial_annihilates(m: QMatrix) -> None:
    p = minimal_polynomial(m)
    assert p.leading_coefficient == 1
    assert evaluate_polynomial(p.coefficients, m).is_zero()
    # it divides the characteristic polynomial
    _, remainder = charpoly(m).divmod(p)
    assert remainder.is_zero()


def test_charpoly() -> None:
    assert charpoly(QMatrix([[1, 1], [0, 1]])) == Poly([1, -2, 1], "u")
    assert charpoly(QMatrix([[2, 4], [1, 2]])) == Poly([0, -4, 1], "u")
    assert charpoly(QMatrix([])) == Poly([1], "u")


@settings(max_examples=50, deadline=None)
@given(m=rational_matrices(max_dim=4))
def test_faddeev_leverrier_pencil(m: QMatrix) -> None:
    c, pencil = faddeev_leverrier(m)
    assert len(c) == m.dim + 1
    assert len(pencil) == m.dim
    for x in (0, 1, -2, Fraction(1, 3)):
        shifted = m.scale(-1).shift(x)
        assert sum(ck * Fraction(x) ** k for k, ck in enumerate(c)) == det(shifted)
        value = QMatrix.zeros(m.dim)
        for k, b in enumerate(pencil):
            value = value + b.scale(Fraction(x) ** k)
        assert value == adjugate(shifted)
