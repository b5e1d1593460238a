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
from hypothesis import assume, given, settings, strategies

from eulercat.categories import (
    CountMatrix,
    category_from_matrix,
    duplicate_object,
    monoid_category,
)
from eulercat.euler import (
    CheckVerdict,
    DimensionLimitError,
    Side,
    build_report,
    chain_counts_from_powers,
    char_data,
    char_data_polynomial,
    char_data_subsets,
    euler_characteristic,
    f_series_ratfunc,
    find_weighting,
    g_ratfunc,
    is_diagonalizable,
    is_weighting,
    mobius_chi,
    s_adj_permutation_oracle,
    series_chi,
)
from eulercat.exactmath import QMatrix, adjugate, det, entry_sum, inverse
from eulercat.polyrat import (
    UNDEFINED,
    Poly,
    RatFunc,
    ratfunc_eval,
    ratfunc_normalize,
    ratfunc_series,
    ratfunc_substitute_mobius,
)

from .strategies import category_matrices, duplicated_rows_and_columns


def _rf(numerator: list[int], denominator: list[int], var: str) -> RatFunc:
    return ratfunc_normalize(Poly(numerator, var), Poly(denominator, var))


def test_weightings(two_weightings_matrix: CountMatrix) -> None:
    weighting = find_weighting(two_weightings_matrix, Side.WEIGHTING)
    assert weighting is not None
    assert weighting.values == (Fraction(1, 2), Fraction(0))
    assert weighting.total == Fraction(1, 2)
    assert find_weighting(two_weightings_matrix, Side.COWEIGHTING) is None
    other = (Fraction(0), Fraction(1, 3))
    assert is_weighting(two_weightings_matrix, other, Side.WEIGHTING)
    assert not is_weighting(two_weightings_matrix, other, Side.COWEIGHTING)
    assert not is_weighting(two_weightings_matrix, (Fraction(1),), Side.WEIGHTING)
    assert euler_characteristic(two_weightings_matrix) is None


def test_euler_characteristic_of_simple_categories() -> None:
    assert euler_characteristic(CountMatrix([[4]])) == Fraction(1, 4)
    assert euler_characteristic(CountMatrix([[1, 0], [0, 1]])) == 2
    assert mobius_chi(CountMatrix([[2]])) == Fraction(1, 2)
    assert series_chi(CountMatrix([[4]])) == Fraction(1, 4)


def test_union_isnt_everything(union_matrix: CountMatrix) -> None:
    assert find_weighting(union_matrix, Side.WEIGHTING) is None
    assert euler_characteristic(union_matrix) is None
    assert mobius_chi(union_matrix) is None
    assert series_chi(union_matrix) is None

    f = f_series_ratfunc(union_matrix)
    assert f == _rf([2, 3], [1, -2, -3], "t")
    assert ratfunc_series(f, 7).coefficients == (2, 7, 20, 61, 182, 547, 1640, 4921)
    g = g_ratfunc(union_matrix)
    assert g == _rf([-1, -2], [0, -4, 1], "u")
    assert ratfunc_eval(g, 0) is UNDEFINED

    data = char_data(union_matrix)
    assert data.d == (0, 4, 1)
    assert data.e == (-1, 2, 0)
    assert data.l == 1
    assert data.subset_agreement is True
    assert is_diagonalizable(union_matrix)


def test_disagreement_on_intersection(disagreement_matrix: CountMatrix) -> None:
    assert euler_characteristic(disagreement_matrix) == Fraction(1, 2)
    data = char_data(disagreement_matrix)
    assert data.d == (0, 0, 9, 1)
    assert data.e[:3] == (0, 0, 3)
    assert data.l == 2
    assert series_chi(disagreement_matrix) == Fraction(1, 3)


def test_not_equivalence_invariant(not_invariant_matrix: CountMatrix) -> None:
    z_b = duplicate_object(not_invariant_matrix, 1)
    assert z_b == CountMatrix([[3, 3, 3], [2, 2, 2], [2, 2, 2]])
    assert g_ratfunc(not_invariant_matrix) == _rf([2], [5, -1], "u")
    assert f_series_ratfunc(not_invariant_matrix) == _rf([2], [1, -4], "t")
    assert series_chi(not_invariant_matrix) == Fraction(2, 5)
    assert series_chi(z_b) == Fraction(3, 7)
    assert euler_characteristic(not_invariant_matrix) is None
    assert euler_characteristic(z_b) is None


def test_sharpness_of_diagonalizability(not_diagonalizable_matrix: CountMatrix) -> None:
    assert not is_diagonalizable(not_diagonalizable_matrix)
    assert find_weighting(not_diagonalizable_matrix, Side.WEIGHTING) is not None
    data = char_data(not_diagonalizable_matrix)
    assert data.d == (0, 0, 8, 1)
    assert data.e[1] == -2
    assert series_chi(not_diagonalizable_matrix) is None


def test_is_diagonalizable() -> None:
    assert is_diagonalizable(CountMatrix([]))
    assert is_diagonalizable(CountMatrix([[1, 1], [1, 1]]))
    assert not is_diagonalizable(CountMatrix([[1, 1], [0, 1]]))


def test_char_data_warns_above_subset_limit(union_matrix: CountMatrix) -> None:
    with pytest.warns(UserWarning, match="subset method"):
        data = char_data(union_matrix, subset_limit=1)
    assert data.subset_agreement is None
    assert not data.subset_checked
    assert data.d == (0, 4, 1)


def test_chain_counts_from_powers(union_matrix: CountMatrix) -> None:
    assert chain_counts_from_powers(union_matrix, 4) == (2, 7, 20, 61)
    assert chain_counts_from_powers(union_matrix, 0) == ()


def test_permutation_oracle() -> None:
    m = QMatrix([[1, 2], [3, 4]])
    assert s_adj_permutation_oracle(m) == entry_sum(adjugate(m)) == 0
    assert s_adj_permutation_oracle(QMatrix([])) == 0
    with pytest.raises(DimensionLimitError):
        s_adj_permutation_oracle(QMatrix.identity(3), limit=2)


def test_report(union_matrix: CountMatrix) -> None:
    report = build_report(union_matrix, series_terms=4)
    assert report.passed
    assert report.chi is None
    assert report.chi_sigma is None
    assert not report.has_mobius
    assert report.series_prefix.coefficients == (2, 7, 20, 61)
    two_path = report.check("chi-sigma-two-path")
    assert two_path.verdict is CheckVerdict.PASS
    assert two_path.detail == "undefined, consistent on both paths"
    assert report.check("mobius-agreement").verdict is CheckVerdict.SKIP
    assert report.check("weight-totals").verdict is CheckVerdict.SKIP
    assert str(report.check("substitution-identity")) == "substitution-identity: PASS"
    assert "nerve-chains" not in [c.name for c in report.checks]
    with pytest.raises(ValueError):
        build_report(union_matrix, series_terms=-1)


def test_report_with_presentation(union_matrix: CountMatrix) -> None:
    report = build_report(union_matrix, presentation=category_from_matrix(union_matrix))
    nerve = report.check("nerve-chains")
    assert nerve.verdict is CheckVerdict.PASS
    assert nerve.detail == "n < 7"
    wrong = build_report(union_matrix, presentation=monoid_category(2))
    assert wrong.check("nerve-chains").verdict is CheckVerdict.FAIL
    assert not wrong.passed


def test_report_skips_large_nerves(union_matrix: CountMatrix) -> None:
    presentation = category_from_matrix(union_matrix)
    report = build_report(union_matrix, presentation=presentation, nerve_limit=8)
    nerve = report.check("nerve-chains")
    assert nerve.verdict is CheckVerdict.SKIP
    assert nerve.detail == "9 arrows exceed nerve limit 8"
    assert report.passed
    wrong = build_report(union_matrix, presentation=monoid_category(2), nerve_limit=1)
    assert wrong.check("nerve-chains").verdict is CheckVerdict.FAIL


def test_report_skips_above_limits(disagreement_matrix: CountMatrix) -> None:
    with pytest.warns(UserWarning):
        report = build_report(disagreement_matrix, subset_limit=2, oracle_limit=2)
    assert report.check("proposition-identity").verdict is CheckVerdict.SKIP
    assert report.check("adjugate-oracle").verdict is CheckVerdict.SKIP
    assert report.passed
    assert report.chi == Fraction(1, 2)
    assert report.check("weight-totals").verdict is CheckVerdict.PASS


@settings(max_examples=200, deadline=None)
@given(z=category_matrices(max_dim=8, max_entry=5))
def test_subset_sums_match_polynomial_expansion(z: CountMatrix) -> None:
    assert char_data_subsets(z) == char_data_polynomial(z)


@settings(max_examples=50, deadline=None)
@given(z=category_matrices(max_dim=4, max_entry=5))
def test_generating_functions_agree(z: CountMatrix) -> None:
    f = f_series_ratfunc(z)
    assert ratfunc_substitute_mobius(g_ratfunc(z)) == f
    assert ratfunc_series(f, 5).coefficients == chain_counts_from_powers(z, 6)
    assert build_report(z, series_terms=5).passed


@settings(max_examples=50, deadline=None)
@given(m=duplicated_rows_and_columns(max_dim=6))
def test_equal_rows_and_columns_kill_adjugate_sum(m: QMatrix) -> None:
    assert entry_sum(adjugate(m)) == 0
    assert s_adj_permutation_oracle(m) == 0


@settings(max_examples=100, deadline=None)
@given(z=category_matrices(max_dim=4, max_entry=4), data=strategies.data())
def test_inflation_keeps_both_characteristics(
    z: CountMatrix, data: strategies.DataObject
) -> None:
    inv = inverse(z.to_qmatrix())
    assume(inv is not None)
    assert inv is not None
    expected = entry_sum(inv)
    inflated = z
    for _ in range(data.draw(strategies.integers(min_value=1, max_value=3))):
        i = data.draw(strategies.integers(min_value=0, max_value=inflated.dim - 1))
        inflated = duplicate_object(inflated, i)
    assert series_chi(inflated) == expected
    assert euler_characteristic(inflated) == expected
    assert mobius_chi(z) == expected


@settings(max_examples=200, deadline=None)
@given(z=category_matrices(max_dim=6, max_entry=4))
def test_diagonalizable_with_weighting_has_series_chi(z: CountMatrix) -> None:
    assume(is_diagonalizable(z))
    assume(
        find_weighting(z, Side.WEIGHTING) is not None
        or find_weighting(z, Side.COWEIGHTING) is not None
    )
    assert series_chi(z) is not None


@settings(max_examples=40, deadline=None)
@given(z=category_matrices(max_dim=4, max_entry=4), data=strategies.data())
def test_order_invariance(z: CountMatrix, data: strategies.DataObject) -> None:
    order = data.draw(strategies.permutations(range(z.dim)))
    permuted = z.permuted(order)
    assert euler_characteristic(permuted) == euler_characteristic(z)
    assert series_chi(permuted) == series_chi(z)


@settings(max_examples=30, deadline=None)
@given(z=category_matrices(max_dim=4, max_entry=4))
def test_invertible_matrices_agree_with_mobius(z: CountMatrix) -> None:
    assume(det(z.to_qmatrix()) != 0)
    assert euler_characteristic(z) == mobius_chi(z) == series_chi(z)
