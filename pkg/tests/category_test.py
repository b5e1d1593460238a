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

from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies

from eulercat.categories import (
    CatPresentation,
    CountMatrix,
    InvalidCategoryError,
    LemmaHypothesisError,
    category_from_matrix,
    count_matrix,
    count_nondegenerate_chains,
    discrete_category,
    disjoint_union,
    duplicate_object,
    ensure_valid,
    indiscrete_category,
    is_isomorphic,
    is_skeletal,
    monoid_category,
    random_category_matrix,
    skeleton,
    validate,
)
from eulercat.categories.presentation import (
    IDENTITY,
    IDENTITY_LAW,
    UNDEFINED_COMPOSITE,
    UNKNOWN_OBJECT,
)
from eulercat.exactmath import IndexOutOfRangeError, QMatrix, entry_sum

from .strategies import category_matrices


def test_count_matrix_basics() -> None:
    with pytest.raises(ValueError):
        CountMatrix([[1, 2]])
    with pytest.raises(ValueError):
        CountMatrix([[1, -1], [0, 1]])
    z = CountMatrix([[1, 2], [3, 4]])
    assert z.dim == 2
    assert z.total() == 10
    assert z[1, 0] == 3
    assert z.permuted([1, 0]) == CountMatrix([[4, 3], [2, 1]])
    with pytest.raises(ValueError):
        z.permuted([0, 0])
    assert str(z) == "[[1, 2], [3, 4]]"


def test_reflexive_and_transitive() -> None:
    assert CountMatrix([[1, 2], [1, 2]]).is_reflexive()
    assert not CountMatrix([[0]]).is_reflexive()
    assert not CountMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]]).is_transitive()
    assert CountMatrix([[1, 1, 1], [0, 1, 1], [0, 0, 1]]).is_transitive()


def test_small_categories() -> None:
    assert count_matrix(monoid_category(4)) == CountMatrix([[4]])
    assert count_matrix(indiscrete_category(["x", "y"])) == CountMatrix(
        [[1, 1], [1, 1]]
    )
    assert count_matrix(discrete_category(["x", "y", "z"])) == CountMatrix(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    )
    with pytest.raises(ValueError):
        monoid_category(0)


def test_chain_counts() -> None:
    indiscrete = indiscrete_category(["x", "y"])
    assert count_nondegenerate_chains(indiscrete, 0) == 2
    assert [count_nondegenerate_chains(indiscrete, n) for n in range(1, 6)] == [2] * 5
    assert count_nondegenerate_chains(discrete_category(["x"]), 1) == 0
    assert count_nondegenerate_chains(monoid_category(3), 2) == 4
    with pytest.raises(ValueError):
        count_nondegenerate_chains(indiscrete, -1)


@settings(max_examples=30, deadline=None)
# at most twelve arrows keeps the chain walk short up to n = 6
@given(z=category_matrices(max_dim=2, max_entry=3), n=strategies.integers(1, 6))
def test_chain_counts_match_matrix_powers(z: CountMatrix, n: int) -> None:
    category = category_from_matrix(z)
    nondegenerate = z.to_qmatrix().shift(-1).power(n)
    assert count_nondegenerate_chains(category, n) == entry_sum(nondegenerate)


def test_validate_reports_violations() -> None:
    assert validate(monoid_category(3)) == []

    indiscrete = indiscrete_category(["x", "y"])
    composition = dict(indiscrete.composition)
    del composition[("y->x", "x->y")]
    broken = replace(indiscrete, composition=composition)
    assert [v.law for v in validate(broken)] == [UNDEFINED_COMPOSITE]
    with pytest.raises(InvalidCategoryError):
        ensure_valid(broken)
    with pytest.raises(InvalidCategoryError):
        count_matrix(broken)

    no_identity = replace(indiscrete, identities={"x": "id_x"})
    assert IDENTITY in [v.law for v in validate(no_identity)]

    stray = replace(
        discrete_category(["x"]), identities={"x": "id_x", "w": "id_x"}
    )
    assert UNKNOWN_OBJECT in [v.law for v in validate(stray)]

    monoid = monoid_category(2)
    composition = dict(monoid.composition)
    composition[("g1", "e")] = "e"
    laws = {v.law for v in validate(replace(monoid, composition=composition))}
    assert IDENTITY_LAW in laws


def test_invalid_category_message() -> None:
    broken = CatPresentation(
        objects=("x",), arrows=(), identities={}, composition={}
    )
    with pytest.raises(InvalidCategoryError) as excinfo:
        ensure_valid(broken)
    assert "Not a category" in str(excinfo.value)
    assert excinfo.value.violations[0].law == IDENTITY


def test_skeleton() -> None:
    category = disjoint_union(
        indiscrete_category(["x", "y"]), discrete_category(["z"])
    )
    assert is_isomorphic(category, "x", "y")
    assert not is_isomorphic(category, "x", "z")
    assert not is_skeletal(category)
    skeletal = skeleton(category)
    assert skeletal.objects == ("x", "z")
    assert is_skeletal(skeletal)
    assert validate(skeletal) == []
    assert count_matrix(skeletal) == CountMatrix([[1, 0], [0, 1]])
    assert skeleton(skeletal) == skeletal


@settings(max_examples=30, deadline=None)
@given(
    z=category_matrices(max_dim=3, max_entry=3),
    clique=strategies.integers(min_value=1, max_value=3),
)
def test_skeleton_is_skeletal_and_idempotent(z: CountMatrix, clique: int) -> None:
    category = disjoint_union(
        category_from_matrix(z), indiscrete_category([f"x{k}" for k in range(clique)])
    )
    assert is_skeletal(category) == (clique == 1)
    skeletal = skeleton(category)
    assert len(skeletal.objects) == z.dim + 1
    assert is_skeletal(skeletal)
    assert validate(skeletal) == []
    assert skeleton(skeletal) == skeletal


def test_disjoint_union_rejects_clashes() -> None:
    with pytest.raises(ValueError):
        disjoint_union(discrete_category(["x"]), discrete_category(["x"]))


def test_category_from_matrix() -> None:
    z = CountMatrix([[2, 4], [1, 2]])
    category = category_from_matrix(z)
    assert len(category.arrows) == 9
    assert validate(category) == []
    assert count_matrix(category) == z
    assert count_matrix(category_from_matrix(CountMatrix([[2]]))) == CountMatrix(
        [[2]]
    )


def test_category_from_matrix_rejects_unsupported_matrices() -> None:
    with pytest.raises(LemmaHypothesisError):
        category_from_matrix(CountMatrix([[1, 2], [1, 2]]))
    with pytest.raises(LemmaHypothesisError):
        category_from_matrix(CountMatrix([[2, 1, 0], [0, 2, 1], [0, 0, 2]]))


@settings(max_examples=100, deadline=None)
@given(z=category_matrices(max_dim=5, max_entry=3))
def test_category_from_matrix_is_a_category(z: CountMatrix) -> None:
    category = category_from_matrix(z)
    assert validate(category) == []
    assert count_matrix(category) == z


def test_duplicate_object() -> None:
    z = CountMatrix([[3, 3], [2, 2]])
    assert duplicate_object(z, 1) == CountMatrix([[3, 3, 3], [2, 2, 2], [2, 2, 2]])
    assert duplicate_object(z, 0) == CountMatrix([[3, 3, 3], [2, 2, 2], [3, 3, 3]])
    with pytest.raises(IndexOutOfRangeError):
        duplicate_object(z, 2)


def test_random_category_matrix() -> None:
    assert random_category_matrix(1, 2, seed=5) == CountMatrix([[2]])
    first = random_category_matrix(4, 6, seed=11)
    assert first == random_category_matrix(4, 6, seed=11)
    assert first.dim == 4
    assert all(first[i, i] >= 2 for i in range(4))
    assert all(1 <= x <= 6 for row in first.entries for x in row)
    assert validate(category_from_matrix(first)) == []
    with pytest.raises(ValueError):
        random_category_matrix(0, 3, seed=1)
    with pytest.raises(ValueError):
        random_category_matrix(2, 1, seed=1)


def test_count_matrix_converts_exactly() -> None:
    assert CountMatrix([[2, 4], [1, 2]]).to_qmatrix() == QMatrix([[2, 4], [1, 2]])
