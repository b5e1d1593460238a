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

import pytest

from eulercat.categories import CountMatrix


@pytest.fixture
def union_matrix() -> CountMatrix:
    # neither Euler characteristic is defined
    return CountMatrix([[2, 4], [1, 2]])


@pytest.fixture
def new_old_matrix() -> CountMatrix:
    # chi = 1/6, chi_sigma undefined
    return CountMatrix([[6, 6, 15, 9], [6, 6, 6, 6], [6, 6, 9, 7], [6, 30, 9, 15]])


@pytest.fixture
def disagreement_matrix() -> CountMatrix:
    # chi = 1/2, chi_sigma = 1/3
    return CountMatrix([[2, 2, 2], [2, 2, 2], [2, 8, 5]])


@pytest.fixture
def four_object_matrix() -> CountMatrix:
    return CountMatrix([[2, 2, 1, 1], [2, 2, 1, 2], [1, 1, 1, 1], [0, 0, 0, 1]])


@pytest.fixture
def not_invariant_matrix() -> CountMatrix:
    return CountMatrix([[3, 3], [2, 2]])


@pytest.fixture
def not_diagonalizable_matrix() -> CountMatrix:
    return CountMatrix([[2, 3, 5], [2, 3, 5], [2, 1, 3]])


@pytest.fixture
def two_weightings_matrix() -> CountMatrix:
    return CountMatrix([[2, 3], [2, 3]])
