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

"""Finite categories, their count matrices, and which matrices arise this way"""

from .builder import (
    LemmaHypothesisError,
    category_from_matrix,
    discrete_category,
    disjoint_union,
    duplicate_object,
    indiscrete_category,
    monoid_category,
    random_category_matrix,
)
from .presentation import (
    Arrow,
    CatPresentation,
    CountMatrix,
    InvalidCategoryError,
    Violation,
    count_matrix,
    count_nondegenerate_chains,
    ensure_valid,
    full_subcategory,
    is_isomorphic,
    is_skeletal,
    skeleton,
    validate,
)
from .search import SearchResult, Verdict, is_category_matrix
