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

"""Exact Euler characteristics of finite categories."""

# _metadata.py is copied to the folder after installation.
from ._metadata import __extension_name__, __extension_version__
from .categories import (
    CatPresentation,
    CountMatrix,
    InvalidCategoryError,
    category_from_matrix,
    count_matrix,
    is_category_matrix,
)
from .config import EulerConfig, set_euler_config
from .euler import (
    CharPolyData,
    EulerReport,
    Side,
    Weighting,
    build_report,
    char_data,
    euler_characteristic,
    f_series_ratfunc,
    find_weighting,
    g_ratfunc,
    is_diagonalizable,
    mobius_chi,
    series_chi,
)
from .exactmath import QMatrix
from .polyrat import Poly, RatFunc
