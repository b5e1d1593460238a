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

"""Worked examples of finite categories with their known invariants.

Each entry holds a count matrix and the values stated for it; :py:func:`evaluate`
recomputes every value and compares it exactly with the stated one.
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .categories import (
    CatPresentation,
    CountMatrix,
    count_matrix,
    duplicate_object,
    is_category_matrix,
    monoid_category,
)
from .euler import (
    Side,
    build_report,
    euler_characteristic,
    f_series_ratfunc,
    find_weighting,
    g_ratfunc,
    is_diagonalizable,
    is_weighting,
    mobius_chi,
    series_chi,
)
from .polyrat import (
    UNDEFINED,
    Poly,
    RatFunc,
    ratfunc_eval,
    ratfunc_normalize,
    render_rational,
    render_ratfunc,
    render_vector,
)

_logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class CatalogueEntry:
    """A count matrix with the values stated for it.

    :param expected: ``(quantity, value)`` pairs; quantities are the keys of
        :py:data:`QUANTITIES`.
    :param presentation: A category with this count matrix, when one is known.
    :param claimed_weightings: Weightings stated for the matrix beyond the
        canonical one.
    """

    group: str
    name: str
    z: CountMatrix
    expected: tuple[tuple[str, Any], ...]
    presentation: Optional[CatPresentation] = None
    claimed_weightings: tuple[Vector, ...] = ()


@dataclass(frozen=True)
class CatalogueRow:
    group: str
    entry: str
    quantity: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return bool(self.expected == self.actual)


def _weighting_values(z: CountMatrix, side: Side) -> Optional[Vector]:
    w = find_weighting(z, side)
    return None if w is None else w.values


def _g_at_zero(entry: CatalogueEntry) -> Optional[Fraction]:
    value = ratfunc_eval(g_ratfunc(entry.z), 0)
    return None if value is UNDEFINED else value


def _claimed_totals(entry: CatalogueEntry) -> Vector:
    return tuple(
        sorted(
            sum(w, Fraction(0))
            for w in entry.claimed_weightings
            if is_weighting(entry.z, w, Side.WEIGHTING)
        )
    )


def _checks_pass(entry: CatalogueEntry) -> bool:
    return build_report(entry.z, presentation=entry.presentation).passed


QUANTITIES: dict[str, Callable[[CatalogueEntry], Any]] = {
    "matrix": lambda e: e.z,
    "count matrix": lambda e: (
        None if e.presentation is None else count_matrix(e.presentation)
    ),
    "category": lambda e: is_category_matrix(e.z).verdict.value,
    "weighting": lambda e: _weighting_values(e.z, Side.WEIGHTING),
    "coweighting": lambda e: _weighting_values(e.z, Side.COWEIGHTING),
    "has weighting": lambda e: find_weighting(e.z, Side.WEIGHTING) is not None,
    "has coweighting": lambda e: find_weighting(e.z, Side.COWEIGHTING) is not None,
    "chi": lambda e: euler_characteristic(e.z),
    "mobius chi": lambda e: mobius_chi(e.z),
    "f": lambda e: f_series_ratfunc(e.z),
    "g": lambda e: g_ratfunc(e.z),
    "chi_sigma": lambda e: series_chi(e.z),
    "g(0)": _g_at_zero,
    "diagonalizable": lambda e: is_diagonalizable(e.z),
    "weighting totals": _claimed_totals,
    "checks pass": _checks_pass,
}


def _q(p: int, q: int = 1) -> Fraction:
    return Fraction(p, q)


def _rf(numerator: Sequence[int], denominator: Sequence[int], var: str) -> RatFunc:
    """A rational function from ascending coefficients, as printed."""
    return ratfunc_normalize(Poly(numerator, var), Poly(denominator, var))


def _monoid(order: int) -> CatalogueEntry:
    return CatalogueEntry(
        group="monoids",
        name=f"cyclic group of order {order}",
        z=CountMatrix([[order]]),
        expected=(
            ("count matrix", CountMatrix([[order]])),
            ("f", _rf([1], [1, 1 - order], "t")),
            ("chi", _q(1, order)),
            ("mobius chi", _q(1, order)),
            ("chi_sigma", _q(1, order)),
            ("weighting", (_q(1, order),)),
            ("coweighting", (_q(1, order),)),
            ("checks pass", True),
        ),
        presentation=monoid_category(order),
    )


_NOT_INVARIANT_A = CountMatrix([[3, 3], [2, 2]])

CATALOGUE: tuple[CatalogueEntry, ...] = (
    *(_monoid(order) for order in (1, 2, 3, 6)),
    CatalogueEntry(
        group="four objects",
        name="coweighting without weighting",
        z=CountMatrix([[2, 2, 1, 1], [2, 2, 1, 2], [1, 1, 1, 1], [0, 0, 0, 1]]),
        expected=(
            ("has weighting", False),
            ("has coweighting", True),
            ("chi", None),
            ("diagonalizable", True),
            ("chi_sigma", _q(1)),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="new doesn't contain old",
        name="Z",
        z=CountMatrix(
            [[6, 6, 15, 9], [6, 6, 6, 6], [6, 6, 9, 7], [6, 30, 9, 15]]
        ),
        expected=(
            ("weighting", (_q(1, 6), _q(0), _q(0), _q(0))),
            ("coweighting", (_q(0), _q(1, 6), _q(0), _q(0))),
            ("chi", _q(1, 6)),
            ("g", _rf([4, 4], [0, 36, -1], "u")),
            ("chi_sigma", None),
            ("g(0)", None),
            ("category", "yes"),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="union isn't everything",
        name="Z",
        z=CountMatrix([[2, 4], [1, 2]]),
        expected=(
            ("has weighting", False),
            ("has coweighting", False),
            ("chi", None),
            ("g", _rf([1, 2], [0, 4, -1], "u")),
            ("chi_sigma", None),
            ("diagonalizable", True),
            ("category", "yes"),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="disagreement on intersection",
        name="Z",
        z=CountMatrix([[2, 2, 2], [2, 2, 2], [2, 8, 5]]),
        expected=(
            ("weighting", (_q(1, 2), _q(0), _q(0))),
            ("coweighting", (_q(1, 2), _q(0), _q(0))),
            ("chi", _q(1, 2)),
            ("g", _rf([3], [9, -1], "u")),
            ("chi_sigma", _q(1, 3)),
            ("g(0)", _q(1, 3)),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="not equivalence-invariant",
        name="Z_A",
        z=_NOT_INVARIANT_A,
        expected=(
            ("g", _rf([2], [5, -1], "u")),
            ("chi_sigma", _q(2, 5)),
            ("category", "yes"),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="not equivalence-invariant",
        name="Z_B",
        z=duplicate_object(_NOT_INVARIANT_A, 1),
        expected=(
            ("matrix", CountMatrix([[3, 3, 3], [2, 2, 2], [2, 2, 2]])),
            ("g", _rf([3], [7, -1], "u")),
            ("chi_sigma", _q(3, 7)),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="sharpness",
        name="not diagonalizable",
        z=CountMatrix([[2, 3, 5], [2, 3, 5], [2, 1, 3]]),
        expected=(
            ("has weighting", True),
            ("diagonalizable", False),
            ("g", _rf([2, 3], [0, 8, -1], "u")),
            ("chi_sigma", None),
            ("checks pass", True),
        ),
    ),
    CatalogueEntry(
        group="sharpness",
        name="total weight not unique",
        z=CountMatrix([[2, 3], [2, 3]]),
        expected=(
            ("diagonalizable", True),
            ("g", _rf([2], [5, -1], "u")),
            ("chi_sigma", _q(2, 5)),
            ("weighting totals", (_q(1, 3), _q(1, 2))),
            ("checks pass", True),
        ),
        claimed_weightings=((_q(1, 2), _q(0)), (_q(0), _q(1, 3))),
    ),
    CatalogueEntry(
        group="matrices of categories",
        name="reflexive and transitive but no category",
        z=CountMatrix([[1, 2], [1, 2]]),
        expected=(("category", "no"),),
    ),
)


def matches(entry: CatalogueEntry, name_filter: Optional[str]) -> bool:
    """Case-insensitive substring match on the group or entry name."""
    if not name_filter:
        return True
    needle = name_filter.lower()
    return needle in entry.group.lower() or needle in entry.name.lower()


def evaluate(
    entries: Iterable[CatalogueEntry] = CATALOGUE,
    name_filter: Optional[str] = None,
) -> list[CatalogueRow]:
    """Recompute every stated value of the selected entries."""
    rows = []
    for entry in entries:
        if not matches(entry, name_filter):
            continue
        for quantity, expected in entry.expected:
            actual = QUANTITIES[quantity](entry)
            row = CatalogueRow(entry.group, entry.name, quantity, expected, actual)
            if not row.passed:
                _logger.debug("Mismatch: %s", row)
            rows.append(row)
    return rows


def render_value(value: Any) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return render_rational(Fraction(value))
    if isinstance(value, RatFunc):
        return render_ratfunc(value)
    if isinstance(value, tuple):
        return render_vector(value)
    return str(value)


def render_row(row: CatalogueRow) -> str:
    return "  ".join(
        [
            "PASS" if row.passed else "FAIL",
            row.group,
            row.entry,
            row.quantity,
            f"expected={render_value(row.expected)}",
            f"actual={render_value(row.actual)}",
        ]
    )
