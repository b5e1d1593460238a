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

"""Euler characteristics of finite categories, computed from the count matrix.

Two invariants are provided. The Euler characteristic :py:func:`euler_characteristic`
is the total weight of a weighting, defined when the matrix admits both a weighting
and a coweighting. The series Euler characteristic :py:func:`series_chi` comes from
the generating function of nondegenerate chains in the nerve,

    f(t) = s(adj(I - (Z - I) t)) / det(I - (Z - I) t),

through the change of variable ``u = 1 + 1/t``, which turns ``f`` into
``(1 - u) g(u)`` with ``g(u) = s(adj(Z - uI)) / det(Z - uI)``. The series value is
``g(0)`` when finite.
"""

import itertools
import logging
import math
import warnings
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional

from .categories import CatPresentation, CountMatrix
from .categories import count_matrix as presentation_matrix
from .categories import count_nondegenerate_chains
from .exactmath import (
    QMatrix,
    adjugate,
    adjugate_entry_sum,
    delete_rc,
    det,
    entry_sum,
    faddeev_leverrier,
    minimal_polynomial,
    permutation_sign,
    solve_right,
)
from .polyrat import (
    UNDEFINED,
    Poly,
    RatFunc,
    SeriesTruncation,
    poly_squarefree,
    ratfunc_eval,
    ratfunc_normalize,
    ratfunc_series,
    ratfunc_substitute_mobius,
    render_rational,
)

_logger = logging.getLogger(__name__)

DEFAULT_SUBSET_LIMIT = 12
DEFAULT_SERIES_TERMS = 8
DEFAULT_ORACLE_LIMIT = 6
NERVE_CHAIN_LIMIT = 6
DEFAULT_NERVE_LIMIT = 12

Coefficients = tuple[Fraction, ...]


class DimensionLimitError(ValueError):
    """Raised when a factorial-cost computation is asked for too large a matrix"""

    def __init__(self, operation: str, dim: int, limit: int) -> None:
        super().__init__(
            f"{operation} is limited to dimension {limit}; got a {dim}x{dim} matrix."
        )


class Side(str, Enum):
    WEIGHTING = "weighting"
    COWEIGHTING = "coweighting"


@dataclass(frozen=True)
class Weighting:
    """A solution of ``Z w = 1`` (weighting) or ``w^T Z = 1`` (coweighting)."""

    values: tuple[Fraction, ...]
    side: Side

    @property
    def total(self) -> Fraction:
        return total_weight(self)


def _qmatrix(z: CountMatrix) -> QMatrix:
    return z.to_qmatrix()


def _system(z: CountMatrix, side: Side) -> QMatrix:
    q = _qmatrix(z)
    return q if side is Side.WEIGHTING else q.transpose()


def total_weight(w: Weighting) -> Fraction:
    return sum(w.values, Fraction(0))


def is_weighting(z: CountMatrix, values: Sequence[Fraction], side: Side) -> bool:
    """Whether ``values`` satisfies the weighting equations on the given side."""
    if len(values) != z.dim:
        return False
    return all(x == 1 for x in _system(z, side).apply(values))


def find_weighting(z: CountMatrix, side: Side) -> Optional[Weighting]:
    """The canonical (co)weighting, with every free variable set to zero.

    :param z: Count matrix.
    :param side: :py:attr:`Side.WEIGHTING` solves ``Z w = 1`` and
        :py:attr:`Side.COWEIGHTING` solves ``w^T Z = 1``.
    :return: The weighting, or None if the system is inconsistent.
    """
    solution = solve_right(_system(z, Side(side)), [1] * z.dim)
    if solution.particular is None:
        return None
    return Weighting(solution.particular, Side(side))


def euler_characteristic(z: CountMatrix) -> Optional[Fraction]:
    """Total weight of a weighting, when both a weighting and a coweighting exist.

    Any weighting and any coweighting then have the same total, so the canonical
    weighting is as good as any.
    """
    weighting = find_weighting(z, Side.WEIGHTING)
    if weighting is None or find_weighting(z, Side.COWEIGHTING) is None:
        return None
    return weighting.total


def mobius_chi(z: CountMatrix) -> Optional[Fraction]:
    """``s(Z^-1)`` when ``Z`` is invertible, else None."""
    q = _qmatrix(z)
    determinant = det(q)
    if determinant == 0:
        return None
    return adjugate_entry_sum(q) / determinant


def f_series_ratfunc(z: CountMatrix) -> RatFunc:
    """Generating function of nondegenerate chain counts, in t.

    With ``N = Z - I`` and ``det(uI - N) = sum c_k u^k``, ``adj(uI - N) =
    sum B_k u^k``, the denominator ``det(I - N t)`` is ``sum c_k t^(m-k)`` and the
    numerator ``s(adj(I - N t))`` is ``sum s(B_k) t^(m-1-k)``.
    """
    m = z.dim
    c, pencil = faddeev_leverrier(_qmatrix(z).shift(-1))
    denominator = Poly(c, "t").reversed(m)
    numerator = Poly([entry_sum(b) for b in pencil], "t").reversed(m - 1)
    return ratfunc_normalize(numerator, denominator)


def _sample_points() -> Iterator[Fraction]:
    yield Fraction(0)
    for k in itertools.count(1):
        yield Fraction(k)
        yield Fraction(-k)


def _interpolate(points: Sequence[Fraction], values: Sequence[Fraction]) -> Poly:
    """Lagrange interpolation in u through ``(points[i], values[i])``."""
    result = Poly((), "u")
    for i, (xi, yi) in enumerate(zip(points, values)):
        term = Poly.constant(yi, "u")
        for j, xj in enumerate(points):
            if j != i:
                term = term * Poly([-xj, 1], "u") * (1 / (xi - xj))
        result = result + term
    return result


def _shifted_polynomials(q: QMatrix) -> tuple[Poly, Poly]:
    """``det(Z - uI)`` and ``s(adj(Z - uI))`` as polynomials in u.

    The determinant comes from the characteristic polynomial. The adjugate sum has
    degree below m and is interpolated from its values at m points that are not
    eigenvalues, where ``s(adj(M)) = det(M) * s(M^-1)`` and ``s(M^-1)`` is the
    entry sum of the solution of ``M x = 1``.
    """
    m = q.dim
    c, _ = faddeev_leverrier(q)
    det_poly = Poly(c, "u") * (-1) ** m
    points: list[Fraction] = []
    values: list[Fraction] = []
    for x in _sample_points():
        if len(points) == m:
            break
        dx = det_poly(x)
        if dx == 0:
            _logger.debug("Skipping u = %s, an eigenvalue", render_rational(x))
            continue
        solution = solve_right(q.shift(-x), [1] * m)
        assert solution.particular is not None
        points.append(x)
        values.append(dx * sum(solution.particular, Fraction(0)))
    return det_poly, _interpolate(points, values)


def _alternating(p: Poly, length: int) -> Coefficients:
    """Coefficients ``a_r`` with ``p = sum (-1)^r a_r u^r``."""
    return tuple((-1) ** r * p.coefficient(r) for r in range(length))


def char_data_polynomial(z: CountMatrix) -> tuple[Coefficients, Coefficients]:
    """``(d, e)`` read off the expanded polynomials ``det(Z - uI)`` and
    ``s(adj(Z - uI))``."""
    det_poly, adj_poly = _shifted_polynomials(_qmatrix(z))
    return _alternating(det_poly, z.dim + 1), _alternating(adj_poly, z.dim + 1)


def char_data_subsets(z: CountMatrix) -> tuple[Coefficients, Coefficients]:
    """``(d, e)`` as sums over principal submatrices.

    ``d_r`` is the sum of ``det(Z \\ R)`` and ``e_r`` the sum of ``s(adj(Z \\ R))``
    over all r-element sets R of deleted rows and columns.
    """
    q = _qmatrix(z)
    m = q.dim
    d = [Fraction(0)] * (m + 1)
    e = [Fraction(0)] * (m + 1)
    for r in range(m + 1):
        for removed in itertools.combinations(range(m), r):
            minor = delete_rc(q, removed)
            d[r] += det(minor)
            e[r] += adjugate_entry_sum(minor)
    return tuple(d), tuple(e)


@dataclass(frozen=True)
class CharPolyData:
    """Coefficients of ``det(Z - uI) = sum (-1)^r d_r u^r`` and
    ``s(adj(Z - uI)) = sum (-1)^r e_r u^r``.

    :param l: Least r with ``d_r != 0``.
    :param subset_agreement: Whether the subset sums reproduce ``d`` and ``e``;
        None when the subset method was skipped.
    """

    d: tuple[Fraction, ...]
    e: tuple[Fraction, ...]
    l: int  # noqa: E741
    subset_agreement: Optional[bool] = None

    @property
    def subset_checked(self) -> bool:
        return self.subset_agreement is not None


def char_data(
    z: CountMatrix, subset_limit: int = DEFAULT_SUBSET_LIMIT
) -> CharPolyData:
    """The d/e coefficient data, by polynomial expansion and, up to
    ``subset_limit``, by subset enumeration as well.

    :param z: Count matrix.
    :param subset_limit: Largest dimension for the subset method.
    :return: Polynomial-method coefficients, with the outcome of the comparison.
    """
    d, e = char_data_polynomial(z)
    agreement: Optional[bool] = None
    if z.dim <= subset_limit:
        agreement = char_data_subsets(z) == (d, e)
        if not agreement:
            _logger.debug("Subset and polynomial coefficients differ for %s", z)
    else:
        warnings.warn(
            f"Skipping the subset method for a {z.dim}x{z.dim} matrix "
            f"(limit {subset_limit}); d and e come from polynomial expansion alone."
        )
    l = next(r for r, x in enumerate(d) if x != 0)  # noqa: E741
    return CharPolyData(d, e, l, agreement)


def series_chi_from_data(data: CharPolyData) -> Optional[Fraction]:
    """``e_l / d_l`` when ``e_r = 0`` for every ``r < l``, else None."""
    if any(data.e[r] != 0 for r in range(data.l)):
        return None
    return data.e[data.l] / data.d[data.l]


def series_chi(
    z: CountMatrix, subset_limit: int = DEFAULT_SUBSET_LIMIT
) -> Optional[Fraction]:
    return series_chi_from_data(char_data(z, subset_limit))


def g_ratfunc(z: CountMatrix) -> RatFunc:
    """``s(adj(Z - uI)) / det(Z - uI)`` in u, normalized."""
    det_poly, adj_poly = _shifted_polynomials(_qmatrix(z))
    return ratfunc_normalize(adj_poly, det_poly)


def is_diagonalizable(z: CountMatrix) -> bool:
    """Whether ``Z`` is diagonalizable over the complex numbers, decided by a
    squarefree minimal polynomial."""
    if z.dim == 0:
        return True
    return poly_squarefree(minimal_polynomial(_qmatrix(z)))


def s_adj_permutation_oracle(
    m: QMatrix, limit: int = DEFAULT_ORACLE_LIMIT
) -> Fraction:
    """``s(adj(M))`` by expansion over permutations.

    Each permutation contributes ``sgn(p) * sum_i prod_{j != i} M[j, p(j)]``.
    Factorial cost; independent of the elimination code.

    :raises DimensionLimitError: if ``m.dim > limit``.
    """
    if m.dim > limit:
        raise DimensionLimitError("The permutation oracle", m.dim, limit)
    total = Fraction(0)
    for perm in itertools.permutations(range(m.dim)):
        entries = [m[i, j] for i, j in enumerate(perm)]
        family = sum(
            (
                math.prod(entries[:i] + entries[i + 1 :], start=Fraction(1))
                for i in range(len(entries))
            ),
            Fraction(0),
        )
        total += permutation_sign(perm) * family
    return total


def chain_counts_from_powers(z: CountMatrix, terms: int) -> tuple[Fraction, ...]:
    """``s((Z - I)^n)`` for ``n < terms``."""
    step = _qmatrix(z).shift(-1)
    power = QMatrix.identity(z.dim)
    counts = []
    for _ in range(terms):
        counts.append(entry_sum(power))
        power = power @ step
    return tuple(counts)


class CheckVerdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: CheckVerdict
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.name}: {self.verdict.value}" + (
            f" ({self.detail})" if self.detail else ""
        )


def _outcome(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, CheckVerdict.PASS if ok else CheckVerdict.FAIL, detail)


@dataclass(frozen=True)
class EulerReport:
    """Every invariant of a count matrix, with the outcome of the internal
    cross-checks."""

    z: CountMatrix
    weighting: Optional[Weighting]
    coweighting: Optional[Weighting]
    chi: Optional[Fraction]
    has_mobius: bool
    f: RatFunc
    g: RatFunc
    char_data: CharPolyData
    chi_sigma: Optional[Fraction]
    diagonalizable: bool
    series_prefix: SeriesTruncation
    checks: tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.verdict is not CheckVerdict.FAIL for c in self.checks)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)


def nerve_within_limit(presentation: CatPresentation, nerve_limit: int) -> bool:
    """Whether chains of ``presentation`` may be enumerated one by one.

    The walk visits every nondegenerate chain, so its cost grows with the chain
    counts themselves; it is only run on presentations with at most
    ``nerve_limit`` arrows.
    """
    return len(presentation.arrows) <= nerve_limit


def _nerve_check(
    presentation: CatPresentation,
    z: CountMatrix,
    prefix: SeriesTruncation,
    nerve_limit: int,
) -> CheckResult:
    name = "nerve-chains"
    if presentation_matrix(presentation) != z:
        return CheckResult(
            name, CheckVerdict.FAIL, "presentation does not have this count matrix"
        )
    if not nerve_within_limit(presentation, nerve_limit):
        return CheckResult(
            name,
            CheckVerdict.SKIP,
            f"{len(presentation.arrows)} arrows exceed nerve limit {nerve_limit}",
        )
    depth = min(len(prefix.coefficients), NERVE_CHAIN_LIMIT + 1)
    counts = tuple(
        Fraction(count_nondegenerate_chains(presentation, n)) for n in range(depth)
    )
    return _outcome(name, counts == prefix.coefficients[:depth], f"n < {depth}")


def _checks(
    report: EulerReport,
    presentation: Optional[CatPresentation],
    subset_limit: int,
    oracle_limit: int,
    nerve_limit: int,
) -> tuple[CheckResult, ...]:
    z, data = report.z, report.char_data
    results = []

    if data.subset_agreement is None:
        results.append(
            CheckResult(
                "proposition-identity",
                CheckVerdict.SKIP,
                f"dimension {z.dim} exceeds subset limit {subset_limit}",
            )
        )
    else:
        results.append(_outcome("proposition-identity", data.subset_agreement))

    results.append(
        _outcome(
            "substitution-identity",
            ratfunc_substitute_mobius(report.g) == report.f,
        )
    )

    terms = len(report.series_prefix.coefficients)
    results.append(
        _outcome(
            "series-vs-powers",
            report.series_prefix.coefficients == chain_counts_from_powers(z, terms),
        )
    )

    at_zero = ratfunc_eval(report.g, 0)
    if report.chi_sigma is None:
        results.append(
            _outcome(
                "chi-sigma-two-path",
                at_zero is UNDEFINED,
                "undefined, consistent on both paths" if at_zero is UNDEFINED else "",
            )
        )
    else:
        results.append(_outcome("chi-sigma-two-path", at_zero == report.chi_sigma))

    if report.weighting is not None and report.coweighting is not None:
        results.append(
            _outcome(
                "weight-totals",
                report.weighting.total == report.coweighting.total,
            )
        )
    else:
        results.append(
            CheckResult("weight-totals", CheckVerdict.SKIP, "needs both sides")
        )

    if report.has_mobius:
        results.append(_outcome("mobius-agreement", mobius_chi(z) == report.chi))
    else:
        results.append(CheckResult("mobius-agreement", CheckVerdict.SKIP, "det = 0"))

    if z.dim <= oracle_limit:
        q = _qmatrix(z)
        oracle = s_adj_permutation_oracle(q, oracle_limit)
        results.append(
            _outcome(
                "adjugate-oracle",
                oracle == adjugate_entry_sum(q) == entry_sum(adjugate(q)),
            )
        )
    else:
        results.append(
            CheckResult(
                "adjugate-oracle",
                CheckVerdict.SKIP,
                f"dimension {z.dim} exceeds oracle limit {oracle_limit}",
            )
        )

    if presentation is not None:
        results.append(
            _nerve_check(presentation, z, report.series_prefix, nerve_limit)
        )
    return tuple(results)


def build_report(
    z: CountMatrix,
    series_terms: int = DEFAULT_SERIES_TERMS,
    *,
    presentation: Optional[CatPresentation] = None,
    subset_limit: int = DEFAULT_SUBSET_LIMIT,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
    nerve_limit: int = DEFAULT_NERVE_LIMIT,
) -> EulerReport:
    """Compute every invariant of ``z`` and run the cross-checks.

    :param z: Count matrix.
    :param series_terms: Number of coefficients of ``f`` in the series prefix.
    :param presentation: Category with count matrix ``z``; enables the check of
        chain counts against the nerve.
    :param subset_limit: Largest dimension for the subset method.
    :param oracle_limit: Largest dimension for the permutation oracle.
    :param nerve_limit: Largest arrow count for walking the nerve of
        ``presentation``.
    """
    if series_terms < 0:
        raise ValueError("The number of series terms must be nonnegative.")
    weighting = find_weighting(z, Side.WEIGHTING)
    coweighting = find_weighting(z, Side.COWEIGHTING)
    data = char_data(z, subset_limit)
    f = f_series_ratfunc(z)
    report = EulerReport(
        z=z,
        weighting=weighting,
        coweighting=coweighting,
        chi=(
            weighting.total
            if weighting is not None and coweighting is not None
            else None
        ),
        has_mobius=det(_qmatrix(z)) != 0,
        f=f,
        g=g_ratfunc(z),
        char_data=data,
        chi_sigma=series_chi_from_data(data),
        diagonalizable=is_diagonalizable(z),
        series_prefix=ratfunc_series(f, series_terms - 1),
    )
    checks = _checks(report, presentation, subset_limit, oracle_limit, nerve_limit)
    failed = [c.name for c in checks if c.verdict is CheckVerdict.FAIL]
    if failed:
        _logger.debug("Failed checks for %s: %s", z, ", ".join(failed))
    return replace(report, checks=checks)
