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

"""Polynomials and normalized rational functions over the rationals.

A rational function is stored with a monic denominator coprime to its
numerator, so equal functions are equal values. Every value carries a variable
tag, ``t`` (the generating-function variable) or ``u`` (``u = 1 + 1/t``), and
operations refuse to mix the two.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Literal, Union

import sympy
from sympy import QQ

Scalar = Union[int, Fraction]


class Variable(str, Enum):
    T = "t"
    U = "u"


class _Undefined(Enum):
    UNDEFINED = "undefined"

    def __repr__(self) -> str:
        return "UNDEFINED"


UNDEFINED = _Undefined.UNDEFINED
"""Value of a rational function at a pole."""

MaybeRational = Union[Fraction, Literal[_Undefined.UNDEFINED]]


class VariableMismatchError(TypeError):
    """Raised when values in different variables are combined"""

    def __init__(self, expected: Variable, got: Variable) -> None:
        super().__init__(
            f"Expected a value in variable '{expected.value}', got '{got.value}'."
        )


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational function is given the zero polynomial as denominator"""

    def __init__(self) -> None:
        super().__init__("The denominator of a rational function must be nonzero.")


class PoleAtZeroError(ValueError):
    """Raised when a power series expansion at 0 is requested at a pole"""

    def __init__(self, f: "RatFunc") -> None:
        super().__init__(
            f"{render_ratfunc(f)} has a pole at 0 and no power series expansion."
        )


class ZeroPolynomialError(ValueError):
    """Raised when an operation is undefined for the zero polynomial"""

    def __init__(self, operation: str) -> None:
        super().__init__(f"{operation} is undefined for the zero polynomial.")


def _strip(coefficients: Iterable[Scalar]) -> tuple[Fraction, ...]:
    values = [Fraction(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Poly:
    """A polynomial with rational coefficients in ascending degree.

    Trailing zeros are removed on construction, so the zero polynomial has no
    coefficients.

    :param coefficients: ``c_0, c_1, ...``.
    :param var: Variable tag, ``"t"`` or ``"u"``.
    """

    coefficients: tuple[Fraction, ...] = ()
    var: Variable = Variable.T

    def __init__(
        self, coefficients: Iterable[Scalar] = (), var: Union[str, Variable] = "t"
    ):
        object.__setattr__(self, "coefficients", _strip(coefficients))
        object.__setattr__(self, "var", Variable(var))

    @classmethod
    def constant(cls, c: Scalar, var: Union[str, Variable]) -> "Poly":
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, var: Union[str, Variable], c: Scalar = 1) -> "Poly":
        return cls([0] * degree + [c], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def _check(self, other: "Poly") -> None:
        if other.var is not self.var:
            raise VariableMismatchError(self.var, other.var)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return Poly(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)], self.var
        )

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coefficients], self.var)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coefficients], self.var)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly((), self.var)
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Poly(product, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.constant(1, self.var)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x: Scalar) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coefficients)][1:], self.var)

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomialError("Scaling to monic")
        return self * (1 / self.leading_coefficient)

    def reversed(self, degree: int) -> "Poly":
        """``x^degree * p(1/x)``, for ``degree >= self.degree``."""
        padded = [self.coefficient(k) for k in range(degree + 1)]
        return Poly(reversed(padded), self.var)

    def to_sympy(self) -> sympy.Poly:
        symbol = sympy.Symbol(self.var.value)
        return sympy.Poly(
            [
                sympy.Rational(c.numerator, c.denominator)
                for c in reversed(self.coefficients)
            ]
            or [0],
            symbol,
            domain=QQ,
        )

    @classmethod
    def from_sympy(cls, p: sympy.Poly, var: Union[str, Variable]) -> "Poly":
        return cls(
            [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())], var
        )

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero.")
        q, r = self.to_sympy().div(other.to_sympy())
        return Poly.from_sympy(q, self.var), Poly.from_sympy(r, self.var)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (zero if both are zero)."""
        self._check(other)
        g = Poly.from_sympy(self.to_sympy().gcd(other.to_sympy()), self.var)
        return g if g.is_zero() else g.monic()

    def __str__(self) -> str:
        return render_poly(self)


@dataclass(frozen=True)
class RatFunc:
    """A rational function ``numerator / denominator`` in normalized form.

    Build values with :py:func:`ratfunc_normalize`; the denominator is then monic
    and coprime to the numerator, so ``==`` decides equality of functions.
    """

    numerator: Poly
    denominator: Poly

    @property
    def var(self) -> Variable:
        return self.denominator.var

    def cross_equal(self, other: "RatFunc") -> bool:
        """Equality by cross-multiplication; agrees with ``==`` on normalized values."""
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __str__(self) -> str:
        return render_ratfunc(self)


@dataclass(frozen=True)
class SeriesTruncation:
    """Coefficients ``c_0, ..., c_N`` of a power series, ``order == N``."""

    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


def ratfunc_normalize(p: Poly, q: Poly) -> RatFunc:
    """Cancel the gcd of ``p`` and ``q`` and scale the denominator monic.

    :raises ZeroDenominatorError: if ``q`` is the zero polynomial.
    """
    p._check(q)
    if q.is_zero():
        raise ZeroDenominatorError()
    if p.is_zero():
        return RatFunc(p, Poly.constant(1, q.var))
    g = p.gcd(q)
    num, _ = p.divmod(g)
    den, _ = q.divmod(g)
    scale = 1 / den.leading_coefficient
    return RatFunc(num * scale, den * scale)


def ratfunc_eval(f: RatFunc, x: Scalar) -> MaybeRational:
    """``p(x) / q(x)``, or :py:data:`UNDEFINED` where ``q(x) == 0``."""
    q = f.denominator(x)
    if q == 0:
        return UNDEFINED
    return f.numerator(x) / q


def ratfunc_series(f: RatFunc, order: int) -> SeriesTruncation:
    """Power series coefficients ``c_0 .. c_order`` of ``f`` at 0.

    The coefficients satisfy ``q * series == p (mod x^(order + 1))``.

    :raises PoleAtZeroError: if the denominator vanishes at 0.
    """
    q0 = f.denominator.coefficient(0)
    if q0 == 0:
        raise PoleAtZeroError(f)
    series: list[Fraction] = []
    for n in range(order + 1):
        acc = f.numerator.coefficient(n)
        for k in range(1, min(n, f.denominator.degree) + 1):
            acc -= f.denominator.coefficient(k) * series[n - k]
        series.append(acc / q0)
    return SeriesTruncation(tuple(series))


def ratfunc_substitute_mobius(g: RatFunc) -> RatFunc:
    """The function ``(1 - u) g(u)`` rewritten in t under ``u = 1 + 1/t``.

    Both numerator and denominator of ``g`` are multiplied through by
    ``t^N`` (N the larger degree) so the result is a ratio of polynomials in t.
    """
    if g.var is not Variable.U:
        raise VariableMismatchError(Variable.U, g.var)
    if g.numerator.is_zero():
        return ratfunc_normalize(Poly((), "t"), Poly.constant(1, "t"))
    n = max(g.numerator.degree, g.denominator.degree)
    t_plus_one = Poly([1, 1], "t")

    def cleared(p: Poly) -> Poly:
        # p(1 + 1/t) * t^n
        total = Poly((), "t")
        for k, c in enumerate(p.coefficients):
            total = total + (t_plus_one**k) * Poly.monomial(n - k, "t", c)
        return total

    # 1 - u = -1/t
    return ratfunc_normalize(
        -cleared(g.numerator), Poly([0, 1], "t") * cleared(g.denominator)
    )


def poly_squarefree(p: Poly) -> bool:
    """True iff ``gcd(p, p')`` is constant."""
    if p.is_zero():
        raise ZeroPolynomialError("Squarefreeness")
    return p.gcd(p.derivative()).degree == 0


def render_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_vector(values: Sequence[Fraction]) -> str:
    return "[" + ", ".join(render_rational(x) for x in values) + "]"


def render_poly(p: Poly) -> str:
    return render_vector(p.coefficients)


def render_ratfunc(f: RatFunc) -> str:
    return f"{render_poly(f.numerator)} / {render_poly(f.denominator)}"
