"""Dense univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored densely by degree, with
trailing zeros trimmed so that equality is structural equality.  The zero
polynomial is the empty coefficient tuple.  The indeterminate is anonymous;
`to_str` takes the display name (``x`` by default, ``q`` for q-triangles).

>>> p = Poly([0, 2, 12, 10])
>>> str(p)
'2*x + 12*x^2 + 10*x^3'
>>> p.evaluate(-1)
Fraction(0, 1)
>>> str(p.derivative())
'2 + 24*x + 30*x^2'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotDivisible, SupportOutOfRange, ZeroPolynomial

Scalar = int | Fraction


def as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal of the form "p/q" or "p"."""
    return Fraction(text.strip())


def format_rational(value: Scalar) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    return str(as_fraction(value))


class Poly:
    """An exact univariate polynomial, indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls([1])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def constant(cls, value: Scalar) -> Poly:
        return cls([value])

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar]) -> Poly:
        """Build from a {degree: coefficient} mapping.

        >>> str(Poly.from_terms({3: 1, 0: -2}))
        '-2 + x^3'
        """
        if not terms:
            return cls()
        top = max(terms)
        coeffs = [Fraction(0)] * (top + 1)
        for deg, c in terms.items():
            if deg < 0:
                raise ValueError("negative degree")
            coeffs[deg] += as_fraction(c)
        return cls(coeffs)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> Poly:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Poly([c / scalar for c in self.coeffs])

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> Poly:
        """Formal d/dx."""
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, point: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        point = as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """Substitute another polynomial for the indeterminate."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def scale_x(self, factor: Scalar) -> Poly:
        """Substitute factor*x for x."""
        factor = as_fraction(factor)
        out = []
        power = Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= factor
        return Poly(out)

    # -- division ----------------------------------------------------------

    def __divmod__(self, divisor: Poly) -> tuple[Poly, Poly]:
        if not isinstance(divisor, Poly):
            divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quot: dict[int, Fraction] = {}
        rem = list(self.coeffs)
        dlc = divisor.leading_coefficient()
        ddeg = divisor.degree
        while len(rem) - 1 >= ddeg and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < ddeg:
                break
            k = len(rem) - 1 - ddeg
            factor = rem[-1] / dlc
            quot[k] = quot.get(k, Fraction(0)) + factor
            for i, dc in enumerate(divisor.coeffs):
                rem[k + i] -= factor * dc
        return Poly.from_terms(quot), Poly(rem)

    # -- comparison / hashing / display -------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xpart = var if k == 1 else f"{var}^{k}"
                body = xpart if mag == 1 else f"{mag}*{xpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


def divide_exact(p: Poly, d: Poly) -> Poly:
    """Exact quotient p/d; raises NotDivisible on a nonzero remainder.

    >>> str(divide_exact(Poly([0, 1, 4, 3]), Poly([1, 1])))
    'x + 3*x^2'
    """
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot, rem = divmod(p, d)
    if not rem.is_zero():
        raise NotDivisible(f"remainder {rem} dividing {p} by {d}")
    return quot


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    if a.is_zero():
        return a
    return a / a.leading_coefficient()


def root_multiplicity(p: Poly, root: Scalar) -> int:
    """Largest m such that (x - root)^m divides p."""
    if p.is_zero():
        raise ZeroPolynomial("every multiplicity is infinite for the zero polynomial")
    linear = Poly([-as_fraction(root), 1])
    m = 0
    while True:
        quot, rem = divmod(p, linear)
        if not rem.is_zero():
            return m
        p = quot
        m += 1


def is_symmetric(p: Poly, low: int, high: int) -> bool:
    """True iff coefficient(low+i) == coefficient(high-i) on the window.

    The polynomial must be supported inside [low, high]; terms outside raise
    SupportOutOfRange.
    """
    if low > high:
        raise ValueError("low must not exceed high")
    for k, c in enumerate(p.coeffs):
        if c != 0 and not (low <= k <= high):
            raise SupportOutOfRange(f"term of degree {k} outside [{low}, {high}]")
    span = high - low
    return all(
        p.coefficient(low + i) == p.coefficient(high - i)
        for i in range(span // 2 + 1)
    )
