"""Gamma expansions, semi-gamma expansions, and David-Barton transforms.

A polynomial symmetric on a degree window [low, high] factors as x^low
times a palindromic polynomial of span d = high - low.  That palindromic
part expands uniquely as

    sum_k gamma_k x^k (1+x)^(d-2k)            (gamma form)
    (1+x)^nu sum_k lambda_k x^k (1+x^2)^(m-k) (semi-gamma form, nu = d mod 2)

and the two are linked by lambda_k = sum_i C(m-i, k-i) 2^(k-i) gamma_i.
The David-Barton transform pairs a gamma vector M(n, .) with the polynomial
sum_k 2^(2*delta-k) M(n,k) x^k (1+x)^(n-delta-k); the surd form of the same
identity is certified at rational points via x = (1-t^2)/(1+t^2), w = t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import DegenerateSample, NotSymmetric
from .polys import Poly, Scalar, as_fraction, divide_exact, is_symmetric

_ONE_X = Poly([1, 1])
_ONE_X2 = Poly([1, 0, 1])


@dataclass(frozen=True)
class GammaForm:
    """gamma coefficients of a palindromic polynomial of span base_degree."""

    base_degree: int
    gammas: tuple[Fraction, ...]

    def reassemble(self) -> Poly:
        total = Poly.zero()
        for k, g in enumerate(self.gammas):
            if g != 0:
                total = total + g * Poly.from_terms({k: 1}) * _ONE_X ** (
                    self.base_degree - 2 * k
                )
        return total

    def is_positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def to_json_dict(self) -> dict:
        return {
            "base": self.base_degree,
            "coeffs": [str(g) for g in self.gammas],
        }


@dataclass(frozen=True)
class SemiGammaForm:
    """(1+x)^nu sum lambda_k x^k (1+x^2)^(half_degree-k)."""

    nu: int
    half_degree: int
    lambdas: tuple[Fraction, ...]

    def reassemble(self) -> Poly:
        total = Poly.zero()
        for k, lam in enumerate(self.lambdas):
            if lam != 0:
                total = total + lam * Poly.from_terms({k: 1}) * _ONE_X2 ** (
                    self.half_degree - k
                )
        return total * _ONE_X**self.nu

    def is_positive(self) -> bool:
        return all(lam >= 0 for lam in self.lambdas)

    def to_json_dict(self) -> dict:
        return {
            "nu": self.nu,
            "base": self.half_degree,
            "coeffs": [str(lam) for lam in self.lambdas],
        }


def _peel(p: Poly, low: int, high: int) -> Poly:
    """Shift the window [low, high] down to [0, high-low], checking symmetry."""
    if not is_symmetric(p, low, high):
        raise NotSymmetric(f"{p} is not symmetric on [{low}, {high}]")
    if low == 0:
        return p
    return Poly(p.coeffs[low:])


def gamma_expand(p: Poly, low: int, high: int) -> GammaForm:
    """Unique gamma expansion of a polynomial symmetric on [low, high].

    >>> gamma_expand(Poly([0, 1, 4, 1]), 1, 3).gammas
    (Fraction(1, 1), Fraction(2, 1))
    """
    core = _peel(p, low, high)
    d = high - low
    gammas = []
    remainder = core
    for k in range(d // 2 + 1):
        g = remainder.coefficient(k)
        gammas.append(g)
        if g != 0:
            remainder = remainder - g * Poly.from_terms({k: 1}) * _ONE_X ** (d - 2 * k)
    if not remainder.is_zero():
        raise NotSymmetric(f"gamma expansion left a remainder {remainder}")
    return GammaForm(d, tuple(gammas))


def semi_gamma_expand(p: Poly, low: int, high: int) -> SemiGammaForm:
    """Unique semi-gamma expansion of a polynomial symmetric on [low, high]."""
    core = _peel(p, low, high)
    d = high - low
    nu = d % 2
    if nu:
        # a palindromic polynomial of odd span vanishes at -1
        core = divide_exact(core, _ONE_X)
    m = d // 2
    lambdas = []
    remainder = core
    for k in range(m + 1):
        lam = remainder.coefficient(k)
        lambdas.append(lam)
        if lam != 0:
            remainder = remainder - lam * Poly.from_terms({k: 1}) * _ONE_X2 ** (m - k)
    if not remainder.is_zero():
        raise NotSymmetric(f"semi-gamma expansion left a remainder {remainder}")
    return SemiGammaForm(nu, m, tuple(lambdas))


def gamma_to_lambda(form: GammaForm) -> SemiGammaForm:
    """Convert a gamma form to the equivalent semi-gamma form.

    lambda_k = sum_i C(m-i, k-i) 2^(k-i) gamma_i with m = base_degree // 2;
    an odd base degree contributes the (1+x) factor as nu = 1.
    """
    m = form.base_degree // 2
    nu = form.base_degree % 2
    lambdas = []
    for k in range(m + 1):
        total = Fraction(0)
        for i, g in enumerate(form.gammas[: k + 1]):
            total += comb(m - i, k - i) * Fraction(2) ** (k - i) * g
        lambdas.append(total)
    return SemiGammaForm(nu, m, tuple(lambdas))


def split_even_odd(p: Poly, nu: int) -> tuple[Poly, Poly]:
    """Write p/(1+x)^nu as g1(x^2) + x*g2(x^2) and return (g1, g2)."""
    if nu not in (0, 1):
        raise ValueError("nu must be 0 or 1")
    core = divide_exact(p, _ONE_X) if nu else p
    g1 = Poly(core.coeffs[0::2])
    g2 = Poly(core.coeffs[1::2])
    return g1, g2


# ---------------------------------------------------------------------------
# David-Barton transform
# ---------------------------------------------------------------------------


def david_barton_assemble(m_row: GammaForm, n: int, delta: int) -> Poly:
    """sum_k 2^(2*delta-k) M(n,k) x^k (1+x)^(n-delta-k).

    >>> str(david_barton_assemble(GammaForm(4, (Fraction(0), Fraction(1), Fraction(2))), 3, 1))
    '2*x + 4*x^2'
    """
    if m_row.base_degree != n + delta:
        raise ValueError(
            f"gamma form has base degree {m_row.base_degree}, expected {n + delta}"
        )
    total = Poly.zero()
    for k, g in enumerate(m_row.gammas):
        if g == 0:
            continue
        exponent = n - delta - k
        if exponent < 0:
            raise ValueError(f"negative (1+x) exponent at k={k}")
        weight = Fraction(2) ** (2 * delta - k)
        total = total + weight * g * Poly.from_terms({k: 1}) * _ONE_X**exponent
    return total


def default_samples(count: int) -> list[Fraction]:
    """Distinct rationals in (0, 1) for certificate evaluation."""
    return [Fraction(1, j + 2) for j in range(count)]


def david_barton_identity_check(
    m_poly: Poly,
    n_poly: Poly,
    n: int,
    delta: int,
    t_samples: Sequence[Scalar],
) -> bool:
    """Certify N_n(x) = ((1+x)/2)^(n-delta) (1+w)^(n+delta) M_n((1-w)/(1+w)).

    Each sample t in (0, 1) is made exact through x = (1-t^2)/(1+t^2), which
    forces w = t.  Agreement at more than deg N_n points upgrades the sample
    check to a polynomial identity certificate.
    """
    if not t_samples:
        raise ValueError("need at least one sample")
    if len(t_samples) <= n_poly.degree:
        return False
    seen = set()
    for t in t_samples:
        t = as_fraction(t)
        if not 0 < t < 1:
            raise ValueError(f"sample {t} outside (0, 1)")
        if t in seen:
            raise ValueError(f"duplicate sample {t}")
        seen.add(t)
        x = (1 - t * t) / (1 + t * t)
        if x == -1:
            raise DegenerateSample(f"x = -1 at t = {t}")
        lhs = n_poly.evaluate(x)
        rhs = (
            ((1 + x) / 2) ** (n - delta)
            * (1 + t) ** (n + delta)
            * m_poly.evaluate((1 - t) / (1 + t))
        )
        if lhs != rhs:
            return False
    return True
