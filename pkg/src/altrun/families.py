"""Recurrence-defined triangles and polynomial sequences.

Triangles (entries are integers, except Rq whose entries are polynomials
in q):

    R      alternating-run counts R[n][k], rows from n=1
    T      up-down-run counts T[n][k], rows from n=0
    Rq     q-alternating-run entries R[n][k](q), rows from n=0
    a      gamma coefficients of the type-A Eulerian polynomials, from n=1
    b      gamma coefficients of the type-B Eulerian polynomials, from n=0
    F      alternating-run counts of dual Stirling permutations, from n=0
    gamma  gamma coefficients of F_n (sign-mixed), from n=0
    f      half-gamma coefficients of F_n (nonnegative), from n=0

Polynomial sequences: bpoly, cpoly, dpoly, gammapoly, Fpoly, eulerA, eulerB.

All values are exact; rows are produced by the defining recurrences, so the
triangles double as the recurrence oracle for the grammar and enumeration
routes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import UnknownFamily
from .multipoly import MultiPoly
from .polys import Poly, Scalar, as_fraction

Entry = int | Poly

_Q = Poly.x()  # the q indeterminate for Rq entries
_ONE_X = Poly([1, 1])  # 1 + x


@dataclass(frozen=True)
class Triangle:
    """Rows of a doubly-indexed family; rows[i] holds row n = min_n + i."""

    name: str
    min_n: int
    rows: tuple[tuple[Entry, ...], ...]

    @property
    def max_n(self) -> int:
        return self.min_n + len(self.rows) - 1

    def row(self, n: int) -> tuple[Entry, ...]:
        if not self.min_n <= n <= self.max_n:
            raise IndexError(f"row {n} not computed (have {self.min_n}..{self.max_n})")
        return self.rows[n - self.min_n]

    def entry(self, n: int, k: int) -> Entry:
        if not self.min_n <= n <= self.max_n:
            return 0
        row = self.row(n)
        if 0 <= k < len(row):
            return row[k]
        return 0

    def row_poly(self, n: int) -> Poly:
        """Assemble sum_k entry * x^k (numeric families only)."""
        return Poly(self.row(n))

    def row_multipoly(self, n: int, xvar: str = "x", qvar: str = "q") -> MultiPoly:
        """Assemble sum_k entry_k(q) * x^k as a polynomial in (xvar, qvar)."""
        alphabet = (xvar, qvar)
        terms = {}
        for k, entry in enumerate(self.row(n)):
            qpoly = entry if isinstance(entry, Poly) else Poly.constant(entry)
            for j, c in enumerate(qpoly.coeffs):
                if c != 0:
                    terms[(k, j)] = c
        return MultiPoly(alphabet, terms)


@dataclass(frozen=True)
class _TriangleSpec:
    min_n: int
    first_row: tuple[Entry, ...]
    k_max: Callable[[int], int]
    # coefficients of row[n][k] = A*prev[k] + B*prev[k-1] + C*prev[k-2],
    # where prev is row n-1
    coeff_a: Callable[[int, int], Entry]
    coeff_b: Callable[[int, int], Entry]
    coeff_c: Callable[[int, int], Entry]


_TRIANGLES: dict[str, _TriangleSpec] = {
    "R": _TriangleSpec(
        min_n=1,
        first_row=(1,),
        k_max=lambda n: max(n - 1, 0),
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: 2,
        coeff_c=lambda n, k: n - k,
    ),
    "T": _TriangleSpec(
        min_n=0,
        first_row=(1,),
        k_max=lambda n: n,
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: 1,
        coeff_c=lambda n, k: n - k + 1,
    ),
    "Rq": _TriangleSpec(
        min_n=0,
        first_row=(Poly.one(),),
        k_max=lambda n: n,
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: _Q,
        coeff_c=lambda n, k: n - k + 1,
    ),
    "a": _TriangleSpec(
        min_n=1,
        first_row=(0, 1),
        k_max=lambda n: (n + 1) // 2,
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: 2 * n - 4 * k + 4,
        coeff_c=lambda n, k: 0,
    ),
    "b": _TriangleSpec(
        min_n=0,
        first_row=(1,),
        k_max=lambda n: n // 2,
        coeff_a=lambda n, k: 1 + 2 * k,
        coeff_b=lambda n, k: 4 * (n - 2 * k + 1),
        coeff_c=lambda n, k: 0,
    ),
    "F": _TriangleSpec(
        min_n=0,
        first_row=(1,),
        k_max=lambda n: max(2 * n - 1, 0),
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: 1,
        coeff_c=lambda n, k: 2 * n - k,
    ),
    "gamma": _TriangleSpec(
        min_n=0,
        first_row=(1,),
        k_max=lambda n: n,
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: 2 * n - 4 * k + 3,
        coeff_c=lambda n, k: 0,
    ),
    "f": _TriangleSpec(
        min_n=0,
        first_row=(1,),
        k_max=lambda n: n,
        coeff_a=lambda n, k: k,
        coeff_b=lambda n, k: 1,
        coeff_c=lambda n, k: 4 * (n - k + 1),
    ),
}

TRIANGLE_FAMILIES = tuple(_TRIANGLES)


def _prev_entry(prev: tuple[Entry, ...], k: int) -> Entry:
    if 0 <= k < len(prev):
        return prev[k]
    return 0


@lru_cache(maxsize=None)
def triangle(name: str, max_n: int) -> Triangle:
    """Compute rows min_n..max_n of the named triangle."""
    if name not in _TRIANGLES:
        raise UnknownFamily(f"unknown triangle family {name!r}")
    spec = _TRIANGLES[name]
    if max_n < spec.min_n:
        raise ValueError(f"family {name!r} starts at row {spec.min_n}")
    rows = [spec.first_row]
    for n in range(spec.min_n + 1, max_n + 1):
        prev = rows[-1]
        row = []
        for k in range(spec.k_max(n) + 1):
            value = (
                spec.coeff_a(n, k) * _prev_entry(prev, k)
                + spec.coeff_b(n, k) * _prev_entry(prev, k - 1)
                + spec.coeff_c(n, k) * _prev_entry(prev, k - 2)
            )
            row.append(value)
        rows.append(tuple(row))
    return Triangle(name, spec.min_n, tuple(rows))


def q_specialize(row: tuple[Entry, ...], q0: Scalar) -> Poly:
    """Substitute q=q0 in an Rq row and assemble sum_k entry * x^k."""
    q0 = as_fraction(q0)
    coeffs = []
    for entry in row:
        if isinstance(entry, Poly):
            coeffs.append(entry.evaluate(q0))
        else:
            coeffs.append(as_fraction(entry))
    return Poly(coeffs)


# ---------------------------------------------------------------------------
# polynomial sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolySeq:
    name: str
    min_n: int
    polys: tuple[Poly, ...]

    @property
    def max_n(self) -> int:
        return self.min_n + len(self.polys) - 1

    def poly(self, n: int) -> Poly:
        if not self.min_n <= n <= self.max_n:
            raise IndexError(f"index {n} not computed (have {self.min_n}..{self.max_n})")
        return self.polys[n - self.min_n]


def _seq_bpoly(max_n: int) -> tuple[int, list[Poly]]:
    polys = [Poly.one(), _ONE_X]
    for n in range(1, max_n):
        b = polys[-1]
        nxt = Poly([1, 1, 2 * n]) * b + 2 * Poly([0, 1, 0, -1]) * b.derivative()
        polys.append(nxt)
    return 0, polys[: max_n + 1]


def _seq_cpoly(max_n: int) -> tuple[int, list[Poly]]:
    polys = [Poly.x()]
    for n in range(1, max_n):
        c = polys[-1]
        nxt = Poly([-1, 3, 2 * n]) * c + 2 * Poly([0, 1, 0, -1]) * c.derivative()
        polys.append(nxt)
    return 1, polys


def _seq_dpoly(max_n: int) -> tuple[int, list[Poly]]:
    polys = [Poly.one(), Poly.zero()]
    for n in range(1, max_n):
        d, dprev = polys[-1], polys[-2]
        nxt = (
            n * Poly([0, 0, 1]) * d
            + Poly([0, 1, 0, -1]) * d.derivative()
            + n * Poly.x() * dprev
        )
        polys.append(nxt)
    return 0, polys[: max_n + 1]


def _seq_gammapoly(max_n: int) -> tuple[int, list[Poly]]:
    polys = [Poly.one()]
    for n in range(0, max_n):
        g = polys[-1]
        nxt = (2 * n + 1) * Poly.x() * g + Poly([0, 1, -4]) * g.derivative()
        polys.append(nxt)
    return 0, polys


def _seq_Fpoly(max_n: int) -> tuple[int, list[Poly]]:
    polys = [Poly.one()]
    for n in range(0, max_n):
        F = polys[-1]
        nxt = Poly([0, 1, 2 * n]) * F + Poly([0, 1, 0, -1]) * F.derivative()
        polys.append(nxt)
    return 0, polys


def eulerian(n: int, kind: str) -> Poly:
    """Type A or B Eulerian polynomial assembled from its gamma expansion."""
    if kind == "A":
        if n < 1:
            raise ValueError("type A defined for n >= 1")
        row = triangle("a", n).row(n)
        return sum(
            (
                int(row[k]) * Poly.from_terms({k: 1}) * _ONE_X ** (n + 1 - 2 * k)
                for k in range(1, len(row))
            ),
            Poly.zero(),
        )
    if kind == "B":
        if n < 1:
            raise ValueError("type B defined for n >= 1")
        row = triangle("b", n).row(n)
        return sum(
            (
                int(row[k]) * Poly.from_terms({k: 1}) * _ONE_X ** (n - 2 * k)
                for k in range(len(row))
            ),
            Poly.zero(),
        )
    raise UnknownFamily(f"eulerian kind must be 'A' or 'B', got {kind!r}")


def _seq_eulerA(max_n: int) -> tuple[int, list[Poly]]:
    return 1, [eulerian(n, "A") for n in range(1, max_n + 1)]


def _seq_eulerB(max_n: int) -> tuple[int, list[Poly]]:
    return 1, [eulerian(n, "B") for n in range(1, max_n + 1)]


_POLYSEQS = {
    "bpoly": _seq_bpoly,
    "cpoly": _seq_cpoly,
    "dpoly": _seq_dpoly,
    "gammapoly": _seq_gammapoly,
    "Fpoly": _seq_Fpoly,
    "eulerA": _seq_eulerA,
    "eulerB": _seq_eulerB,
}

POLY_FAMILIES = tuple(_POLYSEQS)


@lru_cache(maxsize=None)
def polyseq(name: str, max_n: int) -> PolySeq:
    """Compute the named polynomial sequence through index max_n."""
    if name not in _POLYSEQS:
        raise UnknownFamily(f"unknown polynomial family {name!r}")
    min_n, polys = _POLYSEQS[name](max_n)
    if max_n < min_n:
        raise ValueError(f"family {name!r} starts at index {min_n}")
    return PolySeq(name, min_n, tuple(polys))


# ---------------------------------------------------------------------------
# derived assemblies
# ---------------------------------------------------------------------------


def inclusion_exclusion_Rxy(n: int, q0: Scalar) -> MultiPoly:
    """sum_i C(n,i) (q x y - q x)^i R_{n-i}(x; q0), a polynomial in (x, y)."""
    q0 = as_fraction(q0)
    alphabet = ("x", "y")
    tri = triangle("Rq", n)
    total = MultiPoly.zero(alphabet)
    x = MultiPoly.variable(alphabet, "x")
    y = MultiPoly.variable(alphabet, "y")
    step = (y - 1) * x * q0
    for i in range(n + 1):
        rpart = q_specialize(tri.row(n - i), q0)
        total = total + comb(n, i) * (step**i) * MultiPoly.from_poly(
            rpart, "x", alphabet
        )
    return total


# ---------------------------------------------------------------------------
# export formats
# ---------------------------------------------------------------------------


def entry_str(entry: Entry, qvar: str = "q") -> str:
    if isinstance(entry, Poly):
        return entry.to_str(qvar)
    return str(entry)


def export_bfile(tri: Triangle) -> str:
    """OEIS-style b-file: one "n k value" line per entry, row-major."""
    lines = [
        f"# family {tri.name}: rows {tri.min_n}..{tri.max_n}; "
        "line format: n k value; row n lists k = 0..k_max(n)"
    ]
    for n in range(tri.min_n, tri.max_n + 1):
        for k, entry in enumerate(tri.row(n)):
            lines.append(f"{n} {k} {entry_str(entry)}")
    return "\n".join(lines) + "\n"


def export_csv(tri: Triangle) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "value"])
    for n in range(tri.min_n, tri.max_n + 1):
        for k, entry in enumerate(tri.row(n)):
            writer.writerow([n, k, entry_str(entry)])
    return buf.getvalue()


def export_json(tri: Triangle) -> str:
    obj = {
        "family": tri.name,
        "min_n": tri.min_n,
        "max_n": tri.max_n,
        "rows": {
            str(n): [entry_str(e) for e in tri.row(n)]
            for n in range(tri.min_n, tri.max_n + 1)
        },
    }
    return json.dumps(obj, indent=2)
