"""Laurent polynomials in one formal parameter ``k`` and matrices over them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Laurent:
    """Finite sum of ``c * k^d`` with rational ``c`` and integer ``d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        self.coeffs = {d: Fraction(c) for d, c in (coeffs or {}).items() if c}

    @classmethod
    def const(cls, c) -> "Laurent":
        return cls({0: Fraction(c)})

    @classmethod
    def monomial(cls, c, d: int) -> "Laurent":
        return cls({d: Fraction(c)})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Laurent):
            other = Laurent.const(other)
        return self.coeffs == other.coeffs

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, Fraction(0)) + c
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: dict[int, Fraction] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, Fraction(0)) + c1 * c2
        return Laurent(out)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def inverse(self) -> "Laurent":
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit of the Laurent ring")
        (d, c), = self.coeffs.items()
        return Laurent({-d: 1 / c})

    def max_degree(self) -> int | None:
        return max(self.coeffs, default=None)

    def coefficient(self, d: int) -> Fraction:
        return self.coeffs.get(d, Fraction(0))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*k^{d}" for d, c in sorted(self.coeffs.items()))


LaurentMatrix = list[list[Laurent]]


def lift(mat: Sequence[Sequence]) -> LaurentMatrix:
    return [[Laurent.const(x) for x in row] for row in mat]


def identity(n: int) -> LaurentMatrix:
    return [[Laurent.const(1 if a == b else 0) for b in range(n)] for a in range(n)]


def matmul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    n, m = len(a), len(b[0])
    out = []
    for r in range(n):
        row = []
        for c in range(m):
            acc = Laurent()
            for t, x in enumerate(a[r]):
                if x and b[t][c]:
                    acc = acc + x * b[t][c]
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True)
class Diag:
    """Identity with ``a`` in diagonal slot ``i`` (1-based)."""

    i: int
    a: Laurent

    def __post_init__(self):
        if not self.a.is_monomial():
            raise ValueError("diagonal factor needs a Laurent monomial")

    def inverse(self) -> "Diag":
        return Diag(self.i, self.a.inverse())

    def matrix(self, n: int) -> LaurentMatrix:
        m = identity(n)
        m[self.i - 1][self.i - 1] = self.a
        return m


@dataclass(frozen=True)
class Unit:
    """Identity plus ``a`` in off-diagonal slot ``(i, j)`` (1-based)."""

    i: int
    j: int
    a: Laurent

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("unit factor needs i != j")

    def inverse(self) -> "Unit":
        return Unit(self.i, self.j, -self.a)

    def matrix(self, n: int) -> LaurentMatrix:
        m = identity(n)
        m[self.i - 1][self.j - 1] = self.a
        return m


Factor = Diag | Unit


def product(factors: Sequence[Factor], n: int) -> LaurentMatrix:
    out = identity(n)
    for f in factors:
        out = matmul(out, f.matrix(n))
    return out


def inverse_product(factors: Sequence[Factor], n: int) -> LaurentMatrix:
    return product([f.inverse() for f in reversed(factors)], n)
