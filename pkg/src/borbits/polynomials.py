"""Sparse multivariate polynomials in the lower-triangular coordinates x(i,j), i > j."""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

Var = tuple[int, int]
Monomial = tuple[Var, ...]  # sorted, with repetition

_TERM_RE = re.compile(r"^\s*([+-])?\s*([^+-]+?)\s*(?=[+-]|$)")
_FACTOR_RE = re.compile(r"^x\((\d+),(\d+)\)(?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def _check_var(v: Var) -> Var:
    i, j = v
    if not (isinstance(i, int) and isinstance(j, int)) or i <= j or j < 1:
        raise ValueError(f"variable x({i},{j}) must have i > j >= 1")
    return (i, j)


def _mono_key(m: Monomial) -> tuple:
    return (len(m), m)


class SymPolynomial:
    """Exact polynomial; a dict from sorted variable tuples to nonzero Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = tuple(sorted(_check_var(v) for v in mono))
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def var(cls, i: int, j: int) -> "SymPolynomial":
        return cls({((i, j),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "SymPolynomial":
        return cls({(): Fraction(c)})

    @classmethod
    def zero(cls) -> "SymPolynomial":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymPolynomial.const(other)
        return isinstance(other, SymPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SymPolynomial") -> "SymPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SymPolynomial(out)

    def __neg__(self) -> "SymPolynomial":
        return SymPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SymPolynomial") -> "SymPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SymPolynomial":
        if isinstance(other, (int, Fraction)):
            return SymPolynomial({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return SymPolynomial(out)

    __rmul__ = __mul__

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v in m}

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def normalize(self) -> "SymPolynomial":
        """Scale to coprime integer coefficients with a positive leading coefficient."""
        if not self.terms:
            return self
        denoms = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.terms.values()))
        ints = [int(c * denoms) for c in self.terms.values()]
        g = reduce(gcd, (abs(x) for x in ints))
        scale = Fraction(denoms, g)
        if self.sorted_terms()[0][1] < 0:
            scale = -scale
        return self * scale

    def substitute(self, values: Mapping[Var, Fraction]) -> "SymPolynomial":
        """Replace some variables by constants."""
        out = SymPolynomial()
        for mono, c in self.terms.items():
            coeff = Fraction(c)
            rest = []
            for v in mono:
                if v in values:
                    coeff *= values[v]
                else:
                    rest.append(v)
            if coeff:
                out = out + SymPolynomial({tuple(rest): coeff})
        return out

    def __repr__(self) -> str:
        return f"SymPolynomial({serialize(self)!r})"

    def __str__(self) -> str:
        return serialize(self)


def _format_monomial(m: Monomial) -> str:
    parts = []
    k = 0
    while k < len(m):
        e = 1
        while k + e < len(m) and m[k + e] == m[k]:
            e += 1
        i, j = m[k]
        parts.append(f"x({i},{j})" + (f"^{e}" if e > 1 else ""))
        k += e
    return "*".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def serialize(p: SymPolynomial) -> str:
    """Canonical text, e.g. ``x(4,2)*x(5,3) - x(4,3)*x(5,2)``; the zero polynomial is ``0``."""
    if not p.terms:
        return "0"
    out = []
    for idx, (mono, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = _format_monomial(mono)
        else:
            body = f"{_format_coeff(a)}*{_format_monomial(mono)}"
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def parse(text: str) -> SymPolynomial:
    """Inverse of :func:`serialize`; also accepts extra whitespace and any term order."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return SymPolynomial()
    terms: dict[Monomial, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s[pos:])
        if not m or (m.group(1) is None and not first):
            raise ValueError(f"malformed polynomial near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff, mono = _parse_term(m.group(2).replace(" ", ""), text)
        terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
        pos += m.end()
        first = False
    return SymPolynomial(terms)


def _parse_term(body: str, text: str) -> tuple[Fraction, Monomial]:
    if not body:
        raise ValueError(f"malformed polynomial {text!r}")
    coeff = Fraction(1)
    vars_: list[Var] = []
    for k, factor in enumerate(body.split("*")):
        if k == 0 and _COEFF_RE.match(factor):
            coeff = Fraction(factor)
            if coeff == 0:
                raise ValueError(f"zero coefficient in {text!r}")
            continue
        fm = _FACTOR_RE.match(factor)
        if not fm:
            raise ValueError(f"malformed factor {factor!r} in {text!r}")
        i, j, e = int(fm.group(1)), int(fm.group(2)), int(fm.group(3) or 1)
        if e < 1:
            raise ValueError(f"bad exponent in {text!r}")
        vars_.extend([_check_var((i, j))] * e)
    return coeff, tuple(sorted(vars_))


def evaluate(p: SymPolynomial, u: Sequence[Sequence]) -> Fraction:
    """Value at ``u`` under the pairing ``x(i,j) <- u[j][i]`` (1-based)."""
    n = len(u)
    total = Fraction(0)
    for mono, c in p.terms.items():
        val = Fraction(c)
        for i, j in mono:
            if i > n:
                raise ValueError(f"x({i},{j}) is out of range for a {n}x{n} matrix")
            val *= Fraction(u[j - 1][i - 1])
            if not val:
                break
        total += val
    return total


def determinant(mat: Sequence[Sequence[SymPolynomial]]) -> SymPolynomial:
    """Laplace expansion along the first row, memoized on column subsets."""
    k = len(mat)
    if k == 0:
        return SymPolynomial.const(1)
    memo: dict[tuple[int, tuple[int, ...]], SymPolynomial] = {}

    def minor(row: int, cols: tuple[int, ...]) -> SymPolynomial:
        if row == k:
            return SymPolynomial.const(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = SymPolynomial()
        for pos, c in enumerate(cols):
            entry = mat[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub:
                term = entry * sub
                acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(k)))


def reduce_modulo_linear(p: SymPolynomial, linear_vars: Iterable[Var]) -> SymPolynomial:
    """Set the given variables to zero (reduction modulo single-variable generators)."""
    return p.substitute({v: Fraction(0) for v in linear_vars})
