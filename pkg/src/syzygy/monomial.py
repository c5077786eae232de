"""Exact monomials over a fixed variable set x1, ..., xn.

A monomial is an immutable exponent vector.  Variable indices are 1-based in
every public function; position ``i - 1`` of the vector holds the exponent of
``x<i>``.  The lexicographic order puts x1 > x2 > ... > xn.
"""

from __future__ import annotations

import re
from itertools import product
from typing import Iterable, Iterator

from .errors import MonomialError

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class Monomial(tuple):
    """Exponent vector ``(a1, ..., an)`` standing for x1^a1 * ... * xn^an."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise MonomialError("a monomial needs at least one variable slot")
        if any(e < 0 for e in exps):
            raise MonomialError(f"negative exponent in {exps}")
        return tuple.__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return _mk((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> "Monomial":
        if not 1 <= i <= n:
            raise MonomialError(f"variable x{i} outside x1..x{n}")
        return _mk(tuple(1 if k == i - 1 else 0 for k in range(n)))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        exps = [0] * n
        for i in support:
            if not 1 <= i <= n:
                raise MonomialError(f"variable x{i} outside x1..x{n}")
            exps[i - 1] += 1
        return _mk(tuple(exps))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> frozenset:
        return frozenset(i + 1 for i, e in enumerate(self) if e)

    def is_one(self) -> bool:
        return not any(self)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def max_var(self) -> int:
        """Largest variable index in the support; 0 for the constant monomial."""
        for i in range(len(self) - 1, -1, -1):
            if self[i]:
                return i + 1
        return 0

    def min_var(self) -> int | None:
        for i, e in enumerate(self):
            if e:
                return i + 1
        return None

    def divides(self, other: "Monomial") -> bool:
        _check_same(self, other)
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        _check_same(self, other)
        return _mk(tuple(a + b for a, b in zip(self, other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return divide(self, other)

    def times_var(self, i: int) -> "Monomial":
        exps = list(self)
        exps[i - 1] += 1
        return _mk(tuple(exps))

    def div_var(self, i: int) -> "Monomial":
        if not self[i - 1]:
            raise MonomialError(f"x{i} does not divide {self}")
        exps = list(self)
        exps[i - 1] -= 1
        return _mk(tuple(exps))

    # tuple defines these as concatenation/repetition; make misuse loud
    def __add__(self, other):
        raise TypeError("use * to multiply monomials")

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self) -> str:
        return format_monomial(self)


def _mk(exps: tuple) -> Monomial:
    # trusted constructor, skips validation
    return tuple.__new__(Monomial, exps)


def _check_same(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise MonomialError(f"variable sets differ: {len(a)} vs {len(b)} variables")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return _mk(tuple(max(x, y) for x, y in zip(a, b)))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return _mk(tuple(min(x, y) for x, y in zip(a, b)))


def divide(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient ``a / b``; raises if ``b`` does not divide ``a``."""
    _check_same(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise MonomialError(f"{format_monomial(b)} does not divide {format_monomial(a)}")
    return _mk(out)


def compare_lex(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is lex-smaller, equal or lex-larger (x1 > x2 > ...)."""
    _check_same(a, b)
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def compare_revlex(a: Monomial, b: Monomial) -> int:
    """Reverse lexicographic comparison on monomials of any degrees.

    The monomial with the smaller exponent on the last differing variable is
    the larger one.
    """
    _check_same(a, b)
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def lex_key(m: Monomial) -> tuple:
    return tuple(m)


def revlex_key(m: Monomial) -> tuple:
    return tuple(-e for e in reversed(m))


def format_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x1*x2^2*x4`` (or ``1``) into a monomial on ``n`` variables."""
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text == "1":
        return _mk(tuple(exps))
    if not text:
        raise MonomialError("empty monomial string")
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise MonomialError(f"cannot parse factor {factor!r} in {text!r}")
        i = int(match.group(1))
        e = int(match.group(2)) if match.group(2) is not None else 1
        if not 1 <= i <= n:
            raise MonomialError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += e
    return _mk(tuple(exps))


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All monomials of total degree ``d`` in ``n`` variables, lex-decreasing."""
    if n == 1:
        yield _mk((d,))
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield _mk((first,) + tuple(rest))


def monomials_below(bound: Monomial) -> Iterator[Monomial]:
    """All monomials dividing ``bound``."""
    for exps in product(*(range(e + 1) for e in bound)):
        yield _mk(exps)
