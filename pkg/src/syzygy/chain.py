"""Basis labels and sparse integer chains.

A :class:`Chain` maps ``(monomial, label)`` keys to nonzero integers, where the
label is a :class:`BasisElement` ``e_I g_j`` of the minimal resolution or an
:class:`AmbientElement` ``e_I x^a g_j`` of the big Koszul-type complex.  The
monomial is the ring coefficient; over the field it also indexes the k-basis
element ``x^a e_I g_j``, which is how the homotopy code reads it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .monomial import Monomial, format_monomial


class BasisElement(NamedTuple):
    I: tuple
    j: int

    @property
    def degree(self) -> int:
        """Homological degree in the resolution G (generators sit in degree 0)."""
        return len(self.I)


# the ring summand S of the augmented complex; label for the unit 1
UNIT = BasisElement((), -1)


def hdeg(b: BasisElement) -> int:
    """Degree in the augmented complex: S in 0, g_j in 1, e_I g_j in |I| + 1."""
    return 0 if b.j < 0 else len(b.I) + 1


class AmbientElement(NamedTuple):
    I: tuple
    cofactor: Monomial
    j: int


def sgn(i: int, I: Iterable[int]) -> int:
    """(-1) ** #{k in I : k < i}."""
    return -1 if sum(1 for k in I if k < i) % 2 else 1


def insert(I: tuple, i: int) -> tuple:
    return tuple(sorted(I + (i,)))


def remove(I: tuple, i: int) -> tuple:
    return tuple(k for k in I if k != i)


class Chain(dict):
    """Finite sum of ``coeff * monomial * label`` with exact cancellation."""

    __slots__ = ()

    def add(self, mono: Monomial, label, coeff: int = 1) -> None:
        if not coeff:
            return
        key = (mono, label)
        value = self.get(key, 0) + coeff
        if value:
            self[key] = value
        else:
            del self[key]

    def iadd(self, other: "Chain", scale: int = 1, mono: Monomial | None = None) -> "Chain":
        """In place ``self += scale * mono * other``."""
        for (m, label), c in other.items():
            self.add(m if mono is None else mono * m, label, scale * c)
        return self

    def __add__(self, other: "Chain") -> "Chain":
        return Chain(self).iadd(other)

    def __sub__(self, other: "Chain") -> "Chain":
        return Chain(self).iadd(other, -1)

    def __neg__(self) -> "Chain":
        return Chain({k: -c for k, c in self.items()})

    def scaled(self, coeff: int = 1, mono: Monomial | None = None) -> "Chain":
        return Chain().iadd(self, coeff, mono)

    def terms(self) -> Iterator[tuple]:
        for (m, label), c in self.items():
            yield c, m, label

    def labels(self) -> set:
        return {label for _, label in self}

    def __repr__(self) -> str:
        return f"Chain({dict.__repr__(self)})"


def single(mono: Monomial, label, coeff: int = 1) -> Chain:
    out = Chain()
    out.add(mono, label, coeff)
    return out


def multidegree(p, mono: Monomial, label) -> tuple:
    """N^n-degree of ``mono * label`` for a BasisElement, AmbientElement or UNIT."""
    exps = list(mono)
    if label.j >= 0:
        for k, e in enumerate(p.generators[label.j]):
            exps[k] += e
    if isinstance(label, AmbientElement):
        for k, e in enumerate(label.cofactor):
            exps[k] += e
    for i in label.I:
        exps[i - 1] += 1
    return tuple(exps)


def homogeneous_degree(p, chain: Chain) -> tuple | None:
    """The common multidegree of all terms; raises if the chain mixes degrees."""
    degrees = {multidegree(p, m, label) for m, label in chain}
    if len(degrees) > 1:
        raise ValueError(f"chain is not multidegree-homogeneous: {sorted(degrees)}")
    return next(iter(degrees), None)


def format_label(p, label) -> str:
    if label.j < 0:
        return "1"
    g = p.generator_label(label.j)
    if isinstance(label, AmbientElement):
        g = (format_monomial(label.cofactor) + " " + g) if not label.cofactor.is_one() else g
    if not label.I:
        return g
    return "e_" + "".join(map(str, label.I)) + " " + g if p.n <= 9 else f"e_{list(label.I)} {g}"


def format_chain(p, chain: Chain) -> str:
    if not chain:
        return "0"
    parts = []
    for (m, label), c in sorted(chain.items(), key=lambda kv: (kv[0][1].I, kv[0][1].j, tuple(kv[0][0]))):
        body = format_label(p, label)
        if not m.is_one():
            body = f"{format_monomial(m)}*{body}" if label.j >= 0 else format_monomial(m)
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(f"{sign} {mag}{body}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
