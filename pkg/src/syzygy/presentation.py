"""Ordered generator lists with linear quotients.

A :class:`Presentation` stores monomial generators ``m_0, ..., m_{r-1}`` in
quotient order (earliest first) together with the critical set of each
generator: the variables generating the colon ideal ``(m_0..m_{i-1}) : m_i``.
Generator indices are 0-based; variable indices are 1-based.

Every monomial ``w`` of the ideal has exactly one irreducible representation
``w = x^d * m_k`` with ``supp(d)`` disjoint from ``crit(m_k)``; that pair is
the normal form used throughout the resolution and homotopy code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .errors import InternalNonUnique, NotCritMonotone, NotInIdeal, NotLinearQuotients, NotMinimal
from .monomial import (
    Monomial,
    format_monomial,
    gcd,
    lex_key,
    monomials_of_degree,
    revlex_key,
)

TIEBREAKS = ("lex", "revlex")


@dataclass(frozen=True)
class GeneratorOrderTag:
    """Position-over-term order on the free module.

    ``ordering[k]`` is the index, in the caller's original list, of the
    generator placed at position ``k``.  ``monomial_tiebreak`` compares
    cofactors on the same generator.
    """

    ordering: tuple
    monomial_tiebreak: str = "revlex"

    def __post_init__(self):
        if sorted(self.ordering) != list(range(len(self.ordering))):
            raise ValueError(f"ordering {self.ordering} is not a permutation")
        if self.monomial_tiebreak not in TIEBREAKS:
            raise ValueError(f"unknown tiebreak {self.monomial_tiebreak!r}")


@dataclass(frozen=True)
class NormalTerm:
    cofactor: Monomial
    generator_index: int

    def __iter__(self):
        yield self.cofactor
        yield self.generator_index


@dataclass(frozen=True, eq=False)
class Presentation:
    n: int
    generators: tuple
    crit: tuple
    order: GeneratorOrderTag = field(default=None)

    def __post_init__(self):
        if self.order is None:
            object.__setattr__(
                self, "order", GeneratorOrderTag(tuple(range(len(self.generators))))
            )

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.n, self.generators, self.crit) == (other.n, other.generators, other.crit)

    def __hash__(self):
        return hash((self.n, self.generators, self.crit))

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> tuple:
        return tuple(m.degree for m in self.generators)

    def ncrit(self, j: int) -> frozenset:
        return frozenset(range(1, self.n + 1)) - self.crit[j]

    @cached_property
    def _nf_cache(self) -> dict:
        return {}

    @cached_property
    def _step_table(self) -> dict:
        table = {}
        for j in range(len(self.generators)):
            for i in range(1, self.n + 1):
                table[i, j] = normal_form(self, self.generators[j].times_var(i))
        return table

    def nf(self, w: Monomial) -> NormalTerm:
        cache = self._nf_cache
        hit = cache.get(w)
        if hit is None:
            hit = cache[w] = normal_form(self, w)
        return hit

    def step(self, i: int, j: int) -> NormalTerm:
        return self._step_table[i, j]

    def contains(self, w: Monomial) -> bool:
        return any(m.divides(w) for m in self.generators)

    def earliest_divisor(self, w: Monomial) -> int | None:
        for k, m in enumerate(self.generators):
            if m.divides(w):
                return k
        return None

    @cached_property
    def crit_monotone_witness(self):
        for j in range(len(self.generators)):
            for i in sorted(self.crit[j]):
                target = self.step(i, j).generator_index
                if not self.crit[target] <= self.crit[j]:
                    return (j, i)
        return None

    def generator_label(self, j: int) -> str:
        m = self.generators[j]
        if m.is_squarefree() and self.n <= 9:
            return "g_" + "".join(str(i) for i in sorted(m.support))
        return f"g[{format_monomial(m)}]"

    def describe(self) -> str:
        rows = []
        for j, m in enumerate(self.generators):
            rows.append(f"{j:3d}  {format_monomial(m):<20} crit={sorted(self.crit[j])}")
        return "\n".join(rows)


def _check_minimal(generators: Sequence[Monomial]) -> None:
    for a in range(len(generators)):
        for b in range(len(generators)):
            if a != b and generators[a].divides(generators[b]):
                raise NotMinimal(a, b)


def colon_crit(generators: Sequence[Monomial], i: int) -> frozenset:
    """Variables generating ``(m_0..m_{i-1}) : m_i``; raises if not variable-generated."""
    mi = generators[i]
    cofactors = [(k, generators[k] / gcd(generators[k], mi)) for k in range(i)]
    linear = frozenset(q.max_var() for _, q in cofactors if q.degree == 1)
    for k, q in cofactors:
        if not any(q[t - 1] for t in linear):
            raise NotLinearQuotients(i, k)
    return linear


def verify_linear_quotients(
    n: int,
    ordered_generators: Iterable[Monomial],
    tiebreak: str = "revlex",
    ordering: Sequence[int] | None = None,
) -> Presentation:
    gens = tuple(ordered_generators)
    if not gens:
        raise ValueError("empty generator list")
    for m in gens:
        if len(m) != n:
            raise ValueError(f"generator {m} does not live in {n} variables")
    if len(set(gens)) != len(gens):
        raise ValueError("generators are not pairwise distinct")
    _check_minimal(gens)
    crit = tuple(colon_crit(gens, i) for i in range(len(gens)))
    if ordering is None:
        ordering = tuple(range(len(gens)))
    return Presentation(n, gens, crit, GeneratorOrderTag(tuple(ordering), tiebreak))


def normal_form(p: Presentation, w: Monomial) -> NormalTerm:
    """Unique ``(x^d, k)`` with ``x^d m_k = w`` and ``supp d`` inside ``ncrit(g_k)``."""
    found = None
    for k, m in enumerate(p.generators):
        if not m.divides(w):
            continue
        cofactor = w / m
        if cofactor.support & p.crit[k]:
            continue
        if found is not None:
            raise InternalNonUnique(
                f"{format_monomial(w)} is irreducible on generators {found.generator_index} and {k}"
            )
        found = NormalTerm(cofactor, k)
    if found is None:
        raise NotInIdeal(format_monomial(w))
    return found


def nf_step(p: Presentation, i: int, j: int) -> NormalTerm:
    return p.step(i, j)


def crit_monotone_witness(p: Presentation):
    """First ``(j, i)`` with ``i`` in crit(g_j) and crit(nf(x_i g_j)) not inside crit(g_j)."""
    return p.crit_monotone_witness


def is_crit_monotone(p: Presentation) -> bool:
    return p.crit_monotone_witness is None


def require_crit_monotone(p: Presentation) -> None:
    witness = p.crit_monotone_witness
    if witness is not None:
        raise NotCritMonotone(*witness)


def declex_order(generators: Sequence[Monomial]) -> list:
    """Indices sorting generators by decreasing lex (x1 > x2 > ...)."""
    return sorted(range(len(generators)), key=lambda k: lex_key(generators[k]), reverse=True)


def presentation_from_generators(
    n: int, generators: Sequence[Monomial], order: str = "given", tiebreak: str = "revlex"
) -> Presentation:
    if order == "given":
        ordering = list(range(len(generators)))
    elif order == "declex":
        ordering = declex_order(generators)
    else:
        raise ValueError(f"unknown generator order {order!r}")
    return verify_linear_quotients(
        n, [generators[k] for k in ordering], tiebreak=tiebreak, ordering=ordering
    )


def component_presentation(p: Presentation, d: int) -> Presentation:
    """Presentation of the ideal generated by the degree-``d`` part of ``p``.

    Each generator is the normal form ``x^b m_j`` of a degree-``d`` monomial;
    generators are ordered by position ``j``, then the monomial tiebreak on
    ``b``, then revlex on ``b``.  Its critical set is
    ``crit(g_j) | {a : a > min supp b}``.  The result is re-checked against
    the colon ideals, so a wrong ordering raises instead of returning.
    """
    entries = []
    for j, m in enumerate(p.generators):
        if m.degree > d:
            continue
        allowed = p.ncrit(j)
        for b in monomials_of_degree(p.n, d - m.degree):
            if b.support <= allowed:
                entries.append((j, b))

    tiebreak = lex_key if p.order.monomial_tiebreak == "lex" else revlex_key
    entries.sort(key=lambda e: (e[0], tiebreak(e[1]), revlex_key(e[1])))

    gens, crit = [], []
    for j, b in entries:
        gens.append(b * p.generators[j])
        low = b.min_var()
        extra = frozenset() if low is None else frozenset(range(low + 1, p.n + 1))
        crit.append(p.crit[j] | extra)

    checked = verify_linear_quotients(p.n, gens, tiebreak=p.order.monomial_tiebreak)
    if checked.crit != tuple(crit):
        bad = next(k for k in range(len(gens)) if checked.crit[k] != crit[k])
        raise RuntimeError(
            f"component generator {bad}: colon ideal gives crit {sorted(checked.crit[bad])}, "
            f"irreducible-term rule gives {sorted(crit[bad])}"
        )
    return checked


def restrict(p: Presentation, variables: Iterable[int], order: str = "given") -> Presentation:
    """Generators supported on ``variables``, renumbered to x1..xk in increasing order."""
    keep = sorted(set(variables))
    if not keep or keep[0] < 1 or keep[-1] > p.n:
        raise ValueError(f"restriction {keep} outside x1..x{p.n}")
    kept = [m for m in p.generators if m.support <= set(keep)]
    if not kept:
        raise ValueError(f"no generator is supported on {keep}")
    gens = [Monomial(m[i - 1] for i in keep) for m in kept]
    return presentation_from_generators(len(keep), gens, order=order, tiebreak=p.order.monomial_tiebreak)


def find_linear_quotient_order(n: int, generators: Sequence[Monomial]) -> Presentation | None:
    """Brute-force search for any linear-quotients order (tiny inputs only)."""
    for perm in permutations(range(len(generators))):
        try:
            return verify_linear_quotients(n, [generators[k] for k in perm], ordering=perm)
        except NotLinearQuotients:
            continue
    return None
