"""Stable ideals, squarefree matroidal ideals and the Fano matroid."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ExchangeFailure, NotLinearQuotients, NotStable
from .monomial import Monomial, monomials_of_degree
from .presentation import Presentation, presentation_from_generators

FANO_NONBASES = ((1, 2, 3), (1, 4, 7), (1, 5, 6), (2, 4, 6), (2, 5, 7), (3, 4, 5), (3, 6, 7))


@dataclass(frozen=True)
class Matroid:
    ground_size: int
    bases: frozenset

    @property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    def sorted_bases(self) -> list:
        return sorted(tuple(sorted(b)) for b in self.bases)


def validate_matroid(ground_size: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Check the basis exchange axiom by brute force and return the matroid."""
    family = frozenset(frozenset(b) for b in bases)
    if not family:
        raise ValueError("a matroid needs at least one basis")
    sizes = {len(b) for b in family}
    if len(sizes) != 1 or 0 in sizes:
        raise ValueError(f"bases must be nonempty and equicardinal, got sizes {sorted(sizes)}")
    for b in family:
        if not all(1 <= x <= ground_size for x in b):
            raise ValueError(f"basis {sorted(b)} leaves the ground set [1, {ground_size}]")
    for b1 in family:
        for b2 in family:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in family for y in b2 - b1):
                    raise ExchangeFailure(b1, b2, x)
    return Matroid(ground_size, family)


def uniform_matroid(r: int, n: int) -> Matroid:
    return validate_matroid(n, combinations(range(1, n + 1), r))


def graphic_matroid(vertices: int, edges: Sequence[tuple]) -> Matroid:
    """Cycle matroid of a connected graph; ground set = edge positions 1..len(edges)."""

    def spanning(subset):
        parent = list(range(vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in subset:
            u, v = edges[e - 1]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    r = vertices - 1
    bases = [b for b in combinations(range(1, len(edges) + 1), r) if spanning(b)]
    return validate_matroid(len(edges), bases)


def k4_matroid() -> Matroid:
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return graphic_matroid(4, edges)


def fano() -> Matroid:
    nonbases = {frozenset(b) for b in FANO_NONBASES}
    bases = [b for b in combinations(range(1, 8), 3) if frozenset(b) not in nonbases]
    return Matroid(7, frozenset(frozenset(b) for b in bases))


def matroid_ideal_generators(m: Matroid) -> list:
    return [Monomial.from_support(m.ground_size, b) for b in m.sorted_bases()]


def matroidal_presentation(m: Matroid, tiebreak: str = "revlex") -> Presentation:
    """Squarefree basis monomials in decreasing lex order, checked for linear quotients."""
    gens = matroid_ideal_generators(m)
    try:
        return presentation_from_generators(m.ground_size, gens, order="declex", tiebreak=tiebreak)
    except NotLinearQuotients as exc:
        raise RuntimeError(f"lex order of a valid matroid failed linear quotients: {exc}") from exc


def is_stable(n: int, generators: Sequence[Monomial]) -> tuple | None:
    """Return a witness ``(u, j)`` of non-stability, or None."""
    for u in generators:
        top = u.max_var()
        for j in range(1, top):
            moved = u.div_var(top).times_var(j)
            if not any(g.divides(moved) for g in generators):
                return (u, j)
    return None


def validate_stable(n: int, generators: Sequence[Monomial], tiebreak: str = "revlex") -> Presentation:
    witness = is_stable(n, generators)
    if witness is not None:
        raise NotStable(*witness)
    try:
        return presentation_from_generators(n, list(generators), order="declex", tiebreak=tiebreak)
    except NotLinearQuotients as exc:
        raise RuntimeError(f"stable ideal failed linear quotients in declex order: {exc}") from exc


def minimalize(monomials: Iterable[Monomial]) -> list:
    pool = sorted(set(monomials), key=lambda m: (m.degree, tuple(m)))
    kept = []
    for m in pool:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return kept


def stable_closure(seeds: Iterable[Monomial]) -> list:
    """Minimal generators of the smallest stable ideal containing ``seeds``."""
    seen = set(seeds)
    todo = list(seen)
    while todo:
        u = todo.pop()
        top = u.max_var()
        for j in range(1, top):
            moved = u.div_var(top).times_var(j)
            if moved not in seen:
                seen.add(moved)
                todo.append(moved)
    return minimalize(seen)


def random_stable_ideal(
    rng: random.Random, n: int, max_degree: int = 4, seeds: int = 3
) -> list:
    """Stable-move closure of a few random monomials of degree 1..max_degree."""
    picks = []
    for _ in range(rng.randint(1, seeds)):
        d = rng.randint(1, max_degree)
        picks.append(rng.choice(list(monomials_of_degree(n, d))))
    return stable_closure(picks)
