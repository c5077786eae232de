"""The minimal free resolution G of an ideal with linear quotients.

G has S-basis ``e_I g_j`` with ``I`` inside ``crit(g_j)``.  Two routes give
its differential:

* ``ek_differential``: the Eliahou-Kervaire type formula, valid for
  crit-monotone presentations;
* ``generic_differential``: Morse reduction of the ambient complex
  F_p = S (x) Lambda^p V (x) I, i.e. ``pi(d_F - d_F phi d_F)`` with the
  splitting homotopy ``phi`` of the matching that pairs
  ``e_I x^a g_j`` with ``e_{I - i} x_i x^a g_j`` for
  ``i = max((I | supp a) & ncrit(g_j))``.

Both produce a :class:`Chain` over :class:`BasisElement` with monomial ring
coefficients.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .chain import (
    AmbientElement,
    BasisElement,
    Chain,
    homogeneous_degree,
    insert,
    multidegree,
    remove,
    sgn,
)
from .errors import RecursionLimitExceeded
from .monomial import Monomial
from .presentation import Presentation, require_crit_monotone

MODES = ("ek", "generic")


def enumerate_basis(p: Presentation) -> list:
    """Basis elements grouped by homological degree ``|I|``."""
    top = max((len(c) for c in p.crit), default=0)
    levels = [[] for _ in range(top + 1)]
    for j, crit in enumerate(p.crit):
        ordered = sorted(crit)
        for size in range(len(ordered) + 1):
            for I in combinations(ordered, size):
                levels[size].append(BasisElement(I, j))
    return levels


def ek_differential(p: Presentation, b: BasisElement) -> Chain:
    """sum_k (-1)^(k-1) (d^L_k - d^R_k) on ``e_I g_j``; zero on generators."""
    require_crit_monotone(p)
    out = Chain()
    one = Monomial.one(p.n)
    for pos, i in enumerate(b.I):
        sign = -1 if pos % 2 else 1
        rest = b.I[:pos] + b.I[pos + 1:]
        out.add(one.times_var(i), BasisElement(rest, b.j), sign)
        cofactor, k = p.step(i, b.j)
        if p.crit[k].issuperset(rest):
            out.add(cofactor, BasisElement(rest, k), -sign)
    return out


class AmbientComplex:
    """The ambient complex F with its Morse matching and splitting homotopy.

    ``phi`` values are memoized per ambient vertex.  Recursion is bounded by
    total degree * n * #generators; exceeding it (or revisiting a vertex that
    is still being expanded) means the matching is not acyclic for this input.
    """

    def __init__(self, p: Presentation):
        self.p = p
        self.one = Monomial.one(p.n)
        self._ncrit = [p.ncrit(j) for j in range(len(p))]
        self._phi_memo: dict = {}
        self._active: set = set()
        top_degree = max(p.degrees) + p.n + 2
        self.depth_limit = max(64, top_degree * p.n * len(p))

    def differential(self, chain: Chain) -> Chain:
        """d(e_I m) = sum_i sgn(i, I) (x_i e_{I-i} m - e_{I-i} nf(x_i m))."""
        p = self.p
        out = Chain()
        for (s, v), c in chain.items():
            for i in v.I:
                sign = sgn(i, v.I) * c
                rest = remove(v.I, i)
                out.add(s.times_var(i), AmbientElement(rest, v.cofactor, v.j), sign)
                cofactor, k = p.nf(v.cofactor * p.generators[v.j].times_var(i))
                out.add(s, AmbientElement(rest, cofactor, k), -sign)
        return out

    def matched_up(self, v: AmbientElement) -> bool:
        top = v.cofactor.max_var()
        if not top:
            return False
        ncrit = self._ncrit[v.j]
        return top > max((i for i in v.I if i in ncrit), default=0)

    def phi0(self, v: AmbientElement) -> Chain:
        """Inverse of the matched component of d, applied to vertex ``v``."""
        if not self.matched_up(v):
            return Chain()
        top = v.cofactor.max_var()
        partner = AmbientElement(insert(v.I, top), v.cofactor.div_var(top), v.j)
        # d(partner) contains -sgn(top, I | top) * v
        out = Chain()
        out.add(self.one, partner, -sgn(top, partner.I))
        return out

    def phi_vertex(self, v: AmbientElement, depth: int = 0) -> Chain:
        hit = self._phi_memo.get(v)
        if hit is not None:
            return hit
        if not self.matched_up(v):
            return Chain()
        if depth > self.depth_limit or v in self._active:
            raise RecursionLimitExceeded(f"phi recursion did not terminate at {v}")
        self._active.add(v)
        try:
            up = self.phi0(v)
            rest = self.differential(up)
            rest.add(self.one, v, -1)
            out = Chain(up)
            for (s, w), c in rest.items():
                out.iadd(self.phi_vertex(w, depth + 1), -c, s)
        finally:
            self._active.discard(v)
        self._phi_memo[v] = out
        return out

    def phi(self, chain: Chain) -> Chain:
        out = Chain()
        for (s, v), c in chain.items():
            out.iadd(self.phi_vertex(v), c, s)
        return out

    def project(self, chain: Chain) -> Chain:
        """pi: keep the unmatched vertices e_I g_j (no cofactor, I inside crit)."""
        crit = self.p.crit
        out = Chain()
        for (s, v), c in chain.items():
            if v.cofactor.is_one() and crit[v.j].issuperset(v.I):
                out.add(s, BasisElement(v.I, v.j), c)
        return out

    def lift(self, b: BasisElement) -> Chain:
        out = Chain()
        out.add(self.one, AmbientElement(b.I, self.one, b.j))
        return out

    def reduced_differential(self, b: BasisElement) -> Chain:
        dx = self.differential(self.lift(b))
        return self.project(dx - self.differential(self.phi(dx)))


def _ambient(p: Presentation) -> AmbientComplex:
    cache = p.__dict__.setdefault("_ambient_complex", None)
    if cache is None:
        cache = p.__dict__["_ambient_complex"] = AmbientComplex(p)
    return cache


def phi(p: Presentation, chain: Chain) -> Chain:
    """Splitting homotopy on an ambient chain (keys ``(s, AmbientElement)``)."""
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    try:
        return _ambient(p).phi(chain)
    finally:
        sys.setrecursionlimit(limit)


def generic_differential(p: Presentation, b: BasisElement) -> Chain:
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    try:
        return _ambient(p).reduced_differential(b)
    finally:
        sys.setrecursionlimit(limit)


@dataclass
class Resolution:
    presentation: Presentation
    basis: list
    differential: dict
    mode: str = "ek"
    checks: dict = field(default_factory=dict)

    @property
    def length(self) -> int:
        return len(self.basis) - 1

    def d(self, chain: Chain) -> Chain:
        """S-linear differential of G applied to a chain (generators map to 0)."""
        out = Chain()
        for (m, b), c in chain.items():
            image = self.differential.get(b)
            if image:
                out.iadd(image, c, m)
        return out

    def elements(self):
        for level in self.basis:
            yield from level


def d_squared_witness(r: Resolution):
    for b in r.elements():
        if b.degree >= 2 and r.d(r.differential[b]):
            return b
    return None


def minimality_witness(r: Resolution):
    for b, image in r.differential.items():
        for (m, _), _c in image.items():
            if m.is_one():
                return b
    return None


def homogeneity_witness(r: Resolution):
    p = r.presentation
    for b, image in r.differential.items():
        if not image:
            continue
        target = homogeneous_degree(p, image)
        if target != multidegree(p, Monomial.one(p.n), b):
            return b
    return None


def build_resolution(p: Presentation, mode: str = "ek", check: bool = True) -> Resolution:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "ek":
        require_crit_monotone(p)
        compute = ek_differential
    else:
        compute = generic_differential
    basis = enumerate_basis(p)
    differential = {b: compute(p, b) for level in basis for b in level}
    r = Resolution(p, basis, differential, mode)
    if check:
        bad = d_squared_witness(r)
        if bad is not None:
            raise RuntimeError(f"d^2 != 0 on {bad}")
        bad = minimality_witness(r)
        if bad is not None:
            raise RuntimeError(f"unit coefficient in d({bad}); resolution is not minimal")
        r.checks.update(d_squared=True, minimal=True)
    return r


def betti(r: Resolution) -> list:
    return [len(level) for level in r.basis]


def pdim(p) -> int:
    """max_j |crit(g_j)|; accepts a Presentation or a Resolution."""
    if isinstance(p, Resolution):
        p = p.presentation
    return max(len(c) for c in p.crit)


def reg_spread(p: Presentation) -> int:
    """max_{i,j} (deg m_i - deg m_j): spread of the generator degrees."""
    return max(p.degrees) - min(p.degrees)


def max_generator_degree(p: Presentation) -> int:
    return max(p.degrees)


def stable_betti_formula(p: Presentation) -> list:
    """sum_u C(max(supp u) - 1, i): Betti numbers of a stable ideal."""
    top = max(m.max_var() for m in p.generators) - 1
    return [sum(comb(m.max_var() - 1, i) for m in p.generators) for i in range(top + 1)]
