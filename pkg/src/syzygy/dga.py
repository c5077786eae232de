"""DG algebra product on the augmented minimal resolution of S/I.

Reduced elements are the S-basis elements: the unit 1 (degree 0), the
generators g_j (degree 1) and e_I g_j (degree |I| + 1).  For reduced x, y of
positive degrees m and n,

    x * y = c((dx) * y) + (-1)^m c(x * (dy)),

extended S-bilinearly; 1 is a two-sided unit.  Products are memoized per
ordered pair of reduced elements.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product

from .chain import UNIT, BasisElement, Chain, format_chain, format_label, hdeg, homogeneous_degree, multidegree
from .families import is_stable
from .homotopy import Homotopy, ccrit, in_image
from .monomial import Monomial
from .presentation import Presentation


class DGA:
    def __init__(self, p: Presentation, homotopy: Homotopy | None = None):
        self.h = homotopy or Homotopy(p)
        self.p = p
        self.r = self.h.r
        self.one = Monomial.one(p.n)
        # highest degree of the augmented complex
        self.top = len(self.r.basis)
        self._memo: dict = {}

    def reduced(self) -> list:
        """Positive-degree reduced elements, in resolution order."""
        return list(self.r.elements())

    def unit(self, b: BasisElement = UNIT) -> Chain:
        return Chain({(self.one, b): 1})

    def basis_product(self, a: BasisElement, b: BasisElement) -> Chain:
        if a.j < 0:
            return self.unit(b)
        if b.j < 0:
            return self.unit(a)
        key = (a, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        m = hdeg(a)
        if m + hdeg(b) > self.top:
            out = Chain()
        else:
            inner = self.multiply(self.h.d(self.unit(a)), self.unit(b))
            inner.iadd(self.multiply(self.unit(a), self.h.d(self.unit(b))), -1 if m % 2 else 1)
            out = self.h(inner)
        self._memo[key] = out
        return out

    def multiply(self, x: Chain, y: Chain) -> Chain:
        out = Chain()
        for (ma, a), ca in x.items():
            for (mb, b), cb in y.items():
                out.iadd(self.basis_product(a, b), ca * cb, ma * mb)
        return out

    def d(self, x: Chain) -> Chain:
        return self.h.d(x)


def multiply(p: Presentation, x: Chain, y: Chain, algebra: DGA | None = None) -> Chain:
    return (algebra or DGA(p)).multiply(x, y)


def is_squarefree_matroidal(p: Presentation) -> bool:
    if not all(m.is_squarefree() for m in p.generators):
        return False
    bases = {frozenset(m.support) for m in p.generators}
    if len({len(b) for b in bases}) != 1:
        return False
    for b1 in bases:
        for b2 in bases:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bases for y in b2 - b1):
                    return False
    return True


@dataclass
class DGALimits:
    """Bounds for :func:`verify_dga`; ``None`` means the full range."""

    max_pair_degree: int | None = None
    max_triple_degree: int | None = None
    associativity: bool = True


@dataclass
class DGAReport:
    counts: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)
    warning: str | None = None

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def summary(self) -> str:
        parts = [f"{name}: {self.counts[name]} checked, {len(self.failures[name])} failed" for name in self.counts]
        return "; ".join(parts)


CHECKS = ("leibniz", "commutativity", "unit", "associativity", "ccrit_inclusion", "image", "homogeneity")


def verify_dga(p: Presentation, limits: DGALimits | None = None, algebra: DGA | None = None) -> DGAReport:
    """Exhaustively check the DGA axioms and the c-crit inclusion condition."""
    limits = limits or DGALimits()
    A = algebra or DGA(p)
    report = DGAReport({k: 0 for k in CHECKS}, {k: [] for k in CHECKS})
    if is_stable(p.n, p.generators) is not None and not is_squarefree_matroidal(p):
        report.warning = "ideal is neither stable nor squarefree matroidal; associativity is not guaranteed"
        warnings.warn(report.warning)

    elems = A.reduced()
    pair_cap = A.top if limits.max_pair_degree is None else limits.max_pair_degree
    triple_cap = A.top if limits.max_triple_degree is None else limits.max_triple_degree
    one = A.one

    for x in elems:
        ux = A.unit(x)
        report.counts["unit"] += 1
        if A.h(A.d(ux)) != ux or A.multiply(A.unit(), ux) != ux or A.multiply(ux, A.unit()) != ux:
            report.failures["unit"].append(x)

    for x, y in product(elems, repeat=2):
        m, n = hdeg(x), hdeg(y)
        if m + n > pair_cap:
            continue
        ux, uy = A.unit(x), A.unit(y)
        xy = A.basis_product(x, y)

        report.counts["leibniz"] += 1
        rhs = A.multiply(A.d(ux), uy)
        rhs.iadd(A.multiply(ux, A.d(uy)), -1 if m % 2 else 1)
        if A.d(xy) != rhs:
            report.failures["leibniz"].append((x, y))

        report.counts["commutativity"] += 1
        if xy != A.basis_product(y, x).scaled(-1 if (m * n) % 2 else 1):
            report.failures["commutativity"].append((x, y))

        report.counts["ccrit_inclusion"] += 1
        if not ccrit(p, xy) <= ccrit(p, x) & ccrit(p, y):
            report.failures["ccrit_inclusion"].append((x, y))

        report.counts["image"] += 1
        if not all(in_image(p, mono, t) for mono, t in xy):
            report.failures["image"].append((x, y))

        report.counts["homogeneity"] += 1
        if xy:
            expected = tuple(
                a + b for a, b in zip(multidegree(p, one, x), multidegree(p, one, y))
            )
            try:
                got = homogeneous_degree(p, xy)
            except ValueError:
                got = None
            if got != expected:
                report.failures["homogeneity"].append((x, y))

    if limits.associativity:
        for x, y, z in product(elems, repeat=3):
            if hdeg(x) + hdeg(y) + hdeg(z) > triple_cap:
                continue
            report.counts["associativity"] += 1
            left = A.multiply(A.basis_product(x, y), A.unit(z))
            right = A.multiply(A.unit(x), A.basis_product(y, z))
            if left != right:
                report.failures["associativity"].append((x, y, z))
    return report


@dataclass
class TableEntry:
    left: BasisElement
    right: BasisElement
    value: Chain
    note: str  # "unit", "degree" or "computed"


def product_table(p: Presentation, algebra: DGA | None = None) -> list:
    """All products of reduced elements ``a * b`` with ``a`` not after ``b``."""
    A = algebra or DGA(p)
    elems = [UNIT] + A.reduced()
    rows = []
    for ia, a in enumerate(elems):
        for b in elems[ia:]:
            if a.j < 0 or b.j < 0:
                note = "unit"
            elif hdeg(a) + hdeg(b) > A.top:
                note = "degree"
            else:
                note = "computed"
            rows.append(TableEntry(a, b, A.basis_product(a, b), note))
    return rows


def format_table(p: Presentation, rows: list, nonzero_only: bool = False) -> str:
    lines = []
    for row in rows:
        if nonzero_only and (row.note != "computed" or not row.value):
            continue
        lhs = f"{format_label(p, row.left)} * {format_label(p, row.right)}"
        lines.append(f"{lhs:<28} = {format_chain(p, row.value):<40} [{row.note}]")
    return "\n".join(lines)
