"""Independent checks by exact linear algebra in single multidegrees.

``strand_exactness_oracle`` takes a finished resolution and checks that each
multigraded strand of ``0 -> G_top -> ... -> G_0 -> S`` is exact with the
right cokernel.  ``koszul_betti`` never looks at the resolution: it reads the
multigraded Betti numbers off the upper Koszul simplicial complexes
``K^a = {F squarefree : x^(a - F) in I}``, with ``beta_{i,a} = dim H~_{i-1}(K^a)``.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from .chain import multidegree
from .errors import ExactnessFailure
from .monomial import Monomial, lcm, monomials_below
from .presentation import Presentation


def rank(rows: list, ncols: int) -> int:
    """Exact rank of an integer matrix given as a list of row lists."""
    if not rows or not ncols:
        return 0
    return _sparse(rows, ncols).rank()


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("SYZYGY_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class StrandResult:
    alpha: tuple
    dims: list  # dims[0] = S_alpha, dims[p + 1] = rank of G_p in this strand
    ranks: list  # ranks[p] = rank of the map out of slot p + 1 (augmentation first)
    homology: list
    in_ideal: bool = True
    is_complex: bool = True

    @property
    def exact(self) -> bool:
        return self.is_complex and not any(self.homology[1:])


@dataclass
class StrandReport:
    strands: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{len(self.strands)} strands checked, {len(self.failures)} failures"


def _sparse(rows: list, ncols: int) -> DomainMatrix:
    entries = {i: {j: ZZ(c) for j, c in enumerate(row) if c} for i, row in enumerate(rows)}
    return DomainMatrix({i: e for i, e in entries.items() if e}, (len(rows), ncols), ZZ)


def _compose(outer: list, inner: list) -> bool:
    """True when outer @ inner is zero (row-list matrices)."""
    product = _sparse(outer, len(inner)) * _sparse(inner, len(inner[0]))
    return product.is_zero_matrix


def _level_degrees(r) -> list:
    one = Monomial.one(r.presentation.n)
    return [[(b, multidegree(r.presentation, one, b)) for b in level] for level in r.basis]


def _strand(r, alpha: Monomial, graded: list | None = None) -> StrandResult:
    p = r.presentation
    if graded is None:
        graded = _level_degrees(r)
    levels = [
        [b for b, deg in level if all(x <= a for x, a in zip(deg, alpha))] for level in graded
    ]
    in_ideal = any(m.divides(alpha) for m in p.generators)

    # matrices[0] is the augmentation G_0 -> S_alpha, then d: G_k -> G_{k-1}
    matrices = [[[1] * len(levels[0])]]
    for deg in range(1, len(levels)):
        source, target = levels[deg], levels[deg - 1]
        row_of = {b: k for k, b in enumerate(target)}
        rows = [[0] * len(source) for _ in target]
        for col, b in enumerate(source):
            for (_m, t), c in r.differential[b].items():
                rows[row_of[t]][col] += c
        matrices.append(rows)

    is_complex = all(
        _compose(matrices[k], matrices[k + 1])
        for k in range(len(matrices) - 1)
        if levels[k] and levels[k + 1]
    )
    dims = [1] + [len(level) for level in levels]
    ranks = [rank(m, dims[k + 1]) if dims[k + 1] else 0 for k, m in enumerate(matrices)]
    ranks.append(0)

    homology = [dims[0] - ranks[0]]
    for slot in range(1, len(dims)):
        homology.append(dims[slot] - ranks[slot - 1] - ranks[slot])
    return StrandResult(tuple(alpha), dims, ranks[:-1], homology, in_ideal, is_complex)


def _check(result: StrandResult) -> str | None:
    if not result.is_complex:
        return "consecutive maps do not compose to zero"
    expected_h0 = 0 if result.in_ideal else 1
    if result.homology[0] != expected_h0:
        return f"cokernel dimension {result.homology[0]}, expected {expected_h0}"
    for slot, h in enumerate(result.homology[1:]):
        if h:
            return f"H_{slot} = {h}"
    return None


def _run_chunk(args):
    r, alphas = args
    graded = _level_degrees(r)
    return [_strand(r, a, graded) for a in alphas]


def strand_exactness_oracle(
    r, bound: Monomial | None = None, alphas: Iterable[Monomial] | None = None, strict: bool = True
) -> StrandReport:
    """Check exactness of every strand with multidegree dividing ``bound``.

    Pass ``alphas`` instead of ``bound`` to check an explicit list.  With
    ``strict`` the first failure raises :class:`ExactnessFailure`.
    """
    if alphas is None:
        if bound is None:
            raise ValueError("give a bound or an explicit list of multidegrees")
        alphas = monomials_below(bound)
    alphas = list(dict.fromkeys(alphas))

    workers = thread_cap()
    if workers > 1 and len(alphas) > 64:
        chunks = [alphas[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, [(r, c) for c in chunks]))
        by_alpha = {s.alpha: s for part in parts for s in part}
        results = [by_alpha[tuple(a)] for a in alphas]
    else:
        graded = _level_degrees(r)
        results = [_strand(r, a, graded) for a in alphas]

    report = StrandReport()
    for result in results:
        report.strands.append(result)
        problem = _check(result)
        if problem is not None:
            report.failures.append((result.alpha, problem))
            if strict:
                degree = next((k - 1 for k, h in enumerate(result.homology) if h), -1)
                raise ExactnessFailure(result.alpha, degree, problem)
    return report


def unit_cube_and_bumps(n: int) -> list:
    """All squarefree multidegrees plus everything below (1,...,1) + e_i."""
    out = []
    for i in range(n):
        bound = Monomial(2 if k == i else 1 for k in range(n))
        out.extend(monomials_below(bound))
    return list(dict.fromkeys(out))


def _reduced_homology(faces: set) -> list:
    """Reduced Betti numbers of a simplicial complex over Q, indexed by dim + 1."""
    if not faces:
        return []
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: k for k, f in enumerate(sorted(by_dim.get(d, [])))} for d in range(-1, top + 1)}
    ranks = {}
    for d in range(0, top + 1):
        rows_n = len(index[d - 1])
        cols = []
        for f in sorted(by_dim.get(d, [])):
            col = [0] * rows_n
            for pos in range(len(f)):
                face = f[:pos] + f[pos + 1:]
                col[index[d - 1][face]] += -1 if pos % 2 else 1
            cols.append(col)
        ranks[d] = rank([list(r) for r in zip(*cols)], len(cols)) if cols and rows_n else 0
    out = []
    for d in range(-1, top + 1):
        out.append(len(index[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return out


def koszul_betti(p: Presentation) -> Counter:
    """Multigraded Betti numbers ``{(i, alpha): beta}`` of the ideal, from scratch."""
    gens = p.generators
    out = Counter()
    for alpha in monomials_below(lcm_box(p)):
        below = [m for m in gens if m.divides(alpha)]
        if not below:
            continue
        hull = below[0]
        for m in below[1:]:
            hull = lcm(hull, m)
        if hull != alpha:
            continue  # outside the lcm lattice: all Betti numbers vanish
        support = sorted(alpha.support)
        faces = set()
        for size in range(len(support) + 1):
            for F in combinations(support, size):
                shifted = Monomial(a - (1 if k + 1 in F else 0) for k, a in enumerate(alpha))
                if any(m.divides(shifted) for m in below):
                    faces.add(F)
        for dim_plus_one, h in enumerate(_reduced_homology(faces)):
            if h:
                out[dim_plus_one, tuple(alpha)] = h
    return out


def koszul_betti_totals(p: Presentation) -> list:
    graded = koszul_betti(p)
    top = max(i for i, _ in graded)
    return [sum(v for (i, _), v in graded.items() if i == k) for k in range(top + 1)]


def resolution_multigraded_betti(r) -> Counter:
    p = r.presentation
    one = Monomial.one(p.n)
    return Counter((b.degree, multidegree(p, one, b)) for b in r.elements())


def lcm_box(p: Presentation) -> Monomial:
    """lcm of all generators.  Strands above it repeat the strand at the meet,
    so checking every multidegree below it is a complete exactness test."""
    top = p.generators[0]
    for m in p.generators[1:]:
        top = lcm(top, m)
    return top


def strand_homological_dimension(report: StrandReport) -> int:
    """Highest homological degree with a nonzero strand among those checked."""
    return max(
        (k for s in report.strands for k, dim in enumerate(s.dims[1:]) if dim), default=-1
    )
