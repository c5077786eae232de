"""Contracting homotopy on the augmented resolution S <- G_0 <- G_1 <- ...

Everything here is k-linear: a chain term ``(x^a, e_I g_j)`` is the k-basis
element ``x^a e_I g_j`` and ``(w, UNIT)`` is the monomial ``w`` of S.

For a crit-monotone presentation the homotopy is ``c = sum_k c0 rho^k``:

* ``c0(x^a e_I g_j) = x^a / x_t e_{I+t} g_j`` where ``t = min(supp a & crit g_j)``,
  provided ``t < min I``, and 0 otherwise;
* ``rho(x^a e_I g_j) = x^a / x_i * x^d e_I g_k`` with ``i`` the least c-critical
  variable in ``supp a`` and ``nf(x_i g_j) = x^d g_k``; zero when there is no
  such ``i`` or when ``I`` is not inside ``crit(g_k)``.

On S, ``c(w) = (w / m_k) g_k`` for the earliest generator ``m_k`` dividing ``w``.
``contract_recursive`` evaluates the defining recursion
``c(v) = c0(v) - c(d c0(v) - v)`` directly and serves as a second route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain import UNIT, BasisElement, Chain, insert
from .errors import HomotopyFailure, RecursionLimitExceeded
from .monomial import Monomial, monomials_of_degree
from .presentation import Presentation, require_crit_monotone
from .resolution import Resolution, build_resolution


def ccrit_element(p: Presentation, b: BasisElement) -> frozenset:
    """c-crit(e_I g_j) = {i in crit(g_j) : i < min I}."""
    if b.j < 0:
        return frozenset()
    crit = p.crit[b.j]
    if not b.I:
        return crit
    low = b.I[0]
    return frozenset(i for i in crit if i < low)


def ccrit(p: Presentation, chain) -> frozenset:
    """Union of c-crit over the basis elements occurring in ``chain``."""
    if isinstance(chain, BasisElement):
        return ccrit_element(p, chain)
    out = frozenset()
    for _m, b in chain:
        out |= ccrit_element(p, b)
    return out


def in_image(p: Presentation, mono: Monomial, b: BasisElement) -> bool:
    """``x^a e_K g_j`` spans im(c): min((supp a | K) & crit g_j) lies in K.

    With K empty this reads ``supp a & crit g_j`` empty.  S is never hit.
    """
    if b.j < 0:
        return False
    hits = (mono.support | set(b.I)) & p.crit[b.j]
    if not hits:
        return not b.I
    return min(hits) in b.I


class Homotopy:
    """The homotopy ``c`` for one crit-monotone presentation.

    ``c0`` and ``rho`` are methods so that tests can subclass and corrupt them.
    """

    def __init__(self, p: Presentation, resolution: Resolution | None = None):
        require_crit_monotone(p)
        self.p = p
        self.r = resolution if resolution is not None else build_resolution(p, "ek")
        self.one = Monomial.one(p.n)
        self._memo: dict = {}
        self._rec_memo: dict = {}

    # single-term maps; return (monomial, basis element) or None
    def c0(self, mono: Monomial, b: BasisElement):
        crit = self.p.crit[b.j]
        hits = [i for i in sorted(crit) if mono[i - 1]]
        if not hits:
            return None
        t = hits[0]
        if b.I and t >= b.I[0]:
            return None
        return mono.div_var(t), BasisElement(insert(b.I, t), b.j)

    def rho(self, mono: Monomial, b: BasisElement):
        candidates = [i for i in sorted(ccrit_element(self.p, b)) if mono[i - 1]]
        if not candidates:
            return None
        i = candidates[0]
        cofactor, k = self.p.step(i, b.j)
        if not self.p.crit[k].issuperset(b.I):
            return None
        return mono.div_var(i) * cofactor, BasisElement(b.I, k)

    def rho_orbit(self, mono: Monomial, b: BasisElement) -> list:
        """[v, rho(v), rho^2(v), ...] up to the first zero."""
        orbit = [(mono, b)]
        for _ in range(len(self.p) + 1):
            nxt = self.rho(*orbit[-1])
            if nxt is None:
                return orbit
            orbit.append(nxt)
        raise RecursionLimitExceeded(f"rho does not terminate from {(mono, b)}")

    def contract_term(self, mono: Monomial, b: BasisElement) -> Chain:
        key = (mono, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = Chain()
        if b.j < 0:
            k = self.p.earliest_divisor(mono)
            if k is not None:
                out.add(mono / self.p.generators[k], BasisElement((), k))
        else:
            for term in self.rho_orbit(mono, b):
                image = self.c0(*term)
                if image is not None:
                    out.add(*image, 1)
        self._memo[key] = out
        return out

    def __call__(self, chain: Chain) -> Chain:
        out = Chain()
        for (m, b), c in chain.items():
            out.iadd(self.contract_term(m, b), c)
        return out

    contract = __call__

    def d(self, chain: Chain) -> Chain:
        """Differential of the augmented complex (g_j maps to m_j in S)."""
        out = Chain()
        gens = self.p.generators
        for (m, b), c in chain.items():
            if b.j < 0:
                continue
            if not b.I:
                out.add(m * gens[b.j], UNIT, c)
            else:
                out.iadd(self.r.differential[b], c, m)
        return out

    def eta(self, chain: Chain) -> Chain:
        """Projection of S onto the monomials outside the ideal; zero elsewhere."""
        out = Chain()
        for (m, b), c in chain.items():
            if b.j < 0 and not self.p.contains(m):
                out.add(m, b, c)
        return out

    def contract_recursive(self, chain: Chain, depth: int = 0) -> Chain:
        out = Chain()
        for (m, b), c in chain.items():
            out.iadd(self._recursive_term(m, b, depth), c)
        return out

    def _recursive_term(self, mono: Monomial, b: BasisElement, depth: int) -> Chain:
        key = (mono, b)
        hit = self._rec_memo.get(key)
        if hit is not None:
            return hit
        if b.j < 0:
            return self.contract_term(mono, b)
        if depth > 50 * (len(self.p) + self.p.n):
            raise RecursionLimitExceeded(f"homotopy recursion did not terminate at {key}")
        up = self.c0(mono, b)
        out = Chain()
        if up is not None:
            out.add(*up, 1)
            rest = Chain()
            rest.iadd(self.r.differential[up[1]], 1, up[0])
            rest.add(mono, b, -1)
            out.iadd(self.contract_recursive(rest, depth + 1), -1)
        self._rec_memo[key] = out
        return out


def contract(p: Presentation, x: Chain, homotopy: Homotopy | None = None) -> Chain:
    return (homotopy or Homotopy(p))(x)


@dataclass
class HomotopyReport:
    degree_bound: int
    checked: int = 0
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return (
            f"homotopy identities up to degree {self.degree_bound}: "
            f"{self.checked} spanning elements, {len(self.failures)} failures"
        )


def spanning_elements(h: Homotopy, degree_bound: int):
    """All ``x^a e_I g_j`` and ``x^a`` in S of total multidegree <= bound."""
    p = h.p
    labels = [UNIT] + list(h.r.elements())
    for b in labels:
        base = 0 if b.j < 0 else len(b.I) + p.generators[b.j].degree
        for extra in range(degree_bound - base + 1):
            for mono in monomials_of_degree(p.n, extra):
                yield mono, b


def verify_homotopy(
    p: Presentation,
    degree_bound: int,
    homotopy: Homotopy | None = None,
    strict: bool = True,
    cross_check: bool = False,
) -> HomotopyReport:
    """Check dc + cd = 1 - eta, c^2 = 0 and the image description exhaustively.

    With ``cross_check`` each value of c is also compared with the recursive
    definition.
    """
    h = homotopy or Homotopy(p)
    report = HomotopyReport(degree_bound)
    names = ("dc+cd=1-eta", "c^2=0", "image", "recursion")
    report.counts = {name: 0 for name in names}

    def fail(name, witness):
        report.failures.append((name, witness))
        if strict:
            raise HomotopyFailure(witness, name)

    for mono, b in spanning_elements(h, degree_bound):
        x = Chain({(mono, b): 1})
        cx = h(x)
        lhs = h.d(cx) + h(h.d(x))
        if lhs != x - h.eta(x):
            fail(names[0], (mono, b))
        report.counts[names[0]] += 1
        if h(cx):
            fail(names[1], (mono, b))
        report.counts[names[1]] += 1
        if not all(in_image(p, m, t) for m, t in cx):
            fail(names[2], (mono, b))
        report.counts[names[2]] += 1
        if cross_check:
            if h.contract_recursive(x) != cx:
                fail(names[3], (mono, b))
            report.counts[names[3]] += 1
        report.checked += 1
    return report
