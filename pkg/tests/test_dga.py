import random
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syzygy.chain import UNIT, BasisElement, Chain, single
from syzygy.dga import DGA, DGALimits, format_table, is_squarefree_matroidal, multiply, product_table, verify_dga
from syzygy.families import k4_matroid, matroidal_presentation, random_stable_ideal, uniform_matroid, validate_stable
from syzygy.monomial import Monomial
from syzygy.presentation import presentation_from_generators

from conftest import mono

G124, G134, G234 = (BasisElement((), j) for j in range(3))
E2G134, E1G234 = BasisElement((2,), 1), BasisElement((1,), 2)


def x(*vars_):
    return Monomial.from_support(4, vars_)


@pytest.fixture(scope="module")
def A(J):
    return DGA(J)


def test_fano_restriction_products(A):
    assert A.basis_product(G124, G134) == single(x(1, 4), E2G134)
    assert A.basis_product(G124, G234) == single(x(2, 4), E1G234)
    assert A.basis_product(G134, G234) == Chain({(x(3, 4), E1G234): 1, (x(3, 4), E2G134): -1})


def test_squares_of_generators_vanish(A):
    for g in (G124, G134, G234):
        assert A.basis_product(g, g) == Chain()


def test_unit(A):
    for b in [UNIT, G124, E1G234]:
        assert A.basis_product(UNIT, b) == single(x(), b)
        assert A.basis_product(b, UNIT) == single(x(), b)


def test_bilinear(J, A):
    left = Chain({(x(1), G124): 2, (x(), G134): -1})
    right = single(x(4), G234)
    expected = A.basis_product(G124, G234).scaled(2, x(1, 4))
    expected.iadd(A.basis_product(G134, G234), -1, x(4))
    assert multiply(J, left, right, A) == expected


def test_table_of_J(J, A):
    rows = product_table(J, A)
    computed = [r for r in rows if r.note == "computed" and r.value]
    assert [(r.left, r.right) for r in computed] == [(G124, G134), (G124, G234), (G134, G234)]
    text = format_table(J, rows, nonzero_only=True)
    assert "x3*x4*e_1 g_234 - x3*x4*e_2 g_134" in text


def test_verify_on_J(J, A):
    report = verify_dga(J, algebra=A)
    assert report.ok and report.warning is None
    assert report.counts["associativity"] == 0  # any triple of generators exceeds the top degree


def test_squarefree_matroidal_detection(J):
    assert is_squarefree_matroidal(J)
    assert not is_squarefree_matroidal(validate_stable(2, [mono(2, 0), mono(1, 1), mono(0, 2)]))


def test_warns_outside_known_families():
    # linear quotients and crit-monotone, but neither stable nor matroidal
    p = presentation_from_generators(3, [mono(2, 0, 0), mono(1, 0, 1)])
    assert not is_squarefree_matroidal(p)
    with pytest.warns(UserWarning):
        report = verify_dga(p)
    assert report.warning is not None
    assert report.ok


@pytest.mark.parametrize(
    "p",
    [matroidal_presentation(uniform_matroid(2, 4)), matroidal_presentation(uniform_matroid(3, 5)), matroidal_presentation(k4_matroid())],
    ids=["U24", "U35", "K4"],
)
def test_matroidal_axioms(p):
    report = verify_dga(p)
    assert report.ok, report.summary()


def test_limits_skip_associativity():
    p = matroidal_presentation(uniform_matroid(2, 4))
    report = verify_dga(p, DGALimits(max_pair_degree=2, associativity=False))
    assert report.counts["associativity"] == 0 and report.ok


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_stable_axioms(seed, n):
    p = validate_stable(n, random_stable_ideal(random.Random(seed), n, max_degree=3))
    report = verify_dga(p)
    assert report.ok, report.summary()


def test_restricted_table_embeds_in_full_fano(J):
    from syzygy.families import fano
    from syzygy.presentation import restrict

    full = matroidal_presentation(fano())
    small = restrict(full, (1, 2, 3, 4), order="declex")
    big, little = DGA(full), DGA(small)
    lift = lambda m: Monomial(tuple(m) + (0, 0, 0))  # noqa: E731
    index = {j: full.generators.index(lift(g)) for j, g in enumerate(small.generators)}

    def embed(b):
        assert set(b.I) <= full.crit[index[b.j]]
        return BasisElement(b.I, index[b.j])

    def embed_chain(chain):
        return Chain({(lift(m), embed(b)): c for (m, b), c in chain.items()})

    elems = little.reduced()
    for a in elems:
        for b in elems:
            assert embed_chain(little.basis_product(a, b)) == big.basis_product(embed(a), embed(b))
