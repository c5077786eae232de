import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzygy.errors import MonomialError
from syzygy.monomial import (
    Monomial,
    compare_lex,
    compare_revlex,
    divide,
    format_monomial,
    gcd,
    lcm,
    monomials_below,
    monomials_of_degree,
    parse_monomial,
)


def monomials(n=4, top=3):
    return st.lists(st.integers(0, top), min_size=n, max_size=n).map(Monomial)


def test_lcm_examples():
    a, b = parse_monomial("x1*x2*x4", 4), parse_monomial("x1*x3*x4", 4)
    assert lcm(a, b) == parse_monomial("x1*x2*x3*x4", 4)
    assert lcm(a, a) == a
    assert lcm(a, Monomial.one(4)) == a


def test_lcm_rejects_mismatched_variables():
    with pytest.raises(MonomialError):
        lcm(Monomial((1, 0)), Monomial((1, 0, 0)))


def test_lcm_is_least_common_multiple_exhaustive():
    # n = 3, exponents <= 3: the full grid is 64^2 pairs
    grid = [Monomial(e) for e in itertools.product(range(4), repeat=3)]
    for a in grid:
        for b in grid:
            m = lcm(a, b)
            assert a.divides(m) and b.divides(m)
            for c in grid:
                if a.divides(c) and b.divides(c):
                    assert m.divides(c)


@given(monomials(), monomials())
def test_lcm_gcd_product(a, b):
    assert lcm(a, b) * gcd(a, b) == a * b


def test_compare_lex_examples():
    assert compare_lex(parse_monomial("x1*x2*x4", 4), parse_monomial("x1*x3*x4", 4)) > 0
    m = parse_monomial("x2^2*x3", 4)
    assert compare_lex(m, m) == 0
    assert compare_lex(Monomial.one(4), Monomial.var(4, 4)) < 0


@given(monomials(), monomials(), monomials())
def test_lex_is_a_total_order(a, b, c):
    assert compare_lex(a, b) == -compare_lex(b, a)
    assert (compare_lex(a, b) == 0) == (a == b)
    if compare_lex(a, b) <= 0 and compare_lex(b, c) <= 0:
        assert compare_lex(a, c) <= 0


@given(monomials(), monomials(), monomials())
def test_orders_are_multiplicative(a, b, c):
    assert compare_lex(a * c, b * c) == compare_lex(a, b)
    assert compare_revlex(a * c, b * c) == compare_revlex(a, b)


def test_divide_examples():
    assert divide(parse_monomial("x1*x2*x3*x4", 4), parse_monomial("x1*x2*x4", 4)) == Monomial.var(4, 3)
    m = parse_monomial("x1^2*x3", 3)
    assert divide(m, Monomial.one(3)) == m
    assert divide(Monomial((2,)), Monomial((1,))) == Monomial((1,))


def test_divide_requires_divisibility():
    with pytest.raises(MonomialError):
        divide(Monomial((1, 0)), Monomial((0, 1)))


@given(monomials(), monomials())
def test_divide_inverts_multiplication(a, b):
    assert divide(a * b, b) == a


def test_support_degree_and_extremes():
    m = parse_monomial("x2^3*x4", 5)
    assert m.support == {2, 4}
    assert m.degree == 4
    assert (m.min_var(), m.max_var()) == (2, 4)
    assert Monomial.one(3).max_var() == 0


@given(monomials(n=5))
def test_format_parse_round_trip(m):
    assert parse_monomial(format_monomial(m), 5) == m


@pytest.mark.parametrize("text", ["x0", "x6", "y1", "x1^", "x1**2", ""])
def test_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_monomial(text, 5)


def test_parse_constant_and_repeats():
    assert parse_monomial("1", 3) == Monomial.one(3)
    assert parse_monomial("x1*x1", 3) == parse_monomial("x1^2", 3)


def test_enumerators():
    assert sum(1 for _ in monomials_of_degree(4, 3)) == 20
    degree_two = list(monomials_of_degree(3, 2))
    assert all(compare_lex(a, b) > 0 for a, b in zip(degree_two, degree_two[1:]))
    assert sum(1 for _ in monomials_below(Monomial((1, 2, 0)))) == 6
