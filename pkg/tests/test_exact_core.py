from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gmtkit.errors import (InvalidParams, NonExactDivision, NonzeroConstantTerm,
                           ZeroConstantTerm)
from gmtkit.exact_core import (MultiPoly, QSeries, coeff, fraction_str, grevlex_key,
                               monomials_of_degree, parse_fraction, poly_add,
                               poly_divide_exact, poly_mul, series_exp, series_mul,
                               series_recip)

from conftest import polys

x = MultiPoly.var(2, 0)
y = MultiPoly.var(2, 1)


def test_add_examples():
    assert poly_add(x + y, x - y) == 2 * x
    p = x * x + 3 * y
    assert poly_add(p, MultiPoly.zero(2)) == p
    z = poly_add(x * x, -(x * x))
    assert z == 0 and z.terms == {}


def test_mul_examples():
    assert poly_mul(x + y, x + y) == x * x + 2 * x * y + y * y
    assert poly_mul(MultiPoly.zero(2), x + y) == 0
    e2 = (2 * y) * (x + y) * (2 * x)
    assert e2 == 4 * x * x * y + 4 * x * y * y


def test_nvars_mismatch():
    with pytest.raises(InvalidParams):
        poly_add(x, MultiPoly.var(3, 0))
    with pytest.raises(InvalidParams):
        poly_mul(x, MultiPoly.var(3, 0))


def test_divide_exact_examples():
    assert poly_divide_exact(x * x * y + x * y * y, x * y) == x + y
    assert poly_divide_exact(4 * x * y * (x + y), 2 * y) == 2 * x * (x + y)
    with pytest.raises(NonExactDivision):
        poly_divide_exact(x * x + y * y, x + y)


def test_coeff_examples():
    assert coeff(x * x + 2 * x * y, (1, 1)) == 2
    assert coeff(x * x + 2 * x * y, (0, 3)) == 0
    assert coeff(4 * x * x * y + 4 * x * y * y, (2, 1)) == 4


def test_grevlex_order():
    # H_0 is the smallest variable
    assert grevlex_key((0, 2)) > grevlex_key((1, 1)) > grevlex_key((2, 0))
    assert grevlex_key((0, 0, 1)) > grevlex_key((0, 1, 0)) > grevlex_key((1, 0, 0))
    mons = monomials_of_degree(3, 4)
    assert len(mons) == 15 and len(set(mons)) == 15
    keys = [grevlex_key(m) for m in mons]
    assert keys == sorted(keys, reverse=True)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys(nvars=3, max_exp=2), polys(nvars=3, max_exp=2))
def test_divide_roundtrip(p, q):
    assume(q)
    assert poly_divide_exact(p * q, q) == p


@given(polys())
def test_no_zero_coefficients(p):
    assert all(c != 0 for _, c in (p - p + p).items())


def test_recip_geometric():
    r = series_recip(QSeries([1, 120], 4))
    assert list(r) == [1, -120, 14400, -1728000, 207360000]


def test_exp_zero():
    assert list(series_exp(QSeries([0, 0, 0], 2))) == [1, 0, 0]


def test_cauchy_product_example():
    t = series_mul(QSeries([0, 770, 810225], 2), series_recip(QSeries([1, 120, 113400], 2)))
    assert t[2] == 810225 - 770 * 120 == 717825


def test_series_errors():
    with pytest.raises(ZeroConstantTerm):
        series_recip(QSeries([0, 1], 1))
    with pytest.raises(NonzeroConstantTerm):
        series_exp(QSeries([1, 1], 1))


series = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9), min_size=1, max_size=7)


@given(series)
def test_recip_inverse(cs):
    assume(cs[0] != 0)
    a = QSeries(cs)
    one = series_mul(a, series_recip(a))
    assert list(one) == [1] + [0] * a.order


@given(series, series)
def test_exp_is_homomorphism(a, b):
    n = min(len(a), len(b)) - 1
    a = QSeries([0] + a[1:], n)
    b = QSeries([0] + b[1:], n)
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


def test_series_truncation_orders():
    a = QSeries([1, 2, 3], 2)
    assert series_mul(a, a).order == 2


@pytest.mark.parametrize("value", [Fraction(3), Fraction(-7, 4), Fraction(0)])
def test_fraction_roundtrip(value):
    assert parse_fraction(fraction_str(value)) == value


@pytest.mark.parametrize("bad", ["1.5", "2e3", "", "x/2"])
def test_parse_fraction_rejects(bad):
    with pytest.raises(ValueError):
        parse_fraction(bad)
