import pytest
from hypothesis import given, strategies as st
from fractions import Fraction

from kleincurves import I, GaussianRational, parse_field

rats = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
elems = st.builds(GaussianRational, rats, rats)


@given(elems, elems, elems)
def test_ring_axioms(x, y, w):
    assert (x + y) * w == x * w + y * w
    assert x * y == y * x
    assert (x * y) * w == x * (y * w)


@given(elems)
def test_inverse(x):
    if x:
        assert x * x.inverse() == 1
        assert x / x == 1
    else:
        with pytest.raises(ZeroDivisionError):
            x.inverse()


@given(elems)
def test_str_roundtrip(x):
    assert parse_field(str(x)) == x


def test_i_squared():
    assert I * I == -1
    assert (1 + I).norm() == 2
    assert (2 + 3 * I).conjugate() == 2 - 3 * I


@pytest.mark.parametrize("text,re,im", [
    ("3", 3, 0),
    ("-7/4", Fraction(-7, 4), 0),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("2/3*i", 0, Fraction(2, 3)),
    ("1/2-3*i", Fraction(1, 2), -3),
    ("5+i", 5, 1),
])
def test_parse(text, re, im):
    x = parse_field(text)
    assert x == GaussianRational(re, im)


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "abc", "2+*i", "i/3", "3**i"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_field(bad)


def test_float_complex_rejected():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1j)
    with pytest.raises(TypeError):
        GaussianRational(0.5)


def test_hash_matches_integers():
    assert GaussianRational(3) == 3
    assert len({GaussianRational(1, 0), GaussianRational.coerce("1")}) == 1
