import pytest
from hypothesis import given
from hypothesis import strategies as st

from powstruct.errors import ParseError
from powstruct.laurent import L, LaurentPoly, dot_products

from strategies import laurent_elements


@pytest.mark.parametrize(
    "text, terms",
    [
        ("1+L+L^2", {0: 1, 1: 1, 2: 1}),
        ("-2*L^-1+3", {-1: -2, 0: 3}),
        ("-2L^-1 + 3", {-1: -2, 0: 3}),
        ("L^2", {2: 1}),
        ("0", {}),
        ("L - L", {}),
        ("  4 * L ^ 3 - 7 ", {3: 4, 0: -7}),
        ("-L^-2", {-2: -1}),
        ("2*L", {1: 2}),
        ("3L^+2", {2: 3}),
    ],
)
def test_parse(text, terms):
    assert LaurentPoly.parse(text) == LaurentPoly(terms)


@pytest.mark.parametrize("text", ["", "L^", "2*", "1++L", "x", "L^2^3", "*L", "1+"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        LaurentPoly.parse(text)


def test_canonical_string_ascending():
    assert str(LaurentPoly({2: 1, -1: -2, 0: 3})) == "-2*L^-1+3+L^2"
    assert str(LaurentPoly()) == "0"
    assert str(-L) == "-L"


def test_zero_coefficients_are_dropped():
    p = LaurentPoly([(1, 2), (1, -2), (0, 5)])
    assert p.terms() == [(0, 5)]
    assert p == 5
    assert hash(p) == hash(5)


def test_arithmetic():
    assert (1 + L) * (1 - L) == 1 - L**2
    assert L**-1 * L == 1
    assert (-L) ** -3 == -(L**-3)
    assert 3 - L == LaurentPoly({0: 3, 1: -1})
    with pytest.raises(ValueError):
        (1 + L) ** -1


@given(laurent_elements)
def test_parse_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(laurent_elements, laurent_elements, laurent_elements)
def test_commutative_ring(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(laurent_elements, laurent_elements)
def test_evaluate_at_one_is_multiplicative(a, b):
    assert (a * b).evaluate(1) == a.evaluate(1) * b.evaluate(1)


wide_polys = st.dictionaries(
    st.integers(-40, 40), st.integers(-(10**30), 10**30), max_size=40
).map(LaurentPoly)


def naive_product(x, y):
    out = {}
    for e, c in x.terms():
        for f, d in y.terms():
            out[e + f] = out.get(e + f, 0) + c * d
    return LaurentPoly(out)


@given(st.lists(st.tuples(wide_polys, wide_polys), max_size=6))
def test_packed_dot_matches_naive(pairs):
    expected = LaurentPoly()
    for x, y in pairs:
        expected = expected + naive_product(x, y)
    assert dot_products(pairs) == expected


def test_packed_dot_cancellation_and_sign_extremes():
    big = 2**64
    x = LaurentPoly({0: big, 3: -big})
    assert dot_products([(x, x), (-x, x)]) == 0
    assert dot_products([(x, LaurentPoly({-5: -1}))]) == LaurentPoly({-5: -big, -2: big})
