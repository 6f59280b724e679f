import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powstruct.errors import NotInvertibleError, OrderMismatchError
from powstruct.laurent import L, LaurentPoly
from powstruct.oracles import config_series, falling_factorial_power, model_from_series
from powstruct.power import ZetaDecomposition, decompose, power, recompose, sym_pow
from powstruct.rings import LAURENT, ZZ, euler_spec, euler_spec_series
from powstruct.series import TruncSeries

from strategies import both_rings, elements, laurent_elements, series

# the randomized acceptance suite runs these identities at 100 cases each;
# here a lighter sweep keeps the unit tests quick
light = settings(max_examples=30)


def test_decompose_zeta_is_single_factor():
    m = 1 + L
    d = decompose(LAURENT.zeta(m, 5))
    assert d.exponents == (m, 0, 0, 0, 0)


def test_decompose_one_plus_t():
    assert decompose(TruncSeries(ZZ, [1, 1, 0, 0, 0])).exponents == (1, -1, 0, 0)


def test_decompose_geometric():
    assert decompose(TruncSeries.geometric(ZZ, 4)).exponents == (1, 0, 0, 0)


def test_decompose_rejects_non_unit():
    with pytest.raises(NotInvertibleError):
        decompose(TruncSeries(ZZ, [3, 1]))


def test_decomposition_indexing_and_shape():
    d = decompose(TruncSeries(ZZ, [1, 2, 5, 7]))
    assert d[1] == 2
    with pytest.raises(IndexError):
        d[0]
    with pytest.raises(OrderMismatchError):
        d + decompose(TruncSeries(ZZ, [1, 2]))
    with pytest.raises(ValueError):
        ZetaDecomposition(ZZ, 2, (1,))


def test_golden_one_plus_t_to_lefschetz_squared():
    # frozen from an independent expansion of (1 - L^2 t^2)/(1 - L^2 t)
    got = power(TruncSeries(LAURENT, [1, 1, 0, 0, 0]), L**2)
    assert got == TruncSeries(LAURENT, [1, L**2, L**4 - L**2, L**6 - L**4, L**8 - L**6])
    assert got[2] != 2 * L**4 - 2 * L**2


def test_power_of_geometric_is_zeta():
    for m in (L, 1 + L + L**2, -L**-1 + 3, LaurentPoly()):
        assert power(TruncSeries.geometric(LAURENT, 6), m) == LAURENT.zeta(m, 6)


def test_binomial_theorem():
    assert power(TruncSeries(ZZ, [1, 1, 0, 0]), 3) == TruncSeries(ZZ, [1, 3, 3, 1])


def test_power_zero_and_one():
    a = TruncSeries(LAURENT, [1, 2 * L, L**-1, 5])
    assert power(a, 0) == TruncSeries.one(LAURENT, 3)
    assert power(a, 1) == a


def test_order_zero_series():
    a = TruncSeries.one(LAURENT, 0)
    assert power(a, L) == a
    assert decompose(a).exponents == ()


def test_sym_pow_examples():
    assert sym_pow(LAURENT, 1 + L, 0) == 1
    assert sym_pow(LAURENT, 1 + L, 1) == 1 + L
    assert sym_pow(LAURENT, L**2, 2) == L**4
    assert sym_pow(LAURENT, 1 + L + L**2, 2) == LaurentPoly.parse("1+L+2*L^2+L^3+L^4")
    assert sym_pow(ZZ, 3, 2) == 6


@both_rings
@light
@given(st.data())
def test_properties_one_through_five(ring, data):
    a, b = data.draw(series(ring)), data.draw(series(ring))
    m, n = data.draw(elements(ring)), data.draw(elements(ring))
    assert power(a, ring.zero) == TruncSeries.one(ring, 8)
    assert power(a, ring.one) == a
    assert power(a * b, m) == power(a, m) * power(b, m)
    assert power(a, m + n) == power(a, m) * power(a, n)
    assert power(a, m * n) == power(power(a, n), m)


@both_rings
@light
@given(st.data())
def test_negative_exponent_inverts(ring, data):
    a, m = data.draw(series(ring)), data.draw(elements(ring))
    assert power(a, -m) == power(a, m).inv()


@both_rings
@light
@given(st.data(), st.integers(1, 3))
def test_t_power_substitution(ring, data, s):
    a, m = data.draw(series(ring)), data.draw(elements(ring))
    assert power(a.substitute(1, s), m) == power(a, m).substitute(1, s)


@light
@given(series(LAURENT), laurent_elements, st.integers(-2, 2))
def test_lefschetz_substitution(a, m, s):
    assert power(a.substitute(L**s, 1), m) == power(a, m).substitute(L**s, 1)


@light
@given(series(LAURENT), laurent_elements)
def test_euler_specialization(a, m):
    assert euler_spec_series(power(a, m)) == power(euler_spec_series(a), euler_spec(m))


@both_rings
@light
@given(st.data())
def test_decomposition_roundtrip_and_additivity(ring, data):
    a, b = data.draw(series(ring)), data.draw(series(ring))
    assert recompose(decompose(a)) == a
    assert decompose(a * b) == decompose(a) + decompose(b)
    assert decompose(a)[1] == a[1]


@given(st.lists(st.integers(0, 4), min_size=6, max_size=6), st.integers(0, 6))
def test_integer_oracles_agree(tail, m):
    a = TruncSeries(ZZ, [1] + tail)
    expected = a**m
    assert power(a, m) == expected
    assert falling_factorial_power(a, m) == expected
    assert config_series(model_from_series(a, m), 6) == expected


@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6), st.integers(-6, 6))
def test_falling_factorial_agrees_for_signed_input(tail, m):
    # the falling-factorial formula is a polynomial identity, so it holds for any integers
    a = TruncSeries(ZZ, [1] + tail)
    assert power(a, m) == falling_factorial_power(a, m) == a**m
