from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powstruct.laurent import L, LaurentPoly
from powstruct.rings import (
    LAURENT,
    ZZ,
    euler_spec,
    euler_spec_series,
    multiset_binomial,
    zeta_int,
    zeta_laurent,
)
from powstruct.series import TruncSeries

from strategies import both_rings, elements, laurent_elements


def zeta_newton(m: LaurentPoly, order: int) -> TruncSeries:
    """Independent route to zeta_m via power sums: n z_n = sum_k psi_k(m) z_{n-k},
    where psi_k(sum c_e L^e) = sum c_e L^(ek)."""
    psi = [None] + [LaurentPoly({e * k: c for e, c in m.terms()}) for k in range(1, order + 1)]
    z = [LaurentPoly.constant(1)]
    for n in range(1, order + 1):
        acc = LaurentPoly()
        for k in range(1, n + 1):
            acc = acc + psi[k] * z[n - k]
        assert all(c % n == 0 for _, c in acc.terms())
        z.append(LaurentPoly({e: c // n for e, c in acc.terms()}))
    return TruncSeries(LAURENT, z)


@pytest.mark.parametrize("m, k, expected", [(2, 3, 4), (1, 5, 1), (-1, 2, 0), (0, 0, 1), (0, 3, 0)])
def test_multiset_binomial(m, k, expected):
    assert multiset_binomial(m, k) == expected


@pytest.mark.parametrize("m", range(-6, 7))
@pytest.mark.parametrize("k", range(0, 7))
def test_multiset_binomial_matches_rational_polynomial(m, k):
    value = Fraction(1)
    for j in range(k):
        value *= Fraction(m + j, j + 1)
    assert multiset_binomial(m, k) == value


@pytest.mark.parametrize("m", range(0, 7))
def test_multiset_binomial_negation_is_inverse(m):
    pos = TruncSeries(ZZ, [multiset_binomial(m, k) for k in range(9)])
    neg = TruncSeries(ZZ, [multiset_binomial(-m, k) for k in range(9)])
    assert neg == pos.inv()


def test_zeta_int_examples():
    assert zeta_int(0, 4) == TruncSeries.one(ZZ, 4)
    assert zeta_int(2, 3) == TruncSeries(ZZ, [1, 2, 3, 4])
    assert zeta_int(-1, 3) == TruncSeries(ZZ, [1, -1, 0, 0])


def test_zeta_int_counts_multisets():
    # S^k of a 3-point set: multisets of size k from 3 symbols
    from itertools import combinations_with_replacement

    z = zeta_int(3, 5)
    for k in range(6):
        assert z[k] == len(list(combinations_with_replacement(range(3), k)))


def test_zeta_laurent_examples():
    assert zeta_laurent(L, 2) == TruncSeries(LAURENT, [1, L, L**2])
    assert zeta_laurent(LaurentPoly(), 5) == TruncSeries.one(LAURENT, 5)
    assert zeta_laurent(1 + L, 2) == TruncSeries(LAURENT, [1, 1 + L, 1 + L + L**2])


@pytest.mark.parametrize("text", ["1+L+L^2", "-2*L^-1+3", "L^2-L", "-3", "2*L^-2-L^2+L"])
def test_zeta_laurent_matches_power_sum_route(text):
    m = LaurentPoly.parse(text)
    assert zeta_laurent(m, 8) == zeta_newton(m, 8)


@both_rings
@given(st.data())
def test_zeta_additive(ring, data):
    m, n = data.draw(elements(ring)), data.draw(elements(ring))
    assert ring.zeta(m + n, 8) == ring.zeta(m, 8) * ring.zeta(n, 8)


@both_rings
@given(st.data())
def test_zeta_negation_is_inverse(ring, data):
    m = data.draw(elements(ring))
    assert ring.zeta(-m, 8) == ring.zeta(m, 8).inv()


@given(laurent_elements, st.integers(-2, 2))
def test_zeta_lefschetz_shift(m, s):
    assert zeta_laurent(L**s * m, 8) == zeta_laurent(m, 8).substitute(L**s, 1)


@given(laurent_elements)
def test_euler_commutes_with_zeta(m):
    assert euler_spec_series(zeta_laurent(m, 8)) == zeta_int(euler_spec(m), 8)


def test_euler_spec_examples():
    assert euler_spec(L**2) == 1
    assert euler_spec(1 + L + L**2) == 3
    assert euler_spec(L**4 - L**2) == 0


@given(laurent_elements, laurent_elements)
def test_euler_spec_is_ring_map(a, b):
    assert euler_spec(a + b) == euler_spec(a) + euler_spec(b)
    assert euler_spec(a * b) == euler_spec(a) * euler_spec(b)
    assert euler_spec(LAURENT.one) == 1


def test_ring_coerce_rejects_foreign_values():
    with pytest.raises(TypeError):
        ZZ.coerce(L)
    with pytest.raises(TypeError):
        LAURENT.coerce(1.5)
