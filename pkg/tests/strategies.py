import pytest
from hypothesis import strategies as st

from powstruct.laurent import LaurentPoly
from powstruct.rings import LAURENT, ZZ
from powstruct.series import TruncSeries

small_ints = st.integers(-3, 3)

# exponents in [-2, 2], coefficients in [-3, 3]
laurent_elements = st.dictionaries(st.integers(-2, 2), small_ints, max_size=5).map(LaurentPoly)


def elements(ring):
    return small_ints if ring is ZZ else laurent_elements


def series(ring, order=8):
    return st.lists(elements(ring), min_size=order, max_size=order).map(
        lambda tail: TruncSeries(ring, [ring.one] + tail)
    )


both_rings = pytest.mark.parametrize("ring", [ZZ, LAURENT], ids=["ZZ", "LAURENT"])
