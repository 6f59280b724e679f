"""
Generating series of Hilbert schemes of points on a surface.

For a smooth quasi-projective surface with class ``M`` the series
``sum [Hilb^n M] t**n`` can be written in four equivalent ways:

1. ``prod_k zeta_{M/L}((L t)**k)``
2. ``prod_k zeta_M(L**(k-1) t**k)``
3. ``(prod_k 1/(1 - L**(k-1) t**k)) ** M``
4. ``prod_k (1/(1 - t**k)) ** (L**(k-1) M)``

and coefficientwise as a sum over partitions of products of symmetric powers.
Nothing here checks that ``M`` is really the class of a surface; the identities
are ring identities and hold for every Laurent polynomial, but only genuine
surface classes give classes of Hilbert schemes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError
from .laurent import L, LaurentPoly
from .oracles import partitions
from .power import power, sym_pow
from .rings import LAURENT
from .series import TruncSeries

__all__ = [
    "SurfaceClass",
    "hilb_series_product",
    "hilb_series_zeta_shifted",
    "hilb_series_power",
    "hilb_series_power_base",
    "hilb_series_power_factors",
    "hilb_direct_sum",
    "hilb_series_direct",
    "hilb_forms",
    "check_hilb_forms",
]


@dataclass(frozen=True)
class SurfaceClass:
    cls: LaurentPoly

    def __post_init__(self):
        object.__setattr__(self, "cls", LAURENT.coerce(self.cls))

    @classmethod
    def parse(cls, text: str) -> SurfaceClass:
        return cls(LaurentPoly.parse(text))


def _as_class(s) -> LaurentPoly:
    return s.cls if isinstance(s, SurfaceClass) else LAURENT.coerce(s)


def hilb_series_product(s, order: int) -> TruncSeries:
    """Form 1: ``prod_{k=1..r} zeta_{M/L}((L t)**k)``; factor k starts at t**k."""
    m = _as_class(s)
    shifted = L ** -1 * m
    out = TruncSeries.one(LAURENT, order)
    for k in range(1, order + 1):
        out = out * LAURENT.zeta(shifted, order // k).substitute(L**k, k, order=order)
    return out


def hilb_series_zeta_shifted(s, order: int) -> TruncSeries:
    """Form 2: ``prod_{k=1..r} zeta_M(L**(k-1) t**k)``."""
    m = _as_class(s)
    out = TruncSeries.one(LAURENT, order)
    for k in range(1, order + 1):
        out = out * LAURENT.zeta(m, order // k).substitute(L ** (k - 1), k, order=order)
    return out


def hilb_series_power_base(s, order: int) -> TruncSeries:
    """Form 3: ``(prod_k 1/(1 - L**(k-1) t**k)) ** M``."""
    m = _as_class(s)
    base = TruncSeries.one(LAURENT, order)
    for k in range(1, order + 1):
        # 1/(1 - c t^k) is the geometric series substituted at t -> c t^k
        base = base * TruncSeries.geometric(LAURENT, order // k).substitute(
            L ** (k - 1), k, order=order
        )
    return power(base, m)


def hilb_series_power_factors(s, order: int) -> TruncSeries:
    """Form 4: ``prod_k (1/(1 - t**k)) ** (L**(k-1) M)``."""
    m = _as_class(s)
    out = TruncSeries.one(LAURENT, order)
    for k in range(1, order + 1):
        base = TruncSeries.geometric(LAURENT, order // k).substitute(1, k, order=order)
        out = out * power(base, L ** (k - 1) * m)
    return out


def hilb_series_power(s, order: int) -> TruncSeries:
    """Both power-structure forms (3 and 4), checked against each other."""
    third = hilb_series_power_base(s, order)
    fourth = hilb_series_power_factors(s, order)
    if third != fourth:
        raise InvariantError("power-structure forms of the Hilbert series disagree")
    return third


def hilb_direct_sum(s, n: int) -> LaurentPoly:
    """``[Hilb^n M]`` as a sum over partitions of products of symmetric powers."""
    m = _as_class(s)
    sym = [sym_pow(LAURENT, m, k) for k in range(n + 1)]
    total = LAURENT.zero
    for part in partitions(n):
        term = L ** (n - part.length)
        for ki in part:
            if ki:
                term = term * sym[ki]
        total = total + term
    return total


def hilb_series_direct(s, order: int) -> TruncSeries:
    return TruncSeries(LAURENT, [hilb_direct_sum(s, n) for n in range(order + 1)])


def hilb_forms(s, order: int) -> dict[str, TruncSeries]:
    return {
        "product": hilb_series_product(s, order),
        "zeta_shifted": hilb_series_zeta_shifted(s, order),
        "power_base": hilb_series_power_base(s, order),
        "power_factors": hilb_series_power_factors(s, order),
        "direct_sum": hilb_series_direct(s, order),
    }


def check_hilb_forms(s, order: int) -> TruncSeries:
    """Compute every form, raise :class:`InvariantError` unless all agree."""
    forms = hilb_forms(s, order)
    ref = forms["product"]
    bad = [name for name, f in forms.items() if f != ref]
    if bad:
        raise InvariantError(f"Hilbert series forms disagree with the product form: {bad}")
    return ref
