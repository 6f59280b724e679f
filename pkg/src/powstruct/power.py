"""
Powers ``A(t)**M`` of series with unit constant term, exponent in the coefficient ring.

Every truncated series ``A(t) = 1 + A_1 t + ... + A_r t**r`` factors uniquely as

    A(t) = zeta_{E_1}(t) * zeta_{E_2}(t**2) * ... * zeta_{E_r}(t**r)   (mod t**(r+1))

with exponents ``E_i`` in the ring (``E_1 = A_1``).  The power is then defined
factor by factor,

    A(t)**M = zeta_{M E_1}(t) * zeta_{M E_2}(t**2) * ... * zeta_{M E_r}(t**r),

which agrees with the ordinary power for ``M`` a natural number and is
additive and multiplicative in ``M``.

    >>> from powstruct.laurent import L
    >>> from powstruct.rings import LAURENT
    >>> from powstruct.series import TruncSeries
    >>> str(power(TruncSeries.from_tail(LAURENT, [1], 2), L**2)[2])
    '-L^2+L^4'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import NotInvertibleError, OrderMismatchError
from .series import TruncSeries

__all__ = ["ZetaDecomposition", "decompose", "recompose", "power", "sym_pow"]


@dataclass(frozen=True)
class ZetaDecomposition:
    ring: Any
    order: int
    exponents: tuple

    def __post_init__(self):
        if len(self.exponents) != self.order:
            raise ValueError(f"need {self.order} exponents, got {len(self.exponents)}")

    def __getitem__(self, i: int):
        """Exponent of the factor in ``t**i`` (1-based)."""
        if not 1 <= i <= self.order:
            raise IndexError(i)
        return self.exponents[i - 1]

    def __add__(self, other: ZetaDecomposition) -> ZetaDecomposition:
        if self.ring != other.ring or self.order != other.order:
            raise OrderMismatchError("decompositions of different shape")
        return ZetaDecomposition(
            self.ring, self.order, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def scale(self, m) -> ZetaDecomposition:
        m = self.ring.coerce(m)
        return ZetaDecomposition(self.ring, self.order, tuple(m * e for e in self.exponents))


def _zeta_at_power(ring, m, i: int, order: int) -> TruncSeries:
    """zeta_m(t**i) truncated at ``order``."""
    return ring.zeta(m, order // i).substitute(ring.one, i, order=order)


def decompose(a: TruncSeries) -> ZetaDecomposition:
    """Peel off ``zeta_{E_i}(t**i)`` factors for i = 1, 2, ..., r in that order."""
    ring = a.ring
    if a[0] != ring.one:
        raise NotInvertibleError(f"constant term must be 1, got {ring.format(a[0])}")
    r = a.order
    rest = a
    exponents = []
    for i in range(1, r + 1):
        e = rest[i]
        exponents.append(e)
        if e:
            rest = rest * _zeta_at_power(ring, e, i, r).inv()
    return ZetaDecomposition(ring, r, tuple(exponents))


def recompose(d: ZetaDecomposition) -> TruncSeries:
    ring = d.ring
    out = TruncSeries.one(ring, d.order)
    for i, e in enumerate(d.exponents, start=1):
        if e:
            out = out * _zeta_at_power(ring, e, i, d.order)
    return out


def power(a: TruncSeries, m) -> TruncSeries:
    """``a(t)**m`` for ``m`` in the coefficient ring of ``a``."""
    return recompose(decompose(a).scale(m))


def sym_pow(ring, m, k: int):
    """k-th symmetric power of ``m``: the t**k coefficient of zeta_m."""
    return ring.zeta(ring.coerce(m), k)[k]
