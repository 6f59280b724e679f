"""
Brute-force counting oracles for powers of integer series.

If ``M`` is a set of ``m`` points and ``A_i`` a set of ``a_i`` points, the
t**k coefficient of ``A(t)**M`` counts configurations: a multiset ``K`` of
points of ``M`` of total multiplicity ``k`` together with a label in
``A_s`` for every point of multiplicity ``s``.  Grouping configurations by
their multiplicity pattern gives the falling-factorial formula

    sum over partitions (k_1, k_2, ...) of k of
        m (m-1) ... (m - |k| + 1) * prod a_i**k_i / prod k_i!

These functions are independent of :mod:`powstruct.power` and exist to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .errors import InvariantError
from .rings import ZZ
from .series import TruncSeries

__all__ = [
    "Partition",
    "FiniteModel",
    "partitions",
    "falling_factorial",
    "falling_factorial_power",
    "config_count",
    "config_series",
    "model_from_series",
    "ENUMERATION_CUTOFF",
]

# literal enumeration runs only for m, k up to this bound
ENUMERATION_CUTOFF = 6


class Partition(tuple):
    """Multiplicity vector ``(k_1, ..., k_n)``: ``k_i`` parts equal to ``i``."""

    @property
    def weight(self) -> int:
        return sum(i * k for i, k in enumerate(self, start=1))

    @property
    def length(self) -> int:
        """Number of parts, written |k| in the counting formulas."""
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"


def _parts(n: int, largest: int):
    if n == 0:
        yield []
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _parts(n - p, p):
            yield [p] + rest


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` as multiplicity vectors of length ``n``.

    >>> partitions(3)
    [Partition(0, 0, 1), Partition(1, 1, 0), Partition(3, 0, 0)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for parts in _parts(n, n):
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        out.append(Partition(mult))
    return out


def falling_factorial(m: int, j: int) -> int:
    return prod(m - i for i in range(j))


def falling_factorial_power(a: TruncSeries, m: int) -> TruncSeries:
    """``a(t)**m`` over the integers via the partition-indexed falling-factorial formula."""
    if a.ring != ZZ:
        raise TypeError("falling_factorial_power works over ZZ only")
    if a[0] != 1:
        raise ValueError("constant term must be 1")
    out = [1]
    for k in range(1, a.order + 1):
        total = 0
        for part in partitions(k):
            num = falling_factorial(m, part.length) * prod(
                a[i] ** ki for i, ki in enumerate(part, start=1)
            )
            den = prod(factorial(ki) for ki in part)
            q, rem = divmod(num, den)
            if rem:
                raise InvariantError(f"inexact division {num}/{den} for partition {part}")
            total += q
        out.append(total)
    return TruncSeries(ZZ, out)


@dataclass(frozen=True)
class FiniteModel:
    """Point counts: ``m`` for M and ``a[i-1]`` for A_i; A_i is empty past ``len(a)``."""

    m: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.m < 0 or any(x < 0 for x in self.a):
            raise ValueError("point counts must be nonnegative")

    def label_count(self, s: int) -> int:
        if s == 0:
            return 1
        return self.a[s - 1] if s <= len(self.a) else 0


def _config_count_formula(model: FiniteModel, k: int) -> int:
    total = 0
    for part in partitions(k):
        j = part.length
        if j > model.m:
            continue
        # ways to pick which points carry which multiplicity
        ways = factorial(model.m) // (
            factorial(model.m - j) * prod(factorial(ki) for ki in part)
        )
        total += ways * prod(model.label_count(i) ** ki for i, ki in enumerate(part, start=1))
    return total


def _compositions(k: int, m: int):
    # weak compositions of k into m ordered parts
    if m == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, m - 1):
            yield (first,) + rest


def _config_count_enumerate(model: FiniteModel, k: int) -> int:
    # one multiplicity per point of M, then one label per point of positive multiplicity
    return sum(
        prod(model.label_count(s) for s in mults) for mults in _compositions(k, model.m)
    )


def config_count(model: FiniteModel, k: int) -> int:
    """Number of configurations of total multiplicity ``k`` in a finite model."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    value = _config_count_formula(model, k)
    if model.m <= ENUMERATION_CUTOFF and k <= ENUMERATION_CUTOFF:
        brute = _config_count_enumerate(model, k)
        if brute != value:
            raise InvariantError(f"enumeration gives {brute}, formula gives {value}")
    return value


def config_series(model: FiniteModel, order: int | None = None) -> TruncSeries:
    order = len(model.a) if order is None else order
    return TruncSeries(ZZ, [config_count(model, k) for k in range(order + 1)])


def model_from_series(a: TruncSeries, m: int) -> FiniteModel:
    """Finite model whose label counts are the (nonnegative) coefficients of ``a``."""
    return FiniteModel(m, tuple(a.coeffs[1:]))
