"""
Coefficient rings with a zeta function.

A ring object here bundles the ring constants, coercion, parsing/printing and
``zeta(M, r)``: the truncated generating series ``1 + S^1 M t + S^2 M t^2 + ...``
of symmetric powers.  Two rings are provided:

``ZZ``
    Python ints.  ``zeta(m, r)`` is ``(1 - t)**(-m)``.
``LAURENT``
    :class:`~powstruct.laurent.LaurentPoly`, a computable model of the
    Grothendieck ring of varieties localized at ``L``.  For
    ``M = sum(c_e * L**e)`` we use ``zeta_M(t) = prod_e (1 - L**e t)**(-c_e)``.

Both rings are stateless singletons, so they can be shared across threads.
"""

from __future__ import annotations

from math import factorial

from .errors import ParseError
from .laurent import LaurentPoly, dot_products
from .series import TruncSeries

__all__ = [
    "ZetaRing",
    "IntegerRing",
    "LaurentRing",
    "ZZ",
    "LAURENT",
    "multiset_binomial",
    "zeta_int",
    "zeta_laurent",
    "euler_spec",
    "euler_spec_series",
]


def multiset_binomial(m: int, k: int) -> int:
    """Coefficient of t**k in (1 - t)**(-m), i.e. m(m+1)...(m+k-1)/k!.

    >>> multiset_binomial(2, 3)
    4
    >>> multiset_binomial(-1, 2)
    0
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 1
    for j in range(k):
        num *= m + j
    # a product of k consecutive integers is divisible by k!
    return num // factorial(k)


class ZetaRing:
    """Ring operations on elements are the Python operators; this carries the rest."""

    name: str
    zero: object
    one: object

    def coerce(self, x):
        raise NotImplementedError

    def zeta(self, m, order: int) -> TruncSeries:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def dot(self, xs, ys):
        """sum(x * y for x, y in zip(xs, ys))."""
        acc = self.zero
        for x, y in zip(xs, ys):
            if x and y:
                acc = acc + x * y
        return acc

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return self.name


class IntegerRing(ZetaRing):
    name = "ZZ"
    zero = 0
    one = 1

    def coerce(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"not an integer: {x!r}")
        return x

    def zeta(self, m: int, order: int) -> TruncSeries:
        return zeta_int(m, order)

    def parse(self, text: str) -> int:
        try:
            return int(text.strip().replace("−", "-"))
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None


class LaurentRing(ZetaRing):
    name = "LAURENT"
    zero = LaurentPoly()
    one = LaurentPoly.constant(1)

    def coerce(self, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return LaurentPoly.constant(x)
        raise TypeError(f"not a Laurent polynomial: {x!r}")

    def zeta(self, m: LaurentPoly, order: int) -> TruncSeries:
        return zeta_laurent(m, order)

    def parse(self, text: str) -> LaurentPoly:
        return LaurentPoly.parse(text)

    def dot(self, xs, ys) -> LaurentPoly:
        pairs = [(x, y) for x, y in zip(xs, ys) if x and y]
        if sum(len(x) * len(y) for x, y in pairs) > KRONECKER_CUTOFF:
            return dot_products(pairs)
        acc: dict[int, int] = {}
        for x, y in pairs:
            for e, c in x._terms.items():
                for f, d in y._terms.items():
                    acc[e + f] = acc.get(e + f, 0) + c * d
        return LaurentPoly._wrap({e: c for e, c in acc.items() if c})


# term-product count above which packed big-integer multiplication wins
KRONECKER_CUTOFF = 300

ZZ = IntegerRing()
LAURENT = LaurentRing()


def zeta_int(m: int, order: int) -> TruncSeries:
    return TruncSeries(ZZ, [multiset_binomial(m, k) for k in range(order + 1)])


def zeta_laurent(m, order: int) -> TruncSeries:
    """Product over the terms ``c*L**e`` of ``m`` of ``(1 - L**e t)**(-c)``."""
    m = LAURENT.coerce(m)
    # raw exponent -> coefficient dicts; factor coefficients are monomials,
    # so multiplying by a factor is a sum of shifted copies
    coeffs: list[dict[int, int]] = [{} for _ in range(order + 1)]
    coeffs[0] = {0: 1}
    for e, c in m.terms():
        factor = [(i, e * i, multiset_binomial(c, i)) for i in range(order + 1)]
        factor = [f for f in factor if f[2]]
        new = []
        for k in range(order + 1):
            acc: dict[int, int] = {}
            for i, shift, b in factor:
                if i > k:
                    break
                for f, d in coeffs[k - i].items():
                    acc[f + shift] = acc.get(f + shift, 0) + b * d
            new.append({f: d for f, d in acc.items() if d})
        coeffs = new
    return TruncSeries(LAURENT, [LaurentPoly(d) for d in coeffs])


def euler_spec(m) -> int:
    """Euler characteristic specialization, the ring map sending L to 1."""
    if isinstance(m, int):
        return m
    return sum(c for _, c in m.terms())


def euler_spec_series(a: TruncSeries) -> TruncSeries:
    return a.map(euler_spec, ZZ)
