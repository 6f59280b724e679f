"""
Power series truncated at a fixed order.

A :class:`TruncSeries` holds the coefficients ``a_0, ..., a_r`` of

    a(t) = a_0 + a_1*t + ... + a_r*t**r  (mod t**(r+1))

over a coefficient ring (see :mod:`powstruct.rings`).  The order ``r`` is part
of the value: two series combine only if their orders agree, and there is no
implicit re-truncation.  Coefficients beyond ``r`` are unknown, not zero.

    >>> from powstruct.rings import ZZ
    >>> a = TruncSeries(ZZ, [1, 1, 0, 0])
    >>> b = TruncSeries(ZZ, [1, -1, 0, 0])
    >>> (a * b).coeffs
    (1, 0, -1, 0)
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence

from .errors import InvalidSubstitutionError, NotInvertibleError, OrderMismatchError

__all__ = ["TruncSeries"]


class TruncSeries:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Iterable[Any]):
        coeffs = tuple(ring.coerce(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def one(cls, ring, order: int) -> TruncSeries:
        return cls(ring, [ring.one] + [ring.zero] * order)

    @classmethod
    def geometric(cls, ring, order: int) -> TruncSeries:
        """1 + t + t**2 + ... + t**order."""
        return cls(ring, [ring.one] * (order + 1))

    @classmethod
    def from_tail(cls, ring, tail: Sequence[Any], order: int) -> TruncSeries:
        """Series ``1 + tail[0]*t + tail[1]*t**2 + ...`` padded with zeros to ``order``."""
        if len(tail) > order:
            raise OrderMismatchError(
                f"{len(tail)} coefficients given for a series of order {order}"
            )
        tail = list(tail) + [ring.zero] * (order - len(tail))
        return cls(ring, [ring.one] + tail)

    # -- basic protocol ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(self.ring.format(c) for c in self.coeffs)
        return f"TruncSeries({self.ring!r}, [{body}])"

    def _check(self, other: TruncSeries) -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if self.ring != other.ring:
            raise TypeError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries(self.ring, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.ring, (-a for a in self.coeffs))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        dot = self.ring.dot
        return TruncSeries(self.ring, (dot(a[: k + 1], b[k::-1]) for k in range(len(a))))

    def scale(self, c) -> TruncSeries:
        return TruncSeries(self.ring, (c * a for a in self.coeffs))

    def inv(self) -> TruncSeries:
        """Multiplicative inverse of a series with constant term 1."""
        a = self.coeffs
        if a[0] != self.ring.one:
            raise NotInvertibleError(
                f"constant term must be 1, got {self.ring.format(a[0])}"
            )
        dot = self.ring.dot
        b = [self.ring.one]
        for k in range(1, len(a)):
            # b_k = -sum_{i=1..k} a_i b_{k-i}
            b.append(-dot(a[1 : k + 1], b[k - 1 :: -1]))
        return TruncSeries(self.ring, b)

    def __pow__(self, n: int) -> TruncSeries:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = TruncSeries.one(self.ring, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, c, s: int, order: int | None = None) -> TruncSeries:
        """Return ``a(c * t**s)``.

        The result has order ``order`` (default: the order of ``self``).  A
        larger target order is allowed as long as every coefficient it needs
        is known, i.e. ``order // s <= self.order``.
        """
        if s < 1:
            raise InvalidSubstitutionError(f"substitution t -> c*t^s needs s >= 1, got {s}")
        if order is None:
            order = self.order
        if order // s > self.order:
            raise OrderMismatchError(
                f"cannot reach order {order} from a series of order {self.order} with s={s}"
            )
        ring = self.ring
        c = ring.coerce(c)
        out = [ring.zero] * (order + 1)
        power = ring.one
        for i in range(order // s + 1):
            out[s * i] = self.coeffs[i] * power
            power = power * c
        return TruncSeries(ring, out)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise OrderMismatchError(f"cannot extend order {self.order} to {order}")
        return TruncSeries(self.ring, self.coeffs[: order + 1])

    def map(self, fn: Callable[[Any], Any], ring) -> TruncSeries:
        """Apply a coefficient map landing in ``ring``."""
        return TruncSeries(ring, (fn(a) for a in self.coeffs))
