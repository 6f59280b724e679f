"""
Sparse Laurent polynomials in the Lefschetz class ``L`` with integer coefficients.

    >>> p = LaurentPoly.parse("1+L+L^2")
    >>> str(p * p)
    '1+2*L+3*L^2+2*L^3+L^4'
    >>> str(LaurentPoly.parse("-2*L^-1 + 3"))
    '-2*L^-1+3'
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import ParseError

__all__ = ["LaurentPoly", "L"]


class LaurentPoly:
    """An element ``sum(c_e * L**e)`` of Z[L, 1/L].

    Stored as a map exponent -> nonzero coefficient, so equality is map
    equality.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c}) if c else cls()

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c}) if c else cls()

    @classmethod
    def _wrap(cls, clean: dict[int, int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs by ascending exponent."""
        return sorted(self._terms.items())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exp(self) -> int:
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        return max(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            t = self._terms
            if not t:
                self._hash = hash(0)
            elif len(t) == 1 and 0 in t:
                self._hash = hash(t[0])
            else:
                self._hash = hash(frozenset(t.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.constant(x)
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")

    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                del out[e]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((f, d),) = b.items()
            return LaurentPoly._wrap({e + f: c * d for e, c in a.items()})
        out: dict[int, int] = {}
        for e, c in a.items():
            for f, d in b.items():
                out[e + f] = out.get(e + f, 0) + c * d
        return LaurentPoly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError(f"{self} is not a unit of Z[L, 1/L]")
            ((e, c),) = self._terms.items()
            return LaurentPoly.monomial(e * n, 1 if n % 2 == 0 else c)
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: int) -> int:
        """Value at ``L = x`` for a nonzero integer ``x``; only ``x = +-1`` stays integral for negative exponents."""
        if any(e < 0 for e in self._terms) and x not in (1, -1):
            raise ValueError("negative exponents only evaluate integrally at L = +-1")
        # for x = +-1, x**e == x**abs(e)
        return sum(c * x ** abs(e) if e < 0 else c * x**e for e, c in self._terms.items())

    # -- text form --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "L" if e == 1 else f"L^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text[0] == "+" else text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(
        r"(?P<sign>[+-])?"
        r"(?:(?P<coef>\d+)(?:\*?L(?:\^(?P<exp>[+-]?\d+))?)?"
        r"|L(?:\^(?P<exp2>[+-]?\d+))?)"
    )

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse e.g. ``"1+L+L^2"`` or ``"-2*L^-1+3"``; whitespace is ignored."""
        s = re.sub(r"\s+", "", text).replace("−", "-")
        if not s:
            raise ParseError("empty Laurent polynomial")
        pos = 0
        terms = []
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos or (pos > 0 and m.group("sign") is None):
                raise ParseError(f"cannot parse {text!r} at position {pos}")
            sign = -1 if m.group("sign") == "-" else 1
            coef = m.group("coef")
            if coef is not None:
                has_l = "L" in m.group(0)
                e = int(m.group("exp")) if m.group("exp") is not None else (1 if has_l else 0)
                terms.append((e, sign * int(coef)))
            else:
                e = int(m.group("exp2")) if m.group("exp2") is not None else 1
                terms.append((e, sign))
            pos = m.end()
        return cls(terms)


L = LaurentPoly.monomial(1)


# -- Kronecker substitution -----------------------------------------------------
#
# A polynomial with |coefficients| < 2**(8*w - 1) is packed into one integer by
# evaluating at X = 2**(8*w); products and sums then run on Python ints.  Each
# digit is stored shifted by H = X/2 so it is nonnegative and byte-aligned.


def _norm1(p: LaurentPoly) -> int:
    return sum(abs(c) for c in p._terms.values())


def _pack(p: LaurentPoly, base: int, width: int) -> int:
    t = p._terms
    n = max(t) - base + 1
    half = 1 << (8 * width - 1)
    digits = b"".join((t.get(base + i, 0) + half).to_bytes(width, "little") for i in range(n))
    bias = (b"\x00" * (width - 1) + b"\x80") * n
    return int.from_bytes(digits, "little") - int.from_bytes(bias, "little")


def _unpack(v: int, base: int, n: int, width: int) -> dict[int, int]:
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * n, "little")
    raw = (v + bias).to_bytes(n * width, "little")
    out = {}
    for i in range(n):
        c = int.from_bytes(raw[i * width : (i + 1) * width], "little") - half
        if c:
            out[base + i] = c
    return out


def dot_products(pairs: list[tuple[LaurentPoly, LaurentPoly]]) -> LaurentPoly:
    """sum(x * y for x, y in pairs) through a single packed-integer accumulation."""
    pairs = [(x, y) for x, y in pairs if x and y]
    if not pairs:
        return LaurentPoly()
    bound = sum(_norm1(x) * _norm1(y) for x, y in pairs)
    width = (bound.bit_length() + 2 + 7) // 8
    lo = min(x.min_exp + y.min_exp for x, y in pairs)
    hi = max(x.max_exp + y.max_exp for x, y in pairs)
    bits = 8 * width
    total = 0
    for x, y in pairs:
        xb, yb = x.min_exp, y.min_exp
        prod_ = _pack(x, xb, width) * _pack(y, yb, width)
        total += prod_ << (bits * (xb + yb - lo))
    return LaurentPoly._wrap(_unpack(total, lo, hi - lo + 1, width))
