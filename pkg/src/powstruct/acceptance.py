"""
Self-verification suite.

Each ``criterion_*`` function runs one group of randomized or golden checks and
returns a :class:`CheckResult`.  :func:`run_all` drives them for the CLI's
``selftest`` command; ``tests/test_acceptance.py`` runs them at their default
sizes under pytest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .hilbert import check_hilb_forms
from .laurent import L, LaurentPoly
from .oracles import config_series, falling_factorial_power, model_from_series, partitions
from .power import decompose, power, recompose
from .rings import LAURENT, ZZ, euler_spec, euler_spec_series
from .series import TruncSeries

__all__ = [
    "CheckResult",
    "random_element",
    "random_series",
    "CRITERIA",
    "run_all",
]

EXP_RANGE = (-2, 2)
COEFF_RANGE = (-3, 3)


@dataclass
class CheckResult:
    number: int
    title: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def expect(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 10:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number}: {self.title} ({self.checked} checks"
        if self.failures:
            text += f", first failure: {self.failures[0]}"
        return text + ")"


def random_element(rng: random.Random, ring):
    lo, hi = COEFF_RANGE
    if ring is ZZ:
        return rng.randint(lo, hi)
    return LaurentPoly({e: rng.randint(lo, hi) for e in range(EXP_RANGE[0], EXP_RANGE[1] + 1)})


def random_series(rng: random.Random, ring, order: int) -> TruncSeries:
    return TruncSeries(ring, [ring.one] + [random_element(rng, ring) for _ in range(order)])


def criterion_golden(order: int = 2, **_) -> CheckResult:
    res = CheckResult(1, "coefficient of t^2 in (1+t)^(L^2) is L^4-L^2")
    order = max(order, 2)
    c2 = power(TruncSeries.from_tail(LAURENT, [1], order), L**2)[2]
    res.expect(c2 == L**4 - L**2, f"got {c2}")
    res.expect(c2 != 2 * L**4 - 2 * L**2, "matched the lambda-ring value 2L^4-2L^2")
    return res


def criterion_zeta_normalization(order: int = 8, seed: int = 0, **_) -> CheckResult:
    res = CheckResult(2, "(1+t+t^2+...)^M equals zeta_M")
    rng = random.Random(seed)
    for _ in range(20):
        m = random_element(rng, LAURENT)
        got = power(TruncSeries.geometric(LAURENT, order), m)
        res.expect(got == LAURENT.zeta(m, order), f"M={m}")
    for m in range(-3, 4):
        for ring in (ZZ, LAURENT):
            m_r = ring.coerce(m)
            got = power(TruncSeries.geometric(ring, order), m_r)
            res.expect(got == ring.zeta(m_r, order), f"M={m} over {ring!r}")
    return res


def criterion_properties(order: int = 8, cases: int = 100, seed: int = 0, **_) -> CheckResult:
    res = CheckResult(3, "power-operation axioms over ZZ and Laurent")
    rng = random.Random(seed + 3)
    for ring in (ZZ, LAURENT):
        one = TruncSeries.one(ring, order)
        for case in range(cases):
            a = random_series(rng, ring, order)
            b = random_series(rng, ring, order)
            m = random_element(rng, ring)
            n = random_element(rng, ring)
            tag = f"{ring!r} case {case}"
            res.expect(power(a, ring.zero) == one, f"A^0 {tag}")
            res.expect(power(a, ring.one) == a, f"A^1 {tag}")
            res.expect(power(a * b, m) == power(a, m) * power(b, m), f"(AB)^M {tag}")
            res.expect(power(a, m + n) == power(a, m) * power(a, n), f"A^(M+N) {tag}")
            res.expect(power(a, m * n) == power(power(a, n), m), f"A^(MN) {tag}")
    return res


def criterion_four_way(cases: int = 20, seed: int = 0, **_) -> CheckResult:
    res = CheckResult(4, "integer power = iterated product = falling factorial = configuration count")
    rng = random.Random(seed + 4)
    order = 6  # fixed: the literal enumeration is capped at multiplicity 6
    for case in range(cases):
        a = TruncSeries(ZZ, [1] + [rng.randint(0, 4) for _ in range(order)])
        for m in range(7):
            generic = power(a, m)
            iterated = TruncSeries.one(ZZ, order)
            for _ in range(m):
                iterated = iterated * a
            falling = falling_factorial_power(a, m)
            configs = config_series(model_from_series(a, m), order)
            ok = generic == iterated == falling == configs
            res.expect(ok, f"case {case} m={m}: {generic.coeffs} {iterated.coeffs} "
                           f"{falling.coeffs} {configs.coeffs}")
    return res


def criterion_euler(order: int = 8, cases: int = 100, seed: int = 0, **_) -> CheckResult:
    res = CheckResult(5, "Euler specialization commutes with powers")
    rng = random.Random(seed + 5)
    for case in range(cases):
        a = random_series(rng, LAURENT, order)
        m = random_element(rng, LAURENT)
        lhs = euler_spec_series(power(a, m))
        rhs = power(euler_spec_series(a), euler_spec(m))
        res.expect(lhs == rhs, f"case {case}")
    return res


def criterion_substitution(order: int = 8, cases: int = 100, seed: int = 0, **_) -> CheckResult:
    res = CheckResult(6, "substitutions t -> L^s t and t -> t^s commute with powers")
    rng = random.Random(seed + 6)
    for case in range(cases):
        s = rng.randint(-2, 2)
        a = random_series(rng, LAURENT, order)
        m = random_element(rng, LAURENT)
        lhs = power(a.substitute(L**s, 1), m)
        rhs = power(a, m).substitute(L**s, 1)
        res.expect(lhs == rhs, f"L^s case {case} s={s}")
        lhs = LAURENT.zeta(L**s * m, order)
        rhs = LAURENT.zeta(m, order).substitute(L**s, 1)
        res.expect(lhs == rhs, f"zeta L^s case {case} s={s}")
    for ring in (ZZ, LAURENT):
        for case in range(cases):
            s = rng.randint(1, 3)
            a = random_series(rng, ring, order)
            m = random_element(rng, ring)
            lhs = power(a.substitute(1, s), m)
            rhs = power(a, m).substitute(1, s)
            res.expect(lhs == rhs, f"t^s {ring!r} case {case} s={s}")
    return res


HILBERT_SURFACES = {
    "C^2": L**2,
    "P^2": 1 + L + L**2,
    "P^1xP^1": (1 + L) ** 2,
}


def criterion_hilbert(**_) -> CheckResult:
    res = CheckResult(7, "Hilbert scheme series: all forms agree, Euler checks")
    for name, cls in HILBERT_SURFACES.items():
        try:
            check_hilb_forms(cls, 6)
            res.expect(True, name)
        except Exception as exc:
            res.expect(False, f"{name}: {exc}")
    # at L = 1 the series for C^2 counts partitions
    plane = euler_spec_series(check_hilb_forms(L**2, 5))
    res.expect(plane.coeffs == (1, 1, 2, 3, 5, 7), f"C^2 at L=1: {plane.coeffs}")
    res.expect(
        plane.coeffs == tuple(len(partitions(n)) for n in range(6)), "C^2 vs partition count"
    )
    p2 = euler_spec_series(check_hilb_forms(1 + L + L**2, 5))
    res.expect(p2.coeffs == (1, 3, 9, 22, 51, 108), f"P^2 at L=1: {p2.coeffs}")
    return res


def criterion_decomposition(order: int = 8, cases: int = 100, seed: int = 0, **_) -> CheckResult:
    res = CheckResult(8, "zeta decomposition round-trip and additivity")
    rng = random.Random(seed + 8)
    for ring in (ZZ, LAURENT):
        for case in range(cases):
            a = random_series(rng, ring, order)
            b = random_series(rng, ring, order)
            da, db = decompose(a), decompose(b)
            res.expect(recompose(da) == a, f"round-trip {ring!r} case {case}")
            res.expect(decompose(a * b) == da + db, f"additivity {ring!r} case {case}")
    return res


CRITERIA: list[Callable[..., CheckResult]] = [
    criterion_golden,
    criterion_zeta_normalization,
    criterion_properties,
    criterion_four_way,
    criterion_euler,
    criterion_substitution,
    criterion_hilbert,
    criterion_decomposition,
]


def run_all(order: int = 8, cases: int = 100, seed: int = 0) -> list[CheckResult]:
    """Run every criterion; ``order`` and ``cases`` apply to the randomized property groups."""
    out = []
    for crit in CRITERIA:
        if crit is criterion_four_way:
            out.append(crit(cases=max(1, cases // 5), seed=seed))
        else:
            out.append(crit(order=order, cases=cases, seed=seed))
    return out
