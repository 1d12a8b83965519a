"""Closed-form constants of stratum classes on the minimal compactification.

Classes are carried as labels only: a subset a of {1..g} stands for the
pushdown of the monomial l_a, and the operations here compute exact rational
coefficients against these labels.  The i = 1 parity discrepancy between the
two derivation routes is surfaced as a first-class report, never resolved
silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import zeta_negative_odd

__all__ = [
    "SatakeClassExpression",
    "p_rank_constant",
    "stratum_constant",
    "leading_stratum_constants",
    "ConsistencyReport",
    "StratumComparison",
    "consistency_report",
    "RecursionReport",
    "recursion_check",
    "stratum_table",
]


@dataclass(frozen=True)
class SatakeClassExpression:
    """A rational multiple of one pushed-down class l_a."""

    stratum_index: int
    coefficient: Fraction
    label: tuple[int, ...]

    def as_payload(self) -> dict:
        return {
            "i": self.stratum_index,
            "coefficient": str(self.coefficient),
            "label": list(self.label),
        }


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def p_rank_constant(g: int, p: int) -> int:
    """The coefficient (p - 1)(p^2 - 1)...(p^g - 1) of the p-rank-zero locus
    against the label {g}, as an exact integer."""
    if g < 1:
        raise ValueError(f"p_rank_constant requires g >= 1, got {g}")
    if not _is_prime(p):
        raise ValueError(f"p_rank_constant requires a prime p, got {p}")
    value = 1
    for j in range(1, g + 1):
        value *= p ** j - 1
    return value


def stratum_constant(g: int, i: int) -> SatakeClassExpression:
    """The closed-form family: coefficient (-1)^i / prod_{j=1}^{i} zeta(2j-1-2g)
    against the label {g-i+1, ..., g}."""
    if g < 1:
        raise ValueError(f"stratum_constant requires g >= 1, got {g}")
    if not 0 <= i <= g:
        raise ValueError(f"stratum index must satisfy 0 <= i <= g, got {i}")
    denominator = Fraction(1)
    for j in range(1, i + 1):
        # zeta(2j - 1 - 2g) = zeta(1 - 2(g - j + 1))
        denominator *= zeta_negative_odd(g - j + 1)
    coefficient = Fraction((-1) ** i) / denominator
    return SatakeClassExpression(i, coefficient, tuple(range(g - i + 1, g + 1)))


def leading_stratum_constants(g: int) -> tuple[SatakeClassExpression, ...]:
    """The constants for the two deepest strata reachable from the divisor
    route: (-1)^g / zeta(1-2g) at codimension g, and
    1 / (zeta(1-2g) zeta(3-2g)) one stratum further (only for g >= 2)."""
    if g < 1:
        raise ValueError(f"leading_stratum_constants requires g >= 1, got {g}")
    first = SatakeClassExpression(1, Fraction((-1) ** g) / zeta_negative_odd(g), (g,))
    if g == 1:
        return (first,)
    second = SatakeClassExpression(
        2,
        Fraction(1) / (zeta_negative_odd(g) * zeta_negative_odd(g - 1)),
        (g - 1, g),
    )
    return (first, second)


@dataclass(frozen=True)
class StratumComparison:
    stratum_index: int
    closed_form: Fraction
    divisor_route: Fraction
    equal: bool
    factor: Fraction

    def as_payload(self) -> dict:
        return {
            "i": self.stratum_index,
            "closed_form": str(self.closed_form),
            "divisor_route": str(self.divisor_route),
            "equal": self.equal,
            "factor": str(self.factor),
        }


@dataclass(frozen=True)
class ConsistencyReport:
    """Exact comparison of the closed-form family against the divisor-route
    pair; at i = 1 the two routes' signs disagree exactly when g is even."""

    genus: int
    comparisons: tuple[StratumComparison, ...]

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.comparisons)

    def as_payload(self) -> dict:
        return {
            "g": self.genus,
            "all_equal": self.all_equal,
            "comparisons": [c.as_payload() for c in self.comparisons],
        }


def consistency_report(g: int) -> ConsistencyReport:
    if g < 2:
        raise ValueError(f"consistency_report requires g >= 2, got {g}")
    divisor = leading_stratum_constants(g)
    comparisons = []
    for expr in divisor:
        closed = stratum_constant(g, expr.stratum_index).coefficient
        comparisons.append(
            StratumComparison(
                stratum_index=expr.stratum_index,
                closed_form=closed,
                divisor_route=expr.coefficient,
                equal=closed == expr.coefficient,
                factor=closed / expr.coefficient,
            )
        )
    return ConsistencyReport(genus=g, comparisons=tuple(comparisons))


@dataclass(frozen=True)
class RecursionReport:
    """One-step descent check: each stratum constant is the previous one
    times -1 / zeta(2i-1-2g)."""

    genus: int
    ok: bool
    steps: tuple[tuple[int, bool], ...]

    def as_payload(self) -> dict:
        return {
            "g": self.genus,
            "ok": self.ok,
            "steps": [{"i": i, "ok": ok} for i, ok in self.steps],
        }


def recursion_check(g: int) -> RecursionReport:
    if g < 1:
        raise ValueError(f"recursion_check requires g >= 1, got {g}")
    steps = []
    for i in range(1, g + 1):
        expected = stratum_constant(g, i - 1).coefficient * Fraction(-1) / zeta_negative_odd(g - i + 1)
        steps.append((i, stratum_constant(g, i).coefficient == expected))
    ok = all(flag for _, flag in steps)
    return RecursionReport(genus=g, ok=ok, steps=tuple(steps))


def stratum_table(g: int, i: int | None = None) -> list[dict]:
    """Rows (g, i, coefficient, label, matches_thm34) for the closed-form
    family; matches_thm34 compares against the divisor route where one exists
    (i = 1, 2) and is null elsewhere."""
    if g < 1:
        raise ValueError(f"stratum_table requires g >= 1, got {g}")
    if i is not None and not 0 <= i <= g:
        raise ValueError(f"stratum index must satisfy 0 <= i <= g, got {i}")
    divisor = {expr.stratum_index: expr.coefficient for expr in leading_stratum_constants(g)}
    rows = []
    indices = range(g + 1) if i is None else (i,)
    for idx in indices:
        expr = stratum_constant(g, idx)
        matches = None
        if idx in divisor:
            matches = expr.coefficient == divisor[idx]
        rows.append(
            {
                "g": g,
                "i": idx,
                "coefficient": str(expr.coefficient),
                "label": list(expr.label),
                "matches_thm34": matches,
            }
        )
    return rows
