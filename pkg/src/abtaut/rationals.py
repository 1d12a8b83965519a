"""Exact rational scalars: Bernoulli numbers and zeta values at odd negative integers.

Every scalar in this package is a ``fractions.Fraction``: arbitrary precision,
always stored reduced with a positive denominator, and printed as ``num/den``
(``num`` alone when the denominator is 1).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

__all__ = ["Rational", "bernoulli", "zeta_negative_odd", "boundary_constant"]

Rational = Fraction

_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n under the convention B_1 = -1/2.

    These are the coefficients of t/(e^t - 1) = sum_k B_k t^k / k!.  Values
    are obtained from the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 and
    memoised, so repeated calls are O(1).

    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    if n < 0:
        raise ValueError(f"bernoulli requires n >= 0, got {n}")
    if n >= len(_bernoulli_cache):
        with _bernoulli_lock:
            while len(_bernoulli_cache) <= n:
                m = len(_bernoulli_cache)
                if m > 1 and m % 2 == 1:
                    # odd Bernoulli numbers above B_1 vanish
                    _bernoulli_cache.append(Fraction(0))
                    continue
                acc = sum(comb(m + 1, k) * _bernoulli_cache[k] for k in range(m))
                _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def zeta_negative_odd(g: int) -> Fraction:
    """Return zeta(1 - 2g) = -B_{2g} / (2g) for a positive integer g.

    >>> zeta_negative_odd(1)
    Fraction(-1, 12)
    """
    if g < 1:
        raise ValueError(f"zeta_negative_odd requires g >= 1, got {g}")
    return -bernoulli(2 * g) / (2 * g)


def boundary_constant(g: int) -> Fraction:
    """Return (-1)^g * zeta(1 - 2g), the multiple attaching the rank-one
    boundary class to the top Chern class of the Hodge bundle.

    The value is positive for every g >= 1; its reciprocal is the integer
    12, 120, 252 for g = 1, 2, 3.
    """
    if g < 1:
        raise ValueError(f"boundary_constant requires g >= 1, got {g}")
    return (-1) ** g * zeta_negative_odd(g)
