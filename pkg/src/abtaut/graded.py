"""Weighted-graded multivariate polynomials over exact rationals.

One engine serves every alphabet used in this package: the Hodge classes
l1..lg carry weights 1..g, Chern roots and the two boundary divisors carry
weight 1.  Polynomials are sparse maps from exponent vectors to Fractions,
optionally truncated above a weighted-degree bound, and they serialize to a
canonical graded-lex text form such as ``2*l2 - l1^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "GradedRing",
    "GradedPolynomial",
    "UnivariateSeries",
    "graded_exp",
    "graded_log",
    "named_series",
    "substitute_power_sums",
]

Exponents = tuple[int, ...]

_NAME_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*?)(?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {value!r}")


class GradedRing:
    """Generator names, positive integer weights, optional truncation bound."""

    __slots__ = ("names", "weights", "bound")

    def __init__(self, names: Sequence[str], weights: Sequence[int], bound: int | None = None):
        names = tuple(names)
        weights = tuple(weights)
        if len(names) != len(weights):
            raise ValueError("one weight per generator is required")
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        if any((not isinstance(w, int)) or w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        if bound is not None and (not isinstance(bound, int) or bound < 0):
            raise ValueError("truncation bound must be a non-negative integer or None")
        self.names = names
        self.weights = weights
        self.bound = bound

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedRing):
            return NotImplemented
        return (self.names, self.weights, self.bound) == (other.names, other.weights, other.bound)

    def __hash__(self) -> int:
        return hash((self.names, self.weights, self.bound))

    def __repr__(self) -> str:
        bound = "inf" if self.bound is None else self.bound
        gens = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"GradedRing({gens}; bound={bound})"

    @property
    def ngens(self) -> int:
        return len(self.names)

    def degree(self, exponents: Exponents) -> int:
        """Weighted degree of an exponent vector."""
        return sum(e * w for e, w in zip(exponents, self.weights))

    def with_bound(self, bound: int | None) -> "GradedRing":
        return GradedRing(self.names, self.weights, bound)

    @property
    def zero(self) -> "GradedPolynomial":
        return GradedPolynomial(self, {})

    @property
    def one(self) -> "GradedPolynomial":
        return self.constant(1)

    def constant(self, value) -> "GradedPolynomial":
        c = _as_fraction(value)
        if c == 0:
            return self.zero
        return GradedPolynomial(self, {(0,) * self.ngens: c})

    def gen(self, index: int) -> "GradedPolynomial":
        if not 0 <= index < self.ngens:
            raise ValueError(f"generator index {index} out of range")
        exps = [0] * self.ngens
        exps[index] = 1
        return self.monomial(tuple(exps))

    def gens(self) -> tuple["GradedPolynomial", ...]:
        return tuple(self.gen(i) for i in range(self.ngens))

    def monomial(self, exponents: Exponents, coefficient=1) -> "GradedPolynomial":
        return self.from_terms({tuple(exponents): coefficient})

    def from_terms(self, terms: Mapping[Exponents, object]) -> "GradedPolynomial":
        """Build a polynomial; zero coefficients and terms above the bound are dropped."""
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != self.ngens or any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {self!r}")
            c = _as_fraction(coeff)
            if c == 0:
                continue
            if self.bound is not None and self.degree(exps) > self.bound:
                continue
            clean[exps] = clean.get(exps, Fraction(0)) + c
        return GradedPolynomial(self, {e: c for e, c in clean.items() if c != 0})

    def monomials_of_degree(self, d: int) -> list[Exponents]:
        """All exponent vectors of weighted degree exactly d, in ascending lex order."""
        if d < 0:
            return []
        n = self.ngens
        out: list[Exponents] = []
        exps = [0] * n

        def rec(i: int, remaining: int) -> None:
            if i == n - 1:
                w = self.weights[i]
                if remaining % w == 0:
                    exps[i] = remaining // w
                    out.append(tuple(exps))
                    exps[i] = 0
                return
            w = self.weights[i]
            for e in range(remaining // w + 1):
                exps[i] = e
                rec(i + 1, remaining - e * w)
            exps[i] = 0

        if n == 0:
            return [()] if d == 0 else []
        rec(0, d)
        return out

    def parse(self, text: str) -> "GradedPolynomial":
        """Parse the canonical text grammar: ``+``/``-`` separated terms, each a
        ``*``-joined product of an optional ``num`` or ``num/den`` coefficient and
        ``name^exp`` factors."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return self.zero
        chunks = re.findall(r"([+-]?)([^+-]+)", s)
        if "".join(sign + body for sign, body in chunks) != s:
            raise ValueError(f"cannot parse polynomial text {text!r}")
        index = {name: i for i, name in enumerate(self.names)}
        terms: dict[Exponents, Fraction] = {}
        for sign, body in chunks:
            coeff = Fraction(-1 if sign == "-" else 1)
            exps = [0] * self.ngens
            for factor in body.split("*"):
                if _COEFF_RE.match(factor):
                    coeff *= Fraction(factor)
                    continue
                m = _NAME_RE.match(factor)
                if m is None or m.group(1) not in index:
                    raise ValueError(f"bad factor {factor!r} in polynomial text {text!r}")
                exps[index[m.group(1)]] += int(m.group(2)) if m.group(2) else 1
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return self.from_terms(terms)


class GradedPolynomial:
    """Sparse polynomial attached to a :class:`GradedRing`.

    Values behave immutably: every operation returns a fresh polynomial and
    never mutates its operands, so instances are safe to share.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: dict[Exponents, Fraction]):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.ngens, Fraction(0))

    def max_degree(self) -> int:
        """Largest weighted degree present (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        degree = self.ring.degree
        return max(degree(e) for e in self.terms)

    def homogeneous_part(self, d: int) -> "GradedPolynomial":
        degree = self.ring.degree
        return GradedPolynomial(self.ring, {e: c for e, c in self.terms.items() if degree(e) == d})

    def is_homogeneous_of(self, d: int) -> bool:
        degree = self.ring.degree
        return all(degree(e) == d for e in self.terms)

    def truncate(self, bound: int | None) -> "GradedPolynomial":
        """Drop terms of weighted degree above ``bound``; the result lives in
        the ring with that bound."""
        target = self.ring.with_bound(bound)
        if bound is None:
            return GradedPolynomial(target, dict(self.terms))
        degree = self.ring.degree
        return GradedPolynomial(target, {e: c for e, c in self.terms.items() if degree(e) <= bound})

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other: "GradedPolynomial") -> None:
        if self.ring != other.ring:
            raise ValueError(f"incompatible rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return GradedPolynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other) - self
        return NotImplemented

    def _scale(self, value) -> "GradedPolynomial":
        c = _as_fraction(value)
        if c == 0:
            return self.ring.zero
        return GradedPolynomial(self.ring, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        self._check_ring(other)
        ring = self.ring
        bound = ring.bound
        degree = ring.degree
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        bitems = [(e, c, degree(e)) for e, c in b.items()]
        out: dict[Exponents, Fraction] = {}
        get = out.get
        for ea, ca in a.items():
            da = degree(ea)
            for eb, cb, db in bitems:
                if bound is not None and da + db > bound:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                v = get(e, Fraction(0)) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return GradedPolynomial(ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(1, 1) / _as_fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers require a non-negative integer exponent")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def substitute(self, images: Sequence["GradedPolynomial"], ring: GradedRing | None = None) -> "GradedPolynomial":
        """Evaluate with generator i replaced by ``images[i]``.

        All images must share a ring (the target of the substitution).
        """
        if len(images) != self.ring.ngens:
            raise ValueError("one image per generator is required")
        if ring is None:
            if not images:
                raise ValueError("cannot infer the target ring without images")
            ring = images[0].ring
        for img in images:
            if img.ring != ring:
                raise ValueError("all substitution images must live in the target ring")
        powers: dict[tuple[int, int], GradedPolynomial] = {}

        def power(i: int, e: int) -> GradedPolynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        acc = ring.zero
        for exps, coeff in self.terms.items():
            term = ring.constant(coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    # -- comparisons / display -------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex order: by weighted degree, then by exponent vector."""
        degree = self.ring.degree
        return sorted(self.terms.items(), key=lambda kv: (degree(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append((" - " if coeff < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GradedPolynomial({self})"


def graded_exp(a: GradedPolynomial) -> GradedPolynomial:
    """Exponential sum_{k>=0} a^k / k! of a polynomial with zero constant term.

    The sum is finite because ``a`` is purely positive-degree and the ring is
    truncated; a bound is therefore required.
    """
    if a.constant_term != 0:
        raise ValueError("graded_exp requires a zero constant term")
    bound = a.ring.bound
    if bound is None:
        raise ValueError("graded_exp requires a truncation bound on the ring")
    result = a.ring.one
    term = a.ring.one
    for k in range(1, bound + 1):
        term = term * a / k
        if not term:
            break
        result = result + term
    return result


def graded_log(a: GradedPolynomial) -> GradedPolynomial:
    """Logarithm sum_{k>=1} (-1)^(k+1) (a-1)^k / k of a polynomial with constant term 1."""
    if a.constant_term != 1:
        raise ValueError("graded_log requires constant term 1")
    bound = a.ring.bound
    if bound is None:
        raise ValueError("graded_log requires a truncation bound on the ring")
    u = a - 1
    acc = a.ring.zero
    term = a.ring.one
    for k in range(1, bound + 1):
        term = term * u
        if not term:
            break
        acc = acc + term * Fraction((-1) ** (k + 1), k)
    return acc


class UnivariateSeries:
    """Truncated power series in one variable with exact rational coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable):
        coeffs = tuple(_as_fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coefficients = coeffs

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __neg__(self) -> "UnivariateSeries":
        return UnivariateSeries(tuple(-c for c in self.coefficients))

    def __mul__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] += a * b
        return UnivariateSeries(out)

    def reciprocal(self) -> "UnivariateSeries":
        a = self.coefficients
        if a[0] == 0:
            raise ValueError("reciprocal requires a nonzero constant coefficient")
        r = [Fraction(1) / a[0]]
        for n in range(1, len(a)):
            acc = Fraction(0)
            for j in range(1, n + 1):
                acc += a[j] * r[n - j]
            r.append(-acc / a[0])
        return UnivariateSeries(r)

    def log(self) -> "UnivariateSeries":
        a = self.coefficients
        if a[0] != 1:
            raise ValueError("log requires constant coefficient 1")
        l = [Fraction(0)] * len(a)
        for n in range(1, len(a)):
            acc = Fraction(0)
            for j in range(1, n):
                acc += j * l[j] * a[n - j]
            l[n] = a[n] - acc / n
        return UnivariateSeries(l)

    def __repr__(self) -> str:
        return f"UnivariateSeries({list(self.coefficients)})"


_SERIES_NAMES = (
    "todd_dual_gen",
    "log_todd_gen",
    "log_todd_dual_gen",
    "log_one_minus_exp_neg_over_t",
)


def _exp_minus_one_over_t(order: int) -> UnivariateSeries:
    """(e^t - 1) / t."""
    fact = Fraction(1)
    out = []
    for k in range(order + 1):
        fact *= k + 1
        out.append(Fraction(1) / fact)
    return UnivariateSeries(out)


def _one_minus_exp_neg_over_t(order: int) -> UnivariateSeries:
    """(1 - e^{-t}) / t."""
    fact = Fraction(1)
    out = []
    for k in range(order + 1):
        fact *= k + 1
        out.append(Fraction((-1) ** k) / fact)
    return UnivariateSeries(out)


def named_series(name: str, order: int) -> UnivariateSeries:
    """Exact coefficients of the generating series used by the class calculus.

    ``todd_dual_gen``
        t / (e^t - 1), whose k-th coefficient is B_k / k!.
    ``log_todd_gen``
        log(t / (1 - e^{-t})).
    ``log_todd_dual_gen``
        log(t / (e^t - 1)).
    ``log_one_minus_exp_neg_over_t``
        log((1 - e^{-t}) / t).
    """
    if order < 0:
        raise ValueError(f"series order must be >= 0, got {order}")
    if name == "todd_dual_gen":
        return _exp_minus_one_over_t(order).reciprocal()
    if name == "log_todd_gen":
        return -(_one_minus_exp_neg_over_t(order).log())
    if name == "log_todd_dual_gen":
        return -(_exp_minus_one_over_t(order).log())
    if name == "log_one_minus_exp_neg_over_t":
        return _one_minus_exp_neg_over_t(order).log()
    raise ValueError(f"unknown series {name!r}; expected one of {', '.join(_SERIES_NAMES)}")


def substitute_power_sums(series: UnivariateSeries, power_sums: Sequence[GradedPolynomial]) -> GradedPolynomial:
    """Return sum_k series[k] * power_sums[k], truncated in the common ring.

    ``power_sums[k]`` must be homogeneous of weighted degree k; the entry at
    index 0 is never consulted because the series must have zero constant
    term.
    """
    if series.coefficients[0] != 0:
        raise ValueError("substitute_power_sums requires a series with zero constant term")
    if len(power_sums) < 2:
        raise ValueError("at least the degree-1 power sum must be supplied")
    ring = power_sums[1].ring
    acc = ring.zero
    for k in range(1, series.order + 1):
        c = series.coefficients[k]
        if c == 0:
            continue
        if k >= len(power_sums):
            raise ValueError(f"series has a nonzero coefficient at {k} but only {len(power_sums) - 1} power sums were supplied")
        pk = power_sums[k]
        if not pk.is_homogeneous_of(k):
            raise ValueError(f"power_sums[{k}] is not homogeneous of weighted degree {k}")
        acc = acc + pk * c
    return acc
