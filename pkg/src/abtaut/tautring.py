"""The graded quotient of Q[l1..lg] by the duality relation.

The ring is presented by the homogeneous components of
(1 + l1 + ... + lg)(1 - l1 + l2 - ... + (-1)^g lg) - 1.  Normal forms are
obtained by exact row reduction degree by degree, with the square-free
monomials l_a = prod_{i in a} l_i designated as the quotient basis.  The
designation is *verified* during construction: if the square-free monomials
of some degree fail to be a basis modulo the relation span, construction
aborts with :class:`RingConstructionError` instead of patching around it.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .graded import GradedPolynomial, GradedRing

__all__ = [
    "DEFAULT_MAX_GENUS",
    "MAX_GENUS_ENV",
    "RingConstructionError",
    "TautRing",
    "TautRingElement",
    "build_ring",
    "determinant",
]

DEFAULT_MAX_GENUS = 8
MAX_GENUS_ENV = "ABTAUT_MAX_G"

Exponents = tuple[int, ...]
Subset = tuple[int, ...]
IntRow = dict[Exponents, int]


class RingConstructionError(RuntimeError):
    """The designated square-free monomial basis failed verification.

    This cannot happen for the relation set actually generated here unless
    the presentation itself is inconsistent; it is a fatal condition, never
    silently repaired.
    """


class TautRingElement:
    """A ring element in square-free coordinates: subset a -> coefficient of l_a."""

    __slots__ = ("genus", "coordinates")

    def __init__(self, genus: int, coordinates: Mapping[Subset, Fraction]):
        self.genus = genus
        self.coordinates = {tuple(k): Fraction(v) for k, v in coordinates.items() if v != 0}

    def coefficient(self, subset: Sequence[int]) -> Fraction:
        return self.coordinates.get(tuple(subset), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coordinates)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TautRingElement):
            return NotImplemented
        return self.genus == other.genus and self.coordinates == other.coordinates

    def __hash__(self) -> int:
        return hash((self.genus, frozenset(self.coordinates.items())))

    def to_polynomial(self, ring: GradedRing) -> GradedPolynomial:
        terms: dict[Exponents, Fraction] = {}
        for subset, c in self.coordinates.items():
            exps = [0] * ring.ngens
            for i in subset:
                exps[i - 1] = 1
            terms[tuple(exps)] = c
        return ring.from_terms(terms)

    def __str__(self) -> str:
        ring = _lambda_ring(self.genus)
        return str(self.to_polynomial(ring))

    def __repr__(self) -> str:
        return f"TautRingElement(g={self.genus}, {self})"


def _lambda_ring(g: int) -> GradedRing:
    return GradedRing(tuple(f"l{i}" for i in range(1, g + 1)), tuple(range(1, g + 1)), None)


def _subset_of(exps: Exponents) -> Subset:
    return tuple(i + 1 for i, e in enumerate(exps) if e)


def _as_int_row(row: Mapping[Exponents, object]) -> IntRow:
    """Clear denominators and divide out the integer content."""
    denominator = 1
    for c in row.values():
        c = Fraction(c)
        denominator = denominator * c.denominator // gcd(denominator, c.denominator)
    out = {e: int(Fraction(c) * denominator) for e, c in row.items() if c}
    return _primitive(out)


def _primitive(row: IntRow) -> IntRow:
    content = 0
    for v in row.values():
        content = gcd(content, v)
        if content == 1:
            return row
    if content > 1:
        for e in row:
            row[e] //= content
    return row


def _eliminate(row: IntRow, pivots: dict[Exponents, IntRow]) -> None:
    """Eliminate every pivot monomial from ``row`` in place (fraction-free).

    Pivot rows are kept fully back-substituted, so each elimination only
    introduces non-pivot monomials and a single pass suffices.
    """
    for m in [m for m in row if m in pivots]:
        c = row.get(m, 0)
        if not c:
            continue
        q = pivots[m]
        qp = q[m]
        common = gcd(c, qp)
        scale, factor = qp // common, c // common
        if scale != 1:
            for e in row:
                row[e] *= scale
        for e, v in q.items():
            w = row.get(e, 0) - factor * v
            if w:
                row[e] = w
            elif e in row:
                del row[e]


def reduce_degree(
    monomials: Sequence[Exponents],
    square_free: Sequence[Exponents],
    rows: Sequence[Mapping[Exponents, object]],
    degree: int,
) -> dict[Exponents, IntRow]:
    """Row-reduce the span of ``rows`` and verify that ``square_free`` is a
    basis of the quotient.

    Returns the pivot rows in fully back-substituted echelon form, keyed by
    their (non-square-free) pivot monomial; each row is a primitive integer
    vector whose pivot entry is positive.
    """
    sf_set = set(square_free)
    pivots: dict[Exponents, IntRow] = {}
    # column -> pivot keys whose rows carry that column (off the diagonal),
    # so back-substitution touches only the rows it changes
    containing: dict[Exponents, set[Exponents]] = {}
    for row in rows:
        row = dict(row) if all(isinstance(v, int) for v in row.values()) else _as_int_row(row)
        _eliminate(row, pivots)
        if not row:
            continue
        row = _primitive(row)
        candidates = [m for m in row if m not in sf_set]
        if not candidates:
            raise RingConstructionError(
                f"degree {degree}: a relation collapses onto the square-free monomials; "
                "the designated basis is dependent"
            )
        pivot = max(candidates)
        if row[pivot] < 0:
            for e in row:
                row[e] = -row[e]
        np = row[pivot]
        for key in list(containing.get(pivot, ())):
            other = pivots[key]
            c = other[pivot]
            common = gcd(c, np)
            scale, factor = np // common, c // common
            if scale != 1:
                for e in other:
                    other[e] *= scale
            for e, v in row.items():
                w = other.get(e, 0) - factor * v
                if w:
                    if e not in other:
                        containing.setdefault(e, set()).add(key)
                    other[e] = w
                elif e in other:
                    del other[e]
                    containing[e].discard(key)
            _primitive(other)
        pivots[pivot] = row
        for e in row:
            if e != pivot:
                containing.setdefault(e, set()).add(pivot)
    for m in monomials:
        if m not in sf_set and m not in pivots:
            raise RingConstructionError(
                f"degree {degree}: monomial with exponents {m} does not reduce to the "
                "square-free basis; the designated basis does not span"
            )
    return pivots


class TautRing:
    """Normal forms, dimensions and the duality pairing for a fixed genus.

    Construction is a one-time cost; the resulting object is immutable and
    safe for concurrent queries.
    """

    def __init__(self, g: int):
        if g < 1:
            raise ValueError(f"genus must be >= 1, got {g}")
        self.genus = g
        self.socle_degree = g * (g + 1) // 2
        self.ring = _lambda_ring(g)
        self.relation_components = self._relation_components()
        self._monomials: list[list[Exponents]] = []
        self._square_free: list[list[Exponents]] = []
        self._reduce: list[dict[Exponents, dict[Subset, Fraction]]] = []
        self._build()

    def _relation_components(self) -> dict[int, GradedPolynomial]:
        gens = self.ring.gens()
        total = self.ring.one
        dual = self.ring.one
        for i, x in enumerate(gens, start=1):
            total = total + x
            dual = dual + x * ((-1) ** i)
        rel = total * dual - 1
        components: dict[int, GradedPolynomial] = {}
        for d in range(1, 2 * self.genus + 1):
            part = rel.homogeneous_part(d)
            if d % 2 == 1:
                if part:
                    raise RingConstructionError(f"odd-degree relation component at degree {d}")
                continue
            components[d] = part
        return components

    def _build(self) -> None:
        g = self.genus
        # The degree-d slice of the ideal is spanned by the monomial multiples
        # m * rel_{2k} with deg m = d - 2k, which equals the span of
        # {l_i * v : v in the degree-(d-i) slice} together with rel_d itself.
        # Multiplying the already-reduced pivot rows keeps incoming rows close
        # to reduced echelon form.
        ideal_rows: list[list[IntRow]] = []
        for d in range(self.socle_degree + 1):
            monomials = self.ring.monomials_of_degree(d)
            square_free = [m for m in monomials if all(e <= 1 for e in m)]
            rows: list[IntRow] = []
            for i in range(1, g + 1):
                if d - i < 2:
                    continue
                for row in ideal_rows[d - i]:
                    rows.append({tuple(e + (1 if j == i - 1 else 0) for j, e in enumerate(m)): c for m, c in row.items()})
            if d % 2 == 0 and 2 <= d <= 2 * g:
                rows.append(dict(self.relation_components[d].terms))
            pivots = reduce_degree(monomials, square_free, rows, d)
            reduce_map: dict[Exponents, dict[Subset, Fraction]] = {}
            for m in square_free:
                reduce_map[m] = {_subset_of(m): Fraction(1)}
            for pivot, row in pivots.items():
                lead = row[pivot]
                reduce_map[pivot] = {_subset_of(e): Fraction(-c, lead) for e, c in row.items() if e != pivot}
            self._monomials.append(monomials)
            self._square_free.append(square_free)
            self._reduce.append(reduce_map)
            ideal_rows.append([pivots[k] for k in sorted(pivots)])

    # -- queries ---------------------------------------------------------

    def dimension_profile(self) -> list[int]:
        """Dimension of each graded piece, degrees 0..socle_degree."""
        return [len(sf) for sf in self._square_free]

    def basis_monomials(self, d: int) -> list[GradedPolynomial]:
        """The square-free monomial basis of degree d, as polynomials."""
        self._check_degree(d)
        return [self.ring.monomial(m) for m in self._square_free[d]]

    def socle_monomial(self) -> GradedPolynomial:
        """The canonical socle generator l1*l2*...*lg."""
        return self.ring.monomial((1,) * self.genus)

    def _check_degree(self, d: int) -> None:
        if not 0 <= d <= self.socle_degree:
            raise ValueError(f"degree must lie in 0..{self.socle_degree}, got {d}")

    def _check_polynomial(self, p: GradedPolynomial) -> None:
        if p.ring.names != self.ring.names or p.ring.weights != self.ring.weights:
            raise ValueError(f"polynomial alphabet {p.ring!r} does not match this ring (genus {self.genus})")

    def normal_form(self, p: GradedPolynomial) -> TautRingElement:
        """Coordinates of p in the square-free basis.

        Linear over the rationals; terms of weighted degree above the socle
        degree vanish in the ring and are dropped.
        """
        self._check_polynomial(p)
        degree = self.ring.degree
        coords: dict[Subset, Fraction] = {}
        for exps, c in p.terms.items():
            d = degree(exps)
            if d > self.socle_degree:
                continue
            for subset, r in self._reduce[d][exps].items():
                v = coords.get(subset, Fraction(0)) + c * r
                if v:
                    coords[subset] = v
                elif subset in coords:
                    del coords[subset]
        return TautRingElement(self.genus, coords)

    def socle_ratio(self, p: GradedPolynomial) -> Fraction:
        """The unique q with normal_form(p) = q * l1l2...lg, for p homogeneous
        of the socle degree."""
        self._check_polynomial(p)
        if not p.is_homogeneous_of(self.socle_degree):
            raise ValueError(f"socle_ratio requires a homogeneous polynomial of degree {self.socle_degree}")
        nf = self.normal_form(p)
        return nf.coefficient(range(1, self.genus + 1))

    def pairing_matrix(self, d: int) -> list[list[Fraction]]:
        """Socle ratios of basis products between degrees d and socle_degree - d."""
        self._check_degree(d)
        left = self._square_free[d]
        right = self._square_free[self.socle_degree - d]
        top = self._reduce[self.socle_degree]
        full = tuple(range(1, self.genus + 1))
        matrix: list[list[Fraction]] = []
        for a in left:
            row = []
            for b in right:
                product = tuple(x + y for x, y in zip(a, b))
                row.append(top[product].get(full, Fraction(0)))
            matrix.append(row)
        return matrix


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination; the empty matrix has determinant 1."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def max_genus_cap() -> int:
    """The construction cap: the ABTAUT_MAX_G environment variable, default 8."""
    raw = os.environ.get(MAX_GENUS_ENV)
    if raw is None:
        return DEFAULT_MAX_GENUS
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_GENUS_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{MAX_GENUS_ENV} must be >= 1, got {cap}")
    return cap


def build_ring(g: int, max_genus: int | None = None) -> TautRing:
    """Construct the ring for genus g, verifying the square-free basis.

    ``max_genus`` defaults to the ABTAUT_MAX_G environment variable (or 8).
    """
    cap = max_genus_cap() if max_genus is None else max_genus
    if not 1 <= g <= cap:
        raise ValueError(f"genus must satisfy 1 <= g <= {cap} (raise {MAX_GENUS_ENV} to go higher), got {g}")
    return TautRing(g)
