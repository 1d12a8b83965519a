import random
from fractions import Fraction

import pytest

from abtaut import RingConstructionError, build_ring, determinant
from abtaut.tautring import MAX_GENUS_ENV, reduce_degree


# -- relation components ----------------------------------------------------


def test_relations_genus_one(ring_cache):
    r = ring_cache(1)
    assert {d: str(p) for d, p in r.relation_components.items()} == {2: "-l1^2"}


def test_relations_genus_two(ring_cache):
    r = ring_cache(2)
    assert {d: str(p) for d, p in r.relation_components.items()} == {
        2: "2*l2 - l1^2",
        4: "l2^2",
    }


def test_relations_genus_three(ring_cache):
    r = ring_cache(3)
    assert {d: str(p) for d, p in r.relation_components.items()} == {
        2: "2*l2 - l1^2",
        4: "l2^2 - 2*l1*l3",
        6: "-l3^2",
    }


# -- dimensions --------------------------------------------------------------


def test_dimension_profiles_small(ring_cache):
    assert ring_cache(1).dimension_profile() == [1, 1]
    assert ring_cache(2).dimension_profile() == [1, 1, 1, 1]
    assert ring_cache(3).dimension_profile() == [1, 1, 1, 2, 1, 1, 1]


@pytest.mark.parametrize("g", list(range(1, 9)))
def test_structure_invariants(g, ring_cache):
    r = ring_cache(g)
    dims = r.dimension_profile()
    assert sum(dims) == 2 ** g
    assert dims == dims[::-1]
    assert dims[-1] == 1
    assert r.socle_degree == g * (g + 1) // 2
    assert r.basis_monomials(r.socle_degree) == [r.socle_monomial()]


@pytest.mark.parametrize("g", list(range(1, 9)))
def test_relation_product_reduces_to_one(g, ring_cache):
    r = ring_cache(g)
    product = r.ring.one
    for part in r.relation_components.values():
        product = product + part
    assert r.normal_form(product - 1) == r.normal_form(r.ring.zero)
    assert r.normal_form(product) == r.normal_form(r.ring.one)


@pytest.mark.parametrize("g", list(range(1, 9)))
def test_top_chern_squares_to_zero(g, ring_cache):
    r = ring_cache(g)
    square = r.ring.gen(g - 1) ** 2
    assert not r.normal_form(square)
    # the degree-2g relation component is forced onto lg^2 alone
    top_relation = r.relation_components[2 * g]
    assert set(top_relation.terms) == {tuple(0 if i < g - 1 else 2 for i in range(g))}


# -- normal forms -------------------------------------------------------------


def test_normal_form_hand_examples(ring_cache):
    # hand chain for g = 2: l1^2 = 2 l2, l1^3 = 2 l1 l2
    r2 = ring_cache(2)
    assert str(r2.normal_form(r2.ring.parse("l1^2"))) == "2*l2"
    assert str(r2.normal_form(r2.ring.parse("l1^3"))) == "2*l1*l2"
    # hand chain for g = 3: l1^2 = 2 l2, l2^2 = 2 l1 l3, l3^2 = 0
    # so l1^6 = 8 l2^3 = 8 l2 (2 l1 l3) = 16 l1 l2 l3
    r3 = ring_cache(3)
    assert str(r3.normal_form(r3.ring.parse("l1^6"))) == "16*l1*l2*l3"


def test_normal_form_is_linear(ring_cache):
    r = ring_cache(3)
    p = r.ring.parse("l1^4")
    q = r.ring.parse("l2*l1^2")
    combined = p * 3 + q * Fraction(-1, 2)
    nf = r.normal_form(combined)
    expected = {
        subset: 3 * r.normal_form(p).coefficient(subset) - Fraction(1, 2) * r.normal_form(q).coefficient(subset)
        for subset in set(r.normal_form(p).coordinates) | set(r.normal_form(q).coordinates)
    }
    for subset, value in expected.items():
        assert nf.coefficient(subset) == value


def test_normal_form_drops_above_socle(ring_cache):
    r = ring_cache(2)
    assert not r.normal_form(r.ring.parse("l1^4"))
    assert not r.normal_form(r.ring.parse("l2^2"))


def test_normal_form_idempotent(ring_cache):
    rng = random.Random(31415)
    for g in (2, 3, 4):
        r = ring_cache(g)
        for _ in range(10):
            terms = {}
            for _ in range(4):
                exps = tuple(rng.randint(0, 2) for _ in range(g))
                terms[exps] = Fraction(rng.randint(-5, 5))
            p = r.ring.from_terms(terms)
            nf = r.normal_form(p)
            assert r.normal_form(nf.to_polynomial(r.ring)) == nf


def test_normal_form_wrong_alphabet(ring_cache):
    from abtaut import GradedRing

    r = ring_cache(2)
    other = GradedRing(("x", "y"), (1, 2), None)
    with pytest.raises(ValueError):
        r.normal_form(other.gen(0))


# -- socle ratios -------------------------------------------------------------


def test_socle_ratios_hand_examples(ring_cache):
    assert ring_cache(2).socle_ratio(ring_cache(2).ring.parse("l1^3")) == 2
    assert ring_cache(3).socle_ratio(ring_cache(3).ring.parse("l1^6")) == 16
    # g = 4: l1^3 = 2 l1 l2, then multiply by l3 l4
    assert ring_cache(4).socle_ratio(ring_cache(4).ring.parse("l4*l3*l1^3")) == 2


def test_socle_ratio_rejects_wrong_degree(ring_cache):
    r = ring_cache(2)
    with pytest.raises(ValueError):
        r.socle_ratio(r.ring.parse("l1^2"))
    with pytest.raises(ValueError):
        r.socle_ratio(r.ring.parse("l1^3 + l1"))


# -- pairing ------------------------------------------------------------------


def test_pairing_matrix_examples(ring_cache):
    assert ring_cache(2).pairing_matrix(0) == [[Fraction(1)]]
    # degree-3 basis of g = 3 in graded-lex order: l3, l1*l2
    matrix = ring_cache(3).pairing_matrix(3)
    assert matrix == [[0, 1], [1, 4]]
    assert determinant(matrix) != 0


@pytest.mark.parametrize("g", list(range(1, 7)))
def test_pairing_nonsingular_everywhere(g, ring_cache):
    r = ring_cache(g)
    for d in range(r.socle_degree + 1):
        matrix = r.pairing_matrix(d)
        assert len(matrix) == len(matrix[0] if matrix else [])
        assert determinant(matrix) != 0, (g, d)


def test_pairing_degree_out_of_range(ring_cache):
    with pytest.raises(ValueError):
        ring_cache(2).pairing_matrix(4)


def test_determinant_utility():
    assert determinant([]) == 1
    assert determinant([[Fraction(2)]]) == 2
    assert determinant([[1, 2], [2, 4]]) == 0
    with pytest.raises(ValueError):
        determinant([[1, 2]])


# -- construction guard rails -------------------------------------------------


def test_genus_cap_default(monkeypatch):
    monkeypatch.delenv(MAX_GENUS_ENV, raising=False)
    with pytest.raises(ValueError):
        build_ring(9)


def test_genus_cap_env_override(monkeypatch):
    monkeypatch.setenv(MAX_GENUS_ENV, "3")
    with pytest.raises(ValueError):
        build_ring(4)
    assert build_ring(3).genus == 3
    monkeypatch.setenv(MAX_GENUS_ENV, "not a number")
    with pytest.raises(ValueError):
        build_ring(2)


def test_genus_must_be_positive():
    with pytest.raises(ValueError):
        build_ring(0)


def test_reduce_degree_detects_dependent_basis():
    # a row supported on the designated basis alone means the basis is dependent
    monomials = [(1,)]
    square_free = [(1,)]
    rows = [{(1,): Fraction(1)}]
    with pytest.raises(RingConstructionError):
        reduce_degree(monomials, square_free, rows, degree=1)


def test_reduce_degree_detects_non_spanning_basis():
    # no relation reaches (2,), so it cannot reduce to the (empty) basis
    monomials = [(2,)]
    square_free = []
    with pytest.raises(RingConstructionError):
        reduce_degree(monomials, square_free, [], degree=2)


def test_reduce_degree_happy_path():
    # one relation 2*l2 - l1^2 at degree 2 of genus 2
    monomials = [(0, 1), (2, 0)]
    square_free = [(0, 1)]
    rows = [{(0, 1): Fraction(2), (2, 0): Fraction(-1)}]
    pivots = reduce_degree(monomials, square_free, rows, degree=2)
    assert set(pivots) == {(2, 0)}
    row = pivots[(2, 0)]
    assert Fraction(-row[(0, 1)], row[(2, 0)]) == 2
