"""Ring axioms, substitution, and golden rendering for the polynomial core."""

import pytest
from hypothesis import given, settings, strategies as st

from rlah.poly import A, B, ONE, T, VARIABLES, X, ZERO, Polynomial, range_product

monomials = st.tuples(st.integers(0, 3), st.integers(0, 3),
                      st.integers(0, 2), st.integers(0, 2))
coefficients = st.integers(-9, 9)


@st.composite
def polynomials(draw, max_terms=4):
    terms = draw(st.dictionaries(monomials, coefficients, max_size=max_terms))
    return Polynomial(terms)


bindings = st.dictionaries(st.sampled_from(VARIABLES), st.integers(-5, 5), max_size=4)


def test_add_examples():
    assert (A + B) + (-B) == A
    assert ZERO + (A * B) == A * B
    assert 2 * A * B + 3 * A * B == 5 * A * B


def test_mul_examples():
    assert (A + B) * (A - B) == A * A - B * B
    assert (A + B) * ZERO == ZERO
    assert (A + B) * (A + B) == A ** 2 + 2 * A * B + B ** 2


def test_eval_examples():
    assert (A + B).eval(a=1, b=1).as_int() == 2
    assert (A ** 2 * B).eval(a=2) == 4 * B
    assert X.eval() == X
    assert (A + B).eval({"a": 3}, b=4).as_int() == 7


def test_eval_unknown_variable():
    with pytest.raises(KeyError):
        A.eval(q=1)


def test_as_int_rejects_non_constant():
    with pytest.raises(ValueError):
        (A + B).as_int()
    assert ZERO.as_int() == 0


def test_range_product_examples():
    assert range_product(X, 1, 0) == ONE
    assert range_product(X, 1, 3) == X ** 3 + 3 * X ** 2 + 2 * X
    assert range_product(X, -B, 2) == X * (X - B)
    with pytest.raises(ValueError):
        range_product(X, 1, -1)


def test_substitute():
    p = A ** 2 + B
    assert p.substitute(a=-T) == T ** 2 + B
    assert p.substitute(b=T) == A ** 2 + T
    assert (A * B).swap_ab() == A * B
    assert (2 * A + 3 * B).swap_ab() == 3 * A + 2 * B


def test_degree():
    assert ZERO.degree() == -1
    assert (A ** 2 * B + X).degree() == 3
    assert (A ** 2 * B + X).degree("a") == 2
    assert (A + B).degree("x") == 0


def test_rendering_golden():
    assert str(ZERO) == "0"
    assert str(Polynomial.constant(7)) == "7"
    assert str(-B) == "-b"
    assert str(A + B) == "a + b"
    assert str(2 * A * B + 3 * B ** 2) == "2*a*b + 3*b^2"
    assert str(-3 * A ** 2) == "-3*a^2"
    assert str(X ** 2 - 5) == "x^2 - 5"
    # descending lexicographic on (a, b, x, t): the b*x term precedes x^2
    assert str(range_product(X, -B, 2)) == "-b*x + x^2"


@given(p=polynomials(), q=polynomials(), w=polynomials())
@settings(deadline=None)
def test_ring_axioms(p, q, w):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + w == p + (q + w)
    assert (p * q) * w == p * (q * w)
    assert p * (q + w) == p * q + p * w


@given(p=polynomials())
@settings(deadline=None)
def test_self_cancellation(p):
    assert p - p == ZERO
    assert p * ONE == p
    assert p + ZERO == p


@given(p=polynomials(), q=polynomials(), sigma=bindings)
@settings(deadline=None)
def test_eval_is_homomorphism(p, q, sigma):
    assert (p + q).eval(sigma) == p.eval(sigma) + q.eval(sigma)
    assert (p * q).eval(sigma) == p.eval(sigma) * q.eval(sigma)


@given(base=polynomials(max_terms=2), step=polynomials(max_terms=2), m=st.integers(0, 12))
@settings(deadline=None, max_examples=30)
def test_range_product_recurrence(base, step, m):
    assert range_product(base, step, m + 1) == range_product(base, step, m) * (base + m * step)


@given(p=polynomials(), q=polynomials())
@settings(deadline=None)
def test_hash_consistent_with_eq(p, q):
    if p == q:
        assert hash(p) == hash(q)
