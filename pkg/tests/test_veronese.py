import random
from concurrent.futures import ThreadPoolExecutor
from math import comb

import pytest
from hypothesis import given, strategies as st

from veronese_lefschetz import monomials as mon
from veronese_lefschetz.corpus import curated, fixture, full_corpus
from veronese_lefschetz.exactla import RationalMatrix
from veronese_lefschetz.monomials import MonomialIdeal
from veronese_lefschetz.upoly import IntPolynomial
from veronese_lefschetz.veronese import (
    VeroneseQuotient,
    graded_dim,
    linear_form_power,
    multiplication_matrix,
    poly_mul,
    power_linear_form,
    quotient_multiplication_matrix,
    reduce_mod,
    veronese_degree,
    veronese_h_transform,
)


def transform_oracle(h, d, r):
    """Veronese h-polynomial from the Hilbert function: HF(k) = sum_j h_j C(k-j+d-1, d-1),
    keep k = i*r, then multiply the series by (1-t)^d."""
    h = list(h)
    top = (d * (r - 1) + len(h) - 1) // r + d + 2

    def hf(k):
        if d == 0:
            return h[k] if k < len(h) else 0
        return sum(hj * comb(k - j + d - 1, d - 1) for j, hj in enumerate(h) if k >= j)

    series = [hf(i * r) for i in range(top + 1)]
    for _ in range(d):
        series = [series[0]] + [series[i] - series[i - 1] for i in range(1, len(series))]
    return IntPolynomial(series)


def brute_dims(V):
    out = []
    i = 0
    while True:
        c = sum(1 for m in mon.monomials_of_degree(V.n, i * V.r) if m not in V.J)
        if c == 0 and i > 0:
            return IntPolynomial(out)
        out.append(c)
        i += 1


# ---------------------------------------------------------------- transform and degree

@pytest.mark.parametrize("h, d, r, expected", [
    ((1,), 2, 2, (1, 1)),
    ((1, 5, 10), 3, 3, (1, 67, 76)),
    ((1, 4, 2), 5, 1, (1, 4, 2)),
])
def test_transform_examples(h, d, r, expected):
    assert veronese_h_transform(IntPolynomial(h), d, r) == IntPolynomial(expected)


@given(st.lists(st.integers(0, 20), max_size=5), st.integers(0, 5), st.integers(1, 6))
def test_transform_matches_hilbert_function_oracle(tail, d, r):
    h = IntPolynomial([1] + tail)
    assert veronese_h_transform(h, d, r) == transform_oracle(h, d, r)


@given(st.lists(st.integers(0, 20), max_size=5), st.integers(1, 20), st.integers(0, 5), st.integers(1, 6))
def test_transform_degree_formula_for_arbitrary_top(tail, top, d, r):
    h = IntPolynomial([1] + tail + [top])
    assert veronese_h_transform(h, d, r).degree == veronese_degree(h.degree, d, r)


def test_transform_rejects_bad_input():
    with pytest.raises(ValueError):
        veronese_h_transform(IntPolynomial([2, 1]), 2, 2)
    with pytest.raises(ValueError):
        veronese_h_transform(IntPolynomial([1, -1]), 2, 2)
    with pytest.raises(ValueError):
        veronese_h_transform(IntPolynomial([1]), 2, 0)


@pytest.mark.parametrize("deg_h, d, r, expected", [(2, 3, 3, 2), (0, 7, 1, 0), (1, 2, 2, 1)])
def test_degree_examples(deg_h, d, r, expected):
    assert veronese_degree(deg_h, d, r) == expected


# ---------------------------------------------------------------- graded pieces

def V_of(n, gens, r):
    return VeroneseQuotient(MonomialIdeal(n, gens), r)


def test_graded_dim_examples():
    V = V_of(2, [], 2)
    assert graded_dim(V, 1) == 1 and V.basis(1) == [(1, 1)]
    R = VeroneseQuotient(mon.remark_ideal(), 3)
    assert R.graded_dim(2) == 76
    for name, I in curated():
        assert VeroneseQuotient(I, 2).graded_dim(0) == 1


def test_dims_match_brute_count_and_transform_on_corpus():
    for name, I in full_corpus(20, 11):
        for r in range(1, 5):
            V = VeroneseQuotient(I, r)
            assert V.hilbert() == brute_dims(V) == V.h_transform(), (name, r)
            assert V.socle_degree() == veronese_degree(V.h.degree, V.d, r), (name, r)


def test_rejects_non_stable_and_non_cm():
    with pytest.raises(ValueError):
        V_of(2, [(0, 2)], 2)
    with pytest.raises(ValueError):
        V_of(2, [(2, 0), (1, 1)], 2)
    with pytest.raises(ValueError):
        V_of(2, [], 0)


def test_concurrent_basis_access_is_consistent():
    V = VeroneseQuotient(fixture("remark24"), 3)
    with ThreadPoolExecutor(8) as pool:
        dims = list(pool.map(lambda i: V.graded_dim(i % 3), range(48)))
    assert dims == [[1, 67, 76][i % 3] for i in range(48)]


# ---------------------------------------------------------------- forms and matrices

def test_power_linear_form_examples():
    assert linear_form_power(2, [1, 2], 2) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    V = V_of(2, [(1, 0)], 5)  # d = 1, theta = x2
    assert power_linear_form(V) == {(0, 5): 1}
    w = linear_form_power(3, [1, 2, 3], 2)
    assert sorted(w.values()) == [1, 1, 1, 2, 2, 2]


@given(st.integers(1, 4), st.integers(1, 5))
def test_power_linear_form_matches_repeated_multiplication(k, r):
    n = k
    lin = {mon.variable(i, n): 1 for i in range(1, n + 1)}
    acc = {mon.unit(n): 1}
    for _ in range(r):
        acc = poly_mul(acc, lin)
    assert linear_form_power(n, range(1, n + 1), r) == acc


def test_multiplication_matrix_examples():
    V = V_of(2, [], 2)
    w = V.power_linear_form()
    assert multiplication_matrix(V, w, 0).tolist() == [[2]]
    M1 = V.multiplication_matrix(w, 1)
    assert M1.shape == (0, 1)
    assert V.multiplication_matrix({(1, 1): 1}, 0).tolist() == [[1]]


def test_multiplication_matrix_rejects_wrong_degree():
    V = V_of(2, [], 2)
    with pytest.raises(ValueError):
        V.multiplication_matrix({(1, 0): 1}, 0)
    with pytest.raises(ValueError):
        V.multiplication_matrix({(1, 0): 1, (1, 1): 1}, 0)


def test_reduce_mod_drops_ideal_terms():
    I = MonomialIdeal(2, [(2, 0)])
    assert reduce_mod({(2, 0): 3, (1, 1): 2, (0, 2): 0}, I) == {(1, 1): 2}


def test_matrix_composition_equals_square_map():
    rng = random.Random(0)
    for name, I in full_corpus(15, 2):
        for r in (1, 2, 3):
            V = VeroneseQuotient(I, r)
            w = {m: rng.randint(-3, 3) for m in V.basis(1)} or V.power_linear_form()
            w2 = poly_mul(w, w)
            for i in range(V.socle_degree()):
                composed = V.multiplication_matrix(w, i + 1) @ V.multiplication_matrix(w, i)
                direct = quotient_multiplication_matrix(V.J, w2, V.basis(i), V.basis(i + 2))
                assert composed == direct, (name, r, i)


def test_matrix_columns_are_products_reduced_mod_J():
    V = VeroneseQuotient(fixture("weak_n4"), 2)
    w = V.power_linear_form()
    M = V.multiplication_matrix(w, 1)
    src, tgt = V.basis(1), V.basis(2)
    for j, b in enumerate(src):
        prod = reduce_mod(poly_mul(w, {b: 1}), V.J)
        col = {tgt[i]: M[i, j] for i in range(len(tgt)) if M[i, j]}
        assert col == prod
    assert isinstance(M, RationalMatrix)
