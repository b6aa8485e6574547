import itertools
import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from veronese_lefschetz import ert
from veronese_lefschetz import monomials as mon
from veronese_lefschetz.corpus import fixture, full_corpus
from veronese_lefschetz.exactla import rank
from veronese_lefschetz.monomials import MonomialIdeal
from veronese_lefschetz.upoly import IntPolynomial, h_to_g
from veronese_lefschetz.veronese import VeroneseQuotient


# ---------------------------------------------------------------- chains

def test_is_standard_examples():
    assert ert.is_standard([(2, 0), (1, 1)])  # max(x1^2) = 1 <= min(x1*x2) = 1
    assert ert.is_standard([(2, 0, 0), (0, 1, 1)])
    assert not ert.is_standard([(0, 1, 1), (2, 0, 0)])  # not revlex-descending
    assert not ert.is_standard([(1, 1, 0), (1, 0, 1)])  # max 2 > min 1
    assert ert.is_standard([])
    with pytest.raises(ValueError):
        ert.is_standard([(1, 0), (1, 1)])


def test_sort_normal_form_examples():
    assert ert.sort_normal_form([(1, 0, 1), (1, 1, 0)]) == ((2, 0, 0), (0, 1, 1))
    assert ert.monomial_to_chain((1, 2, 1), 2) == ((1, 1, 0), (0, 1, 1))
    with pytest.raises(ValueError):
        ert.monomial_to_chain((1, 1, 1), 2)
    with pytest.raises(ValueError):
        ert.sort_normal_form([])


def test_standard_membership():
    J = MonomialIdeal(3, [(2, 0, 0)])
    assert ert.standard_membership(((2, 0, 0), (0, 1, 1)), J)
    assert not ert.standard_membership(((1, 1, 0), (0, 1, 1)), J)
    with pytest.raises(ValueError):
        ert.standard_membership(((0, 1, 1), (2, 0, 0)), J)


@st.composite
def multisets(draw):
    n = draw(st.integers(1, 5))
    r = draw(st.integers(1, 4))
    k = draw(st.integers(1, 5))
    pool = list(mon.monomials_of_degree(n, r))
    return [draw(st.sampled_from(pool)) for _ in range(k)]


@given(multisets())
def test_sort_normal_form_properties(ms):
    chain = ert.sort_normal_form(ms)
    assert ert.is_standard(chain)
    assert ert.product(chain) == ert.product(ms)
    assert ert.sort_normal_form(chain) == chain


def test_sort_normal_form_round_trip_seeded():
    rng = random.Random(2024)
    for _ in range(1000):
        n, r, k = rng.randint(1, 5), rng.randint(1, 4), rng.randint(1, 5)
        pool = list(mon.monomials_of_degree(n, r))
        ms = [rng.choice(pool) for _ in range(k)]
        chain = ert.sort_normal_form(ms)
        assert ert.product(chain) == ert.product(ms) and ert.is_standard(chain)


@pytest.mark.parametrize("n, r, k", [(n, r, k) for n in range(1, 5) for r in range(1, 5) for k in range(1, 4)])
def test_standard_chain_count(n, r, k):
    assert ert.count_standard_chains(n, r, k) == comb(n - 1 + k * r, k * r)


def test_standard_chains_biject_with_monomials():
    n, r, k = 3, 2, 3
    vertices = mon.sort_revlex(mon.monomials_of_degree(n, r))
    chains = ert.enumerate_standard_chains(vertices, max_length=k)[k]
    products = [ert.product(vertices[i] for i in c) for c in chains]
    assert sorted(products) == sorted(mon.monomials_of_degree(n, k * r))
    # and these are exactly the standard multisets among all multisets of size k
    allsets = itertools.combinations_with_replacement(range(len(vertices)), k)
    standard = [c for c in allsets if ert.is_standard([vertices[i] for i in c])]
    assert sorted(standard) == sorted(chains)


@st.composite
def chain_pairs(draw):
    nv = draw(st.integers(1, 6))
    k = draw(st.integers(0, 4))
    ids = st.lists(st.integers(0, nv - 1), min_size=k, max_size=k).map(lambda c: tuple(sorted(c)))
    return nv, draw(ids), draw(ids)


@given(chain_pairs())
def test_chain_key_realizes_revlex(data):
    nv, u, v = data
    # ids are positions in a descending variable list: id 0 is the largest variable
    if u == v:
        assert ert.chain_key(u) == ert.chain_key(v)
    else:
        assert (ert.chain_key(u) < ert.chain_key(v)) == ert.chain_revlex_greater(u, v, nv)


def test_chain_revlex_oracle_small_cases():
    # z0 > z1 > z2: z0*z2 vs z1*z1 -> z1^2 > z0*z2 in revlex (fewer occurrences of the smallest variable z2)
    assert ert.chain_revlex_greater((1, 1), (0, 2), 3)
    assert ert.chain_revlex_greater((0, 0), (0, 1), 2)


# ---------------------------------------------------------------- complexes

def test_complex_validation():
    ert.SimplicialComplex(["a", "b"], [(), (0,), (1,), (0, 1)])
    with pytest.raises(ValueError):
        ert.SimplicialComplex(["a"], [(0,)])
    with pytest.raises(ValueError):
        ert.SimplicialComplex(["a", "b"], [(), (0,), (0, 1)])
    with pytest.raises(ValueError):
        ert.SimplicialComplex(["a", "b", "c"], [(), (0,), (1,), (2,), (0, 1, 2)])


def _full_simplex(nv):
    return ert.SimplicialComplex(range(nv), [c for k in range(nv + 1) for c in itertools.combinations(range(nv), k)])


def test_f_polynomial_examples():
    assert ert.f_polynomial(ert.SimplicialComplex([], [()])) == IntPolynomial([1])
    assert ert.f_polynomial(_full_simplex(2)) == IntPolynomial([1, 2, 1])


def test_is_flag_examples():
    assert ert.is_flag(_full_simplex(3))
    hollow = ert.SimplicialComplex(range(3), [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)])
    assert not ert.is_flag(hollow)


def _clique_oracle(C):
    nv = len(C.vertices)
    edges = {f for f in C.faces if len(f) == 2}
    for k in range(nv + 1):
        for S in itertools.combinations(range(nv), k):
            if all(p in edges for p in itertools.combinations(S, 2)) and S not in C.faces:
                return False
    return True


def _random_complex(rng, nv):
    faces = {()} | {(v,) for v in range(nv)}
    for k in range(2, nv + 1):
        for S in itertools.combinations(range(nv), k):
            if all(S[:i] + S[i + 1:] in faces for i in range(k)) and rng.random() < 0.6:
                faces.add(S)
    return ert.SimplicialComplex(range(nv), faces)


def test_is_flag_matches_clique_oracle():
    rng = random.Random(7)
    for _ in range(400):
        C = _random_complex(rng, rng.randint(0, 6))
        assert ert.is_flag(C) == _clique_oracle(C)


def test_facets():
    C = ert.SimplicialComplex(range(3), [(), (0,), (1,), (2,), (0, 1)])
    assert C.facets() == [(2,), (0, 1)]


# ---------------------------------------------------------------- delta

def V_of(n, gens, r):
    return VeroneseQuotient(MonomialIdeal(n, gens), r)


def test_build_delta_examples():
    D = ert.build_delta(V_of(2, [], 2))
    assert D.vertices == [(1, 1)] and D.faces == {(), (0,)}
    assert ert.f_polynomial(D) == IntPolynomial([1, 1])

    D = ert.build_delta(V_of(2, [], 3))
    assert sorted(D.vertices) == sorted([(2, 1), (1, 2)])
    assert ert.f_polynomial(D) == IntPolynomial([1, 2])

    # every degree-r monomial lies in J: only the empty face
    D = ert.build_delta(V_of(2, [(1, 0)], 5))
    assert D.vertices == [] and ert.f_polynomial(D) == IntPolynomial([1])


def test_build_delta_remark():
    V = VeroneseQuotient(mon.remark_ideal(), 3)
    D = ert.build_delta(V)
    assert ert.f_polynomial(D) == IntPolynomial([1, 67, 76])
    assert D.is_simplicial and ert.is_flag(D)


def test_build_delta_faces_are_standard_and_outside_J():
    for name, I in full_corpus(10, 3):
        for r in (1, 2, 3):
            V = VeroneseQuotient(I, r)
            D = ert.build_delta(V)
            for f in D.faces:
                chain = [D.vertices[i] for i in f]
                assert ert.is_standard(chain)
                if f:
                    assert not ert.standard_membership(chain, V.J)


def test_delta_small_r_is_a_multicomplex():
    # r below (deg h + 1)/2: repeated vertices appear and the face count still matches
    V = VeroneseQuotient(fixture("x1cube_n2"), 1)
    D = ert.build_delta(V)
    assert not D.is_simplicial
    assert ert.f_polynomial(D) == V.h_transform() == IntPolynomial([1, 1, 1])


def test_delta_flag_and_pure_powers_above_threshold():
    for name, I in full_corpus(20, 9):
        for r in range(1, 7):
            V = VeroneseQuotient(I, r)
            if 2 * r >= V.h.degree + 1:
                D = ert.build_delta(V)
                assert D.is_simplicial and ert.is_flag(D), (name, r)
                assert ert.pure_power_closed(V), (name, r)


# ---------------------------------------------------------------- gamma

def test_build_gamma_examples():
    G = ert.build_gamma(V_of(2, [], 2))
    assert G.faces == {()}
    V = V_of(3, [(2, 0, 0)], 2)
    assert list(V.h_transform()) == [1, 3]
    assert ert.build_gamma(V).faces == {()}


def test_build_gamma_remark():
    V = VeroneseQuotient(mon.remark_ideal(), 3)
    G = ert.build_gamma(V)
    assert len(G.vertices) == 66
    assert ert.f_polynomial(G) == IntPolynomial([1, 66]) == h_to_g(V.h_transform())


def test_build_gamma_requires_r_at_least_deg_h():
    V = VeroneseQuotient(mon.remark_ideal(), 1)
    with pytest.raises(ValueError):
        ert.build_gamma(V)


def test_gamma_face_counts_match_cokernel_dimensions():
    """f_k(Gamma) = dim A_k - rank(w: A_{k-1} -> A_k), computed without any chain combinatorics."""
    for name, I in full_corpus(20, 13):
        for r in range(1, 7):
            V = VeroneseQuotient(I, r)
            if r < V.h.degree:
                continue
            f = ert.f_polynomial(ert.build_gamma(V))
            w = V.power_linear_form()
            lam = V.h_transform().degree
            for k in range(1, lam // 2 + 1):
                coker = V.graded_dim(k) - rank(V.multiplication_matrix(w, k - 1))
                assert f[k] == coker, (name, r, k)


def test_gamma_pivots_independent_of_scaling_w():
    V = VeroneseQuotient(fixture("borel_n4"), 3)
    w = V.power_linear_form()
    G1 = ert.build_gamma(V, w)
    G2 = ert.build_gamma(V, {m: 7 * c for m, c in w.items()})
    assert G1.faces == G2.faces


def test_complex_json():
    V = VeroneseQuotient(fixture("weak_n4"), 2)
    data = ert.build_delta(V).to_json()
    assert set(data) == {"vertices", "facets", "f_polynomial"}
    assert all(isinstance(i, str) for f in data["facets"] for i in f)
    assert data["f_polynomial"] == V.h_transform().to_json()
