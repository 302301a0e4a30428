import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricseq.errors import CompositionNotZero
from toricseq.linalg import (
    FgAbGroup,
    IntMatrix,
    det,
    homology_at,
    hnf_basis,
    invariant_factors,
    kernel_basis,
    rank,
    smith_normal_form,
    solve_integer,
    wedge_power_matrix,
)

from _oracles import frac_rank, invariant_factors_oracle, leibniz_det, random_matrix, random_unimodular


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, lo=-9, hi=9):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)]
    return IntMatrix.from_rows(rows, c)


# -- Smith normal form ---------------------------------------------------------

def test_snf_identity():
    U, D, V = smith_normal_form(IntMatrix.identity(2))
    assert D == IntMatrix.identity(2)


def test_snf_2468():
    A = M([[2, 4], [6, 8]])
    U, D, V = smith_normal_form(A)
    assert D == IntMatrix.diagonal([2, 4], 2, 2)
    assert U @ D @ V == A


def test_snf_zero_1x1():
    U, D, V = smith_normal_form(M([[0]]))
    assert D == M([[0]])


def test_snf_empty_shapes():
    for r, c in [(0, 0), (0, 3), (3, 0)]:
        A = IntMatrix.zeros(r, c)
        U, D, V = smith_normal_form(A)
        assert (U.rows, V.cols) == (r, c)
        assert U @ D @ V == A


def _diag(D):
    return [D[i, i] for i in range(min(D.rows, D.cols))]


def _check_snf(A):
    U, D, V = smith_normal_form(A)
    assert U @ D @ V == A
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    d = _diag(D)
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert d[: len(nz)] == nz, "nonzero factors come first"
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    return nz


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_snf_properties(A):
    _check_snf(A)


@settings(max_examples=60, deadline=None)
@given(int_matrices(max_rows=4, max_cols=4))
def test_invariant_factors_match_determinantal_divisors(A):
    assert list(invariant_factors(A)) == invariant_factors_oracle(A.to_rows(), A.cols)


def test_snf_large_random():
    rng = random.Random(7)
    for _ in range(40):
        A = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        nz = _check_snf(A)
        assert len(nz) == frac_rank(A.to_rows())


def test_snf_deterministic():
    A = M([[3, 5, 7], [2, 4, 6], [0, 9, 1]])
    assert smith_normal_form(A) == smith_normal_form(A)


# -- determinant and rank ------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(st.integers(0, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(rows):
    n = len(rows)
    assert det(IntMatrix.from_rows(rows, n)) == leibniz_det(rows)


@settings(max_examples=80, deadline=None)
@given(int_matrices())
def test_rank_matches_rational_elimination(A):
    assert rank(A) == (frac_rank(A.to_rows()) if A.rows and A.cols else 0)


# -- kernels and saturation ------------------------------------------------------

def test_kernel_of_row_of_ones():
    K = kernel_basis(M([[1, 1]]))
    assert K.shape == (2, 1)
    assert set([K.column(0)]) <= {(1, -1), (-1, 1)}


def test_kernel_identity_empty():
    assert kernel_basis(IntMatrix.identity(3)).cols == 0


def test_kernel_zero_row():
    K = kernel_basis(IntMatrix.zeros(1, 2))
    assert K == IntMatrix.identity(2)


def _saturated(K):
    return all(d == 1 for d in invariant_factors(K))


@settings(max_examples=120, deadline=None)
@given(int_matrices(max_rows=5, max_cols=6))
def test_kernel_properties(A):
    K = kernel_basis(A)
    assert K.rows == A.cols
    assert (A @ K).is_zero()
    assert K.cols == A.cols - rank(A)
    assert rank(K) == K.cols
    assert _saturated(K)


def test_kernel_saturation_non_primitive_row():
    # 2x + 4y = 0 has kernel spanned by (2, -1), not by (4, -2)
    K = kernel_basis(M([[2, 4]]))
    assert K.cols == 1 and _saturated(K)
    assert sorted(map(abs, K.column(0))) == [1, 2]


# -- hnf_basis ---------------------------------------------------------------------

def test_hnf_basis_saturates():
    B = hnf_basis([(2, 0)])
    assert B.shape == (2, 1) and B.column(0) in {(1, 0), (-1, 0)}


def test_hnf_basis_identity():
    assert hnf_basis([(1, 0), (0, 1)]) == IntMatrix.identity(2)


def test_hnf_basis_empty():
    assert hnf_basis([], dim=3).shape == (3, 0)


def test_hnf_basis_canonical():
    # two different generating sets of the same saturated lattice
    a = hnf_basis([(1, 1, 0), (0, 1, 1)])
    b = hnf_basis([(2, 2, 0), (1, 2, 1), (1, 0, -1)])
    assert a == b


# -- solving -------------------------------------------------------------------

def test_solve_integer_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        A = random_matrix(rng, 4, 3)
        X = random_matrix(rng, 3, 2)
        B = A @ X
        Y = solve_integer(A, B)
        assert Y is not None and A @ Y == B


def test_solve_integer_unsolvable():
    assert solve_integer(M([[2]]), M([[1]])) is None


# -- homology_at ------------------------------------------------------------------

def test_homology_zero_maps():
    g = homology_at(IntMatrix.zeros(3, 0), IntMatrix.zeros(0, 3))
    assert g == FgAbGroup(3)


def test_homology_times_two():
    g = homology_at(M([[2]]), IntMatrix.zeros(0, 1))
    assert g == FgAbGroup(0, (2,))
    assert str(g) == "Z/2"


def test_homology_p1_degree0():
    # Cech complex of the P^1 fan: Z --(1,-1)^T--> Z^2 --> 0
    d1 = M([[1], [-1]])
    assert homology_at(d1, IntMatrix.zeros(0, 2)) == FgAbGroup(1)


def test_homology_rejects_nonzero_composition():
    with pytest.raises(CompositionNotZero):
        homology_at(M([[1]]), M([[1]]))


def test_homology_unimodular_invariance():
    rng = random.Random(11)
    for _ in range(60):
        a, b, c = rng.randint(0, 4), rng.randint(1, 5), rng.randint(0, 4)
        # build d_out . d_in = 0 by composing through a kernel
        d_out = random_matrix(rng, c, b, -3, 3)
        K = kernel_basis(d_out)
        if K.cols:
            d_in = K @ random_matrix(rng, K.cols, a, -3, 3)
        else:
            d_in = IntMatrix.zeros(b, a)
        h = homology_at(d_in, d_out)
        P, Q, R = random_unimodular(rng, a), random_unimodular(rng, b), random_unimodular(rng, c)
        Qi = solve_integer(Q, IntMatrix.identity(b))
        h2 = homology_at(Q @ d_in @ P, R @ d_out @ Qi)
        assert h == h2


# -- exterior powers -------------------------------------------------------------

def test_wedge_r1_is_identity_map():
    A = M([[1, 2], [3, 4], [5, 6]])
    assert wedge_power_matrix(A, 1) == A


def test_wedge_r0():
    assert wedge_power_matrix(M([[1, 2], [3, 4]]), 0) == M([[1]])
    assert wedge_power_matrix(IntMatrix.zeros(0, 0), 0) == M([[1]])


def test_wedge_top_is_det():
    A = M([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert wedge_power_matrix(A, 3) == M([[leibniz_det(A.to_rows())]])


def test_wedge_scalar():
    for n in range(1, 5):
        for r in range(n + 1):
            from math import comb

            W = wedge_power_matrix(IntMatrix.identity(n) * 3, r)
            assert W == IntMatrix.identity(comb(n, r)) * 3 ** r


def test_wedge_index_order():
    # rows and columns of the 2nd power of a 3x3 matrix are (0,1),(0,2),(1,2)
    A = M([[1, 0, 0], [0, 2, 0], [0, 0, 5]])
    assert wedge_power_matrix(A, 2) == IntMatrix.diagonal([2, 5, 10], 3, 3)


def test_wedge_functoriality_random():
    rng = random.Random(5)
    for _ in range(60):
        p, q, s = rng.randint(0, 5), rng.randint(0, 5), rng.randint(0, 5)
        A = random_matrix(rng, p, q, -4, 4)
        B = random_matrix(rng, q, s, -4, 4)
        for r in range(4):
            assert wedge_power_matrix(A @ B, r) == wedge_power_matrix(A, r) @ wedge_power_matrix(B, r)


def test_fgabgroup_rejects_bad_chain():
    with pytest.raises(ValueError):
        FgAbGroup(0, (2, 3))
    assert str(FgAbGroup(2, (2,))) == "Z^2 + Z/2"
    assert str(FgAbGroup(0)) == "0"
