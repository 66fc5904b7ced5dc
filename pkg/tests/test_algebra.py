import numpy as np
import pytest
from hypothesis import given, strategies as st

from khtorus.algebra import (AbelianGroupIso, Label, SNFResult, SparseIntMatrix,
                             frobenius_axiom_failures, frobenius_tables, homology_of_pair,
                             integer_kernel, rank_q, snf)

from conftest import sympy_invariant_factors


def small_matrices(max_dim=7, lo=-4, hi=4):
    return st.integers(1, max_dim).flatmap(lambda r: st.integers(1, max_dim).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def sparse_like(dense, density):
    return [[v if (i * 7 + j * 3) % density == 0 else 0 for j, v in enumerate(row)]
            for i, row in enumerate(dense)]


@pytest.mark.parametrize("name", ["KHOVANOV", "LEE"])
def test_frobenius_axioms(name):
    assert frobenius_axiom_failures(frobenius_tables(name)) == []


def test_frobenius_tables_values():
    kh, lee = frobenius_tables("KHOVANOV"), frobenius_tables("LEE")
    assert kh.m(Label.X, Label.X) == {}
    assert lee.m(Label.X, Label.X) == {Label.ONE: 1}
    assert kh.delta(Label.X) == {(Label.X, Label.X): 1}
    with pytest.raises(ValueError):
        frobenius_tables("BAR")


def test_matrix_basics():
    M = SparseIntMatrix.from_dense([[1, 0, 2], [0, 0, -3]])
    assert M.shape == (2, 3) and M.nnz == 3
    assert M.to_dense() == [[1, 0, 2], [0, 0, -3]]
    assert M.transpose().to_dense() == [[1, 0], [0, 0], [2, -3]]
    assert (M @ M.transpose()).to_dense() == [[5, -6], [-6, 9]]
    assert SparseIntMatrix.zeros(2, 2).is_zero()
    assert SparseIntMatrix.from_scipy(M.to_scipy()) == M
    assert M.max_abs() == 3


def test_known_snf():
    M = SparseIntMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert snf(M).factors == (2, 6, 12)
    with pytest.raises(ValueError):
        SNFResult((2, 3))


def test_group_str():
    assert str(AbelianGroupIso(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert str(AbelianGroupIso()) == "0"


@given(small_matrices(), st.integers(1, 3))
def test_snf_against_sympy(dense, density):
    dense = sparse_like(dense, density)
    M = SparseIntMatrix.from_dense(dense)
    got = list(snf(M).factors)
    assert got == sympy_invariant_factors(dense)


@given(small_matrices(), st.integers(1, 3))
def test_rank_against_sympy(dense, density):
    from sympy import Matrix
    dense = sparse_like(dense, density)
    assert rank_q(SparseIntMatrix.from_dense(dense)) == Matrix(dense).rank()


def test_large_unit_phase_against_sympy():
    # big enough to go through the vectorised unit phase
    rng = np.random.default_rng(7)
    for _ in range(5):
        A = rng.integers(-1, 2, size=(30, 24)) * (rng.random((30, 24)) < 0.2)
        B = rng.integers(-2, 3, size=(24, 26)) * (rng.random((24, 26)) < 0.3)
        dense = (A @ B).tolist()
        M = SparseIntMatrix.from_dense(dense)
        assert list(snf(M).factors) == sympy_invariant_factors(dense)


def test_homology_of_pair_rp2_like():
    # Z --2--> Z --0--> 0 gives Z/2
    d_in = SparseIntMatrix.from_dense([[2]])
    d_out = SparseIntMatrix.zeros(0, 1)
    assert homology_of_pair(d_in, d_out, "Z") == AbelianGroupIso(0, (2,))
    assert homology_of_pair(d_in, d_out, "Q") == AbelianGroupIso(0)
    with pytest.raises(ArithmeticError):
        homology_of_pair(SparseIntMatrix.from_dense([[1]]), SparseIntMatrix.from_dense([[1]]))


@given(small_matrices(max_dim=6, lo=-3, hi=3))
def test_integer_kernel(rows):
    from sympy import Matrix
    n = len(rows[0])
    K = integer_kernel(rows, n)
    A = np.array(rows, dtype=object)
    for v in K:
        assert not any(A.dot(np.array(v, dtype=object)))
    assert len(K) == n - Matrix(rows).rank()
    if K:
        # saturated: the kernel lattice has trivial invariant factors
        assert set(sympy_invariant_factors(K)) <= {1}
