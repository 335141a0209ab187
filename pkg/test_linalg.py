#!/usr/bin/env python3
"""
Тесты точной линейной алгебры: дроби, подпространства, сигнатура, Жордан-Шевалле.
"""

import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

# Добавляем путь к проекту
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from nilform.core.linalg import (
    NotSymmetricError,
    RationalFormatError,
    Subspace,
    SymBilinearForm,
    as_matrix,
    format_rational,
    identity,
    inverse,
    is_zero,
    mat_mul,
    nullspace,
    parse_rational,
    rank,
    rref,
    signature,
    solve_linear,
)
from nilform.core.polys import (
    charpoly,
    evaluate_at,
    factor_charpoly,
    is_nilpotent,
    is_polynomial_in,
    is_semisimple,
    jordan_chevalley,
    squarefree_part,
    X,
    ZeroPolynomialError,
)
from nilform.core.gallery import random_basis_change


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    data = draw(st.lists(
        st.lists(st.integers(-3, 3), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows,
    ))
    return as_matrix(data)


@st.composite
def symmetric_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    M = as_matrix(draw(st.lists(
        st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n,
    )))
    return M + M.T


def test_parse_and_format_rational():
    """Разбор строк "p/q" и канонический вывод."""
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(" -7 ") == Fraction(-7)
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"

    for bad in ("1/0", "abc", "1.5", "1/-2", ""):
        with pytest.raises(RationalFormatError):
            parse_rational(bad)


@settings(max_examples=60, deadline=None)
@given(int_matrices())
def test_rank_nullity(M):
    """rank + dim ker = число столбцов; базис ядра аннулируется."""
    kernel = nullspace(M)
    assert rank(M) + kernel.shape[0] == M.shape[1]
    for v in kernel:
        assert is_zero(M @ v)


@settings(max_examples=40, deadline=None)
@given(int_matrices(), int_matrices())
def test_sum_and_intersection_dimensions(A, B):
    """dim(U + W) + dim(U ∩ W) = dim U + dim W."""
    n = min(A.shape[1], B.shape[1])
    U = Subspace.span(A[:, :n], n)
    W = Subspace.span(B[:, :n], n)
    total = U + W
    common = U.intersect(W)
    assert total.dim + common.dim == U.dim + W.dim
    assert total.contains(U) and total.contains(W)
    assert U.contains(common) and W.contains(common)


@settings(max_examples=40, deadline=None)
@given(symmetric_matrices(), st.integers(0, 10_000))
def test_signature_is_congruence_invariant(G, seed):
    """Закон инерции: сигнатура не меняется при конгруэнции."""
    P = random_basis_change(np.random.default_rng(seed), G.shape[0])
    plus, minus, zero = signature(G)
    assert plus + minus + zero == G.shape[0]
    assert zero == G.shape[0] - rank(G)
    assert signature(P.T @ G @ P) == (plus, minus, zero)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10_000))
def test_inverse_of_unimodular_change(n, seed):
    P = random_basis_change(np.random.default_rng(seed), n)
    assert is_zero(inverse(P) @ P - identity(n))



@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_large_matrices_agree_with_sympy(seed):
    """Крупные матрицы идут через DomainMatrix: RREF и произведение как у sympy."""
    rng = np.random.default_rng(seed)
    left = rng.integers(-3, 4, size=(12, 9))
    M = as_matrix((left @ rng.integers(-3, 4, size=(9, 14))).tolist())
    R, pivots = rref(M)
    expected, expected_pivots = sympy.Matrix(M.tolist()).rref()
    assert list(pivots) == list(expected_pivots)
    assert R.tolist() == [[Fraction(int(v.p), int(v.q)) for v in row] for row in expected.tolist()]
    assert rank(M) <= 9

    B = as_matrix(rng.integers(-3, 4, size=(14, 11)).tolist())
    assert mat_mul(M, B).tolist() == (M @ B).tolist()

def test_solve_linear():
    A = as_matrix([[1, 2], [2, 4]])
    assert solve_linear(A, [1, 3]) is None
    solution = solve_linear(A, [1, 2])
    assert solution is not None
    assert solution.kernel.dim == 1
    assert solution.contains([-1, 1])


def test_subspace_canonical_basis():
    """Равные подпространства имеют одинаковый канонический базис."""
    U = Subspace.span([[1, 1, 0], [0, 1, 1]], 3)
    W = Subspace.span([[1, 2, 1], [1, 0, -1]], 3)
    assert U == W
    assert hash(U) == hash(W)
    assert U.coordinates([2, 3, 1]).tolist() == [Fraction(2), Fraction(3)]
    complement = U.complement()
    assert complement.dim == 1
    assert (U + complement).is_whole()


def test_form_kernel_and_orthogonal():
    form = SymBilinearForm([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    assert form.signature() == (1, 1, 1)
    assert form.kernel() == Subspace.span([[0, 0, 1]], 3)
    assert not form.is_nondegenerate()
    first = Subspace.span([[1, 0, 0]], 3)
    assert form.orthogonal(first) == Subspace.span([[0, 1, 0], [0, 0, 1]], 3)

    with pytest.raises(NotSymmetricError):
        SymBilinearForm([[0, 1], [0, 0]])


def test_charpoly_and_squarefree():
    rotation = as_matrix([[0, -1], [1, 0]])
    assert charpoly(rotation).as_expr() == X**2 + 1
    M = as_matrix([[1, 1, 0], [0, 1, 0], [0, 0, -1]])
    assert squarefree_part(charpoly(M)).as_expr() == X**2 - 1
    factors = {(str(f.as_expr()), m) for f, m in factor_charpoly(M)}
    assert factors == {("x - 1", 2), ("x + 1", 1)}
    with pytest.raises(ZeroPolynomialError):
        squarefree_part(charpoly(M) * 0)


def test_jordan_chevalley_of_jordan_block():
    M = as_matrix([[2, 1], [0, 2]])
    parts = jordan_chevalley(M)
    assert is_zero(parts.semisimple - 2 * identity(2))
    assert is_zero(parts.nilpotent - as_matrix([[0, 1], [0, 0]]))



def test_jordan_chevalley_with_irreducible_quadratic_block():
    """Сопровождающая матрица (x² + 1)²: S² = -I, N ≠ 0, N² = 0."""
    M = as_matrix([[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, -2], [0, 0, 1, 0]])
    parts = jordan_chevalley(M)
    assert parts.is_consistent(M)
    S, N = parts.semisimple, parts.nilpotent
    assert is_zero(S @ S + identity(4))
    assert not is_zero(N)
    assert is_zero(N @ N)


def test_cayley_hamilton_and_squarefree_shortcut():
    M = as_matrix([[1, 2, 0], [3, -1, 4], [0, 5, 2]])
    assert is_zero(evaluate_at(charpoly(M), M))
    # различные собственные значения: нильпотентная часть нулевая
    assert squarefree_part(charpoly(M)).degree() == 3
    parts = jordan_chevalley(M)
    assert is_zero(parts.nilpotent)
    assert is_zero(parts.semisimple - M)

@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_jordan_chevalley_properties(rows):
    """S + N = M, [S, N] = 0, N нильпотентна, S полупроста и S = p(M)."""
    M = as_matrix(rows)
    parts = jordan_chevalley(M)
    assert parts.is_consistent(M)
    assert is_nilpotent(parts.nilpotent)
    assert is_semisimple(parts.semisimple)
    assert is_polynomial_in(parts.semisimple, M)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
