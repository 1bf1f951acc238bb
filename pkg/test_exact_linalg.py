"""
Exact characteristic polynomials, determinants, roots and the Jacobi eigensolver
"""
from fractions import Fraction

import numpy as np
import pytest
import sympy

from utils.errors import InvariantViolation
from utils.exact_linalg import (ExactPoly, IntSymMatrix, bareiss_determinant, char_poly_exact,
                                divide_linear, fraction_roots, group_multiplicities,
                                integer_roots, jacobi_eigenvalues, poly_divide, poly_multiply,
                                real_roots, root_multiplicity, spectrum_from_values,
                                trace_of_square)

P3_DS = [[0, -1, -3], [-1, 0, -1], [-3, -1, 0]]


def test_char_poly_of_path_distance_seidel():
    assert char_poly_exact(P3_DS).coefficients == (1, 0, -11, 6)


@pytest.mark.parametrize('seed', range(5))
def test_char_poly_matches_sympy(seed):
    rng = np.random.default_rng(seed)
    upper = rng.integers(-7, 8, size=(6, 6))
    rows = np.triu(upper) + np.triu(upper, 1).T
    expected = sympy.Matrix(rows.tolist()).charpoly(sympy.Symbol('x')).all_coeffs()
    assert char_poly_exact(rows.tolist()).coefficients == tuple(int(c) for c in expected)


def test_char_poly_of_non_symmetric_matrix():
    assert char_poly_exact([[1, 2], [3, 4]]).coefficients == (1, -5, -2)


def test_bareiss_determinant():
    assert bareiss_determinant(P3_DS) == -6
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([]) == 1
    rows = [[2, -1, 0, 3], [-1, 4, 1, 0], [0, 1, -3, 2], [3, 0, 2, 5]]
    assert bareiss_determinant(rows) == int(sympy.Matrix(rows).det())


@pytest.mark.parametrize('seed', range(16))
def test_char_poly_agrees_with_determinant(seed):
    rng = np.random.default_rng(100 + seed)
    n = 1 + seed % 8
    upper = rng.integers(-9, 10, size=(n, n))
    rows = (np.triu(upper) + np.triu(upper, 1).T).tolist()
    poly = char_poly_exact(rows)
    for k in (-3, 0, 2, 5):
        shifted = [[k * (i == j) - rows[i][j] for j in range(n)] for i in range(n)]
        assert poly(k) == bareiss_determinant(shifted), (rows, k)


def test_symmetric_matrix_validation():
    with pytest.raises(InvariantViolation):
        IntSymMatrix.from_rows([[0, 1], [2, 0]])
    m = IntSymMatrix.from_rows(P3_DS)
    assert m.n == 3 and trace_of_square(m) == 22


def test_polynomial_division():
    p = poly_multiply((1, -3), poly_multiply((1, -3), (1, 2)))
    assert root_multiplicity(ExactPoly(p), 3) == 2
    assert root_multiplicity(ExactPoly(p), -2) == 1
    assert root_multiplicity(ExactPoly(p), 1) == 0
    assert divide_linear(p, 1) is None
    assert poly_divide((1, 0, -1), (1, 1)) == ((1, -1), (0,))
    with pytest.raises(InvariantViolation):
        poly_divide((1, 0), (2, 1))


def test_exact_poly_rendering():
    p = ExactPoly((1, 0, -11, 6))
    assert str(p) == 'x^3 - 11x + 6'
    assert p.to_json() == ['1', '0', '-11', '6']
    assert p(1) == -4 and p.degree == 3 and p.constant_term() == 6


def test_jacobi_against_numpy():
    rng = np.random.default_rng(11)
    a = rng.normal(size=(9, 9))
    a = a + a.T
    ours = jacobi_eigenvalues(a)
    reference = sorted(np.linalg.eigvalsh(a), reverse=True)
    assert ours == pytest.approx(reference, abs=1e-9)


def test_jacobi_diagonal_and_empty():
    assert jacobi_eigenvalues(np.diag([1.0, 5.0, -2.0])) == [5.0, 1.0, -2.0]
    assert jacobi_eigenvalues(np.zeros((0, 0))) == []


def test_jacobi_non_convergence_raises():
    with pytest.raises(InvariantViolation):
        jacobi_eigenvalues(np.array([[1.0, 2.0], [2.0, -1.0]]), max_sweeps=0)


def test_grouping():
    spectrum = group_multiplicities([3.0, 3.0 + 1e-10, -1.0, -5.0])
    assert spectrum.groups[0][1] == 2
    assert [m for _, m in spectrum.groups] == [2, 1, 1]
    assert spectrum.multiplicity(3.0) == 2
    assert spectrum.multiplicity(7.0) == 0
    assert spectrum.energy == pytest.approx(12.0)
    assert spectrum.radius == pytest.approx(5.0)
    assert spectrum_from_values([-5.0, 3.0, -1.0, 3.0]).eigenvalues == (3.0, 3.0, -1.0, -5.0)


def test_real_roots_with_multiplicity():
    p = poly_multiply(poly_multiply((1, -3), (1, -3)), poly_multiply((1, 1), (1, 5)))
    assert real_roots(p) == pytest.approx([3, 3, -1, -5], abs=1e-6)
    assert real_roots((1, 0, -11, 6)) == pytest.approx(
        sorted(np.roots([1, 0, -11, 6]).real, reverse=True), abs=1e-9)


def test_integer_roots():
    four_cycle = char_poly_exact([[0, -1, -3, -1], [-1, 0, -1, -3],
                                  [-3, -1, 0, -1], [-1, -3, -1, 0]])
    assert integer_roots(four_cycle) == (3, 3, -1, -5)
    assert integer_roots(ExactPoly((1, 0, -11, 6))) is None


def test_fraction_roots():
    rows = [[Fraction(1, 2), Fraction(0)], [Fraction(0), Fraction(-3)]]
    assert fraction_roots(rows) == pytest.approx([0.5, -3.0])
