import random

import sympy

from kleincurves import MultiPoly, fraction_free_det, kernel_basis
from kleincurves.linalg import field_det, rank, ring_det, solve_left_inverse
from kleincurves.multipoly import cofactor_det


def _rand_matrix(rng, r, c):
    return [[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)]


def test_rank_and_kernel_against_sympy():
    rng = random.Random(7)
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 6)
        M = _rand_matrix(rng, r, c)
        if rng.random() < 0.4 and r > 1:
            M[-1] = [x + 2 * y for x, y in zip(M[0], M[1 % r])]
        S = sympy.Matrix(M)
        assert rank(M) == S.rank()
        ker = kernel_basis(M)
        assert len(ker) == c - S.rank()
        for v in ker:
            assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in M)


def test_determinants_agree():
    rng = random.Random(3)
    for n in range(1, 6):
        M = _rand_matrix(rng, n, n)
        d = int(sympy.Matrix(M).det())
        assert field_det(M) == d
        assert ring_det(M) == d


def test_left_inverse():
    B = [[1, 0], [2, 1], [0, 3]]
    L = solve_left_inverse(B)
    for i in range(2):
        for j in range(2):
            assert sum(L[i][k] * B[k][j] for k in range(3)) == (i == j)


def test_symbolic_determinant():
    a, b = MultiPoly.var("a"), MultiPoly.var("b")
    M = [[a, b, 1], [1, a, b], [b, 1, a]]
    sa, sb = sympy.symbols("a b")
    expected = sympy.expand(sympy.Matrix([[sa, sb, 1], [1, sa, sb], [sb, 1, sa]]).det())
    got = fraction_free_det(M)
    assert got == cofactor_det(M)
    assert sympy.expand(sympy.sympify(str(got).replace("^", "**"))) == expected
