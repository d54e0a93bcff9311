"""Determinants, elimination, subspaces and the projection formula."""

import random

import pytest

from jspec.exactla import (
    Matrix,
    Subspace,
    automorphism_entrywise,
    det_leibniz,
    gram_schmidt,
    hstack,
    matrix_from_json,
    matrix_to_json,
    projection_onto,
    vdot,
    vstack,
)
from jspec.scalar import ALL_AUTOMORPHISMS, FieldContext, Automorphism
from fractions import Fraction

K = FieldContext(2)
I_ = K.i
R_ = K.sqrt_d
POOL = [K.zero, K.one, -K.one, K.elem(2), K.elem(-2), I_, -I_, R_, -R_,
        1 + I_, 1 - I_, 1 + R_, 1 - R_]


def random_matrix(rng, nrows, ncols, ctx=K):
    pool = POOL if ctx is K else [ctx.zero, ctx.one, -ctx.one, ctx.i, ctx.sqrt_d]
    return Matrix([[rng.choice(pool) for _ in range(ncols)]
                   for _ in range(nrows)], ctx, ncols=ncols)


def random_independent(rng, nrows, ncols):
    while True:
        a = random_matrix(rng, nrows, ncols)
        if a.rank() == ncols:
            return a


# -- determinant ---------------------------------------------------------------


def test_det_fixed_values():
    assert Matrix.identity(3, K).det() == 1
    assert Matrix([[0, 1], [1, 0]], K).det() == -1
    assert Matrix([[1, R_], [R_, 2]], K).det() == 0
    assert Matrix([[K.one]], K).det() == 1
    assert Matrix([], K, ncols=0).det() == 1


def test_det_requires_square():
    with pytest.raises(ValueError):
        Matrix.zeros(2, 3, K).det()


def test_det_matches_leibniz_oracle():
    rng = random.Random(1001)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n, n)
        assert m.det() == det_leibniz(m)


def test_det_is_multiplicative():
    rng = random.Random(1002)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n)
        b = random_matrix(rng, n, n)
        assert (a * b).det() == a.det() * b.det()


def test_det_of_triangular_is_diagonal_product():
    m = Matrix([[1, R_, I_], [0, 2 + I_, R_], [0, 0, K.elem(Fraction(1, 3))]], K)
    assert m.det() == (2 + I_) * Fraction(1, 3)


# -- elimination ----------------------------------------------------------------


def test_rank_fixed_values():
    assert Matrix.diag([K.one, K.zero, K.zero], K).rank() == 1
    assert Matrix.identity(4, K).rank() == 4
    assert Matrix.zeros(3, 3, K).rank() == 0
    assert Matrix([[1, R_], [R_, 2]], K).rank() == 1


def test_kernel_basis():
    ker = Matrix([[K.one, K.one]], K).kernel_basis()
    assert ker.ncols == 1
    assert ker.colspace() == Matrix([[K.one], [-K.one]], K).colspace()
    assert Matrix.identity(3, K).kernel_basis().ncols == 0


def test_kernel_is_annihilated():
    rng = random.Random(1003)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        ker = m.kernel_basis()
        assert ker.ncols == m.ncols - m.rank()
        if ker.ncols:
            assert (m * ker).is_zero()
        assert ker.rank() == ker.ncols


def test_solve():
    ident = Matrix.identity(2, K)
    assert ident.solve([I_, R_]) == (I_, R_)
    m = Matrix([[1, 1], [0, 0]], K)
    assert m.solve([K.one, K.one]) is None
    x = m.solve([K.elem(3), K.zero])
    assert x is not None and m.matvec(x) == (K.elem(3), K.zero)


def test_solve_random_consistent():
    rng = random.Random(1004)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        target = m.matvec([rng.choice(POOL) for _ in range(m.ncols)])
        x = m.solve(target)
        assert x is not None and m.matvec(x) == target


def test_inverse():
    rng = random.Random(1005)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, n)
        if m.det():
            assert m * m.inverse() == Matrix.identity(n, K)
        else:
            with pytest.raises(ValueError):
                m.inverse()


# -- conjugate transpose ----------------------------------------------------------


def test_conj_transpose_fixed():
    assert Matrix([[I_]], K).conj_transpose() == Matrix([[-I_]], K)
    sym = Matrix([[1, 2], [2, 3]], K)
    assert sym.conj_transpose() == sym
    m = Matrix([[0, 1 + I_], [0, 0]], K)
    assert m.conj_transpose() == Matrix([[0, 0], [1 - I_, 0]], K)


def test_conj_transpose_involution_and_product_rule():
    rng = random.Random(1006)
    for _ in range(100):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert a.conj_transpose().conj_transpose() == a
        b = random_matrix(rng, a.ncols, rng.randint(1, 4))
        assert (a * b).conj_transpose() == b.conj_transpose() * a.conj_transpose()


# -- projection onto a column space ------------------------------------------------


def test_projection_fixed_values():
    e1 = Matrix([[1], [0], [0]], K)
    assert projection_onto(e1) == Matrix.diag([K.one, K.zero, K.zero], K)
    half = Fraction(1, 2)
    assert projection_onto(Matrix([[1], [1]], K)) == \
        Matrix([[half, half], [half, half]], K)
    third = K.one / 3
    assert projection_onto(Matrix([[1], [R_]], K)) == \
        Matrix([[third, third * R_], [third * R_, 2 * third]], K)


def test_projection_identities_random():
    rng = random.Random(1007)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = random_independent(rng, n, rng.randint(1, n))
        p = projection_onto(a)
        assert p * p == p
        assert p.conj_transpose() == p
        assert p * a == a
        assert p.rank() == a.ncols


def test_projection_rejects_dependent_columns():
    with pytest.raises(ValueError):
        projection_onto(Matrix([[1, 2], [1, 2]], K))


def test_projection_of_empty_span_is_zero():
    a = Matrix.from_columns([], K, nrows=3)
    assert projection_onto(a) == Matrix.zeros(3, 3, K)


# -- automorphisms entrywise -------------------------------------------------------


def test_automorphism_entrywise_fixed():
    m = Matrix([[1, R_], [R_, 2]], K)
    assert automorphism_entrywise(Automorphism.FLIP, m) == \
        Matrix([[1, -R_], [-R_, 2]], K)
    real = Matrix([[1, 2], [3, 4]], K)
    assert automorphism_entrywise(Automorphism.CONJ, real) == real
    tri = Matrix([[1, R_], [0, 1]], K)
    assert automorphism_entrywise(Automorphism.FLIP, tri).det() == tri.det() == 1


def test_automorphism_commutes_with_det_and_preserves_rank():
    rng = random.Random(1008)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n, rng.randint(1, 4))
        for f in ALL_AUTOMORPHISMS:
            fm = automorphism_entrywise(f, m)
            assert fm.rank() == m.rank()
            if m.is_square:
                assert fm.det() == f(m.det())


# -- subspaces ---------------------------------------------------------------------


def test_subspace_equality_is_representation_free():
    rng = random.Random(1009)
    for _ in range(100):
        n = rng.randint(2, 4)
        a = random_matrix(rng, n, 2)
        change = random_independent(rng, 2, 2)
        assert a.colspace() == (a * change).colspace()


def test_subspace_contains():
    v = Matrix([[1, 0], [0, 1], [0, 0]], K).colspace()
    assert v.dim == 2
    assert v.contains([K.one, 1 + I_, K.zero])
    assert not v.contains([K.zero, K.zero, K.one])
    zero_space = Matrix.from_columns([], K, nrows=3).colspace()
    assert zero_space.dim == 0
    assert zero_space.contains([K.zero] * 3)
    assert not zero_space.contains([K.one, K.zero, K.zero])


def test_dim_formula_intersection_and_sum():
    rng = random.Random(1010)
    ident_cache = {}
    for _ in range(200):
        n = rng.randint(2, 5)
        a = random_matrix(rng, n, rng.randint(1, n))
        b = random_matrix(rng, n, rng.randint(1, n))
        if n not in ident_cache:
            ident_cache[n] = Matrix.identity(n, K)
        pv = projection_onto(a.colspace().basis)
        pw = projection_onto(b.colspace().basis)
        common = vstack(ident_cache[n] - pv, ident_cache[n] - pw).kernel_basis()
        dim_meet = common.ncols
        dim_join = hstack(a, b).rank()
        assert dim_meet + dim_join == a.rank() + b.rank()


def test_gram_schmidt_orthogonalizes():
    rng = random.Random(1011)
    for _ in range(100):
        n = rng.randint(2, 5)
        a = random_matrix(rng, n, rng.randint(1, n))
        g = gram_schmidt(a)
        assert g.colspace() == a.colspace()
        cols = g.columns()
        for s in range(len(cols)):
            for t in range(s + 1, len(cols)):
                assert not vdot(cols[s], cols[t], K)


def test_vdot_is_a_hermitian_form():
    x = (I_, R_)
    y = (K.one, 1 + I_)
    assert vdot(x, y, K) == vdot(y, x, K).conj()
    assert vdot(x, x, K).real_sign() == 1


# -- text form ----------------------------------------------------------------------


def test_matrix_json_roundtrip():
    rng = random.Random(1012)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert matrix_from_json(matrix_to_json(m)) == m


def test_matrix_json_fixed_form():
    m = Matrix([[K.one, K.elem(Fraction(1, 2), 0, 1)]], K)
    assert matrix_to_json(m) == {"d": 2, "rows": [["1", "1/2+i"]]}


def test_matrix_json_errors():
    for bad in (None, [], {"rows": "x"}, {"d": 2}, {"d": "2", "rows": []},
                {"d": 2, "rows": [["1"], ["2", "3"]]},
                {"d": 2, "rows": [[5]]}, {"d": 4, "rows": [["1"]]}):
        with pytest.raises(ValueError):
            matrix_from_json(bad)
    with pytest.raises(ValueError):
        matrix_from_json({"d": 3, "rows": [["1"]]}, K)


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]], K)
    with pytest.raises(ValueError):
        Matrix.identity(2, K) + Matrix.identity(3, K)
    with pytest.raises(ValueError):
        Matrix.zeros(2, 3, K) * Matrix.zeros(2, 3, K)
    with pytest.raises(ValueError):
        Matrix([[FieldContext(3).one, K.one]])
