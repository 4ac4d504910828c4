import itertools

import pytest

from ybme.field import make_field, parse_field
from ybme.matrix import (COMPANION, DISTINCT_DIAG, JORDAN, SCALAR, Mat2, MatrixError, all_matrices,
                         centralizer_units, char_poly, conjugate, det_trace, gl2_enumerate, mat_ops,
                         min_poly, parse_matrix, rational_canonical_form, stabilizer)

F2, F3, F5, F7 = (make_field(p) for p in (2, 3, 5, 7))


def test_basic_ops():
    X = Mat2.of(F5, [[1, 2], [3, 4]])
    assert Mat2.identity(F5) * X == X
    assert X + (-X) == Mat2.zero(F5)
    assert mat_ops(F2, "mul", Mat2.diag(F2, 1, 0), Mat2.of(F2, [[0, 1], [1, 0]])) == Mat2.of(F2, [[0, 1], [0, 0]])
    assert mat_ops(F5, "scalar_mul", 2, X) == Mat2.of(F5, [[2, 4], [1, 3]])


def test_det_trace():
    assert det_trace(Mat2.identity(F7)) == (1, 2)
    assert det_trace(Mat2.zero(F7)) == (0, 0)
    assert det_trace(Mat2.companion(F7, 3, 5)) == (5, 3)


def test_polys():
    assert char_poly(Mat2.identity(F7)).coeffs == (1, 5, 1)
    assert char_poly(Mat2.diag(F7, 1, 2)).coeffs == (2, 4, 1)
    assert char_poly(Mat2.companion(F7, 3, 5)).coeffs == (5, 4, 1)
    assert min_poly(Mat2.scalar(F7, 3)).coeffs == (4, 1)
    assert min_poly(Mat2.jordan(F7, 3)).coeffs == (2, 1, 1)  # (x - 3)^2


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_cayley_hamilton_exhaustive(q):
    F = parse_field(str(q))
    for B in all_matrices(F):
        assert char_poly(B).eval_matrix(B).is_zero()
        assert min_poly(B).eval_matrix(B).is_zero()


def test_order_and_index():
    F = F3
    mats = list(all_matrices(F))
    assert mats == sorted(mats)
    assert [M.index for M in mats] == list(range(81))
    assert Mat2.from_index(F, 17) == mats[17]


def test_parse_matrix():
    assert parse_matrix("[[1, 0],[0,2]]", F7) == Mat2.diag(F7, 1, 2)
    assert str(Mat2.diag(F7, 1, 2)) == "[[1,0],[0,2]]"
    with pytest.raises(MatrixError, match="'x'"):
        parse_matrix("[[1,x],[0,2]]", F7)
    with pytest.raises(MatrixError, match="'9'"):
        parse_matrix("[[1,9],[0,2]]", F7)
    with pytest.raises(MatrixError):
        parse_matrix("[1,2,3,4]", F7)


def test_canonical_examples():
    cf = rational_canonical_form(Mat2.of(F5, [[2, 1], [0, 3]]))
    assert (cf.tag, cf.params) == (DISTINCT_DIAG, (2, 3))
    assert conjugate(cf.P, Mat2.of(F5, [[2, 1], [0, 3]])) == Mat2.diag(F5, 2, 3)
    cf = rational_canonical_form(Mat2.jordan(F5, 4))
    assert (cf.tag, cf.params, cf.P) == (JORDAN, (4,), Mat2.identity(F5))
    cf = rational_canonical_form(Mat2.of(F3, [[1, 1], [1, 2]]))
    assert (cf.tag, cf.params) == (COMPANION, (0, 1))
    assert rational_canonical_form(Mat2.scalar(F5, 2)).tag == SCALAR


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_canonical_form_recovers_every_matrix(q):
    F = parse_field(str(q))
    for B in all_matrices(F):
        cf = rational_canonical_form(B)
        assert cf.P.is_invertible()
        assert conjugate(cf.P, B) == cf.matrix
        if cf.tag == DISTINCT_DIAG:
            assert cf.params[0] < cf.params[1]


def test_conjugate_examples():
    X = Mat2.of(F5, [[1, 2], [3, 4]])
    assert conjugate(Mat2.identity(F5), X) == X
    assert conjugate(Mat2.of(F5, [[2, 1], [1, 1]]), Mat2.zero(F5)).is_zero()
    swap = Mat2.of(F5, [[0, 1], [1, 0]])
    assert conjugate(swap, Mat2.diag(F5, 1, 3)) == Mat2.diag(F5, 3, 1)


def test_group_sizes():
    assert [len(gl2_enumerate(make_field(p))) for p in (2, 3, 5)] == [6, 48, 480]
    assert len(stabilizer(Mat2.scalar(F3, 1))) == 48
    assert len(stabilizer(Mat2.diag(F5, 1, 2))) == 16
    assert len(stabilizer(Mat2.companion(F3, 0, 1))) == 8


@pytest.mark.parametrize("q", [2, 3, 4])
def test_centralizer_shortcut(q):
    F = parse_field(str(q))
    for A in itertools.islice(all_matrices(F), 0, None, 7):
        assert centralizer_units(A) == stabilizer(A)
