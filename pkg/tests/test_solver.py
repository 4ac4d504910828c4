import random

import pytest

from ybme.field import make_field, parse_field
from ybme.matrix import Mat2, all_matrices
from ybme.solver import (CLOSED_FORM, CONJECTURAL, ORACLE, brute_force_solutions, delta_invariant,
                         predict_cardinality, residual, solve, solve_A1, solve_A1_nonzero,
                         solve_A1_one_zero, solve_A2, solve_A3)

F2, F3, F5, F7, F11 = (make_field(p) for p in (2, 3, 5, 7, 11))


def mats(F, rows_list):
    return {Mat2.of(F, r) for r in rows_list}


def test_residual():
    A = Mat2.diag(F2, 1, 0)
    assert residual(A, Mat2.zero(F2)).is_zero()
    assert residual(A, A).is_zero()
    assert residual(A, Mat2.of(F2, [[0, 1], [1, 0]])) == Mat2.of(F2, [[0, 0], [0, 1]])


def test_one_zero_over_f2():
    sol = solve_A1_one_zero(F2, 1)
    assert sol.point_set() == mats(F2, [
        [[0, 0], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]], [[0, 0], [1, 1]],
        [[0, 1], [0, 0]], [[0, 1], [0, 1]], [[1, 0], [0, 0]], [[1, 0], [0, 1]]])
    assert set(sol.component("D1").members) == {X for X in sol.points if X.entries[:2] == (0, 0)}
    assert sol.provenance == CLOSED_FORM


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_one_zero_counts(q):
    F = parse_field(str(q))
    for c in F.nonzero():
        sol = solve_A1_one_zero(F, c)
        assert len(sol) == 2 * q * q
        assert not set(sol.component("D1").members) & set(sol.component("D3").members)


def test_distinct_nonzero_examples():
    assert delta_invariant(F3, 1, 2) == 0
    assert solve_A1_nonzero(F3, 1, 2).point_set() == mats(F3, [
        [[0, 0], [0, 0]], [[1, 0], [0, 0]], [[0, 0], [0, 2]], [[1, 0], [0, 2]],
        [[1, 0], [1, 2]], [[1, 0], [2, 2]], [[1, 1], [0, 2]], [[1, 2], [0, 2]]])
    sol = solve_A1_nonzero(F7, 1, 2)
    assert len(sol) == 10
    family = sol.component("E3").members
    assert all(X.entries[0] == 4 and X.entries[3] == 6 and F7.mul(X.entries[1], X.entries[2]) == 1
               for X in family)
    assert len(solve_A1_nonzero(F5, 1, 2)) == 8


def test_jordan_examples():
    sol = solve_A2(F5, 2)
    assert sol.point_set() == mats(F5, [
        [[0, 0], [0, 0]], [[2, 1], [0, 2]], [[0, 1], [1, 4]], [[1, 4], [1, 3]],
        [[2, 0], [1, 2]], [[3, 4], [1, 1]], [[4, 1], [1, 0]]])
    sol3 = solve_A2(F5, 3)
    assert all(X.entries[2] == 1 for X in sol3.component("E").members)
    assert len(solve_A2(F3, 0)) == 15


def test_companion():
    assert solve_A3(F5, 1, 2).point_set() == {Mat2.zero(F5), Mat2.companion(F5, 1, 2)}
    assert len(solve_A3(F11, 5, 1)) == 2
    sol = solve_A3(F3, 1, 2)
    assert len(sol) == 6 and sol.provenance == CONJECTURAL
    assert solve_A3(F2, 1, 1).provenance == ORACLE


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_solve_matches_oracle_everywhere(q):
    F = parse_field(str(q))
    rng = random.Random(q)
    sample = list(all_matrices(F)) if q <= 3 else [Mat2.from_index(F, rng.randrange(q ** 4)) for _ in range(60)]
    for B in sample:
        sol = solve(B)
        assert sol.point_set() == brute_force_solutions(B).point_set()
        assert sol.verify()
        assert Mat2.zero(F) in sol.point_set() and B in sol.point_set()


def test_similar_matrices_have_equal_counts():
    assert len(solve(Mat2.of(F5, [[2, 1], [0, 3]]))) == len(solve_A1(F5, 2, 3))
    A = Mat2.jordan(F5, 2)
    assert solve(A).point_set() == solve_A2(F5, 2).point_set()


def test_predictions():
    for q in (2, 3, 5, 7):
        F = parse_field(str(q))
        p = predict_cardinality(Mat2.diag(F, 1, 0))
        assert (p.value, p.source) == (2 * q * q, "Thm1_case1")
    p = predict_cardinality(Mat2.jordan(F7, 3))
    assert (p.value, p.source) == (9, "Thm2_cNonzero")
    p = predict_cardinality(Mat2.companion(F7, 0, 1))  # x^2 + 1 has no root mod 7
    assert (p.value, p.source) == (10, "Conjecture6_5")
    assert predict_cardinality(Mat2.scalar(F7, 2)).value is None
    assert predict_cardinality(Mat2.companion(F2, 1, 1)).source == "none"
    assert predict_cardinality(Mat2.diag(F7, 1, 2)).to_json()["deltaInvariant"] == 3


def test_json_shape():
    sol = solve(Mat2.diag(F2, 1, 0))
    data = sol.to_json()
    assert set(data) == {"field", "A", "cardinality", "provenance", "components", "points"}
    assert data["field"] == "2^1" and data["cardinality"] == 8 and len(data["points"]) == 8
    assert data["A"] == [[1, 0], [0, 0]]
    assert sol.dumps() == solve(Mat2.diag(F2, 1, 0)).dumps()
