import random
from fractions import Fraction as F

import pytest

from gen import leibniz_det, rand_pair, rand_poly
from sturm_inertia import matrix as matrix_mod
from sturm_inertia.chain import build_chain, refine
from sturm_inertia.inertia import determinant
from sturm_inertia.matrix import (
    SturmMatrix,
    build_matrix,
    eval_matrix,
    trailing_minor_polys,
    trailing_minor_values,
)
from sturm_inertia.poly import Polynomial as P
from sturm_inertia.poly import X

HALF_X = P([0, F(1, 2)])


def test_build_matrix_examples():
    assert build_matrix(build_chain(X * X - 1, 2 * X)).diag == (HALF_X, 2 * X)
    assert build_matrix(build_chain(X * X, 2 * X)).diag == (HALF_X,)
    S = build_matrix(build_chain(X**3 - X, 3 * X * X - 1))
    assert S.diag == (P([0, F(1, 3)]), P([0, F(9, 2)]), P([0, F(2, 3)]))


def test_symbolic_entries():
    S = SturmMatrix((HALF_X, 2 * X, X))
    assert S.entry(0, 1) == 1 and S.entry(2, 1) == 1
    assert S.entry(0, 2).is_zero()
    assert S.entry(1, 1) == 2 * X


def test_eval_matrix():
    S = SturmMatrix((HALF_X, 2 * X))
    assert eval_matrix(S, -2).diag == (-1, -4)
    assert eval_matrix(S, 0).diag == (0, 0)
    assert eval_matrix(SturmMatrix((HALF_X,)), -1).diag == (F(-1, 2),)
    E = S.at(-2)
    assert E.point == -2
    assert E.to_symmetric().rows == ((-1, 1), (1, -4))


def test_trailing_minor_examples():
    assert trailing_minor_polys(SturmMatrix((HALF_X, 2 * X))) == [2 * X, X * X - 1]
    assert trailing_minor_polys(SturmMatrix((HALF_X,))) == [HALF_X]
    S = SturmMatrix((P([0, F(1, 3)]), P([0, F(9, 2)]), P([0, F(2, 3)])))
    assert trailing_minor_polys(S) == [P([0, F(2, 3)]), 3 * X * X - 1, X**3 - X]


def test_empty_matrix_rejected():
    with pytest.raises(ValueError):
        SturmMatrix(())


def brute_trailing_minors(S: SturmMatrix) -> list[P]:
    m = S.m
    out = []
    for i in range(1, m + 1):
        idx = range(m - i, m)
        rows = [[S.entry(r, c) for c in idx] for r in idx]
        out.append(leibniz_det(rows, P(), P([1])))
    return out


def _pairs(seed, n, max_degree=6):
    rng = random.Random(seed)
    return [rand_pair(rng, max_degree) for _ in range(n)]


@pytest.mark.parametrize("f, g", _pairs(21, 50))
def test_minors_equal_refined_chain(f, g):
    c = build_chain(f, g)
    S = build_matrix(c)
    minors = trailing_minor_polys(S)
    refined = refine(c).chain
    m = c.m
    for i in range(1, m + 1):
        assert minors[i - 1] == refined[m - i]
    assert minors[-1] == refined[0]
    if m <= 5:
        assert brute_trailing_minors(S) == minors


@pytest.mark.parametrize("f, g", _pairs(22, 30))
def test_minor_values_commute_with_evaluation(f, g):
    S = build_matrix(build_chain(f, g))
    polys = trailing_minor_polys(S)
    for a in (F(-3), F(-1, 2), F(0), F(2, 3), F(5, 2)):
        E = eval_matrix(S, a)
        values = trailing_minor_values(E)
        assert values == [D(a) for D in polys]
        if S.m <= 5:
            rows = E.to_symmetric().rows
            m = S.m
            brute = [leibniz_det([r[m - i:] for r in rows[m - i:]], F(0), F(1)) for i in range(1, m + 1)]
            assert brute == values
            assert determinant(rows) == values[-1]


@pytest.mark.parametrize("seed", range(20))
def test_common_factor_leaves_matrix_unchanged(seed):
    rng = random.Random(seed)
    f, g = rand_pair(rng, 5)
    d = rand_poly(rng, rng.randint(1, 3))
    assert build_matrix(build_chain(d * f, d * g)) == build_matrix(build_chain(f, g))


def test_fault_hook_is_applied_and_removable(monkeypatch):
    c = build_chain(X * X - 1, 2 * X)
    monkeypatch.setattr(matrix_mod, "_fault_hook", lambda diag: tuple(-d for d in diag))
    assert build_matrix(c).diag == (-HALF_X, -2 * X)
    monkeypatch.setattr(matrix_mod, "_fault_hook", None)
    assert build_matrix(c).diag == (HALF_X, 2 * X)
