import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import leibniz_det, rand_invertible, rand_low_rank, rand_symmetric
from sturm_inertia.chain import build_chain
from sturm_inertia.inertia import (
    InertiaTriple,
    MinorSequence,
    NormalSequenceNotFound,
    SymMatrix,
    bordered_q_update,
    determinant,
    find_normal_sequence,
    inertia_congruence,
    is_normal,
    q_from_normal_sequence,
    rank,
)
from sturm_inertia.matrix import build_matrix
from sturm_inertia.poly import Polynomial, X


def test_symmetry_enforced():
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        SymMatrix([[1, 2], [2]])


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (3, 0, 0)),
        ([[0, 1], [1, 0]], (1, 1, 0)),
        ([[-1, 1], [1, -4]], (0, 2, 0)),
        ([[0, 0], [0, 0]], (0, 0, 2)),
        ([[0, 0, 1], [0, 0, 0], [1, 0, 0]], (1, 1, 1)),
        ([[F(-1, 2), 1], [1, -2]], (0, 1, 1)),
    ],
)
def test_inertia_examples(rows, expected):
    t = inertia_congruence(SymMatrix(rows))
    assert t == expected
    assert t.n == len(rows)


def test_rank_examples():
    assert rank(SymMatrix([[0, 0], [0, 0]])) == 0
    assert rank(SymMatrix([[1, 1], [1, 1]])) == 1
    E = build_matrix(build_chain(X * X, 2 * X)).at(0)
    assert rank(E.to_symmetric()) == 0


def test_is_normal_examples():
    assert is_normal([-1, 3], 2)
    assert not is_normal([0, 0, 1], 3)
    assert is_normal([1, 0], 1)
    assert not is_normal([1, 0], 2)
    assert is_normal([0, 0], 0)


def test_q_from_normal_sequence_examples():
    assert q_from_normal_sequence([-1, 3], 2) == 2
    assert q_from_normal_sequence([1, 1, 1], 3) == 0
    assert q_from_normal_sequence([0, -1], 2) == 1
    assert inertia_congruence(SymMatrix([[0, 1], [1, 5]])).q == 1
    with pytest.raises(ValueError):
        q_from_normal_sequence([0, 0, 1], 3)


def test_find_normal_sequence_examples():
    seq = find_normal_sequence(SymMatrix([[-1, 1], [1, -4]]))
    assert seq.index_sets == ((0,), (0, 1)) and seq.values == (-1, 3)
    seq = find_normal_sequence(SymMatrix([[0, 1], [1, 0]]))
    assert seq.values == (0, -1)
    seq = find_normal_sequence(SymMatrix([[0, 0], [0, 0]]))
    assert len(seq.index_sets) == 2


def test_minor_sequence_validates_nesting():
    with pytest.raises(ValueError):
        MinorSequence(((0,), (1, 2)), (F(1), F(1)))
    with pytest.raises(ValueError):
        MinorSequence(((0,),), (F(1), F(2)))


def test_bordered_update_examples():
    assert bordered_q_update(0, 1, -1) == 1
    assert bordered_q_update(0, 1, 0) == 0
    assert bordered_q_update(0, 0, -1) == 1
    B = SymMatrix([[1, 1], [1, 1]])
    assert B.det() == 0 and inertia_congruence(B).q == 0
    A = SymMatrix([[1, 0], [0, 0]])
    B = A.bordered([0, 1], 0)
    assert B.det() == -1 and inertia_congruence(B) == (2, 1, 0)
    with pytest.raises(ValueError):
        bordered_q_update(0, 0, 0)


def _char_poly_zero_multiplicity(A: SymMatrix) -> int:
    """Multiplicity of 0 as a root of det(tI - A), by a Leibniz expansion."""
    n = A.n
    rows = [[Polynomial([-A[i, j], 1 if i == j else 0]) for j in range(n)] for i in range(n)]
    chi = leibniz_det(rows, Polynomial(), Polynomial([1]))
    return next(k for k, c in enumerate(chi.coeffs) if c != 0)


@pytest.mark.parametrize("seed", range(40))
def test_oracle_nullity_matches_characteristic_polynomial(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    A = rand_low_rank(rng, n, rng.randint(0, n)) if seed % 2 else rand_symmetric(rng, n, -1, 1)
    t = inertia_congruence(A)
    assert t.z == _char_poly_zero_multiplicity(A)
    assert t.p + t.q + t.z == n
    assert rank(A) == n - t.z


@pytest.mark.parametrize("seed", range(40))
def test_congruence_invariance(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 6)
    A = rand_low_rank(rng, n, rng.randint(0, n)) if seed % 2 else rand_symmetric(rng, n)
    P = rand_invertible(rng, n)
    assert inertia_congruence(A.congruent(P)) == inertia_congruence(A)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_determinant_matches_leibniz(n, rng):
    A = rand_symmetric(rng, n)
    assert determinant(A.rows) == leibniz_det(A.rows, F(0), F(1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lemma2_exhaustive_small_sign_patterns(n):
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    for entries in itertools.product((-1, 0, 1), repeat=len(slots)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in zip(slots, entries):
            rows[i][j] = rows[j][i] = v
        A = SymMatrix(rows)
        seq = find_normal_sequence(A)
        assert q_from_normal_sequence(seq, rank(A)) == inertia_congruence(A).q


def test_lemma2_exhaustive_n4():
    n = 4
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    for entries in itertools.product((-1, 0, 1), repeat=len(slots)):
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in zip(slots, entries):
            rows[i][j] = rows[j][i] = v
        A = SymMatrix(rows)
        t = inertia_congruence(A)
        seq = find_normal_sequence(A)
        assert q_from_normal_sequence(seq, t.rank) == t.q


def test_not_found_error_is_distinct():
    err = NormalSequenceNotFound(SymMatrix([[1]]), exhausted=True)
    assert isinstance(err, LookupError) and err.exhausted


def test_inertia_triple_accessors():
    t = InertiaTriple(2, 1, 3)
    assert t.n == 6 and t.rank == 3
