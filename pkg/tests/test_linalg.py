import random
from fractions import Fraction

import numpy as np
import pytest

from frolicher import _kernels, linalg
from genutil import random_fraction_matrix, random_int_matrix, ref_rank


def test_rank_small_known():
    m = linalg.from_rows(2, 2, [[1, 2], [2, 4]])
    assert linalg.rank(m) == 1
    assert linalg.rank(linalg.identity(5)) == 5
    assert linalg.rank(linalg.zeros(3, 4)) == 0


def test_rank_empty_shapes():
    assert linalg.rank(linalg.zeros(0, 5)) == 0
    assert linalg.rank(linalg.zeros(5, 0)) == 0
    assert linalg.nullspace(linalg.zeros(0, 4)).shape == (4, 4)
    assert linalg.nullspace(linalg.zeros(4, 0)).shape == (0, 0)


@pytest.mark.parametrize("seed", range(6))
def test_rank_matches_reference(seed):
    rng = random.Random(seed)
    for _ in range(80):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        if rng.random() < 0.5:
            m = random_int_matrix(rng, r, c, mag=6)
        else:
            m = random_fraction_matrix(rng, r, c)
        assert linalg.rank(m) == ref_rank(m)


@pytest.mark.parametrize("seed", range(4))
def test_nullspace_spans_kernel(seed):
    rng = random.Random(seed + 100)
    for _ in range(60):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        m = (random_int_matrix(rng, r, c, mag=5) if rng.random() < 0.5
             else random_fraction_matrix(rng, r, c))
        basis = linalg.nullspace(m)
        assert basis.shape[0] == c
        assert basis.shape[1] == c - ref_rank(m)
        assert linalg.is_zero(linalg.mat_mul(m, basis))
        if basis.shape[1]:
            assert linalg.rank(basis) == basis.shape[1]


def test_big_entries_use_object_path():
    m = linalg.from_rows(2, 3, [[2 ** 40, 1, 2 ** 41], [3, 2 ** 45, 7]])
    assert m.dtype == object
    assert linalg.rank(m) == 2
    basis = linalg.nullspace(m)
    assert basis.shape == (3, 1)
    assert linalg.is_zero(linalg.mat_mul(m, basis))


def test_guard_escalation_gives_exact_answer():
    # Dense random 25x25 minors overflow int64; the kernel must bail and the
    # wrapper must escalate instead of wrapping around.
    rng = random.Random(99)
    m = random_int_matrix(rng, 25, 25, mag=9)
    raw = np.ascontiguousarray(m, dtype=np.int64).copy()
    assert _kernels.rank_i64(raw) == -1
    assert linalg.rank(m) == ref_rank(m)


def test_jit_and_pure_and_big_agree():
    rng = random.Random(5)
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = random_int_matrix(rng, r, c, mag=3)
        a = np.ascontiguousarray(m, dtype=np.int64)
        jit = _kernels.rank_i64(a.copy())
        pure = _kernels._rank_i64(a.copy())
        big = _kernels.rank_big(a.tolist())
        assert jit == pure == big


def test_rref_pure_matches_big():
    rng = random.Random(6)
    for _ in range(40):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = np.ascontiguousarray(random_int_matrix(rng, r, c, mag=3),
                                 dtype=np.int64)
        piv = np.zeros(c, dtype=np.int64)
        m1 = m.copy()
        rk1 = _kernels._rref_i64(m1, piv)
        rows = m.tolist()
        rk2, piv2 = _kernels.rref_big(rows)
        assert rk1 == rk2
        assert [int(x) for x in piv[:rk1]] == piv2
        assert m1.tolist() == rows


def test_denominator_clearing_preserves_rank_and_kernel():
    m = linalg.from_rows(2, 2, [[Fraction(1, 2), Fraction(1, 3)],
                                [Fraction(3, 2), Fraction(2, 1)]])
    assert linalg.rank(m) == ref_rank(m) == 2
    scaled = linalg.from_rows(2, 2, [[Fraction(1, 7), Fraction(2, 7)],
                                     [Fraction(2, 7), Fraction(4, 7)]])
    basis = linalg.nullspace(scaled)
    assert basis.shape[1] == 1
    assert linalg.is_zero(linalg.mat_mul(scaled, basis))


def test_mat_mul_exact_and_promotes():
    a = linalg.from_rows(1, 2, [[2 ** 30, 2 ** 30]])
    b = linalg.from_rows(2, 1, [[2 ** 30], [2 ** 30]])
    prod = linalg.mat_mul(a, b)
    assert prod[0, 0] == 2 ** 61
    f = linalg.from_rows(2, 2, [[Fraction(1, 2), 0], [0, 1]])
    g = linalg.from_rows(2, 2, [[2, 0], [0, 3]])
    assert linalg.mat_mul(f, g)[0, 0] == 1


def test_assemble_blocks():
    a = linalg.identity(2)
    b = linalg.from_rows(1, 1, [[7]])
    m = linalg.assemble([2, 1], [2, 1], {(0, 0): a, (1, 1): b})
    assert m.shape == (3, 3)
    assert m[2, 2] == 7 and m[0, 0] == 1 and m[0, 2] == 0
    with pytest.raises(ValueError):
        linalg.assemble([2], [2], {(0, 0): b})


def test_from_rows_shape_check():
    with pytest.raises(ValueError):
        linalg.from_rows(2, 2, [[1, 2, 3], [4, 5, 6]])
    with pytest.raises(TypeError):
        linalg.from_rows(1, 1, [[0.5]])
