"""Shared test helpers: reference linear algebra and random valid complexes.

The reference rank/kernel here is a textbook Fraction-arithmetic reduction,
kept independent of the package's fraction-free kernels on purpose: the two
must agree on everything.

Random complexes are built the only way that guarantees validity: synthesize
a random zigzag multiset, throw in a few squares of isomorphisms, then
conjugate every spot by a random unimodular change of basis (optionally with
rational diagonal scaling).  Validity and every dimension-level invariant
are preserved exactly.
"""

import random
from collections import Counter
from fractions import Fraction

import numpy as np

from frolicher import linalg
from frolicher.bicomplex import DoubleComplex, direct_sum
from frolicher.zigzag import canonicalize_shape, synthesize


def ref_rank(mat):
    """Rank by plain rational Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in np.asarray(mat).tolist()]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nr):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def ref_nullity(mat):
    m = np.asarray(mat)
    return m.shape[1] - ref_rank(m) if m.size else m.shape[1]


def random_fraction_matrix(rng, rows, cols, denom=4, mag=6):
    entries = [[Fraction(rng.randint(-mag, mag), rng.randint(1, denom))
                for _ in range(cols)] for _ in range(rows)]
    return linalg.from_rows(rows, cols, entries)


def random_int_matrix(rng, rows, cols, mag=4):
    entries = [[rng.randint(-mag, mag) for _ in range(cols)]
               for _ in range(rows)]
    return linalg.from_rows(rows, cols, entries)


def square_complex(p, q, grid):
    """A 2x2 block of isomorphisms anchored at (p, q).

    One vertical arrow carries -1 so the two differentials anticommute.
    """
    p_max, q_max = grid
    if p + 1 > p_max or q + 1 > q_max:
        raise ValueError("square does not fit the grid")
    dims = np.zeros((p_max + 1, q_max + 1), dtype=np.int64)
    for dp in (0, 1):
        for dq in (0, 1):
            dims[p + dp, q + dq] = 1
    one = linalg.identity(1)
    return DoubleComplex(p_max, q_max, dims,
                         d_horiz={(p, q): one, (p, q + 1): one},
                         d_vert={(p, q): one, (p + 1, q): -one})


def random_shape(rng, grid, max_len=6):
    p_max, q_max = grid
    path = [(rng.randint(0, p_max), rng.randint(0, q_max))]
    last_sign = 0
    target = rng.randint(1, max_len)
    while len(path) < target:
        p, q = path[-1]
        options = []
        for dp, dq in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            if dp + dq == last_sign:
                continue
            nxt = (p + dp, q + dq)
            if 0 <= nxt[0] <= p_max and 0 <= nxt[1] <= q_max and nxt not in path:
                options.append((nxt, dp + dq))
        if not options:
            break
        nxt, last_sign = rng.choice(options)
        path.append(nxt)
    return canonicalize_shape(path)


def random_multiset(rng, grid, max_shapes=4, max_mult=2, max_len=6):
    out = Counter()
    for _ in range(rng.randint(1, max_shapes)):
        out[random_shape(rng, grid, max_len)] += rng.randint(1, max_mult)
    return out


def _random_unimodular(rng, n, ops=None):
    """(P, P_inverse) as exact integer matrices with small entries."""
    P = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Pinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(0 if n == 0 else (ops if ops is not None else n + 1)):
        kind = rng.random()
        if n >= 2 and kind < 0.7:
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-2, -1, 1, 2))
            # row_j += c * row_i on P; column_i -= c * column_j on P^{-1}
            for k in range(n):
                P[j][k] += c * P[i][k]
            for k in range(n):
                Pinv[k][i] -= c * Pinv[k][j]
        else:
            i = rng.randrange(n)
            for k in range(n):
                P[i][k] = -P[i][k]
            for k in range(n):
                Pinv[k][i] = -Pinv[k][i]
    return (linalg.from_rows(n, n, P), linalg.from_rows(n, n, Pinv))


def change_basis(rng, K, rational=False):
    """Conjugate every spot by a random unimodular (optionally rational) map."""
    basis = {}
    for p, q in K.spots():
        n = K.dim(p, q)
        P, Pinv = _random_unimodular(rng, n)
        if rational and n and rng.random() < 0.6:
            scale = [Fraction(rng.choice((1, 2, 3)), rng.choice((1, 2, 3)))
                     for _ in range(n)]
            P = linalg.from_rows(n, n, [[P[i, j] * scale[i] for j in range(n)]
                                        for i in range(n)])
            Pinv = linalg.from_rows(n, n,
                                    [[Fraction(Pinv[i, j]) / scale[j]
                                      for j in range(n)] for i in range(n)])
        basis[(p, q)] = (P, Pinv)
    dh = {}
    dv = {}
    for p, q in K.spots():
        if p < K.p_max:
            dh[(p, q)] = linalg.mat_mul(
                linalg.mat_mul(basis[(p + 1, q)][0], K.dh(p, q)),
                basis[(p, q)][1])
        if q < K.q_max:
            dv[(p, q)] = linalg.mat_mul(
                linalg.mat_mul(basis[(p, q + 1)][0], K.dv(p, q)),
                basis[(p, q)][1])
    return DoubleComplex(K.p_max, K.q_max, K.dims.copy(), dh, dv)


def random_complex(rng, p_max=3, q_max=3, max_shapes=4, max_mult=2,
                   n_squares=1, rational=False, scramble=True):
    """Random valid double complex with known zigzag content."""
    grid = (p_max, q_max)
    K = synthesize(random_multiset(rng, grid, max_shapes, max_mult), grid)
    for _ in range(rng.randint(0, n_squares)):
        sp = rng.randint(0, p_max - 1)
        sq = rng.randint(0, q_max - 1)
        K = direct_sum(K, square_complex(sp, sq, grid))
    if scramble:
        K = change_basis(rng, K, rational=rational)
    return K


def random_complex_suite(seed, count, grids=((2, 2), (3, 3), (3, 2), (4, 4),
                                             (4, 3), (2, 4)), max_spot_dim=4):
    """Deterministic list of random complexes over a mix of grid sizes."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        p_max, q_max = grids[i % len(grids)]
        while True:
            K = random_complex(rng, p_max, q_max, rational=(i % 7 == 3))
            if int(K.dims.max()) <= max_spot_dim:
                break
        out.append(K)
    return out
