"""Exact linear algebra over the rationals, numpy-backed.

Matrices are 2-D numpy arrays treated as immutable values.  Small integer
matrices live in dtype ``int64`` so the hot elimination kernels can run on
them directly; everything else (big integers, genuine fractions) lives in
dtype ``object`` holding Python ints and ``fractions.Fraction``.  All results
are exact: the int64 path is guarded against overflow and escalates to
arbitrary precision, and rank/kernel computations clear denominators row by
row, which changes neither the row space rank nor the kernel.
"""

from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels

# Keep stored int64 magnitudes below the kernel guard so a freshly built
# matrix can always be handed to the fast path without rescanning.
_I64_STORE = _kernels.GUARD


def _fits_i64(value):
    return -_I64_STORE < value < _I64_STORE


def from_rows(rows, cols, entries):
    """Build a matrix from an iterable of row iterables of int/Fraction."""
    data = [[_coerce(x) for x in row] for row in entries]
    if len(data) != rows or any(len(r) != cols for r in data):
        raise ValueError("entry grid does not match the declared shape")
    if all(isinstance(x, int) and _fits_i64(x) for r in data for x in r):
        return np.array(data, dtype=np.int64).reshape(rows, cols)
    return np.array(data, dtype=object).reshape(rows, cols)


def _coerce(x):
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x)!r}")


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n):
    return np.eye(n, dtype=np.int64)


def transpose(a):
    return a.T.copy()


def is_zero(a):
    return a.size == 0 or not a.any()


def mat_eq(a, b):
    return a.shape == b.shape and bool(np.array_equal(a, b))


def mat_mul(a, b):
    """Exact product; stays in int64 only when no overflow is possible."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    if a.dtype == np.int64 and b.dtype == np.int64:
        ma = int(np.abs(a).max())
        mb = int(np.abs(b).max())
        if a.shape[1] * ma * mb < (1 << 62):
            c = a @ b
            if int(np.abs(c).max()) < _I64_STORE:
                return c
            return c.astype(object)
    return np.dot(_as_object(a), _as_object(b))


def _as_object(a):
    if a.dtype == object:
        return a
    out = np.empty(a.shape, dtype=object)
    if a.size:
        out[...] = a.tolist()
    return out


def hstack(mats):
    mats = list(mats)
    if not mats:
        raise ValueError("hstack of nothing")
    if any(m.dtype == object for m in mats):
        mats = [_as_object(m) for m in mats]
    return np.hstack(mats)


def vstack(mats):
    mats = list(mats)
    if not mats:
        raise ValueError("vstack of nothing")
    if any(m.dtype == object for m in mats):
        mats = [_as_object(m) for m in mats]
    return np.vstack(mats)


def block_diag(a, b):
    out = assemble([a.shape[0], b.shape[0]], [a.shape[1], b.shape[1]],
                   {(0, 0): a, (1, 1): b})
    return out


def assemble(row_dims, col_dims, blocks):
    """Block matrix from ``blocks[(i, j)]``; missing blocks are zero.

    ``row_dims`` / ``col_dims`` are the block partition sizes.  The result is
    int64 when every block is, object otherwise.
    """
    total_r = sum(row_dims)
    total_c = sum(col_dims)
    dtype = np.int64
    for blk in blocks.values():
        if blk.dtype == object:
            dtype = object
            break
    out = np.zeros((total_r, total_c), dtype=dtype)
    roff = np.concatenate(([0], np.cumsum(row_dims)))
    coff = np.concatenate(([0], np.cumsum(col_dims)))
    for (i, j), blk in blocks.items():
        if blk.shape != (row_dims[i], col_dims[j]):
            raise ValueError(f"block {(i, j)} has shape {blk.shape}, "
                             f"expected {(row_dims[i], col_dims[j])}")
        if blk.size:
            out[roff[i]:roff[i + 1], coff[j]:coff[j + 1]] = blk
    return out


def _int_rows(a):
    """Rows of ``a`` with denominators cleared, as Python int lists."""
    rows = a.tolist()
    out = []
    for row in rows:
        denoms = [x.denominator for x in row if isinstance(x, Fraction)]
        if denoms:
            mult = lcm(*denoms)
            row = [int(x * mult) if isinstance(x, Fraction) else int(x) * mult
                   for x in row]
        else:
            row = [int(x) for x in row]
        out.append(row)
    return out


def rank(a):
    """Exact rank of an int64 or object (int/Fraction) matrix."""
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    if a.dtype == np.int64:
        r = int(_kernels.rank_i64(np.ascontiguousarray(a, dtype=np.int64).copy()))
        if r >= 0:
            return r
        return _kernels.rank_big(a.tolist())
    rows = _int_rows(a)
    if all(_fits_i64(x) for row in rows for x in row):
        m = np.array(rows, dtype=np.int64)
        r = int(_kernels.rank_i64(np.ascontiguousarray(m)))
        if r >= 0:
            return r
    return _kernels.rank_big(rows)


def nullspace(a):
    """Matrix whose columns span ker(a); exact, deterministic.

    The basis is the standard free-column basis of the reduced echelon form,
    scaled by the final pivot so that all entries are integers.  Columns are
    ordered by increasing free-column index.
    """
    n = a.shape[1]
    if n == 0:
        return zeros(0, 0)
    if a.shape[0] == 0:
        return identity(n)
    if a.dtype == np.int64:
        res = _nullspace_i64(a)
        if res is not None:
            return res
        rows = [[int(x) for x in row] for row in a.tolist()]
    else:
        rows = _int_rows(a)
        if all(_fits_i64(x) for row in rows for x in row):
            res = _nullspace_i64(np.array(rows, dtype=np.int64))
            if res is not None:
                return res
    rk, pivcols = _kernels.rref_big(rows)
    return _kernel_basis(rows, rk, pivcols, n)


def _nullspace_i64(a):
    m = np.ascontiguousarray(a, dtype=np.int64).copy()
    pivcols = np.zeros(a.shape[1], dtype=np.int64)
    rk = int(_kernels.rref_i64(m, pivcols))
    if rk < 0:
        return None
    return _kernel_basis(m.tolist(), rk, [int(c) for c in pivcols[:rk]],
                         a.shape[1])


def _kernel_basis(m, rk, pivcols, n):
    delta = m[rk - 1][pivcols[rk - 1]] if rk else 1
    pivset = set(pivcols)
    free = [j for j in range(n) if j not in pivset]
    cols = []
    for f in free:
        v = [0] * n
        v[f] = delta
        for t in range(rk):
            v[pivcols[t]] = -m[t][f]
        cols.append(v)
    if not cols:
        return zeros(n, 0)
    if all(_fits_i64(x) for v in cols for x in v):
        return np.array(cols, dtype=np.int64).T.copy()
    return np.array(cols, dtype=object).T.copy()


def rank_of_columns(mats):
    """Rank of the column span of several matrices side by side."""
    mats = [m for m in mats if m.shape[1] > 0]
    if not mats:
        return 0
    return rank(hstack(mats)) if len(mats) > 1 else rank(mats[0])
