"""Cohomological dimension tables of a double complex.

Six theories: column (d_v) cohomology, row (d_h) cohomology, de Rham of the
total complex, Bott-Chern, Aeppli, and the arithmetic genus.  Everything is
a dimension count obtained from exact ranks; subspace intersections and sums
are computed on stacked and concatenated matrices, never via bases of
harmonic representatives.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .bicomplex import degree_spots, require_valid, total_differential

THEORIES = ("dolbeault", "row", "bott_chern", "aeppli")


@dataclass(frozen=True)
class CohomologyTable:
    """Grid of dimensions for one theory, indexed as ``grid[p, q]``."""
    theory: str
    grid: np.ndarray

    def __post_init__(self):
        if self.theory not in THEORIES:
            raise ValueError(f"unknown theory {self.theory!r}")
        self.grid.flags.writeable = False

    def entry(self, p, q):
        return int(self.grid[p, q])

    def __eq__(self, other):
        return (isinstance(other, CohomologyTable)
                and self.theory == other.theory
                and np.array_equal(self.grid, other.grid))

    __hash__ = None


@dataclass(frozen=True)
class BettiVector:
    """Total-complex cohomology dimensions b_0 .. b_{p_max+q_max}."""
    b: tuple

    def __getitem__(self, k):
        return self.b[k]

    def __len__(self):
        return len(self.b)


def _grid(K):
    return np.zeros((K.p_max + 1, K.q_max + 1), dtype=np.int64)


def dolbeault(K):
    """Vertical-differential cohomology; its entries are the Hodge numbers."""
    require_valid(K)
    g = _grid(K)
    for p, q in K.spots():
        ker = K.dim(p, q) - linalg.rank(K.dv(p, q))
        g[p, q] = ker - linalg.rank(K.dv(p, q - 1))
    return CohomologyTable("dolbeault", g)


def row_cohomology(K):
    """Horizontal-differential cohomology (the conjugate of dolbeault)."""
    require_valid(K)
    g = _grid(K)
    for p, q in K.spots():
        ker = K.dim(p, q) - linalg.rank(K.dh(p, q))
        g[p, q] = ker - linalg.rank(K.dh(p - 1, q))
    return CohomologyTable("row", g)


def de_rham(K):
    """Betti numbers of the total complex with differential d_h + d_v."""
    require_valid(K)
    n = K.p_max + K.q_max
    ranks = [linalg.rank(total_differential(K, k)) for k in range(n + 1)]
    b = []
    for k in range(n + 1):
        total = sum(K.dim(p, q) for p, q in degree_spots(K, k))
        into = ranks[k - 1] if k > 0 else 0
        b.append(total - ranks[k] - into)
    return BettiVector(tuple(b))


def bott_chern(K):
    """dim(ker d_h ∩ ker d_v) minus rank of d_h d_v into each spot."""
    require_valid(K)
    g = _grid(K)
    for p, q in K.spots():
        stacked = linalg.vstack([K.dh(p, q), K.dv(p, q)])
        closed = K.dim(p, q) - linalg.rank(stacked)
        corner = linalg.mat_mul(K.dh(p - 1, q), K.dv(p - 1, q - 1))
        g[p, q] = closed - linalg.rank(corner)
    return CohomologyTable("bott_chern", g)


def aeppli(K):
    """dim ker(d_h d_v) minus dim(im d_h + im d_v) at each spot."""
    require_valid(K)
    g = _grid(K)
    for p, q in K.spots():
        corner = linalg.mat_mul(K.dh(p, q + 1), K.dv(p, q))
        ker = K.dim(p, q) - linalg.rank(corner)
        image = linalg.rank_of_columns([K.dh(p - 1, q), K.dv(p, q - 1)])
        g[p, q] = ker - image
    return CohomologyTable("aeppli", g)


def arithmetic_genus(K):
    """Alternating sum of the first column of the dolbeault table."""
    table = dolbeault(K)
    return sum((-1) ** q * table.entry(0, q) for q in range(K.q_max + 1))
