"""Zigzag shapes: the synthesis language for model double complexes.

A shape is an ordered list of bidegree dots in which consecutive dots differ
by a unit step in exactly one coordinate, steps alternate between ascending
and descending (so every dot is a pure source or a pure sink, which is what
makes the realized complex anticommute for free), and no dot repeats.  Of
the two end-to-end orderings the canonical one starts at the
lexicographically smaller end.

Multisets of shapes synthesize to direct sums of one-dimensional realizations.
Squares (2x2 blocks of isomorphisms) are deliberately not part of the
language: they contribute nothing to any cohomology table.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .bicomplex import DoubleComplex, direct_sum
from .cohomology import aeppli, bott_chern, de_rham, dolbeault, row_cohomology
from .spectral import pages_filtration, stable_page_index


class ShapeError(ValueError):
    """A candidate dot list violates one of the shape invariants."""


class GridError(ValueError):
    """A shape or dot does not fit inside the requested grid."""


@dataclass(frozen=True, order=True)
class ZigzagShape:
    dots: tuple

    def __len__(self):
        return len(self.dots)

    def __str__(self):
        return ",".join(f"({p},{q})" for p, q in self.dots)

    def arrows(self):
        """Implied arrows as (src, dst, kind) with kind 'h' or 'v'.

        Each arrow points from the lower dot to the higher dot of its step.
        """
        out = []
        for a, b in zip(self.dots, self.dots[1:]):
            if sum(b) > sum(a):
                src, dst = a, b
            else:
                src, dst = b, a
            out.append((src, dst, "h" if dst[0] == src[0] + 1 else "v"))
        return out


def canonicalize_shape(dots):
    """Validate a dot list and return the canonically oriented shape."""
    dots = [(int(p), int(q)) for p, q in dots]
    if not dots:
        raise ShapeError("empty dot list")
    for p, q in dots:
        if p < 0 or q < 0:
            raise ShapeError(f"negative bidegree ({p},{q})")
    if len(set(dots)) != len(dots):
        raise ShapeError("repeated dot")
    last_sign = 0
    for (p0, q0), (p1, q1) in zip(dots, dots[1:]):
        dp, dq = p1 - p0, q1 - q0
        if (abs(dp), abs(dq)) not in ((1, 0), (0, 1)):
            raise ShapeError(f"non-unit step from ({p0},{q0}) to ({p1},{q1})")
        sign = dp + dq
        if sign == last_sign:
            word = "ascending" if sign > 0 else "descending"
            raise ShapeError(f"two consecutive {word} steps at ({p0},{q0})")
        last_sign = sign
    if dots[-1] < dots[0]:
        dots.reverse()
    return ZigzagShape(tuple(dots))


def realize_shape(shape, grid):
    """One-dimensional spot per dot, identity matrices on the arrows.

    Source/sink alternation means no two arrows compose, so the axioms hold
    with no signs.
    """
    p_max, q_max = grid
    for p, q in shape.dots:
        if p > p_max or q > q_max:
            raise GridError(f"dot ({p},{q}) outside grid {p_max}x{q_max}")
    dims = np.zeros((p_max + 1, q_max + 1), dtype=np.int64)
    for p, q in shape.dots:
        dims[p, q] = 1
    dh = {}
    dv = {}
    for src, _dst, kind in shape.arrows():
        (dh if kind == "h" else dv)[src] = linalg.identity(1)
    return DoubleComplex(p_max, q_max, dims, dh, dv)


def synthesize(multiset, grid):
    """Direct sum of every shape, repeated by multiplicity.

    Summands are laid out in canonical shape order, copies consecutively, so
    the synthesized complex is identical across runs; the result equals the
    fold of :func:`direct_sum` over the same sequence.
    """
    p_max, q_max = grid
    summands = []
    for shape in sorted(multiset):
        mult = multiset[shape]
        if mult < 0:
            raise ValueError("negative multiplicity")
        summands.extend([shape] * mult)
    dims = np.zeros((p_max + 1, q_max + 1), dtype=np.int64)
    for shape in summands:
        for p, q in shape.dots:
            if p > p_max or q > q_max:
                raise GridError(f"dot ({p},{q}) outside grid {p_max}x{q_max}")
            dims[p, q] += 1
    index = np.zeros_like(dims)
    coords = []
    for shape in summands:
        spot_of = {}
        for p, q in shape.dots:
            spot_of[(p, q)] = int(index[p, q])
            index[p, q] += 1
        coords.append(spot_of)
    dh = {}
    dv = {}
    for shape, spot_of in zip(summands, coords):
        for src, dst, kind in shape.arrows():
            maps = dh if kind == "h" else dv
            m = maps.get(src)
            if m is None:
                tgt = (src[0] + 1, src[1]) if kind == "h" else (src[0], src[1] + 1)
                m = np.zeros((int(dims[tgt]), int(dims[src])), dtype=np.int64)
                maps[src] = m
            m[spot_of[dst], spot_of[src]] = 1
    return DoubleComplex(p_max, q_max, dims, dh, dv)


def mirror_shape(shape, kind, grid):
    """Image of a shape under dual / conj / conj_dual, canonicalized."""
    p_max, q_max = grid
    if kind == "dual":
        dots = [(p_max - p, q_max - q) for p, q in shape.dots]
    elif kind == "conj":
        dots = [(q, p) for p, q in shape.dots]
    elif kind == "conj_dual":
        dots = [(q_max - q, p_max - p) for p, q in shape.dots]
    else:
        raise ValueError(f"unknown mirror kind {kind!r}")
    for p, q in dots:
        if p < 0 or q < 0 or p > p_max or q > q_max:
            raise GridError(f"mirrored dot ({p},{q}) outside grid")
    return canonicalize_shape(dots)


@dataclass(frozen=True)
class ContributionProfile:
    """Exact contribution of one shape to every table the engine computes."""
    shape: ZigzagShape
    pages: tuple
    dolbeault: object
    row: object
    de_rham: object
    bott_chern: object
    aeppli: object


def contribution_profile(shape, grid):
    """Run the whole engine on the one-shape complex.

    All six theories are additive under direct sums, so these profiles are
    the exact per-shape contribution vectors of any synthesized complex.
    """
    K = realize_shape(shape, grid)
    return ContributionProfile(
        shape=shape,
        pages=tuple(pages_filtration(K, stable_page_index(K))),
        dolbeault=dolbeault(K),
        row=row_cohomology(K),
        de_rham=de_rham(K),
        bott_chern=bott_chern(K),
        aeppli=aeppli(K),
    )


def enumerate_shapes(grid, max_length):
    """All canonical shapes of length <= max_length inside the grid."""
    p_max, q_max = grid
    found = set()

    def extend(path, last_sign):
        found.add(canonicalize_shape(path))
        if len(path) == max_length:
            return
        p, q = path[-1]
        for dp, dq in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            sign = dp + dq
            if sign == last_sign:
                continue
            nxt = (p + dp, q + dq)
            if not (0 <= nxt[0] <= p_max and 0 <= nxt[1] <= q_max):
                continue
            if nxt in path:
                continue
            extend(path + [nxt], sign)

    for p in range(p_max + 1):
        for q in range(q_max + 1):
            extend([(p, q)], 0)
    return sorted(found, key=lambda s: (len(s), s.dots))


def fold_synthesize(multiset, grid):
    """Reference synthesis by repeated binary direct sums (for testing)."""
    from .bicomplex import empty_complex
    out = empty_complex(*grid)
    for shape in sorted(multiset):
        piece = realize_shape(shape, grid)
        for _ in range(multiset[shape]):
            out = direct_sum(out, piece)
    return out
