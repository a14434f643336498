"""Hodge-diamond parameter space for a hypothetical complex structure on S^6.

Five free non-negative integers parameterize every admissible diamond:
h10 = h^{1,0}, h02 = h^{0,2}, h11 = h^{1,1}, alpha = h_2^{0,1} and
beta = h_2^{0,2}.  The remaining Hodge numbers are derived:

    h01 = h02 + 1        h20 = h10 + alpha      h12 = h11 + alpha - 1

together with the reflection h^{p,q} = h^{3-p,3-q}.  With this choice all the
equalities of the catalog become identities and exactly three inequalities
stay live; they are the non-negativity of the zigzag family counts of the
model complex.

Each admissible tuple is realized as an explicit double complex on the 3x3
grid, built from seven zigzag families closed up under the duality and
conjugation mirrors; the engine-computed tables of the realization must
reproduce the closed-form predictions entry for entry.
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .cohomology import (BettiVector, CohomologyTable, aeppli,
                         arithmetic_genus, bott_chern, de_rham)
from .spectral import PageTable, pages_filtration, stable_page_index
from .zigzag import canonicalize_shape, mirror_shape, synthesize

GRID = (3, 3)


@dataclass(frozen=True)
class DiamondParams:
    h10: int
    h02: int
    h11: int
    alpha: int
    beta: int

    def __post_init__(self):
        for name in ("h10", "h02", "h11", "alpha", "beta"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative integer")

    # Derived Hodge numbers.
    @property
    def h00(self):
        return 1

    @property
    def h01(self):
        return self.h02 + 1

    @property
    def h20(self):
        return self.h10 + self.alpha

    @property
    def h12(self):
        return self.h11 + self.alpha - 1

    @property
    def h30(self):
        return 0

    def as_tuple(self):
        return (self.h10, self.h02, self.h11, self.alpha, self.beta)

    def __str__(self):
        return (f"h10={self.h10} h02={self.h02} h11={self.h11} "
                f"alpha={self.alpha} beta={self.beta}")


@dataclass(frozen=True)
class ConstraintCheck:
    cid: str
    relation: str
    status: str  # "holds" | "violated"
    witness: str

    @property
    def holds(self):
        return self.status == "holds"

    def __str__(self):
        return f"[{self.status:8s}] {self.cid}: {self.relation} ({self.witness})"


@dataclass(frozen=True)
class ConstraintReport:
    params: DiamondParams
    checks: tuple

    @property
    def all_hold(self):
        return all(c.holds for c in self.checks)

    def violated(self):
        return [c for c in self.checks if not c.holds]

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


class InadmissibleParamsError(ValueError):
    def __init__(self, report):
        self.report = report
        bad = ", ".join(c.cid for c in report.violated())
        super().__init__(f"inadmissible parameters ({report.params}): "
                         f"violated {bad}")


class InferenceMismatchError(ValueError):
    def __init__(self, message):
        super().__init__(message)


def check_constraints(d, assume_a0=False):
    """Evaluate the full constraint catalog on one parameter tuple.

    The equalities hold by construction of the derived quantities and are
    reported as definitional; the live checks are the three family-count
    inequalities (plus ``h10 <= 1`` under the zero-algebraic-dimension
    assumption).  The tuple is admissible iff every check holds.
    """
    checks = []

    def add(cid, relation, ok, witness):
        checks.append(ConstraintCheck(cid, relation,
                                      "holds" if ok else "violated", witness))

    add("h00", "h^{0,0} = 1", d.h00 == 1, f"h00={d.h00}")
    add("h30", "h^{3,0} = 0", d.h30 == 0, f"h30={d.h30}")
    add("h01-h02", "h^{0,1} = h^{0,2} + 1",
        d.h01 == d.h02 + 1, f"h01={d.h01} h02={d.h02}")
    add("h20-h11-h10-h12", "h^{2,0} + h^{1,1} = h^{1,0} + h^{1,2} + 1",
        d.h20 + d.h11 == d.h10 + d.h12 + 1,
        f"h20={d.h20} h11={d.h11} h10={d.h10} h12={d.h12}")
    add("h10-h20", "h^{1,0} <= h^{2,0}",
        d.h10 <= d.h20, f"h10={d.h10} h20={d.h20}")
    add("h11-ugarte", "h^{1,1} >= h^{1,2} - h^{0,2}",
        d.h11 >= d.h12 - d.h02, f"h11={d.h11} h12={d.h12} h02={d.h02}")
    add("h2var", "h_2^{0,1} = h^{1,2} - h^{1,1} + 1",
        d.alpha == d.h12 - d.h11 + 1, f"alpha={d.alpha} h12={d.h12} h11={d.h11}")
    add("h2ug2", "h_2^{0,1} = h_2^{2,0} = h_2^{1,3} = h_2^{3,2}",
        True, f"all equal alpha={d.alpha}")
    add("h2ug3", "h_2^{2,1} = h_2^{0,2} = h_2^{1,2} = h_2^{3,1}",
        True, f"all equal beta={d.beta}")
    add("e2-serre", "h_2^{p,q} = h_2^{3-p,3-q}",
        True, "second page written reflection-symmetrically")
    add("count-c", "h_2^{0,1} <= h^{0,1} (length-2 family at (0,1) counts "
        "h^{0,2}+1-alpha >= 0)",
        d.alpha <= d.h02 + 1, f"count={d.h02 + 1 - d.alpha}")
    add("count-d", "h_2^{0,2} <= h^{0,2} (length-2 family at (0,2) counts "
        "h^{0,2}-beta >= 0)",
        d.beta <= d.h02, f"count={d.h02 - d.beta}")
    add("count-h", "h^{1,2} >= h^{0,2} (length-2 family at (1,1) counts "
        "h^{1,1}-h^{0,2}+alpha-1 >= 0)",
        d.h11 + d.alpha >= d.h02 + 1, f"count={d.h11 - d.h02 + d.alpha - 1}")
    if assume_a0:
        add("h10-1", "h^{1,0} <= 1 (zero algebraic dimension)",
            d.h10 <= 1, f"h10={d.h10}")
    return ConstraintReport(d, tuple(checks))


def enumerate_diamonds(bound, assume_a0=False, h11_zero_only=False):
    """Admissible tuples in the box [0, bound]^5, lexicographic order."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    out = []
    rng = range(bound + 1)
    for h10 in rng:
        for h02 in rng:
            for h11 in rng:
                if h11_zero_only and h11 != 0:
                    continue
                for alpha in rng:
                    for beta in rng:
                        d = DiamondParams(h10, h02, h11, alpha, beta)
                        if check_constraints(d, assume_a0).all_hold:
                            out.append(d)
    return out


# The seven zigzag families of the model complex, with their counts.  The
# orbit of each base shape under {identity, dual, conj, conj_dual} restores
# the parts that the symmetric picture leaves implicit: the duality mirrors
# reproduce the reflected half of the first page, and the conjugation
# mirrors, invisible to the column filtration, double the (1,1) Bott-Chern
# entry without disturbing any page.
FAMILIES = (
    ("dot", ((0, 0),), lambda d: 1),
    ("z4a", ((0, 1), (1, 1), (1, 0), (2, 0)), lambda d: d.alpha),
    ("c", ((0, 1), (1, 1)), lambda d: d.h02 + 1 - d.alpha),
    ("d", ((0, 2), (1, 2)), lambda d: d.h02 - d.beta),
    ("e", ((1, 0), (2, 0)), lambda d: d.h10),
    ("h", ((1, 1), (2, 1)), lambda d: d.h11 - d.h02 + d.alpha - 1),
    ("z4b", ((1, 2), (2, 2), (2, 1), (3, 1)), lambda d: d.beta),
)


def family_counts(d):
    return {name: count(d) for name, _dots, count in FAMILIES}


def model_multiset(d):
    """Zigzag multiset of the model: family orbits at the family counts."""
    report = check_constraints(d)
    if not report.all_hold:
        raise InadmissibleParamsError(report)
    out = Counter()
    for _name, dots, count in FAMILIES:
        mult = count(d)
        if mult == 0:
            continue
        base = canonicalize_shape(dots)
        orbit = {base}
        for kind in ("dual", "conj", "conj_dual"):
            orbit.add(mirror_shape(base, kind, GRID))
        for shape in sorted(orbit):
            out[shape] += mult
    return out


def realize_model(d):
    """Synthesize the model double complex on the 3x3 grid."""
    return synthesize(model_multiset(d), GRID)


@dataclass(frozen=True)
class PredictedTables:
    e1: PageTable
    e2: PageTable
    e3plus: PageTable
    bott_chern: CohomologyTable
    aeppli: CohomologyTable
    betti: BettiVector


def predicted_tables(d):
    """Closed-form tables of the model.

    The (2,1) Bott-Chern entry is not pinned down by the general relations;
    the zigzag model attains h12 + beta there, and the (2,2) entry follows
    from 2*h^{2,1}_BC - 2*h^{0,1} + 2.
    """
    report = check_constraints(d)
    if not report.all_hold:
        raise InadmissibleParamsError(report)
    e1 = np.zeros((4, 4), dtype=np.int64)
    for (p, q), v in {
            (0, 0): 1, (1, 0): d.h10, (2, 0): d.h20, (3, 0): 0,
            (0, 1): d.h01, (1, 1): d.h11, (2, 1): d.h12, (3, 1): d.h02,
            (0, 2): d.h02, (1, 2): d.h12, (2, 2): d.h11, (3, 2): d.h01,
            (0, 3): 0, (1, 3): d.h20, (2, 3): d.h10, (3, 3): 1}.items():
        e1[p, q] = v
    e2 = np.zeros((4, 4), dtype=np.int64)
    e2[0, 0] = e2[3, 3] = 1
    for p, q in ((0, 1), (2, 0), (1, 3), (3, 2)):
        e2[p, q] = d.alpha
    for p, q in ((0, 2), (2, 1), (1, 2), (3, 1)):
        e2[p, q] = d.beta
    e3 = np.zeros((4, 4), dtype=np.int64)
    e3[0, 0] = e3[3, 3] = 1

    h21bc = d.h12 + d.beta
    bc = np.zeros((4, 4), dtype=np.int64)
    for (p, q), v in {
            (0, 0): 1, (1, 0): 0, (0, 1): 0,
            (2, 0): d.h20, (0, 2): d.h20,
            (1, 1): 2 * d.h01,
            (3, 0): 0, (0, 3): 0,
            (2, 1): h21bc, (1, 2): h21bc,
            (3, 1): d.h02, (1, 3): d.h02,
            (2, 2): 2 * h21bc - 2 * d.h01 + 2,
            (3, 2): d.h02 + 1 + d.h20, (2, 3): d.h02 + 1 + d.h20,
            (3, 3): 1}.items():
        bc[p, q] = v
    ae = np.zeros((4, 4), dtype=np.int64)
    for p in range(4):
        for q in range(4):
            ae[p, q] = bc[3 - q, 3 - p]
    return PredictedTables(
        e1=PageTable(1, e1),
        e2=PageTable(2, e2),
        e3plus=PageTable(3, e3),
        bott_chern=CohomologyTable("bott_chern", bc),
        aeppli=CohomologyTable("aeppli", ae),
        betti=BettiVector((1, 0, 0, 0, 0, 0, 1)),
    )


@dataclass(frozen=True)
class ModelTables:
    """Engine-computed tables of a realized model."""
    pages: tuple
    bott_chern: CohomologyTable
    aeppli: CohomologyTable
    betti: BettiVector
    genus: int


def compute_model_tables(K):
    return ModelTables(
        pages=tuple(pages_filtration(K, stable_page_index(K))),
        bott_chern=bott_chern(K),
        aeppli=aeppli(K),
        betti=de_rham(K),
        genus=arithmetic_genus(K),
    )


def verify_model(d):
    """Realize, compute everything, diff against the predictions.

    Returns the list of mismatch descriptions; empty means every table of
    the realized complex equals its closed-form prediction entry for entry.
    """
    K = realize_model(d)
    got = compute_model_tables(K)
    pred = predicted_tables(d)
    mismatches = []

    def diff_grid(name, expected, actual):
        for p in range(4):
            for q in range(4):
                e = int(expected[p, q])
                a = int(actual[p, q])
                if e != a:
                    mismatches.append(
                        f"{name} at ({p},{q}): expected {e}, computed {a}")

    diff_grid("E1", pred.e1.grid, got.pages[0].grid)
    diff_grid("E2", pred.e2.grid, got.pages[1].grid)
    for t in got.pages[2:]:
        diff_grid(f"E{t.r}", pred.e3plus.grid, t.grid)
    diff_grid("bott_chern", pred.bott_chern.grid, got.bott_chern.grid)
    diff_grid("aeppli", pred.aeppli.grid, got.aeppli.grid)
    if tuple(got.betti.b) != tuple(pred.betti.b):
        mismatches.append(f"betti: expected {pred.betti.b}, computed {got.betti.b}")
    if got.genus != 0:
        mismatches.append(f"arithmetic genus: expected 0, computed {got.genus}")
    return mismatches


def infer_params(e1, e2):
    """Read the five parameters off computed E1/E2 tables and verify.

    ``e1`` and ``e2`` may be :class:`PageTable` or 4x4 integer grids.  Every
    entry of both tables is checked against the predictions of the extracted
    tuple; the first inconsistent spot (tables scanned E1 then E2, spots in
    lexicographic (p, q) order) raises :class:`InferenceMismatchError`.
    """
    g1 = np.asarray(e1.grid if isinstance(e1, PageTable) else e1, dtype=np.int64)
    g2 = np.asarray(e2.grid if isinstance(e2, PageTable) else e2, dtype=np.int64)
    if g1.shape != (4, 4) or g2.shape != (4, 4):
        raise InferenceMismatchError(
            f"tables must be 4x4 grids, got {g1.shape} and {g2.shape}")
    values = (int(g1[1, 0]), int(g1[0, 2]), int(g1[1, 1]),
              int(g2[0, 1]), int(g2[0, 2]))
    try:
        d = DiamondParams(*values)
    except ValueError as exc:
        raise InferenceMismatchError(f"extracted parameters invalid: {exc}")
    report = check_constraints(d)
    if not report.all_hold:
        bad = report.violated()[0]
        raise InferenceMismatchError(
            f"extracted parameters ({d}) inadmissible: {bad.cid} "
            f"({bad.relation})")
    pred = predicted_tables(d)
    for name, expected, actual in (("E1", pred.e1.grid, g1),
                                   ("E2", pred.e2.grid, g2)):
        for p in range(4):
            for q in range(4):
                if int(expected[p, q]) != int(actual[p, q]):
                    raise InferenceMismatchError(
                        f"{name} at ({p},{q}): expected {int(expected[p, q])} "
                        f"for {d}, table has {int(actual[p, q])}")
    return d
