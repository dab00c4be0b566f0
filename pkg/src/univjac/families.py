"""One-parameter test families and the boundary-independence matrix.

Each family is a complete curve in the compactified stack whose general
member is smooth.  Only its special fibre is modelled: the dual graph, the
multidegree of the line bundle there, and the intersection numbers with the
boundary divisors.  Intersection numbers that are not determined by the
construction are ``UNKNOWN``; the independence argument never needs them
because they always sit strictly before the designated column of the row.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .arith import GD, divides, invariants
from .balanced import balance_witness
from .dualgraph import DualGraph, Stability, classify
from .errors import DomainError, NotApplicable, RangeError, VerificationError
from .picard import boundary_case, boundary_table

__all__ = [
    "UNKNOWN",
    "FamilyReport",
    "FhIntegers",
    "IndependenceMatrix",
    "family_F",
    "family_Fprime",
    "fh_integers",
    "family_Fh",
    "h_range",
    "all_families",
    "independence_matrix",
]


class _Unknown:
    """Marker for an intersection number left undetermined."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNKNOWN"

    def __str__(self):
        return "?"


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class FamilyReport:
    family: str
    graph: DualGraph
    multidegree: tuple
    row: dict = field(hash=False)
    shared: bool = False
    note: str = ""

    @property
    def degree(self):
        return sum(self.multidegree)

    def balance_witness(self):
        return balance_witness(self.graph, self.multidegree)

    def is_balanced(self):
        return self.balance_witness() is None

    def row_json(self):
        return {lab: ("?" if val is UNKNOWN else val) for lab, val in self.row.items()}

    def to_dict(self):
        return {
            "family": self.family,
            "graph": self.graph.to_dict(),
            "multidegree": dict(zip(self.graph.ids, self.multidegree)),
            "row": self.row_json(),
            "shared": self.shared,
        }


def _check_normalized(gd):
    if not 0 <= gd.d < gd.twog2:
        raise DomainError(f"families need 0 <= d < 2g-2 = {gd.twog2}, got d={gd.d}")


def _row(gd, fill):
    """Row over all boundary labels: ``fill(label, i)`` for each divisor."""
    return {row.label: fill(row.label, row.i) for row in boundary_table(gd)}


def _stable(graph):
    if classify(graph) is not Stability.STABLE:
        raise VerificationError(f"special fibre {graph!r} is not stable")
    return graph


def family_F(gd):
    """Pencil whose special fibre is an irreducible curve acquiring a node in the limit."""
    _check_normalized(gd)
    g = gd.g
    graph = _stable(DualGraph(
        [("C", g - 3), ("R1", 0), ("R2", 0)],
        [("R1", "R2")] + [("C", "R1")] * 2 + [("C", "R2")] * 2,
    ))
    row = _row(gd, lambda lab, i: -1 if i == 0 else 0)
    return FamilyReport("F", graph, (gd.d, 0, 0), row)


def family_Fprime(gd, variant):
    """Family meeting the ``i = 1`` boundary transversally.

    The fibre has a genus ``g-3`` curve ``C`` meeting ``R1`` twice and
    ``R2`` once, with ``R1R2`` and the elliptic tail ``E`` hanging off ``R2``;
    these are the only edge counts that give ``R1`` three nodes, ``R2 + E``
    two nodes and ``E`` one node.
    """
    _check_normalized(gd)
    g, d = gd.g, gd.d
    if variant == 1:
        if d > g - 1:
            raise NotApplicable(f"F'1 needs d <= g-1 = {g - 1}, got d={d}")
        md = (d, 0, 0, 0)
    elif variant == 2:
        if d < g - 1:
            raise NotApplicable(f"F'2 needs d >= g-1 = {g - 1}, got d={d}")
        md = (d - 3, 1, 1, 1)
    else:
        raise DomainError(f"variant must be 1 or 2, got {variant}")
    graph = _stable(DualGraph(
        [("C", g - 3), ("E", 1), ("R1", 0), ("R2", 0)],
        [("C", "R1")] * 2 + [("C", "R2"), ("R1", "R2"), ("R2", "E")],
    ))
    mine = f"d1_{variant}"

    def fill(lab, i):
        if i == 0:
            return UNKNOWN
        if i > 1:
            return 0
        if lab == "d1":
            return -1
        return -1 if lab == mine else 0

    return FamilyReport(f"Fp{variant}", graph, md, _row(gd, fill))


@dataclass(frozen=True)
class FhIntegers:
    alpha1: int
    alpha2: int
    beta1: int
    beta2: int
    case: str


def h_range(g):
    return range(1, (g - 2) // 2 + 1)


def _floor_ceil(x):
    if x.denominator == 2:
        return floor(x), ceil(x)
    n = floor(x + Fraction(1, 2))
    return n, n


def fh_integers(gd, h):
    g, d = gd.g, gd.d
    if h not in h_range(g):
        raise RangeError(f"h must lie in [1, {(g - 2) // 2}] for g={g}, got {h}")
    a = Fraction(d * (2 * g - 2 * h - 3), 2 * g - 2)
    b = Fraction(d * (2 * h - 1), 2 * g - 2)
    alpha1, alpha2 = _floor_ceil(a)
    beta1, beta2 = _floor_ceil(b)
    case = "B" if a.denominator == 2 else "A"
    assert (case == "A") == (not divides(invariants(gd).k, 2 * h + 1))
    return FhIntegers(alpha1, alpha2, beta1, beta2, case)


def family_Fh(gd, h, variant):
    """Family meeting the ``i = h + 1`` boundary.

    The fibre is a genus 0 component ``E`` with three single nodes to
    ``C1`` (genus ``h``), ``C2`` (genus ``g-h-1``) and an elliptic ``Gamma``.
    Multidegrees are listed in the order ``(C1, C2, Gamma, E)``.
    """
    _check_normalized(gd)
    if variant not in (1, 2):
        raise DomainError(f"variant must be 1 or 2, got {variant}")
    g, d = gd.g, gd.d
    ints = fh_integers(gd, h)
    graph = _stable(DualGraph(
        [("C1", h), ("C2", g - h - 1), ("Gamma", 1), ("E", 0)],
        [("C1", "E"), ("C2", "E"), ("Gamma", "E")],
    ))
    if ints.case == "A":
        alpha, beta = ints.alpha1, ints.beta1
        rest = d - alpha - beta
        if rest == 0:
            tail = (0, 0)
        elif rest == 1:
            tail = (0, 1) if d <= g - 1 else (1, 0)
        elif rest == 2:
            tail = (1, 1)
        else:
            raise VerificationError(f"unexpected remaining degree {rest}")
        md = (beta, alpha) + tail
        family, shared = f"Fh({h})", True
    elif variant == 1:
        md = (ints.beta2, ints.alpha1) + ((0, 1) if d <= g - 1 else (1, 1))
        family, shared = f"Fh1({h})", False
    else:
        md = (ints.beta1, ints.alpha2) + ((0, 0) if d < g - 1 else (1, 0))
        family, shared = f"Fh2({h})", False
    if sum(md) != d:
        raise VerificationError(f"multidegree {md} does not sum to d={d}")

    col = h + 1
    col_case = boundary_case(gd, col)

    def fill(lab, i):
        if i <= h:
            return UNKNOWN
        if i > col:
            return 0
        if col_case in ("A", "B"):
            return -1
        if col_case == "D":
            return -1 if variant == 1 or shared else UNKNOWN
        return -1 if lab.endswith(f"_{variant}") else 0

    note = "case A: both variants coincide" if shared else f"case B, variant {variant}"
    return FamilyReport(family, graph, md, _row(gd, fill), shared, note)


def all_families(gd):
    """Every family construction for ``gd``, as ``(name, report or reason)``.

    Inapplicable constructions are listed with the reason in place of the report.
    """
    _check_normalized(gd)
    out = [("F", family_F(gd))]
    for v in (1, 2):
        try:
            out.append((f"Fp{v}", family_Fprime(gd, v)))
        except NotApplicable as exc:
            out.append((f"Fp{v}", str(exc)))
    for h in h_range(gd.g):
        first = family_Fh(gd, h, 1)
        out.append((first.family, first))
        if not first.shared:
            second = family_Fh(gd, h, 2)
            out.append((second.family, second))
    return out


@dataclass(frozen=True)
class IndependenceMatrix:
    cols: tuple
    rows: tuple
    verdict: str

    def entry(self, r, label):
        return self.rows[r].row[label]

    def to_dict(self):
        return {
            "cols": list(self.cols),
            "rows": [{"family": rep.family, "entries": rep.row_json()} for rep in self.rows],
            "verdict": self.verdict,
        }


def _builders(gd):
    """Row constructors in column order; the second F_h variant only for a split column."""
    g, d = gd.g, gd.d
    out = [lambda: family_F(gd)]
    if d <= g - 1:
        out.append(lambda: family_Fprime(gd, 1))
    if d >= g - 1:
        out.append(lambda: family_Fprime(gd, 2))
    for h in h_range(g):
        out.append(lambda h=h: family_Fh(gd, h, 1))
        if boundary_case(gd, h + 1) == "C":
            out.append(lambda h=h: family_Fh(gd, h, 2))
    return out


def _map(fn, items, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def independence_matrix(gd, threads=None):
    """Assemble the intersection matrix and check it is unit lower triangular.

    Row ``r`` is designated for column ``r``: it must have ``-1`` there and
    an exact ``0`` at every later column.  Unknown entries are allowed only
    before the diagonal, so the matrix has full column rank over the integers.
    """
    gd = GD(gd.g, gd.d % gd.twog2)
    cols = tuple(row.label for row in boundary_table(gd))
    rows = _map(lambda build: build(), _builders(gd), threads)
    if len(rows) != len(cols):
        raise VerificationError(f"{len(rows)} families for {len(cols)} boundary divisors")
    for r, rep in enumerate(rows):
        if not rep.is_balanced():
            raise VerificationError(f"{rep.family}: multidegree {rep.multidegree} is not balanced")
        if rep.row[cols[r]] != -1:
            raise VerificationError(f"{rep.family}: entry at {cols[r]} is {rep.row[cols[r]]}, expected -1")
        for lab in cols[r + 1:]:
            if rep.row[lab] != 0:
                raise VerificationError(f"{rep.family}: entry at {lab} is {rep.row[lab]}, expected 0")
    return IndependenceMatrix(cols, tuple(rows), "independent")
