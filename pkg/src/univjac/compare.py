"""Comparison with the moduli scheme of stable pairs.

The class group of the compactified scheme has one boundary generator
``Delta(i)`` for each ``0 <= i <= g/2`` on top of a free part of rank 2.
Its map ``alpha_d`` to the boundary of the rigidified stack is the same
as the pull-back of boundary divisors, so the cokernel is read off the
Smith form of a 0/1/2 matrix.
"""

from dataclasses import dataclass

from .arith import GD
from .errors import DomainError
from .picard import PicElement, boundary_case, boundary_labels, pullback_boundary
from .smith import cokernel

__all__ = ["alpha_d", "alpha_matrix", "ColumnCokernel", "CompareReport", "compare_report",
           "PicJ0", "pic_J0"]


def alpha_d(gd, i):
    """Image of ``Delta(i)`` in the boundary part of the rigidified compactification."""
    return PicElement("barj", pullback_boundary(gd, i).coeffs)


def alpha_matrix(gd):
    """Rows are boundary labels of the stack, columns are ``Delta(0..g/2)``."""
    labels = boundary_labels(gd)
    cols = [alpha_d(gd, i) for i in range(gd.g // 2 + 1)]
    return [[col[lab] for col in cols] for lab in labels]


@dataclass(frozen=True)
class ColumnCokernel:
    i: int
    case: str
    targets: tuple
    free_rank: int
    torsion: tuple

    def describe(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CompareReport:
    g: int
    d: int
    rank_cl_barJ: int
    rank_cl_J: int
    rank_pic_barJ: int
    rank_pic_J: int
    columns: tuple
    free_rank: int
    torsion: tuple
    consistent: bool

    @property
    def isomorphism(self):
        return self.free_rank == 0 and not self.torsion

    def to_dict(self):
        return {
            "g": self.g,
            "d": self.d,
            "rank_cl_barJ": self.rank_cl_barJ,
            "rank_cl_J": self.rank_cl_J,
            "rank_pic_barJ": self.rank_pic_barJ,
            "rank_pic_J": self.rank_pic_J,
            "columns": [
                {"i": c.i, "case": c.case, "targets": list(c.targets),
                 "cokernel": c.describe(), "free_rank": c.free_rank, "torsion": list(c.torsion)}
                for c in self.columns
            ],
            "cokernel": {"free_rank": self.free_rank, "torsion": list(self.torsion)},
            "consistent": self.consistent,
        }


def compare_report(gd):
    labels = boundary_labels(gd)
    matrix = alpha_matrix(gd)
    columns = []
    consistent = True
    for i in range(gd.g // 2 + 1):
        image = alpha_d(gd, i)
        pulled = pullback_boundary(gd, i)
        consistent &= image.coeffs == pulled.coeffs
        targets = tuple(lab for lab in labels if image[lab])
        free, tors = cokernel([[image[lab]] for lab in targets])
        columns.append(ColumnCokernel(i, boundary_case(gd, i), targets, free, tuple(tors)))
    free, tors = cokernel(matrix)
    B = len(labels)
    half = gd.g // 2
    return CompareReport(gd.g, gd.d, half + 3, 2, 2 + B, 2, tuple(columns), free, tuple(tors),
                         consistent)


@dataclass(frozen=True)
class PicJ0:
    """Picard group of the locus of curves without automorphisms, as ``Z/n`` and ``Z`` summands."""

    torsion: tuple
    free: tuple

    @property
    def free_rank(self):
        return len(self.free)

    def describe(self):
        parts = [f"Z/{n}*{gen}" for gen, n in self.torsion] + [f"Z*{gen}" for gen in self.free]
        return " + ".join(parts)

    def to_dict(self):
        return {"torsion": [{"generator": gen, "order": n} for gen, n in self.torsion],
                "free": list(self.free)}


def pic_J0(gd):
    """In genus 3 the curves with automorphisms form a divisor of class ``9 L10``, which is killed."""
    if not isinstance(gd, GD):
        raise DomainError("expected a GD pair")
    if gd.g == 3:
        return PicJ0((("L10", 9),), ("Xi",))
    return PicJ0((), ("L10", "Xi"))
