"""Elementary integer invariants of a pair (genus, degree)."""

from dataclasses import dataclass
from math import gcd

from .errors import DomainError

__all__ = ["GD", "Invariants", "invariants", "poincare_exists", "normalize_degree", "divides"]


def divides(a, b):
    """True iff ``a`` divides ``b``; ``a`` is assumed nonzero."""
    return b % a == 0


@dataclass(frozen=True)
class GD:
    """Genus ``g`` (at least 3) and degree ``d`` (any sign)."""

    g: int
    d: int

    def __post_init__(self):
        if not isinstance(self.g, int) or not isinstance(self.d, int):
            raise DomainError("g and d must be integers")
        if self.g < 3:
            raise DomainError(f"genus must be at least 3, got g={self.g}")

    @property
    def twog2(self):
        return 2 * self.g - 2

    @property
    def k(self):
        return invariants(self).k


@dataclass(frozen=True)
class Invariants:
    twog2: int
    G1: int
    k: int
    e: int
    gerbe_order: int

    def as_dict(self):
        return {"twog2": self.twog2, "G1": self.G1, "k": self.k, "e": self.e,
                "gerbe_order": self.gerbe_order}


def invariants(gd):
    """Return the structural integers of ``gd``.

    ``G1 = gcd(2g-2, d+g-1)``, ``k = (2g-2)/G1`` and the signed
    ``e = (d-g+1)/gcd(d-g+1, 2g-2)``.  ``math.gcd`` already gives
    ``gcd(0, n) = |n|``; ``2g-2 >= 4`` rules out ``gcd(0, 0)``.
    """
    g, d = gd.g, gd.d
    twog2 = 2 * g - 2
    G1 = gcd(twog2, d + g - 1)
    shift = d - g + 1
    G2 = gcd(shift, twog2)
    return Invariants(twog2=twog2, G1=G1, k=twog2 // G1, e=shift // G2, gerbe_order=G2)


def poincare_exists(gd, m=1):
    """Whether an ``m``-Poincaré line bundle exists, i.e. the gerbe order divides ``m``."""
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    return m % invariants(gd).gerbe_order == 0


def normalize_degree(gd):
    """Split ``d = d0 + n(2g-2)`` with ``0 <= d0 < 2g-2``."""
    n, d0 = divmod(gd.d, gd.twog2)
    return d0, n
