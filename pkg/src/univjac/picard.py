"""Picard groups of the universal Jacobian stacks, in explicit free bases.

Four groups are modelled, named by ``space``:

``"jac"``     the universal Jacobian stack, basis ``L10, L01, L11``;
``"j"``       its rigidification, basis ``L10, Xi``;
``"barjac"``  the compactified stack, ``L10, L01, L11`` plus boundary labels;
``"barj"``    its rigidification, ``L10, Xi`` plus boundary labels.

Here ``Lnm`` is the tautological bundle Lambda(n, m) and ``Xi`` the second
generator of the rigidified group.  Elements are integer exponent vectors
(:class:`PicElement`); intermediate Chern-class computations use rational
vectors (:class:`QClass`).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from threading import Lock

from .arith import GD, divides, invariants
from .dualgraph import DualGraph
from .errors import DomainError, RangeError

__all__ = [
    "SPACES",
    "BoundaryDivisor",
    "PicElement",
    "QClass",
    "TopoClass",
    "Presentation",
    "ThetaRelation",
    "basis",
    "boundary_table",
    "boundary_labels",
    "boundary_case",
    "pullback_boundary",
    "total_boundary",
    "grr_degree_one",
    "kappa_to_lambda",
    "reduce_lambda",
    "reduce_K",
    "res_weight",
    "xi_element",
    "include_rigid",
    "restrict",
    "membership_J",
    "chi_d",
    "presentation",
    "topo_class",
    "eta_decomposition",
    "eta_topo",
    "spin_grr",
    "theta_relation",
    "binom2",
]

SPACES = ("jac", "j", "barjac", "barj")
_TAUT = {"jac": ("L10", "L01", "L11"), "barjac": ("L10", "L01", "L11"),
         "j": ("L10", "Xi"), "barj": ("L10", "Xi")}


def binom2(a):
    """``a(a-1)/2`` for every integer ``a``."""
    return a * (a - 1) // 2


# -- boundary divisors --------------------------------------------------------


@dataclass(frozen=True)
class BoundaryDivisor:
    """One irreducible boundary divisor of the compactified stack.

    ``case`` is ``"A"`` (irreducible nodal curve), ``"B"`` (unsplit vine),
    ``"C"`` (one of a split pair) or ``"D"`` (the self-conjugate divisor at
    ``i = g/2``).  ``multidegree`` is the generic multidegree on
    ``generic_graph``: the one-node vine of type ``vine_type`` for ``i >= 1``,
    or a genus ``g-1`` component with one self-node for ``i = 0``.
    """

    label: str
    i: int
    case: str
    vine_type: tuple
    multidegree: tuple
    split: bool

    def generic_graph(self):
        if self.i == 0:
            return DualGraph([("C", self.vine_type[1] - 1)], [("C", "C")])
        return DualGraph([("C1", self.vine_type[0]), ("C2", self.vine_type[1])], [("C1", "C2")])


def boundary_case(gd, i):
    """Which of the cases A-D governs boundary index ``i``."""
    g = gd.g
    if not 0 <= i <= g // 2:
        raise RangeError(f"boundary index must lie in [0, {g // 2}], got {i}")
    if i == 0:
        return "A"
    k = invariants(gd).k
    if 2 * i == g and divides(k, g - 1):
        return "D"
    if divides(k, 2 * i - 1):
        return "C"
    return "B"


def _round_half_up(x):
    return floor(x + Fraction(1, 2))


def _build_table(g, d):
    gd = GD(g, d)
    twog2 = 2 * g - 2
    rows = []
    for i in range(g // 2 + 1):
        case = boundary_case(gd, i)
        if case == "A":
            rows.append(BoundaryDivisor("d0", 0, "A", (0, g), (d,), False))
            continue
        x = Fraction(d * (2 * i - 1), twog2)
        y = Fraction(d * (2 * (g - i) - 1), twog2)
        if case == "B":
            assert x.denominator != 2, "half-integral value outside the split case"
            rows.append(BoundaryDivisor(f"d{i}", i, "B", (i, g - i),
                                        (_round_half_up(x), _round_half_up(y)), False))
        elif case == "C":
            half = Fraction(1, 2)
            first = (x - half, y + half)
            second = (x + half, y - half)
            assert all(v.denominator == 1 for v in first + second)
            rows.append(BoundaryDivisor(f"d{i}_1", i, "C", (i, g - i),
                                        tuple(int(v) for v in first), True))
            rows.append(BoundaryDivisor(f"d{i}_2", i, "C", (i, g - i),
                                        tuple(int(v) for v in second), True))
        else:
            rows.append(BoundaryDivisor("dg2", i, "D", (i, g - i),
                                        ((d - 1) // 2, (d + 1) // 2), False))
    return tuple(rows)


_TABLES = {}
_TABLES_LOCK = Lock()


def boundary_table(gd):
    """Boundary divisors ordered by ``i``, split pairs adjacent.

    Tables are cached; each one is built once even under concurrent calls.
    """
    key = (gd.g, gd.d)
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.get(key)
            if table is None:
                table = _TABLES[key] = _build_table(*key)
    return table


def boundary_labels(gd):
    return tuple(row.label for row in boundary_table(gd))


def basis(gd, space):
    if space not in SPACES:
        raise DomainError(f"unknown space {space!r}; expected one of {SPACES}")
    labels = boundary_labels(gd) if space.startswith("bar") else ()
    return _TAUT[space] + labels


# -- integer classes -----------------------------------------------------------


class PicElement:
    """Integer exponent vector over the named basis of one Picard group.

    Zero coefficients are dropped, so equality is equality of classes.
    Elements of different groups never combine.
    """

    __slots__ = ("space", "_coeffs")

    def __init__(self, space, coeffs=None):
        if space not in SPACES:
            raise DomainError(f"unknown space {space!r}; expected one of {SPACES}")
        clean = {}
        for key, val in (coeffs or {}).items():
            if isinstance(val, Fraction):
                if val.denominator != 1:
                    raise DomainError(f"non-integral coefficient {val} for {key}")
                val = int(val)
            if not isinstance(val, int):
                raise DomainError(f"coefficient of {key} must be an integer")
            if key in _TAUT["jac"] + ("Xi",) and key not in _TAUT[space]:
                raise DomainError(f"{key} is not a generator of the {space} group")
            if not space.startswith("bar") and key not in _TAUT[space]:
                raise DomainError(f"{key} is not a generator of the {space} group")
            if val:
                clean[str(key)] = val
        self.space = space
        self._coeffs = clean

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def __getitem__(self, key):
        return self._coeffs.get(key, 0)

    def _check(self, other):
        if not isinstance(other, PicElement):
            return NotImplemented
        if other.space != self.space:
            raise DomainError(f"cannot combine classes of {self.space} and {other.space}")
        return None

    def __add__(self, other):
        bad = self._check(other)
        if bad is not None:
            return bad
        out = dict(self._coeffs)
        for key, val in other._coeffs.items():
            out[key] = out.get(key, 0) + val
        return PicElement(self.space, out)

    def __neg__(self):
        return PicElement(self.space, {key: -val for key, val in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return PicElement(self.space, {key: n * val for key, val in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PicElement):
            return NotImplemented
        return self.space == other.space and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.space, tuple(sorted(self._coeffs.items()))))

    def boundary_part(self):
        return {k: v for k, v in self._coeffs.items() if k not in _TAUT["jac"] + ("Xi",)}

    def vector(self, gd):
        """Coefficients listed along ``basis(gd, space)``; rejects foreign labels."""
        names = basis(gd, self.space)
        extra = set(self._coeffs).difference(names)
        if extra:
            raise DomainError(f"labels {sorted(extra)} are not boundary divisors for g={gd.g}, d={gd.d}")
        return tuple(self[n] for n in names)

    def to_dict(self):
        return {"space": self.space, "coeffs": dict(self._coeffs)}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(str(data["space"]).lower(), dict(data.get("coeffs", {})))
        except (KeyError, TypeError, AttributeError) as exc:
            raise DomainError(f"malformed class description: {exc}") from None

    def __repr__(self):
        return f"PicElement({self.space!r}, {self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "O"
        return " * ".join(f"{k}^{v}" if v != 1 else k for k, v in self._coeffs.items())


def _require(elem, *spaces):
    if not isinstance(elem, PicElement) or elem.space not in spaces:
        got = getattr(elem, "space", type(elem).__name__)
        raise DomainError(f"expected a class in {' or '.join(spaces)}, got {got}")


def pullback_boundary(gd, i):
    """Pull-back of the boundary divisor ``delta_i`` of the moduli of stable curves."""
    case = boundary_case(gd, i)
    labels = [row.label for row in boundary_table(gd) if row.i == i]
    if case == "D":
        return PicElement("barjac", {labels[0]: 2})
    return PicElement("barjac", {lab: 1 for lab in labels})


def total_boundary(gd):
    out = PicElement("barjac")
    for i in range(gd.g // 2 + 1):
        out = out + pullback_boundary(gd, i)
    return out


def reduce_lambda(gd, n, m):
    """Lambda(n, m) in the free basis of the compactified stack."""
    coeffs = {
        "L10": 6 * n * n - 6 * n - m * m + 1,
        "L01": -m * n + binom2(m + 1),
        "L11": m * n + binom2(m),
    }
    return PicElement("barjac", coeffs) + (-binom2(n)) * total_boundary(gd)


def reduce_K(gd, which):
    if which == "K10":
        return PicElement("barjac", {"L10": 12}) - total_boundary(gd)
    if which == "K01":
        return PicElement("barjac", {"L11": 1, "L01": -1})
    if which == "K_12":
        return PicElement("barjac", {"L01": 1, "L11": 1, "L10": -2})
    raise DomainError(f"unknown tautological class {which!r}")


def restrict(elem):
    """Restriction to the open part: drop the boundary coefficients."""
    _require(elem, "barjac", "barj")
    target = elem.space[3:]
    return PicElement(target, {k: v for k, v in elem.coeffs.items() if k in _TAUT[target]})


def xi_element(gd):
    """Xi written in the ``jac`` basis."""
    g, d = gd.g, gd.d
    G = gcd(d + g - 1, d - g + 1)
    return PicElement("jac", {"L01": (d + g - 1) // G, "L11": -((d - g + 1) // G)})


def include_rigid(gd, elem):
    """Pull a class of ``j``/``barj`` back to ``jac``/``barjac`` (Xi expanded)."""
    _require(elem, "j", "barj")
    target = "jac" if elem.space == "j" else "barjac"
    xi = xi_element(gd)
    coeffs = {k: v for k, v in elem.coeffs.items() if k != "Xi"}
    out = PicElement(target, coeffs)
    return out + PicElement(target, xi.coeffs) * elem["Xi"]


def res_weight(gd, elem):
    """Weight of the scalar automorphisms; zero on the rigidified groups and on boundary labels."""
    if not isinstance(elem, PicElement):
        raise DomainError("expected a PicElement")
    if elem.space in ("j", "barj"):
        return 0
    return (gd.d - gd.g + 1) * elem["L01"] + (gd.d + gd.g - 1) * elem["L11"]


def membership_J(gd, elem):
    """Write a weight-zero ``jac`` class as ``a*L10 + t*Xi``; ``None`` if the weight is nonzero."""
    _require(elem, "jac")
    if res_weight(gd, elem):
        return None
    xi = xi_element(gd)
    p, q = xi["L01"], -xi["L11"]
    t = elem["L01"] // p if p else -elem["L11"] // q
    assert elem["L01"] == t * p and elem["L11"] == -t * q
    return elem["L10"], t


def chi_d(gd, elem):
    """Multiple of the theta class cut out on a fibre Jacobian."""
    _require(elem, "j")
    return invariants(gd).k * elem["Xi"]


# -- rational classes ----------------------------------------------------------

_QBASES = {
    "kappa": ("kappa10", "kappa01", "kappa_12", "delta"),
    "pairing": ("etaeta", "etaL", "LL"),
}


@dataclass(frozen=True)
class QClass:
    basis: str
    coeffs: tuple

    def __post_init__(self):
        if self.basis not in _QBASES:
            raise DomainError(f"unknown rational basis {self.basis!r}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != len(_QBASES[self.basis]):
            raise DomainError("coefficient count does not match the basis")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def names(self):
        return _QBASES[self.basis]

    def __getitem__(self, name):
        return self.coeffs[self.names.index(name)]

    def __add__(self, other):
        if not isinstance(other, QClass) or other.basis != self.basis:
            return NotImplemented
        return QClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return QClass(self.basis, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return QClass(self.basis, tuple(scalar * a for a in self.coeffs))

    def as_dict(self):
        return dict(zip(self.names, self.coeffs))


def grr_degree_one(n, m):
    """First Chern class of Lambda(n, m) over kappa10, kappa01, kappa_12 and the total boundary."""
    return QClass("kappa", (Fraction(6 * n * n - 6 * n + 1, 12), Fraction(2 * n * m - m, 2),
                            Fraction(m * m, 2), Fraction(1, 12)))


def kappa_to_lambda(gd, cls):
    """Rewrite a kappa-basis class in the ``barjac`` basis; must come out integral."""
    if cls.basis != "kappa":
        raise DomainError("expected a class in the kappa basis")
    k10, k01, k12, delta = cls.coeffs
    taut = {"L10": 12 * k10 - 2 * k12, "L01": -k01 + k12, "L11": k01 + k12}
    dcoef = delta - k10
    out = PicElement("barjac", taut)
    if dcoef.denominator != 1:
        raise DomainError(f"boundary coefficient {dcoef} is not integral")
    return out + int(dcoef) * total_boundary(gd)


# -- comparison with topology -------------------------------------------------


@dataclass(frozen=True)
class TopoClass:
    """Coefficients over ``lambda``, ``zeta`` and ``kappa_{-1,2}``."""

    lam: Fraction
    zeta: Fraction
    kappa: Fraction

    @property
    def integral(self):
        return all(Fraction(c).denominator == 1 for c in (self.lam, self.zeta, self.kappa))

    def __sub__(self, other):
        return TopoClass(self.lam - other.lam, self.zeta - other.zeta, self.kappa - other.kappa)


def topo_class(gd, elem):
    _require(elem, "jac")
    a, b, c = elem["L10"], elem["L01"], elem["L11"]
    # L10 -> lambda, L11 -> -zeta, L01 -> zeta + kappa + lambda
    return TopoClass(Fraction(a + b), Fraction(b - c), Fraction(b))


def eta_topo(gd):
    """The generator ``eta`` rewritten over lambda, zeta, kappa via kappa01 = 2 zeta + kappa."""
    g, d = gd.g, gd.d
    G1 = invariants(gd).G1
    return TopoClass(Fraction(0), Fraction(2 * d, G1), Fraction(d + g - 1, G1))


def eta_decomposition(gd, elem):
    """Coefficients ``(lambda, eta)`` of a weight-zero class, else ``None``."""
    ab = membership_J(gd, elem)
    if ab is None:
        return None
    a, t = ab
    p = xi_element(gd)["L01"]
    return a + t * p, t


# -- structure reports ---------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    space: str
    basis: tuple
    rank: int
    report: dict = field(compare=False)


def presentation(gd, space):
    names = basis(gd, space)
    B = len(boundary_labels(gd))
    inv = invariants(gd)
    report = {
        "boundary_count": B,
        "rank_barjac_minus_jac": (3 + B) - 3,
        "rank_barj_minus_j": (2 + B) - 2,
        "res_image_generator": inv.gerbe_order,
        "free": True,
    }
    return Presentation(space, names, len(names), report)


@dataclass(frozen=True)
class ThetaRelation:
    k: int
    e: int
    exponent: int
    difference: QClass
    verified: bool


def spin_grr(k, n, m):
    """First Chern class of the determinant of eta^n (x) L^m over the pairing basis."""
    return QClass("pairing", (Fraction(6 * n * n - 6 * k * n + k * k, 12),
                              Fraction(2 * m * n - k * m, 2), Fraction(m * m, 2)))


def theta_relation(gd):
    inv = invariants(gd)
    k, e = inv.k, inv.e
    diff = (k + e) * spin_grr(k, 0, 1) - e * spin_grr(k, k, 1) - k * spin_grr(k, -e, 1)
    twice = -k * (k + e) * e
    assert twice % 2 == 0
    exponent = twice // 2
    ok = diff == QClass("pairing", (exponent, 0, 0))
    return ThetaRelation(k, e, exponent, diff, ok)
