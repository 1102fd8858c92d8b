"""Places and divisors on the Riemann sphere P^1 over Q(i).

A divisor is stored canonically as its multiplicity at infinity together
with, for every nonzero multiplicity m, the monic squarefree polynomial
whose roots are exactly the finite points of multiplicity m.  Two divisors
are equal iff these data agree, whatever basis was used to build them.
Base-field roots are split off only when places are listed.
"""
from dataclasses import dataclass
from functools import reduce

import mpmath

from .errors import NonUniformLocusError, ZeroInputError
from .field import ZERO, GaussianRational
from .poly import (
    RatFunction,
    UniPoly,
    coprime_squarefree_basis,
    poly_gcd,
    squarefree_decomposition,
)

__all__ = [
    "Infinity",
    "FinitePoint",
    "AlgebraicLocus",
    "INF",
    "Divisor",
    "valuation",
    "base_field_roots",
    "place_from_json",
]


@dataclass(frozen=True)
class Infinity:
    @property
    def degree(self):
        return 1

    def sort_key(self):
        return (2,)

    def to_json(self):
        return "inf"

    def __str__(self):
        return "(inf)"


INF = Infinity()


@dataclass(frozen=True)
class FinitePoint:
    value: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "value", GaussianRational.coerce(self.value))

    @property
    def degree(self):
        return 1

    @property
    def local_poly(self):
        return UniPoly((-self.value, 1))

    def sort_key(self):
        return (0, self.value.sort_key())

    def to_json(self):
        return str(self.value)

    def __str__(self):
        return f"(z={self.value})"


@dataclass(frozen=True)
class AlgebraicLocus:
    """The root set of a monic squarefree polynomial with no root in Q(i)."""

    poly: UniPoly

    def __post_init__(self):
        q = UniPoly.coerce(self.poly)
        if q.degree < 2 or q.lc != 1:
            raise ValueError("an algebraic locus needs a monic polynomial of degree >= 2")
        if poly_gcd(q, q.derivative()).degree > 0:
            raise ValueError("an algebraic locus polynomial must be squarefree")
        object.__setattr__(self, "poly", q)

    @property
    def degree(self):
        return self.poly.degree

    @property
    def local_poly(self):
        return self.poly

    def sort_key(self):
        return (1, self.poly.sort_key())

    def to_json(self):
        return self.poly.to_strings()

    def __str__(self):
        return f"({self.poly} = 0)"


def place_from_json(obj):
    """Inverse of ``Place.to_json``; also accepts the CLI spelling of points."""
    if isinstance(obj, str):
        if obj.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        return FinitePoint(GaussianRational.coerce(obj))
    if isinstance(obj, (list, tuple)):
        q = UniPoly([GaussianRational.coerce(c) for c in obj])
        if q.degree == 1:
            q = q.monic()
            return FinitePoint(-q[0])
        return AlgebraicLocus(q)
    raise ValueError(f"cannot read a place from {obj!r}")


# -- valuations -------------------------------------------------------------

def _poly_valuation(h, place):
    if isinstance(place, FinitePoint):
        c = place.value
        m = 0
        cs = list(h.coeffs)
        # repeated synthetic division by (z - c)
        while True:
            acc = ZERO
            quo = []
            for a in reversed(cs):
                acc = acc * c + a
                quo.append(acc)
            if acc:
                return m
            quo.pop()
            cs = quo[::-1]
            m += 1
    q = place.poly
    m = 0
    while True:
        quo, rem = divmod(h, q)
        if rem:
            break
        h = quo
        m += 1
    if poly_gcd(h, q).degree > 0:
        raise NonUniformLocusError(f"{q} is not uniform for the given function; refine first")
    return m


def valuation(h, place):
    """Order of vanishing of a polynomial or rational function at a place."""
    if isinstance(h, RatFunction):
        num, den = h.num, h.den
    else:
        num, den = UniPoly.coerce(h), UniPoly.constant(1)
    if not num:
        raise ZeroInputError("valuation of the zero function")
    if isinstance(place, Infinity):
        return den.degree - num.degree
    return _poly_valuation(num, place) - _poly_valuation(den, place)


# -- exact root splitting -----------------------------------------------------

def _integral_coefficients(p):
    from math import lcm

    den = 1
    for c in p.coeffs:
        den = lcm(den, int(c.re.denominator), int(c.im.denominator))
    return [(int(c.re * den), int(c.im * den)) for c in p.coeffs]


def base_field_roots(p):
    """Roots of a squarefree polynomial lying in Q(i), in ascending order.

    Candidates come from a high-precision numerical solve; a root r/s of a
    polynomial with Gaussian-integer coefficients has s dividing the leading
    coefficient c, so c*root is a Gaussian integer and rounding recovers it.
    Every returned root is verified exactly.
    """
    p = UniPoly.coerce(p)
    if p.degree <= 0:
        return []
    if p.degree == 1:
        return [-p[0] / p[1]]
    ints = _integral_coefficients(p)
    lead = GaussianRational(*ints[-1])
    digits = max(len(str(abs(a))) + len(str(abs(b))) for a, b in ints)
    ctx = mpmath.MPContext()
    found = set()
    for attempt in range(3):
        ctx.dps = 30 + 2 * digits + 20 * attempt
        coeffs = [ctx.mpc(a, b) for a, b in reversed(ints)]
        try:
            approx = ctx.polyroots(coeffs, maxsteps=200 + 100 * p.degree, extraprec=4 * ctx.prec)
        except ctx.NoConvergence:
            continue
        lead_c = ctx.mpc(int(lead.re), int(lead.im))
        found = set()
        for x in approx:
            y = x * lead_c
            cand = GaussianRational(int(ctx.nint(y.real)), int(ctx.nint(y.imag))) / lead
            if not p(cand):
                found.add(cand)
        break
    return sorted(found, key=GaussianRational.sort_key)


# -- divisors ---------------------------------------------------------------

def _place_poly(place):
    if isinstance(place, FinitePoint):
        return place.local_poly
    if isinstance(place, AlgebraicLocus):
        return place.poly
    raise TypeError(f"not a finite place: {place!r}")


class Divisor:
    """A finite integer-weighted sum of places on P^1."""

    __slots__ = ("_inf", "_finite", "_places")

    def __init__(self, places=None):
        pairs, inf = [], 0
        items = places.items() if isinstance(places, dict) else (places or ())
        for place, mult in items:
            if not isinstance(mult, int):
                raise TypeError("divisor multiplicities must be integers")
            if isinstance(place, Infinity):
                inf += mult
            else:
                pairs.append((_place_poly(place), mult))
        self._set(inf, _group(pairs))

    def _set(self, inf, finite):
        object.__setattr__(self, "_inf", inf)
        object.__setattr__(self, "_finite", finite)
        object.__setattr__(self, "_places", None)

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    @classmethod
    def _make(cls, inf, finite):
        obj = object.__new__(cls)
        obj._set(inf, finite)
        return obj

    @classmethod
    def zeros(cls, h):
        """Divisor of zeros of a nonzero polynomial in the affine chart."""
        h = UniPoly.coerce(h)
        if not h:
            raise ZeroInputError("divisor of the zero polynomial")
        return cls._make(0, {m: s for s, m in squarefree_decomposition(h)})

    @classmethod
    def from_local_polys(cls, pairs, inf=0):
        """Build from (poly, multiplicity) pairs, counting roots with their order, plus infinity."""
        return cls._make(inf, _group([(UniPoly.coerce(p), m) for p, m in pairs]))

    @classmethod
    def principal(cls, h):
        """div(h) for a nonzero rational function, including its order at infinity."""
        h = RatFunction.coerce(h)
        if not h:
            raise ZeroInputError("divisor of the zero function")
        zeros = cls.zeros(h.num)
        poles = cls.zeros(h.den) if h.den.degree > 0 else cls()
        return zeros - poles + cls._make(h.den.degree - h.num.degree, {})

    # -- canonical data ---------------------------------------------------
    @property
    def infinity_multiplicity(self):
        return self._inf

    def finite_part(self):
        """Mapping multiplicity -> monic squarefree polynomial of those points."""
        return dict(self._finite)

    @property
    def degree(self):
        return self._inf + sum(m * p.degree for m, p in self._finite.items())

    def is_effective(self):
        return self._inf >= 0 and all(m > 0 for m in self._finite)

    def __bool__(self):
        return bool(self._inf) or bool(self._finite)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._inf == other._inf and self._finite == other._finite

    def __hash__(self):
        return hash((self._inf, frozenset(self._finite.items())))

    # -- group structure --------------------------------------------------
    def _pairs(self):
        return [(p, m) for m, p in self._finite.items()]

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Divisor):
            return NotImplemented
        return Divisor._make(self._inf + other._inf, _group(self._pairs() + other._pairs()))

    __radd__ = __add__

    def __neg__(self):
        return Divisor._make(-self._inf, {-m: p for m, p in self._finite.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return Divisor()
        return Divisor._make(k * self._inf, {k * m: p for m, p in self._finite.items()})

    __rmul__ = __mul__

    # -- places -------------------------------------------------------------
    def multiplicity(self, place):
        if isinstance(place, Infinity):
            return self._inf
        if isinstance(place, FinitePoint):
            for m, p in self._finite.items():
                if not p(place.value):
                    return m
            return 0
        q = place.poly
        for m, p in self._finite.items():
            g = poly_gcd(p, q)
            if g.degree == q.degree:
                return m
            if g.degree > 0:
                raise NonUniformLocusError(f"{q} straddles several multiplicities")
        return 0

    def places(self):
        """Sorted list of (place, multiplicity): finite points, then loci, then infinity."""
        if self._places is None:
            out = []
            for m, p in self._finite.items():
                roots = base_field_roots(p)
                rest = p
                for r in roots:
                    out.append((FinitePoint(r), m))
                    rest = rest.exact_div(UniPoly((-r, 1)))
                if rest.degree >= 1:
                    out.append((AlgebraicLocus(rest.monic()), m))
            out.sort(key=lambda pm: pm[0].sort_key())
            if self._inf:
                out.append((INF, self._inf))
            object.__setattr__(self, "_places", tuple(out))
        return list(self._places)

    def support(self):
        return [pl for pl, _ in self.places()]

    def to_json(self):
        return [{"place": pl.to_json(), "multiplicity": m} for pl, m in self.places()]

    @classmethod
    def from_json(cls, items):
        return cls([(place_from_json(it["place"]), int(it["multiplicity"])) for it in items])

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for pl, m in self.places():
            parts.append(f"{pl}" if m == 1 else f"{m}*{pl}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Divisor({self})"


def _group(pairs):
    """Canonical {multiplicity: squarefree product} from (poly, mult) pairs."""
    pairs = [
        (s, m * j)
        for p, m in pairs
        if m and p.degree > 0
        for s, j in squarefree_decomposition(p)
    ]
    if not pairs:
        return {}
    basis = coprime_squarefree_basis([p for p, _ in pairs])
    totals = {}
    for b in basis:
        m = sum(mult for p, mult in pairs if not (p % b))
        if m:
            totals.setdefault(m, []).append(b)
    return {m: reduce(lambda x, y: x * y, bs).monic() for m, bs in totals.items()}
