"""Rational curves P^1 -> P^n and their projective invariants.

Everything is computed from subset Wronskians of the coordinate
polynomials.  If ``G_k`` is the monic gcd of all k-subset Wronskians, then
at a finite point p the minimum of their valuations is ``nu_p(G_k)``, and
the vanishing sequence follows from successive differences of these
minima.  The ramification divisors are therefore the zero divisors of

    G_{i+1} * G_{i-1} / G_i**2

in the affine chart.  Points at infinity are handled by reversing the
chart, h(z) -> z**d * h(1/z).

Plücker subsets are ordered lexicographically.  The dual curve uses the
complement-with-sign identification of Lambda^n(V) with V*: the j-th dual
coordinate is (-1)**(n-j) times the Wronskian of all coordinates but j.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb

from .divisors import INF, AlgebraicLocus, Divisor, FinitePoint, Infinity, valuation
from .errors import (
    AllZeroError,
    DegenerateCurveError,
    IdentityViolated,
    IndexOutOfRangeError,
)
from .field import ONE, GaussianRational
from .linalg import rank
from .poly import UniPoly, gcd_list

__all__ = [
    "ProjectiveCurve",
    "VanishingSequence",
    "RamificationProfile",
    "PluckerReport",
    "normalize",
    "wronskian",
    "degree",
    "is_nondegenerate",
    "vanishing_sequence",
    "ramification_divisor",
    "ramification_divisors",
    "first_ramification_divisor",
    "associated_curve",
    "dual_curve",
    "plucker_report",
    "subset_wronskians",
]


def _subset_wronskians(hs, max_k=None):
    """All nonempty subset Wronskians of ``hs`` as {index tuple: UniPoly}.

    Built by expanding each determinant along its last row of derivatives:
    W(S) = sum_t (-1)**(k-1+t) h_{s_t}^{(k-1)} W(S minus s_t).
    """
    m = len(hs)
    max_k = m if max_k is None else max_k
    derivs = [[h] for h in hs]
    for d in derivs:
        for _ in range(1, max_k):
            d.append(d[-1].derivative())
    table = {(): UniPoly.constant(1)}
    for k in range(1, max_k + 1):
        for S in combinations(range(m), k):
            acc = UniPoly()
            for t, s in enumerate(S):
                entry = derivs[s][k - 1]
                if not entry:
                    continue
                sub = table[S[:t] + S[t + 1:]]
                if not sub:
                    continue
                term = entry * sub
                acc = acc + term if (k - 1 + t) % 2 == 0 else acc - term
            table[S] = acc
    del table[()]
    return table


def wronskian(hs):
    """Wronskian determinant of k polynomials and the power of dz it carries.

    Returns ``(w, k*(k-1)//2)``.
    """
    hs = [UniPoly.coerce(h) for h in hs]
    if not hs:
        raise ValueError("wronskian of an empty list")
    k = len(hs)
    table = _subset_wronskians(hs)
    return table[tuple(range(k))], k * (k - 1) // 2


def subset_wronskians(hs, k):
    """The k-subset Wronskians in lexicographic subset order."""
    hs = [UniPoly.coerce(h) for h in hs]
    table = _subset_wronskians(hs, k)
    return [table[S] for S in combinations(range(len(hs)), k)]


@dataclass(frozen=True)
class VanishingSequence:
    values: tuple

    def __post_init__(self):
        v = tuple(self.values)
        object.__setattr__(self, "values", v)
        if any(b <= a for a, b in zip(v, v[1:])):
            raise IdentityViolated(f"vanishing sequence {v} is not strictly increasing")
        if any(a < i for i, a in enumerate(v)):
            raise IdentityViolated(f"vanishing sequence {v} violates a_i >= i")

    def ramification(self):
        v = self.values
        return tuple(v[i] - v[i - 1] - 1 for i in range(1, len(v)))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class RamificationProfile:
    totals: tuple
    genus: int = 0

    @property
    def n(self):
        return len(self.totals)

    def __getitem__(self, i):
        """r_i for 1 <= i <= n."""
        if not 1 <= i <= len(self.totals):
            raise IndexOutOfRangeError(f"ramification index {i} out of range")
        return self.totals[i - 1]


class ProjectiveCurve:
    """A curve [h_0 : ... : h_n] in canonical form.

    The coordinates are made jointly coprime and scaled so that the leading
    coefficient of the first nonzero coordinate is 1; equal curves therefore
    have equal coordinate tuples.
    """

    def __init__(self, coords):
        coords = [UniPoly.coerce(c) for c in coords]
        if not coords or not any(coords):
            raise AllZeroError("a projective curve needs a nonzero coordinate")
        g = gcd_list(coords)
        if g.degree > 0:
            coords = [c.exact_div(g) for c in coords]
        lead = next(c for c in coords if c).lc
        if lead != ONE:
            inv = lead.inverse()
            coords = [c.scale(inv) for c in coords]
        self._coords = tuple(coords)

    @classmethod
    def from_coefficients(cls, rows):
        """Build from ascending coefficient lists, one per coordinate."""
        return cls([UniPoly(r) for r in rows])

    @classmethod
    def monomial(cls, exponents):
        return cls([UniPoly.monomial(e) for e in exponents])

    @property
    def coords(self):
        return self._coords

    @property
    def ambient_dim(self):
        return len(self._coords) - 1

    def __eq__(self, other):
        if not isinstance(other, ProjectiveCurve):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self):
        return hash(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __len__(self):
        return len(self._coords)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self._coords) + "]"

    def __repr__(self):
        return f"ProjectiveCurve({self})"

    # -- cached data; deterministic, so concurrent recomputation is harmless --
    @cached_property
    def degree(self):
        return max(c.degree for c in self._coords if c)

    @cached_property
    def span_rank(self):
        d = self.degree
        return rank([[c[k] for k in range(d + 1)] for c in self._coords])

    def wronskians(self, k, reverse=False):
        """Subset Wronskians of every size <= k, keyed by lex index tuples.

        ``reverse`` uses the chart w = 1/z around infinity.  Tables are
        cached per curve and only grow; recomputation by concurrent callers
        gives identical values.
        """
        key = "_wr_rev" if reverse else "_wr_fwd"
        cached = self.__dict__.get(key)
        if cached is not None and cached[0] >= k:
            return cached[1]
        hs = self.reversed_chart if reverse else self._coords
        table = _subset_wronskians(list(hs), k)
        self.__dict__[key] = (k, table)
        return table

    @property
    def wronskian_table(self):
        return self.wronskians(self.span_rank)

    @cached_property
    def reversed_chart(self):
        """Coordinates in the chart w = 1/z around infinity (not renormalized)."""
        d = self.degree
        return tuple(c.reversed(d) for c in self._coords)

    def wronskian_gcd(self, k):
        """G_k: monic gcd of all k-subset Wronskians; G_0 = 1."""
        if k == 0:
            return UniPoly.constant(1)
        gcds = self.__dict__.setdefault("_wr_gcds", {})
        if k not in gcds:
            table = self.wronskians(k)
            gcds[k] = gcd_list([table[S] for S in combinations(range(len(self._coords)), k)])
        return gcds[k]

    def transform(self, A):
        """The curve A.F for a constant (n+1)x(n+1) matrix A."""
        n1 = len(self._coords)
        out = []
        for row in A:
            acc = UniPoly()
            for a, c in zip(row, self._coords):
                a = GaussianRational.coerce(a)
                if a:
                    acc = acc + c.scale(a)
            out.append(acc)
        if len(out) != n1:
            raise ValueError("transformation has the wrong size")
        return ProjectiveCurve(out)


def normalize(raw_coords):
    return ProjectiveCurve(raw_coords)


def degree(f):
    d = f.degree
    if f.span_rank == len(f) and d < f.ambient_dim:
        raise IdentityViolated(f"nondegenerate curve in P^{f.ambient_dim} of degree {d}")
    return d


def is_nondegenerate(f):
    return f.span_rank == len(f)


def _require_nondegenerate(f):
    if not is_nondegenerate(f):
        raise DegenerateCurveError(f"{f} lies in a proper linear subspace")


def _minima_at(f, place, upto):
    """s_k = min valuation of the k-subset Wronskians at ``place`` for k <= upto."""
    m = len(f)
    if isinstance(place, Infinity):
        table = f.wronskians(upto, reverse=True)
        s = [0]
        for k in range(1, upto + 1):
            s.append(min(table[S].order_at_zero() for S in combinations(range(m), k) if table[S]))
        return s
    if isinstance(place, FinitePoint):
        table = f.wronskians(upto)
        s = [0]
        for k in range(1, upto + 1):
            s.append(min(valuation(table[S], place) for S in combinations(range(m), k) if table[S]))
        return s
    if isinstance(place, AlgebraicLocus):
        return [0] + [valuation(f.wronskian_gcd(k), place) for k in range(1, upto + 1)]
    raise TypeError(f"not a place: {place!r}")


def _sequence_from_minima(s):
    return tuple(s[k] - s[k - 1] + (k - 1) for k in range(1, len(s)))


def vanishing_sequence(f, place):
    """The orders a_0 < ... < a_n realizable by adapted coordinates at ``place``."""
    _require_nondegenerate(f)
    s = _minima_at(f, place, len(f))
    return VanishingSequence(_sequence_from_minima(s))


def _finite_ramification(f, i):
    num = f.wronskian_gcd(i + 1) * f.wronskian_gcd(i - 1)
    den = f.wronskian_gcd(i) ** 2
    quo, rem = divmod(num, den)
    if rem:
        raise IdentityViolated(f"negative ramification in R_{i} of {f}")
    return quo


def _ramification_at_infinity(f, i):
    s = _minima_at(f, INF, i + 1)
    a = _sequence_from_minima(s)
    return a[i] - a[i - 1] - 1


def _ramification(f, i):
    if f.degree == 0:
        raise DegenerateCurveError("a constant curve has no ramification divisors")
    finite = _finite_ramification(f, i)
    r_inf = _ramification_at_infinity(f, i)
    if r_inf < 0:
        raise IdentityViolated(f"negative ramification at infinity in R_{i} of {f}")
    return Divisor.zeros(finite) + Divisor([(INF, r_inf)]) if finite.degree > 0 else Divisor([(INF, r_inf)])


def ramification_divisor(f, i):
    """R_i(f) = sum over points of a_i - a_{i-1} - 1."""
    n = f.ambient_dim
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"ramification index {i} outside 1..{n}")
    _require_nondegenerate(f)
    return _ramification(f, i)


def ramification_divisors(f):
    """[R_1, ..., R_n] of a nondegenerate curve."""
    _require_nondegenerate(f)
    return [_ramification(f, i) for i in range(1, f.ambient_dim + 1)]


def first_ramification_divisor(f):
    """R_1 of any nonconstant curve, degenerate or not (the branch divisor)."""
    if f.span_rank < 2:
        raise DegenerateCurveError("a constant curve has no branch divisor")
    return _ramification(f, 1)


def associated_curve(f, k):
    """f_k: the k-subset Wronskians in lexicographic order, normalized."""
    n = f.ambient_dim
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"associated curve index {k} outside 1..{n}")
    _require_nondegenerate(f)
    if k == 1:
        return f
    table = f.wronskians(k)
    return ProjectiveCurve([table[S] for S in combinations(range(n + 1), k)])


def dual_curve(f):
    """f_n viewed in P(V*) through the complement-with-sign convention."""
    _require_nondegenerate(f)
    n = f.ambient_dim
    if n == 0:
        raise DegenerateCurveError("a point has no dual curve")
    table = f.wronskians(n)
    coords = []
    for j in range(n + 1):
        S = tuple(i for i in range(n + 1) if i != j)
        w = table[S]
        coords.append(w if (n - j) % 2 == 0 else -w)
    return ProjectiveCurve(coords)


@dataclass
class PluckerReport:
    curve: ProjectiveCurve
    degree: int
    genus: int
    profile: RamificationProfile
    divisors: list
    lhs: int
    rhs: int
    associated_degrees: list
    predicted_degrees: list
    branch_checks: list = field(default_factory=list)

    @property
    def holds(self):
        return (
            self.lhs == self.rhs
            and self.associated_degrees == self.predicted_degrees
            and all(ok for _, ok in self.branch_checks)
        )


def plucker_report(f, genus=0):
    """Check the degree/genus/ramification identities for a nondegenerate curve.

    * (n+1) deg f + n(n+1)(genus-1) = sum_i (n+1-i) r_i
    * deg f_i = deg D_1 + ... + deg D_i with
      deg D_j = deg f + (j-1)(2 genus - 2) - (r_1 + ... + r_{j-1})
    * R_1(f_i) = R_i(f)

    Raises IdentityViolated if any of them fails.
    """
    if genus != 0:
        raise ValueError("only rational curves (genus 0) are computed")
    _require_nondegenerate(f)
    n = f.ambient_dim
    d = degree(f)
    divs = ramification_divisors(f)
    r = tuple(D.degree for D in divs)
    profile = RamificationProfile(r, genus)
    lhs = (n + 1) * d + n * (n + 1) * (genus - 1)
    rhs = sum((n + 1 - i) * r[i - 1] for i in range(1, n + 1))

    deg_D = [d + (j - 1) * (2 * genus - 2) - sum(r[: j - 1]) for j in range(1, n + 1)]
    predicted = [sum(deg_D[:i]) for i in range(1, n + 1)]
    actual = []
    checks = []
    for i in range(1, n + 1):
        fi = associated_curve(f, i)
        actual.append(fi.degree)
        if i < n and i > 1:
            if len(fi) != comb(n + 1, i):
                raise IdentityViolated("associated curve has the wrong number of coordinates")
        checks.append((f"R_1(f_{i}) = R_{i}(f)", first_ramification_divisor(fi) == divs[i - 1]))
    report = PluckerReport(f, d, genus, profile, divs, lhs, rhs, actual, predicted, checks)
    if not report.holds:
        raise IdentityViolated(f"Plücker identities fail for {f}: {report}")
    return report
