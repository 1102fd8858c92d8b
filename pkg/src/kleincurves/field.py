"""Exact arithmetic in the Gaussian rationals Q(i).

Elements are pairs of gmpy2 rationals.  Rationals are the elements whose
imaginary part is zero, so every other module can treat the coefficient
field uniformly.
"""
import re
from numbers import Rational

from gmpy2 import mpq

__all__ = ["GaussianRational", "QI", "I", "ZERO", "ONE", "parse_field"]


def _q(x):
    if isinstance(x, (int, Rational)) or type(x).__name__ in ("mpq", "mpz"):
        return mpq(x)
    if isinstance(x, str):
        return mpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class GaussianRational:
    """An element ``re + im*i`` of Q(i), immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- coercion ---------------------------------------------------------
    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        if isinstance(x, str):
            return parse_field(x)
        return cls._raw(_q(x), mpq(0))

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self):
        return not self.im

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, b)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im)

    def norm(self):
        """The field norm re^2 + im^2, a rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        if not self.im:
            return GaussianRational._raw(1 / self.re, self.im)
        n = self.norm()
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.im and not self.im:
            return GaussianRational._raw(self.re / other.re, self.im)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- serialization ----------------------------------------------------
    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        mag = "i" if abs(self.im) == 1 else f"{abs(self.im)}*i"
        if not self.re:
            return mag if sign == "+" else f"-{mag}"
        return f"{self.re}{sign}{mag}"

    def __repr__(self):
        return f"GaussianRational('{self}')"


QI = GaussianRational
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_RAT = r"\d+(?:/\d+)?"
_COMPLEX_RE = re.compile(rf"^(?P<re>[+-]?{_RAT})(?P<sign>[+-])(?P<im>{_RAT})?$")
_IMAG_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_RAT})?$")
_REAL_RE = re.compile(rf"^[+-]?{_RAT}$")


def _rat(t):
    return mpq(t[1:] if t.startswith("+") else t)


def parse_field(text):
    """Parse ``"a/b"``, ``"a/b+c/d*i"``, ``"c/d*i"`` or ``"-i"`` into a field element.

    Raises ValueError on anything else, including zero denominators.
    """
    s = text.replace(" ", "")
    try:
        if not s.endswith("i"):
            if not _REAL_RE.match(s):
                raise ValueError
            return GaussianRational(_rat(s))
        body = s[:-1]
        if body.endswith("*"):
            body = body[:-1]
            if not body or body[-1] in "+-":
                raise ValueError
        m = _COMPLEX_RE.match(body)
        if m:
            im = mpq(m.group("im") or 1)
            return GaussianRational(_rat(m.group("re")), -im if m.group("sign") == "-" else im)
        m = _IMAG_RE.match(body)
        if m:
            im = mpq(m.group("im") or 1)
            return GaussianRational(0, -im if m.group("sign") == "-" else im)
        raise ValueError
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed field element {text!r}") from None
