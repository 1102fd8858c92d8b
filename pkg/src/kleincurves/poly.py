"""Dense univariate polynomials and rational functions over Q(i).

Polynomials live in the affine coordinate ``z`` of the Riemann sphere.
Coefficients are stored in ascending order with no trailing zeros, so the
zero polynomial is the empty tuple.  Its degree is ``NEG_INF``, a sentinel
that compares below every integer but refuses arithmetic.
"""
from functools import total_ordering

from .errors import ZeroInputError
from .field import ONE, ZERO, GaussianRational

__all__ = [
    "NEG_INF",
    "UniPoly",
    "RatFunction",
    "poly_gcd",
    "gcd_list",
    "poly_lcm",
    "squarefree_decomposition",
    "squarefree_part",
    "coprime_squarefree_basis",
]

_coerce = GaussianRational.coerce


@total_ordering
class _NegInf:
    """Degree of the zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("NEG_INF")

    def __repr__(self):
        return "NEG_INF"

    def _no_arith(self, *_):
        raise TypeError("the degree of the zero polynomial does not support arithmetic")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _no_arith
    __neg__ = __index__ = __int__ = _no_arith


NEG_INF = _NegInf()


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _from_clean(cls, cs):
        # caller guarantees field elements and no trailing zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def _from_list(cls, cs):
        while cs and not cs[-1]:
            cs.pop()
        return cls._from_clean(cs)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def z(cls):
        return cls._from_clean((ZERO, ONE))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, x):
        if isinstance(x, UniPoly):
            return x
        return cls((x,))

    # -- basic data -------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroInputError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __len__(self):
        return len(self.coeffs)

    def order_at_zero(self):
        """Largest m with z^m dividing self."""
        if not self.coeffs:
            raise ZeroInputError("order of vanishing of the zero polynomial")
        for k, c in enumerate(self.coeffs):
            if c:
                return k

    def is_real(self):
        return all(not c.im for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly.coerce(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return (len(self.coeffs), tuple(c.sort_key() for c in reversed(self.coeffs)))

    # -- ring operations --------------------------------------------------
    def __neg__(self):
        return UniPoly._from_clean([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            try:
                other = UniPoly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly._from_list(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            try:
                other = UniPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            try:
                c = _coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._from_clean(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly._from_list(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return UniPoly._from_clean(())
        return UniPoly._from_clean([x * c for x in self.coeffs])

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = UniPoly._from_clean((ONE,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = UniPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lc = other.coeffs[-1].inverse()
        if len(rem) - 1 < db:
            return UniPoly._from_clean(()), self
        quo = [ZERO] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv_lc
            quo[k - db] = q
            for j in range(db + 1):
                if b[j]:
                    rem[k - db + j] = rem[k - db + j] - q * b[j]
        return UniPoly._from_list(quo), UniPoly._from_list(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        return not (UniPoly.coerce(other) % self)

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            return RatFunction(self, other)
        return self.scale(_coerce(other).inverse())

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == ONE:
            return self
        return self.scale(lc.inverse())

    # -- calculus and evaluation -----------------------------------------
    def derivative(self, k=1):
        cs = self.coeffs
        for _ in range(k):
            cs = [c * j for j, c in enumerate(cs) if j > 0]
        return UniPoly._from_list(list(cs))

    def __call__(self, x):
        x = _coerce(x) if not isinstance(x, UniPoly) else x
        acc = ZERO if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """self(other(z))."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly._from_clean((c,)) if c else acc * other
        return acc

    def reversed(self, d=None):
        """z^d * self(1/z); d defaults to the degree."""
        if d is None:
            d = self.degree if self else 0
        if self and d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [ZERO] * (d + 1 - len(self.coeffs))
        return UniPoly._from_list(cs[::-1])

    def conjugate(self):
        return UniPoly._from_clean([c.conjugate() for c in self.coeffs])

    # -- printing ---------------------------------------------------------
    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if c.im:
                cstr = f"({c})"
            else:
                cstr = str(c)
            if mono and c == ONE:
                terms.append(mono)
            elif mono and c == -ONE:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{cstr}*{mono}")
            else:
                terms.append(cstr)
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"UniPoly({self})"


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = UniPoly.coerce(a).monic(), UniPoly.coerce(b).monic()
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return UniPoly._from_clean((ONE,))
        a, b = b, (a % b).monic()
    return a


def gcd_list(polys):
    polys = sorted((p for p in polys if p), key=len)
    g = UniPoly()
    for p in polys:
        g = poly_gcd(g, p)
        if len(g) == 1:
            break
    return g


def poly_lcm(a, b):
    if not a or not b:
        return UniPoly()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def squarefree_decomposition(p):
    """Yun's algorithm: monic pairwise-coprime squarefree s_j with p = lc * prod s_j^j.

    Returns a list of ``(s_j, j)`` with deg s_j >= 1.
    """
    p = UniPoly.coerce(p)
    if not p:
        raise ZeroInputError("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    j = 1
    while b.degree > 0:
        s = poly_gcd(b, d)
        if s.degree > 0:
            out.append((s, j))
        b = b.exact_div(s)
        c = d.exact_div(s)
        d = c - b.derivative()
        j += 1
    return out


def squarefree_part(p):
    out = UniPoly.constant(1)
    for s, _ in squarefree_decomposition(p):
        out = out * s
    return out


def _refine(basis, a):
    out = []
    for b in basis:
        if a.degree <= 0:
            out.append(b)
            continue
        g = poly_gcd(a, b)
        if g.degree <= 0:
            out.append(b)
            continue
        out.append(g)
        rest = b.exact_div(g)
        if rest.degree > 0:
            out.append(rest.monic())
        a = a.exact_div(g).monic()
    if a.degree > 0:
        out.append(a)
    return out


def coprime_squarefree_basis(polys):
    """Pairwise coprime monic squarefree polynomials refining every input.

    Each input's squarefree factors (in the sense of Yun) are products of
    basis elements, so valuations of the inputs are constant across the
    roots of any basis element.
    """
    basis = []
    for p in polys:
        p = UniPoly.coerce(p)
        if not p:
            raise ZeroInputError("coprime basis of a list containing zero")
        for s, _ in squarefree_decomposition(p):
            basis = _refine(basis, s)
    return sorted(basis, key=UniPoly.sort_key)


class RatFunction:
    """A quotient num/den with coprime terms and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = UniPoly.coerce(num), UniPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = UniPoly.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            num, den = num.scale(lc.inverse()), den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunction is immutable")

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunction):
            return x
        return cls(UniPoly.coerce(x))

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, other):
        try:
            other = RatFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunction(-self.num, self.den)

    def __add__(self, other):
        other = RatFunction.coerce(other)
        return RatFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RatFunction.coerce(other))

    def __rsub__(self, other):
        return RatFunction.coerce(other) - self

    def __mul__(self, other):
        other = RatFunction.coerce(other)
        return RatFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunction.coerce(other)
        if not other:
            raise ZeroDivisionError("rational function division by zero")
        return RatFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunction.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunction(self.den ** (-n), self.num ** (-n))
        return RatFunction(self.num**n, self.den**n)

    def derivative(self):
        n, d = self.num, self.den
        return RatFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunction({self})"
