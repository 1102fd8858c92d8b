"""Sparse multivariate polynomials over Q in named parameters.

Used for the symbolic constants of the low-degree classification.  A
monomial is a tuple of ``(name, exponent)`` pairs sorted by name with
positive exponents; a polynomial maps monomials to nonzero rationals.
"""
from gmpy2 import mpq

from .poly import UniPoly

__all__ = ["MultiPoly", "fraction_free_det", "cofactor_det"]


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a, b):
    """a / b as a monomial, or None if b does not divide a."""
    d = dict(a)
    for v, e in b:
        r = d.get(v, 0) - e
        if r < 0:
            return None
        if r:
            d[v] = r
        else:
            d.pop(v, None)
    return tuple(sorted(d.items()))


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = mpq(c)
            if c:
                mono = tuple(sorted((v, e) for v, e in mono if e))
                clean[mono] = clean.get(mono, mpq(0)) + c
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def var(cls, name):
        return cls._raw({((name, 1),): mpq(1)})

    @classmethod
    def const(cls, c):
        c = mpq(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, MultiPoly):
            return x
        return cls.const(x)

    # -- inspection ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), mpq(0))

    def is_monomial(self):
        return len(self.terms) == 1

    def variables(self):
        return sorted({v for mono in self.terms for v, _ in mono})

    def degree_in(self, name):
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def total_degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __eq__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- ring operations ------------------------------------------------------
    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = MultiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _leading(self, order):
        def key(m):
            d = dict(m)
            return tuple(d.get(v, 0) for v in order)

        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def exact_div(self, other):
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        other = MultiPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("multivariate division by zero")
        if other.is_constant():
            inv = 1 / other.constant_value()
            return MultiPoly._raw({m: c * inv for m, c in self.terms.items()})
        order = sorted(set(self.variables()) | set(other.variables()))
        lm_d, lc_d = other._leading(order)
        rem, quo = self, {}
        while rem:
            lm_r, lc_r = rem._leading(order)
            mono = _mono_div(lm_r, lm_d)
            if mono is None:
                raise ArithmeticError(f"{other} does not divide {self}")
            c = lc_r / lc_d
            quo[mono] = quo.get(mono, 0) + c
            rem = rem - MultiPoly._raw({mono: c}) * other
        return MultiPoly(quo)

    # -- substitution -------------------------------------------------------
    def subs(self, values):
        """Substitute numbers or MultiPolys for some variables."""
        out = MultiPoly()
        for mono, c in self.terms.items():
            term = MultiPoly.const(c)
            keep = []
            for v, e in mono:
                if v in values:
                    term = term * MultiPoly.coerce(values[v]) ** e
                else:
                    keep.append((v, e))
            out = out + term * MultiPoly._raw({tuple(keep): mpq(1)})
        return out

    def subs_cleared(self, fractions):
        """Substitute v -> num/den and clear denominators.

        ``fractions`` maps names to ``(num, den)`` MultiPoly pairs.  Returns
        ``(P, exps)`` where P = self(num/den) * prod den**exps[v] is a
        polynomial and exps[v] is the degree of self in v.
        """
        exps = {v: self.degree_in(v) for v in fractions}
        out = MultiPoly()
        for mono, c in self.terms.items():
            d = dict(mono)
            term = MultiPoly.const(c)
            keep = []
            for v, e in mono:
                if v not in fractions:
                    keep.append((v, e))
            term = term * MultiPoly._raw({tuple(keep): mpq(1)})
            for v, (num, den) in fractions.items():
                e = d.get(v, 0)
                term = term * MultiPoly.coerce(num) ** e * MultiPoly.coerce(den) ** (exps[v] - e)
            out = out + term
        return out, exps

    def to_unipoly(self, name):
        """View a polynomial in at most one variable as a UniPoly in that variable."""
        extra = set(self.variables()) - {name}
        if extra:
            raise ValueError(f"{self} involves variables other than {name}: {sorted(extra)}")
        cs = [0] * (self.degree_in(name) + 1)
        for mono, c in self.terms.items():
            cs[dict(mono).get(name, 0)] = c
        return UniPoly(cs)

    # -- printing -------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        order = self.variables()

        def key(m):
            d = dict(m)
            return tuple(-d.get(v, 0) for v in order)

        parts = []
        for mono in sorted(self.terms, key=key):
            c = self.terms[mono]
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


def fraction_free_det(M):
    """Bareiss fraction-free determinant of a square matrix of MultiPolys.

    Every intermediate entry is a minor of M, so each update divides
    exactly by the previous pivot.
    """
    A = [[MultiPoly.coerce(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return MultiPoly.const(1)
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if A[i][k]]
        if not candidates:
            return MultiPoly()
        piv = min(candidates, key=lambda i: (len(A[i][k].terms), i))
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        pk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = A[i][j] * pk - aik * A[k][j]
                A[i][j] = num.exact_div(prev)
            A[i][k] = MultiPoly()
        prev = pk
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


def cofactor_det(M):
    """Laplace expansion along the first row; an independent check for small matrices."""
    A = [[MultiPoly.coerce(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return MultiPoly.const(1)
    if n == 1:
        return A[0][0]
    total = MultiPoly()
    for j in range(n):
        if not A[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
