import random
from math import gcd

import pytest
import sympy

from kleincurves import ProjectiveCurve, UniPoly, contact_family, is_nondegenerate

Z = sympy.Symbol("z")


def to_sympy(p):
    """UniPoly -> sympy polynomial expression in z (coefficients in Q(i))."""
    out = 0
    for k, c in enumerate(p.coeffs):
        out += (sympy.Rational(str(c.re)) + sympy.I * sympy.Rational(str(c.im))) * Z**k
    return sympy.expand(out)


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), Z)
    coeffs = poly.all_coeffs()[::-1]
    return UniPoly([_field_str(c) for c in coeffs])


def _field_str(c):
    re, im = sympy.re(c), sympy.im(c)
    if im == 0:
        return str(re)
    return f"{re}+{im}*i" if im > 0 else f"{re}{im}*i"


def random_curve(rng, n, d):
    """A nondegenerate curve in P^n of degree at most d.

    Half the draws are dense random coefficient vectors; the rest mix shifted
    monomials, which produces ramified curves far more often.
    """
    while True:
        if rng.random() < 0.5:
            coords = [
                UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, d + 1))])
                for _ in range(n + 1)
            ]
        else:
            exps = sorted(rng.sample(range(d + 1), n + 1))
            exps[-1] = d
            A = [[rng.randint(-2, 2) for _ in range(n + 1)] for _ in range(n + 1)]
            shift = UniPoly([rng.randint(-2, 2), 1])
            mons = [UniPoly.monomial(e).compose(shift) for e in exps]
            coords = [sum((m * x for m, x in zip(mons, row)), UniPoly()) for row in A]
        if not any(coords):
            continue
        f = ProjectiveCurve(coords)
        if f.ambient_dim == n and is_nondegenerate(f):
            return f


@pytest.fixture(scope="session")
def corpus():
    rng = random.Random(1)
    out = []
    for k in range(110):
        n = 3 + k % 2
        out.append(random_curve(rng, n, rng.randint(n, 8)))
    return out


def family_members(qmax=9):
    return [
        contact_family(p, q)
        for q in range(2, qmax + 1)
        for p in range(1, q)
        if gcd(p, q) == 1
    ]


def contact_goldens():
    z = UniPoly.z()
    return [
        ProjectiveCurve.monomial([0, 1, 2, 3]),
        ProjectiveCurve.monomial([0, 1, 3, 4]),
        ProjectiveCurve.monomial([0, 2, 3, 5]),
        ProjectiveCurve([1 - 5 * z**2, z - 3 * z**2, z**4 - 3 * z**3, z**5 - 5 * z**3]),
    ]


@pytest.fixture(scope="session")
def contact_corpus():
    return [m.curve for m in family_members()] + contact_goldens()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])
