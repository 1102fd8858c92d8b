import pytest
import sympy

from kleincurves import MultiPoly

a, b, p = MultiPoly.var("a"), MultiPoly.var("b"), MultiPoly.var("p")


def _sym(m):
    return sympy.expand(sympy.sympify(str(m).replace("^", "**")))


def test_arithmetic_matches_sympy():
    x = (a + 2 * b - 1) ** 3 * (p - a)
    sa, sb, sp = sympy.symbols("a b p")
    assert _sym(x) == sympy.expand((sa + 2 * sb - 1) ** 3 * (sp - sa))


def test_exact_division():
    x = (a * b + p) * (a - 3)
    assert x.exact_div(a - 3) == a * b + p
    with pytest.raises(ArithmeticError):
        (a + 1).exact_div(b)


def test_substitution():
    x = a**2 * b + p
    assert x.subs({"a": 2}) == 4 * b + p
    assert x.subs({"a": b}) == b**3 + p
    # a -> 1/b, cleared by b^2
    cleared, exps = x.subs_cleared({"a": (MultiPoly.const(1), b)})
    assert exps["a"] == 2
    assert cleared == b + p * b**2


def test_queries():
    x = 3 * a**2 * b
    assert x.is_monomial()
    assert not (a + b).is_monomial()
    assert x.degree_in("a") == 2
    assert set(x.variables()) == {"a", "b"}
    assert (a**2 + 1).to_unipoly("a").degree == 2
