import pytest

from kleincurves import (
    INF,
    Divisor,
    FinitePoint,
    NullCurve,
    ProjectiveCurve,
    RatFunction,
    SymplecticForm,
    UniPoly,
    build_w_model,
    complete_null,
    contact_family,
    is_null_curve,
    klein_forward,
    klein_inverse,
    model_change,
    recover_beta,
)
from kleincurves.errors import (
    ConstantInputError,
    LinearCurveError,
    NotContactError,
    NotDecomposableError,
    NotNullError,
)
from kleincurves.field import I
from kleincurves.klein import STANDARD_BETA, STANDARD_GRAM, quadratic_values
from conftest import contact_goldens

z = UniPoly.z()
i = UniPoly([I])


def test_standard_w_model():
    model = build_w_model(STANDARD_BETA)
    g = model.gram
    assert g[0][4] == 1 and g[1][3] == -1 and g[2][2] == -2
    nonzero = {(r, c) for r in range(5) for c in range(5) if g[r][c]}
    assert nonzero == {(0, 4), (4, 0), (1, 3), (3, 1), (2, 2)}


def test_rational_normal_curve_image():
    f = ProjectiveCurve.monomial([0, 1, 2, 3])
    g = klein_forward(f, recover_beta(f))
    assert g.degree == 4
    assert g.curve == ProjectiveCurve([1, 2 * z, z**2, 2 * z**3, z**4])


def test_forward_requires_contact():
    f = ProjectiveCurve.monomial([0, 1, 2, 3])
    with pytest.raises(NotContactError):
        klein_forward(f, STANDARD_BETA)


def test_line_rejected():
    line = ProjectiveCurve([1, z, 0, 0])
    with pytest.raises(LinearCurveError):
        klein_forward(line, STANDARD_BETA)


@pytest.mark.parametrize("pq", [(1, 2), (1, 4), (2, 3), (3, 5), (4, 9)])
def test_family_roundtrip(pq):
    m = contact_family(*pq)
    g = klein_forward(m.curve, m.beta)
    assert g.degree == 4 + m.R1.degree + m.R2.degree
    assert klein_inverse(g) == m.curve


def test_goldens_roundtrip():
    for f in contact_goldens():
        assert klein_inverse(klein_forward(f, recover_beta(f))) == f


def test_inverse_accepts_raw_bivector_curve():
    f = ProjectiveCurve.monomial([0, 2, 3, 5])
    g = klein_forward(f, recover_beta(f))
    sixes = g.w_model.bivector(list(g.curve.coords))
    assert klein_inverse(ProjectiveCurve(sixes)) == f


def test_inverse_rejects_non_null():
    with pytest.raises(NotNullError):
        NullCurve(ProjectiveCurve([1, z, z**2, z**3, z**4]), "standardQuadric")


def test_inverse_rejects_indecomposable():
    # a curve in P^5 that is not on the Klein quadric
    bad = ProjectiveCurve([1, z, 0, 0, 0, 1])
    with pytest.raises((NotNullError, NotDecomposableError)):
        klein_inverse(bad)


def test_model_change_roundtrip_from_standard_quadric():
    # Enneper-type curve completed in the standard quadric
    gamma = [RatFunction(z - z**3 * UniPoly(["1/3"])), RatFunction(i * (z + z**3 * UniPoly(["1/3"]))), RatFunction(z**2)]
    n = complete_null(gamma)
    w = model_change(n)
    assert w.model == "W"
    back = model_change(w)
    assert back.model == "standardQuadric"
    assert back.curve == n.curve
    f = klein_inverse(n)
    g = klein_forward(f, recover_beta(f))
    assert g.degree == n.degree


def test_model_change_for_other_beta():
    m = contact_family(2, 3)
    g = klein_forward(m.curve, m.beta)
    s = model_change(g)
    assert is_null_curve(s.curve, STANDARD_GRAM)
    assert s.degree == g.degree


def test_complete_null_simple_poles():
    # one simple pole at 0: degree 2
    n = complete_null([RatFunction(1, z), RatFunction(i, z), RatFunction(0)])
    assert n.curve == ProjectiveCurve([z, 1, I, 0, 0])
    for val in quadratic_values(n.curve.coords, STANDARD_GRAM):
        assert not val


def test_complete_null_rejects_constant_and_non_null():
    with pytest.raises(ConstantInputError):
        complete_null([RatFunction(1), RatFunction(2), RatFunction(3)])
    with pytest.raises(NotNullError):
        complete_null([RatFunction(z), RatFunction(z), RatFunction(z)])


def test_branched_example_image():
    f = contact_goldens()[-1]
    g = klein_forward(f, recover_beta(f))
    assert g.degree == 7
    R = g.curve
    from kleincurves import first_ramification_divisor
    assert first_ramification_divisor(R) == Divisor([(FinitePoint(0), 1), (INF, 1)])
