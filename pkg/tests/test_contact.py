import pytest
import sympy

from kleincurves import (
    ProjectiveCurve,
    SymplecticForm,
    UniPoly,
    contact_family,
    contact_ramification_report,
    is_contact,
    recover_beta,
)
from kleincurves.contact import bivector_matrix, contact_defect, pair, wedge_pairing
from kleincurves.errors import (
    BadParametersError,
    DegenerateCurveError,
    DegenerateFormError,
    NotContactError,
)
from conftest import contact_goldens

z = UniPoly.z()


def test_canonical_scale():
    a = SymplecticForm([0, 0, 2, -6, 0, 0])
    b = SymplecticForm([0, 0, -1, 3, 0, 0])
    assert a == b
    assert str(a) == "xi03 - 3*xi12"
    assert a.entries[2] == 1


def test_degenerate_form_rejected():
    with pytest.raises(DegenerateFormError):
        SymplecticForm([1, 0, 0, 0, 0, 0])
    with pytest.raises(DegenerateFormError):
        SymplecticForm([0] * 6)


def test_pfaffian_squares_to_determinant():
    entries = [1, 2, -1, 3, 5, 7]
    beta = SymplecticForm(entries)
    M = sympy.Matrix([[int(x.re) for x in row] for row in bivector_matrix(beta.entries)])
    assert M.det() == sympy.Rational(str(beta.pfaffian.re)) ** 2


def test_wedge_pairing_is_symmetric_and_detects_decomposable():
    u = [1, 0, 0, 0, 0, 0]       # v0^v1
    w = [0, 0, 0, 0, 0, 1]       # v2^v3
    assert wedge_pairing(u, w) == wedge_pairing(w, u) == 1
    assert wedge_pairing(u, u) == 0
    s = [1, 0, 0, 0, 0, 1]       # v0^v1 + v2^v3 is not decomposable
    assert wedge_pairing(s, s) == 2


def test_beta_evaluation():
    beta = SymplecticForm([0, 0, 1, 1, 0, 0])
    e = [[1 if i == k else 0 for i in range(4)] for k in range(4)]
    assert beta(e[0], e[3]) == 1 and beta(e[3], e[0]) == -1
    assert beta(e[1], e[2]) == 1 and beta(e[0], e[1]) == 0
    assert pair(beta, [0, 0, 5, 7, 0, 0]) == 12


@pytest.mark.parametrize("exps,expected", [
    ([0, 1, 2, 3], "xi03 - 3*xi12"),
    ([0, 1, 3, 4], "xi03 - 2*xi12"),
    ([0, 2, 3, 5], "xi03 - 5*xi12"),
])
def test_recover_beta_goldens(exps, expected):
    f = ProjectiveCurve.monomial(exps)
    beta = recover_beta(f)
    assert str(beta) == expected
    assert is_contact(f, beta)
    assert not contact_defect(f, beta)


def test_not_contact():
    with pytest.raises(NotContactError):
        recover_beta(ProjectiveCurve.monomial([0, 1, 2, 4]))


def test_planar_curve_rejected():
    with pytest.raises(DegenerateCurveError):
        recover_beta(ProjectiveCurve([1, z, z**2, 1 + z]))


def test_contactness_survives_symplectic_change_of_coordinates():
    f = ProjectiveCurve.monomial([0, 1, 2, 3])
    A = [[1, 0, 0, 2], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    g = f.transform(A)
    beta = recover_beta(g)
    assert is_contact(g, beta)


@pytest.mark.parametrize("p,q", [(0, 1), (2, 2), (2, 4), (3, 2), (-1, 2)])
def test_family_rejects_bad_parameters(p, q):
    with pytest.raises(BadParametersError):
        contact_family(p, q)


def test_family_member():
    m = contact_family(2, 5)
    assert m.curve == ProjectiveCurve.monomial([0, 2, 5, 7])
    assert str(m.beta) == "xi03 - 7/3*xi12"
    assert [str(x) for x in m.beta_entries] == ["0", "0", "-3", "7", "0", "0"]
    assert m.R1.degree == 2 and m.R2.degree == 4


def test_report_on_goldens():
    for f in contact_goldens():
        rep = contact_ramification_report(f)
        assert rep.holds
        assert rep.null_degree == 4 + rep.r1 + rep.r2


def test_report_rejects_wrong_beta():
    f = ProjectiveCurve.monomial([0, 1, 2, 3])
    with pytest.raises(NotContactError):
        contact_ramification_report(f, SymplecticForm([0, 0, 1, 1, 0, 0]))
