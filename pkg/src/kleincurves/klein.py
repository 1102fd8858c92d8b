"""The Klein correspondence between contact curves in P^3 and null curves in Q^3.

For a symplectic form beta, W = beta^perp is the 5-space of bivectors
annihilated by beta.  Its inner product is <u, w> = Omega(u^w) with
Omega = beta^2/2 = Pf(beta) xi0^xi1^xi2^xi3, i.e. <u, w> = Pf(beta) lambda(u, w).

Two quadric models are supported: the W-model of a given beta, and the
standard quadric X0 X4 - X1^2 - X2^2 - X3^2 with its polarization as Gram
matrix.  ``model_change`` moves between them over Q(i).
"""
from dataclasses import dataclass
from itertools import combinations

from .contact import (
    PAIRS,
    SymplecticForm,
    bivector_matrix,
    contact_defect,
    wedge_pairing,
)
from .curves import ProjectiveCurve, associated_curve, is_nondegenerate
from .errors import (
    ConstantInputError,
    DegenerateCurveError,
    DegenerateFormError,
    IdentityViolated,
    LinearCurveError,
    NotContactError,
    NotDecomposableError,
    NotNullError,
)
from .field import I, ONE, ZERO, GaussianRational
from .linalg import field_det, kernel_basis, primitive, ring_det, solve_left_inverse
from .poly import RatFunction, UniPoly, poly_lcm

__all__ = [
    "WModel",
    "build_w_model",
    "STANDARD_BETA",
    "STANDARD_GRAM",
    "NullCurve",
    "quadratic_values",
    "is_null_curve",
    "klein_forward",
    "klein_inverse",
    "complete_null",
    "model_change",
    "MODEL_CHANGE_T",
    "darboux_basis",
]

_HALF = GaussianRational.coerce("1/2")


@dataclass(frozen=True)
class WModel:
    beta: SymplecticForm
    basis: tuple
    gram: tuple

    def bivector(self, coords):
        """sum_k coords[k] * basis[k] as six lex coordinates."""
        out = []
        for j in range(6):
            acc = None
            for x, b in zip(coords, self.basis):
                if b[j] and x:
                    term = x * b[j]
                    acc = term if acc is None else acc + term
            out.append(acc if acc is not None else coords[0] * 0)
        return out


def build_w_model(beta):
    """Basis of beta^perp (primitive vectors, free-column order) and its Gram matrix."""
    if not isinstance(beta, SymplecticForm):
        beta = SymplecticForm(beta)
    if not beta.pfaffian:
        raise DegenerateFormError("beta is degenerate")
    basis = tuple(tuple(primitive(v)) for v in kernel_basis([list(beta.entries)]))
    if len(basis) != 5:
        raise IdentityViolated("beta^perp must be 5-dimensional")
    pf = beta.pfaffian
    gram = tuple(tuple(pf * wedge_pairing(u, w) for w in basis) for u in basis)
    if not field_det([list(r) for r in gram]):
        raise IdentityViolated("the inner product on beta^perp is degenerate")
    return WModel(beta, basis, gram)


STANDARD_BETA = SymplecticForm([0, 0, 1, 1, 0, 0])
STANDARD_GRAM = tuple(
    tuple(
        _HALF if {i, j} == {0, 4} else -ONE if i == j and 1 <= i <= 3 else ZERO
        for j in range(5)
    )
    for i in range(5)
)

# X = T y from W-coordinates of the standard beta to the standard quadric;
# the forms satisfy q_W = 2 q_X o T.
MODEL_CHANGE_T = (
    (ONE, ZERO, ZERO, ZERO, ZERO),
    (ZERO, _HALF, ZERO, _HALF, ZERO),
    (ZERO, -I * _HALF, ZERO, I * _HALF, ZERO),
    (ZERO, ZERO, ONE, ZERO, ZERO),
    (ZERO, ZERO, ZERO, ZERO, ONE),
)


def _bilinear(gram, x, y):
    acc = None
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            g = gram[i][j]
            if g and yj:
                term = (xi * yj) * g
                acc = term if acc is None else acc + term
    return acc if acc is not None else UniPoly()


def quadratic_values(coords, gram):
    """(<G,G>, <G,G'>, <G',G'>) as polynomials."""
    G = [UniPoly.coerce(c) for c in coords]
    dG = [c.derivative() for c in G]
    return _bilinear(gram, G, G), _bilinear(gram, G, dG), _bilinear(gram, dG, dG)


def is_null_curve(g, gram):
    """True iff <G,G> and <G',G'> vanish; <G,G'> is then checked as well."""
    coords = g.coords if isinstance(g, ProjectiveCurve) else g
    gg, gdg, dgdg = quadratic_values(coords, gram)
    if gg or dgdg:
        return False
    if gdg:
        raise IdentityViolated("<G,G'> is nonzero although <G,G> vanishes")
    return True


@dataclass(frozen=True)
class NullCurve:
    """A null curve in P^4 together with the quadric model its coordinates refer to."""

    curve: ProjectiveCurve
    model: str
    w_model: WModel = None

    def __post_init__(self):
        if self.model not in ("W", "standardQuadric"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.model == "W" and self.w_model is None:
            raise ValueError("a W-model null curve needs its WModel")
        if not is_null_curve(self.curve, self.gram):
            raise NotNullError(f"{self.curve} is not null in the {self.model} model")

    @property
    def gram(self):
        return self.w_model.gram if self.model == "W" else STANDARD_GRAM

    @property
    def degree(self):
        return self.curve.degree


def _assert_null(curve, gram):
    gg, gdg, dgdg = quadratic_values(curve.coords, gram)
    for name, val in (("<G,G>", gg), ("<G,G'>", gdg), ("<G',G'>", dgdg)):
        if val:
            raise IdentityViolated(f"{name} = {val} on {curve}")


def klein_forward(f, beta, w_model=None):
    """The null curve f_2, written in the basis of beta^perp."""
    if f.ambient_dim != 3:
        raise ValueError("the Klein correspondence starts from a curve in P^3")
    if f.span_rank <= 2:
        raise LinearCurveError(f"{f} is a line")
    if not is_nondegenerate(f):
        raise DegenerateCurveError(f"{f} lies in a plane")
    if contact_defect(f, beta):
        raise NotContactError(f"{f} is not contact for {beta}")
    model = w_model or build_w_model(beta)
    G = associated_curve(f, 2).coords
    B = [[model.basis[k][j] for k in range(5)] for j in range(6)]
    L = solve_left_inverse(B)
    x = [_combine(row, G) for row in L]
    if model.bivector(x) != list(G):
        raise IdentityViolated("f_2 does not lie in beta^perp")
    g = ProjectiveCurve(x)
    _assert_null(g, model.gram)
    if not is_nondegenerate(g):
        raise IdentityViolated(f"the Klein image {g} is degenerate in P^4")
    return NullCurve(g, "W", model)


def _combine(row, polys):
    acc = UniPoly()
    for c, p in zip(row, polys):
        if c and p:
            acc = acc + p.scale(c)
    return acc


def _wedge_nonzero(u, v):
    return any(u[i] * v[j] - u[j] * v[i] for i, j in PAIRS)


def _support_columns(A):
    """Two columns of an antisymmetric polynomial matrix of rank 2 with nonzero wedge."""
    cols = [[A[r][c] for r in range(4)] for c in range(4)]
    for a, b in combinations(range(4), 2):
        if _wedge_nonzero(cols[a], cols[b]):
            return cols[a], cols[b]
    raise LinearCurveError("a bivector coordinate vanishes identically")


def _bivector_coords(g):
    if isinstance(g, NullCurve):
        if g.model == "standardQuadric":
            g = model_change(g)
        return g.w_model.bivector(list(g.curve.coords))
    if isinstance(g, ProjectiveCurve) and g.ambient_dim == 5:
        return list(g.coords)
    raise TypeError("klein_inverse needs a NullCurve or a bivector curve in P^5")


def klein_inverse(g):
    """The contact curve F with F^F' proportional to G.

    G = F^F' and G' = F^F'' span planes whose intersection is the line of F.
    Each plane is read off as the column space of the antisymmetric matrix
    of the bivector, and the intersection comes from the cofactors of the
    4x4 matrix [u1 u2 v1 v2].
    """
    if isinstance(g, NullCurve) and not is_null_curve(g.curve, g.gram):
        raise NotNullError(f"{g.curve} is not null")
    G = _bivector_coords(g)
    if wedge_pairing(G, G):
        raise NotDecomposableError("G^G is not zero, so G is not a line of P^3")
    dG = [c.derivative() for c in G]
    if not any(dG):
        raise LinearCurveError("the curve is constant")
    if wedge_pairing(dG, dG) or wedge_pairing(G, dG):
        raise NotNullError("the tangent lines are not isotropic")
    zero = UniPoly()
    u1, u2 = _support_columns(bivector_matrix(G, zero))
    v1, v2 = _support_columns(bivector_matrix(dG, zero))
    M = [[u1[r], u2[r], v1[r], v2[r]] for r in range(4)]
    kernel = None
    for j in range(4):
        # column j of the adjugate: cofactors of the entries in row j
        minors = []
        for i in range(4):
            sub = [[M[r][c] for c in range(4) if c != i] for r in range(4) if r != j]
            m = ring_det(sub, zero)
            minors.append(m if (i + j) % 2 == 0 else -m)
        if any(minors[:2]):
            kernel = minors
            break
    if kernel is None:
        raise LinearCurveError("the osculating planes coincide: g is a line")
    alpha, beta_ = kernel[0], kernel[1]
    F = [alpha * u1[r] + beta_ * u2[r] for r in range(4)]
    if not any(F):
        raise LinearCurveError("the tangent lines have no common moving point")
    f = ProjectiveCurve(F)
    if f.span_rank <= 2:
        raise LinearCurveError("g is a line of the quadric")
    if associated_curve(f, 2) != ProjectiveCurve(G):
        raise IdentityViolated("f_2 of the recovered curve differs from g")
    return f


def complete_null(gamma):
    """[B^2, A1 B, A2 B, A3 B, A1^2 + A2^2 + A3^2] for gamma = A/B with dgamma.dgamma = 0."""
    gamma = [RatFunction.coerce(c) for c in gamma]
    if len(gamma) != 3:
        raise ValueError("gamma has three components")
    if all(c.is_constant() for c in gamma):
        raise ConstantInputError("gamma is constant")
    d = [c.derivative() for c in gamma]
    if d[0] * d[0] + d[1] * d[1] + d[2] * d[2]:
        raise NotNullError("dgamma . dgamma does not vanish")
    B = UniPoly.constant(1)
    for c in gamma:
        B = poly_lcm(B, c.den)
    A = [c.num * B.exact_div(c.den) for c in gamma]
    curve = ProjectiveCurve([B * B] + [a * B for a in A] + [A[0] * A[0] + A[1] * A[1] + A[2] * A[2]])
    _assert_null(curve, STANDARD_GRAM)
    return NullCurve(curve, "standardQuadric")


def darboux_basis(beta):
    """Columns e0..e3 with beta(e0,e3) = beta(e1,e2) = 1 and all other pairings 0."""
    std = [[ONE if i == k else ZERO for i in range(4)] for k in range(4)]
    e0 = std[0]
    e3 = next(v for v in std if beta(e0, v))
    s = beta(e0, e3).inverse()
    e3 = [x * s for x in e3]

    def project(x):
        a, b = beta(x, e3), beta(x, e0)
        return [xi - a * p + b * q for xi, p, q in zip(x, e0, e3)]

    rest = [project(v) for v in std]
    e1 = next(v for v in rest if any(v))
    e2 = next(v for v in rest if beta(e1, v))
    s = beta(e1, e2).inverse()
    e2 = [x * s for x in e2]
    A = [[e[r] for e in (e0, e1, e2, e3)] for r in range(4)]
    return A


def _apply_rows(T, x):
    return [_combine(row, x) for row in T]


def _invert(M):
    n = len(M)
    aug = [list(M[r]) + [ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    from .linalg import rref

    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise IdentityViolated("singular change of basis")
    return [row[n:] for row in R]


def model_change(g):
    """Move a null curve between its W-model and the standard quadric.

    W-model curves go to the standard quadric; standard-quadric curves go to
    the W-model of the standard beta xi03 + xi12.  For another beta, a Darboux
    basis A with A*beta = xi03 + xi12 first carries beta^perp to the
    standard W-model.
    """
    if g.model == "standardQuadric":
        Tinv = _invert([list(r) for r in MODEL_CHANGE_T])
        y = _apply_rows(Tinv, list(g.curve.coords))
        out = NullCurve(ProjectiveCurve(y), "W", _STANDARD_MODEL)
        return out
    model = g.w_model
    coords = list(g.curve.coords)
    if model.beta != STANDARD_BETA:
        A = darboux_basis(model.beta)
        Ainv = _invert(A)
        zero = UniPoly()
        X = bivector_matrix(model.bivector(coords), zero)
        # X' = A^-1 X A^-T
        Y = [[_combine(Ainv[r], [X[k][c] for k in range(4)]) for c in range(4)] for r in range(4)]
        Xp = [[_combine(Ainv[c], Y[r]) for c in range(4)] for r in range(4)]
        biv = [Xp[i][j] for i, j in PAIRS]
        L = solve_left_inverse([[_STANDARD_MODEL.basis[k][j] for k in range(5)] for j in range(6)])
        coords = [_combine(row, biv) for row in L]
        if _STANDARD_MODEL.bivector(coords) != biv:
            raise IdentityViolated("Darboux transport left beta^perp")
    X = _apply_rows(MODEL_CHANGE_T, coords)
    return NullCurve(ProjectiveCurve(X), "standardQuadric")


_STANDARD_MODEL = build_w_model(STANDARD_BETA)


def _check_model_change():
    q_w = _STANDARD_MODEL.gram
    T = MODEL_CHANGE_T
    for i in range(5):
        for j in range(5):
            pulled = sum(
                (T[a][i] * STANDARD_GRAM[a][b] * T[b][j] for a in range(5) for b in range(5)),
                ZERO,
            )
            if q_w[i][j] != pulled * 2:
                raise IdentityViolated("model change map does not carry q_W to 2 q_X")


_check_model_change()
