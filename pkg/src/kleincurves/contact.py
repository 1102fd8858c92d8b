"""Contact curves in P^3 with respect to a symplectic form.

Bivectors and 2-forms on the 4-space V are stored as 6-vectors in the lex
pair order 01, 02, 03, 12, 13, 23.  The pairing between them is
<v_i^v_j, xi_k^xi_l> = delta_ik delta_jl - delta_il delta_jk, so a form
beta pairs with a bivector u as sum_{i<j} beta_ij u_ij.
"""
from dataclasses import dataclass, field
from math import gcd

from .curves import (
    ProjectiveCurve,
    associated_curve,
    is_nondegenerate,
    ramification_divisors,
)
from .divisors import INF, Divisor, FinitePoint
from .errors import (
    BadParametersError,
    DegenerateCurveError,
    DegenerateFormBug,
    DegenerateFormError,
    DegenerateInputError,
    IdentityViolated,
    NotContactError,
)
from .field import ZERO, GaussianRational
from .linalg import kernel_basis
from .poly import UniPoly

__all__ = [
    "PAIRS",
    "SymplecticForm",
    "pair",
    "wedge_pairing",
    "bivector_matrix",
    "is_contact",
    "contact_defect",
    "recover_beta",
    "contact_family",
    "ContactFamilyMember",
    "contact_ramification_report",
    "ContactReport",
]

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_INDEX = {p: k for k, p in enumerate(PAIRS)}


def pair(beta, u):
    """<u, beta> for a bivector u given by its six lex coordinates."""
    entries = beta.entries if isinstance(beta, SymplecticForm) else beta
    acc = None
    for b, x in zip(entries, u):
        if not b or not x:
            continue
        term = x * b
        acc = term if acc is None else acc + term
    if acc is None:
        return u[0] * 0 if u else ZERO
    return acc


def wedge_pairing(u, w):
    """lambda(u, w): the coefficient of v0^v1^v2^v3 in u^w."""
    u01, u02, u03, u12, u13, u23 = u
    w01, w02, w03, w12, w13, w23 = w
    return (u01 * w23 - u02 * w13 + u03 * w12
            + u12 * w03 - u13 * w02 + u23 * w01)


def bivector_matrix(u, zero=ZERO):
    """The antisymmetric 4x4 matrix with entry (i, j) = u_ij for i < j."""
    A = [[zero] * 4 for _ in range(4)]
    for (i, j), x in zip(PAIRS, u):
        A[i][j] = x
        A[j][i] = -x
    return A


class SymplecticForm:
    """A nondegenerate 2-form on V, canonically scaled.

    The first nonzero entry in lex pair order is 1, so two forms are equal
    exactly when they are proportional.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        es = [GaussianRational.coerce(x) for x in entries]
        if len(es) != 6:
            raise ValueError("a 2-form on a 4-space has six entries")
        lead = next((x for x in es if x), None)
        if lead is None:
            raise DegenerateFormError("the zero 2-form")
        inv = lead.inverse()
        es = tuple(x * inv for x in es)
        object.__setattr__(self, "_entries", es)
        if not self.pfaffian:
            raise DegenerateFormError(f"{self} is degenerate (zero Pfaffian)")

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticForm is immutable")

    @classmethod
    def from_matrix(cls, M):
        return cls([M[i][j] for i, j in PAIRS])

    @property
    def entries(self):
        return self._entries

    @property
    def pfaffian(self):
        b01, b02, b03, b12, b13, b23 = self._entries
        return b01 * b23 - b02 * b13 + b03 * b12

    @property
    def matrix(self):
        return bivector_matrix(self._entries)

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return ZERO
        if i < j:
            return self._entries[_INDEX[(i, j)]]
        return -self._entries[_INDEX[(j, i)]]

    def __call__(self, x, y):
        """beta(x, y) for vectors x, y in V (polynomial entries allowed)."""
        acc = None
        for (i, j), b in zip(PAIRS, self._entries):
            if not b:
                continue
            term = (x[i] * y[j] - x[j] * y[i]) * b
            acc = term if acc is None else acc + term
        return acc

    def __eq__(self, other):
        if not isinstance(other, SymplecticForm):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def to_strings(self):
        return [str(x) for x in self._entries]

    def __str__(self):
        parts = []
        for (i, j), b in zip(PAIRS, self._entries):
            if not b:
                continue
            c = "" if b == 1 else "-" if b == -1 else f"{b}*" if b.is_real else f"({b})*"
            parts.append(f"{c}xi{i}{j}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SymplecticForm({self})"


def _require_space_curve(f):
    if f.ambient_dim != 3:
        raise ValueError(f"contact geometry needs a curve in P^3, got P^{f.ambient_dim}")
    if not is_nondegenerate(f):
        raise DegenerateCurveError(f"{f} lies in a plane")


def contact_defect(f, beta):
    """The polynomial beta(F, F') = sum beta_ij W(h_i, h_j)."""
    table = f.wronskians(2)
    acc = UniPoly()
    for S, b in zip(PAIRS, beta.entries):
        if b:
            acc = acc + table[S].scale(b)
    return acc


def is_contact(f, beta):
    _require_space_curve(f)
    return not contact_defect(f, beta)


def recover_beta(f):
    """The symplectic form making f a contact curve, canonically scaled."""
    _require_space_curve(f)
    table = f.wronskians(2)
    ws = [table[S] for S in PAIRS]
    top = max(w.degree for w in ws if w)
    rows = [[w[k] for w in ws] for k in range(top + 1)]
    ker = kernel_basis(rows)
    if not ker:
        raise NotContactError(f"{f} is not a contact curve: its second associated curve is full")
    if len(ker) > 1:
        raise DegenerateInputError(
            f"{len(ker)} independent 2-forms annihilate the tangent lines of {f}"
        )
    try:
        beta = SymplecticForm(ker[0])
    except DegenerateFormError as exc:
        raise DegenerateFormBug(f"recovered form for {f} has zero Pfaffian") from exc
    if contact_defect(f, beta):
        raise IdentityViolated("recovered form does not annihilate the curve")
    return beta


@dataclass(frozen=True)
class ContactFamilyMember:
    p: int
    q: int
    curve: ProjectiveCurve
    beta: SymplecticForm
    beta_entries: tuple
    R1: Divisor
    R2: Divisor


def contact_family(p, q):
    """[1, z^p, z^q, z^(p+q)] with beta = (p-q) xi03 + (p+q) xi12."""
    if not (isinstance(p, int) and isinstance(q, int)):
        raise BadParametersError("p and q must be integers")
    if not 0 < p < q or gcd(p, q) != 1:
        raise BadParametersError(f"need coprime 0 < p < q, got ({p}, {q})")
    curve = ProjectiveCurve.monomial([0, p, q, p + q])
    raw = (0, 0, p - q, p + q, 0, 0)
    ends = Divisor([(FinitePoint(0), 1), (INF, 1)])
    return ContactFamilyMember(
        p, q, curve, SymplecticForm(raw), tuple(GaussianRational(x) for x in raw),
        (p - 1) * ends, (q - p - 1) * ends,
    )


@dataclass
class ContactReport:
    curve: ProjectiveCurve
    beta: SymplecticForm
    R: list
    null_curve: object
    R_null: list
    r1: int
    r2: int
    degree: int
    null_degree: int
    checks: list = field(default_factory=list)

    @property
    def holds(self):
        return all(ok for _, ok in self.checks)


def contact_ramification_report(f, beta=None):
    """Ramification of a contact curve and of its Klein image, with the transfer laws.

    Raises IdentityViolated if any law fails.
    """
    from .klein import klein_forward

    if beta is None:
        beta = recover_beta(f)
    elif not is_contact(f, beta):
        raise NotContactError(f"{f} is not contact for {beta}")
    R = ramification_divisors(f)
    g = klein_forward(f, beta)
    Rg = ramification_divisors(g.curve)
    r1, r2 = R[0].degree, R[1].degree
    d, dg = f.degree, g.curve.degree
    f2_degree = associated_curve(f, 2).degree
    checks = [
        ("R_1(f) = R_3(f)", R[0] == R[2]),
        ("R_1(f_2) = R_2(f)", Rg[0] == R[1]),
        ("R_4(f_2) = R_2(f)", Rg[3] == R[1]),
        ("R_2(f_2) = R_1(f)", Rg[1] == R[0]),
        ("R_3(f_2) = R_1(f)", Rg[2] == R[0]),
        ("4 deg f - 12 = 4 r_1 + 2 r_2", 4 * d - 12 == 4 * r1 + 2 * r2),
        ("5 deg f_2 - 20 = 5 r_1 + 5 r_2", 5 * dg - 20 == 5 * r1 + 5 * r2),
        ("r_2 even", r2 % 2 == 0),
        ("deg f_2 = 4 + r_1 + r_2", dg == 4 + r1 + r2),
        ("restriction to W keeps the degree", dg == f2_degree),
    ]
    report = ContactReport(f, beta, R, g, Rg, r1, r2, d, dg, checks)
    if not report.holds:
        bad = [name for name, ok in checks if not ok]
        raise IdentityViolated(f"contact laws fail for {f}: {bad}")
    return report
