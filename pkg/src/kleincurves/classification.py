"""Mechanical checks of the classification of rational null curves of degree <= 7.

Each verifier rebuilds the symbolic objects of the corresponding argument
with exact arithmetic, compares them against the expected closed forms and
returns a report.  Any deviation raises VerificationFailed naming the first
quantity that differs.

Universally quantified rank claims ("rank 6 whatever the parameters") are
certified either by a constant gcd of all maximal minors (one parameter) or
by a parametric elimination that branches on every pivot whose vanishing
depends on the parameters.
"""
from dataclasses import dataclass, field
from itertools import combinations

from .contact import is_contact, recover_beta
from .curves import (
    ProjectiveCurve,
    associated_curve,
    first_ramification_divisor,
    ramification_divisors,
)
from .divisors import INF, Divisor, FinitePoint
from .errors import NotContactError, VerificationFailed
from .klein import klein_forward
from .linalg import kernel_basis, rank
from .multipoly import MultiPoly, fraction_free_det
from .poly import UniPoly, gcd_list

__all__ = [
    "ProfileSolution",
    "ProfileConstraint",
    "enumerate_profiles",
    "Check",
    "VerificationReport",
    "RankBranch",
    "certify_rank",
    "f2_coefficient_rows",
    "reference_deg7_matrix",
    "build_deg7_matrix",
    "verify_deg4_uniqueness",
    "verify_deg5_nonexistence",
    "verify_deg6_classification",
    "verify_deg7_unbranched_nonexistence",
    "verify_deg7_branched_example",
    "VERIFIERS",
    "verify_all",
]

a, b, c, p, q = (MultiPoly.var(n) for n in "abcpq")
_ZERO = MultiPoly()
_ONE = MultiPoly.const(1)


# -- ramification profiles ---------------------------------------------------

@dataclass(frozen=True)
class ProfileSolution:
    r1: int
    r2: int
    degF: int


@dataclass(frozen=True)
class ProfileConstraint:
    degG: int
    solutions: tuple

    def pairs(self):
        return [(s.r1, s.r2) for s in self.solutions]


def enumerate_profiles(degG):
    """All (r1, r2) with r2 even and degG = 4 + r1 + r2, sorted by r1."""
    if not isinstance(degG, int) or degG < 2:
        raise ValueError("degG must be an integer >= 2")
    total = degG - 4
    sols = [
        ProfileSolution(total - r2, r2, 3 + (total - r2) + r2 // 2)
        for r2 in range(0, total + 1, 2)
    ]
    sols.sort(key=lambda s: s.r1)
    for s in sols:
        # both contact Plücker identities at genus 0
        assert 4 * s.degF - 12 == 4 * s.r1 + 2 * s.r2
        assert 5 * degG - 20 == 5 * s.r1 + 5 * s.r2
    return ProfileConstraint(degG, tuple(sols))


# -- reports ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    ok: bool


@dataclass
class VerificationReport:
    name: str
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)
    representatives: list = field(default_factory=list)

    @property
    def passed(self):
        return all(ch.ok for ch in self.checks)

    def check(self, name, expected, actual):
        ok = expected == actual
        self.checks.append(Check(name, str(expected), str(actual), ok))
        if not ok:
            raise VerificationFailed(f"{self.name}: {name}: expected {expected}, got {actual}")
        return actual

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [
                {"name": ch.name, "expected": ch.expected, "actual": ch.actual, "ok": ch.ok}
                for ch in self.checks
            ],
            "values": {k: str(v) for k, v in self.values.items()},
        }


# -- symbolic curves with vector coefficients -----------------------------------

def _vec(*xs):
    return [MultiPoly.coerce(x) for x in xs]


def _scale(s, v):
    return [s * x for x in v]


def _add(*vs):
    out = [_ZERO] * len(vs[0])
    for v in vs:
        out = [x + y for x, y in zip(out, v)]
    return out


def _wedge(x, y):
    n = len(x)
    return [x[i] * y[j] - x[j] * y[i] for i, j in combinations(range(n), 2)]


def f2_coefficient_rows(F):
    """Coefficients G_k of F ^ F' for F = sum_k F[k] z^k with MultiPoly vectors."""
    dim = len(F[0])
    npairs = dim * (dim - 1) // 2
    top = 2 * len(F) - 3
    rows = [[_ZERO] * npairs for _ in range(max(top + 1, 1))]
    for i, Fi in enumerate(F):
        for j, Fj in enumerate(F):
            if j == 0 or i == j:
                continue
            w = _wedge(Fi, Fj)
            k = i + j - 1
            rows[k] = [r + j * x for r, x in zip(rows[k], w)]
    while rows and not any(rows[-1]):
        rows.pop()
    return rows


def _divide_by_z(rows):
    if any(rows[0]):
        raise VerificationFailed("F ^ F' does not vanish at z = 0")
    return rows[1:]


def _divide_by_z_minus_1(rows):
    n = len(rows) - 1
    quo = [None] * n
    acc = [_ZERO] * len(rows[0])
    for k in range(n, 0, -1):
        acc = [x + y for x, y in zip(acc, rows[k])]
        quo[k - 1] = acc
    remainder = [x + y for x, y in zip(acc, rows[0])]
    if any(remainder):
        raise VerificationFailed("F ^ F' does not vanish at z = 1")
    return quo


# -- parametric rank certificates -----------------------------------------

@dataclass(frozen=True)
class RankBranch:
    nonzero: tuple
    zero: tuple
    rank: int


def _certainly_nonzero(x, nonzero):
    if not x:
        return False
    if x.is_constant():
        return True
    if x.is_monomial():
        return all(v in nonzero for v in x.variables())
    return False


def _bareiss_rank(M, nonzero):
    """Rank under the assumptions, or ('split', var) when a pivot is undecided."""
    A = [list(r) for r in M]
    nr, nc = len(A), len(A[0]) if A else 0
    prev = _ONE
    r = 0
    cols = list(range(nc))
    while r < min(nr, nc):
        best = None
        undecided = None
        for i in range(r, nr):
            for jj in range(r, nc):
                x = A[i][cols[jj]]
                if not x:
                    continue
                if x.is_constant():
                    best = (i, jj)
                    break
                if _certainly_nonzero(x, nonzero) and best is None:
                    best = (i, jj)
                elif undecided is None or len(x.terms) < len(undecided.terms):
                    undecided = x
            if best is not None and A[best[0]][cols[best[1]]].is_constant():
                break
        if best is None:
            if undecided is None:
                return r
            return ("split", undecided)
        i, jj = best
        A[r], A[i] = A[i], A[r]
        cols[r], cols[jj] = cols[jj], cols[r]
        pk = A[r][cols[r]]
        for i in range(r + 1, nr):
            aik = A[i][cols[r]]
            for j2 in range(r + 1, nc):
                col = cols[j2]
                A[i][col] = (A[i][col] * pk - aik * A[r][col]).exact_div(prev)
            A[i][cols[r]] = _ZERO
        prev = pk
        r += 1
    return r


def _linear_solution(P):
    """(var, lin, value) with P = lin*(var - value), when P is linear in var with constant coefficient."""
    for v in P.variables():
        if P.degree_in(v) != 1:
            continue
        coeff = _ZERO
        rest = _ZERO
        for mono, cf in P.terms.items():
            d = dict(mono)
            if d.get(v):
                coeff = coeff + MultiPoly({tuple((k, e) for k, e in mono if k != v): cf})
            else:
                rest = rest + MultiPoly({mono: cf})
        if coeff.is_constant():
            return v, coeff.constant_value(), rest.exact_div(-coeff)
    return None


def certify_rank(M, nonzero=(), zero=()):
    """Rank of a MultiPoly matrix on every branch of a pivot case analysis.

    Undecided pivots are split: either a variable is nonzero, or it is
    substituted by zero (or, for a non-monomial pivot, solved for).
    Returns the list of leaves.
    """
    res = _bareiss_rank(M, set(nonzero))
    if isinstance(res, int):
        return [RankBranch(tuple(sorted(nonzero)), tuple(zero), res)]
    _, pivot = res
    free = [v for v in pivot.variables() if v not in nonzero]
    if pivot.is_monomial():
        v = free[0]
        nz = certify_rank(M, tuple(nonzero) + (v,), zero)
        sub = [[x.subs({v: 0}) for x in row] for row in M]
        zb = certify_rank(sub, nonzero, tuple(zero) + (f"{v}=0",))
        return nz + zb
    sol = _linear_solution(pivot)
    if sol is None:
        raise VerificationFailed(f"cannot split on the pivot {pivot}")
    v, lin, value = sol
    # pivot != 0: rename the pivot to a fresh symbol u assumed nonzero,
    # i.e. substitute v = value + u / lin
    name = f"_u{len(zero) + len(nonzero)}"
    u = MultiPoly.var(name)
    repl = value + u * MultiPoly.const(1 / lin)
    nzM = [[x.subs({v: repl}) for x in row] for row in M]
    nz = certify_rank(nzM, tuple(nonzero) + (name,), zero)
    zM = [[x.subs({v: value}) for x in row] for row in M]
    zb = certify_rank(zM, nonzero, tuple(zero) + (f"{v}={value}",))
    return nz + zb


def _minor_gcd(rows, var):
    """gcd over Q[var] of all maximal minors of a tall matrix."""
    ncols = len(rows[0])
    minors = []
    for S in combinations(range(len(rows)), ncols):
        d = fraction_free_det([rows[i] for i in S])
        minors.append(d.to_unipoly(var))
    return gcd_list(minors), minors


# -- degree <= 4 -------------------------------------------------------------

def _coefficient_rank(curve):
    d = curve.degree
    return rank([[h[k] for k in range(d + 1)] for h in curve.coords])


def _pos(curve, expected):
    return curve == ProjectiveCurve(expected)


def verify_deg4_uniqueness():
    rep = VerificationReport("deg4")
    z = UniPoly.z()

    # (a) r1 = 1, r2 = 0: f = [1, z, z^2, z^4] has full f_2
    fa = ProjectiveCurve.monomial([0, 1, 2, 4])
    f2a = associated_curve(fa, 2)
    rep.check("(a) f_2 of [1,z,z^2,z^4] matches v01 + 2z v02 + z^2 v12 + 4z^3 v04 + 3z^4 v14 + 2z^5 v24",
              True, _pos(f2a, [1, 2 * z, 4 * z**3, z**2, 3 * z**4, 2 * z**5]))
    rep.check("(a) rank of f_2", 6, _coefficient_rank(f2a))
    try:
        recover_beta(fa)
        outcome = "contact"
    except NotContactError:
        outcome = "NotContact"
    rep.check("(a) recover_beta", "NotContact", outcome)

    # (b) R_2 = 2p: 2 v0^v2 and 3 v0^v3 + v1^v2 multiples of v0^v1
    # unknowns x = v2, y = v3 with v0 = e0, v1 = e1
    e0, e1 = [1, 0, 0, 0], [0, 1, 0, 0]
    rows = []
    pairs = list(combinations(range(4), 2))
    for k, (i, j) in enumerate(pairs):
        if (i, j) == (0, 1):
            continue
        # coefficient of (i, j) in 2 e0^x, linear in x
        row1 = [0] * 8
        row2 = [0] * 8
        for t in range(4):
            unit = [1 if s == t else 0 for s in range(4)]
            w0 = e0[i] * unit[j] - e0[j] * unit[i]
            w1 = e1[i] * unit[j] - e1[j] * unit[i]
            row1[t] += 2 * w0
            row2[t] += w1          # v1 ^ v2
            row2[4 + t] += 3 * w0  # 3 v0 ^ v3
        rows += [row1, row2]
    ker = kernel_basis(rows)
    forced = {2, 3, 6, 7}
    rep.check("(b) solution space dimension", 4, len(ker))
    rep.check("(b) v2, v3 forced into span(v0, v1)", True,
              all(not vec[t] for vec in ker for t in forced))
    rep.values["(b) kernel"] = [[str(x) for x in v] for v in ker]

    # (c) R_2 = p + q: f = [1, z, z^3, z^4]
    fc = ProjectiveCurve.monomial([0, 1, 3, 4])
    rep.check("(c) f_2 matches v01 + 3z^2 v03 + z^3(2 v13 + 4 v04) + 3z^4 v14 + z^6 v34",
              True, _pos(associated_curve(fc, 2), [1, 3 * z**2, 4 * z**3, 2 * z**3, 3 * z**4, z**6]))
    beta = recover_beta(fc)
    rep.check("(c) beta", "xi03 - 2*xi12", str(beta))
    R = ramification_divisors(fc)
    ends = Divisor([(FinitePoint(0), 1), (INF, 1)])
    rep.check("(c) R_1", "0", str(R[0]))
    rep.check("(c) R_2", str(ends), str(R[1]))
    rep.check("(c) profile (r1, r2)", (0, 2), (R[0].degree, R[1].degree))
    rep.values["beta"] = beta
    rep.values["contact_curve"] = fc
    return rep


def verify_deg5_nonexistence():
    rep = VerificationReport("deg5")
    prof = enumerate_profiles(5)
    rep.check("profiles of degree 5", [(1, 0)], prof.pairs())
    rep.check("degF for (1, 0)", 4, prof.solutions[0].degF)
    d4 = verify_deg4_uniqueness()
    fc = d4.values["contact_curve"]
    R = ramification_divisors(fc)
    deg4_profile = (R[0].degree, R[1].degree)
    rep.check("profile of the degree-4 contact curve", (0, 2), deg4_profile)
    rep.check("required profile is realized", False, (1, 0) == deg4_profile)
    rep.values["conclusion"] = "no nonlinear null curve of degree 5"
    return rep


# -- degree 6 -----------------------------------------------------------------

def _deg6_b_rows():
    # f = v0 + z v1 + z^2 v2 + (a z^3 + z^5) v5 in the basis (v0, v1, v2, v5)
    F = [_vec(1, 0, 0, 0), _vec(0, 1, 0, 0), _vec(0, 0, 1, 0),
         _vec(0, 0, 0, a), _vec(0, 0, 0, 0), _vec(0, 0, 0, 1)]
    return f2_coefficient_rows(F)


def _deg6_c_rows():
    # f = (1 + a z) v0 + z^2 v2 + z^3 v3 + (b z^4 + z^5) v5 in (v0, v2, v3, v5)
    F = [_vec(1, 0, 0, 0), _vec(a, 0, 0, 0), _vec(0, 1, 0, 0),
         _vec(0, 0, 1, 0), _vec(0, 0, 0, b), _vec(0, 0, 0, 1)]
    return f2_coefficient_rows(F)


def verify_deg6_classification():
    rep = VerificationReport("deg6")
    rep.check("profiles of degree 6", [(0, 2), (2, 0)], enumerate_profiles(6).pairs())
    ends = Divisor([(FinitePoint(0), 1), (INF, 1)])

    # (a) profile (0, 2)
    d4 = verify_deg4_uniqueness()
    fa = d4.values["contact_curve"]
    ga = klein_forward(fa, d4.values["beta"])
    rep.check("(a) degree of the Klein image", 6, ga.degree)
    branch_a = first_ramification_divisor(ga.curve)
    rep.check("(a) branch divisor", str(ends), str(branch_a))

    # (b) R_1 = 2p
    rows = _deg6_b_rows()
    rep.check("(b) number of coefficient rows", 7, len(rows))
    g, minors = _minor_gcd(rows, "a")
    rep.check("(b) gcd of the 6x6 minors is a nonzero constant", True, g.degree == 0)
    rep.values["(b) minors"] = [str(m) for m in minors]

    # (c) R_1 = p + q
    rows = _deg6_c_rows()
    leaves = certify_rank(rows)
    degenerate = [lf for lf in leaves if lf.rank < 6]
    rep.check("(c) degenerate branches", [("a=0", "b=0")], [lf.zero for lf in degenerate])
    rep.check("(c) rank on the degeneracy locus", 5, degenerate[0].rank if degenerate else None)
    rep.values["(c) branches"] = [f"{lf.nonzero}|{lf.zero}|rank {lf.rank}" for lf in leaves]

    # (d) a = b = 0
    fd = ProjectiveCurve.monomial([0, 2, 3, 5])
    beta = recover_beta(fd)
    rep.check("(d) beta", "xi03 - 5*xi12", str(beta))
    rep.check("(d) contact", True, is_contact(fd, beta))
    gd = klein_forward(fd, beta)
    rep.check("(d) degree of the Klein image", 6, gd.degree)
    branch_d = first_ramification_divisor(gd.curve)
    rep.check("(d) branch divisor", "0", str(branch_d))

    rep.representatives = [
        {"contact_curve": fa, "null_curve": ga.curve, "degree": ga.degree, "branch": branch_a},
        {"contact_curve": fd, "null_curve": gd.curve, "degree": gd.degree, "branch": branch_d},
    ]
    rep.check("number of surviving representatives", 2, len(rep.representatives))
    rep.check("branch data differ", True, branch_a != branch_d)
    return rep


# -- degree 7 -----------------------------------------------------------------

def reference_deg7_matrix():
    """The expected 8x6 matrix M, written out by hand, in the basis v02, v03, v06, v23, v26, v36."""
    return [
        [-2 * p, _ONE * 2, _ZERO, _ZERO, _ZERO, _ZERO],
        [-p * (a + 2), a - 4, -3 * (b + 2), _ZERO, _ZERO, _ZERO],
        [-(a * p + 2 * p + 4 * q), -3 * a, -2 * a * b - 4 * a + 5 * b + 6, _ZERO, _ZERO, _ZERO],
        [-q * (3 * a + 4), 3 * a + 4, 6 * a * b + 9 * a + 3 * b + 12, -2 * p, -p * (b + 2), b + 2],
        [q * (a + 2), -(a + 2), -6 * a * b - 3 * a - 9 * b - 12, -2 * q, p * (3 * b + 4), -(3 * b + 4)],
        [_ZERO, _ZERO, 2 * a * b - 5 * a + 4 * b - 6, _ZERO, b * q + 4 * p + 2 * q, 3 * b],
        [_ZERO, _ZERO, 3 * (a + 2), _ZERO, q * (b + 2), 4 - b],
        [_ZERO, _ZERO, _ZERO, _ZERO, 2 * q, _ONE * -2],
    ]


def _deg7_F(pp=p, qq=q, aa=a, bb=b):
    """Coefficient vectors of F in the basis (v0, v2, v3, v6)."""
    return [
        _vec(1, 0, 0, 0),
        _vec(aa, 0, 0, 0),
        _vec(-(2 * aa + 3), pp, -1, 0),
        _vec(aa + 2, 0, 2, bb + 2),
        _vec(0, qq, -1, -(2 * bb + 3)),
        _vec(0, 0, 0, bb),
        _vec(0, 0, 0, 1),
    ]


def build_deg7_matrix():
    """M computed from F ^ F' / (z (z - 1))."""
    rows = f2_coefficient_rows(_deg7_F())
    return _divide_by_z_minus_1(_divide_by_z(rows))


def _deg7_case1_rows():
    # f = v0 + z v1 + z^2 v2 + (a z^3 + b z^4 + z^6) v6 in (v0, v1, v2, v6)
    F = [_vec(1, 0, 0, 0), _vec(0, 1, 0, 0), _vec(0, 0, 1, 0), _vec(0, 0, 0, a),
         _vec(0, 0, 0, b), _vec(0, 0, 0, 0), _vec(0, 0, 0, 1)]
    return f2_coefficient_rows(F)


def _deg7_case2_rows():
    # f = (1 + a z) v0 + z^2 v2 + z^3 v3 + (b z^4 + c z^5 + z^6) v6 in (v0, v2, v3, v6)
    F = [_vec(1, 0, 0, 0), _vec(a, 0, 0, 0), _vec(0, 1, 0, 0), _vec(0, 0, 1, 0),
         _vec(0, 0, 0, b), _vec(0, 0, 0, c), _vec(0, 0, 0, 1)]
    return f2_coefficient_rows(F)


def verify_deg7_unbranched_nonexistence():
    rep = VerificationReport("deg7-unbranched")
    prof = enumerate_profiles(7)
    unbranched = [s for s in prof.solutions if s.r2 == 0]
    rep.check("unbranched profile of degree 7", [(3, 0, 6)], [(s.r1, s.r2, s.degF) for s in unbranched])

    # case R_1 = 3p
    leaves = certify_rank(_deg7_case1_rows())
    rep.check("R_1 = 3p: rank 6 on every branch", True, all(lf.rank == 6 for lf in leaves))
    rep.values["R_1 = 3p branches"] = [f"{lf.nonzero}|{lf.zero}|rank {lf.rank}" for lf in leaves]

    # case R_1 = 2p + q
    leaves = certify_rank(_deg7_case2_rows())
    rep.check("R_1 = 2p + q: rank 6 on every branch", True, all(lf.rank == 6 for lf in leaves))
    rep.values["R_1 = 2p + q branches"] = [f"{lf.nonzero}|{lf.zero}|rank {lf.rank}" for lf in leaves]

    # case R_1 = p + q + s
    # the change of basis makes F(1) ^ F'(1) = 2 v2 ^ v4 (basis v0, v2, v3, v4, v6)
    F5 = [
        _vec(1, 0, 0, 0, 0), _vec(a, 0, 0, 0, 0), _vec(-(2 * a + 3), 1, -1, 0, 0),
        _vec(a + 2, 0, 2, 0, b + 2), _vec(0, 0, -1, 1, -(2 * b + 3)),
        _vec(0, 0, 0, 0, b), _vec(0, 0, 0, 0, 1),
    ]
    F1 = _add(*F5)
    dF1 = _add(*[_scale(MultiPoly.const(k), v) for k, v in enumerate(F5)])
    w = _wedge(F1, dF1)
    expected = [_ZERO] * 10
    expected[list(combinations(range(5), 2)).index((1, 3))] = MultiPoly.const(2)
    rep.check("F(1) ^ F'(1) = 2 v2 ^ v4", [str(x) for x in expected], [str(x) for x in w])

    M = build_deg7_matrix()
    expected_M = reference_deg7_matrix()
    rep.check("M has 8 rows", 8, len(M))
    for i in range(8):
        for j in range(6):
            rep.check(f"M[{i + 1}][{j + 1}]", str(expected_M[i][j]), str(M[i][j]))

    first = fraction_free_det(M[0:6])
    last = fraction_free_det(M[2:8])
    exp_first = -48 * ((3 * p + q) * b + 4 * p + 2 * q) ** 3
    exp_last = -48 * ((p + 3 * q) * a + 2 * p + 4 * q) ** 3
    rep.check("det of rows 1-6", str(exp_first), str(first))
    rep.check("det of rows 3-8", str(exp_last), str(last))
    rep.values["det rows 1-6"] = first
    rep.values["det rows 3-8"] = last
    rep.values["det rows 1-6, factored"] = "-48*((3*p + q)*b + 4*p + 2*q)^3"
    rep.values["det rows 3-8, factored"] = "-48*((p + 3*q)*a + 2*p + 4*q)^3"

    # non-vanishing assumptions: 3p + q = 0 together with 4p + 2q = 0 forces p = q = 0
    rep.check("3p + q = 0 forces p = q = 0 (det of [[3,1],[4,2]])", 2, 3 * 2 - 1 * 4)
    rep.check("p + 3q = 0 forces p = q = 0 (det of [[1,3],[2,4]])", -2, 1 * 4 - 3 * 2)
    a_sol = (-(2 * p + 4 * q), p + 3 * q)
    b_sol = (-(4 * p + 2 * q), 3 * p + q)
    rep.check("q = 0 forces a = -2", "-2", str(a_sol[0].subs({"q": 0}).exact_div(a_sol[1].subs({"q": 0}))))
    rep.check("p = 0 forces b = -2", "-2", str(b_sol[0].subs({"p": 0}).exact_div(b_sol[1].subs({"p": 0}))))

    rows = [M[i] for i in (0, 1, 3, 4, 6, 7)]
    mid = fraction_free_det(rows)
    cleared, exps = mid.subs_cleared({"a": a_sol, "b": b_sol})
    ea, eb = exps["a"], exps["b"]
    target = 8640 * p * q * (p + q) ** 3 * (p + 3 * q) ** (ea - 1) * (3 * p + q) ** (eb - 1)
    rep.check("det without rows 3 and 6, times (p+3q)^%d (3p+q)^%d" % (ea, eb), str(target), str(cleared))
    rep.values["det without rows 3 and 6"] = "8640*p*q*(p + q)^3/((p + 3*q)*(3*p + q))"

    # p + q = 0, scaled to p = 1, q = -1
    a_val = a_sol[0].subs({"p": 1, "q": -1}).constant_value() / a_sol[1].subs({"p": 1, "q": -1}).constant_value()
    b_val = b_sol[0].subs({"p": 1, "q": -1}).constant_value() / b_sol[1].subs({"p": 1, "q": -1}).constant_value()
    rep.check("a at p = 1, q = -1", -1, a_val)
    rep.check("b at p = 1, q = -1", -1, b_val)
    Ffinal = _deg7_F(MultiPoly.const(1), MultiPoly.const(-1), MultiPoly.const(-1), MultiPoly.const(-1))
    F_at_1 = _add(*Ffinal)
    rep.check("F(1)", ["0"] * 4, [str(x) for x in F_at_1])
    rep.values["conclusion"] = "no unbranched nonlinear null curve of degree 7"
    return rep


def verify_deg7_branched_example():
    rep = VerificationReport("deg7-branched")
    z = UniPoly.z()
    f = ProjectiveCurve([1 - 5 * z**2, z - 3 * z**2, z**4 - 3 * z**3, z**5 - 5 * z**3])
    beta = recover_beta(f)
    rep.values["beta"] = beta
    R = ramification_divisors(f)
    ends = Divisor([(FinitePoint(0), 1), (INF, 1)])
    rep.check("R_1(f)", str(Divisor([(FinitePoint(1), 1)])), str(R[0]))
    rep.check("R_2(f)", str(ends), str(R[1]))
    rep.check("profile (r1, r2)", (1, 2), (R[0].degree, R[1].degree))
    rep.check("profile is the branched one of degree 7", True,
              (1, 2) in enumerate_profiles(7).pairs())
    g = klein_forward(f, beta)
    rep.check("degree of the Klein image", 7, g.degree)
    rep.check("branch divisor of the Klein image", str(ends), str(first_ramification_divisor(g.curve)))
    rep.values["null_curve"] = g.curve
    return rep


VERIFIERS = {
    "deg4": verify_deg4_uniqueness,
    "deg5": verify_deg5_nonexistence,
    "deg6": verify_deg6_classification,
    "deg7-unbranched": verify_deg7_unbranched_nonexistence,
    "deg7-branched": verify_deg7_branched_example,
}


def verify_all():
    return [fn() for fn in VERIFIERS.values()]
