"""Command-line interface.

Exit codes: 0 on success, 1 when a mathematical verification fails (or an
internal identity is violated), 2 on malformed input or when the input does
not meet a precondition of the requested operation.
"""
import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .classification import VERIFIERS, enumerate_profiles
from .contact import SymplecticForm, contact_defect, recover_beta
from .curves import (
    ProjectiveCurve,
    first_ramification_divisor,
    is_nondegenerate,
    plucker_report,
    ramification_divisors,
    vanishing_sequence,
)
from .divisors import place_from_json
from .errors import (
    IdentityViolated,
    KleinCurvesError,
    NotContactError,
    VerificationFailed,
)
from .field import GaussianRational, parse_field
from .klein import (
    NullCurve,
    build_w_model,
    complete_null,
    klein_forward,
    klein_inverse,
    model_change,
    quadratic_values,
)
from .poly import RatFunction, UniPoly

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- documents ------------------------------------------------------------------

def _field(x, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"{where}: expected an exact number string, got {x!r}")
    if isinstance(x, int):
        return GaussianRational(x)
    if not isinstance(x, str):
        raise InputError(f"{where}: expected a string, got {type(x).__name__}")
    try:
        return parse_field(x)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def _poly(cs, where):
    if not isinstance(cs, list):
        raise InputError(f"{where}: expected a coefficient array")
    return UniPoly([_field(x, f"{where}[{k}]") for k, x in enumerate(cs)])


def _beta(entries, where):
    if not isinstance(entries, list) or len(entries) != 6:
        raise InputError(f"{where}: beta needs six entries (01, 02, 03, 12, 13, 23)")
    vals = [_field(x, f"{where}[{k}]") for k, x in enumerate(entries)]
    try:
        return SymplecticForm(vals)
    except KleinCurvesError as exc:
        raise InputError(f"{where}: {exc}") from None


def parse_curve_document(doc):
    """(curve, beta or None, model or None) from a CurveDocument mapping."""
    if isinstance(doc, dict) and "document" in doc and "coords" not in doc:
        doc = doc["document"]
    if not isinstance(doc, dict):
        raise InputError("document: expected a JSON object")
    if "coords" not in doc:
        raise InputError("document: missing 'coords'")
    coords = doc["coords"]
    if not isinstance(coords, list) or not coords:
        raise InputError("coords: expected a nonempty array of coefficient arrays")
    polys = [_poly(cs, f"coords[{i}]") for i, cs in enumerate(coords)]
    n = doc.get("ambientDim", len(polys) - 1)
    if not isinstance(n, int) or n != len(polys) - 1:
        raise InputError(f"ambientDim: {n!r} does not match {len(polys)} coordinates")
    try:
        curve = ProjectiveCurve(polys)
    except KleinCurvesError as exc:
        raise InputError(f"coords: {exc}") from None
    beta = _beta(doc["beta"], "beta") if doc.get("beta") is not None else None
    model = doc.get("model")
    if model not in (None, "W", "standardQuadric"):
        raise InputError(f"model: unknown model {model!r}")
    return curve, beta, model


def curve_document(curve, beta=None, model=None):
    doc = {"ambientDim": curve.ambient_dim, "coords": [h.to_strings() for h in curve.coords]}
    if beta is not None:
        doc["beta"] = beta.to_strings()
    if model is not None:
        doc["model"] = model
    return doc


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _place(spec):
    try:
        if spec.lstrip().startswith("["):
            spec = json.loads(spec)
        return place_from_json(spec)
    except (ValueError, TypeError) as exc:
        raise InputError(f"--place {spec!r}: {exc}") from None


# -- reports --------------------------------------------------------------------

def _analyze(curve, places, beta):
    out = {"curve": curve_document(curve), "degree": curve.degree}
    nondeg = is_nondegenerate(curve)
    out["nondegenerate"] = nondeg
    if not nondeg:
        if curve.span_rank >= 2:
            out["R1"] = first_ramification_divisor(curve).to_json()
        return out
    out["vanishingSequences"] = [
        {"place": pl.to_json(), "sequence": list(vanishing_sequence(curve, pl))} for pl in places
    ]
    rep = plucker_report(curve)
    out["ramification"] = {f"R{i + 1}": D.to_json() for i, D in enumerate(rep.divisors)}
    out["profile"] = list(rep.profile.totals)
    out["plucker"] = {
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "associatedDegrees": rep.associated_degrees,
        "predictedDegrees": rep.predicted_degrees,
        "branchChecks": {name: ok for name, ok in rep.branch_checks},
        "holds": rep.holds,
    }
    if beta is not None and curve.ambient_dim == 3:
        out["contact"] = not contact_defect(curve, beta)
    return out


def _text_analyze(path, rep):
    lines = [f"{path}: {_curve_str(rep['curve'])}", f"  degree: {rep['degree']}",
             f"  nondegenerate: {rep['nondegenerate']}"]
    if not rep["nondegenerate"]:
        if "R1" in rep:
            lines.append(f"  R_1: {_div_str(rep['R1'])}")
        return lines
    for vs in rep["vanishingSequences"]:
        where = place_from_json(vs["place"])
        lines.append(f"  vanishing sequence at {where}: {tuple(vs['sequence'])}")
    for name, D in rep["ramification"].items():
        lines.append(f"  {name[0]}_{name[1:]}: {_div_str(D)}")
    pl = rep["plucker"]
    lines.append(f"  Plücker identity: {pl['lhs']} = {pl['rhs']} ({'holds' if pl['holds'] else 'FAILS'})")
    lines.append(f"  associated curve degrees: {pl['associatedDegrees']}")
    if "contact" in rep:
        lines.append(f"  contact for the given beta: {rep['contact']}")
    return lines


def _curve_str(doc):
    return str(ProjectiveCurve([UniPoly([parse_field(x) for x in cs]) for cs in doc["coords"]]))


def _div_str(items):
    if not items:
        return "0"
    parts = []
    for it in items:
        pl = it["place"]
        s = "(inf)" if pl == "inf" else f"(z={pl})" if isinstance(pl, str) else f"({str(UniPoly([parse_field(x) for x in pl]))} = 0)"
        parts.append(s if it["multiplicity"] == 1 else f"{it['multiplicity']}*{s}")
    return " + ".join(parts)


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# -- subcommands ----------------------------------------------------------------

def cmd_analyze(args):
    places = [_place(s) for s in (args.place or [])]
    docs = [(path, parse_curve_document(_load(path))) for path in args.files]

    def work(item):
        _, (curve, beta, _) = item
        return _analyze(curve, places, beta)

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(work, docs))
    payload = [{"file": path, **rep} for (path, _), rep in zip(docs, results)]
    lines = []
    for (path, _), rep in zip(docs, results):
        lines += _text_analyze(path, rep)
    _emit(args, payload if len(payload) > 1 else payload[0], lines)
    return EXIT_OK


def cmd_contact(args):
    curve, beta, _ = parse_curve_document(_load(args.file))
    if args.beta:
        beta = _beta(args.beta, "--beta")
    if curve.ambient_dim != 3:
        raise InputError("contact: the curve must lie in P^3")
    if beta is not None:
        ok = not contact_defect(curve, beta)
        payload = {"beta": beta.to_strings(), "contact": ok}
        _emit(args, payload, [f"beta: {beta}", f"contact: {ok}"])
        return EXIT_OK
    try:
        beta = recover_beta(curve)
    except NotContactError:
        payload = {"contact": False, "beta": None}
        _emit(args, payload, ["contact: False (the second associated curve is linearly full)"])
        return EXIT_OK
    payload = {"contact": True, "beta": beta.to_strings()}
    _emit(args, payload, [f"contact: True", f"beta: {beta}"])
    return EXIT_OK


def _null_payload(g):
    gg, gdg, dgdg = quadratic_values(g.curve.coords, g.gram)
    beta = g.w_model.beta if g.model == "W" else None
    return {
        "document": curve_document(g.curve, beta, g.model),
        "degree": g.degree,
        "branch": first_ramification_divisor(g.curve).to_json(),
        "nullChecks": {"<G,G>": str(gg), "<G,G'>": str(gdg), "<G',G'>": str(dgdg)},
    }


def _null_lines(g, payload):
    return [
        f"null curve ({g.model} model): {g.curve}",
        f"  degree: {payload['degree']}",
        f"  branch divisor: {_div_str(payload['branch'])}",
        "  " + ", ".join(f"{k} = {v}" for k, v in payload["nullChecks"].items()),
    ]


def cmd_klein(args):
    curve, beta, _ = parse_curve_document(_load(args.file))
    if args.beta:
        beta = _beta(args.beta, "--beta")
    if beta is None:
        beta = recover_beta(curve)
    g = klein_forward(curve, beta)
    if args.model == "standardQuadric":
        g = model_change(g)
    payload = _null_payload(g)
    _emit(args, payload, _null_lines(g, payload))
    return EXIT_OK


def cmd_klein_inv(args):
    curve, beta, model = parse_curve_document(_load(args.file))
    model = model or ("W" if beta is not None else "standardQuadric")
    if curve.ambient_dim != 4:
        raise InputError("klein-inv: the null curve must lie in P^4")
    if model == "W":
        if beta is None:
            raise InputError("klein-inv: a W-model document needs 'beta'")
        g = NullCurve(curve, "W", build_w_model(beta))
    else:
        g = NullCurve(curve, "standardQuadric")
    f = klein_inverse(g)
    beta_f = recover_beta(f)
    payload = {"document": curve_document(f, beta_f), "degree": f.degree}
    _emit(args, payload, [f"contact curve: {f}", f"  degree: {f.degree}", f"  beta: {beta_f}"])
    return EXIT_OK


def _ratfunction(obj, where):
    if isinstance(obj, list):
        return RatFunction(_poly(obj, where))
    if not isinstance(obj, dict) or "num" not in obj:
        raise InputError(f"{where}: expected {{'num': [...], 'den': [...]}} or a coefficient array")
    num = _poly(obj["num"], f"{where}.num")
    den = _poly(obj.get("den", ["1"]), f"{where}.den")
    if not den:
        raise InputError(f"{where}.den: zero denominator")
    return RatFunction(num, den)


def cmd_null_complete(args):
    doc = _load(args.file)
    gamma = doc.get("gamma") if isinstance(doc, dict) else None
    if not isinstance(gamma, list) or len(gamma) != 3:
        raise InputError("gamma: expected three rational functions")
    g = complete_null([_ratfunction(x, f"gamma[{k}]") for k, x in enumerate(gamma)])
    payload = _null_payload(g)
    _emit(args, payload, _null_lines(g, payload))
    return EXIT_OK


def cmd_verify(args):
    names = list(VERIFIERS) if args.name == "all" else [args.name]
    if any(n not in VERIFIERS for n in names):
        raise InputError(f"verify: unknown verifier {args.name!r}; choose from {', '.join(VERIFIERS)} or all")
    payload, lines, status = [], [], EXIT_OK
    for n in names:
        try:
            rep = VERIFIERS[n]()
            payload.append(rep.to_json())
            lines.append(f"{n}: PASS ({len(rep.checks)} checks)")
            for k, v in rep.values.items():
                if isinstance(v, (list, dict)):
                    continue
                lines.append(f"  {k}: {v}")
        except VerificationFailed as exc:
            status = EXIT_FAIL
            payload.append({"name": n, "passed": False, "error": str(exc)})
            lines.append(f"{n}: FAIL {exc}")
    _emit(args, payload if len(payload) > 1 else payload[0], lines)
    return status


def cmd_profiles(args):
    prof = enumerate_profiles(args.degG)
    payload = {
        "degG": prof.degG,
        "solutions": [{"r1": s.r1, "r2": s.r2, "degF": s.degF} for s in prof.solutions],
    }
    lines = [f"(r1, r2) = ({s.r1}, {s.r2})  degF {s.degF}" for s in prof.solutions] or ["no solutions"]
    _emit(args, payload, lines)
    return EXIT_OK


def _degG(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError("degG must be at least 2")
    return n


def build_parser():
    parser = argparse.ArgumentParser(prog="kleincurves", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="invariants and Plücker report")
    p.add_argument("files", nargs="+")
    p.add_argument("--place", action="append", help="place for vanishing sequences: inf, a field element, or a JSON coefficient array")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("contact", parents=[common], help="test or recover the contact form")
    p.add_argument("file")
    p.add_argument("--beta", nargs=6, metavar="B")
    p.set_defaults(func=cmd_contact)

    p = sub.add_parser("klein", parents=[common], help="contact curve -> null curve")
    p.add_argument("file")
    p.add_argument("--beta", nargs=6, metavar="B")
    p.add_argument("--model", choices=["W", "standardQuadric"], default="W")
    p.set_defaults(func=cmd_klein)

    p = sub.add_parser("klein-inv", parents=[common], help="null curve -> contact curve")
    p.add_argument("file")
    p.set_defaults(func=cmd_klein_inv)

    p = sub.add_parser("null-complete", parents=[common], help="affine null curve -> Q^3")
    p.add_argument("file")
    p.set_defaults(func=cmd_null_complete)

    p = sub.add_parser("verify", parents=[common], help="run a classification verifier")
    p.add_argument("name", help=f"one of {', '.join(VERIFIERS)} or all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profiles", parents=[common], help="ramification profiles of a null curve degree")
    p.add_argument("degG", type=_degG)
    p.set_defaults(func=cmd_profiles)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (IdentityViolated, VerificationFailed) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except KleinCurvesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
