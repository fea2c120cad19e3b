"""Command-line interface: ``hopfexp <command> ...`` (also ``python -m hopfexp``).

Exit codes: 0 success, 1 a verification or contract failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import INFINITE, preset, preset_names
from .double import (
    DoubleError,
    build_double,
    central_element_z,
    determinant_lemma_check,
    verify_drinfeld_identities,
    verify_quasitriangular,
)
from .exponent import (
    METHODS,
    ExponentConfig,
    ExponentError,
    NonSemisimpleCertificate,
    OrderCertificate,
    SkewPrimitiveCertificate,
    classify_u_spectrum,
    compute_exponent,
    cross_check,
    is_semisimple_cosemisimple,
)
from .hopf import HopfAlgebra, HopfError, coopposite, dual, opposite, verify_hopf
from .io import DocumentError, dumps, emit, expected_of, load
from .twist import TwistError, apply_twist, bicharacter_twist, parse_bichar


class UsageError(Exception):
    pass


class ContractFailure(Exception):
    pass


def resolve(source: str) -> tuple[HopfAlgebra, dict, str]:
    """A preset name or a document path -> (algebra, expectations, display name)."""
    if source in preset_names():
        e = preset(source)
        exp = {k: v for k, v in vars(e.expected).items() if k != "source" and v is not None}
        return e.algebra, exp, source
    path = Path(source)
    if path.is_file():
        H, doc = load(path)
        return H, expected_of(doc), H.name or path.stem
    raise UsageError(f"{source!r} is neither a preset name nor a readable file")


def _write(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(f"wrote {out}")


def _describe_cert(c, H) -> str:
    if isinstance(c, SkewPrimitiveCertificate):
        return c.describe(H)
    return c.describe()


def _headline(r, H) -> str:
    if r.is_infinite:
        parts = []
        for c in r.certificates:
            if isinstance(c, SkewPrimitiveCertificate):
                parts.append(c.describe(H))
            elif isinstance(c, NonSemisimpleCertificate):
                parts.append("u minimal polynomial not squarefree")
            elif isinstance(c, OrderCertificate) and not c.squarefree and c.element != "u":
                parts.append(f"{c.element} minimal polynomial not squarefree")
        return f"exp = INFINITE (certificates: {'; '.join(parts)})"
    if r.is_finite:
        return f"exp = {r.value}"
    return f"exp = UNKNOWN (no hit up to cap {r.cap})"


# ---------------------------------------------------------------- commands


def cmd_catalog(args) -> int:
    if args.action != "list":
        raise UsageError("usage: catalog list")
    print(f"{'name':20s} {'dim':>4s}  {'field':12s} {'exp':>9s}  ss  coss  family")
    for name in preset_names():
        e = preset(name)
        H, x = e.algebra, e.expected
        exp = "INFINITE" if x.exponent == INFINITE else str(x.exponent)
        yn = {True: "y", False: "n", None: "?"}
        print(f"{name:20s} {H.dim:4d}  {str(H.field):12s} {exp:>9s}   {yn[x.semisimple]}   {yn[x.cosemisimple]}   {e.family}")
    return 0


def cmd_verify(args) -> int:
    H, _, name = resolve(args.source)
    rep = verify_hopf(H)
    print(f"{name}: Hopf axioms (dim {H.dim} over {H.field})")
    for line in rep.lines():
        print(f"  {line}")
    ok = rep.passed
    if args.double:
        D = build_double(H, verify=False)
        reports = [
            ("double: Hopf axioms", verify_hopf(D.algebra)),
            ("double: quasitriangular", verify_quasitriangular(D)),
            ("double: Drinfeld element", verify_drinfeld_identities(D)),
            ("double: determinants", determinant_lemma_check(D)),
        ]
        for title, r in reports:
            print(f"{title}")
            for line in r.lines():
                print(f"  {line}")
            ok = ok and r.passed
        try:
            central_element_z(D)
            print("double: z = u S(u) central, u^-2 z grouplike\n  PASS")
        except DoubleError as exc:
            print(f"double: z = u S(u)\n  FAIL  {exc}")
            ok = False
    print("all checks passed" if ok else "VERIFICATION FAILED")
    return 0 if ok else 1


def _result_json(name, H, results: dict, headline: str, agree: bool | None) -> str:
    doc = {"algebra": name, "dimension": H.dim, "field": H.field.to_dict(),
           "results": {m: r.to_dict() for m, r in results.items()}, "summary": headline}
    if agree is not None:
        doc["methods_agree"] = agree
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_exp(args) -> int:
    H, expected, name = resolve(args.source)
    config = ExponentConfig(cap=args.cap, seed=args.seed)
    if args.method == "all":
        check = cross_check(H, args.cap, config)
        results = check.results
        finite = [m for m in METHODS if results[m].is_finite]
        if not check.agree:
            headline = "methods DISAGREE: " + ", ".join(f"{m}={r.verdict()}" for m, r in results.items())
        elif len(finite) == len(METHODS) and results["decide"].is_finite:
            headline = f"exp = {results['decide'].value}, methods agree: {','.join(METHODS)}"
        else:
            headline = f"{_headline(results['decide'], H)}; no contradiction among methods"
        agree = check.agree
    else:
        results = {args.method: compute_exponent(H, args.method, args.cap, config)}
        headline = _headline(results[args.method], H)
        agree = None
    if args.json:
        sys.stdout.write(_result_json(name, H, results, headline, agree))
    else:
        print(f"algebra: {name} (dim {H.dim} over {H.field})")
        for m, r in results.items():
            print(f"  {m:9s} {r.verdict()}")
            for c in r.certificates:
                print(f"            {_describe_cert(c, H)}")
            for note in r.notes:
                print(f"            {note}")
        print(headline)
    if agree is False:
        return 1
    return 0


def cmd_double(args) -> int:
    H, _, name = resolve(args.source)
    try:
        D = build_double(H, verify=True)
    except DoubleError as exc:
        print(f"double verification failed: {exc}", file=sys.stderr)
        return 1
    for title, rep in D.reports.items():
        print(f"{title}: {'PASS' if rep.passed else 'FAIL'}", file=sys.stderr)
    D.algebra.name = f"D({name})"
    _write(dumps(emit(D.algebra, extra={"double_of": name})), args.output)
    return 0


def cmd_transform(args) -> int:
    H, _, name = resolve(args.source)
    fn = {"dual": dual, "op": opposite, "cop": coopposite}[args.command]
    K = fn(H)
    K.name = f"{args.command}({name})"
    rep = verify_hopf(K)
    if not rep.passed:
        print(f"{args.command} failed: {', '.join(rep.failures)}", file=sys.stderr)
        return 1
    _write(dumps(emit(K)), args.output)
    return 0


def cmd_twist(args) -> int:
    H, _, name = resolve(args.source)
    try:
        gens = [H.element({label.strip(): 1}) for label in args.subgroup.split(",") if label.strip()]
    except HopfError as exc:
        raise UsageError(str(exc)) from None
    tw = bicharacter_twist(H, gens, parse_bichar(args.bichar))
    K = apply_twist(H, tw)
    K.name = f"{name}^J"
    print(f"twist verified; coproduct changed: {'yes' if K.comult != H.comult else 'no'}", file=sys.stderr)
    _write(dumps(emit(K, extra={"twist_of": name, "subgroup": args.subgroup, "bichar": args.bichar})), args.output)
    return 0


def cmd_spectrum(args) -> int:
    H, _, name = resolve(args.source)
    rep = classify_u_spectrum(H)
    if args.json:
        sys.stdout.write(json.dumps({"algebra": name, **rep.to_dict()}, indent=2, sort_keys=True) + "\n")
    else:
        print(f"algebra: {name} (dim {H.dim} over {H.field}); u acting on the regular D(H)-module")
        for line in rep.lines():
            print(f"  {line}")
    if not rep.consistent:
        print("SPECTRUM BOUND VIOLATED", file=sys.stderr)
        return 1
    return 0


SCAN_FAMILIES = {
    "groups": ("groups", "duals"),
    "twists": ("twists",),
    "all": None,
}


def scan_rows(family: str = "all", max_dim: int | None = None, config: ExponentConfig = ExponentConfig()) -> list[dict]:
    wanted = SCAN_FAMILIES[family]
    rows = []
    for name in sorted(preset_names()):
        e = preset(name)
        if wanted is not None and e.family not in wanted:
            continue
        H = e.algebra
        if max_dim is not None and H.dim > max_dim:
            continue
        r = compute_exponent(H, "decide", None, config)
        sscs = is_semisimple_cosemisimple(H)
        row = {"name": name, "dim": H.dim, "family": e.family, "semisimple_cosemisimple": sscs,
               "exp": r.value if r.is_finite else r.status.upper()}
        if r.is_finite:
            row["exp_divides_dim"] = H.dim % r.value == 0
            row["exp_divides_dim3"] = H.dim**3 % r.value == 0
        else:
            row["exp_divides_dim"] = row["exp_divides_dim3"] = None
        # hard requirements: dim^3 for semisimple-cosemisimple, dim for groups, duals, twists
        violations = []
        if sscs and row["exp_divides_dim3"] is not True:
            violations.append("exp does not divide dim^3")
        if e.family in ("groups", "duals", "twists") and row["exp_divides_dim"] is not True:
            violations.append("exp does not divide dim")
        row["violations"] = violations
        rows.append(row)
    return rows


def cmd_scan(args) -> int:
    rows = scan_rows(args.family, args.max_dim, ExponentConfig(seed=args.seed))
    if args.json:
        sys.stdout.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    else:
        yn = {True: "yes", False: "NO", None: "-"}
        print(f"{'name':20s} {'dim':>4s} {'exp':>9s}  exp|dim  exp|dim^3  ss+coss")
        for r in rows:
            print(f"{r['name']:20s} {r['dim']:4d} {str(r['exp']):>9s}  {yn[r['exp_divides_dim']]:7s}  "
                  f"{yn[r['exp_divides_dim3']]:9s}  {yn[r['semisimple_cosemisimple']]}")
    bad = [r for r in rows if r["violations"]]
    for r in bad:
        print(f"VIOLATION {r['name']}: {'; '.join(r['violations'])}", file=sys.stderr)
    return 1 if bad else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfexp", description="Exponents of finite-dimensional Hopf algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list the built-in presets")
    c.add_argument("action", choices=["list"])
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", help="check the Hopf axioms (and the double with --double)")
    v.add_argument("source", help="preset name or algebra document")
    v.add_argument("--double", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exp", help="compute the exponent")
    e.add_argument("source")
    e.add_argument("--method", choices=["direct", "u", "rproduct", "r21r", "decide", "all"], default="decide")
    e.add_argument("--cap", type=int, default=None)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_exp)

    d = sub.add_parser("double", help="build and emit the Drinfeld double")
    d.add_argument("source")
    d.add_argument("-o", "--output", required=True)
    d.set_defaults(func=cmd_double)

    for name, text in (("dual", "dual Hopf algebra"), ("op", "opposite multiplication"), ("cop", "opposite comultiplication")):
        t = sub.add_parser(name, help=text)
        t.add_argument("source")
        t.add_argument("-o", "--output", required=True)
        t.set_defaults(func=cmd_transform)

    w = sub.add_parser("twist", help="apply a bicharacter twist on commuting grouplikes")
    w.add_argument("source")
    w.add_argument("--subgroup", required=True, help="comma-separated basis labels of grouplike generators")
    w.add_argument("--bichar", required=True, help="rows separated by ';', entries by ','")
    w.add_argument("-o", "--output", required=True)
    w.set_defaults(func=cmd_twist)

    s = sub.add_parser("spectrum", help="spectral report for the Drinfeld element")
    s.add_argument("source")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_spectrum)

    sc = sub.add_parser("scan", help="tabulate exp against dim across the catalog")
    sc.add_argument("--family", choices=sorted(SCAN_FAMILIES), default="all")
    sc.add_argument("--max-dim", type=int, default=None)
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--json", action="store_true")
    sc.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", None) is not None and args.cap < 1:
        parser.error("--cap must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DocumentError, TwistError, DoubleError, HopfError, ExponentError, ContractFailure) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
