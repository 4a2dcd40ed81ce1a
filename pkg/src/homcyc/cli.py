"""Command-line front end.

Exit codes: 0 success, 2 validation failure, 3 a chain-level identity
the theory asserts failed (always surfaced, never swallowed).
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (DecompositionError, HomAlgebra, ShapeError,
                      alpha_is_idempotent, find_unit, is_centroid_element,
                      load_algebra, unital_decompose, yau_twist)
from .cocycles import (CocyclePreconditionError, Functional,
                       TwistedDerivation, derivation_cocycle,
                       is_cyclic_cocycle, trace_space)
from .coefficients import a_circ
from .complexes import BoundarySquareError, NotStableError
from .cyclic import (connes_bB_report, cyclic_cohomology_bicomplex,
                     cyclic_cohomology_both, cyclic_cohomology_lambda,
                     cyclic_homology_bicomplex, cyclic_homology_both,
                     cyclic_homology_lambda, hochschild_cohomology,
                     hochschild_homology, periodic_cohomology,
                     periodic_homology)
from .hochschild import IdentityViolationError
from .linalg import Matrix, scalar_from_string, scalar_to_string

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IDENTITY = 3


def _load(path: str) -> HomAlgebra:
    alg, report = load_algebra(path)
    if alg is None or not report.multiplicative:
        for v in report.violations:
            print(str(v), file=sys.stderr)
        raise SystemExit(EXIT_INVALID)
    return alg


def _emit(payload: dict, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text if text is not None else json.dumps(payload, sort_keys=True))


def cmd_check(args) -> int:
    try:
        alg, report = load_algebra(args.file)
    except (ShapeError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if alg is None:
        print("invalid: Hom-associativity fails")
        for v in report.violations:
            print("  " + str(v))
        return EXIT_INVALID
    unit = find_unit(alg)
    centroid, _ = is_centroid_element(alg)
    idem = alpha_is_idempotent(alg)
    payload = {
        "name": alg.name,
        "valid": True,
        "multiplicative": report.multiplicative,
        "unit": [scalar_to_string(x) for x in unit] if unit else None,
        "centroid": centroid,
        "alpha_idempotent": idem,
    }
    unit_txt = "none"
    if unit is not None:
        terms = [f"{scalar_to_string(c)}*{nm}" if c != 1 else nm
                 for c, nm in zip(unit, alg.basis_names) if c]
        unit_txt = " + ".join(terms)
    text = (f"valid, {'multiplicative' if report.multiplicative else 'NOT multiplicative'}, "
            f"{'unital (1=' + unit_txt + ')' if unit else 'non-unital'}, "
            f"centroid: {'yes' if centroid else 'no'}, "
            f"alpha^2=alpha: {'yes' if idem else 'no'}")
    _emit(payload, args.format, text)
    if not report.multiplicative:
        for v in report.violations:
            print("  " + str(v), file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_homology(args) -> int:
    alg = _load(args.file)
    theory = args.theory
    n = args.max
    reps = args.representatives
    if theory == "hh":
        rep = hochschild_homology(alg, n, representatives=reps)
        _emit(rep.to_json_dict(), args.format, rep.to_text())
    elif theory == "hhco":
        rep = hochschild_cohomology(alg, n, representatives=reps)
        _emit(rep.to_json_dict(), args.format, rep.to_text())
    elif theory in ("hc", "hcco"):
        if args.method == "both":
            both = (cyclic_homology_both if theory == "hc"
                    else cyclic_cohomology_both)
            cr = both(alg, n)
            cr.require_agreement()  # raises -> exit 3
            _emit(cr.to_json_dict(), args.format, _cyclic_text(cr))
        elif args.method == "lambda":
            rep = (cyclic_homology_lambda if theory == "hc"
                   else cyclic_cohomology_lambda)(alg, n, representatives=reps)
            _emit(rep.to_json_dict(), args.format, rep.to_text())
        else:
            rep = (cyclic_homology_bicomplex if theory == "hc"
                   else cyclic_cohomology_bicomplex)(alg, n)
            _emit(rep.to_json_dict(), args.format, rep.to_text())
    elif theory in ("hp", "hpco"):
        fn = periodic_homology if theory == "hp" else periodic_cohomology
        prep = fn(alg, n, window=args.window)
        _emit(prep.to_json_dict(), args.format, _periodic_text(prep))
    else:
        raise ValueError(theory)
    if getattr(args, "experimental_bb", False):
        _report_bb(alg, n, args.format)
    return EXIT_OK


def _cyclic_text(cr) -> str:
    kind = "cyclic cohomology" if cr.cohomology else "cyclic homology"
    lines = [f"{kind} of {cr.algebra_name} (lambda vs bicomplex)"]
    lines.append(f"{'degree':>8} {'lambda':>8} {'bicomplex':>10} {'agree':>6}")
    for n in cr.degrees:
        lines.append(f"{n:>8} {cr.betti_lambda[n]:>8} "
                     f"{cr.betti_bicomplex[n]:>10} "
                     f"{'yes' if cr.agreement[n] else 'NO':>6}")
    return "\n".join(lines)


def _periodic_text(pr) -> str:
    kind = "periodic cyclic cohomology" if pr.cohomology else "periodic cyclic homology"
    lines = [f"{kind} of {pr.algebra_name} (window {pr.window} vs {pr.window + 2})"]
    lines.append(f"{'degree':>8} {'betti':>6} {'wider':>6} {'stable':>7}")
    for n in pr.degrees:
        lines.append(f"{n:>8} {pr.betti[n]:>6} {pr.betti_wider[n]:>6} "
                     f"{'yes' if pr.stabilized[n] else 'no':>7}")
    return "\n".join(lines)


def cmd_duality(args) -> int:
    alg = _load(args.file)
    hh = hochschild_homology(alg, args.max, check_identities=False)
    hhco = hochschild_cohomology(alg, args.max)
    rows = []
    all_equal = True
    for n in range(args.max + 1):
        eq = hh.betti[n] == hhco.betti[n]
        all_equal = all_equal and eq
        rows.append((n, hh.betti[n], hhco.betti[n], eq))
    payload = {"algebra": alg.name,
               "rows": [{"degree": n, "homology": a, "cohomology": b,
                         "equal": e} for n, a, b, e in rows]}
    lines = [f"duality check for {alg.name}: dim H_n(A,A) vs dim H^n(A,A*)"]
    lines.append(f"{'degree':>8} {'H_n':>6} {'H^n':>6} {'equal':>6}")
    for n, a, b, e in rows:
        lines.append(f"{n:>8} {a:>6} {b:>6} {'yes' if e else 'NO':>6}")
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK if all_equal else EXIT_IDENTITY


def cmd_twist(args) -> int:
    alg = _load(args.file)
    with open(args.alpha) as fh:
        rows = json.load(fh)
    endo = Matrix.from_rows([[scalar_from_string(str(x)) for x in row]
                             for row in rows])
    twisted = yau_twist(alg, endo, name=args.name or (alg.name + "_twisted"))
    print(twisted.to_json())
    return EXIT_OK


def cmd_dual_space(args) -> int:
    alg = _load(args.file)
    rd = a_circ(alg)
    payload = {
        "algebra": alg.name,
        "ambient_dim": rd.subspace.ambient_dim,
        "dim": rd.subspace.dim,
        "basis": [[scalar_to_string(x) for x in v] for v in rd.subspace.basis],
    }
    text = (f"restricted dual of {alg.name}: dimension {rd.subspace.dim} "
            f"of {rd.subspace.ambient_dim}")
    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    alg = _load(args.file)
    try:
        dec = unital_decompose(alg)
    except DecompositionError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    payload = {
        "algebra": alg.name,
        "A1": dec.part_unital_associative.to_json_dict(),
        "A2": dec.part_complement.to_json_dict(),
        "basis_A1": [[scalar_to_string(x) for x in v] for v in dec.basis_a1],
        "basis_A2": [[scalar_to_string(x) for x in v] for v in dec.basis_a2],
    }
    text = (f"{alg.name} = A1 (+) A2 with dim A1 = "
            f"{dec.part_unital_associative.dim}, dim A2 = "
            f"{dec.part_complement.dim}; A1 unital associative")
    _emit(payload, args.format, text)
    return EXIT_OK


def _report_bb(alg, n_max: int, fmt: str) -> None:
    """Experimental (b,B) check: outcomes are reported, never asserted."""
    try:
        rep = connes_bB_report(alg, n_max)
    except ValueError as exc:
        print(f"(b,B) check skipped: {exc}", file=sys.stderr)
        return
    payload = {
        "experimental_bB": {
            "B_squared_zero": rep.b_squared_zero,
            "bB_anticommute": rep.bB_anticommute,
            "betti": {str(n): rep.betti.get(n) for n in rep.degrees},
            "betti_cyclic_bicomplex": {str(n): rep.betti_cyclic.get(n)
                                       for n in rep.degrees},
            "matches_cyclic": rep.matches_cyclic,
        }
    }
    if rep.identities_hold:
        text = (f"(b,B) identities hold for {rep.algebra_name}; total betti "
                f"{[rep.betti[n] for n in rep.degrees]}, "
                f"cyclic bicomplex {[rep.betti_cyclic[n] for n in rep.degrees]}, "
                f"match: {rep.matches_cyclic}")
    else:
        text = (f"(b,B) identity failure for {rep.algebra_name}: "
                f"B^2=0 {rep.b_squared_zero}, bB+Bb=0 {rep.bB_anticommute}")
    _emit(payload, fmt, text)


def cmd_cocycle(args) -> int:
    alg = _load(args.file)
    if args.action == "verify":
        with open(args.functional) as fh:
            data = json.load(fh)
        phi = Functional(int(data["degree"]),
                         tuple(scalar_from_string(str(x))
                               for x in data["coords"]))
        check = is_cyclic_cocycle(phi, alg)
        payload = {"is_cyclic_cocycle": check.is_cocycle,
                   "coboundary_residuals": len(check.coboundary_residuals),
                   "cyclicity_residuals": len(check.cyclicity_residuals)}
        text = "cyclic cocycle: yes" if check.is_cocycle else \
            (f"cyclic cocycle: no ({len(check.coboundary_residuals)} "
             f"coboundary, {len(check.cyclicity_residuals)} cyclicity residuals)")
        _emit(payload, args.format, text)
        return EXIT_OK if check.is_cocycle else EXIT_INVALID
    # derive
    with open(args.derivation) as fh:
        drows = json.load(fh)
    rho = TwistedDerivation(Matrix.from_rows(
        [[scalar_from_string(str(x)) for x in row] for row in drows]))
    with open(args.trace) as fh:
        tdata = json.load(fh)
    tr = Functional(0, tuple(scalar_from_string(str(x))
                             for x in tdata["coords"]))
    try:
        phi = derivation_cocycle(alg, rho, tr)
    except CocyclePreconditionError as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_INVALID
    payload = {"degree": 1,
               "coords": [scalar_to_string(x) for x in phi.coords]}
    _emit(payload, args.format, json.dumps(payload, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homcyc",
                                description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_max=True):
        sp.add_argument("file", help="algebra definition JSON")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if with_max:
            sp.add_argument("--max", type=int, default=3,
                            help="maximum degree")

    sp = sub.add_parser("check", help="validate an algebra file")
    common(sp, with_max=False)
    sp.set_defaults(fn=cmd_check)

    for theory, help_txt in [("hh", "Hochschild homology"),
                             ("hc", "cyclic homology"),
                             ("hp", "periodic cyclic homology"),
                             ("hhco", "Hochschild cohomology"),
                             ("hcco", "cyclic cohomology"),
                             ("hpco", "periodic cyclic cohomology")]:
        sp = sub.add_parser(theory, help=help_txt)
        common(sp)
        sp.add_argument("--method", choices=("lambda", "bicomplex", "both"),
                        default="both")
        sp.add_argument("--window", type=int, default=2,
                        help="periodic truncation window")
        sp.add_argument("--representatives", action="store_true")
        sp.add_argument("--experimental-bb", action="store_true",
                        dest="experimental_bb",
                        help="also run the (b,B)-bicomplex check and report "
                             "whether its chain identities hold")
        sp.set_defaults(fn=cmd_homology, theory=theory)

    sp = sub.add_parser("duality",
                        help="compare dim H_n(A,A) with dim H^n(A,A*)")
    common(sp)
    sp.set_defaults(fn=cmd_duality)

    sp = sub.add_parser("twist", help="Yau twist of an associative algebra")
    common(sp, with_max=False)
    sp.add_argument("alpha", help="endomorphism matrix JSON")
    sp.add_argument("--name", default="")
    sp.set_defaults(fn=cmd_twist)

    sp = sub.add_parser("dual-space",
                        help="the functional subspace with its module structure")
    common(sp, with_max=False)
    sp.set_defaults(fn=cmd_dual_space)

    sp = sub.add_parser("decompose", help="unital decomposition A1 (+) A2")
    common(sp, with_max=False)
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("cocycle", help="verify or derive cyclic cocycles")
    sp.add_argument("action", choices=("verify", "derive"))
    common(sp, with_max=False)
    sp.add_argument("--functional", help="functional JSON (verify)")
    sp.add_argument("--derivation", help="derivation matrix JSON (derive)")
    sp.add_argument("--trace", help="trace functional JSON (derive)")
    sp.set_defaults(fn=cmd_cocycle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (IdentityViolationError, BoundarySquareError,
            NotStableError) as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return EXIT_IDENTITY


if __name__ == "__main__":
    raise SystemExit(main())
