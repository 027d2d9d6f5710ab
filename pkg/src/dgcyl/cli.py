"""Command line front end.

Exit codes: 0 success, 2 incompatible horn data, 3 failed certificate or
solver, 64 usage errors (including dimensions above the cap).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .dgring import BasisDGRing, check_axioms, integers
from .horn import certify_surjective_quasi_iso, limit_iso_report, limit_ring, restriction_hom
from .intlin import cohomology
from .kan import HornDatum, IncompatibleHornError, fill
from .keller import keller_cyl, keller_iso_report
from .lifting import LiftingError
from .nerve import cyl
from .semifree import PresentationError, SemiFreePresentation
from .simplex import Delta, Horn, check_coequalizer, format_simplex, horn_diagram

EXIT_OK, EXIT_INCOMPATIBLE, EXIT_CERT, EXIT_USAGE = 0, 2, 3, 64
CAP_ENV = "DGCYL_MAX_Q"
DEFAULT_CAP = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dim_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def _check_q(q: int):
    if q < 0:
        raise UsageError(f"dimension must be >= 0, got {q}")
    if q > dim_cap():
        raise UsageError(f"q = {q} exceeds the cap {dim_cap()} (set {CAP_ENV} to raise it)")


def _horn(q: int, i: int) -> Horn:
    _check_q(q)
    if q < 1:
        raise UsageError("there are no horns in dimension 0")
    if not 0 <= i <= q:
        raise UsageError(f"horn index {i} outside [0, {q}]")
    return Horn(q, i)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _coeff(path: str | None) -> BasisDGRing:
    if path is None:
        return integers()
    try:
        B = BasisDGRing.from_json(_load_json(path), name=os.path.basename(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad coefficient ring {path}: {exc}") from None
    report = check_axioms(B)
    if not report.ok:
        raise UsageError(f"coefficient ring {path} is not a DG ring: {report.failures[0]}")
    return B


def _emit(text: str, path: str | None):
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fmt_h(ring: BasisDGRing) -> str:
    h = cohomology(ring.underlying_complex())
    parts = [f"H^{k} = {g}" for k, g in h.items() if not g.is_zero]
    return ", ".join(parts) or "H = 0"


# -- commands --------------------------------------------------------------

def cmd_simplex(args, out) -> int:
    if args.i is None:
        _check_q(args.q)
        space = Delta(args.q)
    else:
        space = _horn(args.q, args.i)
    counts = []
    print(f"{space}", file=out)
    for p in range(space.q + 1):
        nd = space.nondegenerate(p)
        if not nd:
            continue
        counts.append(len(nd))
        print(f"  dim {p} ({len(nd)}): " + " ".join(format_simplex(s) for s in nd), file=out)
    print("  counts: (" + ",".join(str(c) for c in counts) + ")", file=out)
    if isinstance(space, Horn):
        diagram = horn_diagram(space)
        print("  J0: " + " ".join(str(j) for j in diagram.J0), file=out)
        print("  J1: " + (" ".join(f"({k},{l})" for k, l in diagram.J1) or "none"), file=out)
        for kl in diagram.J1:
            print(f"    beta{kl} = {diagram.beta[kl]}  gamma{kl} = {diagram.gamma[kl]}", file=out)
        report = check_coequalizer(space, bound=max(5, space.q))
        verdict = "pass" if report.ok else f"FAIL: {report.failures[0]}"
        print(f"  coequalizer: {verdict}", file=out)
        if not report.ok:
            return EXIT_CERT
    return EXIT_OK


def _certify_ring(ring: BasisDGRing, out) -> bool:
    report = check_axioms(ring)
    print(report.summary(), file=out)
    if report.ok:
        print(f"cohomology[{ring.name}]: {_fmt_h(ring)}", file=out)
    return report.ok


def _ring_report(kind: str, params: list[int], B: BasisDGRing, certify: bool,
                 dump: str | None, out) -> int:
    ok = True
    if kind == "cyl":
        if len(params) != 1:
            raise UsageError("ring cyl takes one parameter q")
        _check_q(params[0])
        ring = cyl(params[0], B)
    elif kind == "horn":
        if len(params) != 2:
            raise UsageError("ring horn takes two parameters q i")
        h = _horn(*params)
        ring = restriction_hom(h.q, h.i, B).target
    elif kind == "keller":
        if params:
            raise UsageError("ring keller takes no parameters")
        ring = keller_cyl(B)
    else:
        raise UsageError(f"unknown ring kind {kind!r}")
    print(f"{ring.name}: ranks " + " ".join(f"{k}:{r}" for k, r in ring.ranks().items()),
          file=out)
    if certify:
        ok = _certify_ring(ring, out)
        if kind == "horn":
            cert = certify_surjective_quasi_iso(restriction_hom(h.q, h.i, B))
            print(f"restriction {cert.summary()}", file=out)
            print(f"restriction certificate: {'pass' if cert.ok else 'FAIL'}", file=out)
            ok = ok and cert.ok
        if kind == "keller":
            iso = keller_iso_report(B)
            print(iso.summary(), file=out)
            ok = ok and iso.ok
    _emit(ring.dumps(), dump)
    return EXIT_OK if ok else EXIT_CERT


def cmd_ring(args, out) -> int:
    return _ring_report(args.kind, args.params, _coeff(args.coeff), args.certify, args.dump, out)


def cmd_horn_ring(args, out) -> int:
    h = _horn(args.q, args.i)
    B = _coeff(args.coeff)
    code = _ring_report("horn", [h.q, h.i], B, args.certify, args.dump, out)
    if args.certify:
        report = limit_iso_report(limit_ring(h.q, h.i, B))
        print(report.summary(), file=out)
        if not report.ok:
            return EXIT_CERT
    return code


def _parse_horn(text: str) -> tuple[int, int]:
    try:
        q, i = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--horn expects q,i, got {text!r}") from None
    return q, i


def cmd_fill(args, out) -> int:
    h = _horn(*_parse_horn(args.horn))
    B = _coeff(args.coeff)
    try:
        P = SemiFreePresentation.from_json(_load_json(args.presentation))
    except PresentationError as exc:
        raise UsageError(f"bad presentation: {exc}") from None
    try:
        datum = HornDatum.from_json(h, B, P, _load_json(args.faces))
        datum.validate()
    except IncompatibleHornError as exc:
        k, l = exc.pair
        print(f"incompatible horn: pair ({k},{l}), generator {exc.generator}: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad faces file: {exc}") from None
    try:
        filler = fill(datum)
    except LiftingError as exc:
        print(f"fill failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    print(f"filled {h} over {B.name}: {len(P.vars)} generators, faces "
          + " ".join(str(j) for j in sorted(datum.faces)) + " verified", file=out)
    _emit(filler.hom.dumps(), args.out or "-")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dgcyl", description="Cylinder and horn DG rings over Z, and horn filling.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("simplex", help="nondegenerate simplices of Delta^q or a horn")
    s.add_argument("q", type=int)
    s.add_argument("i", type=int, nargs="?")
    s.set_defaults(func=cmd_simplex)

    r = sub.add_parser("ring", help="build and optionally certify a ring")
    r.add_argument("kind", choices=["cyl", "horn", "keller"])
    r.add_argument("params", type=int, nargs="*")
    r.add_argument("--coeff", metavar="FILE.json")
    r.add_argument("--dump", metavar="OUT.json", help="write the ring as JSON ('-' for stdout)")
    r.add_argument("--certify", action="store_true")
    r.set_defaults(func=cmd_ring)

    h = sub.add_parser("horn-ring", help="horn ring with its restriction and limit certificates")
    h.add_argument("q", type=int)
    h.add_argument("i", type=int)
    h.add_argument("--coeff", metavar="FILE.json")
    h.add_argument("--dump", metavar="OUT.json")
    h.add_argument("--certify", action="store_true")
    h.set_defaults(func=cmd_horn_ring)

    f = sub.add_parser("fill-horn", help="fill a horn of maps A -> Cyl(B)")
    f.add_argument("--presentation", required=True, metavar="A.json")
    f.add_argument("--coeff", metavar="B.json")
    f.add_argument("--horn", required=True, metavar="q,i")
    f.add_argument("--faces", required=True, metavar="faces.json")
    f.add_argument("--out", metavar="filler.json")
    f.set_defaults(func=cmd_fill)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stderr if getattr(args, "dump", None) == "-" else sys.stdout
    if args.command == "fill-horn" and not args.out:
        out = sys.stderr
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"dgcyl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
