"""Command-line front end.

Every subcommand builds a Report (command, inputs, outputs, status) and prints
it either as a small table or, with --json, as a versioned JSON document.
Exact rationals are written as "p/q" strings; floats carry their tolerance.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import bethe, centralizer, e6, faces, hahn, symmetry, tridiag, weights
from .errors import Su3LabelError, Underdetermined

SCHEMA = "su3label.report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


# --- serialization ------------------------------------------------------

@dataclass
class Real:
    value: float
    tol: float
    digits: int = 15


def rational_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def encode(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, Real):
        return {"value": f"{obj.value:.{obj.digits}g}", "tol": obj.tol}
    if isinstance(obj, float):
        return {"value": f"{obj:.15g}", "tol": None}
    if isinstance(obj, complex):
        return {"re": f"{obj.real:.15g}", "im": f"{obj.imag:.15g}"}
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return encode(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    status: str = "ok"

    def to_dict(self):
        return {"schema": SCHEMA, "command": self.command, "inputs": encode(self.inputs),
                "outputs": encode(self.outputs), "status": self.status}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self):
        d = self.to_dict()
        lines = [f"command: {d['command']}", f"status:  {d['status']}"]
        for k, v in d["inputs"].items():
            lines.append(f"  in  {k}: {_flat(v)}")
        for k, v in d["outputs"].items():
            lines.append(f"  out {k}: {_flat(v)}")
        return "\n".join(lines)


def _flat(v):
    if isinstance(v, dict) and set(v) == {"value", "tol"}:
        return v["value"]
    if isinstance(v, list) and len(v) > 12 and all(not isinstance(x, (list, dict)) for x in v):
        return f"[{', '.join(map(str, v[:12]))}, ... ({len(v)} items)]"
    return json.dumps(v) if isinstance(v, (list, dict)) else str(v)


# --- helpers ------------------------------------------------------------

def _env_int(name, default):
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        return default


def _params(args):
    return weights.as_params(args.m)


def _root_arg(text: str) -> tuple:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return e6.root(text)


def _sign_arg(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError("sign must be + or -")


def _tri(T):
    return {"diag": list(T.diag), "super": list(T.sup), "sub": list(T.sub)}


def _spec_out(T, tol):
    s = tridiag.spectrum(T, tol)
    return [e if e is not None else Real(v, tol) for v, e in zip(s.values, s.exact)]


# --- subcommands --------------------------------------------------------

def cmd_multiplicity(args, rep):
    m = _params(args)
    rep.outputs["multiplicity"] = weights.multiplicity(m)
    l, n = weights.derive_ln(m)
    rep.outputs.update(l=l, n=n)
    if args.oracle:
        bound = _env_int("SU3LABEL_ORACLE_BOUND", 12)
        o = weights.lr_oracle((m.m1, m.m2), (m.mp1, m.mp2), (m.mpp1, m.mpp2), bound=bound)
        rep.outputs["oracle"] = o
        if o != rep.outputs["multiplicity"]:
            rep.status = "fail"


def cmd_arrangement(args, rep):
    arr = weights.arrangement(_params(args))
    rep.outputs.update(left=arr.left, right=arr.right,
                       line_sums_left=arr.line_sums("left"), line_sums_right=arr.line_sums("right"))


def cmd_spectrum(args, rep):
    m = _params(args)
    T = tridiag.build_X(m) if args.operator == "X" else tridiag.build_Y(m)
    rep.inputs.update(operator=args.operator, tol=args.tol)
    rep.outputs["matrix"] = _tri(T)
    rep.outputs["eigenvalues"] = _spec_out(T, args.tol)
    if args.exact_charpoly:
        rep.outputs["charpoly_ascending"] = list(tridiag.char_poly(T).coeffs)


def cmd_symmetry(args, rep):
    m = _params(args)
    if args.action == "orbit":
        rep.outputs["orbit"] = sorted(tuple(p) for p in symmetry.orbit(m))
        return
    elems = [symmetry.SymmetryElement.parse(args.element)] if args.element else symmetry.enumerate_group()
    failures, skipped = [], []
    for e in elems:
        try:
            r = symmetry.verify_equivalence(m, e)
        except Su3LabelError:
            skipped.append(e.label())  # image not integral: nothing to compare
            continue
        if not r.ok:
            failures.append(e.label())
    rep.outputs.update(checked=len(elems) - len(skipped), skipped=skipped, failures=failures)
    if failures:
        rep.status = "fail"


def cmd_verify_algebra(args, rep):
    m = _params(args)
    X, Y = tridiag.build_X(m).dense(), tridiag.build_Y(m).dense()
    c = centralizer.structure_constants(m)
    d = centralizer.verify_relations(X, Y, c)
    exact = {k: getattr(c, k) for k in ("a2", "a5", "a6", "a8", "a9", "a12")}
    rep.outputs.update(constants=exact, defects={"b": d.b, "c": d.c, "d": d.d})
    try:
        fitted = centralizer.fit_constants_from_rep(X, Y)
    except Underdetermined:
        fitted = {}
    rep.outputs["fitted"] = fitted
    mismatch = sorted(k for k, v in fitted.items() if v != exact[k])
    rep.outputs["fit_mismatch"] = mismatch
    if not d.ok or mismatch:
        rep.status = "fail"


def cmd_e6(args, rep):
    if args.action == "roots":
        rs = e6.generate_roots()
        rep.outputs.update(count=len(rs.roots), positive=len(rs.positive), highest=e6.THETA,
                           positive_roots=[e6.root_label(r) for r in rs.positive])
    elif args.action == "weyl-order":
        rep.outputs["order"] = len(e6.weyl_group())
    elif args.action == "subgroup":
        sub = e6.missing_label_subgroup()
        stab = e6.set_stabilizer(e6.coefficient_one_roots())
        rep.outputs.update(order=len(sub), stabilizer_order=len(stab),
                           coefficient_one=[e6.root_label(r) for r in e6.coefficient_one_roots()])
    else:
        poset = e6.root_poset()
        rep.outputs["nodes"] = len(poset["nodes"])
        rep.outputs["covers"] = sorted([e6.root_label(b), e6.root_label(c), i] for b, c, i in poset["edges"])


def _face_from(args, m=None):
    if args.root is None:
        if m is None:
            raise SystemExit("--root is required here")
        return faces.physical_face(m)[0]
    return faces.face(_root_arg(args.root), args.k, args.sign)


def cmd_faces(args, rep):
    if args.action == "list":
        fs = faces.enumerate_faces()
        rep.outputs.update(count=len(fs), distinct=len({f.key() for f in fs}))
        rep.outputs["faces"] = [{"root": e6.root_label(f.orthogonal_root), "k": f.k, "sign": f.sign,
                                 "xi": [e6.root_label(r) for r in f.roots]} for f in fs]
        return
    if args.m is None:
        raise SystemExit("faces verify needs six parameters")
    m = _params(args)
    f = _face_from(args, m)
    rep.inputs.update(root=e6.root_label(f.orthogonal_root), k=f.k, sign=f.sign, center=args.center)
    defects = faces.verify_window(f, m, args.center)
    rep.outputs["defects"] = list(defects)
    if any(defects):
        rep.status = "fail"


def cmd_hahn(args, rep):
    m = _params(args)
    Xp, Yp, H1, H2, eta, z = hahn.compose_for_params(m)
    X, Y = tridiag.build_X(m).dense(), tridiag.build_Y(m).dense()
    res = hahn.hahn_algebra_check(H1, H2, eta)
    ok_x, ok_y = Xp == X, Yp == Y
    rep.outputs.update(eta=list(eta.eta), z=list(z.z), X_matches=ok_x, Y_matches=ok_y,
                       hahn_residuals_zero=all(r == 0 for r in _flatten(res)))
    if not (ok_x and ok_y and rep.outputs["hahn_residuals_zero"]):
        rep.status = "fail"


def _flatten(x):
    if isinstance(x, (list, tuple)):
        for y in x:
            yield from _flatten(y)
    else:
        yield x


def cmd_bethe(args, rep):
    if args.action == "examples":
        rep.outputs.update(_bethe_examples())
        if any(v > 1e-12 for v in rep.outputs["max_residuals"].values()):
            rep.status = "fail"
        return
    if args.m is None:
        raise SystemExit(f"bethe {args.action} needs six parameters")
    m = _params(args)
    cfg = bethe.BetheConfig.from_params(m)
    if args.action == "residual":
        r = bethe.BetheRoots(tuple(complex(x) for x in args.nu), tuple(complex(x) for x in args.lam))
        res = bethe.bethe_residual(cfg, r)
        ev = bethe.eigenvalue_from_roots(cfg, r, float(tridiag.xsca(m)))
        rep.outputs.update(residuals=[Real(x, 0.0) for x in res], eigenvalue=complex(ev))
        return
    cap = _env_int("SU3LABEL_SOLVER_CAP", 5)
    out = bethe.numeric_solve(m, bethe.SolveOptions(seeds=args.seeds, cap=cap))
    rep.outputs.update(expected=out.expected, recovered=[Real(v, 1e-8) for v in out.recovered],
                       complete=out.complete,
                       solutions=[{"nu": list(s.roots.nu), "lambda": list(s.roots.lam),
                                   "eigenvalue": complex(s.eigenvalue), "residual": Real(s.residual, 0.0)}
                                  for s in out.solutions])
    if not out.complete:
        rep.status = "incomplete"


def _bethe_examples():
    res = {"example1": 0.0, "example2": 0.0, "example3": 0.0}
    for p in range(1, 5):
        for q in range(1, 5):
            m = tridiag.example2_params(p, q)
            cfg = bethe.BetheConfig.from_params(m)
            for r in bethe.example2_roots(p, q):
                res["example2"] = max(res["example2"], *bethe.bethe_residual(cfg, r))
    for L in range(2, 5):
        for p in range(L - 1, 5):
            for q in range(p, 5):
                cfg = bethe.BetheConfig.from_params(tridiag.example3_params(L, p, q))
                for nu in bethe.example3_nu(L, p, q):
                    y2 = bethe.example3_y2(L, p, q, nu)
                    r = bethe.BetheRoots((nu,), tuple(complex(z) for z in _roots(y2)))
                    res["example3"] = max(res["example3"], *bethe.bethe_residual(cfg, r))
    for m in itertools.product(range(1, 5), repeat=6):
        if not weights.is_physical(m):
            continue
        cfg = bethe.BetheConfig.from_params(m)
        if cfg.l != 1 or cfg.n < 2:
            continue
        try:
            y1 = bethe.example1_polynomial(cfg)
        except ValueError:
            continue
        r = bethe.BetheRoots(tuple(complex(z) for z in _roots(y1)), ())
        res["example1"] = max([res["example1"], *bethe.bethe_residual(cfg, r)])
    return {"max_residuals": res}


def _roots(p):
    import numpy as np
    return np.polynomial.polynomial.polyroots([complex(c) for c in p]) if len(p) > 1 else []


def cmd_rep(args, rep):
    m = _params(args)
    f = _face_from(args, m)
    rep.inputs.update(root=e6.root_label(f.orthogonal_root), k=f.k, sign=f.sign, window=args.window)
    X, Y = faces.extract_finite(f, m, args.window)
    rep.outputs.update(X=X, Y=Y)
    X0, Y0 = tridiag.build_X(m).dense(), tridiag.build_Y(m).dense()
    if len(X) == len(X0):
        rep.outputs["similar_to_physical"] = (faces.diagonally_similar(X, X0)
                                              and faces.diagonally_similar(Y, Y0))


# --- parser -------------------------------------------------------------

def _add_m(p, optional=False):
    p.add_argument("m", type=int, nargs=6 if not optional else "*", metavar="M",
                   help="m1 m2 m'1 m'2 m''1 m''2")


def build_parser():
    ap = argparse.ArgumentParser(prog="su3label", description="Missing-label toolkit for su(3) tensor products")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiplicity")
    _add_m(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the weight-diagram oracle")
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("arrangement")
    _add_m(p)
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("spectrum")
    _add_m(p)
    p.add_argument("--operator", choices=("X", "Y"), default="X")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--exact-charpoly", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("symmetry")
    p.add_argument("action", choices=("orbit", "verify"))
    _add_m(p)
    p.add_argument("--element", help="normal form such as C213.L123.T1.S0 (default: all 144)")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("verify-algebra")
    _add_m(p)
    p.set_defaults(func=cmd_verify_algebra)

    p = sub.add_parser("e6")
    p.add_argument("action", choices=("roots", "weyl-order", "subgroup", "poset"))
    p.set_defaults(func=cmd_e6)

    for name, func in (("faces", cmd_faces), ("rep", cmd_rep)):
        p = sub.add_parser(name)
        p.add_argument("action", choices=("list", "verify") if name == "faces" else ("extract",))
        _add_m(p, optional=True)
        p.add_argument("--root", help="positive root as label (e.g. 12346) or comma list; "
                       "default: the face carrying the physical representation")
        p.add_argument("--k", type=int, default=0)
        p.add_argument("--sign", type=_sign_arg, default=1)
        if name == "faces":
            p.add_argument("--center", type=int, default=0)
        else:
            p.add_argument("--window", type=int, default=3)
        p.set_defaults(func=func)

    p = sub.add_parser("hahn")
    p.add_argument("action", choices=("verify",))
    _add_m(p)
    p.set_defaults(func=cmd_hahn)

    p = sub.add_parser("bethe")
    p.add_argument("action", choices=("residual", "examples", "solve"))
    _add_m(p, optional=True)
    p.add_argument("--nu", nargs="*", default=[])
    p.add_argument("--lam", nargs="*", default=[])
    p.add_argument("--seeds", type=int, default=60)
    p.set_defaults(func=cmd_bethe)
    return ap


def run(argv=None, stream=None) -> int:
    stream = stream or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    args.m = getattr(args, "m", None) or None
    if args.m is not None and len(args.m) != 6:
        ap.error("expected exactly six integer parameters")
    rep = Report(args.command, inputs={"m": list(args.m) if args.m else None})
    code = EXIT_OK
    try:
        args.func(args, rep)
        if rep.status != "ok":
            code = EXIT_FAIL
    except Su3LabelError as exc:
        rep.status = "error"
        rep.outputs = {"error": {"type": type(exc).__name__, "code": exc.code, "message": str(exc)}}
        code = EXIT_ERROR
    print(rep.to_json() if args.json else rep.to_table(), file=stream)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
