"""Command-line interface.

Exit codes: 0 success, 1 precondition or range errors (and failed checks),
2 when ``decompose`` reaches no verdict, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import induced, matrix_ops as mo, verify
from .arith import NotCoprime, bezout_uv
from .engine import DecompositionProblem, NotOrdered, Verdict, decide, validate
from .fgab import FgabGroup
from .homotopy import FAMILIES, OutOfStableRange, B, SpaceSpec, U, Uquot, pi

EXIT_OK, EXIT_ERROR, EXIT_NO_VERDICT, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_ERROR


def cmd_decompose(args) -> int:
    try:
        cert = decide(DecompositionProblem(args.a, args.b, args.m, args.n, args.dim_x))
    except (NotCoprime, NotOrdered, ValueError) as e:
        return _fail(f"{type(e).__name__}: {e}")
    print(cert.to_json() if args.json else cert.summary())
    return EXIT_NO_VERDICT if cert.verdict is Verdict.NOT_GUARANTEED else EXIT_OK


def _space_from_args(args) -> SpaceSpec:
    if args.family in ("U", "SU", "PU"):
        if args.n is None:
            raise ValueError(f"{args.family} needs --n")
        s = SpaceSpec(args.family, n=args.n)
    else:
        if args.a is None or args.m is None:
            raise ValueError(f"{args.family} needs --a and --m")
        s = SpaceSpec(args.family, a=args.a, m=args.m)
    return B(s) if args.classifying else s


def cmd_pi(args) -> int:
    try:
        s = _space_from_args(args)
        print(pi(args.i, s))
    except (OutOfStableRange, ValueError) as e:
        return _fail(f"{type(e).__name__}: {e}")
    return EXIT_OK


def _times(groups: list[FgabGroup]) -> str:
    return "×".join(f"({g})" if g.ngens > 1 else str(g) for g in groups)


def _induced(args):
    i = args.i
    op = args.op
    if op == "dsum":
        return induced.dsum_star(i, args.m, args.n), [pi(i, U(args.m)), pi(i, U(args.n))]
    if op == "rsum":
        return induced.rsum_star(i, args.n, args.r), [pi(i, U(args.n))]
    if op == "tensor":
        return induced.tensor_star(i, args.m, args.n), [pi(i, U(args.m)), pi(i, U(args.n))]
    if op == "rtensor":
        return induced.rtensor_star(i, args.n, args.r), [pi(i, U(args.n))]
    if op == "stab":
        return induced.stab_star(i, args.m, args.n), [pi(i, U(args.m))]
    if op == "tensor-quot":
        f = induced.tensor_star_quot(i, args.a, args.b, args.m, args.n)
        return f, [pi(i, Uquot(args.a, args.m)), pi(i, Uquot(args.b, args.n))]
    if op == "tensor-quot-pi1":
        f = induced.tensor_star_quot_pi1(args.a, args.b, args.m, args.n)
        return f, [pi(1, Uquot(args.a, args.m)), pi(1, Uquot(args.b, args.n))]
    raise ValueError(f"unknown operation {op}")


_INDUCED_NEEDS = {
    "dsum": ("i", "m", "n"),
    "rsum": ("i", "n", "r"),
    "tensor": ("i", "m", "n"),
    "rtensor": ("i", "n", "r"),
    "stab": ("i", "m", "n"),
    "tensor-quot": ("i", "a", "b", "m", "n"),
    "tensor-quot-pi1": ("a", "b", "m", "n"),
}


def cmd_induced(args, parser) -> int:
    missing = [k for k in _INDUCED_NEEDS[args.op] if getattr(args, k) is None]
    if missing:
        parser.error(f"{args.op} needs " + ", ".join(f"--{k}" for k in missing))
    try:
        f, factors = _induced(args)
    except (OutOfStableRange, ValueError) as e:
        return _fail(f"{type(e).__name__}: {e}")
    print(f"{f.render()} : {_times(factors)} → {f.target}")
    return EXIT_OK


def cmd_trcheck(args) -> int:
    a, b, m, n = args.a, args.b, args.m, args.n
    try:
        validate(a, b, m, n)
        w = bezout_uv(a, b, m, n)
        N = mo.tr_dimension(w, a, b, m, n)
        mo.check_cap(N, args.cap)
    except (NotCoprime, NotOrdered, mo.DimensionOverflow) as e:
        return _fail(f"{type(e).__name__}: {e}")
    tol = mo.tolerance(N, args.tol_scale)
    rng = np.random.default_rng(args.seed)
    eye = np.eye(N)
    descent = 0.0
    for p in range(m):
        for q in range(n):
            A = mo.central_scalar(mo.CentralElement(m, p, a * m))
            Bm = mo.central_scalar(mo.CentralElement(n, q, b * n))
            X = mo.tr_apply(A, Bm, w, a, b, m, n, cap=args.cap)
            descent = max(descent, mo.frobenius_deviation(X, eye))
    hom = 0.0
    for _ in range(args.trials):
        A1, A2 = mo.random_unitary(a * m, rng), mo.random_unitary(a * m, rng)
        B1, B2 = mo.random_unitary(b * n, rng), mo.random_unitary(b * n, rng)
        lhs = mo.tr_apply(A1 @ A2, B1 @ B2, w, a, b, m, n, cap=args.cap)
        rhs = mo.tr_apply(A1, B1, w, a, b, m, n, cap=args.cap) @ mo.tr_apply(A2, B2, w, a, b, m, n, cap=args.cap)
        hom = max(hom, mo.frobenius_deviation(lhs, rhs))
    ok = descent < tol and hom < tol
    print(f"N = {N}, u = {w.u}, v = {w.v}, seed = {args.seed}, tol = {tol:.3g}")
    print(f"descent: {m * n} central pairs, max deviation from I_N = {descent:.3e}")
    print(f"homomorphism: {args.trials} random pairs, max deviation = {hom:.3e}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_verify(args) -> int:
    print(f"seed = {args.seed}, trials = {args.trials}, tol-scale = {args.tol_scale}")
    all_ok = True
    for name, results in verify.run(args.suite, args.trials, args.seed, args.tol_scale):
        print(f"[{name}]")
        for r in results:
            print("  " + r.line())
            all_ok &= r.ok
    print("ALL PASS" if all_ok else "FAILURES")
    return EXIT_OK if all_ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="azdecomp", description="Tensor decomposition certificates for Azumaya algebras")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decompose", help="decide liftability and print a certificate")
    for k in ("a", "b", "m", "n"):
        d.add_argument(k, type=int)
    d.add_argument("dim_x", type=int, metavar="dimX")
    d.add_argument("--json", action="store_true", help="print the JSON certificate")

    q = sub.add_parser("pi", help="homotopy group of a unitary-type group")
    q.add_argument("family", choices=FAMILIES)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--a", type=int)
    q.add_argument("--m", type=int)
    q.add_argument("-B", "--classifying", action="store_true", help="use the classifying space")

    ind = sub.add_parser("induced", help="induced map on homotopy groups")
    ind.add_argument("op", choices=sorted(_INDUCED_NEEDS))
    for k in ("i", "a", "b", "m", "n", "r"):
        ind.add_argument(f"--{k}", type=int)

    t = sub.add_parser("trcheck", help="numeric checks of the splitting homomorphism")
    for k in ("a", "b", "m", "n"):
        t.add_argument(k, type=int)
    t.add_argument("--trials", type=int, default=20)
    t.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    t.add_argument("--cap", type=int, default=mo.DEFAULT_DIM_CAP)
    t.add_argument("--tol-scale", type=float, default=1.0)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("suite", choices=["matrix", "fgab", "engine", "all"])
    v.add_argument("--trials", type=int, default=25)
    v.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    v.add_argument("--tol-scale", type=float, default=1.0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "decompose":
        return cmd_decompose(args)
    if args.command == "pi":
        return cmd_pi(args)
    if args.command == "induced":
        return cmd_induced(args, parser)
    if args.command == "trcheck":
        return cmd_trcheck(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
