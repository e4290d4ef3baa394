"""Command-line interface: ``shiftedpr <command> ...``.

Exit codes: 0 success (or all checks passed), 1 a verification failed,
2 usage or input error. Errors go to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import hopf, insertion, qsym, schur
from .combinat import PeakSet, parse_partition
from .config import CapExceeded, degree_cap
from .freemodule import LinComb, to_json
from .tableaux import compact, from_json, parse_compact, render
from .tableaux import to_json as tableau_json
from .verify import SUITES, VerifyConfig, run_suite
from .words import format_word, parse_permutation


class UsageError(ValueError):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _format_comb(x: LinComb, fmt=None) -> str:
    if not x:
        return "0"
    fmt = fmt or (lambda k: repr(k))
    parts = []
    for k, c in x.sorted_items():
        coeff = "" if c == 1 else f"{c} "
        parts.append(f"{coeff}{fmt(k)}")
    return "\n".join(parts)


def _key_text(k) -> str:
    if hasattr(k, "rows"):
        return f"<{compact(k)}>"
    if isinstance(k, PeakSet):
        return f"{{{','.join(map(str, k.elems))}}}_{k.n}"
    if isinstance(k, tuple) and len(k) == 2 and not all(isinstance(v, int) for v in k):
        return f"{_key_text(k[0])} (x) {_key_text(k[1])}"
    if isinstance(k, tuple):
        return format_word(k) if k else "()"
    return str(k)


# --- insert / class / render ---------------------------------------------------


def cmd_insert(args) -> int:
    w = parse_permutation(args.word)
    if args.mode == "classical":
        P, Q = insertion.schensted(w)
    elif args.mode == "mixed":
        P, Q = insertion.mixed(w)
    else:
        res = insertion.sagan_worley(w, keep_trace=args.trace)
        P, Q = res.P, res.Q
        if args.trace and not args.json:
            for i, step in enumerate(res.trace, 1):
                flag = " (non-Schensted)" if step.non_schensted else ""
                print(f"step {i}: insert {step.letter} -> box {step.box}{flag}")
                print(f"  P = {compact(step.P)}    Q = {compact(step.Q)}")
    payload = {"word": list(w), "mode": args.mode, "P": tableau_json(P), "Q": tableau_json(Q)}
    _emit(args, payload, f"P:\n{render(P)}\nQ:\n{render(Q)}")
    return 0


def cmd_class(args) -> int:
    w = parse_permutation(args.word)
    cls = insertion.shifted_knuth_class(w) if args.shifted else insertion.knuth_class(w)
    P = insertion.P_SW(w) if args.shifted else insertion.P_RS(w)
    words = sorted(cls)
    payload = {"word": list(w), "shifted": args.shifted, "P": tableau_json(P), "size": len(words),
               "class": [list(v) for v in words]}
    _emit(args, payload, f"P = {compact(P)}\n{len(words)} words: " + " ".join(map(format_word, words)))
    return 0


def cmd_render(args) -> int:
    if args.tableau is not None:
        try:
            T = from_json(args.tableau)
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"bad tableau JSON: {exc}") from None
    else:
        T = parse_compact(args.compact, shifted=not args.young)
    _emit(args, tableau_json(T), render(T))
    return 0


# --- hopf ---------------------------------------------------------------------------


def _operand(text: str, algebra: str):
    w = parse_permutation(text)
    if algebra in ("MR", "MR'"):
        return w
    return insertion.P_SW(w)


def cmd_hopf(args) -> int:
    alg = args.algebra
    xs = [_operand(t, alg) for t in args.operands]
    if args.op == "mul":
        if len(xs) != 2:
            raise UsageError("mul needs two operands")
        a, b = xs
        if alg == "MR":
            out = hopf.mr_product(a, b)
        elif alg == "MR'":
            out = hopf.mr_prime_product(a, b)
        elif alg == "SPR":
            # right PR-action: the second operand names the Knuth class [P(w')]
            out = hopf.spr_module_action(a, insertion.P_RS(parse_permutation(args.operands[1])))
        else:
            out = hopf.sprp_product(a, b)
    else:
        if len(xs) != 1:
            raise UsageError("comul needs one operand")
        (a,) = xs
        out = {"MR": hopf.mr_coproduct, "MR'": hopf.mr_prime_coproduct,
               "SPR": hopf.spr_coproduct, "SPR'": hopf.sprp_coproduct}[alg](a)
    _emit(args, {"algebra": alg, "op": args.op, **to_json(out)}, _format_comb(out, _key_text))
    return 0


# --- symmetric functions ---------------------------------------------------------------

FAMILIES = {
    "schur": schur.schur,
    "schurP": schur.schurP,
    "schurQ": schur.schurQ,
    "S": schur.modified_schur,
    "h": schur.h_product,
    "q": schur.q_product,
}


def cmd_expand(args) -> int:
    lam = parse_partition(args.partition)
    x = FAMILIES[args.family](lam)
    out = schur.expand(x, args.basis)
    payload = to_json(out, key_name="index")
    _emit(args, payload, _format_comb(out, _index_text))
    return 0


def _index_text(k) -> str:
    if isinstance(k, PeakSet):
        return f"K[{{{','.join(map(str, k.elems))}}}]"
    return "[" + ",".join(map(str, k)) + "]"


def cmd_lr(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if args.shifted:
        out = schur.shifted_LR(lam, mu)
    else:
        out = schur.expand(qsym.qsym_product(schur.schur(lam), schur.schur(mu)), "schur")
    payload = {"shifted": args.shifted, "lambda": list(lam), "mu": list(mu), **to_json(out, key_name="index")}
    name = "P" if args.shifted else "s"
    text = " + ".join(f"{'' if c == 1 else c}{name}{_index_text(k)}" for k, c in out.sorted_items()) or "0"
    _emit(args, payload, text)
    return 0


def _parse_element(spec: str) -> LinComb:
    """``R:2,1`` ``H:3`` ``F:1,2`` ``M:3`` ``s:2,1`` ``P:3,1`` ``Q:3`` ``Pi:5:2,4`` ``K:5:3``."""
    name, _, rest = spec.partition(":")
    if not rest and name not in ("Pi", "K"):
        raise UsageError(f"element {spec!r} needs the form NAME:INDEX")
    if name in ("Pi", "K"):
        n_text, _, elems = rest.partition(":")
        try:
            n = int(n_text)
            P = PeakSet(n, tuple(int(e) for e in elems.split(",") if e))
        except ValueError as exc:
            raise UsageError(f"bad peak set {spec!r}: {exc}") from None
        return LinComb({P: 1}, basis="peakset" if name == "Pi" else "K")
    alpha = parse_partition(rest)
    if name in ("R", "H", "F", "M"):
        return LinComb.monomial(alpha, basis=name)
    makers = {"s": schur.schur, "P": schur.schurP, "Q": schur.schurQ, "S": schur.modified_schur}
    if name not in makers:
        raise UsageError(f"unknown element kind {name!r}")
    return makers[name](alpha)


def cmd_pairing(args) -> int:
    left, right = _parse_element(args.left), _parse_element(args.right)
    if left.basis in ("H", "R"):
        value = qsym.pairing_qsym_nsym(left, qsym.to_F(right) if right.basis != "M" else right)
        kind = "<NSym, QSym>"
    elif left.basis == "peakset":
        if args.omega:
            value = schur.omega_pairing(schur.phi_peak_via_nsym(left), qsym.to_F(right))
            kind = "[phi(Peak), Omega]"
        else:
            value = schur.pairing_peak(left, qsym.to_F(right))
            kind = "[Peak, Peak*]"
    elif args.omega:
        value = schur.omega_pairing(qsym.to_F(left), qsym.to_F(right))
        kind = "[Omega, Omega]"
    else:
        value = schur.hall_pairing(qsym.to_F(left), qsym.to_F(right))
        kind = "<Lambda, Lambda>"
    _emit(args, {"left": args.left, "right": args.right, "pairing": kind, "value": value}, str(value))
    return 0


# --- verify ------------------------------------------------------------------------------


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    cfg = VerifyConfig.capped(args.cap, workers=args.workers, seed=args.seed, timing=not args.no_timing)
    reports = []
    for name in names:
        rep = run_suite(name, cfg)
        reports.append(rep)
        if not args.json:
            print(rep.to_text(), flush=True)
    if args.json:
        data = [r.to_json() for r in reports]
        print(json.dumps(data[0] if len(data) == 1 else data))
    return 0 if all(r.passed for r in reports) else 1


# --- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="shiftedpr", description="Shifted insertion, shifted PR algebras and peak functions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("insert", parents=[common], help="insertion tableaux of a permutation")
    s.add_argument("word", help='one-line permutation, e.g. 612543 or "10,2,1,..."')
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--shifted", dest="mode", action="store_const", const="shifted", help="Sagan-Worley (default)")
    mode.add_argument("--classical", dest="mode", action="store_const", const="classical", help="Schensted")
    mode.add_argument("--mixed", dest="mode", action="store_const", const="mixed", help="Haiman mixed insertion")
    s.add_argument("--trace", action="store_true", help="print every insertion step (shifted mode)")
    s.set_defaults(func=cmd_insert, mode="shifted")

    s = sub.add_parser("class", parents=[common], help="Knuth or shifted Knuth class of a permutation")
    s.add_argument("word")
    s.add_argument("--shifted", action="store_true")
    s.set_defaults(func=cmd_class)

    s = sub.add_parser("hopf", parents=[common], help="products and coproducts in MR, MR', SPR, SPR'")
    s.add_argument("op", choices=["mul", "comul"])
    s.add_argument("operands", nargs="+", help="permutations; for SPR/SPR' they name the class of P_SW(w)")
    s.add_argument("--algebra", choices=["MR", "MR'", "SPR", "SPR'"], default="MR")
    s.set_defaults(func=cmd_hopf)

    s = sub.add_parser("expand", parents=[common], help="expand a symmetric function in a basis")
    s.add_argument("family", choices=sorted(FAMILIES))
    s.add_argument("partition", help='e.g. "3,2"')
    s.add_argument("--basis", default="F", choices=["F", "M", "schur", "schurP", "schurQ", "K", "h", "q"])
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("--shifted", action="store_true", help="Schur P coefficients b^nu_{lam,mu}")
    s.set_defaults(func=cmd_lr)

    s = sub.add_parser("pairing", parents=[common], help="evaluate a Hopf pairing")
    s.add_argument("left", help="R:a, H:a, Pi:n:P, s:lam, P:lam, Q:lam")
    s.add_argument("right", help="F:a, M:a, K:n:P, s:lam, P:lam, Q:lam")
    s.add_argument("--omega", action="store_true", help="use [.,.] on Omega instead of the Hall pairing")
    s.set_defaults(func=cmd_pairing)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite", help=f"all or one of: {', '.join(SUITES)}")
    s.add_argument("--cap", type=int, default=None, help=f"clamp every degree budget (env default {degree_cap()})")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 (byte-identical output)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="pretty-print a tableau")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--tableau", help='JSON, e.g. {"shape":[2,1],"rows":[[{"v":1},{"v":2,"p":true}],[{"v":3}]]}')
    src.add_argument("--compact", help="row form such as \"1 2' 4 / 3\"")
    s.add_argument("--young", action="store_true", help="read --compact as an unshifted tableau")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, CapExceeded) as exc:
        print(f"shiftedpr: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
