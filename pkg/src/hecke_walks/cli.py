"""Command line front end: ``hecke-walks <command> [options]``.

Exit codes: 0 success, 1 a verification failed (or a term budget was hit),
2 the input could not be parsed or validated.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alcove import STANDARD, Orientation
from .bernstein import Theta, Theta_minus, theta, verify_bernstein
from .hecke import BudgetExceeded, HeckeAlgebra, HeckeElement, ParameterError
from .rootdata import FLAVORS, RootDatumError, build_root_datum
from .selftest import selftest
from .walks import WalkWord, parse_steps
from .weyl import Word, WordError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    """Bad flag values; reported with exit code 2."""


def _ints(text: str | None, what: str) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def parse_orientation(spec: str, G) -> Orientation:
    """``standard | chamber:<word> | alcove-neg:<word> | alcove-pos:<word>``."""
    if spec == "standard":
        return STANDARD
    kind, sep, rest = spec.partition(":")
    kinds = {"chamber": "chamber", "alcove-neg": "alcove_negative", "alcove-pos": "alcove_positive"}
    if not sep or kind not in kinds:
        raise UsageError(f"bad orientation {spec!r}")
    letters = _ints(rest, "orientation word")
    if any(not 0 <= i <= G.rank for i in letters):
        raise UsageError(f"orientation word letters must lie in 0..{G.rank}")
    if kind == "chamber" and 0 in letters:
        raise UsageError("a chamber orientation needs a finite Weyl group element (letters 1..r)")
    return Orientation(kinds[kind], G.evaluate(letters))


def build_algebra(args) -> HeckeAlgebra:
    try:
        datum = build_root_datum(args.type, args.rank, args.flavor)
        L = _ints(args.L, "--L") or None
        return HeckeAlgebra(datum, L)
    except (RootDatumError, ParameterError) as exc:
        raise UsageError(str(exc)) from None


def _word(args, H: HeckeAlgebra) -> Word:
    G = H.group
    letters = _ints(args.word, "--word")
    if any(not 0 <= i <= G.rank for i in letters):
        raise UsageError(f"word letters must lie in 0..{G.rank}")
    idx = getattr(args, "omega", 0) or 0
    if not 0 <= idx < len(G.omega_group):
        raise UsageError(f"--omega must lie in 0..{len(G.omega_group) - 1}")
    tau = G.omega_group[idx].element
    return Word(letters, None if tau == G.identity else tau)


def _coweight(args, H: HeckeAlgebra) -> tuple[int, ...]:
    lam = _ints(args.lam, "--lambda")
    if len(lam) != H.datum.dim:
        raise UsageError(f"--lambda needs {H.datum.dim} coordinates")
    return lam


def _emit_element(h: HeckeElement, args, extra: dict | None = None) -> None:
    if args.format == "json":
        payload = h.to_dict()
        if extra:
            payload = {**extra, "element": payload}
        print(json.dumps(payload))
    else:
        for k, v in (extra or {}).items():
            print(f"{k}: {v}")
        print(h)


# -- commands ------------------------------------------------------------------------


def cmd_datum(args) -> int:
    H = build_algebra(args)
    d = H.datum
    G = H.group
    if args.format == "json":
        out = d.to_dict()
        out["omega_size"] = len(G.omega_group)
        out["coxeter_matrix"] = [list(r) for r in G.coxeter_matrix]
        print(json.dumps(out))
        return EXIT_OK
    print(f"type {d.label} ({d.flavor}), X_* of rank {d.dim}")
    print("cartan " + " ".join(str(list(r)) for r in d.cartan))
    print("positive roots " + " ".join(str(a) for a in d.positive_roots))
    print(f"highest root {d.highest_root}")
    print(f"|Omega| = {len(G.omega_group)}")
    print(f"conjugacy classes of simple reflections {list(H.ap.simple_conjugacy_classes)}")
    return EXIT_OK


def cmd_word(args) -> int:
    H = build_algebra(args)
    G = H.group
    o = parse_orientation(args.orientation, G)
    word = _word(args, H) if args.word is not None else None
    if word is None:
        if args.lam is None:
            raise UsageError("word needs --word or --lambda")
        x = G.translation(_coweight(args, H))
        word = G.reduced_word(x)
    x = G.evaluate(word)
    red = G.reduced_word(x)
    out = {
        "word": G.word_to_dict(word),
        "element": x.to_dict(),
        "length": G.length(x),
        "reduced_word": G.word_to_dict(red),
        "signs": list(H.ap.crossing_signs(word, o)),
    }
    if args.format == "json":
        print(json.dumps(out))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_psi(args) -> int:
    H = build_algebra(args)
    o = parse_orientation(args.orientation, H.group)
    word = _word(args, H)
    h = H.psi(word, o, tilde=args.tilde)
    _emit_element(h, args, {"signs": list(H.ap.crossing_signs(word, o))} if args.format == "text" else None)
    return EXIT_OK


def cmd_theta(args) -> int:
    H = build_algebra(args)
    lam = _coweight(args, H)
    if args.variant == "theta":
        h = theta(H, lam, parse_orientation(args.orientation, H.group))
    elif args.variant == "Theta":
        h = Theta(H, lam)
    else:
        h = Theta_minus(H, lam)
    _emit_element(h, args)
    return EXIT_OK


def cmd_bernstein(args) -> int:
    H = build_algebra(args)
    lam = _coweight(args, H)
    if not 1 <= args.i <= H.datum.rank:
        raise UsageError(f"--i must lie in 1..{H.datum.rank}")
    rep = verify_bernstein(H, args.i, lam)
    if args.format == "json":
        print(json.dumps({"name": rep.name, "ok": rep.ok, **rep.detail, "lhs": rep.lhs.to_dict(), "rhs": rep.rhs.to_dict()}))
    else:
        print(rep.line())
        print(f"lhs = {rep.lhs}")
        print(f"rhs = {rep.rhs}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_straighten(args) -> int:
    H = build_algebra(args)
    o = parse_orientation(args.orientation, H.group)
    try:
        steps = parse_steps(args.steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if any(st.i > H.datum.rank for st in steps):
        raise UsageError(f"step types must lie in 0..{H.datum.rank}")
    W = H.walks
    word = WalkWord(steps)
    comb = W.straighten(word, o)
    ok = H.phi(comb) == H.phi(word)
    if args.format == "json":
        print(json.dumps({"input": [s.to_dict() for s in steps], "phi_preserved": ok,
                          "terms": json.loads(W.combination_to_json(comb))}))
    else:
        for w, c in comb.items():
            print(f"{c:+d} * {w}")
        print(f"{'PASS' if ok else 'FAIL'} Phi(straighten(x)) = Phi(x)")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_svg(args) -> int:
    from .svg import render_walk

    H = build_algebra(args)
    if H.datum.rank > 2:
        raise UsageError("svg output is available for rank <= 2 only")
    o = parse_orientation(args.orientation, H.group)
    W = H.walks
    if args.steps is not None:
        try:
            word = WalkWord(parse_steps(args.steps))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not W.is_walk(word, o):
            raise UsageError(f"{word} is not an alcove walk for this orientation")
    elif args.word is not None:
        word = W.non_folded_walk(_word(args, H), o).word
    else:
        raise UsageError("svg needs --steps or --word")
    doc = render_walk(H.ap, word, o, scale=args.scale)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        print(doc)
    return EXIT_OK


def cmd_selftest(args) -> int:
    H = build_algebra(args)
    results = selftest(H, seed=args.seed)
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({"datum": H.datum.label, "flavor": H.datum.flavor, "L": list(H.L), "seed": args.seed,
                          "ok": ok, "suites": [r.to_dict() for r in results]}))
    else:
        for r in results:
            print(r.line())
        print(f"{'PASS' if ok else 'FAIL'} selftest {H.datum.label} {H.datum.flavor} L={H.L} seed={args.seed}")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "datum": cmd_datum,
    "word": cmd_word,
    "psi": cmd_psi,
    "theta": cmd_theta,
    "bernstein": cmd_bernstein,
    "straighten": cmd_straighten,
    "svg": cmd_svg,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Cartan type letter, e.g. A, C, G")
    common.add_argument("--rank", type=int, required=True)
    common.add_argument("--flavor", default="adjoint", choices=[f for f in FLAVORS if f != "explicit"])
    common.add_argument("--L", help="parameters L(s_0),...,L(s_r); default all 1")
    common.add_argument("--orientation", default="standard",
                        help="standard | chamber:<word> | alcove-neg:<word> | alcove-pos:<word>")
    common.add_argument("--format", default="text", choices=["text", "json", "svg"])
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="hecke-walks", description="Affine Hecke algebras via alcove walks.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("datum", parents=[common], help="describe the root datum")
    p = sub.add_parser("word", parents=[common], help="evaluate a word or a translation")
    p.add_argument("--word")
    p.add_argument("--omega", type=int, default=0)
    p.add_argument("--lambda", dest="lam")
    p = sub.add_parser("psi", parents=[common], help="signed T-product along a word")
    p.add_argument("--word", required=True)
    p.add_argument("--omega", type=int, default=0)
    p.add_argument("--tilde", action="store_true", help="use the normalized generators")
    p = sub.add_parser("theta", parents=[common], help="Bernstein elements")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--variant", default="theta", choices=["theta", "Theta", "Theta-minus"])
    p = sub.add_parser("bernstein", parents=[common], help="check one Bernstein relation")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p = sub.add_parser("straighten", parents=[common], help="expand a word in the walk basis")
    p.add_argument("--steps", required=True, help="e.g. c-1,c-1,f+0")
    p = sub.add_parser("svg", parents=[common], help="draw a walk (rank <= 2)")
    p.add_argument("--steps")
    p.add_argument("--word")
    p.add_argument("--omega", type=int, default=0)
    p.add_argument("--scale", type=float, default=80.0)
    p.add_argument("--output")
    sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format == "svg" and args.command != "svg":
            raise UsageError("--format svg is only meaningful for the svg command")
        return COMMANDS[args.command](args)
    except (UsageError, WordError, RootDatumError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
