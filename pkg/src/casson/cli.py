"""Command line entry point: ``casson <verb> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on invalid
input.  All output is JSON on stdout with a fixed key order.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import io
from .cocycle import cocycle_value, eval_J, minus_id_homomorphism_obstruction, uniqueness_certificate
from .engine import (CONVENTIONS, alexander_from_seifert, casson_surgery, connected_sum,
                     default_sign, eval_F, half_second_derivative)
from .errors import CassonError
from .freegroup import magnus_identity_check, suzuki_check
from .johnson import classify_tau, h1_action, is_torelli, lantern_check, tau
from .symplectic import HomologyVector

SCHEMA = 1
MAX_GENUS = 6


def report(command: str, genus: Optional[int], results: Dict[str, Any],
           passed: Optional[bool] = None, failures: Optional[List[Any]] = None) -> Dict[str, Any]:
    out: Dict[str, Any] = {"schema": SCHEMA, "command": command, "genus": genus}
    out.update(results)
    if passed is not None:
        out["passed"] = passed
        out["failures"] = failures or []
    return out


def _emit(doc: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _sign(args) -> int:
    if args.sign is not None:
        return args.sign
    if args.convention is not None:
        return CONVENTIONS[args.convention]
    return default_sign()


def cmd_eval(args) -> int:
    w = io.parse_annotated(io.load_json(args.word))
    F = eval_F(w)
    _emit(report("eval", w.genus, {"F": F, "lambda": _sign(args) * F,
                                   "tau": io.tau_to_json(w.tau())}))
    return 0


def cmd_johnson(args) -> int:
    word = io.parse_word(io.load_json(args.word))
    if not is_torelli(word):
        raise CassonError("word does not act trivially on homology")
    t = tau(word)
    _emit(report("johnson", word.genus, {"tau": io.tau_to_json(t),
                                         "compatible_sides": list(classify_tau(t))}))
    return 0


def cmd_cocycle(args) -> int:
    u = io.parse_tau_or_word(io.load_json(args.first))
    v = io.parse_tau_or_word(io.load_json(args.second))
    _emit(report("cocycle", u.genus, {"J": eval_J(u, v), "cocycle": cocycle_value(u, v)}))
    return 0


def cmd_surgery(args) -> int:
    V = io.parse_seifert(io.load_json(args.seifert))
    delta = alexander_from_seifert(V)
    sign = args.sign if args.sign is not None else 1
    _emit(report("surgery", None, {
        "alexander": delta.to_json(),
        "alexander_str": str(delta),
        "half_second_derivative": half_second_derivative(delta),
        "n": args.n,
        "lambda": casson_surgery(V, args.n, sign),
    }))
    return 0


def cmd_connected_sum(args) -> int:
    w1 = io.parse_annotated(io.load_json(args.first))
    w2 = io.parse_annotated(io.load_json(args.second))
    s = connected_sum(w1, w2)
    doc = io.annotated_to_json(s)
    if args.output:
        Path(args.output).write_text(json.dumps(doc, indent=2) + "\n")
    _emit(report("connected-sum", s.genus, {
        "F": eval_F(s), "F_first": eval_F(w1), "F_second": eval_F(w2),
        "output": args.output, "word": None if args.output else doc}))
    return 0


def _guard(genus: int, low: int) -> None:
    if not low <= genus <= MAX_GENUS:
        raise CassonError(f"genus must be between {low} and {MAX_GENUS}, got {genus}")


def _verify(args) -> Dict[str, Any]:
    g = args.genus
    what = args.what
    if what == "unique-cocycle":
        _guard(g, 3)
        rep = uniqueness_certificate(g, relaxed=args.relaxed)
        ok = (rep.dimension == 2 and rep.contains_J and rep.contains_Jt) if args.relaxed \
            else (rep.dimension == 1 and rep.matches_J)
        return report("verify unique-cocycle", g, rep.to_json(), ok,
                      [] if ok else [{"dimension": rep.dimension}])
    if what == "minus-id":
        _guard(g, 3)
        rep = minus_id_homomorphism_obstruction(g)
        return report("verify minus-id", g, {"checked": rep.checked}, rep.passed,
                      [list(t) for t in rep.failures])
    if what == "lantern":
        _guard(g, 1)
        if args.classes:
            doc = io.load_json(args.classes)
            gg = doc.get("genus", g)
            _guard(gg, 1)
            cs = [io.parse_vector(c, gg) for c in doc["classes"]]
            if len(cs) != 3:
                raise CassonError("lantern needs exactly three classes")
        else:
            if g < 3:
                raise CassonError("default lantern configuration needs genus >= 3")
            cs = [HomologyVector.b(i, g) for i in (1, 2, 3)]
        rep = lantern_check(*cs)
        return report("verify lantern", cs[0].genus, rep.to_json(), rep.passed,
                      [] if rep.passed else [rep.discrepancy.to_json()])
    if what == "magnus":
        _guard(g, 2)
        rep = magnus_identity_check(g)
        return report("verify magnus", g, rep.to_json(), rep.passed, rep.to_json()["witnesses"])
    if what == "suzuki":
        _guard(g, 3)
        rep = suzuki_check(g)
        return report("verify suzuki", g, rep.to_json(), rep.passed, rep.to_json()["witnesses"])
    if what == "suite":
        _guard(g, 3)
        from .suite import run_suite
        results = run_suite(g, args.seed)
        ok = all(r.passed for r in results)
        return report("verify suite", g, {"seed": args.seed,
                                          "checks": [r.to_json() for r in results]}, ok,
                      [r.name for r in results if not r.passed])
    raise CassonError(f"unknown verification {what!r}")


def cmd_verify(args) -> int:
    doc = _verify(args)
    _emit(doc)
    return 0 if doc["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="casson", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def sign_opts(sp):
        sp.add_argument("--convention", choices=sorted(CONVENTIONS),
                        help="lambda: lambda = -F (default); f: lambda = F")
        sp.add_argument("--sign", type=int, choices=(1, -1),
                        help="explicit sign with lambda = sign * F; overrides --convention")

    e = sub.add_parser("eval", help="F and lambda of an annotated gluing word")
    e.add_argument("--word", required=True)
    sign_opts(e)
    e.set_defaults(func=cmd_eval)

    j = sub.add_parser("johnson", help="tau of a Torelli word with its W-splitting")
    j.add_argument("--word", required=True)
    j.set_defaults(func=cmd_johnson)

    c = sub.add_parser("cocycle", help="J and 2J of two tau vectors or word files")
    c.add_argument("first")
    c.add_argument("second")
    c.set_defaults(func=cmd_cocycle)

    s = sub.add_parser("surgery", help="Casson invariant of 1/n surgery on a knot")
    s.add_argument("--seifert", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sign", type=int, choices=(1, -1),
                   help="sign making trefoil 1-surgery equal to sign (default +1)")
    s.set_defaults(func=cmd_surgery)

    cs = sub.add_parser("connected-sum", help="splice two gluing words")
    cs.add_argument("first")
    cs.add_argument("second")
    cs.add_argument("-o", "--output")
    cs.set_defaults(func=cmd_connected_sum)

    v = sub.add_parser("verify", help="run a verification")
    v.add_argument("what", choices=["unique-cocycle", "lantern", "magnus", "suzuki",
                                    "minus-id", "suite"])
    v.add_argument("--genus", type=int, default=3)
    v.add_argument("--relaxed", action="store_true",
                   help="unique-cocycle: allow both W_A x W_B and W_B x W_A blocks")
    v.add_argument("--classes", help="lantern: JSON file {genus, classes: [c1, c2, c3]}")
    v.add_argument("--seed", type=int, default=0, help="suite: random seed")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except CassonError as exc:
        sys.stderr.write(f"casson {args.verb}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
