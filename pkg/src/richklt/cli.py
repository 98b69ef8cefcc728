"""Command line front end.

Exit status: 0 on success, 1 when a mathematical check comes out false,
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bsdh, cartan, richardson, weyl
from .errors import RichKLTError, UnsupportedRank
from .fsplit import (PolyRing, compatible_fpure_test, fedder_fpure, flag_plucker_model,
                     richardson_ideal)
from .fsplit.ideals import dimension

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class UsageError(RichKLTError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _ints(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(t) for t in re.split(r"[\s,]+", text.strip()) if t)
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def _gcm(args) -> cartan.GCM:
    if args.gcm:
        return cartan.parse_gcm(args.gcm)
    return cartan.builtin_gcm(args.type)


def _elem(g, text: Optional[str], flag: str) -> weyl.WeylElement:
    if text is None:
        raise UsageError(f"{flag} is required")
    return weyl.canonicalize(g, weyl.parse_word(text))


def _type_a_n(g) -> int:
    if not g.is_finite_type_a():
        raise UnsupportedRank("charts and Plücker models need a finite type A matrix")
    return g.rank + 1


def _model(args):
    m = re.fullmatch(r"flag(\d)", args.model or "")
    if not m:
        raise UsageError(f"unknown model {args.model!r}; use flag2, flag3 or flag4")
    return flag_plucker_model(int(m.group(1)))


# -- commands -------------------------------------------------------------

def cmd_gcm(args):
    g = _gcm(args)
    if args.action == "show":
        return {"gcm": g.as_lists(), "symmetrizer": list(g.symmetrizer)}, True
    roots = cartan.real_root_orbit(g, args.height)
    return {"gcm": g.as_lists(), "height": args.height,
            "roots": [{"root": list(r.root), "coroot": list(r.coroot)} for r in roots]}, True


def cmd_weyl(args):
    g = _gcm(args)
    w = _elem(g, args.w, "--w")
    if args.action == "canon":
        return {"word": list(w.word), "length": w.length}, True
    v = _elem(g, args.v, "--v")
    if args.action == "leq":
        ok = weyl.bruhat_leq(v, w)
        return {"v": list(v.word), "w": list(w.word), "leq": ok}, ok
    if args.action == "cover":
        c = weyl.cover_reflection(v, w, side=args.side)
        return _cover_json(c), True
    if args.action == "covers":
        return {"covers": [_cover_json(c) for c in weyl.covers_in_interval(v, w, side=args.side)],
                "cocovers": [_cover_json(c) for c in weyl.cocovers_in_interval(v, w, side=args.side)]}, True
    # chains
    count = sum(1 for _ in weyl.maximal_chains(v, w))
    return {"v": list(v.word), "w": list(w.word), "chains": count}, True


def _cover_json(c: weyl.CoverDatum) -> dict:
    return {"lower": list(c.lower.word), "upper": list(c.upper.word), "root": list(c.root),
            "coroot": list(c.coroot), "rho_pairing": c.rho_pairing, "side": c.side}


def cmd_richardson(args):
    if args.action == "discrepancy":
        stricts = [(f"X{i + 1}", b) for i, b in enumerate(_ints(args.strict) or ())]
        excs = [(f"E{j + 1}", d) for j, d in enumerate(_ints(args.exceptional) or ())]
        if args.N is None:
            raise UsageError("--N is required")
        rep = richardson.discrepancy_eval(args.N, stricts, excs)
        return rep.to_json(), rep.classification == richardson.KLT
    g = _gcm(args)
    v, w = _elem(g, args.v, "--v"), _elem(g, args.w, "--w")
    if args.action == "boundary":
        return {"components": [c.to_json() for c in richardson.boundary(v, w)]}, True
    if args.action == "pair":
        p = richardson.pair_datum(v, w, args.N)
        return {"v": list(v.word), "w": list(w.word),
                "components": [c.to_json() for c in p.components], "N": p.N,
                "delta": [_frac(x) for x in p.delta],
                "k_plus_delta": [_frac(x) for x in p.k_plus_delta]}, True
    if args.action == "degree":
        lam = _ints(args.lam) or tuple(2 * x for x in cartan.rho(g))
        return {"lambda": list(lam), "degree": richardson.chevalley_degree(v, w, lam)}, True
    rep = richardson.degree_identity_check(v, w)
    ok = rep.passed and rep.one_sided_passed
    return {"lhs": rep.lhs, "rhs": rep.rhs, "v_side": rep.v_side, "w_side": rep.w_side,
            "pass": ok}, ok


def cmd_bsdh(args):
    g = _gcm(args)
    n = _type_a_n(g)
    word = bsdh.BSWord.parse(n, args.w or "")
    if args.action == "valuations":
        u = word.element() if args.u is None else weyl.canonicalize(g, weyl.parse_word(args.u))
        lam = _ints(args.lam) or cartan.rho(g)
        table = bsdh.boundary_valuations(word, u, lam)
        return {"word": list(word.letters), "u": list(u.word), "lambda": list(lam),
                "valuations": table.to_json()}, True
    if args.N is None:
        raise UsageError("--N is required")
    rep = bsdh.schubert_discrepancies(word, args.N)
    return rep.to_json(), rep.consistent and rep.report.classification == richardson.KLT


def _ideal_ring(texts: Sequence[str], names: Optional[str], p: int) -> PolyRing:
    if names:
        vs = names.replace(",", " ").split()
    else:
        vs = sorted(set(re.findall(r"[A-Za-z_][0-9]*", " ".join(texts))))
    return PolyRing(vs, p)


def _load_ideal(text: Optional[str]) -> list[str]:
    if text is None:
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"ideal must be a JSON list of strings, got {text!r}") from None
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise UsageError("ideal must be a JSON list of strings")
    return data


def cmd_fsplit(args):
    p = args.p[0] if args.p else 2
    if args.model:
        model = _model(args)
        R = model.ring_mod(p)
        if args.action == "fedder":
            rep = fedder_fpure(model.relations_mod(p), p, R)
            return rep.to_json(), rep.is_split
        g = cartan.type_a(model.n - 1)
        v, w = _elem(g, args.v, "--v"), _elem(g, args.w, "--w")
        ideals = richardson_ideal(model, v, w, p)
        rep = compatible_fpure_test(ideals.ideal, ideals.boundary, p, R)
        out = rep.to_json()
        out["dimension"] = dimension(ideals.ideal)
        return out, rep.passed
    I, J = _load_ideal(args.ideal), _load_ideal(args.sub)
    R = _ideal_ring(I + J, args.vars, p)
    I = [R.parse(s) for s in I]
    if args.action == "fedder":
        rep = fedder_fpure(I, p, R)
        return rep.to_json(), rep.is_split
    rep = compatible_fpure_test(I, [R.parse(s) for s in J], p, R)
    return rep.to_json(), rep.passed


def cmd_certify(args):
    g = _gcm(args)
    v, w = _elem(g, args.v, "--v"), _elem(g, args.w, "--w")
    cert = richardson.certify(v, w, args.N, tuple(args.p or ()))
    return cert.to_json(), cert.passed


# -- output ---------------------------------------------------------------

def _table(obj, indent: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        if set(obj) == {"num", "den"}:
            return [indent + str(Fraction(obj["num"], obj["den"]))]
        for k, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{indent}{k}:")
                lines += _table(val, indent + "  ")
            else:
                lines.append(f"{indent}{k:<14} {_cell(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                block = _table(item, indent + "  ")
                block[0] = indent + "- " + block[0][len(indent) + 2:]
                lines += block
            else:
                lines.append(indent + _cell(item))
    else:
        lines.append(indent + _cell(obj))
    return lines


def _flat(val) -> bool:
    if isinstance(val, dict):
        return set(val) == {"num", "den"}
    return all(not isinstance(x, (dict, list)) or _flat(x) for x in val)


def _cell(val) -> str:
    if isinstance(val, dict) and set(val) == {"num", "den"}:
        return str(Fraction(val["num"], val["den"]))
    if isinstance(val, list):
        return "[" + ", ".join(_cell(x) for x in val) + "]"
    if val is None:
        return "-"
    return str(val)


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--type", default="A2", help="A<n>, B2 or A1~ (default A2)")
    common.add_argument("--gcm", help='custom matrix, e.g. "2 -1; -1 2"')
    common.add_argument("--v", help="word of v, e.g. \"1 2\"")
    common.add_argument("--w", help="word of w")
    common.add_argument("--lambda", dest="lam", help="weight in fundamental coordinates")
    common.add_argument("--N", type=int)
    common.add_argument("--p", type=int, action="append", help="prime (repeatable)")
    common.add_argument("--height", type=int, default=3)
    common.add_argument("--out", choices=("json", "table"), default="json")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work is serial")

    parser = _Parser(prog="richklt", description="Richardson varieties: divisors, degrees and KLT evidence.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gcm", parents=[common])
    p.add_argument("action", choices=("show", "roots"))
    p.set_defaults(func=cmd_gcm)

    p = sub.add_parser("weyl", parents=[common])
    p.add_argument("action", choices=("canon", "leq", "cover", "covers", "chains"))
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("richardson", parents=[common])
    p.add_argument("action", choices=("boundary", "pair", "degree", "identity", "discrepancy"))
    p.add_argument("--strict", help="b_i of strict transforms")
    p.add_argument("--exceptional", help="d_j of exceptional divisors")
    p.set_defaults(func=cmd_richardson)

    p = sub.add_parser("bsdh", parents=[common])
    p.add_argument("action", choices=("valuations", "discrepancies"))
    p.add_argument("--u", help="extremal weight element (default: element of the word)")
    p.set_defaults(func=cmd_bsdh)

    p = sub.add_parser("fsplit", parents=[common])
    p.add_argument("action", choices=("fedder", "compatible"))
    p.add_argument("--model", help="flag2, flag3 or flag4")
    p.add_argument("--ideal", help='JSON list of generators, e.g. \'["x*y"]\'')
    p.add_argument("--sub", help="JSON list of generators of the larger ideal J")
    p.add_argument("--vars", help="variable names (default: identifiers in the input, sorted)")
    p.set_defaults(func=cmd_fsplit)

    p = sub.add_parser("certify", parents=[common])
    p.set_defaults(func=cmd_certify)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report, ok = args.func(args)
    except RichKLTError as exc:
        print(f"richklt: error: {exc}".splitlines()[0], file=stderr)
        return EXIT_INPUT
    if args.out == "table":
        stdout.write("\n".join(_table(report)) + "\n")
    else:
        stdout.write(json.dumps(report, sort_keys=False) + "\n")
    return EXIT_OK if ok else EXIT_FALSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
