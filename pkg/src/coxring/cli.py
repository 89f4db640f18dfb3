"""Command line interface; see ``docs/jsonl.md`` for the output schema."""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .coxsys import CoxeterMatrixError, SystemParseError, load_system, to_dot
from .freeprod import embedding, near_domain_check, q_system
from .minpoly import degree_check, euler_phi, min_poly_4cos2, residue_at_root
from .parser import ParseError, parse_element
from .pathalg import QQ, Element
from .quotient import RINGS, QuotientRing, enumerate_basis, rank_table
from .realrep import (LAX, STRICT, KillCheckFailed, act_B, check_kills_ideal, image_rank, max_abs,
                      ngcm_crystallographic, rrm_float,
                      theta_prime)
from .reflect import CONVENTIONS, SIDES, act_word, parse_word
from .rewrite import RING_R, RING_RTILDE, rules_for, verify_overlaps

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESIDUE = 3


class _Out:
    """Collects stdout lines; the human summary goes to stderr with a ``# `` prefix."""

    def __init__(self, stream=None, err=None):
        self.stream = stream or sys.stdout
        self.err = err or sys.stderr

    def line(self, text: str):
        print(text, file=self.stream)

    def json(self, obj: dict):
        print(json.dumps(obj, sort_keys=False), file=self.stream)

    def summary(self, text: str):
        print(f"# {text}", file=self.err)


def _order_note(M) -> str:
    return "length-lex; vertices " + "<".join(M.names) + "; edges by (origin, target)"


def _path_str(M, p) -> str:
    return "[" + ",".join(M.names[v] for v in p) + "]"


def _ring(M, name: str) -> QuotientRing:
    return QuotientRing(M, name)


def _parse_in(ring: QuotientRing, text: str, lax: bool):
    x = parse_element(text, ring.M, lax_paths=lax)
    return ring(x)


# ---------------------------------------------------------------------------
# commands

def cmd_graph(args, out: _Out) -> int:
    M = load_system(args.system)
    if args.dot:
        out.line(to_dot(M).rstrip("\n"))
    else:
        for i, j in M.graph.pos_edges:
            m = M.m(i, j)
            out.json({"from": M.names[i], "to": M.names[j], "m": "inf" if m == float("inf") else m})
    out.summary(f"{M.rank} generators, {len(M.graph.pos_edges)} positive edges, "
                f"{len(M.components())} component(s)")
    return EXIT_OK


def cmd_minpoly(args, out: _Out) -> int:
    n = args.n
    if n < 3:
        raise ValueError("minpoly needs n >= 3")
    poly = min_poly_4cos2(n)
    out.line(" ".join(str(c) for c in poly.coeffs))
    out.line(f"deg {poly.degree}")
    ok = degree_check(n)
    out.summary(f"deg C_{n} = phi({n})/2 = {euler_phi(n) // 2}: {'ok' if ok else 'FAIL'}; "
                f"|C_{n}(4cos^2(pi/{n}))| = {residue_at_root(n):.3e}")
    return EXIT_OK if ok else EXIT_RESIDUE


def cmd_nf(args, out: _Out) -> int:
    M = load_system(args.system)
    ring = _ring(M, args.ring)
    x = _parse_in(ring, args.expr, args.lax_paths)
    _emit_element(out, args, x, {"ring": args.ring})
    out.summary(f"normal form in {args.ring} ({_order_note(M)})")
    return EXIT_OK


def cmd_mul(args, out: _Out) -> int:
    M = load_system(args.system)
    ring = _ring(M, args.ring)
    acc = None
    for text in args.exprs:
        x = _parse_in(ring, text, args.lax_paths)
        acc = x if acc is None else acc * x
    _emit_element(out, args, acc, {"ring": args.ring, "factors": len(args.exprs)})
    out.summary(f"product of {len(args.exprs)} factor(s) in {args.ring}")
    return EXIT_OK


def _emit_element(out: _Out, args, x, extra: dict):
    if args.json:
        out.json({"element": str(x), **extra})
    else:
        out.line(str(x))


def cmd_basis(args, out: _Out) -> int:
    M = load_system(args.system)
    start = M.index(args.start) if args.start else None
    end = M.index(args.end) if args.end else None
    paths = enumerate_basis(M, args.ring, args.max_len, start, end)
    for p in paths:
        if args.json:
            out.json({"path": _path_str(M, p), "len": len(p) - 1})
        else:
            out.line(_path_str(M, p))
    out.summary(f"{len(paths)} basis paths of {args.ring} up to length {args.max_len} "
                f"({_order_note(M)})")
    return EXIT_OK


def cmd_rank(args, out: _Out) -> int:
    M = load_system(args.system)
    rows = rank_table(M, args.ring, args.max_len)
    total = 0
    for row in rows:
        if row["rank"] or args.all:
            out.json(row)
        total += row["rank"]
    out.summary(f"total {args.ring}-rank up to length {args.max_len}: {total}")
    return EXIT_OK


def cmd_act(args, out: _Out) -> int:
    M = load_system(args.system)
    ring = _ring(M, args.ring)
    word = parse_word(args.word, M.names)
    x = _parse_in(ring, args.on, args.lax_paths)
    y = act_word(word, x, args.side)
    if args.json:
        out.json({"element": str(y), "word": args.word, "side": args.side,
                  "convention": CONVENTIONS[args.side], "ring": args.ring})
    else:
        out.line(str(y))
    out.summary(f"side {args.side}: {CONVENTIONS[args.side]}")
    return EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    M = load_system(args.system)
    sys_ = q_system(M) if args.ring == "Q" else rules_for(M, args.ring)
    rep = verify_overlaps(sys_)
    fmt = (lambda p: _path_str(M, p)) if args.ring != "Q" else sys_.alg.format_monomial
    for o in rep.overlaps:
        out.json({"kind": o.kind,
                  "tips": [sys_.rules[o.first].label, sys_.rules[o.second].label],
                  "left": fmt(o.left), "right": fmt(o.right), "word": fmt(o.word),
                  "residue": str(o.residue)})
    ok = rep.ok
    out.json({"ring": args.ring, "rules": len(sys_), "overlaps": len(rep.overlaps),
              "residues": len(rep.residues), "tip_reduced": rep.tip_reduced,
              "uniform": rep.uniform, "ok": ok, "order": _order_note(M)})
    out.summary(f"{len(rep.overlaps)} overlaps, {len(rep.residues)} nonzero residue(s): "
                f"{'Groebner basis certified' if ok else 'NOT a Groebner basis'}")
    return EXIT_OK if ok else EXIT_RESIDUE


def _parse_k(M, items) -> dict:
    out = {}
    for item in items or ():
        pair, _, val = item.partition("=")
        names = [s.strip() for s in pair.split(",")]
        if len(names) != 2 or not val:
            raise ValueError(f"bad --k value {item!r}; expected r,s=K")
        out[(M.index(names[0]), M.index(names[1]))] = int(val)
    return out


def _random_element(rng, ring: QuotientRing, paths, terms: int = 3):
    chosen = rng.sample(paths, min(terms, len(paths)))
    return ring(Element(ring.alg, {p: rng.randint(-3, 3) for p in chosen}, ring.domain))


def cmd_realrep(args, out: _Out) -> int:
    M = load_system(args.system)
    if args.float or args.k:
        A = rrm_float(M, _parse_k(M, args.k))
    else:
        A = ngcm_crystallographic(M)
    mode = {"exact": A.exact, "strict": A.strict, "degenerate": A.degenerate}
    if args.check == "kill":
        rep = check_kills_ideal(A)
        for kind, label, res in rep.entries:
            out.json({"kind": kind, "generator": label, "residue": float(res)})
        res = {STRICT: rep.killed(STRICT), LAX: rep.killed(LAX)}
        need = STRICT if A.strict else LAX
        out.json({"check": "kill", **mode, "strict_killed": res[STRICT], "lax_killed": res[LAX],
                  "max_strict": float(rep.max_residue(STRICT)), "max_lax": float(rep.max_residue(LAX))})
        out.summary(f"strict generators killed: {res[STRICT]}; lax generators killed: {res[LAX]}")
        return EXIT_OK if res[need] else EXIT_RESIDUE
    if args.check == "equivariance":
        ring = QuotientRing(M, RING_R if A.strict else RING_RTILDE)
        if not check_kills_ideal(A).killed(STRICT if A.strict else LAX):
            raise KillCheckFailed("the matrix does not kill the relators of its ring")
        rng = random.Random(args.seed)
        paths = enumerate_basis(M, ring.ring, 4)
        worst = {"left": 0.0, "right": 0.0}
        for _ in range(args.samples):
            x = _random_element(rng, ring, paths)
            w = tuple(rng.randrange(M.rank) for _ in range(rng.randint(0, 4)))
            for side in ("left", "right"):
                d = max_abs(theta_prime(A, act_word(w, x, side).value) - act_B(w, theta_prime(A, x.value), A, side))
                worst[side] = max(worst[side], float(d))
        ok = bool(all(v <= A.tol for v in worst.values()))
        out.json({"check": "equivariance", **mode, "ring": ring.ring, "samples": args.samples,
                  "seed": args.seed, "max_diff_left": worst["left"], "max_diff_right": worst["right"],
                  "ok": ok})
        out.summary(f"equivariance on {args.samples} samples (seed {args.seed}): {'ok' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_RESIDUE
    # rank
    r = image_rank(A, M, args.max_len)
    expected = sum(len(c) ** 2 for c in M.components())
    ok = r == expected
    out.json({"check": "rank", **mode, "rank": r, "expected": expected, "max_len": args.max_len, "ok": ok})
    out.summary(f"image rank {r} (block sum of |S_i|^2 = {expected})")
    return EXIT_OK if ok else EXIT_RESIDUE


def cmd_embed(args, out: _Out) -> int:
    M = load_system(args.system)
    emb = embedding(M)
    x = emb.base(parse_element(args.expr, M, lax_paths=args.lax_paths, domain=QQ))
    X = emb.embed(x)
    names = emb.ext.names
    for (i, j), q in X.nonzero_entries():
        out.json({"row": names[i], "col": names[j], "entry": str(q)})
    out.summary(f"{len(X.entries)} nonzero entr{'y' if len(X.entries) == 1 else 'ies'} "
                f"in M_{emb.N + 1}(Q); apex generator {names[emb.apex]!r}")
    return EXIT_OK


def cmd_check_domain(args, out: _Out) -> int:
    M = load_system(args.system)
    rep = near_domain_check(M, args.trials, args.max_len, args.coeff_bound, args.seed,
                            cross_check=not args.no_embed)
    for c in rep.counterexamples:
        out.json({"trial": c.trial, "x1": c.x1, "x2": c.x2, "reason": c.reason})
    verdict = "ok" if rep.ok else "counterexample"
    out.json({"verdict": verdict, "trials": rep.trials, "max_len": rep.max_len,
              "coeff_bound": rep.coeff_bound, "seed": rep.seed,
              "counterexamples": len(rep.counterexamples), "embed_checked": rep.checked_embed})
    out.summary(f"{rep.trials} trials, seed {rep.seed}: "
                f"{'no zero divisors found' if rep.ok else f'{len(rep.counterexamples)} counterexample(s)'}")
    return EXIT_OK if rep.ok else EXIT_RESIDUE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxring", description="Coxeter path-algebra quotients.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_system(name, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("system", help="matrix file or preset (A3, B2, I2(5), universal3, running-example)")
        return sp

    def ring_opt(sp, choices=RINGS, default=RING_R):
        sp.add_argument("--ring", choices=choices, default=default)

    def elem_opts(sp):
        sp.add_argument("--lax-paths", action="store_true", help="map non-paths to 0 instead of failing")
        sp.add_argument("--json", action="store_true", help="emit a JSON line instead of plain text")

    sp = with_system("graph", help="the graph of the system")
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("minpoly", help="coefficients of C_n, low to high")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_minpoly)

    sp = with_system("nf", help="normal form of an element")
    ring_opt(sp)
    sp.add_argument("--expr", required=True)
    elem_opts(sp)
    sp.set_defaults(func=cmd_nf)

    sp = with_system("mul", help="product of elements, left to right")
    ring_opt(sp)
    sp.add_argument("exprs", nargs="+")
    elem_opts(sp)
    sp.set_defaults(func=cmd_mul)

    sp = with_system("basis", help="basis paths")
    ring_opt(sp)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--from", dest="start")
    sp.add_argument("--to", dest="end")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_basis)

    sp = with_system("rank", help="graded ranks as JSON lines")
    ring_opt(sp)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="include zero ranks")
    sp.set_defaults(func=cmd_rank)

    sp = with_system("act", help="reflection action of a word")
    ring_opt(sp)
    sp.add_argument("--word", required=True, help="comma separated generators, e.g. r,s,r")
    sp.add_argument("--side", choices=SIDES, default="left")
    sp.add_argument("--on", required=True)
    elem_opts(sp)
    sp.set_defaults(func=cmd_act)

    sp = with_system("verify-overlaps", help="certify the rewriting system")
    ring_opt(sp, choices=(RING_R, RING_RTILDE, "Q"))
    sp.set_defaults(func=cmd_verify)

    sp = with_system("realrep", help="real reflection matrix checks")
    sp.add_argument("--float", action="store_true", help="use -2cos(k pi/m) in double precision")
    sp.add_argument("--k", action="append", metavar="r,s=K", help="per-pair k (implies --float)")
    sp.add_argument("--check", choices=("kill", "equivariance", "rank"), required=True)
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-len", type=int, default=4)
    sp.set_defaults(func=cmd_realrep)

    sp = with_system("embed", help="matrix over Q of an element")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--lax-paths", action="store_true")
    sp.set_defaults(func=cmd_embed)

    sp = with_system("check-domain", help="randomized near-domain check")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--max-len", type=int, default=5)
    sp.add_argument("--coeff-bound", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--no-embed", action="store_true", help="skip the matrix cross-check")
    sp.set_defaults(func=cmd_check_domain)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    out = _Out(stdout, stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, SystemParseError, CoxeterMatrixError, KillCheckFailed,
            KeyError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=out.err)
        return EXIT_INVALID


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
