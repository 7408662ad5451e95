"""Command-line front end.

Polynomials are given as hex masks (bit ``i`` is the coefficient of ``x^i``,
so ``0x13`` is ``x^4+x+1``) or in the form ``x^4+x+1``.  Every command writes
to stdout (or ``--out``) and exits nonzero with a JSON error on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import poly2
from .cycles import CycleId, decompose_product
from .field import cyclotomic_matrix, table_for
from .graph import best_count, build_adjacency, theorem6_count, theorem6_total
from .joiner import (enumerate_trees, feedback_anf, format_anf, join, sample_trees,
                     to_hex, verify_debruijn)
from .pairs import PairFinder

COMMANDS = ("classify", "tables", "cycles", "pairs", "graph", "count",
            "generate", "verify", "reproduce")


class CliError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    q: int | None = None
    seed: int = 0
    cap: int = 100000
    format: str = "json"
    out: str | None = None
    jobs: int = 1
    t: int | None = None
    c1: str | None = None
    c2: str | None = None
    count: int = 1
    all: bool = False
    order: int | None = None
    seq: str | None = None


def _poly(text: str | None, flag: str) -> int | None:
    if text is None:
        return None
    try:
        v = poly2.parse(text)
    except ValueError as exc:
        raise CliError(f"{flag}: {exc}") from None
    if v.bit_length() < 2:
        raise CliError(f"{flag}: degree must be at least 1")
    return v


def _need(cfg: RunConfig, *names):
    for n in names:
        if getattr(cfg, n) is None:
            raise CliError(f"--{n} is required for {cfg.command}")


def _product(cfg: RunConfig):
    _need(cfg, "p", "q")
    if cfg.p == cfg.q:
        raise CliError("p and q must be distinct")
    for name in ("p", "q"):
        g = getattr(cfg, name)
        if not poly2.is_irreducible(g):
            raise CliError(f"{name}={poly2.to_human(g)} is reducible")
    return decompose_product(cfg.p, cfg.q)


def _jobs(cfg: RunConfig) -> int:
    return cfg.jobs if cfg.jobs > 0 else (os.cpu_count() or 1)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_classify(cfg):
    _need(cfg, "p")
    return _dump({"poly": hex(cfg.p), "human": poly2.to_human(cfg.p),
                  **poly2.classify(cfg.p).to_dict()})


def cmd_tables(cfg):
    _need(cfg, "p")
    if not poly2.is_irreducible(cfg.p):
        raise CliError("tables need an irreducible polynomial")
    ft, t0 = table_for(cfg.p)
    t = cfg.t or t0
    if ft.size % t:
        raise CliError(f"t={t} does not divide {ft.size}")
    return _dump({"k": ft.k, "modulus": hex(ft.modulus), "generator": hex(ft.generator),
                  "zech": [int(z) for z in ft.zech],
                  "cyclotomic": {"t": t, "matrix": cyclotomic_matrix(ft, t)}})


def cmd_cycles(cfg):
    return _dump(_product(cfg).to_dict())


def cmd_pairs(cfg):
    ps = _product(cfg)
    f = PairFinder(ps)
    if cfg.c1:
        c1 = CycleId.parse(cfg.c1)
        targets = [CycleId.parse(cfg.c2)] if cfg.c2 else ps.order
        reports = [f.find(c1, c2) for c2 in targets]
    else:
        order = ps.order
        reports = [f.find(order[a], order[b]) for a in range(len(order))
                   for b in range(a, len(order))]
    return "".join(json.dumps(r.to_dict()) + "\n" for r in reports if r.count or cfg.c2)


def cmd_graph(cfg):
    g = build_adjacency(_product(cfg), jobs=_jobs(cfg))
    if cfg.format == "dot":
        return g.to_dot()
    return _dump(g.to_dict())


def _closed_form(ps):
    for tri, other in ((ps.p, ps.q), (ps.q, ps.p)):
        n = other.bit_length() - 1
        if tri == 0x7 and n >= 3 and poly2.is_primitive(other):
            return {"n": n, "per_poly": theorem6_count(n), "total": str(theorem6_total(n))}
    return None


def cmd_count(cfg):
    ps = _product(cfg)
    tc = best_count(build_adjacency(ps, jobs=_jobs(cfg)))
    if not tc.connected:
        raise CliError("adjacency graph is disconnected")
    if cfg.format == "text":
        lines = [f"{tc.exact}", f"log2 exact    {tc.log2_exact:.3f}",
                 f"log2 estimate {tc.log2_estimate:.3f}"]
        th = _closed_form(ps)
        if th:
            lines.append(f"closed form   {th['per_poly']}")
        return "\n".join(lines) + "\n"
    out = tc.to_dict()
    out["closed_form"] = _closed_form(ps)
    return _dump(out)


def cmd_generate(cfg):
    ps = _product(cfg)
    g = build_adjacency(ps, jobs=_jobs(cfg))
    if cfg.all:
        trees = list(enumerate_trees(g, cfg.cap))
    else:
        trees = sample_trees(g, cfg.count, cfg.seed)
    w = ps.width
    items = []
    for t in trees:
        seq = join(ps, t)
        if not verify_debruijn(seq, w):
            raise CliError("joined sequence failed the de Bruijn check")
        items.append({"seq": to_hex(seq) if cfg.format == "hex" else seq,
                      "tree": json.loads(t.to_json()),
                      "anf": format_anf(feedback_anf(ps, t))})
    if cfg.format in ("text", "hex"):
        return "".join(it["seq"] + "\n" for it in items)
    return _dump({"order": w, "count": len(items), "sequences": items})


def cmd_verify(cfg):
    _need(cfg, "order", "seq")
    try:
        ok = verify_debruijn(cfg.seq, cfg.order)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if not ok:
        return "fail\n", 1
    return "pass\n"


def cmd_reproduce(cfg):
    import io

    from .reproduce import run_all
    buf = io.StringIO()
    ok = run_all(buf)
    return buf.getvalue(), 0 if ok else 1


HANDLERS = {c: globals()[f"cmd_{c}"] for c in COMMANDS}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        res = HANDLERS[cfg.command](cfg)
    except (CliError, ValueError, ArithmeticError) as exc:
        print(json.dumps({"error": str(exc), "command": cfg.command}), file=stderr)
        return 2
    text, code = res if isinstance(res, tuple) else (res, 0)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p")
    common.add_argument("--q")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=100000)
    common.add_argument("--format", choices=("json", "dot", "text", "hex"), default="json")
    common.add_argument("--out")
    common.add_argument("--jobs", type=int, default=1, help="0 means all cores")

    ap = argparse.ArgumentParser(prog="cyclejoin", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for c in COMMANDS:
        sp = sub.add_parser(c, parents=[common])
        if c == "tables":
            sp.add_argument("--t", type=int)
        if c == "pairs":
            sp.add_argument("--c1")
            sp.add_argument("--c2")
        if c == "generate":
            sp.add_argument("--count", type=int, default=1)
            sp.add_argument("--all", action="store_true")
        if c == "verify":
            sp.add_argument("--order", type=int)
            sp.add_argument("--seq")
    return ap


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    d = vars(ns)
    d["p"] = _poly(d.get("p"), "--p")
    d["q"] = _poly(d.get("q"), "--q")
    return RunConfig(**d)


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except CliError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
