"""Golden checks for the worked examples, as a pass/fail table."""

from __future__ import annotations

import time
from typing import Callable

from . import golden
from .cycles import CycleId, decompose_product, phi_map
from .field import default_modulus, table_for
from .graph import best_count, build_adjacency, theorem6_count
from .joiner import (canonical_rotation, choice_from_states, enumerate_trees,
                     feedback_anf, join, parse_anf, same_cycle, verify_debruijn)
from .pairs import PairFinder, canonical_pair
from .staterep import ab_to_state, state_to_ab


def _example():
    return decompose_product(golden.P_EX, golden.Q_EX)


def check_phi() -> bool:
    ft, t = table_for(golden.P_EX)
    return [format(phi_map(ft, golden.P_EX, j, t), "04b") for j in range(15)] == golden.PHI


def check_reps() -> bool:
    ps = _example()
    us = [ps.p_spec.bits(r, ps.e1) for r in ps.p_reps]
    s = ps.q_spec.bits(ps.q_reps[0], ps.e2)
    return (["".join(map(str, u)) for u in us] == golden.U_SEQS
            and "".join(map(str, s)) == golden.S_SEQ
            and [format(r, "04b") for r in ps.p_reps] == golden.P_REPS)


def check_basis() -> bool:
    ps = _example()
    a, b = state_to_ab(ps.basis, 1 << 7)
    sp = ps.special
    return (ps.basis.rows() == golden.BASIS_P
            and (format(a, "04b"), format(b, "04b")) == golden.SPECIAL_AB
            and (sp.a, sp.b, sp.c) == golden.SPECIAL_ABC)


def check_subalgorithms() -> bool:
    ps = _example()
    f = PairFinder(ps)
    ok = all(set(f.sub_p(a, b)) == want for (a, b), want in golden.SUBALG_P.items())
    ok &= all(set(f.sub_q(a, b)) == want for (a, b), want in golden.SUBALG_Q.items())
    ft, _ = table_for(golden.Q_EX)
    ok &= set(f.sub_q(0, 0)) == {(j, (-9 - ft.zech_of(j - 9)) % 15)
                                  for j in range(15) if j != 9}
    return ok


def expected_pairs(ps, rows) -> set:
    """Canonical pairs from ``(i, j)`` exponent rows on ``(p_0, q)``."""
    out = set()
    for i, j in rows:
        a = ps.p_spec.run(ps.p_reps[0], i)
        b = 0 if j is None else ps.q_spec.run(ps.q_reps[0], j)
        out.add(canonical_pair(ab_to_state(ps.basis, a, b), ps.width))
    return out


def check_tables23() -> bool:
    ps = _example()
    f = PairFinder(ps)
    got = lambda c1, c2: {(p.v, p.v_hat) for p in f.find(c1, c2).pairs}  # noqa: E731
    u0 = CycleId.u(0)
    ok = True
    for (k, l), i in golden.CASE1.items():
        ok &= got(u0, CycleId.mix(k, 0, l)) == expected_pairs(ps, [(i, None)])
    c1 = CycleId.mix(0, 0, 1)
    ok &= got(c1, CycleId.u(2)) == expected_pairs(ps, [golden.CASE2[1]])
    by_target: dict = {}
    for k, l, i, j in golden.CASE3:
        by_target.setdefault((k, l), []).append((i, j))
    for k in range(3):
        for l in range(5):
            ok &= got(c1, CycleId.mix(k, 0, l)) == expected_pairs(ps, by_target.get((k, l), []))
    return ok


def check_m1() -> bool:
    g = build_adjacency(_example())
    return g.laplacian().tolist() == golden.M1


def check_count() -> bool:
    tc = best_count(build_adjacency(_example()))
    return (tc.exact == golden.TREES_EX
            and abs(tc.log2_exact - golden.LOG2_TREES_EX) <= 0.01
            and abs(tc.log2_estimate - golden.LOG2_ESTIMATE_EX) <= 0.01)


def check_trinomial_counts() -> bool:
    ok = True
    for n, want in golden.TRINOMIAL_COUNTS.items():
        ps = decompose_product(0x7, default_modulus(n))
        ok &= best_count(build_adjacency(ps)).exact == want == theorem6_count(n)
    return ok


def _closure(spec) -> bool:
    ps = decompose_product(spec["p"], spec["q"])
    g = build_adjacency(ps)
    seqs = [join(ps, t) for t in enumerate_trees(g)]
    w = ps.width
    return (len(seqs) == spec["trees"] and all(verify_debruijn(s, w) for s in seqs)
            and len({canonical_rotation(s) for s in seqs}) == spec["trees"])


def check_order5() -> bool:
    spec = golden.ORDER5
    ps = decompose_product(spec["p"], spec["q"])
    ch = choice_from_states(ps, spec["tree"])
    return (same_cycle(join(ps, ch), spec["seq"])
            and feedback_anf(ps, ch) == parse_anf(spec["anf"])
            and _closure(spec))


def check_order6() -> bool:
    spec = golden.ORDER6
    ps = decompose_product(spec["p"], spec["q"])
    ch = choice_from_states(ps, spec["tree"])
    return same_cycle(join(ps, ch), spec["seq"]) and _closure(spec)


def check_small() -> bool:
    seq, order = golden.SMALL_DEBRUIJN
    return verify_debruijn(seq, order)


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("phi table (15 rows)", check_phi),
    ("cycle representatives", check_reps),
    ("basis matrix and special state", check_basis),
    ("subalgorithm outputs", check_subalgorithms),
    ("pairs of U0, MIX:0,0,1", check_tables23),
    ("20x20 matrix M", check_m1),
    ("exact count and log2 values", check_count),
    ("(x^2+x+1)p counts, n=3..10", check_trinomial_counts),
    ("order-5 sequence, ANF, 20 trees", check_order5),
    ("order-6 sequence, 2880 trees", check_order6),
    ("period-8 de Bruijn check", check_small),
]


def run_all(stream=None) -> bool:
    import sys
    stream = stream or sys.stdout
    all_ok = True
    for name, fn in CHECKS:
        t = time.perf_counter()
        try:
            ok = bool(fn())
            err = ""
        except Exception as exc:  # report, keep going
            ok, err = False, f" ({type(exc).__name__}: {exc})"
        dt = time.perf_counter() - t
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'}  {name:<36} {dt:7.3f}s{err}", file=stream)
    print("all golden values match" if all_ok else "some golden values differ", file=stream)
    return all_ok

