"""Timing comparison of the pure-Python and compiled kernel backends.

Each row runs one kernel workload on every available backend and reports wall
seconds plus the speedup of the compiled backend when both are present.  The
fast tier keeps every workload under a few seconds even in pure Python; the
slow tier adds the order-5 full Latin scan and the order-81 endomorphism
search.
"""

import time

from .kernels import available_backends


def _workloads(tier):
    from .corpus import cml81, chein12, neutral_loops

    big = cml81()
    small = chein12()
    loops6 = neutral_loops(6)
    work = [
        ("latin_squares(4, all)",
         lambda k: len(k.latin_squares(4, "all"))),
        ("latin_squares(6, loops0)",
         lambda k: len(k.latin_squares(6, "loops0"))),
        ("filter_f_tables(order 4)",
         lambda k: len(k.filter_f_tables(4, k.latin_squares(4, "all")))),
        ("moufang_violation(order 81)",
         lambda k: k.moufang_violation(big.n, big.flat)),
        ("nucleus_members(order 81)",
         lambda k: len(k.nucleus_members(big.n, big.flat))),
        ("m_set_members(order 12)",
         lambda k: len(k.m_set_members(small.n, small.flat))),
        ("all_homs_brute(order 6)",
         lambda k: len(k.all_homs_brute(6, loops6[0].flat))),
    ]
    if tier == "slow":
        work += [
            ("latin_squares(5, all)",
             lambda k: len(k.latin_squares(5, "all"))),
            ("endo_search(order 81, full)",
             lambda k: _endo_workload(k, big)),
        ]
    return work


def _endo_workload(kernel, L):
    plan = L.endo_plan
    ext_pos, ext_di, ext_dj, ext_start = plan["ext"]
    bk_i, bk_j, bk_k, bk_start = plan["buckets"]
    allowed = [list(range(L.n)) for _ in plan["gens"]]
    maps, complete, _ = kernel.endo_search(
        L.n, L.flat, L.zero, plan["nlevels"], plan["gen_positions"],
        ext_pos, ext_di, ext_dj, ext_start, bk_i, bk_j, bk_k, bk_start,
        plan["elems"], allowed, 50_000_000)
    assert complete
    return len(maps)


def run_benchmarks(tier="fast"):
    """Run every workload on every backend; returns a list of result rows."""
    backends = available_backends()
    rows = []
    for name, fn in _workloads(tier):
        row = {"workload": name, "seconds": {}, "result": None}
        for bname, module in backends.items():
            t0 = time.perf_counter()
            result = fn(module)
            row["seconds"][bname] = round(time.perf_counter() - t0, 6)
            row["result"] = result if not isinstance(result, tuple) else list(result)
        if "pure" in row["seconds"] and "c" in row["seconds"] and row["seconds"]["c"] > 0:
            row["speedup"] = round(row["seconds"]["pure"] / row["seconds"]["c"], 2)
        rows.append(row)
    return rows


if __name__ == "__main__":
    import json
    import os

    tier = os.environ.get("QUASIMOD_TIER", "fast").strip().lower() or "fast"
    print(json.dumps({"tier": tier, "rows": run_benchmarks(tier)},
                     indent=2, sort_keys=True))
