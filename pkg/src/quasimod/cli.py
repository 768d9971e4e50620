"""Command-line interface.

Subcommands: check (predicate battery on a table file), analyze (structure
report), rho / sigma (the two constructions), roundtrip (identity checks,
optionally over the built-in corpus), search (exhaustive order-n scan),
corpus (write the built-in tables to files), bench (backend timing).  Every
code path prints a single JSON document; exit code 0 on success, 1 on failed
checks, 2 on unreadable or malformed input.
"""

import argparse
import json
import os
import sys
from multiprocessing import Pool

from . import kernels
from .cayley import (
    LoopTable,
    QuasigroupTable,
    is_f_quasigroup,
    parse_pointed_table,
    serialize_table,
)
from .errors import Malformed, NotLatin, NotLoop, QuasimodError
from .structure import is_nk_loop, is_a_loop, m_set

DEFAULT_SEED = 0xF00D


def default_tier():
    env = os.environ.get("QUASIMOD_TIER")
    if env in ("fast", "slow"):
        return env
    return "slow" if kernels.BACKEND == "c" else "fast"


def _emit(doc, code):
    print(json.dumps(doc, indent=2, sort_keys=True))
    return code


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise Malformed(f"cannot read {path}: {exc}") from None


def _maybe_loop(q):
    try:
        return LoopTable(q)
    except NotLoop:
        return None


def cmd_check(args):
    text = _read(args.path)
    q, point = parse_pointed_table(text)
    requested = [name for name in
                 ("quasigroup", "loop", "moufang", "f", "nk", "a_loop", "lemmas")
                 if getattr(args, name)]
    if not requested:
        requested = ["quasigroup"]
    checks = {}
    L = _maybe_loop(q)

    def need_loop(name):
        if L is None:
            checks[name] = {"pass": False, "witness": "no two-sided neutral element"}
            return False
        return True

    for name in requested:
        if name == "quasigroup":
            checks[name] = {"pass": True}
        elif name == "f":
            from .cayley import f_quasigroup_violation

            w = f_quasigroup_violation(q)
            checks[name] = {"pass": w is None,
                            "witness": None if w is None else
                            {"law": w[0], "x": w[1], "y": w[2], "z": w[3]}}
        elif name == "loop":
            checks[name] = {"pass": L is not None,
                            "zero": None if L is None else L.zero}
        elif name == "moufang" and need_loop(name):
            w = L.moufang_witness
            checks[name] = {"pass": w is None,
                            "witness": None if w is None else list(w)}
        elif name == "nk" and need_loop(name):
            checks[name] = {"pass": is_nk_loop(L)}
        elif name == "a_loop" and need_loop(name):
            checks[name] = {"pass": is_a_loop(L)}
        elif name == "lemmas" and need_loop(name):
            from .endo import check_lemma_suite

            rows = check_lemma_suite(L)
            checks[name] = {"pass": all(r["pass"] for r in rows if r["applicable"]),
                            "rows": rows}
    ok = all(c["pass"] for c in checks.values())
    doc = {"path": args.path, "point": point, "checks": checks, "pass": ok}
    return _emit(doc, 0 if ok else 1)


def cmd_analyze(args):
    text = _read(args.path)
    q, point = parse_pointed_table(text)
    L = _maybe_loop(q)
    doc = {
        "path": args.path,
        "order": q.n,
        "point": point,
        "f_quasigroup": is_f_quasigroup(q),
        "m_set": list(m_set(q).members),
        "loop": L is not None,
    }
    if L is not None:
        from .endo import enumerate_automorphisms, enumerate_endomorphisms
        from .errors import SearchTooLarge

        doc.update({
            "zero": L.zero,
            "commutative": L.commutative,
            "associative": L.assoc_witness is None,
            "moufang": L.moufang_witness is None,
            "nk": is_nk_loop(L),
            "exponent": L.exponent,
            "nucleus": list(L.nucleus_members),
            "moufang_center": list(L.moufang_center_members),
            "center": list(L.center_members),
            "commutant": list(L.commutant_members),
        })
        try:
            doc["endomorphisms"] = len(enumerate_endomorphisms(L))
            doc["automorphisms"] = len(enumerate_automorphisms(L))
        except SearchTooLarge:
            doc["endomorphisms"] = None
            doc["automorphisms"] = None
    return _emit(doc, 0)


def cmd_rho(args):
    from .equivalence import PointedFQ, recover_form_candidates, rho
    from .genmodule import (
        is_nuclearly_pointed,
        serialize_module,
        verify_class_m,
        verify_module_axioms,
    )

    text = _read(args.path)
    q, filepoint = parse_pointed_table(text)
    point = args.point if args.point is not None else filepoint
    if point is None:
        return _emit({"error": {"type": "Malformed",
                                "message": "no point given on the command line "
                                           "or in the file"}}, 2)
    P = PointedFQ.checked(q, point)
    cands = recover_form_candidates(P)
    if not cands:
        return _emit({"error": {"type": "NoneFound",
                                "message": "no arithmetic form verified"}}, 1)
    u, v, form = cands[0]
    PM = rho(P, form=form)
    M = PM.module
    doc = {
        "input": args.path,
        "point": point,
        "form": {"u": u, "v": v, "e": form.e, "f": list(form.f), "g": list(form.g)},
        "module": {
            "order": M.loop.n,
            "phi": list(M.phi), "psi": list(M.psi),
            "mu": list(M.mu), "nu": list(M.nu),
            "point": PM.point,
        },
        "verified": {
            "axioms": all(r["pass"] for r in verify_module_axioms(M, seed=args.seed)),
            "class_m": all(r["pass"] for r in verify_class_m(M)),
            "nuclearly_pointed": is_nuclearly_pointed(PM),
        },
        "written": None,
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_module(M, point=PM.point))
        doc["written"] = args.out
    ok = all(doc["verified"].values())
    return _emit(doc, 0 if ok else 1)


def cmd_sigma(args):
    from .equivalence import sigma
    from .genmodule import PointedGenModule, parse_module

    text = _read(args.path)
    M, point = parse_module(text)
    if point is None:
        return _emit({"error": {"type": "Malformed",
                                "message": "module file has no point line"}}, 2)
    P = sigma(PointedGenModule(M, point))
    doc = {
        "input": args.path,
        "table": [list(row) for row in P.q.rows],
        "point": P.point,
        "f_quasigroup": True,
        "written": None,
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_table(P.q, point=P.point))
        doc["written"] = args.out
    return _emit(doc, 0)


def cmd_roundtrip(args):
    from .corpus import enumerate_forms, group_tables, search_f_quasigroups
    from .equivalence import (
        PointedFQ,
        module_from_form,
        roundtrip_fq_report,
        roundtrip_module_report,
    )

    failures = []
    instances = 0
    if args.corpus:
        top = 5 if args.tier == "slow" else 4
        for n in range(1, top + 1):
            for P in search_f_quasigroups(n):
                instances += 1
                rep = roundtrip_fq_report(P)
                if not rep["pass"]:
                    failures.append({"kind": "fq", "order": n, "report": rep})
        for name, L in group_tables():
            for form in enumerate_forms(L, cap=500):
                instances += 1
                rep = roundtrip_module_report(module_from_form(form))
                if not rep["pass"]:
                    failures.append({"kind": "module", "loop": name, "report": rep})
    else:
        if not args.path:
            return _emit({"error": {"type": "Malformed",
                                    "message": "give a table file or --corpus"}}, 2)
        text = _read(args.path)
        q, filepoint = parse_pointed_table(text)
        points = [filepoint] if filepoint is not None else list(range(q.n))
        for a in points:
            instances += 1
            rep = roundtrip_fq_report(PointedFQ.checked(q, a))
            if not rep["pass"]:
                failures.append({"kind": "fq", "point": a, "report": rep})
    doc = {"instances": instances, "failures": failures, "pass": not failures}
    return _emit(doc, 0 if not failures else 1)


def _f_chunk(payload):
    n, chunk = payload
    return kernels.filter_f_tables(n, chunk)


def cmd_search(args):
    n = args.order
    if n > 5:
        return _emit({"error": {"type": "SearchTooLarge",
                                "message": "full scans are limited to order 5"}}, 2)
    if n == 5 and args.tier != "slow":
        return _emit({"error": {"type": "SearchTooLarge",
                                "message": "order 5 requires --tier slow"}}, 1)
    squares = kernels.latin_squares(n, "all")
    if args.jobs > 1 and len(squares) > args.jobs:
        size = (len(squares) + args.jobs - 1) // args.jobs
        chunks = [(n, squares[i:i + size]) for i in range(0, len(squares), size)]
        with Pool(args.jobs) as pool:
            parts = pool.map(_f_chunk, chunks)
        ftabs = [t for part in parts for t in part]
    else:
        ftabs = kernels.filter_f_tables(n, squares)
    doc = {"order": n, "latin_squares": len(squares), "f_quasigroups": len(ftabs)}
    if args.list:
        doc["tables"] = [[list(t[i * n:(i + 1) * n]) for i in range(n)] for t in ftabs]
    return _emit(doc, 0)


def cmd_corpus(args):
    from .corpus import corpus_tables

    outdir = args.out or "corpus_tables"
    os.makedirs(outdir, exist_ok=True)
    written = []
    for name, L in corpus_tables():
        path = os.path.join(outdir, f"{name}.tbl")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_table(L.q))
        written.append(f"{name}.tbl")
    return _emit({"dir": outdir, "written": written}, 0)


def cmd_bench(args):
    from .bench import run_benchmarks

    rows = run_benchmarks(tier=args.tier)
    return _emit({"backend_default": kernels.BACKEND, "tier": args.tier,
                  "rows": rows}, 0)


def build_parser():
    top = argparse.ArgumentParser(
        prog="quasimod",
        description="Finite quasigroup, loop, and generalized-module computations.")
    top.add_argument("--tier", choices=("fast", "slow"), default=None,
                     help="workload tier (default: slow when the compiled "
                          "backend is active, else fast)")
    top.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized axiom sampling")
    top.add_argument("--jobs", type=int, default=1,
                     help="worker processes for the search subcommand")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run predicates against a table file")
    p.add_argument("path")
    for flag in ("quasigroup", "loop", "moufang", "f", "nk", "a-loop", "lemmas"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("analyze", help="structure report for a table file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("rho", help="pointed F-quasigroup to generalized module")
    p.add_argument("path")
    p.add_argument("point", nargs="?", type=int, default=None)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=cmd_rho)

    p = sub.add_parser("sigma", help="pointed generalized module to F-quasigroup")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=cmd_sigma)

    p = sub.add_parser("roundtrip", help="verify sigma/rho round trips")
    p.add_argument("path", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.set_defaults(fn=cmd_roundtrip)

    p = sub.add_parser("search", help="exhaustive scan of one order")
    p.add_argument("order", type=int)
    p.add_argument("--list", action="store_true",
                   help="include the F-quasigroup tables in the report")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("corpus", help="write the built-in corpus as table files")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=cmd_corpus)

    p = sub.add_parser("bench", help="time the kernel backends")
    p.set_defaults(fn=cmd_bench)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.tier is None:
        args.tier = default_tier()
    try:
        return args.fn(args)
    except (Malformed, NotLatin, NotLoop) as exc:
        return _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, 2)
    except QuasimodError as exc:
        return _emit({"error": {"type": type(exc).__name__, "message": str(exc)}}, 1)


if __name__ == "__main__":
    sys.exit(main())
