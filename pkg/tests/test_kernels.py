"""Backend agreement: the compiled kernels must match the pure reference exactly."""

import os
import subprocess
import sys

import pytest

from quasimod import kernels
from quasimod.corpus import chein12, cml81, group_tables, neutral_loops
from quasimod.kernels import available_backends

BACKENDS = available_backends()
HAVE_C = "c" in BACKENDS

pytestmark = pytest.mark.skipif(
    not HAVE_C, reason="compiled backend not built; nothing to cross-validate")


@pytest.fixture(scope="module")
def pure():
    return BACKENDS["pure"]


@pytest.fixture(scope="module")
def comp():
    return BACKENDS["c"]


def _tables():
    gm = dict(group_tables())
    return [gm["z4"].q, gm["s3"].q, gm["d4"].q, gm["s3xz3"].q, chein12().q]


def test_latin_and_division_kernels_agree(pure, comp):
    for q in _tables():
        n, flat = q.n, q.flat
        assert pure.latin_violation(n, flat) == comp.latin_violation(n, flat)
        assert pure.build_divisions(n, flat) == comp.build_divisions(n, flat)


def test_latin_violation_agrees_on_broken_tables(pure, comp):
    broken = bytes([0, 1, 1, 0])  # row 1 duplicates nothing, col 1 has 1,0 -- fine
    cases = [bytes([0, 0, 1, 1]), bytes([0, 1, 1, 1]), broken]
    for flat in cases:
        assert pure.latin_violation(2, flat) == comp.latin_violation(2, flat)


def test_law_and_subset_kernels_agree(pure, comp):
    big = cml81()
    for q in _tables() + [big.q]:
        n, flat = q.n, q.flat
        a, b = bytes(q.alpha), bytes(q.beta)
        assert pure.f_law_violation(n, flat, a, b) == comp.f_law_violation(n, flat, a, b)
        assert pure.moufang_violation(n, flat) == comp.moufang_violation(n, flat)
        assert pure.assoc_violation(n, flat) == comp.assoc_violation(n, flat)
        assert pure.comm_violation(n, flat) == comp.comm_violation(n, flat)
        assert pure.nucleus_members(n, flat) == comp.nucleus_members(n, flat)
        assert pure.moufang_center_members(n, flat) == comp.moufang_center_members(n, flat)
        assert pure.m_set_members(n, flat) == comp.m_set_members(n, flat)
        assert pure.commutant_members(n, flat) == comp.commutant_members(n, flat)


def test_hom_violation_agrees(pure, comp):
    gm = dict(group_tables())
    L = gm["s3"]
    n, flat = L.n, L.flat
    for f in ([0] * 6, list(range(6)), [0, 2, 1, 3, 4, 5], [1, 1, 1, 1, 1, 1]):
        fb = bytes(f)
        assert pure.hom_violation(n, flat, fb) == comp.hom_violation(n, flat, fb)


def test_perm_closure_agrees(pure, comp):
    gens = [bytes([1, 2, 3, 4, 0]), bytes([1, 0, 2, 3, 4])]
    assert pure.perm_closure(5, gens, 10 ** 6) == comp.perm_closure(5, gens, 10 ** 6)
    # capped run must agree on the completeness flag
    assert pure.perm_closure(5, gens, 10)[1] == comp.perm_closure(5, gens, 10)[1] == False


def test_latin_square_enumeration_agrees(pure, comp):
    for n in (1, 2, 3, 4):
        for mode in ("all", "reduced", "loops0"):
            assert pure.latin_squares(n, mode) == comp.latin_squares(n, mode)


def test_f_table_filter_agrees(pure, comp):
    squares = comp.latin_squares(4, "all")
    assert pure.filter_f_tables(4, squares) == comp.filter_f_tables(4, squares)


def test_brute_hom_enumeration_agrees(pure, comp):
    gm = dict(group_tables())
    for name in ("z4", "z2x2", "s3"):
        L = gm[name]
        assert pure.all_homs_brute(L.n, L.flat) == comp.all_homs_brute(L.n, L.flat)


def test_endo_search_agrees(pure, comp):
    gm = dict(group_tables())
    for name in ("z4x2", "s3", "d4"):
        L = gm[name]
        plan = L.endo_plan
        ext_pos, ext_di, ext_dj, ext_start = plan["ext"]
        bk_i, bk_j, bk_k, bk_start = plan["buckets"]
        allowed = [list(range(L.n)) for _ in plan["gens"]]
        args = (L.n, L.flat, L.zero, plan["nlevels"], plan["gen_positions"],
                ext_pos, ext_di, ext_dj, ext_start,
                bk_i, bk_j, bk_k, bk_start, plan["elems"], allowed, 10 ** 7)
        pm, pc, _ = pure.endo_search(*args)
        cm, cc, _ = comp.endo_search(*args)
        assert (pm, pc) == (cm, cc), name


def test_backend_env_override_selects_pure():
    code = ("import quasimod.kernels as k; print(k.BACKEND)")
    env = dict(os.environ, QUASIMOD_BACKEND="pure")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "pure"


def test_backend_env_override_rejects_unknown():
    code = ("import quasimod.kernels")
    env = dict(os.environ, QUASIMOD_BACKEND="vulkan")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.returncode != 0


def test_loop_enumeration_agrees_on_order_5(pure, comp):
    assert pure.latin_squares(5, "loops0") == comp.latin_squares(5, "loops0")


def test_benchmark_smoke():
    from quasimod.bench import run_benchmarks

    rows = run_benchmarks("fast")
    assert rows
    for row in rows:
        assert set(row["seconds"]) == set(BACKENDS)
