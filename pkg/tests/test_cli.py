"""Command-line interface: JSON output, exit codes, file round trips."""

import json
import os
import subprocess
import sys

import pytest

from quasimod import serialize_table
from quasimod.corpus import cyclic_table, group_tables


def run_cli(*argv, env_extra=None):
    env = dict(os.environ)
    env.update(env_extra or {})
    proc = subprocess.run([sys.executable, "-m", "quasimod.cli", *argv],
                          capture_output=True, text=True, env=env)
    doc = json.loads(proc.stdout) if proc.stdout.strip() else None
    return proc.returncode, doc


@pytest.fixture(scope="module")
def table_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("tables")
    gm = dict(group_tables())
    (d / "s3.tbl").write_text(serialize_table(gm["s3"]))
    (d / "z5.tbl").write_text(serialize_table(gm["z5"]))
    rows = [[(2 * x + 3 * y + 1) % 5 for y in range(5)] for x in range(5)]
    (d / "aff5.tbl").write_text(
        "5\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n")
    (d / "bad.tbl").write_text("not a table\n")
    (d / "notlatin.tbl").write_text("2\n0 1\n0 1\n")
    return d


# --- check -----------------------------------------------------------------


def test_check_default_is_quasigroup(table_dir):
    code, doc = run_cli("check", str(table_dir / "aff5.tbl"))
    assert code == 0
    assert doc["pass"] is True
    assert doc["checks"]["quasigroup"]["pass"] is True


def test_check_multiple_predicates(table_dir):
    code, doc = run_cli("check", str(table_dir / "s3.tbl"),
                        "--loop", "--f", "--nk", "--a-loop")
    assert code == 0
    assert set(doc["checks"]) == {"loop", "f", "nk", "a_loop"}
    assert all(v["pass"] for v in doc["checks"].values())


def test_check_failure_exits_one(table_dir):
    code, doc = run_cli("check", str(table_dir / "aff5.tbl"), "--loop")
    assert code == 1
    assert doc["pass"] is False
    assert doc["checks"]["loop"]["pass"] is False


def test_check_lemmas_reports_rows(table_dir):
    code, doc = run_cli("check", str(table_dir / "z5.tbl"), "--lemmas")
    assert code == 0
    rows = doc["checks"]["lemmas"]["rows"]
    assert len(rows) == 11
    assert all(r["pass"] for r in rows)


def test_malformed_file_exits_two(table_dir):
    code, doc = run_cli("check", str(table_dir / "bad.tbl"))
    assert code == 2
    assert doc["error"]["type"] == "Malformed"


def test_non_latin_file_exits_two(table_dir):
    code, doc = run_cli("check", str(table_dir / "notlatin.tbl"))
    assert code == 2
    assert doc["error"]["type"] == "NotLatin"


# --- analyze ----------------------------------------------------------------


def test_analyze_s3_summary(table_dir):
    code, doc = run_cli("analyze", str(table_dir / "s3.tbl"))
    assert code == 0
    assert doc["order"] == 6
    assert doc["nucleus"] == list(range(6))
    assert doc["moufang_center"] == [0]
    assert doc["center"] == [0]
    assert doc["m_set"] == [0]
    assert doc["endomorphisms"] == 10
    assert doc["automorphisms"] == 6
    assert doc["nk"] is True


# --- rho / sigma / roundtrip ---------------------------------------------------


def test_rho_sigma_file_roundtrip(table_dir, tmp_path):
    mod = tmp_path / "aff5.mod"
    code, doc = run_cli("rho", str(table_dir / "aff5.tbl"), "0", "-o", str(mod))
    assert code == 0
    assert doc["form"]["e"] == 1
    assert doc["verified"] == {"axioms": True, "class_m": True,
                               "nuclearly_pointed": True}
    assert mod.exists()

    back = tmp_path / "aff5.back.tbl"
    code, doc = run_cli("sigma", str(mod), "-o", str(back))
    assert code == 0
    assert doc["f_quasigroup"] is True
    assert back.read_text().splitlines()[:6] == \
        (table_dir / "aff5.tbl").read_text().splitlines()[:6]


def test_rho_without_point_requires_pointing(table_dir):
    code, doc = run_cli("rho", str(table_dir / "aff5.tbl"))
    assert code == 2
    assert doc["error"]["type"] == "Malformed"


def test_sigma_requires_point_line(table_dir, tmp_path):
    mod = tmp_path / "nopoint.mod"
    code, doc = run_cli("rho", str(table_dir / "z5.tbl"), "0", "-o", str(mod))
    assert code == 0
    stripped = "\n".join(l for l in mod.read_text().splitlines()
                         if not l.startswith("point"))
    mod.write_text(stripped + "\n")
    code, doc = run_cli("sigma", str(mod))
    assert code == 2
    assert doc["error"]["type"] == "Malformed"


def test_roundtrip_single_file_all_pointings(table_dir):
    code, doc = run_cli("roundtrip", str(table_dir / "aff5.tbl"))
    assert code == 0
    assert doc["pass"] is True
    assert doc["instances"] == 5
    assert doc["failures"] == []


def test_roundtrip_corpus_fast(table_dir):
    code, doc = run_cli("roundtrip", "--corpus", env_extra={"QUASIMOD_TIER": "fast"})
    assert code == 0
    assert doc["pass"] is True
    assert doc["instances"] > 2000


# --- search ------------------------------------------------------------------


def test_search_order_4_counts():
    code, doc = run_cli("search", "4")
    assert code == 0
    assert doc == {"order": 4, "latin_squares": 576, "f_quasigroups": 120}


def test_search_list_includes_tables():
    code, doc = run_cli("search", "2", "--list")
    assert code == 0
    assert doc["f_quasigroups"] == 2
    assert [[0, 1], [1, 0]] in doc["tables"]


def test_search_order_5_needs_slow_tier():
    code, doc = run_cli("search", "5", env_extra={"QUASIMOD_TIER": "fast"})
    assert code == 1
    assert doc["error"]["type"] == "SearchTooLarge"


def test_search_order_6_always_refused():
    code, doc = run_cli("search", "6")
    assert code == 2
    assert doc["error"]["type"] == "SearchTooLarge"


def test_search_order_5_slow_tier(slow_tier):
    code, doc = run_cli("search", "5", env_extra={"QUASIMOD_TIER": "slow"})
    assert code == 0
    assert doc == {"order": 5, "latin_squares": 161280, "f_quasigroups": 480}


def test_search_parallel_jobs_match_serial():
    code, doc = run_cli("--jobs", "3", "search", "4")
    assert code == 0
    assert doc == {"order": 4, "latin_squares": 576, "f_quasigroups": 120}


# --- corpus and bench ------------------------------------------------------------


def test_corpus_writes_all_tables(tmp_path):
    out = tmp_path / "corpus"
    code, doc = run_cli("corpus", "-o", str(out))
    assert code == 0
    names = {os.path.basename(p) for p in doc["written"]}
    assert "s3.tbl" in names and "cml81.tbl" in names and "chein12.tbl" in names
    assert len(names) == len(doc["written"])
    from quasimod import parse_table

    q = parse_table((out / "s3.tbl").read_text())
    assert q.n == 6


def test_bench_fast_tier_runs():
    code, doc = run_cli("bench", env_extra={"QUASIMOD_TIER": "fast"})
    assert code == 0
    assert doc["rows"]
    for row in doc["rows"]:
        assert row["seconds"]


# --- point handling via file ------------------------------------------------------


def test_pointed_table_file_carries_point(table_dir, tmp_path):
    pointed = tmp_path / "pointed.tbl"
    pointed.write_text(serialize_table(cyclic_table(3), point=1))
    code, doc = run_cli("roundtrip", str(pointed))
    assert code == 0
    assert doc["instances"] == 1
    assert doc["pass"] is True
