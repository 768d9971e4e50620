"""Reference tables: groups, the two nonassociative exhibits, enumerations."""

import pytest

from quasimod import (
    LoopTable,
    chein_loop,
    cyclic_table,
    dihedral_table,
    direct_product,
    enumerate_forms,
    is_commutative,
    is_diassociative,
    is_f_quasigroup,
    is_moufang,
    is_nk_loop,
    neutral_loops,
    quaternion_table,
    search_f_quasigroups,
)
from quasimod.corpus import LATIN_COUNTS, LOOP0_COUNTS, corpus_tables
from quasimod.errors import SearchTooLarge
from quasimod import kernels


# --- constructions -----------------------------------------------------------


def test_group_corpus_members_are_associative_loops(groups):
    for name, L in groups:
        assert L.assoc_witness is None, name
        assert L.zero == 0, name


def test_corpus_names_are_unique(corpus):
    names = [name for name, _ in corpus]
    assert len(names) == len(set(names))
    assert "cml81" in names and "chein12" in names


def test_cyclic_table_is_modular_addition():
    L = cyclic_table(4)
    assert L.rows == tuple(tuple((x + y) % 4 for y in range(4)) for x in range(4))


def test_direct_product_componentwise(group_map):
    z6 = direct_product(cyclic_table(2), cyclic_table(3))
    assert z6.n == 6
    assert z6.assoc_witness is None
    assert z6.exponent == 6
    # index (i, j) -> 3 i + j; (1,1)+(1,2) = (0,0)
    assert z6.mul(3 + 1, 3 + 2) == 0


def test_dihedral_table_relations():
    d4 = dihedral_table(4)
    # rotations 0..3, reflections 4..7; r * s-type element stays a reflection
    assert d4.mul(1, 1) == 2
    assert d4.mul(4, 4) == 0  # reflections are involutions
    assert not is_commutative(d4)
    assert d4.assoc_witness is None


def test_quaternion_table_relations():
    q8 = quaternion_table()
    i, j, k, minus = 1, 2, 3, 4
    assert q8.mul(i, i) == minus
    assert q8.mul(j, j) == minus
    assert q8.mul(i, j) == k
    assert q8.mul(j, i) == minus + k
    assert q8.assoc_witness is None
    assert is_moufang(q8)


def test_cml81_is_the_advertised_exhibit(cml):
    assert cml.n == 81
    assert is_commutative(cml)
    assert is_moufang(cml)
    assert cml.assoc_witness is not None
    assert cml.exponent == 3
    assert is_nk_loop(cml)


def test_chein12_is_moufang_but_not_nk(chein):
    assert chein.n == 12
    assert is_moufang(chein)
    assert is_diassociative(chein)
    assert chein.assoc_witness is not None
    assert not is_commutative(chein)
    assert not is_nk_loop(chein)


def test_chein_loop_of_abelian_group_is_a_group(group_map):
    doubled = chein_loop(group_map["z3"])
    assert doubled.n == 6
    assert doubled.assoc_witness is None


# --- enumeration counts ----------------------------------------------------------


def test_latin_square_counts_small():
    for n in (1, 2, 3, 4):
        assert len(kernels.latin_squares(n, "all")) == LATIN_COUNTS[n]


def test_latin_square_count_order_5(slow_tier):
    assert len(kernels.latin_squares(5, "all")) == LATIN_COUNTS[5]


def test_neutral_loop_counts():
    for n in (1, 2, 3, 4, 5):
        assert len(neutral_loops(n)) == LOOP0_COUNTS[n]


def test_neutral_loop_count_order_6(slow_tier):
    assert len(neutral_loops(6)) == LOOP0_COUNTS[6]


def test_f_quasigroup_counts_by_order():
    expected = {1: 1, 2: 2, 3: 12, 4: 120}
    for n, count in expected.items():
        tables = {P.q for P in search_f_quasigroups(n)}
        assert len(tables) == count, n
        # pointings: every element of every table
        assert len(search_f_quasigroups(n)) == count * n


def test_f_quasigroup_count_order_5(slow_tier):
    assert len({P.q for P in search_f_quasigroups(5)}) == 480


def test_search_refuses_large_orders():
    with pytest.raises(SearchTooLarge):
        search_f_quasigroups(6)


# --- arithmetic-form enumeration ----------------------------------------------------


def test_enumerate_forms_fixed_counts(group_map):
    assert len(enumerate_forms(group_map["z1"])) == 1
    assert len(enumerate_forms(group_map["z5"])) == 80
    s3_forms = enumerate_forms(group_map["s3"])
    assert len(s3_forms) == 6
    from quasimod.endo import identity_map

    for form in s3_forms:
        assert form.f == identity_map(6) and form.g == identity_map(6)
    assert sorted(form.e for form in s3_forms) == list(range(6))


def test_enumerate_forms_cap_truncates(group_map):
    assert len(enumerate_forms(group_map["z5"], cap=7)) == 7


def test_enumerated_forms_build_f_quasigroups(group_map):
    for name in ("z4", "z2x2", "s3"):
        for form in enumerate_forms(group_map[name], cap=40):
            from quasimod import build_fq

            assert is_f_quasigroup(build_fq(form, check=False)), name
