"""Generalized modules: axioms, class membership, pointings, text format."""

import pytest

from quasimod import (
    GenModule,
    PointedGenModule,
    PointedFQ,
    QuasigroupTable,
    annihilator_contains,
    is_class_m,
    is_centrally_pointed,
    is_nuclearly_pointed,
    parse_module,
    parse_poly,
    rho,
    scalar_mul,
    serialize_module,
    verify_class_m,
    verify_module_axioms,
)
from quasimod.endo import identity_map, zero_map
from quasimod.errors import CarrierMismatch, Malformed, NotNKLoop


def affine_z5(point=0, shift=0):
    q = QuasigroupTable(
        [tuple((2 * x + 3 * y + shift) % 5 for y in range(5)) for x in range(5)])
    return PointedFQ.checked(q, point)


@pytest.fixture(scope="module")
def z5mod():
    return rho(affine_z5())


# --- construction ---------------------------------------------------------------


def test_rho_of_affine_z5_has_fixed_actions(z5mod):
    M = z5mod.module
    double = tuple(2 * x % 5 for x in range(5))
    assert M.phi == identity_map(5)
    assert M.psi == double
    assert M.mu == double
    assert M.nu == identity_map(5)
    assert z5mod.point == 0


def test_action_tuple_order(z5mod):
    M = z5mod.module
    assert M.action == (M.phi, M.psi, M.mu, M.nu)


def test_genmodule_rejects_wrong_length_actions(group_map):
    L = group_map["z4"]
    with pytest.raises(CarrierMismatch):
        GenModule(L, (0, 1, 2), identity_map(4), identity_map(4), identity_map(4))


def test_checked_requires_nk_loop(chein):
    with pytest.raises(NotNKLoop):
        GenModule.checked(chein, *((zero_map(chein),) * 4))


def test_checked_validates_images(group_map):
    from quasimod.errors import ImagesNotSpecial

    s3 = group_map["s3"]
    with pytest.raises(ImagesNotSpecial):
        GenModule.checked(s3, *((identity_map(6),) * 4))


# --- scalar action ----------------------------------------------------------------


def test_scalar_mul_matches_action(z5mod):
    M = z5mod.module
    for name, img in zip("xyuv", M.action):
        p = parse_poly(name)
        for t in range(5):
            assert scalar_mul(M, p, t) == img[t]


def test_scalar_mul_of_composite_poly(z5mod):
    M = z5mod.module
    p = parse_poly("x*y + 2*u")
    for t in range(5):
        expected = (M.phi[M.psi[t]] + 2 * M.mu[t]) % 5
        assert scalar_mul(M, p, t) == expected


def test_annihilator_membership(z5mod):
    M = z5mod.module
    # psi = mu = doubling: y - u annihilates; x - v likewise (both identity)
    assert annihilator_contains(M, parse_poly("y - u"))
    assert annihilator_contains(M, parse_poly("x - v"))
    assert not annihilator_contains(M, parse_poly("x"))
    # class-M identities: x + u + x*u and y + v + y*v annihilate
    assert annihilator_contains(M, parse_poly("x + u + x*u"))
    assert annihilator_contains(M, parse_poly("y + v + y*v"))


# --- axioms and class M --------------------------------------------------------------


def test_axioms_pass_on_rho_image(z5mod):
    rows = verify_module_axioms(z5mod.module)
    assert len(rows) == 6
    assert all(r["pass"] for r in rows), rows
    assert rows[-1]["witness_m"] is not None


def test_axiom_failure_on_non_special_action(group_map):
    # identity on s3xz3 is not special (image not inside the Moufang center),
    # so distributivity of the induced scalars fails somewhere
    L = group_map["s3xz3"]
    M = GenModule(L, identity_map(18), zero_map(L), zero_map(L), zero_map(L))
    rows = verify_module_axioms(M)
    assert not all(r["pass"] for r in rows)
    failing = [r for r in rows if not r["pass"]]
    assert all(r["counterexample"] is not None for r in failing)


def test_class_m_of_rho_image(z5mod):
    rows = verify_class_m(z5mod.module)
    assert len(rows) == 3
    assert all(r["pass"] for r in rows), rows
    assert is_class_m(z5mod.module)


def test_class_m_failure_detected(group_map):
    # phi = identity on z3: 2z + z = 3z = 0 nuclear, fine; use z4 where
    # 2z + z = 3z is not always 0 but z4 is abelian so N = Q: still passes.
    # A genuine failure needs the nucleus to be proper: s3xz3 with a special
    # action whose doubling condition fails cannot exist among SEnd, so
    # check the condition rows directly on a non-class-M action instead.
    L = group_map["s3xz3"]
    M = GenModule(L, zero_map(L), (0, 1, 2) * 6, zero_map(L), zero_map(L))
    rows = verify_class_m(M)
    assert not all(r["pass"] for r in rows)


def test_pointing_predicates(z5mod, group_map):
    assert is_nuclearly_pointed(z5mod)
    assert is_centrally_pointed(z5mod)
    s3 = group_map["s3"]
    M = GenModule(s3, *((zero_map(s3),) * 4))
    assert is_nuclearly_pointed(PointedGenModule(M, 3))
    assert not is_centrally_pointed(PointedGenModule(M, 3))


# --- text format ------------------------------------------------------------------------


def test_serialize_parse_roundtrip(z5mod):
    text = serialize_module(z5mod.module, point=z5mod.point)
    M2, point = parse_module(text)
    assert point == 0
    assert M2.loop.rows == z5mod.module.loop.rows
    assert M2.action == z5mod.module.action


def test_serialize_without_point(z5mod):
    text = serialize_module(z5mod.module)
    assert "point" not in text
    M2, point = parse_module(text)
    assert point is None
    assert M2.action == z5mod.module.action


def test_parse_rejects_missing_action_lines(z5mod):
    text = serialize_module(z5mod.module)
    broken = "\n".join(l for l in text.splitlines() if not l.startswith("mu"))
    with pytest.raises(Malformed):
        parse_module(broken)


def test_parse_rejects_bad_action_values(z5mod):
    text = serialize_module(z5mod.module).replace("phi: 0 1 2 3 4", "phi: 0 1 2 3 9")
    with pytest.raises(Malformed):
        parse_module(text)


def test_parse_rejects_duplicate_lines(z5mod):
    text = serialize_module(z5mod.module)
    with pytest.raises(Malformed):
        parse_module(text + "\nphi: 0 1 2 3 4\n")
    with pytest.raises(Malformed):
        parse_module(text + "\npoint 0\npoint 1\n")


# --- determinism ----------------------------------------------------------------------


def test_axiom_check_is_deterministic(z5mod):
    a = verify_module_axioms(z5mod.module, seed=123)
    b = verify_module_axioms(z5mod.module, seed=123)
    assert a == b
