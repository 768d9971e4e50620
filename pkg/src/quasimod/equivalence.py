"""Arithmetic forms and the two constructions converting between pointed
F-quasigroups and nuclearly pointed generalized modules.

An arithmetic form is an NK-loop together with two commuting automorphisms f,
g whose displacements land in the nucleus and Moufang center, plus a nuclear
constant e; it builds the quasigroup x*y = (f(x) + e) + g(y).  Recovery goes
the other way: every pointed F-quasigroup is a principal isotope of such a
loop, and the candidate isotopes with the right neutral are exactly the n
divisor pairs of the point, so recovery is a verified finite search.  The two
functors are rho (quasigroup to module, via displacement maps of f, g and
their inverses) and sigma (module to quasigroup, via z + phi(z)); round-trip
checkers assert they are mutually inverse, entrywise.
"""

from dataclasses import dataclass

from .cayley import LoopTable, QuasigroupTable, is_f_quasigroup
from .endo import delta_map, endo_compose, identity_map, is_automorphism
from .errors import (
    InvalidForm,
    InvariantViolation,
    Malformed,
    NoneFound,
    NotInClassM,
    NotNuclearlyPointed,
)
from .genmodule import GenModule, PointedGenModule, is_nuclearly_pointed, verify_class_m


@dataclass(frozen=True)
class ArithmeticForm:
    """Loop, two automorphisms, and a nuclear constant defining (f(x)+e)+g(y)."""

    loop: LoopTable
    f: tuple
    g: tuple
    e: int


@dataclass(frozen=True)
class PointedFQ:
    q: QuasigroupTable
    point: int

    @classmethod
    def checked(cls, q, point):
        if not 0 <= point < q.n:
            raise Malformed(f"point {point} outside carrier of order {q.n}")
        if not is_f_quasigroup(q):
            raise Malformed("table is not an F-quasigroup")
        return cls(q, point)


def form_report(form):
    """Each form condition with its first failing witness (None when it holds)."""
    L = form.loop
    n = L.n
    rows = L.q.rows
    nset = set(L.nucleus_members)
    kset = set(L.moufang_center_members)
    f, g = form.f, form.g

    def first(pred):
        return next((x for x in range(n) if not pred(x)), None)

    report = {
        "f_automorphism": is_automorphism(L, f) if len(f) == n else False,
        "g_automorphism": is_automorphism(L, g) if len(g) == n else False,
        "commute": endo_compose(f, g) == endo_compose(g, f) if len(f) == len(g) == n else False,
        "e_nuclear": form.e in nset if 0 <= form.e < n else False,
    }
    if report["f_automorphism"] and report["g_automorphism"]:
        report["sum_f_nuclear"] = first(lambda x: rows[x][f[x]] in nset)
        report["sum_g_nuclear"] = first(lambda x: rows[x][g[x]] in nset)
        report["displacement_f_central"] = first(
            lambda x: rows[L.neg_strict(x)][f[x]] in kset)
        report["displacement_g_central"] = first(
            lambda x: rows[L.neg_strict(x)][g[x]] in kset)
    return report


def validate_form(form):
    """Raise InvalidForm naming the first violated condition."""
    if form.loop.nk_pairs is None:
        raise InvalidForm("loop is not an NK-loop")
    report = form_report(form)
    for key in ("f_automorphism", "g_automorphism", "commute", "e_nuclear"):
        if not report[key]:
            raise InvalidForm(f"condition {key} fails")
    for key in ("sum_f_nuclear", "sum_g_nuclear",
                "displacement_f_central", "displacement_g_central"):
        if report[key] is not None:
            raise InvalidForm(f"condition {key} fails at x={report[key]}")


def build_fq(form, check=True):
    """The table x*y = (f(x) + e) + g(y); verified to be an F-quasigroup."""
    if check:
        validate_form(form)
    L = form.loop
    rows = L.q.rows
    f, g, e = form.f, form.g, form.e
    left = [rows[f[x]][e] for x in range(L.n)]
    table = [[rows[lx][g[y]] for y in range(L.n)] for lx in left]
    q = QuasigroupTable(table)
    if check and not is_f_quasigroup(q):
        raise InvariantViolation("a valid arithmetic form must build an F-quasigroup")
    return q


def recover_form_candidates(P):
    """All verified arithmetic forms for a pointed F-quasigroup.

    Candidates: for each u there is exactly one v with v*u = point; the
    principal isotope x@y = (x right-divided by u) * (v left-divided into y)
    is a loop with neutral `point`.  When that loop is NK, the constant and
    maps are forced: e = point*point in the original table, f(x) solves
    f(x) @ e = x*point, g(y) solves e @ g(y) = point*y.  Candidates whose form
    conditions verify and whose built table reproduces the input exactly are
    returned as (u, v, form), ascending in (u, v).
    """
    q, a = P.q, P.point
    n = q.n
    rows = q.rows
    rdiv = q.right_div
    ldiv = q.left_div
    out = []
    for u in range(n):
        v = rdiv[a][u]
        o_rows = [[rows[rdiv[x][u]][ldiv[v][y]] for y in range(n)] for x in range(n)]
        oq = QuasigroupTable(o_rows)
        L = LoopTable(oq, zero=a)
        if L.nk_pairs is None:
            continue
        e = rows[a][a]
        ordiv = oq.right_div
        oldiv = oq.left_div
        f = tuple(ordiv[rows[x][a]][e] for x in range(n))
        g = tuple(oldiv[e][rows[a][y]] for y in range(n))
        form = ArithmeticForm(L, f, g, e)
        try:
            validate_form(form)
        except InvalidForm:
            continue
        if build_fq(form, check=False) != q:
            continue
        out.append((u, v, form))
    return out


def recover_form(P):
    """Verified arithmetic forms for P, deterministically ordered; never empty."""
    forms = [form for _u, _v, form in recover_form_candidates(P)]
    if not forms:
        raise NoneFound("no arithmetic form verified; this falsifies the "
                        "representation theorem on this instance")
    return forms


def _inverse_perm(f):
    inv = [0] * len(f)
    for x, w in enumerate(f):
        inv[w] = x
    return tuple(inv)


def module_from_form(form):
    """The generalized module an arithmetic form induces, pointed at its constant.

    The four action images are the displacement maps of f, g and their
    inverses; the point is the form's constant.
    """
    L = form.loop
    phi = delta_map(L, form.f)
    psi = delta_map(L, form.g)
    mu = delta_map(L, _inverse_perm(form.f))
    nu = delta_map(L, _inverse_perm(form.g))
    M = GenModule.checked(L, phi, psi, mu, nu)
    return PointedGenModule(M, form.e)


def rho(P, form=None):
    """Pointed F-quasigroup -> nuclearly pointed generalized module.

    Uses the first recovered arithmetic form unless one is supplied.
    """
    if form is None:
        form = recover_form(P)[0]
    return module_from_form(form)


def sigma_form(PM):
    """The arithmetic form induced by a class-M nuclearly pointed module."""
    M, e = PM.module, PM.point
    if any(not row["pass"] for row in verify_class_m(M)):
        raise NotInClassM("module fails a class-M condition")
    if not is_nuclearly_pointed(PM):
        raise NotNuclearlyPointed(f"point {e} is not nuclear")
    L = M.loop
    rows = L.q.rows
    f = tuple(rows[z][M.phi[z]] for z in range(L.n))
    g = tuple(rows[z][M.psi[z]] for z in range(L.n))
    h = tuple(rows[z][M.mu[z]] for z in range(L.n))
    k = tuple(rows[z][M.nu[z]] for z in range(L.n))
    ident = identity_map(L.n)
    if not (endo_compose(f, h) == ident == endo_compose(h, f)
            and endo_compose(g, k) == ident == endo_compose(k, g)):
        raise InvariantViolation("z + mu(z) must invert z + phi(z) on class-M modules")
    return ArithmeticForm(L, f, g, e)


def sigma(PM):
    """Class-M nuclearly pointed module -> pointed F-quasigroup at the loop zero."""
    form = sigma_form(PM)
    return PointedFQ(build_fq(form), form.loop.zero)


def roundtrip_fq_report(P):
    """Does sigma(rho(P)) reproduce P exactly? Report with first difference."""
    back = sigma(rho(P))
    if back.point != P.point:
        return {"pass": False, "difference": {"point": (P.point, back.point)}}
    for x in range(P.q.n):
        for y in range(P.q.n):
            if back.q.rows[x][y] != P.q.rows[x][y]:
                return {"pass": False,
                        "difference": {"x": x, "y": y,
                                       "expected": P.q.rows[x][y],
                                       "got": back.q.rows[x][y]}}
    return {"pass": True, "difference": None}


def roundtrip_fq(P):
    return roundtrip_fq_report(P)["pass"]


def roundtrip_module_report(PM):
    """Does rho(sigma(PM)), with sigma's induced form, reproduce PM exactly?"""
    form = sigma_form(PM)
    P = PointedFQ(build_fq(form), form.loop.zero)
    back = rho(P, form=form)
    if back.module.loop.q != PM.module.loop.q:
        return {"pass": False, "difference": {"component": "loop"}}
    for name, before, after in zip(("phi", "psi", "mu", "nu"),
                                   PM.module.action, back.module.action):
        if before != after:
            x = next(i for i in range(len(before)) if before[i] != after[i])
            return {"pass": False,
                    "difference": {"component": name, "x": x,
                                   "expected": before[x], "got": after[x]}}
    if back.point != PM.point:
        return {"pass": False, "difference": {"component": "point",
                                              "expected": PM.point,
                                              "got": back.point}}
    return {"pass": True, "difference": None}


def roundtrip_module(PM):
    return roundtrip_module_report(PM)["pass"]


def check_fm_mc(P):
    """The pointed-class biconditional: point in M(Q) iff e central, per form.

    Returns a report over every recovered form; `pass` requires the
    biconditional to hold for each one.
    """
    from .structure import m_set

    in_m = P.point in set(m_set(P.q).members)
    rows = []
    ok = True
    for u, v, form in recover_form_candidates(P):
        central = form.e in set(form.loop.center_members)
        agree = central == in_m
        ok = ok and agree
        rows.append({"u": u, "v": v, "e": form.e,
                     "e_central": central, "biconditional": agree})
    if not rows:
        raise NoneFound("no arithmetic form verified; this falsifies the "
                        "representation theorem on this instance")
    return {"point_in_m_set": in_m, "forms": rows, "pass": ok}
