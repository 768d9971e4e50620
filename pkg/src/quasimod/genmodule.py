"""Generalized modules: an NK-loop acted on by four commuting special maps.

A module is stored by the images of the four ring generators — phi, psi, mu,
nu — since the scalar action of any polynomial is determined by substitution.
This module provides the axiom scans (distributivity, mixed associativity,
Moufang-center/nucleus ranges, the integer-witness axiom), the three-condition
class-M membership test, annihilator membership, the pointed-class predicates,
and a text format mirroring the Cayley-table format plus four action lines.
"""

import random
from dataclasses import dataclass

from .cayley import LoopTable, _significant_lines, parse_table, serialize_table
from .errors import CarrierMismatch, Malformed, NotNKLoop
from .polyring import Poly, check_images, evaluate, generators, poly_add, poly_mul

ACTION_NAMES = ("phi", "psi", "mu", "nu")
AXIOM_SEED = 0xF00D


@dataclass(frozen=True)
class GenModule:
    """An NK-loop with the four generator images of its scalar action."""

    loop: LoopTable
    phi: tuple
    psi: tuple
    mu: tuple
    nu: tuple

    def __post_init__(self):
        n = self.loop.n
        for name, f in zip(ACTION_NAMES, self.action):
            if len(f) != n or any(not 0 <= w < n for w in f):
                raise CarrierMismatch(f"{name} is not a map on {n} elements")

    @property
    def action(self):
        return (self.phi, self.psi, self.mu, self.nu)

    @classmethod
    def checked(cls, loop, phi, psi, mu, nu):
        """Build and structurally validate: NK carrier, special commuting images."""
        m = cls(loop, tuple(phi), tuple(psi), tuple(mu), tuple(nu))
        if loop.nk_pairs is None:
            raise NotNKLoop("generalized modules live over NK-loops")
        check_images(loop, m.action)
        return m


@dataclass(frozen=True)
class PointedGenModule:
    module: GenModule
    point: int

    def __post_init__(self):
        if not 0 <= self.point < self.module.loop.n:
            raise Malformed(f"point {self.point} outside carrier")


def scalar_mul(M, p, x, check=False):
    """The action of polynomial p on element x."""
    return evaluate(p, M.action, M.loop, check=check)[x]


def annihilator_contains(M, p):
    """True iff p acts as the constant-zero map."""
    zero = M.loop.zero
    return all(w == zero for w in evaluate(p, M.action, M.loop, check=False))


def _random_poly(rng, max_terms=3):
    monos = []
    for i in range(4):
        e = [0, 0, 0, 0]
        e[i] = 1
        monos.append(tuple(e))
    for i in range(4):
        for j in range(i, 4):
            e = [0, 0, 0, 0]
            e[i] += 1
            e[j] += 1
            monos.append(tuple(e))
    acc = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = monos[rng.randrange(len(monos))]
        coeff = rng.choice([c for c in range(-9, 10) if c])
        acc[exps] = acc.get(exps, 0) + coeff
    return Poly(acc)


def verify_module_axioms(M, seed=AXIOM_SEED, random_pairs=8):
    """Scan the six module axioms; returns one report row per axiom.

    Axioms 1-3 are checked for the generator polynomials exhaustively and for
    `random_pairs` seeded random pairs of degree <= 2; axioms 4-6 are checked
    for each generator image over Q, the nucleus, and the Moufang center
    respectively, with the axiom-6 integer witness searched uniformly over
    0..exponent-1.  Failures become report rows, never exceptions.
    """
    L = M.loop
    n = L.n
    rows_t = L.q.rows
    rng = random.Random(seed)
    gens = generators()
    pairs = [(a, b) for a in gens for b in gens]
    pairs += [(_random_poly(rng), _random_poly(rng)) for _ in range(random_pairs)]
    maps = {}

    def ev(p):
        if p not in maps:
            maps[p] = evaluate(p, M.action, L, check=False)
        return maps[p]

    report = []

    inst, ce = 0, None
    for a in gens + tuple(p for p, _ in pairs[len(gens) * len(gens):]):
        fa = ev(a)
        for x in range(n):
            for y in range(n):
                inst += 1
                if fa[rows_t[x][y]] != rows_t[fa[x]][fa[y]]:
                    ce = {"a": str(a), "x": x, "y": y}
                    break
            if ce:
                break
        if ce:
            break
    report.append({"axiom": 1, "detail": "a(x+y) = ax+ay",
                   "instances": inst, "pass": ce is None, "counterexample": ce})

    inst, ce = 0, None
    for a, b in pairs:
        fa, fb, fs = ev(a), ev(b), ev(poly_add(a, b))
        for x in range(n):
            inst += 1
            if fs[x] != rows_t[fa[x]][fb[x]]:
                ce = {"a": str(a), "b": str(b), "x": x}
                break
        if ce:
            break
    report.append({"axiom": 2, "detail": "(a+b)x = ax+bx",
                   "instances": inst, "pass": ce is None, "counterexample": ce})

    inst, ce = 0, None
    for a, b in pairs:
        fa, fb, fp = ev(a), ev(b), ev(poly_mul(a, b))
        for x in range(n):
            inst += 1
            if fa[fb[x]] != fp[x]:
                ce = {"a": str(a), "b": str(b), "x": x}
                break
        if ce:
            break
    report.append({"axiom": 3, "detail": "a(bx) = (ab)x",
                   "instances": inst, "pass": ce is None, "counterexample": ce})

    kset = set(L.moufang_center_members)
    inst, ce = 0, None
    for name, f in zip(ACTION_NAMES, M.action):
        for x in range(n):
            inst += 1
            if f[x] not in kset:
                ce = {"image": name, "x": x}
                break
        if ce:
            break
    report.append({"axiom": 4, "detail": "ax lies in the Moufang center",
                   "instances": inst, "pass": ce is None, "counterexample": ce})

    nset = set(L.nucleus_members)
    inst, ce = 0, None
    for name, f in zip(ACTION_NAMES, M.action):
        for z in L.nucleus_members:
            inst += 1
            if f[z] not in nset:
                ce = {"image": name, "z": z}
                break
        if ce:
            break
    report.append({"axiom": 5, "detail": "a maps the nucleus into itself",
                   "instances": inst, "pass": ce is None, "counterexample": ce})

    zset = set(L.center_members)
    pow_t = L.pow_table
    inst, ce = 0, None
    witnesses = {}
    for name, f in zip(ACTION_NAMES, M.action):
        found = None
        for m in range(L.exponent):
            pm = pow_t[m]
            ok = True
            for w in L.moufang_center_members:
                inst += 1
                if rows_t[pm[w]][f[w]] not in zset:
                    ok = False
                    break
            if ok:
                found = m
                break
        witnesses[name] = found
        if found is None and ce is None:
            ce = {"image": name}
    report.append({"axiom": 6, "detail": "mw + aw central for a global integer m",
                   "instances": inst, "pass": ce is None, "counterexample": ce,
                   "witness_m": witnesses})
    return report


def verify_class_m(M):
    """The three defining conditions of the distinguished module class."""
    L = M.loop
    rows_t = L.q.rows
    nset = set(L.nucleus_members)
    pow2 = L.pow_table[2 % L.exponent]
    report = []
    ce, inst = None, 0
    for name, f in (("phi", M.phi), ("psi", M.psi)):
        for z in range(L.n):
            inst += 1
            if rows_t[pow2[z]][f[z]] not in nset:
                ce = {"image": name, "z": z}
                break
        if ce:
            break
    report.append({"condition": 1, "detail": "2z + xz and 2z + yz nuclear",
                   "instances": inst, "pass": ce is None, "counterexample": ce})
    x, y, u, v = generators()
    for idx, p in ((2, poly_add(poly_add(x, u), poly_mul(x, u))),
                   (3, poly_add(poly_add(y, v), poly_mul(y, v)))):
        ok = annihilator_contains(M, p)
        report.append({"condition": idx, "detail": f"{p} annihilates",
                       "instances": L.n, "pass": ok, "counterexample": None})
    return report


def is_class_m(M):
    return all(row["pass"] for row in verify_class_m(M))


def is_nuclearly_pointed(PM):
    return PM.point in set(PM.module.loop.nucleus_members)


def is_centrally_pointed(PM):
    return PM.point in set(PM.module.loop.center_members)


# ---------------------------------------------------------------------------
# text format


def parse_module(text):
    """Parse a module file: table, four action lines, optional point line.

    Returns (GenModule, point_or_None); the module is structurally validated.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise Malformed("empty module file")
    try:
        n = int(lines[0])
    except ValueError:
        raise Malformed(f"expected an order line, got {lines[0]!r}") from None
    if len(lines) < 1 + n:
        raise Malformed(f"expected {n} table rows, found {len(lines) - 1}")
    q = parse_table("\n".join(lines[:1 + n]))
    L = LoopTable(q)
    actions = {}
    point = None
    for line in lines[1 + n:]:
        tokens = line.split()
        if tokens and tokens[0].lower() == "point":
            if point is not None:
                raise Malformed("duplicate point line")
            if len(tokens) != 2:
                raise Malformed(f"bad point line {line!r}")
            try:
                point = int(tokens[1])
            except ValueError:
                raise Malformed(f"bad point line {line!r}") from None
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise Malformed(f"unexpected line {line!r} in module file")
        if key not in ACTION_NAMES:
            raise Malformed(f"unknown action line {key!r}")
        if key in actions:
            raise Malformed(f"duplicate action line {key!r}")
        try:
            vals = tuple(int(tok) for tok in rest.split())
        except ValueError:
            raise Malformed(f"bad action line {line!r}") from None
        actions[key] = vals
    missing = [name for name in ACTION_NAMES if name not in actions]
    if missing:
        raise Malformed(f"missing action lines: {', '.join(missing)}")
    if point is not None and not 0 <= point < n:
        raise Malformed(f"point {point} outside carrier of order {n}")
    try:
        M = GenModule.checked(L, *(actions[name] for name in ACTION_NAMES))
    except CarrierMismatch as exc:
        raise Malformed(str(exc)) from None
    return M, point


def serialize_module(M, point=None):
    out = [serialize_table(M.loop.q)]
    for name, f in zip(ACTION_NAMES, M.action):
        out.append(f"{name}: {' '.join(str(w) for w in f)}\n")
    if point is not None:
        out.append(f"point {point}\n")
    return "".join(out)
