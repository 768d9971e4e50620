"""Deterministic generators of test structures.

Small groups (cyclic, dihedral, quaternion, direct products), an order-81
commutative Moufang loop built on Z3^4 with an associator twist in the last
coordinate, the order-12 Moufang double of S3, exhaustive Latin-square /
F-quasigroup searches for small orders, and enumeration of all arithmetic
forms over a given loop.  Every constructed structure verifies its own
defining properties before being served and aborts loudly otherwise.
"""

from functools import cache

from . import kernels
from .cayley import LoopTable, QuasigroupTable, is_associative
from .endo import enumerate_automorphisms, endo_compose, satisfies_condition_f
from .equivalence import ArithmeticForm, PointedFQ
from .errors import ConstructionInvalid, SearchTooLarge

LATIN_COUNTS = {1: 1, 2: 2, 3: 12, 4: 576, 5: 161280}
LOOP0_COUNTS = {1: 1, 2: 1, 3: 1, 4: 4, 5: 56, 6: 9408}


def _group(rows, name):
    L = LoopTable(QuasigroupTable(rows))
    if not is_associative(L):
        raise ConstructionInvalid(f"{name} table is not associative")
    return L


def cyclic_table(n):
    return _group([[(i + j) % n for j in range(n)] for i in range(n)], f"Z{n}")


def direct_product(a, b):
    """Componentwise product of two loops; index (i, j) -> i*b.n + j."""
    n1, n2 = a.n, b.n
    ra, rb = a.q.rows, b.q.rows
    rows = []
    for i1 in range(n1):
        for i2 in range(n2):
            row = []
            for j1 in range(n1):
                for j2 in range(n2):
                    row.append(ra[i1][j1] * n2 + rb[i2][j2])
            rows.append(row)
    return LoopTable(QuasigroupTable(rows))


def dihedral_table(n):
    """Order 2n: indices 0..n-1 are rotations, n..2n-1 reflections."""
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            rows[a][b] = (a + b) % n
            rows[a][n + b] = n + (a + b) % n
            rows[n + a][b] = n + (a - b) % n
            rows[n + a][n + b] = (a - b) % n
    return _group(rows, f"dihedral order {size}")


def quaternion_table():
    """The eight quaternion units; index = 4*sign + base for base 1, i, j, k."""
    base = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
        (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    rows = [[0] * 8 for _ in range(8)]
    for s1 in range(2):
        for b1 in range(4):
            for s2 in range(2):
                for b2 in range(4):
                    s, b = base[(b1, b2)]
                    rows[s1 * 4 + b1][s2 * 4 + b2] = ((s1 ^ s2 ^ s) * 4) + b
    return _group(rows, "quaternion group")


@cache
def group_tables():
    """The named group corpus, each table validated as a group."""
    z = {n: cyclic_table(n) for n in range(1, 10)}
    s3 = dihedral_table(3)
    out = [(f"z{n}", z[n]) for n in range(1, 10)]
    out += [
        ("z2x2", direct_product(z[2], z[2])),
        ("z2x2x2", direct_product(z[2], direct_product(z[2], z[2]))),
        ("z4x2", direct_product(z[4], z[2])),
        ("z3x3", direct_product(z[3], z[3])),
        ("s3", s3),
        ("d4", dihedral_table(4)),
        ("q8", quaternion_table()),
        ("s3xz3", direct_product(s3, z[3])),
    ]
    for name, L in out:
        if not is_associative(L):
            raise ConstructionInvalid(f"{name} failed group validation")
    return tuple(out)


@cache
def cml81():
    """An order-81 commutative Moufang loop: Z3^4 with a twisted last coordinate.

    (a,b,c,d) + (a',b',c',d') = (a+a', b+b', c+c', d+d' + (a-a')(bc'-b'c))
    with all coordinates mod 3.  Self-verifies: commutative, Moufang,
    nonassociative, exponent 3, NK.
    """
    from .structure import nk_decomposition

    def idx(a, b, c, d):
        return ((a * 3 + b) * 3 + c) * 3 + d

    coords = [(a, b, c, d)
              for a in range(3) for b in range(3) for c in range(3) for d in range(3)]
    rows = [[0] * 81 for _ in range(81)]
    for i, (a, b, c, d) in enumerate(coords):
        for j, (a2, b2, c2, d2) in enumerate(coords):
            twist = (a - a2) * (b * c2 - b2 * c)
            rows[i][j] = idx((a + a2) % 3, (b + b2) % 3, (c + c2) % 3,
                             (d + d2 + twist) % 3)
    L = LoopTable(QuasigroupTable(rows))
    if not L.commutative:
        raise ConstructionInvalid("order-81 loop is not commutative")
    if L.moufang_witness is not None:
        raise ConstructionInvalid("order-81 loop is not Moufang")
    if L.assoc_witness is None:
        raise ConstructionInvalid("order-81 loop is unexpectedly associative")
    if L.exponent != 3:
        raise ConstructionInvalid(f"order-81 loop has exponent {L.exponent}")
    if nk_decomposition(L) is None:
        raise ConstructionInvalid("order-81 loop is not an NK-loop")
    return L


def chein_loop(G):
    """The Moufang double of a group: order 2n on G plus a formal unit.

    g*h = gh, g*(hu) = (hg)u, (gu)*h = (g h^-1)u, (gu)*(hu) = h^-1 g.
    Nonassociative (and verified Moufang) whenever G is nonabelian.
    """
    n = G.n
    rg = G.q.rows
    inv = [G.neg_strict(h) for h in range(n)]
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    for g in range(n):
        for h in range(n):
            rows[g][h] = rg[g][h]
            rows[g][n + h] = n + rg[h][g]
            rows[n + g][h] = n + rg[g][inv[h]]
            rows[n + g][n + h] = rg[inv[h]][g]
    L = LoopTable(QuasigroupTable(rows))
    if L.moufang_witness is not None:
        raise ConstructionInvalid("Moufang double failed the Moufang check")
    if not G.commutative and L.assoc_witness is None:
        raise ConstructionInvalid("Moufang double of a nonabelian group must be nonassociative")
    return L


@cache
def chein12():
    """The smallest nonassociative Moufang loop, as the double of S3."""
    return chein_loop(dihedral_table(3))


def enumerate_forms(L, cap=500):
    """All arithmetic forms over L, ascending in (f, g, e), truncated at cap.

    Pairs of commuting condition-F automorphisms crossed with every nuclear
    constant; enumeration is complete below the cap.
    """
    auts = enumerate_automorphisms(L)
    fa = [f for f in auts if satisfies_condition_f(L, f)]
    nuclear = L.nucleus_members
    out = []
    for f in fa:
        for g in fa:
            if endo_compose(f, g) != endo_compose(g, f):
                continue
            for e in nuclear:
                out.append(ArithmeticForm(L, f, g, e))
                if len(out) >= cap:
                    return out
    return out


def search_f_quasigroups(n):
    """Every F-quasigroup table of order n (full Latin scan), all pointings."""
    if n > 5:
        raise SearchTooLarge("full Latin-square scans are limited to order 5")
    squares = kernels.latin_squares(n, "all")
    flats = kernels.filter_f_tables(n, squares)
    out = []
    for flat in flats:
        rows = [tuple(flat[i * n:(i + 1) * n]) for i in range(n)]
        q = QuasigroupTable(rows)
        for a in range(n):
            out.append(PointedFQ(q, a))
    return out


def neutral_loops(n):
    """Every loop table of order n whose neutral element is 0, in lex order."""
    return [QuasigroupTable([tuple(flat[i * n:(i + 1) * n]) for i in range(n)])
            for flat in kernels.latin_squares(n, "loops0")]


@cache
def corpus_tables():
    """Stable-named corpus: the groups plus the two nonassociative exhibits."""
    return group_tables() + (("cml81", cml81()), ("chein12", chein12()))
