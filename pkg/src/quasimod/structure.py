"""Distinguished subsets, quotients, and multiplication groups.

Subsets (nucleus, Moufang center, center, commutant, middle-commuting set)
come back as SubsetWitness records whose members are validated closed under
the parent operation.  Quotients go through congruence closure: collapse the
subset, propagate translations to a fixpoint, and demand that the class of the
subset is exactly the subset.  Normality of a subloop is equivalently checked
by invariance under the standard inner-mapping generators.
"""

from collections import deque
from dataclasses import dataclass

from . import kernels
from .cayley import LoopTable, QuasigroupTable, close_subset, is_associative, is_moufang
from .errors import GroupTooLarge, InvariantViolation, Malformed, NotNKLoop, NotNormal

MULT_GROUP_CAP = 10 ** 7


@dataclass(frozen=True)
class SubsetWitness:
    """A distinguished subset of a table's carrier, closed under the operation."""

    kind: str
    members: tuple
    parent_order: int


def _witness(q, members, kind, need_zero=None):
    members = tuple(sorted(members))
    mset = set(members)
    rows = q.rows
    for a in members:
        for b in members:
            if rows[a][b] not in mset:
                raise InvariantViolation(
                    f"{kind} is not closed: {a}*{b} = {rows[a][b]} escapes")
    if need_zero is not None and need_zero not in mset:
        raise InvariantViolation(f"{kind} does not contain the neutral element")
    return SubsetWitness(kind, members, q.n)


def nucleus(L):
    return _witness(L.q, L.nucleus_members, "nucleus", L.zero)


def moufang_center(L):
    return _witness(L.q, L.moufang_center_members, "moufang_center", L.zero)


def center(L):
    """Intersection of nucleus and Moufang center."""
    return _witness(L.q, L.center_members, "center", L.zero)


def commutant(L):
    """Elements commuting with everything.  Not closed in general loops; in
    NK-loops it coincides with the Moufang center."""
    members = tuple(sorted(L.commutant_members))
    return SubsetWitness("commutant", members, L.n)


def m_set(q):
    """Elements a with (xa)(yx) = (xy)(ax) for all x, y."""
    if isinstance(q, LoopTable):
        q = q.q
    return _witness(q, kernels.m_set_members(q.n, q.flat), "m_set")


def sub_table(q, members):
    """Reindexed table of a closed subset; position i is members[i]."""
    if isinstance(q, LoopTable):
        q = q.q
    members = tuple(sorted(members))
    index = {e: i for i, e in enumerate(members)}
    rows = []
    for a in members:
        try:
            rows.append([index[q.rows[a][b]] for b in members])
        except KeyError:
            raise Malformed(f"subset {members} is not closed under the operation") from None
    return QuasigroupTable(rows)


def subloop(L, members):
    """LoopTable on a closed subset containing the neutral element."""
    return LoopTable(sub_table(L, members))


# ---------------------------------------------------------------------------
# congruence closure and quotients


def congruence_partition(q, members):
    """Finest congruence collapsing the given subset.

    Returns (class_of, classes): class_of maps elements to class indices and
    classes are sorted tuples ordered by their least member.
    """
    if isinstance(q, LoopTable):
        q = q.q
    n = q.n
    rows = q.rows
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    pending = deque()

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
            pending.append((a, b))

    members = tuple(members)
    for s in members[1:]:
        union(members[0], s)
    while pending:
        a, b = pending.popleft()
        for c in range(n):
            union(rows[c][a], rows[c][b])
            union(rows[a][c], rows[b][c])

    buckets = {}
    for x in range(n):
        buckets.setdefault(find(x), []).append(x)
    classes = sorted((tuple(v) for v in buckets.values()), key=lambda c: c[0])
    class_of = [0] * n
    for i, cls in enumerate(classes):
        for x in cls:
            class_of[x] = i
    return class_of, classes


@dataclass(frozen=True)
class QuotientTable:
    """Quotient by a normal subset: cosets ordered by least member."""

    cosets: tuple
    table: QuasigroupTable
    projection: tuple


def quotient(q, members):
    """Quotient table modulo the congruence collapsing the subset.

    Raises NotNormal when the congruence class of the subset is strictly
    larger than the subset, i.e. the subset is not the kernel of any
    congruence.
    """
    if isinstance(q, LoopTable):
        q = q.q
    members = tuple(sorted(members))
    class_of, classes = congruence_partition(q, members)
    if classes[class_of[members[0]]] != members:
        raise NotNormal(
            f"subset of size {len(members)} sits inside a congruence class of size "
            f"{len(classes[class_of[members[0]]])}")
    k = len(classes)
    rows = [[0] * k for _ in range(k)]
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            rows[i][j] = class_of[q.rows[ci[0]][cj[0]]]
    for x in range(q.n):
        for y in range(q.n):
            if class_of[q.rows[x][y]] != rows[class_of[x]][class_of[y]]:
                raise InvariantViolation("congruence classes fail well-definedness")
    return QuotientTable(tuple(classes), QuasigroupTable(rows), tuple(class_of))


# ---------------------------------------------------------------------------
# multiplication group, inner mappings, normality


def left_translation(q, x):
    return bytes(q.rows[x])


def right_translation(q, x):
    return bytes(q.rows[y][x] for y in range(q.n))


def inner_generators(L):
    """The standard inner-mapping generators T_x, L_{x,y}, R_{x,y}.

    Invariance of a subloop under these is equivalent to invariance under the
    whole inner mapping group (they generate it).
    """
    q = L.q
    n = L.n
    rows = q.rows
    gens = []
    for x in range(n):
        gens.append(bytes(q.left_divide(x, rows[y][x]) for y in range(n)))  # T_x
    for x in range(n):
        for y in range(n):
            xy = rows[x][y]
            gens.append(bytes(q.left_divide(xy, rows[x][rows[y][z]]) for z in range(n)))
            gens.append(bytes(q.right_divide(rows[rows[z][x]][y], xy) for z in range(n)))
    return gens


def is_normal_subloop(L, members):
    """Invariance of a subloop under every inner mapping (via the generators)."""
    mset = set(members)
    if L.zero not in mset:
        raise Malformed("a subloop must contain the neutral element")
    for a in members:
        for b in members:
            if L.q.rows[a][b] not in mset:
                raise Malformed("the given subset is not a subloop")
    for g in inner_generators(L):
        for s in members:
            if g[s] not in mset:
                return False
    return True


def multiplication_group(L, cap=MULT_GROUP_CAP):
    """Closure of all left and right translations, sorted; GroupTooLarge past cap."""
    gens = [left_translation(L.q, x) for x in range(L.n)]
    gens += [right_translation(L.q, x) for x in range(L.n)]
    perms, complete = kernels.perm_closure(L.n, gens, cap)
    if not complete:
        raise GroupTooLarge(f"multiplication group exceeds cap {cap}")
    return tuple(tuple(p) for p in perms)


def inner_mappings(L, cap=MULT_GROUP_CAP):
    """Stabilizer of the neutral element inside the multiplication group."""
    z = L.zero
    return tuple(p for p in multiplication_group(L, cap) if p[z] == z)


def a_loop_violation(L, cap=MULT_GROUP_CAP):
    """None, or (inner_map, x, y) for an inner mapping that is not an automorphism."""
    for p in inner_mappings(L, cap):
        w = kernels.hom_violation(L.n, L.flat, bytes(p))
        if w is not None:
            return (p, w[0], w[1])
    return None


def is_a_loop(L, cap=MULT_GROUP_CAP):
    return a_loop_violation(L, cap) is None


# ---------------------------------------------------------------------------
# NK-loops


def nk_decomposition(L):
    """Per element x the least (u, v), u in nucleus, v in Moufang center, with
    u+v = v+u = x; None if some element has no such splitting."""
    kset = set(L.moufang_center_members)
    rows = L.q.rows
    out = []
    for x in range(L.n):
        hit = None
        for u in L.nucleus_members:
            v = L.q.left_divide(u, x)
            if v in kset and rows[v][u] == x:
                hit = (u, v)
                break
        if hit is None:
            return None
        out.append(hit)
    return tuple(out)


def is_nk_loop(L):
    return nk_decomposition(L) is not None


def _fact(name, ok, witness=None):
    row = {"name": name, "pass": bool(ok)}
    if not ok:
        row["witness"] = witness
    return row


def verify_nk_facts(L):
    """Structure facts of NK-loops, each checked exhaustively.

    Rows: 3x lands in the nucleus; the nucleus is normal with quotient a
    commutative Moufang loop of exponent 3; the Moufang center is normal with
    associative quotient; the center chain Z(Q) = Z(N) = K(N) = Z(K) = N(K);
    the Moufang center equals the commutant.  Raises NotNKLoop when the loop
    has no nucleus/Moufang-center splitting.
    """
    if not is_nk_loop(L):
        raise NotNKLoop("no nucleus + Moufang-center decomposition")
    rows = L.q.rows
    nset = set(L.nucleus_members)
    facts = []

    bad = None
    for x in range(L.n):
        if rows[rows[x][x]][x] not in nset:
            bad = x
            break
    facts.append(_fact("three_x_in_nucleus", bad is None, bad))

    try:
        qn = LoopTable(quotient(L, L.nucleus_members).table)
        normal_n = is_normal_subloop(L, L.nucleus_members)
        comm = qn.commutative
        mouf = is_moufang(qn)
        exp3 = all(qn.rows[qn.rows[c][c]][c] == qn.zero for c in range(qn.n))
        facts.append(_fact("nucleus_normal_quotient_cml3",
                           normal_n and comm and mouf and exp3,
                           {"normal": normal_n, "commutative": comm,
                            "moufang": mouf, "exponent3": exp3}))
    except NotNormal as exc:
        facts.append(_fact("nucleus_normal_quotient_cml3", False, str(exc)))

    try:
        qk = LoopTable(quotient(L, L.moufang_center_members).table)
        normal_k = is_normal_subloop(L, L.moufang_center_members)
        assoc = is_associative(qk)
        facts.append(_fact("moufang_center_normal_quotient_group",
                           normal_k and assoc,
                           {"normal": normal_k, "associative": assoc}))
    except NotNormal as exc:
        facts.append(_fact("moufang_center_normal_quotient_group", False, str(exc)))

    subn = subloop(L, L.nucleus_members)
    subk = subloop(L, L.moufang_center_members)
    zq = set(L.center_members)
    back_n = L.nucleus_members
    back_k = L.moufang_center_members
    chain = {
        "Z(N)": {back_n[i] for i in subn.center_members},
        "K(N)": {back_n[i] for i in subn.moufang_center_members},
        "Z(K)": {back_k[i] for i in subk.center_members},
        "N(K)": {back_k[i] for i in subk.nucleus_members},
    }
    mism = {k: sorted(v) for k, v in chain.items() if v != zq}
    facts.append(_fact("center_chain", not mism,
                       {"Z(Q)": sorted(zq), "mismatches": mism} if mism else None))

    facts.append(_fact("moufang_center_equals_commutant",
                       set(L.moufang_center_members) == set(L.commutant_members),
                       {"moufang_center": list(L.moufang_center_members),
                        "commutant": list(L.commutant_members)}
                       if set(L.moufang_center_members) != set(L.commutant_members) else None))
    return facts
