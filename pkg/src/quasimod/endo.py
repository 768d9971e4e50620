"""Endomorphisms of a loop and the lemma suite over them.

An endomorphism is a plain tuple of images (index vector over the carrier).
Pointwise addition, negation, and composition give the ring-like operations;
the distinguished classes are central (image inside the center), quasicentral
(some integer m with mx + f(x) central for every x), special (image inside the
Moufang center, quasicentral on it, nucleus preserved), and the displacement
condition (x + f(x) nuclear and -x + f(x) Moufang-central for every x).

Enumeration searches over generator images with per-level consistency checks;
for the distinguished classes the generator images are restricted to the exact
candidate cosets first and the full defining scan filters afterwards, so large
loops never require the full endomorphism monoid.
"""

from dataclasses import dataclass

from . import kernels
from .cayley import LoopTable
from .errors import CarrierMismatch, InvariantViolation, NotNKLoop, SearchTooLarge

SEARCH_CAP = 5_000_000


def _check_len(L, f):
    if len(f) != L.n:
        raise CarrierMismatch(f"map of length {len(f)} over carrier of order {L.n}")


def identity_map(n):
    return tuple(range(n))


def zero_map(L):
    return (L.zero,) * L.n


def endo_add(L, f, g):
    """Pointwise sum (f+g)(x) = f(x) + g(x); the raw map, closure not assumed."""
    _check_len(L, f)
    _check_len(L, g)
    rows = L.q.rows
    return tuple(rows[f[x]][g[x]] for x in range(L.n))


def endo_neg(L, f):
    """Pointwise negation via the two-sided inverse."""
    _check_len(L, f)
    return tuple(L.neg_strict(f[x]) for x in range(L.n))


def endo_compose(f, g):
    """(f g)(x) = f(g(x))."""
    if len(f) != len(g):
        raise CarrierMismatch(f"composing maps of lengths {len(f)} and {len(g)}")
    return tuple(f[x] for x in g)


def endo_violation(L, f):
    _check_len(L, f)
    return kernels.hom_violation(L.n, L.flat, bytes(f))


def is_endomorphism(L, f):
    return endo_violation(L, f) is None


def is_automorphism(L, f):
    return len(set(f)) == L.n and is_endomorphism(L, f)


def is_central(L, f):
    """Image contained in the center."""
    _check_len(L, f)
    z = set(L.center_members)
    return all(v in z for v in f)


@dataclass(frozen=True)
class QuasicentralWitness:
    endo: tuple
    witnesses: tuple  # every m in 0..exponent-1 with mx + f(x) central for all x


def quasicentral_witnesses(L, f):
    """All m in 0..exponent-1 making f m-quasicentral."""
    _check_len(L, f)
    rows = L.q.rows
    z = set(L.center_members)
    pow_t = L.pow_table
    out = []
    for m in range(L.exponent):
        pm = pow_t[m]
        if all(rows[pm[x]][f[x]] in z for x in range(L.n)):
            out.append(m)
    return QuasicentralWitness(tuple(f), tuple(out))


def is_quasicentral(L, f):
    return bool(quasicentral_witnesses(L, f).witnesses)


def _k_subloop(L):
    from .structure import subloop

    members = L.moufang_center_members
    sub = subloop(L, members)
    index = {e: i for i, e in enumerate(members)}
    return sub, index


def is_special(L, f):
    """Image in the Moufang center, quasicentral there, nucleus preserved.

    Requires an NK-loop carrier (NotNKLoop otherwise).
    """
    _check_len(L, f)
    if L.nk_pairs is None:
        raise NotNKLoop("special endomorphisms live over NK-loops")
    kset = set(L.moufang_center_members)
    if any(v not in kset for v in f):
        return False
    nset = set(L.nucleus_members)
    if any(f[x] not in nset for x in L.nucleus_members):
        return False
    sub, index = L.k_subloop
    restricted = tuple(index[f[e]] for e in L.moufang_center_members)
    if not is_endomorphism(sub, restricted):
        return False
    return is_quasicentral(sub, restricted)


def satisfies_condition_f(L, f):
    """x + f(x) nuclear and -x + f(x) Moufang-central, for every x."""
    return condition_f_report(L, f)["holds"]


def condition_f_report(L, f):
    _check_len(L, f)
    rows = L.q.rows
    nset = set(L.nucleus_members)
    kset = set(L.moufang_center_members)
    nuclear_w = next((x for x in range(L.n) if rows[x][f[x]] not in nset), None)
    central_w = next((x for x in range(L.n)
                      if rows[L.neg_strict(x)][f[x]] not in kset), None)
    report = {
        "holds": nuclear_w is None and central_w is None,
        "nuclear_witness": nuclear_w,
        "central_witness": central_w,
        "maps_moufang_center_into_itself": all(f[k] in kset for k in kset),
        "maps_nucleus_into_itself": all(f[a] in nset for a in nset),
    }
    return report


def delta_map(L, f):
    """h(x) = -x + f(x); for condition-F endomorphisms this is special."""
    if not satisfies_condition_f(L, f):
        from .errors import ConditionFViolated

        raise ConditionFViolated("delta_map requires the displacement condition")
    rows = L.q.rows
    h = tuple(rows[L.neg_strict(x)][f[x]] for x in range(L.n))
    if not is_special(L, h):
        raise InvariantViolation("displacement of a condition-F endomorphism must be special")
    return h


# ---------------------------------------------------------------------------
# enumeration


def _closure_plan(L):
    """Greedy generating set, closure order, definitions, and check buckets."""
    n = L.n
    rows = L.q.rows
    pos = {L.zero: 0}
    elems = [L.zero]
    level = [0]
    defs = [(-1, -1)]
    gens = []
    for x in range(n):
        if x in pos:
            continue
        gens.append(x)
        lvl = len(gens)
        pos[x] = len(elems)
        elems.append(x)
        level.append(lvl)
        defs.append((-1, -1))
        work = [len(elems) - 1]
        while work:
            p = work.pop(0)
            a = elems[p]
            for q in range(len(elems)):
                b = elems[q]
                ab = rows[a][b]
                if ab not in pos:
                    pos[ab] = len(elems)
                    elems.append(ab)
                    level.append(lvl)
                    defs.append((p, q))
                    work.append(len(elems) - 1)
                ba = rows[b][a]
                if ba not in pos:
                    pos[ba] = len(elems)
                    elems.append(ba)
                    level.append(lvl)
                    defs.append((q, p))
                    work.append(len(elems) - 1)
    nlevels = len(gens)
    gen_positions = [pos[g] for g in gens]
    ext_pos, ext_di, ext_dj = [], [], []
    ext_start = [0]
    for lvl in range(1, nlevels + 1):
        for p in range(n):
            if level[p] == lvl and defs[p] != (-1, -1):
                ext_pos.append(p)
                ext_di.append(defs[p][0])
                ext_dj.append(defs[p][1])
        ext_start.append(len(ext_pos))
    buckets = [[] for _ in range(nlevels + 1)]
    for i in range(n):
        for j in range(n):
            kpos = pos[rows[elems[i]][elems[j]]]
            buckets[max(level[i], level[j], level[kpos])].append((i, j, kpos))
    bk_i, bk_j, bk_k = [], [], []
    bk_start = [0]
    for lvl in range(nlevels + 1):
        for i, j, kpos in buckets[lvl]:
            bk_i.append(i)
            bk_j.append(j)
            bk_k.append(kpos)
        bk_start.append(len(bk_i))
    return {
        "nlevels": nlevels,
        "gens": gens,
        "gen_positions": gen_positions,
        "ext": (ext_pos, ext_di, ext_dj, ext_start),
        "buckets": (bk_i, bk_j, bk_k, bk_start),
        "elems": elems,
    }


def _search(L, allowed, cap):
    plan = L.endo_plan
    ext_pos, ext_di, ext_dj, ext_start = plan["ext"]
    bk_i, bk_j, bk_k, bk_start = plan["buckets"]
    maps, complete, _nodes = kernels.endo_search(
        L.n, L.flat, L.zero, plan["nlevels"], plan["gen_positions"],
        ext_pos, ext_di, ext_dj, ext_start,
        bk_i, bk_j, bk_k, bk_start,
        plan["elems"], allowed, cap)
    if not complete:
        raise SearchTooLarge(f"endomorphism search exceeded node cap {cap}")
    return [tuple(m) for m in maps]


def enumerate_endomorphisms(L, cap=SEARCH_CAP):
    """All endomorphisms, sorted lexicographically as image tuples."""
    allowed = [list(range(L.n)) for _ in L.endo_plan["gens"]]
    return tuple(_search(L, allowed, cap))


def enumerate_automorphisms(L, cap=SEARCH_CAP):
    n = L.n
    allowed = [list(range(n)) for _ in L.endo_plan["gens"]]
    return tuple(f for f in _search(L, allowed, cap) if len(set(f)) == n)


def central_endomorphisms(L, cap=SEARCH_CAP):
    """Endomorphisms with image inside the center."""
    z = sorted(L.center_members)
    allowed = [list(z) for _ in L.endo_plan["gens"]]
    return tuple(f for f in _search(L, allowed, cap) if is_central(L, f))


def quasicentral_endomorphisms(L, cap=SEARCH_CAP):
    """All quasicentral endomorphisms, by per-witness coset-restricted search.

    An m-quasicentral endomorphism must map each generator g into the coset
    {w : m*g + w central}, so the union of the restricted searches over m is
    complete; the full witness scan filters the candidates.
    """
    z = sorted(L.center_members)
    pow_t = L.pow_table
    gens = L.endo_plan["gens"]
    found = {}
    for m in range(L.exponent):
        allowed = []
        for g in gens:
            mg = pow_t[m][g]
            allowed.append(sorted(L.q.left_divide(mg, c) for c in z))
        for f in _search(L, allowed, cap):
            if f not in found:
                w = quasicentral_witnesses(L, f)
                if w.witnesses:
                    found[f] = w
    return tuple(found[f] for f in sorted(found))


def special_endomorphisms(L, cap=SEARCH_CAP):
    """All special endomorphisms of an NK-loop."""
    if L.nk_pairs is None:
        raise NotNKLoop("special endomorphisms live over NK-loops")
    kmembers = L.moufang_center_members
    if len(kmembers) == L.n:
        cands = [w.endo for w in quasicentral_endomorphisms(L, cap)]
    else:
        allowed = [list(kmembers) for _ in L.endo_plan["gens"]]
        cands = _search(L, allowed, cap)
    return tuple(f for f in cands if is_special(L, f))


def condition_f_endomorphisms(L, cap=SEARCH_CAP):
    """All endomorphisms satisfying the displacement condition."""
    nmembers = L.nucleus_members
    kmembers = L.moufang_center_members
    rows = L.q.rows
    gens = L.endo_plan["gens"]
    allowed = []
    for g in gens:
        via_n = {L.q.left_divide(g, nn) for nn in nmembers}
        via_k = {rows[g][kk] for kk in kmembers}
        allowed.append(sorted(via_n & via_k))
    return tuple(f for f in _search(L, allowed, cap) if satisfies_condition_f(L, f))


def brute_force_endomorphisms(L):
    """Oracle: prefix-pruned scan over all n**n maps. Exponential; small orders only."""
    return tuple(tuple(m) for m in kernels.all_homs_brute(L.n, L.flat))


# ---------------------------------------------------------------------------
# lemma suite


def _row(lemma, carrier, applicable, instances=0, truncated=False, passed=True, ce=None):
    return {
        "lemma": lemma,
        "carrier": carrier,
        "applicable": applicable,
        "instances": instances,
        "truncated": truncated,
        "pass": passed,
        "counterexample": ce,
    }


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0
        self.truncated = False

    def take(self):
        if self.used >= self.limit:
            self.truncated = True
            return False
        self.used += 1
        return True


def _maps_equal(f, g):
    return tuple(f) == tuple(g)


def check_lemma_suite(L, pair_budget=300_000, triple_budget=100_000, cap=SEARCH_CAP):
    """Executable checks of the endomorphism lemmas over one loop.

    Returns one report row per lemma: name, carrier ("Q" or its Moufang-center
    subloop "K"), applicability, instance count, deterministic truncation flag,
    pass/fail, and the first counterexample found.  Commutative-only lemmas run
    on the loop itself when it is commutative and on its Moufang-center subloop
    otherwise.  Budgets bound the pair/triple instance counts per row; the
    enumeration order is lexicographic, so truncation is deterministic.
    """
    rows = []
    ZE = central_endomorphisms(L, cap)
    QW = quasicentral_endomorphisms(L, cap)
    QE = [w.endo for w in QW]
    wit = {w.endo: set(w.witnesses) for w in QW}
    e = L.exponent
    ident = identity_map(L.n)
    zero = zero_map(L)

    rows.append(_central_ring_row(L, ZE, zero, pair_budget, triple_budget))
    rows.append(_quasi_basics_row(L, ZE, QE, wit, ident, e))
    rows.append(_quasi_compose_row(L, QE, wit, e, pair_budget))

    if L.commutative:
        carrier, CL, CQE, Cwit = "Q", L, QE, wit
    else:
        from .structure import subloop

        CL = subloop(L, L.moufang_center_members)
        carrier = "K"
        CQW = quasicentral_endomorphisms(CL, cap)
        CQE = [w.endo for w in CQW]
        Cwit = {w.endo: set(w.witnesses) for w in CQW}
    rows.append(_quasi_sum_row(CL, carrier, CQE, Cwit, pair_budget))
    rows.append(_quasi_add_laws_row(CL, carrier, CQE, pair_budget, triple_budget))
    rows.append(_quasi_ring_row(CL, carrier, CQE, Cwit, pair_budget, triple_budget))

    rows.append(_quasi_small_witness_row(L, QE, wit, e))

    nk = L.nk_pairs is not None
    if nk:
        SE = special_endomorphisms(L, cap)
        FE = condition_f_endomorphisms(L, cap)
        rows.append(_special_ring_row(L, SE, zero, pair_budget, triple_budget))
        rows.append(_delta_special_row(L, FE))
        rows.append(_delta_commute_row(L, FE, pair_budget))
        rows.append(_aut_f_row(L, FE, zero, pair_budget))
    else:
        for name in ("special_ring", "delta_special", "delta_commute_transfer", "aut_f_system"):
            rows.append(_row(name, "Q", False))
    return rows


def _central_ring_row(L, ZE, zero, pair_budget, triple_budget):
    zset = set(ZE)
    pb, tb = _Budget(pair_budget), _Budget(triple_budget)
    inst = 1
    if not (is_endomorphism(L, zero) and is_central(L, zero)):
        return _row("central_ring", "Q", True, inst, False, False, {"item": "zero_map"})
    for f in ZE:
        inst += 1
        nf = endo_neg(L, f)
        if not (is_endomorphism(L, nf) and is_central(L, nf)
                and _maps_equal(endo_add(L, f, nf), zero)
                and _maps_equal(endo_add(L, f, zero), f)):
            return _row("central_ring", "Q", True, inst, False, False, {"f": f})
    for f in ZE:
        for g in ZE:
            if not pb.take():
                break
            inst += 1
            s = endo_add(L, f, g)
            if not (is_endomorphism(L, s) and is_central(L, s)
                    and _maps_equal(s, endo_add(L, g, f))
                    and endo_compose(f, g) in zset):
                return _row("central_ring", "Q", True, inst, pb.truncated, False,
                            {"f": f, "g": g})
        if pb.truncated:
            break
    for f in ZE:
        for g in ZE:
            for h in ZE:
                if not tb.take():
                    break
                inst += 1
                if not _maps_equal(endo_add(L, endo_add(L, f, g), h),
                                   endo_add(L, f, endo_add(L, g, h))):
                    return _row("central_ring", "Q", True, inst, tb.truncated, False,
                                {"f": f, "g": g, "h": h})
            if tb.truncated:
                break
        if tb.truncated:
            break
    return _row("central_ring", "Q", True, inst, pb.truncated or tb.truncated)


def _quasi_basics_row(L, ZE, QE, wit, ident, e):
    inst = 0
    qset = set(QE)
    for f in QE:
        inst += 1
        if (0 in wit[f]) != is_central(L, f):
            return _row("quasicentral_basics", "Q", True, inst, False, False, {"f": f})
    for f in ZE:
        inst += 1
        if f not in qset:
            return _row("quasicentral_basics", "Q", True, inst, False, False,
                        {"central_not_quasicentral": f})
    inst += 1
    if (e - 1) % e not in wit.get(ident, set()):
        return _row("quasicentral_basics", "Q", True, inst, False, False,
                    {"identity_witnesses": sorted(wit.get(ident, set()))})
    return _row("quasicentral_basics", "Q", True, inst)


def _quasi_compose_row(L, QE, wit, e, pair_budget):
    pb = _Budget(pair_budget)
    inst = 0
    qset = set(QE)
    for f in QE:
        for g in QE:
            if not pb.take():
                return _row("quasicentral_compose", "Q", True, inst, True)
            fg = endo_compose(f, g)
            wfg = None
            for m in wit[f]:
                for nn in wit[g]:
                    inst += 1
                    if wfg is None:
                        wfg = set(quasicentral_witnesses(L, fg).witnesses)
                    if (-m * nn) % e not in wfg:
                        return _row("quasicentral_compose", "Q", True, inst, False, False,
                                    {"f": f, "g": g, "m": m, "n": nn,
                                     "compose_witnesses": sorted(wfg)})
            inst += 1
            if fg not in qset:
                return _row("quasicentral_compose", "Q", True, inst, False, False,
                            {"compose_escapes": (f, g)})
    return _row("quasicentral_compose", "Q", True, inst, pb.truncated)


def _quasi_sum_row(CL, carrier, CQE, Cwit, pair_budget):
    e = CL.exponent
    pb = _Budget(pair_budget)
    inst = 0
    for f in CQE:
        inst += 1
        nf = endo_neg(CL, f)
        nw = set(quasicentral_witnesses(CL, nf).witnesses)
        if not is_endomorphism(CL, nf) or any((-m) % e not in nw for m in Cwit[f]):
            return _row("quasicentral_sum_commutative", carrier, True, inst, False, False,
                        {"f": f})
    for f in CQE:
        for g in CQE:
            if not pb.take():
                return _row("quasicentral_sum_commutative", carrier, True, inst, True)
            s = endo_add(CL, f, g)
            if not is_endomorphism(CL, s):
                return _row("quasicentral_sum_commutative", carrier, True, inst, False,
                            False, {"sum_not_endo": (f, g)})
            sw = set(quasicentral_witnesses(CL, s).witnesses)
            for m in Cwit[f]:
                for nn in Cwit[g]:
                    inst += 1
                    if (m + nn) % e not in sw:
                        return _row("quasicentral_sum_commutative", carrier, True, inst,
                                    False, False, {"f": f, "g": g, "m": m, "n": nn})
    return _row("quasicentral_sum_commutative", carrier, True, inst, pb.truncated)


def _quasi_add_laws_row(CL, carrier, CQE, pair_budget, triple_budget):
    pb, tb = _Budget(pair_budget), _Budget(triple_budget)
    zero = zero_map(CL)
    inst = 0
    for f in CQE:
        inst += 1
        if not (_maps_equal(endo_add(CL, f, endo_neg(CL, f)), zero)
                and _maps_equal(endo_add(CL, f, zero), f)):
            return _row("quasicentral_add_laws_commutative", carrier, True, inst, False,
                        False, {"f": f})
    for f in CQE:
        for g in CQE:
            if not pb.take():
                break
            inst += 1
            if not _maps_equal(endo_add(CL, f, g), endo_add(CL, g, f)):
                return _row("quasicentral_add_laws_commutative", carrier, True, inst,
                            False, False, {"f": f, "g": g})
        if pb.truncated:
            break
    for f in CQE:
        for g in CQE:
            for h in CQE:
                if not tb.take():
                    break
                inst += 1
                if not _maps_equal(endo_add(CL, endo_add(CL, f, g), h),
                                   endo_add(CL, f, endo_add(CL, g, h))):
                    return _row("quasicentral_add_laws_commutative", carrier, True, inst,
                                tb.truncated, False, {"f": f, "g": g, "h": h})
            if tb.truncated:
                break
        if tb.truncated:
            break
    return _row("quasicentral_add_laws_commutative", carrier, True, inst,
                pb.truncated or tb.truncated)


def _quasi_ring_row(CL, carrier, CQE, Cwit, pair_budget, triple_budget):
    """Ring-with-unity checks over the quasicentral endomorphisms of a
    commutative loop: closure, unity, distributivity, associativity."""
    pb, tb = _Budget(pair_budget), _Budget(triple_budget)
    ident = identity_map(CL.n)
    qset = set(CQE)
    inst = 1
    if ident not in qset:
        return _row("quasicentral_ring_with_unity", carrier, True, inst, False, False,
                    {"item": "identity_missing"})
    for f in CQE:
        inst += 1
        if (endo_neg(CL, f) not in qset
                or not _maps_equal(endo_compose(ident, f), f)
                or not _maps_equal(endo_compose(f, ident), f)):
            return _row("quasicentral_ring_with_unity", carrier, True, inst, False, False,
                        {"f": f})
    for f in CQE:
        for g in CQE:
            if not pb.take():
                break
            inst += 1
            if endo_add(CL, f, g) not in qset or endo_compose(f, g) not in qset:
                return _row("quasicentral_ring_with_unity", carrier, True, inst, False,
                            False, {"closure": (f, g)})
        if pb.truncated:
            break
    for f in CQE:
        for g in CQE:
            for h in CQE:
                if not tb.take():
                    break
                inst += 1
                left = endo_compose(f, endo_add(CL, g, h))
                right = endo_add(CL, endo_compose(f, g), endo_compose(f, h))
                left2 = endo_compose(endo_add(CL, f, g), h)
                right2 = endo_add(CL, endo_compose(f, h), endo_compose(g, h))
                assoc = _maps_equal(endo_compose(endo_compose(f, g), h),
                                    endo_compose(f, endo_compose(g, h)))
                if not (_maps_equal(left, right) and _maps_equal(left2, right2) and assoc):
                    return _row("quasicentral_ring_with_unity", carrier, True, inst,
                                tb.truncated, False, {"f": f, "g": g, "h": h})
            if tb.truncated:
                break
        if tb.truncated:
            break
    return _row("quasicentral_ring_with_unity", carrier, True, inst,
                pb.truncated or tb.truncated)


def _quasi_small_witness_row(L, QE, wit, e):
    zset = set(L.center_members)
    pow_t = L.pow_table
    hyp = None
    for k in (1, 2, 3):
        pk = pow_t[k % e]
        if all(pk[x] in zset for x in range(L.n)):
            hyp = k
            break
    if hyp is None:
        return _row("quasicentral_small_witness", "Q", False)
    small = {0 % e, 1 % e, (e - 1) % e}
    inst = 0
    for f in QE:
        inst += 1
        if not (wit[f] & small):
            return _row("quasicentral_small_witness", "Q", True, inst, False, False,
                        {"f": f, "witnesses": sorted(wit[f]), "k": hyp})
    n = L.n
    for f in QE:
        if len(set(f)) != n:
            continue
        inst += 1
        inv = [0] * n
        for x, v in enumerate(f):
            inv[v] = x
        if not quasicentral_witnesses(L, tuple(inv)).witnesses:
            return _row("quasicentral_small_witness", "Q", True, inst, False, False,
                        {"automorphism": f, "inverse_not_quasicentral": True})
    return _row("quasicentral_small_witness", "Q", True, inst)


def _special_ring_row(L, SE, zero, pair_budget, triple_budget):
    pb, tb = _Budget(pair_budget), _Budget(triple_budget)
    inst = 0
    for f in SE:
        inst += 1
        nf = endo_neg(L, f)
        if not (is_special(L, nf)
                and _maps_equal(endo_add(L, f, nf), zero)
                and _maps_equal(endo_add(L, f, zero), f)):
            return _row("special_ring", "Q", True, inst, False, False, {"f": f})
    for f in SE:
        for g in SE:
            if not pb.take():
                break
            inst += 1
            s = endo_add(L, f, g)
            if not (is_special(L, endo_compose(f, g)) and is_special(L, s)
                    and _maps_equal(s, endo_add(L, g, f))):
                return _row("special_ring", "Q", True, inst, False, False, {"f": f, "g": g})
        if pb.truncated:
            break
    for f in SE:
        for g in SE:
            for h in SE:
                if not tb.take():
                    break
                inst += 1
                if not _maps_equal(endo_add(L, endo_add(L, f, g), h),
                                   endo_add(L, f, endo_add(L, g, h))):
                    return _row("special_ring", "Q", True, inst, tb.truncated, False,
                                {"f": f, "g": g, "h": h})
            if tb.truncated:
                break
        if tb.truncated:
            break
    return _row("special_ring", "Q", True, inst, pb.truncated or tb.truncated)


def _delta_special_row(L, FE):
    inst = 0
    for f in FE:
        inst += 1
        try:
            delta_map(L, f)
        except InvariantViolation:
            return _row("delta_special", "Q", True, inst, False, False, {"f": f})
    return _row("delta_special", "Q", True, inst)


def _delta_commute_row(L, FE, pair_budget):
    pb = _Budget(pair_budget)
    deltas = {f: delta_map(L, f) for f in FE}
    inst = 0
    for f in FE:
        for g in FE:
            if not pb.take():
                return _row("delta_commute_transfer", "Q", True, inst, True)
            inst += 1
            hk = _maps_equal(endo_compose(deltas[f], deltas[g]),
                             endo_compose(deltas[g], deltas[f]))
            fg = _maps_equal(endo_compose(f, g), endo_compose(g, f))
            if hk != fg:
                return _row("delta_commute_transfer", "Q", True, inst, False, False,
                            {"f": f, "g": g, "deltas_commute": hk, "originals_commute": fg})
    return _row("delta_commute_transfer", "Q", True, inst, pb.truncated)


def _aut_f_row(L, FE, zero, pair_budget):
    n = L.n
    auts = [f for f in FE if len(set(f)) == n]
    data = {}
    inst = 0
    for f in auts:
        inv = [0] * n
        for x, v in enumerate(f):
            inv[v] = x
        inv = tuple(inv)
        if not satisfies_condition_f(L, inv):
            return _row("aut_f_system", "Q", True, inst + 1, False, False,
                        {"f": f, "inverse_fails_condition": True})
        h, p = delta_map(L, f), delta_map(L, inv)
        data[f] = (h, p)
        inst += 1
        hp = endo_compose(h, p)
        if not (_maps_equal(hp, endo_compose(p, h))
                and _maps_equal(endo_add(L, endo_add(L, h, p), hp), zero)):
            return _row("aut_f_system", "Q", True, inst, False, False,
                        {"f": f, "h_p_relation": False})
    pb = _Budget(pair_budget)
    for f in auts:
        for g in auts:
            if not pb.take():
                return _row("aut_f_system", "Q", True, inst, True)
            if not _maps_equal(endo_compose(f, g), endo_compose(g, f)):
                continue
            inst += 1
            h, p = data[f]
            k, q = data[g]
            four = (h, k, p, q)
            for a in range(4):
                for b in range(a + 1, 4):
                    if not _maps_equal(endo_compose(four[a], four[b]),
                                       endo_compose(four[b], four[a])):
                        return _row("aut_f_system", "Q", True, inst, False, False,
                                    {"f": f, "g": g, "pair": (a, b)})
    return _row("aut_f_system", "Q", True, inst, pb.truncated)
