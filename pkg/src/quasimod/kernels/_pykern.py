"""Pure-Python kernel backend.

Every function here has a twin of the same name and signature in the compiled
backend (_ckern).  Tables are flat row-major int sequences of length n*n with
entries already validated to lie in range(n).  Scans return lexicographically
least witnesses so results are deterministic and backend-independent.
"""

BACKEND_NAME = "pure"


def latin_violation(n, flat):
    """First duplicate in a row or column, as (kind, index, position), else None."""
    t = flat
    for x in range(n):
        seen = bytearray(n)
        base = x * n
        for y in range(n):
            v = t[base + y]
            if seen[v]:
                return ("row", x, y)
            seen[v] = 1
    for y in range(n):
        seen = bytearray(n)
        for x in range(n):
            v = t[x * n + y]
            if seen[v]:
                return ("col", y, x)
            seen[v] = 1
    return None


def build_divisions(n, flat):
    """Return (ldiv, rdiv) flat bytes: ldiv[x*n+b] solves x*? = b, rdiv[b*n+x] solves ?*x = b."""
    t = flat
    ldiv = bytearray(n * n)
    rdiv = bytearray(n * n)
    for x in range(n):
        base = x * n
        for y in range(n):
            b = t[base + y]
            ldiv[base + b] = y
            rdiv[b * n + y] = x
    return bytes(ldiv), bytes(rdiv)


def f_law_violation(n, flat, alpha, beta):
    """First triple violating either F-law.

    Law 1: x(yz) = (xy)(alpha(x) z); law 2: (zy)x = (z beta(x))(yx).
    Returns (law, x, y, z) for the lexicographically least violating (x, y, z),
    law 1 tested before law 2 at each triple; None if both laws hold everywhere.
    """
    t = flat
    for x in range(n):
        ax = alpha[x]
        bx = beta[x]
        xb = x * n
        for y in range(n):
            xy = t[xb + y]
            yx = t[y * n + x]
            yb = y * n
            for z in range(n):
                if t[xb + t[yb + z]] != t[xy * n + t[ax * n + z]]:
                    return (1, x, y, z)
                if t[t[z * n + y] * n + x] != t[t[z * n + bx] * n + yx]:
                    return (2, x, y, z)
    return None


def moufang_violation(n, flat):
    """First (x, y, z) with ((x+y)+x)+z != x+(y+(x+z)), else None."""
    t = flat
    for x in range(n):
        xb = x * n
        for y in range(n):
            xyx = t[t[xb + y] * n + x] * n
            yb = y * n
            for z in range(n):
                if t[xyx + z] != t[xb + t[yb + t[xb + z]]]:
                    return (x, y, z)
    return None


def assoc_violation(n, flat):
    t = flat
    for x in range(n):
        xb = x * n
        for y in range(n):
            xy = t[xb + y] * n
            yb = y * n
            for z in range(n):
                if t[xy + z] != t[xb + t[yb + z]]:
                    return (x, y, z)
    return None


def comm_violation(n, flat):
    t = flat
    for x in range(n):
        for y in range(x + 1, n):
            if t[x * n + y] != t[y * n + x]:
                return (x, y)
    return None


def nucleus_members(n, flat):
    """Elements associating with every pair in all three positions."""
    t = flat
    out = []
    for a in range(n):
        ab = a * n
        ok = True
        for x in range(n):
            xb = x * n
            ax = t[ab + x] * n
            xa = t[xb + a] * n
            for y in range(n):
                xy = t[xb + y]
                if t[ax + y] != t[ab + xy]:
                    ok = False
                    break
                if t[xa + y] != t[xb + t[ab + y]]:
                    ok = False
                    break
                if t[xy * n + a] != t[xb + t[y * n + a]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return out


def moufang_center_members(n, flat):
    """Elements a with (a+a)+(x+y) = (a+x)+(a+y) for all x, y."""
    t = flat
    out = []
    for a in range(n):
        ab = a * n
        aa = t[ab + a] * n
        ok = True
        for x in range(n):
            ax = t[ab + x] * n
            xb = x * n
            for y in range(n):
                if t[aa + t[xb + y]] != t[ax + t[ab + y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return out


def m_set_members(n, flat):
    """Elements a with (xa)(yx) = (xy)(ax) for all x, y."""
    t = flat
    out = []
    for a in range(n):
        ab = a * n
        ok = True
        for x in range(n):
            xb = x * n
            xa = t[xb + a] * n
            ax = t[ab + x]
            for y in range(n):
                if t[xa + t[y * n + x]] != t[t[xb + y] * n + ax]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return out


def commutant_members(n, flat):
    t = flat
    out = []
    for a in range(n):
        ab = a * n
        ok = True
        for x in range(n):
            if t[ab + x] != t[x * n + a]:
                ok = False
                break
        if ok:
            out.append(a)
    return out


def hom_violation(n, flat, fmap):
    """First (x, y) with f(x+y) != f(x)+f(y), else None."""
    t = flat
    f = fmap
    for x in range(n):
        xb = x * n
        fxb = f[x] * n
        for y in range(n):
            if f[t[xb + y]] != t[fxb + f[y]]:
                return (x, y)
    return None


def perm_closure(n, gens, cap):
    """Closure of permutations (bytes of length n) under composition.

    Returns (sorted members, complete).  complete is False when the closure
    would exceed cap, in which case members holds the partial set.
    """
    rng = range(n)
    gens = sorted(set(bytes(g) for g in gens))
    seen = set(gens)
    seen.add(bytes(rng))
    frontier = list(seen)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = bytes(p[g[i]] for i in rng)
                if q not in seen:
                    if len(seen) >= cap:
                        return sorted(seen), False
                    seen.add(q)
                    new.append(q)
        frontier = new
    return sorted(seen), True


def latin_squares(n, mode="all"):
    """All Latin squares of order n as flat bytes, lexicographic by flattened rows.

    mode: "all" (raw full scan), "reduced" (first row fixed to 0..n-1),
    "loops0" (first row and first column fixed to 0..n-1: loop tables with
    neutral 0).
    """
    full = (1 << n) - 1
    grid = [0] * (n * n)
    row_mask = [0] * n
    col_mask = [0] * n
    free = []
    if mode not in ("all", "reduced", "loops0"):
        raise ValueError(f"unknown mode {mode!r}")
    for r in range(n):
        for c in range(n):
            v = -1
            if mode in ("reduced", "loops0") and r == 0:
                v = c
            elif mode == "loops0" and c == 0:
                v = r
            if v >= 0:
                grid[r * n + c] = v
                row_mask[r] |= 1 << v
                col_mask[c] |= 1 << v
            else:
                free.append((r, c))
    out = []
    m = len(free)

    def rec(k):
        if k == m:
            out.append(bytes(grid))
            return
        r, c = free[k]
        avail = full & ~(row_mask[r] | col_mask[c])
        while avail:
            bit = avail & -avail
            v = bit.bit_length() - 1
            grid[r * n + c] = v
            row_mask[r] |= bit
            col_mask[c] |= bit
            rec(k + 1)
            row_mask[r] &= ~bit
            col_mask[c] &= ~bit
            avail &= avail - 1

    rec(0)
    return out


def filter_f_tables(n, tables):
    """Subset of flat tables satisfying both F-laws (assumed Latin)."""
    out = []
    nn = range(n)
    for t in tables:
        alpha = [0] * n
        beta = [0] * n
        for x in nn:
            base = x * n
            for y in nn:
                b = t[base + y]
                if b == x:
                    alpha[x] = y
                if t[y * n + x] == x:
                    beta[x] = y
        if f_law_violation(n, t, alpha, beta) is None:
            out.append(t)
    return out


def all_homs_brute(n, flat):
    """All magma endomorphisms by prefix-pruned scan over every one of the n^n maps."""
    t = flat
    checks = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            d = max(x, y, xy)
            checks[d].append((x, y, xy))
    img = [0] * n
    out = []

    def rec(d):
        if d == n:
            out.append(bytes(img))
            return
        cks = checks[d]
        for v in range(n):
            img[d] = v
            ok = True
            for x, y, xy in cks:
                if img[xy] != t[img[x] * n + img[y]]:
                    ok = False
                    break
            if ok:
                rec(d + 1)

    rec(0)
    return out


def endo_search(n, flat, zero, nlevels, gen_positions,
                ext_pos, ext_di, ext_dj, ext_start,
                bk_i, bk_j, bk_k, bk_start,
                elem_ids, allowed, cap):
    """Endomorphism search over generator images.

    Positions index a closure ordering of the carrier (position 0 is the zero
    element, level 0).  Adding generator k (level k) introduces the positions
    ext_pos[ext_start[k-1]:ext_start[k]] in order, each defined as the product
    of two earlier positions (ext_di, ext_dj).  bk_* lists triples (i, j, k_)
    of positions with elem[i]*elem[j] = elem[k_], bucketed by the level at
    which all three become defined; a candidate must satisfy img[k_] =
    img[i]*img[j] on bucket ℓ once level ℓ is assigned.  allowed[k-1] lists
    the permitted images for generator k.  Returns (maps, complete, nodes)
    where maps are bytes indexed by element id, sorted lexicographically.
    """
    t = flat
    img = [0] * len(elem_ids)
    img[0] = zero
    out = []
    nodes = 0
    complete = True

    # level-0 consistency (zero alone)
    for idx in range(bk_start[0], bk_start[1]):
        if img[bk_k[idx]] != t[img[bk_i[idx]] * n + img[bk_j[idx]]]:
            return [], True, 0

    def emit():
        m = bytearray(n)
        for p, e in enumerate(elem_ids):
            m[e] = img[p]
        out.append(bytes(m))

    def rec(level):
        nonlocal nodes, complete
        if not complete:
            return
        gpos = gen_positions[level - 1]
        e0 = ext_start[level - 1]
        e1 = ext_start[level]
        b0 = bk_start[level]
        b1 = bk_start[level + 1]
        for cand in allowed[level - 1]:
            nodes += 1
            if nodes > cap:
                complete = False
                return
            img[gpos] = cand
            for idx in range(e0, e1):
                img[ext_pos[idx]] = t[img[ext_di[idx]] * n + img[ext_dj[idx]]]
            ok = True
            for idx in range(b0, b1):
                if img[bk_k[idx]] != t[img[bk_i[idx]] * n + img[bk_j[idx]]]:
                    ok = False
                    break
            if ok:
                if level == nlevels:
                    emit()
                else:
                    rec(level + 1)

    if nlevels == 0:
        emit()
    else:
        rec(1)
    out.sort()
    return out, complete, nodes
