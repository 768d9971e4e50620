# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Twin of the pure backend: every function has the same name, signature,
argument conventions, and return values (including witness order), with the
inner loops in C.  Tables are flat row-major byte strings of length n*n with
entries already validated to lie in range(n).
"""

import array

from cpython cimport array

BACKEND_NAME = "c"


def latin_violation(int n, flat):
    """First duplicate in a row or column, as (kind, index, position), else None."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef unsigned char seen[256]
    cdef int x, y, v
    for x in range(n):
        for v in range(n):
            seen[v] = 0
        for y in range(n):
            v = t[x * n + y]
            if seen[v]:
                return ("row", x, y)
            seen[v] = 1
    for y in range(n):
        for v in range(n):
            seen[v] = 0
        for x in range(n):
            v = t[x * n + y]
            if seen[v]:
                return ("col", y, x)
            seen[v] = 1
    return None


def build_divisions(int n, flat):
    """Return (ldiv, rdiv) flat bytes: ldiv[x*n+b] solves x*? = b, rdiv[b*n+x] solves ?*x = b."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef bytearray ld = bytearray(n * n)
    cdef bytearray rd = bytearray(n * n)
    cdef unsigned char[::1] ldv = ld
    cdef unsigned char[::1] rdv = rd
    cdef int x, y, b
    for x in range(n):
        for y in range(n):
            b = t[x * n + y]
            ldv[x * n + b] = y
            rdv[b * n + y] = x
    return bytes(ld), bytes(rd)


def f_law_violation(int n, flat, alpha, beta):
    """First triple violating either F-law.

    Law 1: x(yz) = (xy)(alpha(x) z); law 2: (zy)x = (z beta(x))(yx).
    Returns (law, x, y, z) for the lexicographically least violating (x, y, z),
    law 1 tested before law 2 at each triple; None if both laws hold everywhere.
    """
    cdef const unsigned char[::1] tv = flat
    cdef bytes ab = bytes(alpha)
    cdef bytes bb = bytes(beta)
    cdef const unsigned char[::1] av = ab
    cdef const unsigned char[::1] bv = bb
    cdef const unsigned char* t = &tv[0]
    cdef const unsigned char* al = &av[0]
    cdef const unsigned char* be = &bv[0]
    cdef int x, y, z, ax, bx, xb, xy, yx, yb
    for x in range(n):
        ax = al[x]
        bx = be[x]
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


def moufang_violation(int n, flat):
    """First (x, y, z) with ((x+y)+x)+z != x+(y+(x+z)), else None."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int x, y, z, xb, yb, xyx
    for x in range(n):
        xb = x * n
        for y in range(n):
            xyx = t[t[xb + y] * n + x] * n
            yb = y * n
            for z in range(n):
                if t[xyx + z] != t[xb + t[yb + t[xb + z]]]:
                    return (x, y, z)
    return None


def assoc_violation(int n, flat):
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int x, y, z, xb, yb, xy
    for x in range(n):
        xb = x * n
        for y in range(n):
            xy = t[xb + y] * n
            yb = y * n
            for z in range(n):
                if t[xy + z] != t[xb + t[yb + z]]:
                    return (x, y, z)
    return None


def comm_violation(int n, flat):
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int x, y
    for x in range(n):
        for y in range(x + 1, n):
            if t[x * n + y] != t[y * n + x]:
                return (x, y)
    return None


def nucleus_members(int n, flat):
    """Elements associating with every pair in all three positions."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int a, x, y, ab, xb, ax, xa, xy
    cdef bint ok
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


def moufang_center_members(int n, flat):
    """Elements a with (a+a)+(x+y) = (a+x)+(a+y) for all x, y."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int a, x, y, ab, aa, ax, xb
    cdef bint ok
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


def m_set_members(int n, flat):
    """Elements a with (xa)(yx) = (xy)(ax) for all x, y."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int a, x, y, ab, xb, xa, ax
    cdef bint ok
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


def commutant_members(int n, flat):
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef int a, x
    cdef bint ok
    out = []
    for a in range(n):
        ok = True
        for x in range(n):
            if t[a * n + x] != t[x * n + a]:
                ok = False
                break
        if ok:
            out.append(a)
    return out


def hom_violation(int n, flat, fmap):
    """First (x, y) with f(x+y) != f(x)+f(y), else None."""
    cdef const unsigned char[::1] tv = flat
    cdef bytes fb = bytes(fmap)
    cdef const unsigned char[::1] fv = fb
    cdef const unsigned char* t = &tv[0]
    cdef const unsigned char* f = &fv[0]
    cdef int x, y, xb, fxb
    for x in range(n):
        xb = x * n
        fxb = f[x] * n
        for y in range(n):
            if f[t[xb + y]] != t[fxb + f[y]]:
                return (x, y)
    return None


def perm_closure(int n, gens, cap):
    """Closure of permutations (bytes of length n) under composition.

    Returns (sorted members, complete).  complete is False when the closure
    would exceed cap, in which case members holds the partial set.
    """
    cdef long capl = cap
    gens = sorted(set(bytes(g) for g in gens))
    seen = set(gens)
    seen.add(bytes(bytearray(range(n))))
    frontier = list(seen)
    cdef bytearray tmp = bytearray(n)
    cdef unsigned char[::1] tmpv = tmp
    cdef const unsigned char[::1] pv
    cdef const unsigned char[::1] gv
    cdef int i
    while frontier:
        new = []
        for p in frontier:
            pv = p
            for g in gens:
                gv = g
                for i in range(n):
                    tmpv[i] = pv[gv[i]]
                q = bytes(tmp)
                if q not in seen:
                    if len(seen) >= capl:
                        return sorted(seen), False
                    seen.add(q)
                    new.append(q)
        frontier = new
    return sorted(seen), True


cdef void _ls_rec(int k, int m, int n, int full,
                  const int* free_r, const int* free_c,
                  unsigned char* grid, int* row_mask, int* col_mask,
                  list out):
    if k == m:
        out.append(grid[:n * n])
        return
    cdef int r = free_r[k]
    cdef int c = free_c[k]
    cdef int avail = full & ~(row_mask[r] | col_mask[c])
    cdef int bit, v
    while avail:
        bit = avail & (-avail)
        v = 0
        while not ((bit >> v) & 1):
            v += 1
        grid[r * n + c] = <unsigned char> v
        row_mask[r] |= bit
        col_mask[c] |= bit
        _ls_rec(k + 1, m, n, full, free_r, free_c, grid, row_mask, col_mask, out)
        row_mask[r] &= ~bit
        col_mask[c] &= ~bit
        avail &= avail - 1


def latin_squares(int n, mode="all"):
    """All Latin squares of order n as flat bytes, lexicographic by flattened rows.

    mode: "all" (raw full scan), "reduced" (first row fixed to 0..n-1),
    "loops0" (first row and first column fixed to 0..n-1: loop tables with
    neutral 0).
    """
    if mode not in ("all", "reduced", "loops0"):
        raise ValueError(f"unknown mode {mode!r}")
    cdef int full = (1 << n) - 1
    cdef unsigned char grid[1024]
    cdef int row_mask[32]
    cdef int col_mask[32]
    cdef int free_r[1024]
    cdef int free_c[1024]
    if n > 30:
        raise ValueError("latin_squares is limited to order 30")
    cdef int r, c, v, m
    for r in range(n):
        row_mask[r] = 0
        col_mask[r] = 0
    m = 0
    for r in range(n):
        for c in range(n):
            v = -1
            if mode != "all" and r == 0:
                v = c
            elif mode == "loops0" and c == 0:
                v = r
            if v >= 0:
                grid[r * n + c] = <unsigned char> v
                row_mask[r] |= 1 << v
                col_mask[c] |= 1 << v
            else:
                free_r[m] = r
                free_c[m] = c
                m += 1
    out = []
    _ls_rec(0, m, n, full, free_r, free_c, grid, row_mask, col_mask, out)
    return out


def filter_f_tables(int n, tables):
    """Subset of flat tables satisfying both F-laws (assumed Latin)."""
    cdef unsigned char alpha[256]
    cdef unsigned char beta[256]
    cdef const unsigned char[::1] tv
    cdef const unsigned char* t
    cdef int x, y, z, b, ax, bx, xb, xy, yx, yb
    cdef bint ok
    out = []
    for tab in tables:
        tv = tab
        t = &tv[0]
        for x in range(n):
            xb = x * n
            for y in range(n):
                b = t[xb + y]
                if b == x:
                    alpha[x] = <unsigned char> y
                if t[y * n + x] == x:
                    beta[x] = <unsigned char> y
        ok = True
        for x in range(n):
            if not ok:
                break
            ax = alpha[x]
            bx = beta[x]
            xb = x * n
            for y in range(n):
                if not ok:
                    break
                xy = t[xb + y]
                yx = t[y * n + x]
                yb = y * n
                for z in range(n):
                    if t[xb + t[yb + z]] != t[xy * n + t[ax * n + z]]:
                        ok = False
                        break
                    if t[t[z * n + y] * n + x] != t[t[z * n + bx] * n + yx]:
                        ok = False
                        break
        if ok:
            out.append(tab)
    return out


cdef void _homs_rec(int d, int n, const unsigned char* t,
                    const int* ck_x, const int* ck_y, const int* ck_xy,
                    const int* ck_start, unsigned char* img, list out):
    if d == n:
        out.append(img[:n])
        return
    cdef int v, idx
    cdef bint ok
    for v in range(n):
        img[d] = <unsigned char> v
        ok = True
        for idx in range(ck_start[d], ck_start[d + 1]):
            if img[ck_xy[idx]] != t[img[ck_x[idx]] * n + img[ck_y[idx]]]:
                ok = False
                break
        if ok:
            _homs_rec(d + 1, n, t, ck_x, ck_y, ck_xy, ck_start, img, out)


def all_homs_brute(int n, flat):
    """All magma endomorphisms by prefix-pruned scan over every one of the n^n maps."""
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    checks = [[] for _ in range(n)]
    cdef int x, y, xy, d
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            d = max(x, max(y, xy))
            checks[d].append((x, y, xy))
    cdef array.array cx = array.array('i', [])
    cdef array.array cy = array.array('i', [])
    cdef array.array cxy = array.array('i', [])
    cdef array.array cstart = array.array('i', [0])
    for d in range(n):
        for x, y, xy in checks[d]:
            cx.append(x)
            cy.append(y)
            cxy.append(xy)
        cstart.append(len(cx))
    cdef unsigned char img[256]
    out = []
    _homs_rec(0, n, t, cx.data.as_ints, cy.data.as_ints, cxy.data.as_ints,
              cstart.data.as_ints, img, out)
    return out


cdef long _endo_nodes
cdef bint _endo_complete


cdef void _endo_rec(int level, int nlevels, int n, long cap,
                    const unsigned char* t,
                    const int* gen_positions,
                    const int* ext_pos, const int* ext_di, const int* ext_dj,
                    const int* ext_start,
                    const int* bk_i, const int* bk_j, const int* bk_k,
                    const int* bk_start,
                    const int* allowed_flat, const int* allowed_start,
                    const int* elem_ids, int npos,
                    int* img, list out):
    global _endo_nodes, _endo_complete
    if not _endo_complete:
        return
    cdef int gpos = gen_positions[level - 1]
    cdef int e0 = ext_start[level - 1]
    cdef int e1 = ext_start[level]
    cdef int b0 = bk_start[level]
    cdef int b1 = bk_start[level + 1]
    cdef int ai, idx, p
    cdef bint ok
    cdef bytearray m
    for ai in range(allowed_start[level - 1], allowed_start[level]):
        _endo_nodes += 1
        if _endo_nodes > cap:
            _endo_complete = False
            return
        img[gpos] = allowed_flat[ai]
        for idx in range(e0, e1):
            img[ext_pos[idx]] = t[img[ext_di[idx]] * n + img[ext_dj[idx]]]
        ok = True
        for idx in range(b0, b1):
            if img[bk_k[idx]] != t[img[bk_i[idx]] * n + img[bk_j[idx]]]:
                ok = False
                break
        if ok:
            if level == nlevels:
                m = bytearray(n)
                for p in range(npos):
                    m[elem_ids[p]] = <unsigned char> img[p]
                out.append(bytes(m))
            else:
                _endo_rec(level + 1, nlevels, n, cap, t, gen_positions,
                          ext_pos, ext_di, ext_dj, ext_start,
                          bk_i, bk_j, bk_k, bk_start,
                          allowed_flat, allowed_start, elem_ids, npos, img, out)
        if not _endo_complete:
            return


def endo_search(int n, flat, int zero, int nlevels, gen_positions,
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
    img[i]*img[j] on bucket level once that level is assigned.  allowed[k-1]
    lists the permitted images for generator k.  Returns (maps, complete,
    nodes) where maps are bytes indexed by element id, sorted.
    """
    global _endo_nodes, _endo_complete
    cdef const unsigned char[::1] tv = flat
    cdef const unsigned char* t = &tv[0]
    cdef array.array gp = array.array('i', gen_positions)
    cdef array.array ep = array.array('i', ext_pos)
    cdef array.array edi = array.array('i', ext_di)
    cdef array.array edj = array.array('i', ext_dj)
    cdef array.array es = array.array('i', ext_start)
    cdef array.array bi = array.array('i', bk_i)
    cdef array.array bj = array.array('i', bk_j)
    cdef array.array bk = array.array('i', bk_k)
    cdef array.array bs = array.array('i', bk_start)
    cdef array.array ei = array.array('i', elem_ids)
    af_list = []
    as_list = [0]
    for lst in allowed:
        af_list.extend(lst)
        as_list.append(len(af_list))
    cdef array.array af = array.array('i', af_list)
    cdef array.array asx = array.array('i', as_list)
    # pad the flat arrays so .data.as_ints is valid even when they are empty
    for a in (gp, ep, edi, edj, bi, bj, bk, af):
        if len(a) == 0:
            a.append(0)
    cdef int npos = len(elem_ids)
    cdef int img[256]
    cdef int idx
    img[0] = zero
    out = []
    # level-0 consistency (zero alone)
    for idx in range(bs.data.as_ints[0], bs.data.as_ints[1]):
        if img[bk.data.as_ints[idx]] != t[img[bi.data.as_ints[idx]] * n
                                          + img[bj.data.as_ints[idx]]]:
            return [], True, 0
    _endo_nodes = 0
    _endo_complete = True
    if nlevels == 0:
        m = bytearray(n)
        for p in range(npos):
            m[ei.data.as_ints[p]] = img[p]
        out.append(bytes(m))
    else:
        _endo_rec(1, nlevels, n, cap, t, gp.data.as_ints,
                  ep.data.as_ints, edi.data.as_ints, edj.data.as_ints,
                  es.data.as_ints,
                  bi.data.as_ints, bj.data.as_ints, bk.data.as_ints,
                  bs.data.as_ints,
                  af.data.as_ints, asx.data.as_ints,
                  ei.data.as_ints, npos, img, out)
    out.sort()
    return out, _endo_complete, _endo_nodes
