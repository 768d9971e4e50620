"""Cayley tables: quasigroups, loops, the text file format, and basic laws.

A quasigroup is stored as its full multiplication table over the carrier
0..n-1.  Both division tables, the local right/left unit maps alpha and beta
(x*alpha(x) = x = beta(x)*x), and the two F-quasigroup laws live here.  Carrier
size is capped at 255 so flat tables and maps fit in bytes.
"""

from functools import cached_property
from math import lcm

from . import kernels
from .errors import Malformed, NotDiassociative, NotLatin, NotLoop

MAX_ORDER = 255


class QuasigroupTable:
    """Immutable multiplication table with unique left and right division."""

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise Malformed("empty table")
        if n > MAX_ORDER:
            raise Malformed(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise Malformed(f"row {i} has {len(r)} entries, expected {n}")
            for j, v in enumerate(r):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                    raise Malformed(f"entry ({i},{j}) = {v!r} not an integer in 0..{n - 1}")
        self.n = n
        self.rows = rows
        self.flat = bytes(v for r in rows for v in r)
        w = kernels.latin_violation(n, self.flat)
        if w is not None:
            raise NotLatin(*w)
        self._ldiv, self._rdiv = kernels.build_divisions(n, self.flat)
        self.alpha = tuple(self._ldiv[x * n + x] for x in range(n))
        self.beta = tuple(self._rdiv[x * n + x] for x in range(n))

    def mul(self, x, y):
        return self.rows[x][y]

    def left_divide(self, x, b):
        """The unique y with x*y = b."""
        return self._ldiv[x * self.n + b]

    def right_divide(self, b, x):
        """The unique y with y*x = b."""
        return self._rdiv[b * self.n + x]

    @cached_property
    def left_div(self):
        n = self.n
        return tuple(tuple(self._ldiv[x * n + b] for b in range(n)) for x in range(n))

    @cached_property
    def right_div(self):
        n = self.n
        return tuple(tuple(self._rdiv[b * n + x] for x in range(n)) for b in range(n))

    def __eq__(self, other):
        return isinstance(other, QuasigroupTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"QuasigroupTable(order={self.n})"


def alpha_beta(q):
    """The maps alpha, beta with x*alpha(x) = x and beta(x)*x = x."""
    return q.alpha, q.beta


def is_loop(q):
    """Index of the two-sided neutral element, or None."""
    n = q.n
    rows = q.rows
    for e in range(n):
        if rows[e] == tuple(range(n)) and all(rows[x][e] == x for x in range(n)):
            return e
    return None


def is_commutative(q):
    return kernels.comm_violation(q.n, q.flat) is None


def f_quasigroup_violation(q):
    """None, or (law, x, y, z): law 1 is x(yz) = (xy)(alpha(x) z), law 2 is (zy)x = (z beta(x))(yx)."""
    return kernels.f_law_violation(q.n, q.flat, bytes(q.alpha), bytes(q.beta))


def is_f_quasigroup(q):
    return f_quasigroup_violation(q) is None


class LoopTable:
    """A quasigroup with a two-sided neutral element and derived loop data."""

    def __init__(self, q, zero=None):
        if isinstance(q, LoopTable):
            q = q.q
        elif not isinstance(q, QuasigroupTable):
            q = QuasigroupTable(q)
        found = is_loop(q)
        if found is None:
            raise NotLoop("table has no two-sided neutral element")
        if zero is not None and zero != found:
            raise NotLoop(f"declared neutral {zero} but actual neutral is {found}")
        self.q = q
        self.n = q.n
        self.zero = found
        n, z = q.n, found
        neg = []
        for x in range(n):
            r = q.left_divide(x, z)   # x * r = 0
            l = q.right_divide(z, x)  # l * x = 0
            neg.append(r if r == l else None)
        self.neg = tuple(neg)

    @property
    def rows(self):
        return self.q.rows

    @property
    def flat(self):
        return self.q.flat

    def mul(self, x, y):
        return self.q.rows[x][y]

    @property
    def alpha(self):
        return self.q.alpha

    @property
    def beta(self):
        return self.q.beta

    @property
    def left_div(self):
        return self.q.left_div

    @property
    def right_div(self):
        return self.q.right_div

    def left_divide(self, x, b):
        return self.q.left_divide(x, b)

    def right_divide(self, b, x):
        return self.q.right_divide(b, x)

    def neg_strict(self, x):
        v = self.neg[x]
        if v is None:
            raise NotDiassociative(f"element {x} has no two-sided inverse")
        return v

    @cached_property
    def nucleus_members(self):
        return tuple(kernels.nucleus_members(self.n, self.flat))

    @cached_property
    def moufang_center_members(self):
        return tuple(kernels.moufang_center_members(self.n, self.flat))

    @cached_property
    def center_members(self):
        k = set(self.moufang_center_members)
        return tuple(a for a in self.nucleus_members if a in k)

    @cached_property
    def commutant_members(self):
        return tuple(kernels.commutant_members(self.n, self.flat))

    @cached_property
    def moufang_witness(self):
        return kernels.moufang_violation(self.n, self.flat)

    @cached_property
    def assoc_witness(self):
        return kernels.assoc_violation(self.n, self.flat)

    @cached_property
    def commutative(self):
        return kernels.comm_violation(self.n, self.flat) is None

    def order_of(self, x):
        """Least m >= 1 with the left-associated power m*x equal to zero."""
        acc = x
        m = 1
        while acc != self.zero:
            acc = self.q.rows[acc][x]
            m += 1
        return m

    @cached_property
    def exponent(self):
        return lcm(*(self.order_of(x) for x in range(self.n))) if self.n else 1

    @cached_property
    def pow_table(self):
        """pow_table[m][x] = m*x (left-associated) for m in 0..exponent-1."""
        n, e = self.n, self.exponent
        rows = self.q.rows
        table = [bytes([self.zero]) * n]
        cur = list(range(n)) if e > 1 else None
        for _ in range(1, e):
            table.append(bytes(cur))
            cur = [rows[cur[x]][x] for x in range(n)]
        return tuple(table)

    @cached_property
    def nk_pairs(self):
        """Nuclear/Moufang-central decomposition of each element, or None."""
        from .structure import nk_decomposition

        return nk_decomposition(self)

    @cached_property
    def k_subloop(self):
        """The Moufang-center subloop and its element -> subindex map."""
        from .structure import subloop

        members = self.moufang_center_members
        return subloop(self, members), {e: i for i, e in enumerate(members)}

    @cached_property
    def endo_plan(self):
        """Generator/closure plan reused by the endomorphism searches."""
        from .endo import _closure_plan

        return _closure_plan(self)

    def __eq__(self, other):
        return isinstance(other, LoopTable) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"LoopTable(order={self.n}, zero={self.zero})"


def is_moufang(L):
    return L.moufang_witness is None


def moufang_violation(L):
    """None, or the first (x, y, z) with ((x+y)+x)+z != x+(y+(x+z))."""
    return L.moufang_witness


def is_associative(L):
    return L.assoc_witness is None


def close_subset(q, seed):
    """Smallest product-closed subset containing seed, as a sorted tuple."""
    rows = q.rows
    members = sorted(set(seed))
    inset = set(members)
    frontier = list(members)
    while frontier:
        new = []
        for a in frontier:
            for b in members:
                for p in (rows[a][b], rows[b][a]):
                    if p not in inset:
                        inset.add(p)
                        new.append(p)
        members.extend(new)
        frontier = new
    return tuple(sorted(inset))


def is_diassociative(L, assume_moufang=None):
    """Every 2-generated subloop is associative.

    Moufang loops are diassociative, so a verified Moufang check short-circuits;
    the direct subloop scan is retained as the general route and as a
    cross-validation mode.
    """
    if assume_moufang is None:
        assume_moufang = L.moufang_witness is None
    if assume_moufang:
        return True
    return diassociativity_violation(L) is None


def diassociativity_violation(L):
    """First (x, y) generating a non-associative subloop, or None."""
    rows = L.q.rows
    for x in range(L.n):
        for y in range(x, L.n):
            s = close_subset(L.q, (x, y))
            for a in s:
                for b in s:
                    ab = rows[a][b]
                    for c in s:
                        if rows[ab][c] != rows[a][rows[b][c]]:
                            return (x, y)
    return None


def power(L, x, m, check=True):
    """The m-th power of x: the m-fold sum, negative m via the two-sided inverse.

    With check=True a left/right bracketing discrepancy (or a missing two-sided
    inverse) raises NotDiassociative; diassociative loops never trigger it.
    """
    rows = L.q.rows
    base = x
    if m < 0:
        base = L.neg[x]
        if base is None:
            raise NotDiassociative(f"element {x} has no two-sided inverse")
        m = -m
    m %= L.order_of(base) if m else 1
    left = L.zero
    for _ in range(m):
        left = rows[left][base]
    if check:
        right = L.zero
        for _ in range(m):
            right = rows[base][right]
        if right != left:
            raise NotDiassociative(f"bracketing discrepancy at element {base} power {m}")
    return left


# ---------------------------------------------------------------------------
# text file format


def _significant_lines(text):
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line


def parse_pointed_table(text):
    """Parse the table file format; returns (QuasigroupTable, point or None)."""
    lines = list(_significant_lines(text))
    if not lines:
        raise Malformed("no content")
    try:
        n = int(lines[0])
    except ValueError:
        raise Malformed(f"first line must be the order, got {lines[0]!r}") from None
    if n <= 0:
        raise Malformed(f"order must be positive, got {n}")
    if len(lines) < 1 + n:
        raise Malformed(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i in range(1, 1 + n):
        parts = lines[i].split()
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise Malformed(f"row {i - 1} contains a non-integer: {lines[i]!r}") from None
        rows.append(row)
    point = None
    rest = lines[1 + n:]
    if rest:
        if len(rest) > 1 or not rest[0].startswith("point"):
            raise Malformed(f"unexpected trailing content: {rest[0]!r}")
        parts = rest[0].split()
        if len(parts) != 2:
            raise Malformed(f"bad point line: {rest[0]!r}")
        try:
            point = int(parts[1])
        except ValueError:
            raise Malformed(f"bad point line: {rest[0]!r}") from None
        if not 0 <= point < n:
            raise Malformed(f"point {point} out of range for order {n}")
    return QuasigroupTable(rows), point


def parse_table(text):
    """Parse a table file (a trailing point line is accepted and dropped)."""
    return parse_pointed_table(text)[0]


def serialize_table(q, point=None):
    """Canonical text for a table: order line, rows, optional point line."""
    lines = [str(q.n)]
    lines.extend(" ".join(str(v) for v in row) for row in q.rows)
    if point is not None:
        if not 0 <= point < q.n:
            raise Malformed(f"point {point} out of range for order {q.n}")
        lines.append(f"point {point}")
    return "\n".join(lines) + "\n"
