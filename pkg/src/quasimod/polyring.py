"""Sparse polynomials over four commuting indeterminates, without constants.

The scalars of a generalized module form the ideal of Z[x, y, u, v] generated
by the indeterminates: integer-coefficient polynomials whose every term has
total degree at least one.  Values are immutable and canonical (no zero
coefficients, terms sorted graded-lexicographically descending), addition,
negation, and multiplication stay inside the ideal, and `evaluate` substitutes
four pairwise-commuting special endomorphisms of an NK-loop for the
indeterminates.
"""

import re
from dataclasses import dataclass

from .errors import (
    DegreeCapExceeded,
    ImagesNotCommuting,
    ImagesNotSpecial,
    Malformed,
)

NVARS = 4
VAR_NAMES = ("x", "y", "u", "v")
DEGREE_CAP = 12


def _normalize(mapping):
    terms = []
    for exps, coeff in mapping.items():
        exps = tuple(int(e) for e in exps)
        if len(exps) != NVARS or any(e < 0 for e in exps):
            raise Malformed(f"bad exponent tuple {exps!r}")
        total = sum(exps)
        if total == 0 and coeff != 0:
            raise Malformed("constant terms are not elements of this ring")
        if total > DEGREE_CAP:
            raise DegreeCapExceeded(
                f"term of degree {total} exceeds the cap of {DEGREE_CAP}")
        if coeff != 0:
            terms.append((exps, int(coeff)))
    terms.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
    return tuple(terms)


@dataclass(frozen=True)
class Poly:
    """Canonical sparse polynomial; `terms` maps exponent tuples to coefficients."""

    terms: tuple

    def __init__(self, mapping=()):
        object.__setattr__(self, "terms", _normalize(dict(mapping)))

    def degree(self):
        return sum(self.terms[0][0]) if self.terms else 0

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, poly_neg(other))

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def zero_poly():
    return Poly()


def generators():
    """The four indeterminates as polynomials, in the order x, y, u, v."""
    gens = []
    for i in range(NVARS):
        exps = tuple(1 if j == i else 0 for j in range(NVARS))
        gens.append(Poly({exps: 1}))
    return tuple(gens)


def poly_add(p, q):
    acc = dict(p.terms)
    for exps, coeff in q.terms:
        new = acc.get(exps, 0) + coeff
        if new:
            acc[exps] = new
        else:
            acc.pop(exps, None)
    return Poly(acc)


def poly_neg(p):
    return Poly({exps: -coeff for exps, coeff in p.terms})


def poly_mul(p, q):
    acc = {}
    for e1, c1 in p.terms:
        for e2, c2 in q.terms:
            exps = tuple(a + b for a, b in zip(e1, e2))
            if sum(exps) > DEGREE_CAP:
                raise DegreeCapExceeded(
                    f"product term of degree {sum(exps)} exceeds the cap of {DEGREE_CAP}")
            new = acc.get(exps, 0) + c1 * c2
            if new:
                acc[exps] = new
            else:
                acc.pop(exps, None)
    return Poly(acc)


def _format_monomial(exps):
    parts = []
    for name, e in zip(VAR_NAMES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p):
    """Canonical text: graded-lex descending terms, e.g. '2*x^2*u - y*v + 3*x'."""
    if not p.terms:
        return "0"
    pieces = []
    for i, (exps, coeff) in enumerate(p.terms):
        mono = _format_monomial(exps)
        mag = abs(coeff)
        body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"{' + ' if coeff > 0 else ' - '}{body}")
    return "".join(pieces)


_TOKEN = re.compile(r"\s*([+-]|\d+|[xyuv]|\*|\^)")


def parse_poly(text):
    """Inverse of format_poly; whitespace-insensitive, constants rejected."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise Malformed(f"unexpected character {text[pos:].strip()[0]!r} in polynomial")
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise Malformed("empty polynomial text")
    if tokens == ["0"]:
        return Poly()
    acc = {}
    i = 0
    var_index = {name: k for k, name in enumerate(VAR_NAMES)}
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        coeff = 1
        saw_any = False
        if i < len(tokens) and tokens[i].isdigit():
            coeff = int(tokens[i])
            saw_any = True
            i += 1
            if i < len(tokens) and tokens[i] == "*":
                i += 1
        exps = [0] * NVARS
        while i < len(tokens) and tokens[i] in var_index:
            k = var_index[tokens[i]]
            saw_any = True
            i += 1
            e = 1
            if i < len(tokens) and tokens[i] == "^":
                i += 1
                if i >= len(tokens) or not tokens[i].isdigit():
                    raise Malformed("exponent must be an integer")
                e = int(tokens[i])
                i += 1
            exps[k] += e
            if i < len(tokens) and tokens[i] == "*":
                i += 1
            else:
                break
        if not saw_any:
            raise Malformed(f"dangling token {tokens[i]!r} in polynomial" if i < len(tokens)
                            else "trailing sign in polynomial")
        if sum(exps) == 0:
            raise Malformed("constant terms are not elements of this ring")
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + sign * coeff
    return Poly(acc)


def check_images(L, images):
    """Validate evaluation images: four special endomorphisms, pairwise commuting."""
    from .endo import endo_compose, is_special

    if len(images) != NVARS:
        raise Malformed(f"expected {NVARS} images, got {len(images)}")
    for name, f in zip(VAR_NAMES, images):
        if not is_special(L, f):
            raise ImagesNotSpecial(f"image of {name} is not a special endomorphism")
    for a in range(NVARS):
        for b in range(a + 1, NVARS):
            fa, fb = images[a], images[b]
            if endo_compose(fa, fb) != endo_compose(fb, fa):
                raise ImagesNotCommuting(
                    f"images of {VAR_NAMES[a]} and {VAR_NAMES[b]} do not commute")
    return True


def evaluate(p, images, L, check=True):
    """Substitute the images for x, y, u, v; returns the resulting map on L.

    Each term becomes the composition of the images (repeated per exponent);
    the integer coefficient acts as an iterated pointwise sum, reduced modulo
    the loop exponent; terms are summed pointwise in canonical order (the sum
    is order-independent for commuting special images).
    """
    from .endo import endo_add, endo_compose, identity_map, zero_map

    if check:
        check_images(L, images)
    n = L.n
    e = L.exponent
    pow_t = L.pow_table
    acc = zero_map(L)
    for exps, coeff in p.terms:
        mono = identity_map(n)
        for f, k in zip(images, exps):
            for _ in range(k):
                mono = endo_compose(f, mono)
        c = coeff % e
        if c == 0:
            continue
        pm = pow_t[c]
        acc = endo_add(L, acc, tuple(pm[w] for w in mono))
    return acc
