"""The free algebra on two generators x, y with its length grading.

Provides the degree-4 q-Serre combinations, the spanning sets of the
relation ideal in each degree, and an exact rank computation over the
fraction field of the coefficient ring.  The graded dimensions of the
quotient by the q-Serre ideal fall out as 2^n minus the rank.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .qcoeff import DEFAULT_RING, LaurentPoly, LaurentRing

DEGREE_CAP = 12  # matrices stay at <= 2^12 columns by default

Word = str  # a word over the alphabet "xy"; "" is the identity


def words_of_length(n: int) -> list:
    """All length-n words in lexicographic order with x < y."""
    return ["".join(w) for w in product("xy", repeat=n)]


class FreeElem:
    """A finite sum of words with LaurentPoly coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = {w: c for w, c in terms.items() if c}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeElem)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __add__(self, other: "FreeElem") -> "FreeElem":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, self.ring.zero()) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return FreeElem(self.ring, terms)

    def __neg__(self) -> "FreeElem":
        return FreeElem(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeElem") -> "FreeElem":
        return self + (-other)

    def __mul__(self, other) -> "FreeElem":
        if isinstance(other, (int, LaurentPoly)):
            c0 = self.ring.coerce(other)
            return FreeElem(self.ring, {w: c * c0 for w, c in self.terms.items()})
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, self.ring.zero()) + c1 * c2
                if s:
                    out[w] = s
                else:
                    del out[w]
        return FreeElem(self.ring, out)

    def __rmul__(self, other) -> "FreeElem":
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return NotImplemented

    def homogeneous_degree(self) -> Optional[int]:
        """The common word length, None for 0; raises if lengths are mixed."""
        if not self.terms:
            return None
        lengths = {len(w) for w in self.terms}
        if len(lengths) != 1:
            raise ValueError("element is not homogeneous")
        return lengths.pop()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda w: (-len(w), w))
        pieces = []
        for w in keys:
            c = self.terms[w]
            body = "*".join(w) if w else ""
            multi = len(c.terms) > 1
            allneg = all(v < 0 for v in c.terms.values())
            if multi and not allneg:
                text = "(%s)" % c
                sign = " + "
            else:
                cc = -c if allneg else c
                sign = " - " if allneg else " + "
                text = "(%s)" % cc if multi else str(cc)
            if text == "1" and body:
                text = ""
            joined = text + ("*" if text and body else "") + body
            if not pieces:
                pieces.append(("-" if sign == " - " else "") + joined)
            else:
                pieces.append(sign + joined)
        return "".join(pieces)

    def __repr__(self) -> str:
        return "<FreeElem %s>" % self


def word_elem(word: Word, ring: LaurentRing = DEFAULT_RING) -> FreeElem:
    if any(ch not in "xy" for ch in word):
        raise ValueError("free words use the alphabet {x, y}")
    return FreeElem(ring, {word: ring.one()})


def serre_elements(ring: LaurentRing = DEFAULT_RING) -> tuple:
    """The two degree-4 q-Serre combinations, one per generator."""
    three = ring.qint(3)
    s_x = FreeElem(
        ring,
        {"xxxy": ring.one(), "xxyx": -three, "xyxx": three, "yxxx": -ring.one()},
    )
    s_y = FreeElem(
        ring,
        {"yyyx": ring.one(), "yyxy": -three, "yxyy": three, "xyyy": -ring.one()},
    )
    return s_x, s_y


def relation_span(n: int, ring: LaurentRing = DEFAULT_RING) -> list:
    """Spanning set of the ideal's degree-n slice: w1 * S_g * w2, |w1|+|w2| = n-4.

    Deterministic order: left length ascending, then left word, generator
    (x before y), right word, all lexicographic.
    """
    if n <= 3:
        return []
    out = []
    gens = serre_elements(ring)
    for r in range(n - 3):
        s = n - 4 - r
        if s < 0:
            continue
        for w1 in words_of_length(r):
            for g in gens:
                left = word_elem(w1, ring) * g
                for w2 in words_of_length(s):
                    out.append(left * word_elem(w2, ring))
    return out


# ---------------------------------------------------------------------------
# Exact rank over the fraction field.
#
# Rows are cleared to polynomial form by the minimal monomial, then reduced
# by fraction-free cross-multiplication (Bareiss-style): the update
# new = pivot_coeff * row - row_coeff * pivot stays in Z[q, ...], and every
# row is stripped of its full content (integer gcd, common q-power, and the
# common polynomial factor of its entries) afterwards, which keeps every
# stored row primitive.  All divisions are exact, so the result is exact.
#
# Rows whose coefficients involve only q take a dense fast path: entries are
# plain coefficient lists, products go through Kronecker substitution (one
# big-integer multiply), and the content strip uses a primitive polynomial
# remainder sequence.  Without the polynomial-content strip the entries
# accumulate enormous cyclotomic factors and elimination beyond degree 9
# becomes infeasible.
# ---------------------------------------------------------------------------


def _dtrim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _dmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= 16:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _dtrim(out)
    # Kronecker substitution: pack at 2^B, multiply once, unpack balanced
    ba = max(abs(c) for c in a).bit_length()
    bb = max(abs(c) for c in b).bit_length()
    B = ba + bb + min(len(a), len(b)).bit_length() + 2
    pack_a = 0
    for c in reversed(a):
        pack_a = (pack_a << B) + c
    pack_b = 0
    for c in reversed(b):
        pack_b = (pack_b << B) + c
    m = pack_a * pack_b
    half = 1 << (B - 1)
    mask = (1 << B) - 1
    out = []
    while m:
        d = m & mask
        if d >= half:
            d -= 1 << B
        out.append(d)
        m = (m - d) >> B
    return _dtrim(out)


def _dsub_scaled(pc: list, row_e: list, rc: list, piv_e: list) -> list:
    """pc * row_e - rc * piv_e on dense coefficient lists."""
    a = _dmul(pc, row_e) if row_e else []
    b = _dmul(rc, piv_e) if piv_e else []
    if len(a) < len(b):
        a += [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        a[i] -= c
    return _dtrim(a)


def _dquo_exact(f: list, g: list) -> list:
    """Exact division; raises on a nonzero remainder."""
    if not g:
        raise ZeroDivisionError
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    out = [0] * (len(f) - dg)
    for i in range(len(out) - 1, -1, -1):
        c, rem = divmod(r[i + dg], lc)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        if c:
            out[i] = c
            for j, y in enumerate(g):
                r[i + j] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _dtrim(out)


def _dcontent(f: list) -> int:
    from math import gcd

    g = 0
    for c in f:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _dprimitive(f: list) -> list:
    g = _dcontent(f)
    if g > 1:
        f = [c // g for c in f]
    if f and f[-1] < 0:
        f = [-c for c in f]
    return f


def _dgcd(f: list, g: list) -> list:
    """Primitive gcd of the polynomial parts (low-order q-powers removed)."""

    def shift_out(h):
        k = 0
        while k < len(h) and h[k] == 0:
            k += 1
        return h[k:]

    f = _dprimitive(shift_out(list(f)))
    g = _dprimitive(shift_out(list(g)))
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while True:
        if len(g) == 1:
            return [1]
        # pseudo-remainder of f by g, taken primitive each round
        r = list(f)
        dg = len(g) - 1
        lc = g[-1]
        while len(r) > dg:
            c = r[-1]
            if c:
                r = [lc * x for x in r]
                off = len(r) - 1 - dg
                for j, y in enumerate(g):
                    r[off + j] -= c * y
            r.pop()
            _dtrim(r)
            if not r:
                return g
        f, g = g, _dprimitive(r)


def _strip_row_dense(row: dict) -> dict:
    if not row:
        return row
    shift = min(next(i for i, c in enumerate(e) if c) for e in row.values())
    if shift:
        row = {w: e[shift:] for w, e in row.items()}
    g_int = 0
    from math import gcd

    for e in row.values():
        g_int = gcd(g_int, _dcontent(e))
        if g_int == 1:
            break
    if g_int > 1:
        row = {w: [c // g_int for c in e] for w, e in row.items()}
    g = None
    for e in sorted(row.values(), key=len):
        g = e if g is None else _dgcd(g, e)
        if len(g) == 1:
            g = None
            break
    if g is not None and len(g) > 1:
        row = {w: _dquo_exact(e, g) for w, e in row.items()}
    if row[min(row)][-1] < 0:
        row = {w: [-c for c in e] for w, e in row.items()}
    return row


def _rank_dense(rows: list) -> int:
    pivots: dict = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = _strip_row_dense(row)
                break
            pc = pivot[lead]
            rc = row[lead]
            new: dict = {}
            for w in set(row) | set(pivot):
                acc = _dsub_scaled(pc, row.get(w, []), rc, pivot.get(w, []))
                if acc:
                    new[w] = acc
            row = _strip_row_dense(new)
    return len(pivots)


def _as_dense_q(rows: list):
    """Dense coefficient lists when every entry involves q alone."""
    dense = []
    for row in rows:
        drow = {}
        for w, poly in row.items():
            entry = {}
            for exps, coeff in poly.terms.items():
                if any(exps[1:]):
                    return None
                entry[exps[0]] = coeff
            top = max(entry)
            lst = [0] * (top + 1)
            for k, c in entry.items():
                lst[k] = c
            drow[w] = lst
        dense.append(drow)
    return dense


def _cleared_rows(rows: Sequence[FreeElem], n: int) -> list:
    cleared = []
    for row in rows:
        deg = row.homogeneous_degree()
        if deg is None:
            continue
        if deg != n:
            raise ValueError("row is not homogeneous of degree %d" % n)
        entries = dict(row.terms)
        mins = [0] * row.ring.width
        for poly in entries.values():
            for i, e in enumerate(poly.min_exponents()):
                mins[i] = min(mins[i], e)
        shift = tuple(mins)
        if any(shift):
            clear = row.ring.monomial(1, tuple(-m for m in shift))
            entries = {w: p * clear for w, p in entries.items()}
        cleared.append(entries)
    return cleared


def _strip_row(row: dict) -> dict:
    from math import gcd

    g = 0
    mins = None
    for poly in row.values():
        g = gcd(g, poly.int_content())
        m = poly.min_exponents()
        if mins is None:
            mins = list(m)
        else:
            for i, e in enumerate(m):
                if e < mins[i]:
                    mins[i] = e
    if not row:
        return row
    shift = tuple(mins)
    if g == 1 and not any(shift):
        return row
    return {w: p.scale_down(g, shift) for w, p in row.items()}


def _rank_poly(rows: list) -> int:
    pivots: dict = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                row = _strip_row(row)
                if row[min(row)].leading_coefficient() < 0:
                    row = {w: -p for w, p in row.items()}
                pivots[lead] = row
                break
            pc = pivot[lead]
            rc = row[lead]
            new: dict = {}
            for w in set(row) | set(pivot):
                val = row.get(w)
                pval = pivot.get(w)
                if val is None:
                    acc = -(rc * pval)
                elif pval is None:
                    acc = pc * val
                else:
                    acc = pc * val - rc * pval
                if acc:
                    new[w] = acc
            row = _strip_row(new)
    return len(pivots)


def rank_over_fraction_field(rows: Sequence[FreeElem], n: int) -> int:
    """Rank of the degree-n coefficient matrix over the ring's fraction field."""
    cleared = _cleared_rows(rows, n)
    dense = _as_dense_q(cleared)
    if dense is not None:
        return _rank_dense(dense)
    return _rank_poly(cleared)


def _rank_rational(rows: list) -> int:
    """Plain fraction-free integer elimination; rows map column -> Fraction."""
    from math import gcd

    pivots: dict = {}
    for row in rows:
        denom = 1
        for v in row.values():
            denom = denom * v.denominator // gcd(denom, v.denominator)
        work = {w: int(v * denom) for w, v in row.items() if v}
        while work:
            lead = min(work)
            pivot = pivots.get(lead)
            if pivot is None:
                g = 0
                for v in work.values():
                    g = gcd(g, v)
                pivots[lead] = {w: v // g for w, v in work.items()}
                break
            pc = pivot[lead]
            rc = work[lead]
            new = {}
            for w in set(work) | set(pivot):
                acc = pc * work.get(w, 0) - rc * pivot.get(w, 0)
                if acc:
                    new[w] = acc
            g = 0
            for v in new.values():
                g = gcd(g, v)
            work = {w: v // g for w, v in new.items()} if g > 1 else new
    return len(pivots)


def random_specialization_point(rng: random.Random, ring: LaurentRing) -> dict:
    """A random rational point with every symbol nonzero and q^2 != 1."""
    values = {}
    for sym in ring.symbols:
        while True:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
            if v == 0:
                continue
            if sym == "q" and v * v == 1:
                continue
            values[sym] = v
            break
    return values


def rank_by_specialization(
    rows: Sequence[FreeElem],
    n: int,
    rng: Optional[random.Random] = None,
    points: int = 3,
) -> int:
    """Max rank over several random rational specializations (a lower bound
    for the symbolic rank, used as an independent cross-check)."""
    cleared = _cleared_rows(rows, n)
    if not cleared:
        return 0
    rng = rng or random.Random(0x51DE)
    ring = rows[0].ring
    best = 0
    for _ in range(points):
        values = random_specialization_point(rng, ring)
        numeric = [
            {w: p.specialize(values) for w, p in row.items()} for row in cleared
        ]
        best = max(best, _rank_rational(numeric))
    return best


def dim_uplus(n: int, ring: LaurentRing = DEFAULT_RING, cap: int = DEGREE_CAP) -> int:
    """Graded dimension in degree n of the quotient by the q-Serre ideal."""
    if n < 0:
        raise ValueError("degree must be a natural number")
    if n > cap:
        raise ValueError("degree %d exceeds the configured cap %d" % (n, cap))
    return 2 ** n - rank_over_fraction_field(relation_span(n, ring), n)
