"""Exact arithmetic in Z[q^{+-1}], optionally extended by further invertible
commuting symbols (a, b, ...).

Elements are sparse: a finite map from exponent vectors (one integer per
symbol, the first symbol always being q) to nonzero arbitrary-precision
integer coefficients.  All operations are exact; there are no floats and no
rational coefficients anywhere in the ring itself.  Evaluation at rational
points is provided separately through :meth:`LaurentPoly.specialize`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union


class NotInvertibleError(ArithmeticError):
    """Inversion was requested for something that is not a unit monomial."""


Exponents = tuple
IntLike = Union[int, "LaurentPoly"]


class LaurentRing:
    """A Laurent-polynomial ring over Z with a fixed tuple of symbols.

    Exponent vectors are fixed-width per ring instance, which keeps term
    keys compact and directly comparable.
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str] = ("q",)):
        symbols = tuple(symbols)
        if not symbols or symbols[0] != "q":
            raise ValueError("first ring symbol must be 'q'")
        if len(set(symbols)) != len(symbols):
            raise ValueError("duplicate ring symbols")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}

    def __repr__(self) -> str:
        return "LaurentRing(%s)" % ", ".join(self.symbols)

    @property
    def width(self) -> int:
        return len(self.symbols)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.from_int(1)

    def from_int(self, n: int) -> "LaurentPoly":
        if n == 0:
            return LaurentPoly(self, {})
        return LaurentPoly(self, {(0,) * self.width: int(n)})

    def monomial(self, coeff: int = 1, exps: Exponents = None) -> "LaurentPoly":
        if exps is None:
            exps = (0,) * self.width
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.width:
            raise ValueError("exponent vector has wrong width for this ring")
        if coeff == 0:
            return self.zero()
        return LaurentPoly(self, {exps: int(coeff)})

    def gen(self, name: str, power: int = 1) -> "LaurentPoly":
        i = self._index.get(name)
        if i is None:
            raise KeyError("unknown ring symbol %r" % name)
        exps = [0] * self.width
        exps[i] = power
        return self.monomial(1, tuple(exps))

    def qpow(self, k: int) -> "LaurentPoly":
        return self.gen("q", k)

    def qint(self, n: int) -> "LaurentPoly":
        """The q-integer [n]_q = (q^n - q^-n)/(q - q^-1).

        Expands to q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0, vanishes at
        n = 0, and satisfies [-n]_q = -[n]_q.
        """
        if n == 0:
            return self.zero()
        sign = 1
        if n < 0:
            sign, n = -1, -n
        terms = {}
        width = self.width
        for k in range(n - 1, -n - 1, -2):
            exps = (k,) + (0,) * (width - 1)
            terms[exps] = sign
        return LaurentPoly(self, terms)

    def coerce(self, value: IntLike) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            if value.ring is not self:
                raise ValueError("mixed coefficient rings")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        raise TypeError("cannot coerce %r into %r" % (value, self))


class LaurentPoly:
    """A sparse Laurent polynomial; immutable once constructed."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- predicates ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.ring.width: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True when invertible in the ring: a single term with coefficient +-1."""
        if len(self.terms) != 1:
            return False
        (coeff,) = self.terms.values()
        return coeff in (1, -1)

    # -- ring operations -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.from_int(other)
        return (
            isinstance(other, LaurentPoly)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __add__(self, other: IntLike) -> "LaurentPoly":
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        other = self.ring.coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: IntLike) -> "LaurentPoly":
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other: IntLike) -> "LaurentPoly":
        return self.ring.coerce(other) - self

    def __mul__(self, other: IntLike) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return LaurentPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        other = self.ring.coerce(other)
        # iterate the smaller factor outside; products here are tiny-by-large
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if not self.is_unit():
                raise NotInvertibleError("not invertible")
            ((exps, coeff),) = self.terms.items()
            c = 1 if coeff == 1 or n % 2 == 0 else -1
            return self.ring.monomial(c, tuple(e * n for e in exps))
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation ------------------------------------------------------

    def specialize(self, values: Mapping[str, Fraction]) -> Fraction:
        """Exact rational evaluation; every symbol must get a nonzero value."""
        point = []
        for sym in self.ring.symbols:
            if sym not in values:
                raise KeyError("no value assigned to symbol %r" % sym)
            v = Fraction(values[sym])
            if v == 0:
                raise ZeroDivisionError("symbols are invertible; zero value for %r" % sym)
            point.append(v)
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(point, exps):
                term *= v ** e
            total += term
        return total

    # -- content helpers (used by the elimination code) -------------------

    def int_content(self) -> int:
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                return 1
        return g

    def min_exponents(self) -> Exponents:
        """Componentwise minimum of the exponent vectors; zero vector if empty."""
        if not self.terms:
            return (0,) * self.ring.width
        mins = None
        for exps in self.terms:
            if mins is None:
                mins = list(exps)
            else:
                for i, e in enumerate(exps):
                    if e < mins[i]:
                        mins[i] = e
        return tuple(mins)

    def scale_down(self, g: int, shift: Exponents) -> "LaurentPoly":
        """Divide all coefficients by g and all exponent vectors by q^shift etc.

        The division must be exact; used for content stripping.
        """
        out = {}
        for exps, coeff in self.terms.items():
            c, r = divmod(coeff, g)
            if r:
                raise ArithmeticError("inexact content division")
            out[tuple(e - s for e, s in zip(exps, shift))] = c
        return LaurentPoly(self.ring, out)

    def leading_coefficient(self) -> int:
        """Coefficient of the lexicographically largest exponent vector."""
        if not self.terms:
            return 0
        return self.terms[max(self.terms)]

    # -- rendering ---------------------------------------------------------

    def _monomial_text(self, coeff_abs: int, exps: Exponents) -> str:
        factors = []
        if coeff_abs != 1 or all(e == 0 for e in exps):
            factors.append(str(coeff_abs))
        for sym, e in zip(self.ring.symbols, exps):
            if e == 0:
                continue
            factors.append(sym if e == 1 else "%s^%d" % (sym, e))
        return "*".join(factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        positives = sorted((e for e, c in self.terms.items() if c > 0), reverse=True)
        negatives = sorted((e for e, c in self.terms.items() if c < 0), reverse=True)
        pieces = []
        for exps in positives + negatives:
            coeff = self.terms[exps]
            body = self._monomial_text(abs(coeff), exps)
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return "<LaurentPoly %s>" % self


# The shared working ring for the rest of the package: q plus the two
# invertible scalars used by the sign-split expansion maps.
DEFAULT_RING = LaurentRing(("q", "a", "b"))


def qint(n: int, ring: LaurentRing = DEFAULT_RING) -> LaurentPoly:
    return ring.qint(n)
