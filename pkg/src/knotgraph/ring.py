"""Exact arithmetic in one formal variable A.

Three layers live here:

  * LaurentPoly  -- finite maps exponent -> Fraction, no zero entries.
  * RationalFunc -- canonical quotients of two LaurentPolys.
  * Series       -- truncated power series in h, where A = exp(h).

Everything is immutable and hashable so values can be memoised and
shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class RingError(ValueError):
    pass


def _clean(terms: Mapping[int, Fraction]) -> Tuple[Tuple[int, Fraction], ...]:
    out = []
    for e in sorted(terms, reverse=True):
        c = Fraction(terms[e])
        if c != 0:
            out.append((int(e), c))
    return tuple(out)


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial in A with exact rational coefficients."""

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @staticmethod
    def from_dict(d: Mapping[int, Fraction]) -> "LaurentPoly":
        return LaurentPoly(_clean(d))

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly.from_dict({0: Fraction(c)})

    @staticmethod
    def monomial(exp: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly.from_dict({exp: Fraction(coeff)})

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> Fraction:
        for e, c in self.terms:
            if e == exp:
                return c
        return Fraction(0)

    def min_exp(self) -> int:
        if not self.terms:
            raise RingError("zero polynomial has no minimal exponent")
        return self.terms[-1][0]

    def max_exp(self) -> int:
        if not self.terms:
            raise RingError("zero polynomial has no maximal exponent")
        return self.terms[0][0]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) + c
        return LaurentPoly(_clean(d))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) - c
        return LaurentPoly(_clean(d))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: Dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(_clean(d))

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly()
        return LaurentPoly(tuple((e, k * c) for e, k in self.terms))

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by A^n."""
        return LaurentPoly(tuple((e + n, c) for e, c in self.terms))

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under A -> A^-1 (mirror symmetry)."""
        return LaurentPoly(_clean({-e: c for e, c in self.terms}))

    def eval_at_one(self) -> Fraction:
        return sum((c for _, c in self.terms), Fraction(0))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise RingError("negative power of a LaurentPoly; use RationalFunc")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            else:
                a = "A" if e == 1 else "A^%d" % e
                if c == 1:
                    parts.append(a)
                else:
                    parts.append("%s*%s" % (c, a))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "LaurentPoly(%s)" % self.render()


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
# The loop value of the orientation-free state sum.
LOOP = LaurentPoly.from_dict({2: Fraction(-1), -2: Fraction(-1)})
# Its oriented counterpart, A^2 + A^-2.
DELTA_POS = LaurentPoly.from_dict({2: Fraction(1), -2: Fraction(1)})


def poly_A(exp: int, coeff=1) -> LaurentPoly:
    return LaurentPoly.monomial(exp, coeff)


def poly_from_pairs(pairs: Iterable[Tuple[int, int]]) -> LaurentPoly:
    return LaurentPoly.from_dict({e: Fraction(c) for e, c in pairs})


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of LaurentPoly.render: terms like ``-1/2*A^-3`` joined by
    ``+``; a bare coefficient or a bare ``A``/``A^k`` is also a term."""
    text = text.strip()
    if not text:
        raise RingError("empty polynomial")
    terms: dict = {}
    for chunk in text.replace(" ", "").replace("+-", "+-").split("+"):
        if not chunk:
            raise RingError("empty term in %r" % text)
        coeff = Fraction(1)
        exp = 0
        if "*" in chunk:
            cpart, apart = chunk.split("*", 1)
            coeff = Fraction(cpart)
        elif chunk.lstrip("-").startswith("A"):
            apart = chunk.lstrip("-")
            if chunk.startswith("-"):
                coeff = Fraction(-1)
        else:
            apart = ""
            coeff = Fraction(chunk)
        if apart:
            if apart == "A":
                exp = 1
            elif apart.startswith("A^"):
                exp = int(apart[2:])
            else:
                raise RingError("bad term %r" % chunk)
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
    return LaurentPoly.from_dict(terms)


def poly_op(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise RingError("unknown poly_op kind %r" % kind)


# --- dense helpers for gcd / division (ordinary polynomials, low degree first)


def _to_dense(p: LaurentPoly) -> Tuple[int, list]:
    """Return (shift, coeffs) with coeffs[0] the constant term after
    dividing out A^shift."""
    if p.is_zero():
        return 0, []
    lo = p.min_exp()
    hi = p.max_exp()
    coeffs = [Fraction(0)] * (hi - lo + 1)
    for e, c in p.terms:
        coeffs[e - lo] = c
    return lo, coeffs


def _from_dense(shift: int, coeffs: list) -> LaurentPoly:
    return LaurentPoly.from_dict({shift + i: c for i, c in enumerate(coeffs)})


def _dense_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_divmod(num: list, den: list):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        f = num[i + len(den) - 1] / lead
        if f:
            q[i] = f
            for j, d in enumerate(den):
                num[i + j] -= f * d
    return _dense_trim(q), _dense_trim(num)

def _dense_gcd(a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_divmod(num: LaurentPoly, den: LaurentPoly):
    """Quotient and remainder treating both as ordinary polynomials after
    shifting minimal exponents to zero.  The quotient absorbs the net
    A-power shift, so num == q*den + r*A^(shift of num)."""
    if den.is_zero():
        raise RingError("division by zero polynomial")
    if num.is_zero():
        return ZERO, ZERO
    ns, nc = _to_dense(num)
    ds, dc = _to_dense(den)
    q, r = _dense_divmod(nc, dc)
    return _from_dense(ns - ds, q), _from_dense(ns, r)


def poly_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    q, r = poly_divmod(num, den)
    if not r.is_zero():
        raise RingError("inexact polynomial division")
    return q


@dataclass(frozen=True)
class RationalFunc:
    """num/den in canonical form: gcd removed, den with minimal exponent 0
    and leading coefficient 1."""

    num: LaurentPoly
    den: LaurentPoly

    @staticmethod
    def make(num: LaurentPoly, den: LaurentPoly = ONE) -> "RationalFunc":
        if den.is_zero():
            raise RingError("zero denominator")
        if num.is_zero():
            return RationalFunc(ZERO, ONE)
        ns, nc = _to_dense(num)
        ds, dc = _to_dense(den)
        g = _dense_gcd(nc, dc)
        if len(g) > 1:
            nc, _ = _dense_divmod(nc, g)
            dc, _ = _dense_divmod(dc, g)
        # normalise: den has minimal exponent 0, leading coefficient 1
        lead = dc[-1]
        nc = [c / lead for c in nc]
        dc = [c / lead for c in dc]
        return RationalFunc(_from_dense(ns - ds, nc), _from_dense(0, dc))

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFunc":
        return RationalFunc.make(p, ONE)

    @staticmethod
    def const(c) -> "RationalFunc":
        return RationalFunc.make(LaurentPoly.const(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE

    def as_poly(self) -> LaurentPoly:
        if self.den != ONE:
            raise RingError("value is not a polynomial: %s" % self.render())
        return self.num

    def __add__(self, o: "RationalFunc") -> "RationalFunc":
        return RationalFunc.make(self.num * o.den + o.num * self.den,
                                 self.den * o.den)

    def __sub__(self, o: "RationalFunc") -> "RationalFunc":
        return RationalFunc.make(self.num * o.den - o.num * self.den,
                                 self.den * o.den)

    def __neg__(self) -> "RationalFunc":
        return RationalFunc(-self.num, self.den)

    def __mul__(self, o: "RationalFunc") -> "RationalFunc":
        return RationalFunc.make(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "RationalFunc") -> "RationalFunc":
        if o.is_zero():
            raise RingError("division by zero")
        return RationalFunc.make(self.num * o.den, self.den * o.num)

    def scale(self, c) -> "RationalFunc":
        return RationalFunc.make(self.num.scale(c), self.den)

    def render(self) -> str:
        if self.den == ONE:
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "RationalFunc(%s)" % self.render()


RF_ZERO = RationalFunc.from_poly(ZERO)
RF_ONE = RationalFunc.from_poly(ONE)


def rf(num: LaurentPoly, den: LaurentPoly = ONE) -> RationalFunc:
    return RationalFunc.make(num, den)


def rf_op(a: RationalFunc, b: RationalFunc, kind: str) -> RationalFunc:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise RingError("unknown rf_op kind %r" % kind)


@dataclass(frozen=True)
class Series:
    """Power series in h truncated at a fixed order, with A = exp(h)."""

    order: int
    coeffs: Tuple[Fraction, ...]

    @staticmethod
    def make(order: int, coeffs: Iterable) -> "Series":
        cs = [Fraction(c) for c in coeffs]
        cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(Fraction(0))
        return Series(order, tuple(cs))

    @staticmethod
    def const(c, order: int) -> "Series":
        return Series.make(order, [Fraction(c)])

    @staticmethod
    def exp_hx(x: Fraction, order: int) -> "Series":
        """exp(x*h) truncated."""
        cs = []
        term = Fraction(1)
        for n in range(order + 1):
            cs.append(term)
            term = term * x / (n + 1)
        return Series(order, tuple(cs))

    def __add__(self, o: "Series") -> "Series":
        n = min(self.order, o.order)
        return Series.make(n, [self.coeffs[i] + o.coeffs[i] for i in range(n + 1)])

    def __sub__(self, o: "Series") -> "Series":
        n = min(self.order, o.order)
        return Series.make(n, [self.coeffs[i] - o.coeffs[i] for i in range(n + 1)])

    def __mul__(self, o: "Series") -> "Series":
        n = min(self.order, o.order)
        cs = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                cs[i + j] += a * o.coeffs[j]
        return Series.make(n, cs)

    def scale(self, c) -> "Series":
        c = Fraction(c)
        return Series.make(self.order, [k * c for k in self.coeffs])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def drop_h(self, k: int) -> "Series":
        """Divide by h^k assuming the first k coefficients vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise RingError("cannot divide by h^%d: nonzero low coefficient" % k)
        return Series.make(self.order - k, self.coeffs[k:])

    def divide(self, o: "Series") -> "Series":
        """Series division, cancelling a common h-valuation first."""
        v = o.valuation()
        if v is None:
            raise RingError("division by zero series")
        if v > 0:
            sv = self.valuation()
            if sv is None:
                return Series.const(0, self.order - v)
            if sv < v:
                raise RingError("pole at h = 0 within truncation order")
            return self.drop_h(v).divide(o.drop_h(v))
        n = min(self.order, o.order)
        inv0 = 1 / o.coeffs[0]
        cs = []
        for i in range(n + 1):
            acc = self.coeffs[i]
            for j in range(1, i + 1):
                acc -= o.coeffs[j] * cs[i - j]
            cs.append(acc * inv0)
        return Series.make(n, cs)

    def render(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*h" % c)
            else:
                parts.append("%s*h^%d" % (c, i))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


def poly_series(p: LaurentPoly, order: int) -> Series:
    """Expand a Laurent polynomial with A = exp(h)."""
    out = Series.const(0, order)
    for e, c in p.terms:
        out = out + Series.exp_hx(Fraction(e), order).scale(c)
    return out


def series_at_exp(f: RationalFunc, order: int) -> Series:
    """Truncated expansion of f under A = exp(h).

    A denominator vanishing at h = 0 is handled by cancelling the common
    h-valuation against the numerator; a genuine pole raises RingError.
    Extra guard orders are computed so that the cancellation does not eat
    into the requested truncation.
    """
    if f.is_zero():
        return Series.const(0, order)
    guard = len(f.den.terms) + len(f.num.terms) + 4
    num = poly_series(f.num, order + guard)
    den = poly_series(f.den, order + guard)
    v = den.valuation()
    if v is None:
        raise RingError("division by zero series")
    q = num.divide(den)
    return Series.make(order, q.coeffs[: order + 1])
