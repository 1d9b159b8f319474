"""Exact arithmetic in Z[v^{±1}, s(p,i)^{±1}] and its fraction field.

The ring has one distinguished unit v (with v^2 = q, so every half-integer
power of q seen in quantum-group formulas is an integer power of v) and one
invertible symbol s(p,i) per puncture p and root index i.  Exponent vectors
are tuples with slot 0 reserved for v and slot 1 + (p-1)*rank + (i-1) for
s(p,i); this slot order is fixed and is what the JSON serialization emits.

Values are immutable; all operations are pure functions, so they can be
shared freely between tasks.
"""

from __future__ import annotations

from math import gcd


class ScalarError(ValueError):
    pass


class NonInvertibleError(ScalarError):
    pass


class ScalarRing:
    """Declares the exponent-slot layout for a family of scalars."""

    def __init__(self, rank, punctures=0):
        if rank < 1 or punctures < 0:
            raise ScalarError("rank must be >= 1 and punctures >= 0")
        self.rank = rank
        self.punctures = punctures
        self.nslots = 1 + punctures * rank

    def __eq__(self, other):
        return (isinstance(other, ScalarRing)
                and (self.rank, self.punctures) == (other.rank, other.punctures))

    def __hash__(self):
        return hash((self.rank, self.punctures))

    def __repr__(self):
        return "ScalarRing(rank=%d, punctures=%d)" % (self.rank, self.punctures)

    def slot_of(self, p, i):
        """Slot index of the symbol s(p,i), punctures and roots 1-based."""
        if not (1 <= p <= self.punctures and 1 <= i <= self.rank):
            raise ScalarError("symbol s(%d,%d) not declared in %r" % (p, i, self))
        return 1 + (p - 1) * self.rank + (i - 1)

    def slot_names(self):
        names = ["v"]
        for p in range(1, self.punctures + 1):
            for i in range(1, self.rank + 1):
                names.append("s(%d,%d)" % (p, i))
        return names

    # constructors ---------------------------------------------------------

    def monomial(self, coef, exps=None):
        if exps is None:
            exps = (0,) * self.nslots
        exps = tuple(exps)
        if len(exps) != self.nslots:
            raise ScalarError("exponent vector has %d slots, expected %d"
                              % (len(exps), self.nslots))
        if coef == 0:
            return LaurentPoly(self, {})
        return LaurentPoly(self, {exps: int(coef)})

    def zero(self):
        return LaurentPoly(self, {})

    def one(self):
        return self.monomial(1)

    def integer(self, n):
        return self.monomial(n)

    def v(self, e=1):
        exps = [0] * self.nslots
        exps[0] = e
        return self.monomial(1, exps)

    def q(self, e=1):
        return self.v(2 * e)

    def s(self, p, i, e=1):
        exps = [0] * self.nslots
        exps[self.slot_of(p, i)] = e
        return self.monomial(1, exps)


class LaurentPoly:
    """Sparse Laurent polynomial: map from exponent tuples to nonzero ints."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # no zero coefficients stored

    # helpers --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ScalarError("operands declared over different symbol sets")
            return other
        if isinstance(other, int):
            return self.ring.monomial(other)
        return None

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.ring.nslots: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def is_monomial_unit(self):
        """True iff the value is ±(monomial), the only units of the ring."""
        if len(self.terms) != 1:
            return False
        (coef,) = self.terms.values()
        return coef in (1, -1)

    def leading(self):
        """(exponents, coefficient) of the lexicographically largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def content(self):
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def min_exponents(self):
        """Componentwise minimum exponent over the support (zero poly -> zeros)."""
        if not self.terms:
            return (0,) * self.ring.nslots
        cols = zip(*self.terms)
        return tuple(min(col) for col in cols)

    def shifted(self, shift):
        """Multiply by the monomial with exponent vector `shift`."""
        if not any(shift):
            return self
        return LaurentPoly(self.ring, {
            tuple(a + b for a, b in zip(e, shift)): c for e, c in self.terms.items()})

    def int_scaled(self, n):
        if n == 0:
            return self.ring.zero()
        if n == 1:
            return self
        return LaurentPoly(self.ring, {e: c * n for e, c in self.terms.items()})

    def int_divided(self, n):
        out = {}
        for e, c in self.terms.items():
            if c % n:
                raise ScalarError("integer content division is inexact")
            out[e] = c // n
        return LaurentPoly(self.ring, out)

    # ring operations ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                del out[e]
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ScalarFraction):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                n = out.get(e, 0) + c1 * c2
                if n:
                    out[e] = n
                else:
                    del out[e]
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self):
        """Inverse, defined only for the ring units ±monomial."""
        if not self.is_monomial_unit():
            raise NonInvertibleError("only monomial units are invertible: %s" % self)
        ((e, c),) = self.terms.items()
        return LaurentPoly(self.ring, {tuple(-x for x in e): c})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return poly_str(self)

    # serialization --------------------------------------------------------

    def to_json(self):
        """List of [coef, e_v, e_s...] rows, sorted by exponent vector."""
        return [[c] + list(e) for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, ring, rows):
        out = ring.zero()
        for row in rows:
            out = out + ring.monomial(row[0], row[1:])
        return out


def exact_div(f, g):
    """Exact quotient f/g in the Laurent ring, or None when g does not divide f.

    Both arguments may be Laurent; monomial parts are split off so the core
    loop is ordinary multivariate division by leading terms (lex order).
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    ring = f.ring
    fshift = f.min_exponents()
    gshift = g.min_exponents()
    fhat = f.shifted(tuple(-x for x in fshift))
    ghat = g.shifted(tuple(-x for x in gshift))
    ge, gc = ghat.leading()
    quotient = ring.zero()
    rem = fhat
    while not rem.is_zero():
        re, rc = rem.leading()
        te = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in te) or rc % gc:
            return None
        t = ring.monomial(rc // gc, te)
        quotient = quotient + t
        rem = rem - t * ghat
    return quotient.shifted(tuple(a - b for a, b in zip(fshift, gshift)))


class ScalarFraction:
    """Quotient of Laurent polynomials in canonical form.

    Canonicalization: monomial units are pulled out of the denominator and
    absorbed into the numerator, integer content is cancelled, the sign is
    fixed so the denominator's lex-leading coefficient is positive, and the
    denominator collapses to 1 whenever it divides the numerator exactly.
    Beyond that no factorization is attempted; equality is decided by
    cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = num.ring.one()
        if den.ring != num.ring:
            raise ScalarError("numerator and denominator over different symbol sets")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, ScalarFraction):
            if other.ring != self.ring:
                raise ScalarError("operands declared over different symbol sets")
            return other
        if isinstance(other, LaurentPoly):
            return ScalarFraction(other)
        if isinstance(other, int):
            return ScalarFraction(self.ring.monomial(other))
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.terms == other.den.terms:
            return ScalarFraction(self.num + other.num, self.den)
        return ScalarFraction(self.num * other.den + other.num * self.den,
                              self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarFraction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ScalarFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return ScalarFraction(self.den, self.num)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = ScalarFraction(self.ring.one())
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        if self.den.is_one():
            return poly_str(self.num)
        return "(%s)/(%s)" % (poly_str(self.num), poly_str(self.den))

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, ring, obj):
        return cls(LaurentPoly.from_json(ring, obj["num"]),
                   LaurentPoly.from_json(ring, obj["den"]))


def _normalize(num, den):
    ring = num.ring
    if num.is_zero():
        return ring.zero(), ring.one()
    # pull the denominator's monomial part into the numerator
    shift = den.min_exponents()
    if any(shift):
        den = den.shifted(tuple(-x for x in shift))
        num = num.shifted(tuple(-x for x in shift))
    # integer content
    g = gcd(num.content(), den.content())
    if g > 1:
        num = num.int_divided(g)
        den = den.int_divided(g)
    # denominator's lex-leading coefficient positive
    if den.leading()[1] < 0:
        num, den = -num, -den
    # collapse exact quotients
    if not den.is_one():
        q = exact_div(num, den)
        if q is not None:
            num, den = q, ring.one()
    return num, den


def fraction_reduce(num, den):
    """Canonical reduced fraction num/den (den must be nonzero)."""
    return ScalarFraction(num, den)


# quantum numbers -----------------------------------------------------------

QNUM_KINDS = ("asym", "asym_fact", "asym_binom", "sym", "sym_fact",
              "sym_binom", "brace")


def qnum(kind, k, l=None, var=None):
    """Quantum numbers, factorials and binomials in a monomial unit `var`.

    asym:   (k)_u = 1 + u + ... + u^{k-1}
    sym:    [k]_u = (u^k - u^{-k})/(u - u^{-1}) = u^{k-1} + u^{k-3} + ...
    brace:  {k}_u = u^k - u^{-k}
    with the _fact and _binom variants built from them; binomials take the
    second argument l with 0 <= l <= k and always divide exactly.
    """
    if var is None:
        raise ScalarError("qnum needs the unit `var`")
    if not var.is_monomial_unit():
        raise ScalarError("qnum var must be a monomial unit")
    ring = var.ring
    if kind not in QNUM_KINDS:
        raise ScalarError("unknown qnum kind %r" % (kind,))
    if k < 0:
        raise ScalarError("qnum needs k >= 0")
    if kind.endswith("_binom"):
        if l is None or not (0 <= l <= k):
            raise ScalarError("binomial needs 0 <= l <= k")
        base = "asym" if kind.startswith("asym") else "sym"
        num = qnum(base + "_fact", k, var=var)
        d1 = qnum(base + "_fact", l, var=var)
        d2 = qnum(base + "_fact", k - l, var=var)
        q1 = exact_div(num, d1 * d2)
        if q1 is None:
            raise ScalarError("inexact quantum binomial division")
        return q1
    if kind.endswith("_fact"):
        base = kind[:-5]
        out = ring.one()
        for j in range(1, k + 1):
            out = out * qnum(base, j, var=var)
        return out
    if kind == "asym":
        out = ring.zero()
        for j in range(k):
            out = out + var ** j
        return out
    if kind == "sym":
        out = ring.zero()
        for j in range(k):
            out = out + var ** (k - 1 - 2 * j)
        return out
    # brace
    return var ** k - var ** (-k)


# printing -------------------------------------------------------------------

def _mono_str(ring, exps, coef, qmode):
    factors = []
    names = ring.slot_names()
    ev = exps[0]
    if ev:
        if qmode and ev % 2 == 0:
            e = ev // 2
            factors.append("q" if e == 1 else "q^%d" % e)
        else:
            factors.append("v" if ev == 1 else "v^%d" % ev)
    for slot in range(1, ring.nslots):
        e = exps[slot]
        if e:
            name = names[slot]
            factors.append(name if e == 1 else "%s^%d" % (name, e))
    if not factors:
        return str(coef)
    body = "*".join(factors)
    if coef == 1:
        return body
    if coef == -1:
        return "-" + body
    return "%d*%s" % (coef, body)


def poly_str(poly, qmode=None):
    """Human-readable form; with qmode=None, q-notation is used when every
    v-exponent is even."""
    if not poly.terms:
        return "0"
    if qmode is None:
        qmode = all(e[0] % 2 == 0 for e in poly.terms)
    parts = []
    for exps in sorted(poly.terms, reverse=True):
        s = _mono_str(poly.ring, exps, poly.terms[exps], qmode)
        if parts:
            parts.append("- " + s[1:] if s.startswith("-") else "+ " + s)
        else:
            parts.append(s)
    return " ".join(parts)


def fraction_str(x, qmode=None):
    if x.den.is_one():
        return poly_str(x.num, qmode)
    return "(%s)/(%s)" % (poly_str(x.num, qmode), poly_str(x.den, qmode))
