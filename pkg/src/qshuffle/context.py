"""Shared computation environment: a Cartan datum, the scalar ring over it,
resource bounds, and the memo tables the exact kernels rely on.

The memo tables are plain dicts guarded by the interpreter lock; entries are
immutable values, so concurrent readers are safe and a Context can be shared
between tasks (or confined per task for full isolation).
"""

from __future__ import annotations

from .cartan import CartanDatum, named_datum, validate_datum
from .scalars import LaurentPoly, ScalarFraction, ScalarRing


class Context:
    def __init__(self, datum, punctures=0, max_weight=8, max_tensor_weight=5):
        if isinstance(datum, str):
            datum = named_datum(datum)
        if not isinstance(datum, CartanDatum):
            datum = validate_datum(*datum)
        self.datum = datum
        self.punctures = punctures
        self.ring = ScalarRing(datum.rank, punctures)
        self.max_weight = max_weight
        self.max_tensor_weight = max_tensor_weight
        self.pair_memo = {}
        self.weight_spaces = {}
        self.op_cache = {}
        self._zero = ScalarFraction(self.ring.zero())
        self._one = ScalarFraction(self.ring.one())

    @property
    def rank(self):
        return self.datum.rank

    def frac(self, x):
        if isinstance(x, ScalarFraction):
            if x.ring != self.ring:
                raise ValueError("scalar declared over a different symbol set")
            return x
        if isinstance(x, LaurentPoly):
            return ScalarFraction(x)
        if isinstance(x, int):
            return ScalarFraction(self.ring.monomial(x))
        raise TypeError("cannot coerce %r to a scalar" % (x,))

    def zero_frac(self):
        return self._zero

    def one_frac(self):
        return self._one

    def v_pow(self, e):
        return ScalarFraction(self.ring.v(e))

    def q_alpha_half(self, i, power=1):
        """q_alpha^{power/2} = v^{power*d_i}, exact for any integer power."""
        return ScalarFraction(self.ring.v(power * self.datum.d[i - 1]))

    def base_value(self, beta):
        """The pairing seed 1/(1 - q_beta^{-1}), kept exact as a fraction."""
        one = self.ring.one()
        qb_inv = self.ring.v(-2 * self.datum.d[beta - 1])
        return ScalarFraction(one, one - qb_inv)

    def normalizer(self, c):
        """prod over letters of (1 - q_beta^{-1}) for a coloring c (the
        per-letter scaling between plain and normalized iota)."""
        out = self.one_frac()
        one = self.ring.one()
        for i, mult in enumerate(c, start=1):
            if mult:
                factor = ScalarFraction(one - self.ring.v(-2 * self.datum.d[i - 1]))
                out = out * factor ** mult
        return out
