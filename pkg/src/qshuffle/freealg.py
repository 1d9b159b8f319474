"""The free algebra on words (standard-homology side): concatenation product,
the twisted coproduct r, divided powers and Serre elements.

Everything here is pure symbol pushing on sparse word-indexed vectors; the
coproduct follows the closed subset formula

    r(w) = sum over S subset of positions of v^{e(S)} (w|_S) (x) (w|_{S^c}),
    e(S) = sum over i<j with i not in S, j in S of (w_i, w_j),

which is forced by multiplicativity against the twisted tensor product
together with r on single letters.
"""

from __future__ import annotations

from .cartan import add_colorings, coloring_of_word, unit_coloring
from .scalars import qnum


class _SparseWords:
    """Finite map from keys to nonzero ScalarFraction coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=None):
        self.ctx = ctx
        clean = {}
        if coeffs:
            for k, val in coeffs.items():
                val = ctx.frac(val)
                if not val.is_zero():
                    clean[k] = val
        self.coeffs = clean

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def __getitem__(self, key):
        return self.coeffs.get(key, self.ctx.zero_frac())

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, val in other.coeffs.items():
            s = out.get(k, self.ctx.zero_frac()) + val
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return type(self)(self.ctx, out)

    def __neg__(self):
        return type(self)(self.ctx, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        scalar = self.ctx.frac(scalar)
        if scalar.is_zero():
            return type(self)(self.ctx, {})
        return type(self)(self.ctx, {k: v * scalar for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        return self.scaled(scalar)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(other.coeffs[k] == v for k, v in self.coeffs.items())

    __hash__ = None

    def _check(self, other):
        if type(other) is not type(self) or other.ctx.ring != self.ctx.ring:
            raise TypeError("cannot combine %r with %r" % (type(self), type(other)))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            label = ",".join(str(x) for x in k) if isinstance(k, tuple) else str(k)
            parts.append("(%r)*[%s]" % (self.coeffs[k], label))
        return " + ".join(parts)

    def to_json(self):
        return {self._key_str(k): self.coeffs[k].to_json() for k in sorted(self.coeffs)}

    @staticmethod
    def _key_str(key):
        return ",".join(str(x) for x in key)


class GradedVector(_SparseWords):
    """Element of the free algebra H, coordinates on word monomials."""

    def contents(self):
        return sorted({coloring_of_word(w, self.ctx.rank) for w in self.coeffs})

    def __mul__(self, other):
        if isinstance(other, GradedVector):
            return concat_mul(self, other)
        return self.scaled(other)


class TensorVector(_SparseWords):
    """Element of H (x) H, keyed by pairs of words, twisted product."""

    def __mul__(self, other):
        if isinstance(other, TensorVector):
            return tensor_mul(self, other)
        return self.scaled(other)


def word_vector(ctx, word, coeff=1):
    return GradedVector(ctx, {tuple(word): ctx.frac(coeff)})


def unit(ctx):
    return word_vector(ctx, ())


def concat_mul(x, y):
    """Bilinear extension of word concatenation; the unit is the empty word."""
    ctx = x.ctx
    out = {}
    for wx, cx in x.coeffs.items():
        for wy, cy in y.coeffs.items():
            w = wx + wy
            val = out.get(w, ctx.zero_frac()) + cx * cy
            if val.is_zero():
                out.pop(w, None)
            else:
                out[w] = val
    return GradedVector(ctx, out)


def _cut_exponent(datum, word, subset_mask):
    """e(S): sum of (w_i, w_j) over pairs i<j with i outside S and j inside."""
    e = 0
    m = len(word)
    for j in range(m):
        if subset_mask >> j & 1:
            for i in range(j):
                if not (subset_mask >> i & 1):
                    e += datum.inner(word[i], word[j])
    return e


def coproduct_r(x):
    """The twisted coproduct r: H -> H (x) H, extended linearly."""
    ctx = x.ctx
    out = {}
    for w, coeff in x.coeffs.items():
        m = len(w)
        for mask in range(1 << m):
            left = tuple(w[j] for j in range(m) if mask >> j & 1)
            right = tuple(w[j] for j in range(m) if not (mask >> j & 1))
            val = coeff * ctx.v_pow(_cut_exponent(ctx.datum, w, mask))
            key = (left, right)
            acc = out.get(key, ctx.zero_frac()) + val
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    return TensorVector(ctx, out)


def tensor_mul(tx, ty):
    """(x1 (x) x2)(y1 (x) y2) = v^{(c(x2), c(y1))} x1 y1 (x) x2 y2."""
    ctx = tx.ctx
    out = {}
    for (x1, x2), cx in tx.coeffs.items():
        c2 = coloring_of_word(x2, ctx.rank)
        for (y1, y2), cy in ty.coeffs.items():
            c1p = coloring_of_word(y1, ctx.rank)
            twist = ctx.v_pow(ctx.datum.inner_coloring(c2, c1p))
            key = (x1 + y1, x2 + y2)
            val = out.get(key, ctx.zero_frac()) + cx * cy * twist
            if val.is_zero():
                out.pop(key, None)
            else:
                out[key] = val
    return TensorVector(ctx, out)


def divided_power_word(ctx, i, k):
    """DP(i,k) = w[i,...,i] / [k]! in the symmetric quantum factorial at
    v^{d_i}, so that w[i]^k = [k]! DP(i,k) holds in H by construction."""
    if k < 0:
        raise ValueError("divided power needs k >= 0")
    if k == 0:
        return unit(ctx)
    fact = qnum("sym_fact", k, var=ctx.ring.v(ctx.datum.d[i - 1]))
    return word_vector(ctx, (i,) * k, ctx.frac(1) / ctx.frac(fact))


def serre_element(ctx, i, j):
    """sum_{l=0}^{k} (-1)^l DP(i,l) w[j] DP(i,k-l) with k = 1 - a_ij.

    Nonzero in the free algebra; it spans the radical instance that the
    canonical map to the shuffle side kills.
    """
    if i == j:
        raise ValueError("serre element needs i != j")
    k = 1 - ctx.datum.a[i - 1][j - 1]
    wj = word_vector(ctx, (j,))
    out = GradedVector(ctx, {})
    for l in range(k + 1):
        term = concat_mul(concat_mul(divided_power_word(ctx, i, l), wj),
                          divided_power_word(ctx, i, k - l))
        if l % 2:
            term = -term
        out = out + term
    return out


def content_of(x):
    """The unique content of a homogeneous vector (raises on mixed support)."""
    cs = x.contents()
    if len(cs) != 1:
        raise ValueError("vector is not of pure content: %s" % (cs,))
    return cs[0]


def serre_content(ctx, i, j):
    k = 1 - ctx.datum.a[i - 1][j - 1]
    return add_colorings(unit_coloring(ctx.rank, i, k), unit_coloring(ctx.rank, j))
