"""The shuffle-coordinate (Borel-Moore) side: the canonical map iota, the
quantum shuffle product it intertwines, and radical membership.

The shuffle coefficients are not transcribed from diagram examples; they are
the ones forced by the pairing axioms, which makes iota an algebra map by
construction and turns the diagrammatic fusion rules into theorems checked
in the test suite (divided-power property, quantum Serre vanishing).
"""

from __future__ import annotations

from .cartan import coloring_of_word
from .freealg import _SparseWords
from .pairing import _ip_to_poly, base_product, check_bound, word_iota_coords


class BMElement(_SparseWords):
    """Coordinates in the pearl-necklace basis of the Borel-Moore side."""

    def contents(self):
        return sorted({coloring_of_word(w, self.ctx.rank) for w in self.coeffs})

    def __mul__(self, other):
        if isinstance(other, BMElement):
            return shuffle_mul(self, other)
        return self.scaled(other)


def bm_unit(ctx):
    return BMElement(ctx, {(): ctx.one_frac()})


def iota(ctx, x, normalized=False):
    """Coordinates of the canonical image of a free-side element.

    Plain mode: iota(x)[w] = (x, w).  Normalized mode rescales each
    coordinate by prod over letters beta of w of (1 - q_beta^{-1}), making
    the image of a single letter the unit coordinate vector; both modes are
    algebra maps to the shuffle product.
    """
    out = {}
    contents = {coloring_of_word(w, ctx.rank) for w in x.coeffs}
    for c in contents:
        check_bound(ctx, c)
        support = {w: v for w, v in x.coeffs.items()
                   if coloring_of_word(w, ctx.rank) == c}
        scale = base_product(ctx, c)
        if normalized:
            scale = scale * ctx.normalizer(c)
        acc = {}
        for w, coeff in support.items():
            for u, poly in word_iota_coords(ctx, w).items():
                val = coeff * _ip_to_poly(ctx, poly)
                run = acc.get(u, ctx.zero_frac()) + val
                if run.is_zero():
                    acc.pop(u, None)
                else:
                    acc[u] = run
        for u, val in acc.items():
            out[u] = val * scale
    return BMElement(ctx, out)


def _interleavings(datum, wa, wb):
    """Yield (word, v-exponent) over all interleavings of wa and wb, the
    exponent counting inner(b-letter, a-letter) for each b-before-a pair."""
    la, lb = len(wa), len(wb)
    stack = [(0, 0, (), 0)]
    while stack:
        ia, ib, prefix, exp = stack.pop()
        if ia == la and ib == lb:
            yield prefix, exp
            continue
        if ia < la:
            bump = 0
            for t in range(ib):
                bump += datum.inner(wb[t], wa[ia])
            stack.append((ia + 1, ib, prefix + (wa[ia],), exp + bump))
        if ib < lb:
            stack.append((ia, ib + 1, prefix + (wb[ib],), exp))


def shuffle_mul(a, b):
    """Quantum shuffle product: (a.b)[w] = sum over position subsets S of
    v^{e(S)} a[w|_S] b[w|_{S^c}], the product making iota multiplicative."""
    ctx = a.ctx
    out = {}
    for wa, ca in a.coeffs.items():
        for wb, cb in b.coeffs.items():
            base = ca * cb
            for word, exp in _interleavings(ctx.datum, wa, wb):
                val = out.get(word, ctx.zero_frac()) + base * ctx.v_pow(exp)
                if val.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = val
    return BMElement(ctx, out)


def is_in_radical(ctx, x):
    """True iff x pairs to zero against every word of its content."""
    return iota(ctx, x).is_zero()
