"""Lusztig's bilinear form on the free algebra, computed from its three
axioms, plus Gram matrices, radical ranks and the weight-space machinery
built on top of them.

Two independent recursions are implemented: `pair_words` peels the first
letter of the right word (axiom (b)) while `pair_words_mirror` peels the
first letter of the left word (axiom (c)).  Their agreement on all word
pairs is literally the symmetry of the form and is part of the test suite.
"""

from __future__ import annotations

from . import linalg
from .cartan import (SizeError, add_colorings, coloring_of_word, enumerate_words,
                     sub_colorings, unit_coloring, weight_of, word_count)
from .freealg import GradedVector, concat_mul, serre_content, serre_element, word_vector


# The polynomial core of the pairing works with plain {v-exponent: int}
# dicts: the values live in Z[v^{±1}] no matter how many puncture symbols the
# ambient ring declares, and integer-keyed dicts keep the recursion fast.

def _ip_shift_add(dst, src, shift, scale=1):
    for e, coef in src.items():
        e += shift
        val = dst.get(e, 0) + scale * coef
        if val:
            dst[e] = val
        else:
            del dst[e]


def _ip_to_poly(ctx, d):
    zeros = (0,) * (ctx.ring.nslots - 1)
    from .scalars import LaurentPoly
    return LaurentPoly(ctx.ring, {(e,) + zeros: c for e, c in d.items()})


def _pair_poly_int(ctx, w, u):
    """(w, u) with every base value stripped off, as an exponent dict."""
    if not u:
        return {0: 1}
    key = (w, u)
    memo = ctx.pair_memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    beta = u[0]
    total = {}
    exponent = 0
    inner = ctx.datum.inner
    for p, letter in enumerate(w):
        if letter == beta:
            rest = w[:p] + w[p + 1:]
            _ip_shift_add(total, _pair_poly_int(ctx, rest, u[1:]), exponent)
        exponent += inner(letter, beta)
    memo[key] = total
    return total


def _pair_poly(ctx, w, u):
    return _ip_to_poly(ctx, _pair_poly_int(ctx, w, u))


def iota_poly_coords(ctx, x_words, c):
    """All pairing-core values pair(x, u) for u over enumerate_words(c) at
    once: one trie-shaped peel along u's letters, so the cost per basis word
    stays proportional to the (small) peeled support of x.

    x_words: dict word -> exponent dict (the polynomial part of the input
    coefficients).  Returns dict u -> exponent dict.
    """
    inner = ctx.datum.inner
    out = {}

    def rec(support, remaining, prefix):
        if not support:
            return
        if not any(remaining):
            poly = support.get(())
            if poly:
                out[prefix] = poly
            return
        for b in range(ctx.rank):
            if not remaining[b]:
                continue
            beta = b + 1
            peeled = {}
            for w, poly in support.items():
                exponent = 0
                for p, letter in enumerate(w):
                    if letter == beta:
                        rest = w[:p] + w[p + 1:]
                        slot = peeled.setdefault(rest, {})
                        _ip_shift_add(slot, poly, exponent)
                        if not slot:
                            del peeled[rest]
                    exponent += inner(letter, beta)
            remaining[b] -= 1
            rec(peeled, remaining, prefix + (beta,))
            remaining[b] += 1

    rec(dict(x_words), list(c), ())
    return out


def base_product(ctx, c):
    """prod over the content of the base values 1/(1 - q_beta^{-1}), cached."""
    key = ("baseprod", c)
    hit = ctx.op_cache.get(key)
    if hit is None:
        hit = ctx.one_frac()
        for i, mult in enumerate(c, start=1):
            if mult:
                hit = hit * ctx.base_value(i) ** mult
        ctx.op_cache[key] = hit
    return hit


def check_bound(ctx, c):
    if weight_of(c) > ctx.max_weight:
        raise SizeError("weight %d exceeds bound %d (%d words); raise "
                        "--max-weight to override"
                        % (weight_of(c), ctx.max_weight, word_count(c)),
                        count=word_count(c))


def word_iota_coords(ctx, m):
    """Cached batch of the polynomial pairing values pair(m, u) over every
    basis word u of the content of m."""
    key = ("iotaw", m)
    hit = ctx.op_cache.get(key)
    if hit is None:
        c = coloring_of_word(m, ctx.rank)
        check_bound(ctx, c)
        hit = iota_poly_coords(ctx, {m: {0: 1}}, c)
        ctx.op_cache[key] = hit
    return hit


def pair_words(ctx, w, u):
    """(w, u) by the axiom-(b) recursion (peels the first letter of u)."""
    w, u = tuple(w), tuple(u)
    c = coloring_of_word(w, ctx.rank)
    if c != coloring_of_word(u, ctx.rank):
        return ctx.zero_frac()
    poly = _pair_poly(ctx, w, u)
    if poly.is_zero():
        return ctx.zero_frac()
    return ctx.frac(poly) * base_product(ctx, c)


def pair_words_mirror(ctx, w, u):
    """(w, u) by the axiom-(c) recursion (peels w, scans u); must agree with
    pair_words -- that agreement is the symmetry statement."""
    w, u = tuple(w), tuple(u)
    if coloring_of_word(w, ctx.rank) != coloring_of_word(u, ctx.rank):
        return ctx.zero_frac()
    if not w:
        return ctx.one_frac()
    beta = w[0]
    total = ctx.zero_frac()
    exponent = 0
    for p, letter in enumerate(u):
        if letter == beta:
            rest = u[:p] + u[p + 1:]
            total = total + (ctx.v_pow(exponent) * ctx.base_value(beta)
                             * pair_words_mirror(ctx, w[1:], rest))
        exponent += ctx.datum.inner(letter, beta)
    return total


def pair(ctx, x, y):
    """Bilinear extension of the word pairing."""
    total = ctx.zero_frac()
    for w, cw in x.coeffs.items():
        for u, cu in y.coeffs.items():
            val = pair_words(ctx, w, u)
            if not val.is_zero():
                total = total + cw * cu * val
    return total


def pair_tensor(ctx, tx, ty):
    """Slotwise product pairing on H (x) H (used to state axiom (b))."""
    total = ctx.zero_frac()
    for (x1, x2), cx in tx.coeffs.items():
        for (y1, y2), cy in ty.coeffs.items():
            v1 = pair_words(ctx, x1, y1)
            if v1.is_zero():
                continue
            v2 = pair_words(ctx, x2, y2)
            if v2.is_zero():
                continue
            total = total + cx * cy * v1 * v2
    return total


def gram(ctx, c, bound=None):
    """Gram matrix of the form at content c, indexed by enumerate_words(c)."""
    words = enumerate_words(c, bound if bound is not None else ctx.max_weight)
    return [[pair_words(ctx, u, w) for w in words] for u in words]


def radical_rank(ctx, c):
    """Rank of the Gram matrix = dimension of the weight-c space of the
    negative half of the quantum group."""
    return weight_space(ctx, c).rank


def serre_ideal_rank(ctx, c):
    """Rank of the span of {u * serre(i,j) * v} at content c -- the
    independent dimension oracle (radical_rank must equal #words - this)."""
    words = enumerate_words(c, ctx.max_weight)
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for i in range(1, ctx.rank + 1):
        for j in range(1, ctx.rank + 1):
            if i == j:
                continue
            cs = serre_content(ctx, i, j)
            remainder = sub_colorings(c, cs)
            if any(x < 0 for x in remainder):
                continue
            s = serre_element(ctx, i, j)
            for cu in _sub_colorings_of(remainder):
                cv = sub_colorings(remainder, cu)
                for u in enumerate_words(cu):
                    for v in enumerate_words(cv):
                        elt = concat_mul(concat_mul(word_vector(ctx, u), s),
                                         word_vector(ctx, v))
                        row = [ctx.zero_frac()] * len(words)
                        for w, coeff in elt.coeffs.items():
                            row[index[w]] = coeff
                        rows.append(row)
    if not rows:
        return 0
    return linalg.rank(rows)


def _sub_colorings_of(c):
    out = [()]
    for top in c:
        out = [prefix + (k,) for prefix in out for k in range(top + 1)]
    return [tuple(x) for x in out]


class WeightSpace:
    """Cached exact data for one content c: the word basis, the Gram matrix
    (whose columns are the shuffle-side coordinates of the word monomials),
    a pivot set spanning the column space, and a solver expressing any
    column-space vector in the pivot coordinates.

    The Gram matrix is the common scalar base_product(c) times a matrix of
    Laurent polynomials; rank and pivots are computed on the polynomial part
    so no fraction arithmetic enters the elimination.
    """

    def __init__(self, ctx, c):
        self.ctx = ctx
        self.content = c
        self.words = enumerate_words(c)
        scale = base_product(ctx, c)
        index = {u: i for i, u in enumerate(self.words)}
        n = len(self.words)
        zero = {}
        poly = [[None] * n for _ in range(n)]
        for j, w in enumerate(self.words):
            col = word_iota_coords(ctx, w)
            for i, u in enumerate(self.words):
                poly[i][j] = _ip_to_poly(ctx, col.get(u, zero))
        self.gram = [[ctx.frac(x) * scale for x in row] for row in poly]
        self.pivot_cols, self.pivot_rows = _column_pivots(
            ctx, [[ctx.frac(x) for x in row] for row in poly])
        self.rank = len(self.pivot_cols)
        self.pivot_words = [self.words[j] for j in self.pivot_cols]
        square = [[self.gram[r][j] for j in self.pivot_cols] for r in self.pivot_rows]
        self._square_inv = linalg.invert(square) if self.rank else []

    def coords_in_pivots(self, vec):
        """Coordinates of a shuffle-side vector (dict word -> scalar) in the
        pivot basis {iota(pivot word)}; None when outside the span."""
        ctx = self.ctx
        rhs = [vec.get(self.words[r], ctx.zero_frac()) for r in self.pivot_rows]
        xi = []
        for i in range(self.rank):
            acc = ctx.zero_frac()
            for k in range(self.rank):
                acc = acc + self._square_inv[i][k] * rhs[k]
            xi.append(acc)
        # membership: verify on all rows, not only the pivot rows
        for r, u in enumerate(self.words):
            acc = ctx.zero_frac()
            for i, j in enumerate(self.pivot_cols):
                acc = acc + self.gram[r][j] * xi[i]
            if acc != vec.get(u, ctx.zero_frac()):
                return None
        return xi

    def iota_coords(self, x):
        """Shuffle-side coordinates of iota(x) for a free-side x at this content."""
        ctx = self.ctx
        scale = base_product(ctx, self.content)
        out = {}
        for w, coeff in x.coeffs.items():
            for u, poly in word_iota_coords(ctx, w).items():
                val = coeff * _ip_to_poly(ctx, poly)
                acc = out.get(u, ctx.zero_frac()) + val
                if acc.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = acc
        return {u: val * scale for u, val in out.items()}


def weight_space(ctx, c):
    ws = ctx.weight_spaces.get(c)
    if ws is None:
        if weight_of(c) > ctx.max_weight:
            raise SizeError("weight %d exceeds bound %d (%d words)"
                            % (weight_of(c), ctx.max_weight, word_count(c)),
                            count=word_count(c))
        ws = WeightSpace(ctx, c)
        ctx.weight_spaces[c] = ws
    return ws


def _column_pivots(ctx, matrix):
    """Greedy pivot columns (and matching rows) via exact Gauss elimination."""
    if not matrix:
        return [], []
    nrows, ncols = len(matrix), len(matrix[0])
    m = [list(row) for row in matrix]
    rowperm = list(range(nrows))
    pivot_cols, pivot_rows = [], []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not m[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        rowperm[r], rowperm[pivot] = rowperm[pivot], rowperm[r]
        inv = m[r][col].inv()
        for i in range(r + 1, nrows):
            if m[i][col].is_zero():
                continue
            factor = m[i][col] * inv
            for j in range(col, ncols):
                m[i][j] = m[i][j] - factor * m[r][j]
        pivot_cols.append(col)
        pivot_rows.append(rowperm[r])
        r += 1
    return pivot_cols, pivot_rows
