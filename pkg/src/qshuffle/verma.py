"""Universal Verma modules over Z[v^{±1}, s(p,i)^{±1}] and their tensor
products: F/K/E actions, the split isomorphism, the intersection pairing and
the adjoint (co-Verma) actions.

Conventions fixed here (each is exercised by the test suite):

* K_alpha acts on the weight-c subspace by (prod_p s(p,alpha)^{-1}) v^{-(alpha,c)};
  in particular K_alpha v0 = s_alpha^{-1} on the vacuum.
* The commutator base case is [E_alpha, F_alpha] = K_alpha - K_alpha^{-1}
  (the k = 0 instance of the divided-power commutation relation); with the
  adopted K this forces K E K^{-1} = q_alpha^{+a/2} E and
  K F K^{-1} = q_alpha^{-a/2} F.
* Tensor folds are ordered left to right by puncture, the first coproduct
  slot acting on the leftmost fold, with
      Delta(F^{(k)}) = sum_{i+j=k} q_alpha^{-ij/2} K^{-i} F^{(j)} (x) F^{(i)},
      Delta(E) = E (x) K + 1 (x) E,   Delta(K^{±1}) = K^{±1} (x) K^{±1}.
* split is pure coordinate bookkeeping (regrouping folds into two blocks);
  equivariance against Delta is then a checkable identity, not a definition.

The n = 1 module is carried by shuffle-side coordinates (BMElement); tensor
elements are keyed by n-tuples of words.  Membership of every slot in the
image of the canonical map is enforced at construction.
"""

from __future__ import annotations

from . import linalg
from .cartan import (add_colorings, coloring_of_word, enumerate_words,
                     sub_colorings, unit_coloring, weight_of)
from .freealg import _SparseWords, GradedVector
from .pairing import weight_space
from .shuffle import BMElement, iota, shuffle_mul


class MembershipError(ValueError):
    """Raised when coordinates do not lie in the image of the canonical map."""


class TensorElement(_SparseWords):
    """Element of an n-fold Verma tensor product, keyed by word tuples."""

    def folds(self):
        if not self.coeffs:
            return 0
        return len(next(iter(self.coeffs)))

    @staticmethod
    def _key_str(key):
        return "|".join(",".join(str(x) for x in w) for w in key)


def vacuum(ctx, n=None):
    if n is None:
        n = ctx.punctures
    return TensorElement(ctx, {((),) * n: ctx.one_frac()})


def verma_element(ctx, coords):
    """n = 1 module element from shuffle-side coordinates; enforces
    membership in the image of the canonical map."""
    m = coords if isinstance(coords, BMElement) else BMElement(ctx, coords)
    for c in m.contents():
        ws = weight_space(ctx, c)
        vec = {w: m.coeffs[w] for w in m.coeffs
               if coloring_of_word(w, ctx.rank) == c}
        if ws.coords_in_pivots(vec) is None:
            raise MembershipError("coordinates at content %s are outside the "
                                  "image of the canonical map" % (c,))
    return m

def tensor_element(ctx, coeffs, check=True):
    m = coeffs if isinstance(coeffs, TensorElement) else TensorElement(ctx, coeffs)
    if check and not m.is_zero():
        n = m.folds()
        for slot in range(n):
            frames = {}
            for key, val in m.coeffs.items():
                frame = key[:slot] + key[slot + 1:]
                c = coloring_of_word(key[slot], ctx.rank)
                frames.setdefault((frame, c), {})[key[slot]] = val
            for (frame, c), vec in frames.items():
                if weight_space(ctx, c).coords_in_pivots(vec) is None:
                    raise MembershipError("slot %d at content %s is outside the "
                                          "image of the canonical map" % (slot + 1, c))
    return m


# K ---------------------------------------------------------------------------

def fold_k(ctx, alpha, c, p, power=1):
    """Eigenvalue of K_alpha^power on the weight-c subspace of fold p."""
    exp = -ctx.datum.inner_coloring(unit_coloring(ctx.rank, alpha), c)
    val = ctx.frac(ctx.ring.s(p, alpha, -1)) * ctx.v_pow(exp)
    return val ** power


def k_eigenvalue(ctx, alpha, c, punctures=None):
    """(prod_p s(p,alpha)^{-1}) v^{-(alpha,c)}: the diagonal K action on the
    whole weight-c subspace of the n-fold module."""
    if punctures is None:
        punctures = range(1, ctx.punctures + 1)
    out = ctx.v_pow(-ctx.datum.inner_coloring(unit_coloring(ctx.rank, alpha), c))
    for p in punctures:
        out = out * ctx.frac(ctx.ring.s(p, alpha, -1))
    return out


# free-side E recursion --------------------------------------------------------

def _e_word(ctx, alpha, word, p):
    """Free-side commutation recursion: the unique operator with E v0 = 0,
    E F_beta = F_beta E for beta != alpha, and
    [E, F_alpha] = K_alpha - K_alpha^{-1} evaluated at the weight it acts on.
    Returns a dict word -> scalar (content drops by alpha)."""
    key = ("eword", alpha, word, p)
    hit = ctx.op_cache.get(key)
    if hit is not None:
        return hit
    if not word:
        return {}
    beta, rest = word[0], word[1:]
    out = {}
    for w, val in _e_word(ctx, alpha, rest, p).items():
        out[(beta,) + w] = out.get((beta,) + w, ctx.zero_frac()) + val
    if beta == alpha:
        c_rest = coloring_of_word(rest, ctx.rank)
        kval = fold_k(ctx, alpha, c_rest, p)
        coef = kval - kval.inv()
        out[rest] = out.get(rest, ctx.zero_frac()) + coef
    out = {w: val for w, val in out.items() if not val.is_zero()}
    ctx.op_cache[key] = out
    return out


def _dp_image(ctx, alpha, k):
    """iota(DP(alpha,k)), cached; the shuffle-side divided power."""
    key = ("dpimg", alpha, k)
    hit = ctx.op_cache.get(key)
    if hit is None:
        from .freealg import divided_power_word
        hit = iota(ctx, divided_power_word(ctx, alpha, k))
        ctx.op_cache[key] = hit
    return hit


def _e_on_coords(ctx, alpha, vec, p):
    """E_alpha on an n=1 coordinate vector of pure content c: decompose in
    the pivot basis, push the free-side recursion through, take iota.

    Failure of the decomposition cannot occur for elements satisfying the
    membership invariant and is reported as an internal error.
    """
    if not vec:
        return {}
    c = coloring_of_word(next(iter(vec)), ctx.rank)
    ws = weight_space(ctx, c)
    xi = ws.coords_in_pivots(vec)
    if xi is None:
        raise MembershipError("internal error: E applied outside the module")
    key = ("ecols", alpha, c, p)
    cols = ctx.op_cache.get(key)
    if cols is None:
        cols = []
        for w in ws.pivot_words:
            free = GradedVector(ctx, _e_word(ctx, alpha, w, p))
            cols.append(iota(ctx, free).coeffs)
        ctx.op_cache[key] = cols
    out = {}
    for coeff, col in zip(xi, cols):
        if coeff.is_zero():
            continue
        for u, val in col.items():
            acc = out.get(u, ctx.zero_frac()) + coeff * val
            if acc.is_zero():
                out.pop(u, None)
            else:
                out[u] = acc
    return out


# slotwise fold operators -------------------------------------------------------

def _slot_apply(ctx, m, slot, fold_fn):
    """Apply a per-fold linear operator (dict word -> dict word) at one slot."""
    out = {}
    frames = {}
    for key, val in m.coeffs.items():
        frame = key[:slot] + (None,) + key[slot + 1:]
        c = coloring_of_word(key[slot], ctx.rank)
        frames.setdefault((frame, c), {})[key[slot]] = val
    for (frame, c), vec in frames.items():
        image = fold_fn(vec, c)
        for w, val in image.items():
            key = frame[:slot] + (w,) + frame[slot + 1:]
            acc = out.get(key, ctx.zero_frac()) + val
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    return TensorElement(ctx, out)


def _slot_F(ctx, m, slot, alpha, k, p):
    if k == 0:
        return m
    img = _dp_image(ctx, alpha, k)

    def fold_fn(vec, c):
        return shuffle_mul(img, BMElement(ctx, vec)).coeffs

    return _slot_apply(ctx, m, slot, fold_fn)


def _slot_E(ctx, m, slot, alpha, p):
    def fold_fn(vec, c):
        return _e_on_coords(ctx, alpha, vec, p)

    return _slot_apply(ctx, m, slot, fold_fn)


def _slot_K(ctx, m, slot, alpha, power, p):
    def fold_fn(vec, c):
        scale = fold_k(ctx, alpha, c, p, power)
        return {w: val * scale for w, val in vec.items()}

    return _slot_apply(ctx, m, slot, fold_fn)


# tensor action through the coproduct -------------------------------------------

def default_groups(n):
    return tuple((p,) for p in range(1, n + 1))


def split_groups(n, cut):
    if not (1 <= cut < n):
        raise ValueError("cut position must satisfy 1 <= N < n")
    return (tuple(range(1, cut + 1)), tuple(range(cut + 1, n + 1)))


def _act(ctx, gen, m, groups):
    """Apply a generator to a tensor element through the iterated coproduct,
    one coproduct split per group boundary.  gen is one of
    ("F", alpha, k), ("E", alpha), ("K", alpha, power)."""
    kind = gen[0]
    if len(groups) == 1:
        block = groups[0]
        if len(block) > 1:
            return _act(ctx, gen, m, tuple((p,) for p in block))
        p = block[0]
        slot = p - 1
        if kind == "F":
            return _slot_F(ctx, m, slot, gen[1], gen[2], p)
        if kind == "E":
            return _slot_E(ctx, m, slot, gen[1], p)
        return _slot_K(ctx, m, slot, gen[1], gen[2], p)
    first, rest = groups[:1], groups[1:]
    if kind == "K":
        return _act(ctx, gen, _act(ctx, gen, m, first), rest)
    if kind == "E":
        alpha = gen[1]
        t1 = _act(ctx, ("K", alpha, 1), _act(ctx, ("E", alpha), m, first), rest)
        t2 = _act(ctx, ("E", alpha), m, rest)
        return t1 + t2
    alpha, k = gen[1], gen[2]
    d_alpha = ctx.datum.d[alpha - 1]
    total = TensorElement(ctx, {})
    for i in range(k + 1):
        j = k - i
        term = _act(ctx, ("F", alpha, j), m, first)
        if i:
            term = _act(ctx, ("K", alpha, -i), term, first)
            term = _act(ctx, ("F", alpha, i), term, rest)
        term = term.scaled(ctx.v_pow(-i * j * d_alpha))
        total = total + term
    return total


def act_F(ctx, alpha, k, m, groups=None):
    """Divided-power F action; on n = 1 shuffle coordinates this is
    shuffle multiplication by the image of the divided power."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if isinstance(m, BMElement):
        return shuffle_mul(_dp_image(ctx, alpha, k), m)
    if groups is None:
        groups = default_groups(m.folds() or ctx.punctures)
    return _act(ctx, ("F", alpha, k), m, tuple(tuple(g) for g in groups))


def act_E(ctx, alpha, m, groups=None):
    if isinstance(m, BMElement):
        out = {}
        for c in m.contents():
            vec = {w: m.coeffs[w] for w in m.coeffs
                   if coloring_of_word(w, ctx.rank) == c}
            out.update(_e_on_coords(ctx, alpha, vec, 1))
        return BMElement(ctx, out)
    if groups is None:
        groups = default_groups(m.folds() or ctx.punctures)
    return _act(ctx, ("E", alpha), m, tuple(tuple(g) for g in groups))


def act_K(ctx, alpha, m, power=1, groups=None):
    if isinstance(m, BMElement):
        out = {}
        for w, val in m.coeffs.items():
            c = coloring_of_word(w, ctx.rank)
            out[w] = val * fold_k(ctx, alpha, c, 1, power)
        return BMElement(ctx, out)
    if groups is None:
        groups = default_groups(m.folds() or ctx.punctures)
    return _act(ctx, ("K", alpha, power), m, tuple(tuple(g) for g in groups))


def split(ctx, m, cut):
    """The split isomorphism at a cut position: pure coordinate bookkeeping
    (the regrouped element has the same coordinates); its content is that
    acting through Delta on the two blocks reproduces the fold action, which
    `split_equivariant` checks."""
    n = m.folds()
    split_groups(n, cut)  # validates the cut
    return m


def split_equivariant(ctx, gen, m, cut):
    """Exact check of split(u . m) = Delta(u) . split(m) for one generator."""
    n = m.folds()
    plain = _act(ctx, gen, m, default_groups(n))
    blocked = _act(ctx, gen, m, split_groups(n, cut))
    return plain == blocked


# intersection pairing and the dual (co-Verma) side ------------------------------

def intersection_pair(ctx, x, y):
    """Dual-basis pairing: sum over keys of x[key] * y[key]; keys of
    mismatched grading simply never meet (the mismatch pairs to zero)."""
    total = ctx.zero_frac()
    if isinstance(x, BMElement) != isinstance(y, BMElement):
        raise TypeError("both sides must have the same fold structure")
    for key, val in x.coeffs.items():
        other = y.coeffs.get(key)
        if other is not None:
            total = total + val * other
    return total


def tensor_basis(ctx, n, c_total):
    """All n-tuples of words of the given total content, ordered."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            for w in enumerate_words(remaining, ctx.max_weight):
                out.append(tuple(prefix) + (w,))
            return
        for c in _sub_colorings(remaining):
            for w in enumerate_words(c, ctx.max_weight):
                rec(prefix + [w], sub_colorings(remaining, c), slots - 1)

    rec([], c_total, n)
    return sorted(out)


def _sub_colorings(c):
    out = [()]
    for top in c:
        out = [prefix + (k,) for prefix in out for k in range(top + 1)]
    return out


def act_E_divided(ctx, alpha, k, x, n=None):
    """The k-th divided power of E on the dual side: the adjoint (matrix
    transpose in dual bases) of act_F(alpha, k) for the intersection pairing."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return x
    is_bm = isinstance(x, BMElement)
    if n is None:
        n = 1 if is_bm else (x.folds() or ctx.punctures)
    out = {}
    contents = {}
    for key in x.coeffs:
        words = (key,) if is_bm else key
        tot = (0,) * ctx.rank
        for w in words:
            tot = add_colorings(tot, coloring_of_word(w, ctx.rank))
        contents[tot] = True
    shift = unit_coloring(ctx.rank, alpha, k)
    for c_tot in contents:
        c_src = sub_colorings(c_tot, shift)
        if any(v < 0 for v in c_src):
            continue
        for t in tensor_basis(ctx, n, c_src):
            delta = (BMElement(ctx, {t[0]: ctx.one_frac()}) if is_bm
                     else TensorElement(ctx, {t: ctx.one_frac()}))
            image = act_F(ctx, alpha, k, delta)
            acc = ctx.zero_frac()
            for key, val in image.coeffs.items():
                other = x.coeffs.get(key)
                if other is not None:
                    acc = acc + val * other
            if not acc.is_zero():
                out[t[0] if is_bm else t] = acc
    return BMElement(ctx, out) if is_bm else TensorElement(ctx, out)


# operator matrices on the quotient module ---------------------------------------

def hbar_basis(ctx, c):
    """Pivot words: a basis of the weight-c subspace of the n = 1 module."""
    return list(weight_space(ctx, c).pivot_words)


def hbar_dim(ctx, c):
    return weight_space(ctx, c).rank


def mat_F(ctx, alpha, k, c):
    """Matrix of F^{(k)}_alpha from weight c to c + k alpha in pivot bases."""
    target = add_colorings(c, unit_coloring(ctx.rank, alpha, k))
    key = ("matF", alpha, k, c)
    hit = ctx.op_cache.get(key)
    if hit is not None:
        return hit
    ws_src = weight_space(ctx, c)
    ws_tgt = weight_space(ctx, target)
    from .freealg import divided_power_word, word_vector, concat_mul
    dp = divided_power_word(ctx, alpha, k)
    cols = []
    for w in ws_src.pivot_words:
        # column = F^{(k)} applied to the basis vector iota(w) = iota(DP . w)
        free = concat_mul(dp, word_vector(ctx, w))
        xi = ws_tgt.coords_in_pivots(ws_tgt.iota_coords(free))
        assert xi is not None
        cols.append(xi)
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(ws_tgt.rank)]
    ctx.op_cache[key] = matrix
    return matrix


def mat_E(ctx, alpha, c, p=1):
    """Matrix of E_alpha from weight c to c - alpha in pivot bases (empty
    when the target content leaves the cone)."""
    target = sub_colorings(c, unit_coloring(ctx.rank, alpha))
    key = ("matE", alpha, c, p)
    hit = ctx.op_cache.get(key)
    if hit is not None:
        return hit
    ws_src = weight_space(ctx, c)
    if any(x < 0 for x in target):
        # E annihilates weights with no alpha letters: the zero map to a
        # zero-dimensional space, represented by a zero-row matrix
        matrix = []
        ctx.op_cache[key] = matrix
        return matrix
    ws_tgt = weight_space(ctx, target)
    cols = []
    for w in ws_src.pivot_words:
        # column = E applied to the basis vector iota(w) = iota(E~ w)
        free = GradedVector(ctx, _e_word(ctx, alpha, w, p))
        xi = ws_tgt.coords_in_pivots(ws_tgt.iota_coords(free))
        assert xi is not None
        cols.append(xi)
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(ws_tgt.rank)]
    ctx.op_cache[key] = matrix
    return matrix


def mat_K(ctx, alpha, c, p=1, power=1):
    scale = fold_k(ctx, alpha, c, p, power)
    r = hbar_dim(ctx, c)
    return [[scale if i == j else ctx.zero_frac() for j in range(r)] for i in range(r)]
