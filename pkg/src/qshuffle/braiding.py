"""Truncated R-matrices on tensor squares of Verma modules and braid-group
representation matrices, with exact braid-relation verification.

The braiding operator is not taken from a quasi-R-matrix series (the source
calculus provides none); each weight block is solved as the unique exact
solution of the linear system

    B (u . m) = (u .' B m)   for u in {F_alpha, E_alpha, K_alpha^{±1}},
    B (v0 (x) v0) = v0 (x) v0,
    B maps the (c1, c2) weight cell into the cells (c2 - nu, c1 + nu), nu >= 0,

where .' is the action with the two parameter lists swapped.  The last line
is the flip-composed-with-raising shape every braiding of highest-weight
modules has; without it the intertwiner equations leave one free scalar per
singular vector of the tensor square (the system is exactly one rank short
per such vector), while with it the block determinants come out monomial.
Solvability and uniqueness are checked per block and failures are reported,
never assumed away.
"""

from __future__ import annotations

from . import linalg
from .cartan import add_colorings, sub_colorings, unit_coloring, weight_of
from .verma import fold_k, hbar_dim, mat_E, mat_F, weight_space


class BraidingError(RuntimeError):
    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


def _sub_colorings(c):
    out = [()]
    for top in c:
        out = [prefix + (k,) for prefix in out for k in range(top + 1)]
    return sorted(out)


def pair_basis(ctx, c):
    """Ordered basis of the weight-c block of M (x) M': entries
    (c1, w1, c2, w2) over pivot words of each fold."""
    out = []
    for c1 in _sub_colorings(c):
        c2 = sub_colorings(c, c1)
        for w1 in weight_space(ctx, c1).pivot_words:
            for w2 in weight_space(ctx, c2).pivot_words:
                out.append((c1, w1, c2, w2))
    return out


def _block_index(basis):
    return {entry: i for i, entry in enumerate(basis)}


def _gen_matrix(ctx, gen, c, symbols):
    """Matrix of a generator on the two-fold weight-c block, together with
    the target content.  symbols = (p1, p2) assigns parameter lists to the
    folds (first coproduct slot acts on fold 1)."""
    p1, p2 = symbols
    kind = gen[0]
    alpha = gen[1]
    src = pair_basis(ctx, c)
    if kind == "K":
        power = gen[2]
        mat = linalg.zero_matrix(ctx.ring, len(src), len(src))
        for idx, (c1, w1, c2, w2) in enumerate(src):
            mat[idx][idx] = fold_k(ctx, alpha, c1, p1, power) * \
                fold_k(ctx, alpha, c2, p2, power)
        return mat, c
    if kind == "E":
        target = sub_colorings(c, unit_coloring(ctx.rank, alpha))
        if any(x < 0 for x in target):
            return [], target
        tgt = pair_basis(ctx, target)
        tindex = _block_index(tgt)
        mat = linalg.zero_matrix(ctx.ring, len(tgt), len(src))
        for col, (c1, w1, c2, w2) in enumerate(src):
            # E (x) K
            down1 = sub_colorings(c1, unit_coloring(ctx.rank, alpha))
            if all(x >= 0 for x in down1):
                e1 = mat_E(ctx, alpha, c1, p1)
                kscale = fold_k(ctx, alpha, c2, p2)
                piv1 = weight_space(ctx, c1).pivot_words
                piv_t = weight_space(ctx, down1).pivot_words
                j = piv1.index(w1)
                for i, wt in enumerate(piv_t):
                    val = e1[i][j] * kscale
                    if not val.is_zero():
                        row = tindex[(down1, wt, c2, w2)]
                        mat[row][col] = mat[row][col] + val
            # 1 (x) E
            down2 = sub_colorings(c2, unit_coloring(ctx.rank, alpha))
            if all(x >= 0 for x in down2):
                e2 = mat_E(ctx, alpha, c2, p2)
                piv2 = weight_space(ctx, c2).pivot_words
                piv_t = weight_space(ctx, down2).pivot_words
                j = piv2.index(w2)
                for i, wt in enumerate(piv_t):
                    val = e2[i][j]
                    if not val.is_zero():
                        row = tindex[(c1, w1, down2, wt)]
                        mat[row][col] = mat[row][col] + val
        return mat, target
    # F^{(k)}
    k = gen[2]
    d_alpha = ctx.datum.d[alpha - 1]
    target = add_colorings(c, unit_coloring(ctx.rank, alpha, k))
    tgt = pair_basis(ctx, target)
    tindex = _block_index(tgt)
    mat = linalg.zero_matrix(ctx.ring, len(tgt), len(src))
    for col, (c1, w1, c2, w2) in enumerate(src):
        piv1 = weight_space(ctx, c1).pivot_words
        piv2 = weight_space(ctx, c2).pivot_words
        j1 = piv1.index(w1)
        j2 = piv2.index(w2)
        for i in range(k + 1):
            j = k - i
            up1 = add_colorings(c1, unit_coloring(ctx.rank, alpha, j))
            up2 = add_colorings(c2, unit_coloring(ctx.rank, alpha, i))
            f1 = mat_F(ctx, alpha, j, c1)
            f2 = mat_F(ctx, alpha, i, c2)
            kscale = fold_k(ctx, alpha, up1, p1, -i)
            weight = ctx.v_pow(-i * j * d_alpha)
            piv_t1 = weight_space(ctx, up1).pivot_words
            piv_t2 = weight_space(ctx, up2).pivot_words
            for r1, wt1 in enumerate(piv_t1):
                v1 = f1[r1][j1]
                if v1.is_zero():
                    continue
                for r2, wt2 in enumerate(piv_t2):
                    v2 = f2[r2][j2]
                    if v2.is_zero():
                        continue
                    row = tindex[(up1, wt1, up2, wt2)]
                    mat[row][col] = mat[row][col] + weight * kscale * v1 * v2
    return mat, target


class BraidingResult:
    """Solved braiding blocks up to a truncation, with basis metadata."""

    def __init__(self, ctx, truncation, symbols, blocks, bases):
        self.ctx = ctx
        self.truncation = truncation
        self.symbols = symbols
        self.blocks = blocks  # content -> square matrix
        self.bases = bases    # content -> pair basis

    def block(self, c):
        return self.blocks[c]


def braiding_operator(ctx, truncation, symbols=(1, 2)):
    """Solve the intertwiner system blockwise up to the given total weight.

    Raises BraidingError naming the offending block when some block's system
    is unsolvable or not unique (which would signal a convention fault
    upstream, not a recoverable condition).
    """
    pa, pb = symbols
    rho = (pa, pb)
    rho_bar = (pb, pa)
    blocks = {}
    bases = {}
    contents = [(0,) * ctx.rank]
    from .cartan import colorings_up_to
    contents += colorings_up_to(ctx.rank, truncation)
    for c in contents:
        basis = pair_basis(ctx, c)
        bases[c] = basis
        n = len(basis)
        if weight_of(c) == 0:
            blocks[c] = linalg.identity_matrix(ctx.ring, n)
            continue
        rows = []
        rhs = []
        zero = ctx.zero_frac()
        one = ctx.one_frac()
        # cell-triangularity: entry from cell (c1,c2) to (d1,d2) vanishes
        # unless d2 - c1 = c2 - d1 = nu with nu >= 0 componentwise
        for row_idx, (d1, u1, d2, u2) in enumerate(basis):
            for col_idx, (c1, w1, c2, w2) in enumerate(basis):
                nu = sub_colorings(d2, c1)
                if any(x < 0 for x in nu) or sub_colorings(c2, d1) != nu:
                    row = [zero] * (n * n)
                    row[row_idx * n + col_idx] = one
                    rows.append(row)
                    rhs.append(zero)
        for alpha in range(1, ctx.rank + 1):
            below = sub_colorings(c, unit_coloring(ctx.rank, alpha))
            if any(x < 0 for x in below):
                continue
            # F-intertwining: B_c . rhoF = rhobarF . B_below
            rho_f, _ = _gen_matrix(ctx, ("F", alpha, 1), below, rho)
            bar_f, _ = _gen_matrix(ctx, ("F", alpha, 1), below, rho_bar)
            known_f = linalg.mat_mul(bar_f, blocks[below])
            m = len(pair_basis(ctx, below))
            for i in range(n):
                for j in range(m):
                    row = [zero] * (n * n)
                    for kk in range(n):
                        row[i * n + kk] = rho_f[kk][j]
                    rows.append(row)
                    rhs.append(known_f[i][j])
            # E-intertwining: rhobarE . B_c = B_below . rhoE
            rho_e, _ = _gen_matrix(ctx, ("E", alpha), c, rho)
            bar_e, _ = _gen_matrix(ctx, ("E", alpha), c, rho_bar)
            known_e = linalg.mat_mul(blocks[below], rho_e)
            for i in range(m):
                for j in range(n):
                    row = [zero] * (n * n)
                    for kk in range(n):
                        row[kk * n + j] = bar_e[i][kk]
                    rows.append(row)
                    rhs.append(known_e[i][j])
        solved = linalg.solve(rows, rhs)
        if solved is None:
            raise BraidingError("intertwiner system inconsistent at block %s" % (c,),
                                block=c)
        vec, unique = solved
        if not unique:
            raise BraidingError("intertwiner system underdetermined at block %s" % (c,),
                                block=c)
        blocks[c] = [[vec[i * n + j] for j in range(n)] for i in range(n)]
    return BraidingResult(ctx, truncation, symbols, blocks, bases)


# braid-group representations ---------------------------------------------------

def tuple_basis(ctx, n, c):
    """Pivot-word tuples over n folds with total content c, ordered."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            for w in weight_space(ctx, remaining).pivot_words:
                out.append(tuple(prefix) + (w,))
            return
        for c1 in _sub_colorings(remaining):
            for w in weight_space(ctx, c1).pivot_words:
                rec(prefix + [w], sub_colorings(remaining, c1), slots - 1)

    rec([], c, n)
    return sorted(out)


def _content_of_word(ctx, w):
    from .cartan import coloring_of_word
    return coloring_of_word(w, ctx.rank)


def _sigma_matrix(ctx, strands, i, c_total, braiding, basis, index):
    """Matrix of the elementary operator (B on folds i, i+1) on the given
    tuple basis at total content c_total."""
    n = len(basis)
    mat = linalg.zero_matrix(ctx.ring, n, n)
    for col, t in enumerate(basis):
        wa, wb = t[i - 1], t[i]
        ca, cb = _content_of_word(ctx, wa), _content_of_word(ctx, wb)
        c_pair = add_colorings(ca, cb)
        block = braiding.blocks[c_pair]
        pbasis = braiding.bases[c_pair]
        src = pbasis.index((ca, wa, cb, wb))
        for row_idx, (c1, u1, c2, u2) in enumerate(pbasis):
            val = block[row_idx][src]
            if val.is_zero():
                continue
            t_new = t[:i - 1] + (u1, u2) + t[i + 1:]
            mat[index[t_new]][col] = mat[index[t_new]][col] + val
    return mat


def braid_rep(ctx, strands, word, truncation, shared=True):
    """Representation matrices (one per total content up to the truncation)
    of a braid word in generators sigma_i (i > 0) and inverses (i < 0).

    With shared=True every strand carries the same parameter list (the
    symbols of puncture 1); with shared=False the n purposely distinct
    parameter lists are tracked through the braid, which requires the word
    to be pure (trivial underlying permutation).
    """
    perm = list(range(strands))
    for letter in word:
        i = abs(letter)
        if not (1 <= i < strands):
            raise ValueError("generator index %d out of range" % letter)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    if not shared and perm != list(range(strands)):
        raise BraidingError("non-pure braid word requires equal parameter "
                            "lists across folds")
    from .cartan import colorings_up_to
    contents = [(0,) * ctx.rank] + colorings_up_to(ctx.rank, truncation)
    reps = {}
    solved = {}

    def get_braiding(pa, pb):
        key = (pa, pb)
        if key not in solved:
            solved[key] = braiding_operator(ctx, truncation, symbols=key)
        return solved[key]

    for c in contents:
        basis = tuple_basis(ctx, strands, c)
        index = {t: i for i, t in enumerate(basis)}
        total = linalg.identity_matrix(ctx.ring, len(basis))
        assign = list(range(1, strands + 1)) if not shared else [1] * strands
        for letter in word:
            i = abs(letter)
            pa, pb = assign[i - 1], assign[i]
            if letter > 0:
                mat = _sigma_matrix(ctx, strands, i, c, get_braiding(pa, pb),
                                    basis, index)
            else:
                # sigma_i^{-1} from (a,b) inverts the positive crossing that
                # would have produced this parameter assignment
                mat = _sigma_matrix(ctx, strands, i, c, get_braiding(pb, pa),
                                    basis, index)
                inv = linalg.invert(mat)
                if inv is None:
                    raise BraidingError("elementary block not invertible", block=c)
                mat = inv
            total = linalg.mat_mul(mat, total)
            assign[i - 1], assign[i] = assign[i], assign[i - 1]
        reps[c] = (basis, total)
    return reps


def block_determinants(ctx, braiding):
    """Exact determinant of every solved block (must all be nonzero)."""
    out = {}
    for c, mat in sorted(braiding.blocks.items()):
        out[c] = linalg.det(mat) if mat else ctx.one_frac()
    return out


def ybe_check(ctx, truncation):
    """Verify sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2 on three strands,
    blockwise up to the truncation; returns a per-block report."""
    lhs = braid_rep(ctx, 3, [1, 2, 1], truncation, shared=True)
    rhs = braid_rep(ctx, 3, [2, 1, 2], truncation, shared=True)
    report = {}
    for c in lhs:
        report[c] = linalg.mat_eq(lhs[c][1], rhs[c][1])
    return report
