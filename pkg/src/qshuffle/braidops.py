"""Braid symmetries on the c(alpha_i) = 0 subalgebra and the truncated
alternating sums whose vanishing threshold generalizes the quantum Serre
relation.
"""

from __future__ import annotations

from .cartan import coloring_of_word, unit_coloring
from .freealg import (GradedVector, concat_mul, content_of, divided_power_word,
                      word_vector)
from .shuffle import BMElement, bm_unit, iota, shuffle_mul


def t_i_generator(ctx, i, j):
    """T_i(F_j) = iota( sum_{l=0}^{k} (-1)^{k-l} q_{alpha_i}^{l/2}
    DP(i,l) w[j] DP(i,k-l) ) with k = -a_ij; content alpha_j + k alpha_i."""
    if i == j:
        raise ValueError("braid generator needs i != j")
    k = -ctx.datum.a[i - 1][j - 1]
    wj = word_vector(ctx, (j,))
    acc = GradedVector(ctx, {})
    for l in range(k + 1):
        term = concat_mul(concat_mul(divided_power_word(ctx, i, l), wj),
                          divided_power_word(ctx, i, k - l))
        term = term.scaled(ctx.q_alpha_half(i, l))
        if (k - l) % 2:
            term = -term
        acc = acc + term
    return iota(ctx, acc)


def t_i_apply(ctx, i, x):
    """Letterwise substitution j -> T_i(F_j) followed by the shuffle product.

    Only defined on the subalgebra of elements whose support avoids the
    letter i (the domain on which the operator is an algebra morphism).
    """
    for w in x.coeffs:
        if i in w:
            raise ValueError("support must have c(alpha_%d) = 0" % i)
    gens = {}
    out = BMElement(ctx, {})
    for w, coeff in sorted(x.coeffs.items()):
        img = bm_unit(ctx)
        for letter in w:
            g = gens.get(letter)
            if g is None:
                g = gens[letter] = t_i_generator(ctx, i, letter)
            img = shuffle_mul(img, g)
        out = out + img.scaled(coeff)
    return out


def truncation_threshold(ctx, i, c):
    """k(i,c) = sum_j c(alpha_j) (-a_ij); additive in c."""
    return sum(c[j] * (-ctx.datum.a[i - 1][j]) for j in range(ctx.rank))


def vanishing_element(ctx, i, x, k):
    """V_k(i,x) = iota( sum_l (-1)^{k-l} kappa_l DP(i,l) x DP(i,k-l) ) with

        kappa_l = v^{-l (alpha_i, c)} v^{d_i ((k-l)(k-l-1)/2 - l(l-1)/2)},

    for x of pure content c with c(alpha_i) = 0.  The caller tests the
    vanishing: zero whenever k exceeds the threshold k(i,c), nonzero at the
    threshold itself.  For x a single letter j and k = 1 - a_ij this is a
    monomial unit times the Serre element.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    c = content_of(x)
    if c[i - 1] != 0:
        raise ValueError("content must have c(alpha_%d) = 0" % i)
    inner_ic = ctx.datum.inner_coloring(unit_coloring(ctx.rank, i), c)
    d_i = ctx.datum.d[i - 1]
    acc = GradedVector(ctx, {})
    for l in range(k + 1):
        kappa_exp = -l * inner_ic + d_i * ((k - l) * (k - l - 1) // 2 - l * (l - 1) // 2)
        term = concat_mul(concat_mul(divided_power_word(ctx, i, l), x),
                          divided_power_word(ctx, i, k - l))
        term = term.scaled(ctx.v_pow(kappa_exp))
        if (k - l) % 2:
            term = -term
        acc = acc + term
    return iota(ctx, acc)
