"""Cartan data, colorings and word enumeration.

A coloring is a length-l tuple of nonnegative integers (how many points of
each root color); a word is a tuple of root indices in 1..l.  Words of a
fixed content index the pearl-necklace bases on both homology sides, so they
are the single basis-label currency of the whole package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import factorial


class CartanError(ValueError):
    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SizeError(RuntimeError):
    """Raised when an enumeration would exceed the configured weight bound."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


@dataclass(frozen=True)
class CartanDatum:
    """Cartan matrix (a_ij) with symmetrizers (d_i); (alpha_i, alpha_j) = d_i a_ij."""

    a: tuple
    d: tuple
    name: str = field(default=None, compare=False)

    @property
    def rank(self):
        return len(self.d)

    def inner(self, i, j):
        """Symmetric inner product of simple roots, 1-based indices."""
        if not (1 <= i <= self.rank and 1 <= j <= self.rank):
            raise IndexError("root index out of range 1..%d" % self.rank)
        return self.d[i - 1] * self.a[i - 1][j - 1]

    def inner_coloring(self, c1, c2):
        """Bilinear extension of `inner` to colorings (or root index vs coloring)."""
        total = 0
        for i in range(1, self.rank + 1):
            if not c1[i - 1]:
                continue
            for j in range(1, self.rank + 1):
                if c2[j - 1]:
                    total += c1[i - 1] * c2[j - 1] * self.inner(i, j)
        return total

    def q_alpha_exponent(self, i):
        """q_alpha = q^{d_i} = v^{2 d_i}; returns the v-exponent 2*d_i."""
        return 2 * self.d[i - 1]


def validate_datum(a, d=None, name=None):
    """Check the Cartan axioms; returns the datum or raises CartanError
    listing every violated condition."""
    violations = []
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise CartanError("matrix must be square and nonempty")
    if d is None:
        d = _find_symmetrizers(a)
        if d is None:
            violations.append("matrix is not symmetrizable")
            d = [1] * n
    if len(d) != n:
        violations.append("symmetrizer vector has wrong length")
    elif any(x <= 0 for x in d):
        violations.append("symmetrizers must be positive")
    for i in range(n):
        if a[i][i] != 2:
            violations.append("a[%d][%d] = %d, diagonal must be 2" % (i + 1, i + 1, a[i][i]))
        for j in range(n):
            if i != j and a[i][j] > 0:
                violations.append("a[%d][%d] = %d, off-diagonal must be <= 0"
                                  % (i + 1, j + 1, a[i][j]))
    if len(d) == n and not violations:
        for i in range(n):
            for j in range(n):
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    violations.append("d_i*a_ij not symmetric at (%d,%d)" % (i + 1, j + 1))
                    break
    if violations:
        raise CartanError(violations)
    return CartanDatum(tuple(tuple(row) for row in a), tuple(d), name)


def _find_symmetrizers(a):
    """Smallest positive integers d with d_i a_ij = d_j a_ji, or None."""
    from fractions import Fraction

    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                if a[j][i] == 0:
                    return None
                val = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = val
                    stack.append(j)
                elif d[j] != val:
                    return None
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    scaled = [x * lcm for x in d]
    g = 0
    for x in scaled:
        g = _gcd(g, int(x))
    return [int(x) // g for x in scaled]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a if a else 1


# named data -----------------------------------------------------------------
#
# Convention for the named presets (the orientation is a documented choice,
# nothing in the calculus depends on it): in B_n the last root is short
# (d = 2,...,2,1), in C_n the last root is long (d = 1,...,1,2), in F4 the
# first two roots are long, and G2 is a = [[2,-3],[-1,2]] with d = [1,3].

def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def named_datum(name):
    m = re.fullmatch(r"([A-G])(\d+)", name.strip())
    if not m:
        raise CartanError("unknown datum name %r" % name)
    family, n = m.group(1), int(m.group(2))
    if n < 1:
        raise CartanError("rank must be positive")
    if family == "A":
        return validate_datum(_chain(n), [1] * n, name)
    if family == "B":
        if n < 2:
            raise CartanError("B_n needs n >= 2")
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return validate_datum(a, [2] * (n - 1) + [1], name)
    if family == "C":
        if n < 2:
            raise CartanError("C_n needs n >= 2")
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return validate_datum(a, [1] * (n - 1) + [2], name)
    if family == "D":
        if n < 2:
            raise CartanError("D_n needs n >= 2")
        a = _chain(n - 1) if n > 2 else [[2]]
        for row in a:
            row.append(0)
        a.append([0] * n)
        a[n - 1][n - 1] = 2
        if n > 2:
            a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        return validate_datum(a, [1] * n, name)
    if family == "E":
        if n not in (6, 7, 8):
            raise CartanError("E_n only for n in 6,7,8")
        edges = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in edges:
            if i <= n and j <= n:
                a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return validate_datum(a, [1] * n, name)
    if family == "F":
        if n != 4:
            raise CartanError("only F4 exists")
        a = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
        return validate_datum(a, [2, 2, 1, 1], name)
    if family == "G":
        if n != 2:
            raise CartanError("only G2 exists")
        return validate_datum([[2, -3], [-1, 2]], [1, 3], name)
    raise CartanError("unknown datum name %r" % name)


# colorings and words ----------------------------------------------------------

def coloring_of_word(word, rank):
    counts = [0] * rank
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def weight_of(c):
    return sum(c)


def add_colorings(c1, c2):
    return tuple(x + y for x, y in zip(c1, c2))


def sub_colorings(c1, c2):
    return tuple(x - y for x, y in zip(c1, c2))


def unit_coloring(rank, i, k=1):
    c = [0] * rank
    c[i - 1] = k
    return tuple(c)


def word_count(c):
    """Multinomial m_c! / prod c_i! -- the rank of both homology sides."""
    n = factorial(weight_of(c))
    for x in c:
        n //= factorial(x)
    return n


def enumerate_words(c, bound=None):
    """All words of content c in lexicographic order.

    With a bound, refuses colorings of weight above it, reporting the word
    count that would have been produced.
    """
    m = weight_of(c)
    if bound is not None and m > bound:
        raise SizeError("weight %d exceeds bound %d (would enumerate %d words);"
                        " raise --max-weight to override" % (m, bound, word_count(c)),
                        count=word_count(c))
    words = []

    def rec(prefix, remaining):
        if sum(remaining) == 0:
            words.append(tuple(prefix))
            return
        for i in range(len(remaining)):
            if remaining[i]:
                remaining[i] -= 1
                prefix.append(i + 1)
                rec(prefix, remaining)
                prefix.pop()
                remaining[i] += 1

    rec([], list(c))
    return words


def colorings_up_to(rank, max_weight):
    """All colorings of weight 1..max_weight, ordered by (weight, tuple)."""
    out = []

    def rec(prefix, slots, budget):
        if slots == 0:
            if sum(prefix):
                out.append(tuple(prefix))
            return
        for k in range(budget + 1):
            rec(prefix + [k], slots - 1, budget - k)

    for w in range(1, max_weight + 1):
        batch = []

        def rec_w(prefix, slots, left):
            if slots == 1:
                batch.append(tuple(prefix + [left]))
                return
            for k in range(left + 1):
                rec_w(prefix + [k], slots - 1, left - k)

        rec_w([], rank, w)
        out.extend(sorted(batch))
    return out
