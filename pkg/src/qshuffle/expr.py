"""A small expression language for algebra elements and operator words.

Grammar (normative):

    expr   := term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := scalar | gen | "w[" int ("," int)* "]" | "(" expr ")"
    gen    := ("F"|"E"|"K"|"Kinv"|"dp"|"serre") "(" args ")"
    scalar := atom ("^" sint)?   atoms: q, v, s(p,i), integers

Multiplication is explicit via "*" (avoids ambiguity with multi-digit
indices).  Parse errors carry line and column; index-range checks are
deferred to evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import (GradedVector, concat_mul, divided_power_word, serre_element,
                      unit, word_vector)
from .scalars import qnum


class ExprError(ValueError):
    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, col)
        super().__init__(message)
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


# AST -------------------------------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    """q, v, s(p,i) or an integer literal, with an optional exponent."""
    kind: str          # "q" | "v" | "s" | "int"
    value: tuple       # () for q/v, (p, i) for s, (n,) for int
    exponent: int = 1


@dataclass(frozen=True)
class Gen:
    name: str          # F, E, K, Kinv, dp, serre
    args: tuple


@dataclass(frozen=True)
class WordLit:
    letters: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple       # of (sign, node) with sign in {+1, -1}


GEN_NAMES = ("F", "E", "K", "Kinv", "dp", "serre")


# lexer -----------------------------------------------------------------------

def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(("NAME", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()[],":
            tokens.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ExprError("unexpected character %r" % ch, line, col)
    tokens.append(("EOF", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprError("expected %r, found %r" % (kind, tok[1]), tok[2], tok[3])
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ExprError(message, tok[2], tok[3])

    def parse_expr(self):
        terms = [(1, self.parse_term())]
        while self.peek()[0] in "+-":
            sign = 1 if self.next()[0] == "+" else -1
            terms.append((sign, self.parse_term()))
        flat = []
        for sign, node in terms:
            if isinstance(node, Sum):
                flat.extend((sign * s, t) for s, t in node.terms)
            else:
                flat.append((sign, node))
        if len(flat) == 1 and flat[0][0] == 1:
            return flat[0][1]
        return Sum(tuple(flat))

    def parse_term(self):
        factors = [self.parse_factor()]
        while self.peek()[0] == "*":
            self.next()
            factors.append(self.parse_factor())
        flat = []
        for f in factors:
            if isinstance(f, Product):
                flat.extend(f.factors)
            else:
                flat.append(f)
        if len(flat) == 1:
            return flat[0]
        return Product(tuple(flat))

    def parse_factor(self):
        tok = self.peek()
        if tok[0] == "(":
            self.next()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if tok[0] == "INT":
            self.next()
            return Scalar("int", (tok[1],), self.parse_exponent())
        if tok[0] == "NAME":
            name = tok[1]
            if name == "w":
                self.next()
                self.expect("[")
                letters = [self.expect("INT")[1]]
                while self.peek()[0] == ",":
                    self.next()
                    letters.append(self.expect("INT")[1])
                self.expect("]")
                return WordLit(tuple(letters))
            if name in ("q", "v"):
                self.next()
                return Scalar(name, (), self.parse_exponent())
            if name == "s":
                self.next()
                self.expect("(")
                p = self.expect("INT")[1]
                self.expect(",")
                i = self.expect("INT")[1]
                self.expect(")")
                return Scalar("s", (p, i), self.parse_exponent())
            if name in GEN_NAMES:
                self.next()
                self.expect("(")
                args = [self.expect("INT")[1]]
                while self.peek()[0] == ",":
                    self.next()
                    args.append(self.expect("INT")[1])
                self.expect(")")
                return Gen(name, tuple(args))
            self.fail("unknown name %r" % name)
        self.fail("expected a factor")

    def parse_exponent(self):
        if self.peek()[0] != "^":
            return 1
        self.next()
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        elif self.peek()[0] == "+":
            self.next()
        return sign * self.expect("INT")[1]


def parse(text):
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok[0] != "EOF":
        raise ExprError("trailing input at %r" % (tok[1],), tok[2], tok[3])
    return node


# printing ----------------------------------------------------------------------

def pretty(node):
    if isinstance(node, Sum):
        parts = []
        for i, (sign, term) in enumerate(node.terms):
            body = _pretty_term(term)
            if i == 0:
                parts.append(body if sign > 0 else "-" + body)
            else:
                parts.append(("+ " if sign > 0 else "- ") + body)
        return " ".join(parts)
    return _pretty_term(node)


def _pretty_term(node):
    if isinstance(node, Product):
        return "*".join(_pretty_factor(f) for f in node.factors)
    return _pretty_factor(node)


def _pretty_factor(node):
    if isinstance(node, (Sum, Product)):
        return "(" + pretty(node) + ")"
    if isinstance(node, Scalar):
        if node.kind == "int":
            base = str(node.value[0])
        elif node.kind == "s":
            base = "s(%d,%d)" % node.value
        else:
            base = node.kind
        if node.exponent == 1:
            return base
        if node.exponent < 0:
            return "%s^-%d" % (base, -node.exponent)
        return "%s^%d" % (base, node.exponent)
    if isinstance(node, Gen):
        return "%s(%s)" % (node.name, ",".join(str(a) for a in node.args))
    if isinstance(node, WordLit):
        return "w[%s]" % ",".join(str(x) for x in node.letters)
    raise TypeError(node)


# evaluation ----------------------------------------------------------------------

def eval_scalar(ctx, node):
    if node.kind == "int":
        base = ctx.frac(node.value[0])
    elif node.kind == "q":
        base = ctx.frac(ctx.ring.q())
    elif node.kind == "v":
        base = ctx.frac(ctx.ring.v())
    else:
        p, i = node.value
        if not (1 <= p <= ctx.punctures and 1 <= i <= ctx.rank):
            raise EvalError("symbol s(%d,%d) not declared (punctures=%d, rank=%d)"
                            % (p, i, ctx.punctures, ctx.rank))
        base = ctx.frac(ctx.ring.s(p, i))
    return base ** node.exponent


def _check_root(ctx, i):
    if not (1 <= i <= ctx.rank):
        raise EvalError("root index %d out of range 1..%d" % (i, ctx.rank))


def eval_free(ctx, node):
    """Evaluate in the free algebra (always a GradedVector; bare scalars are
    multiples of the empty word).  F(i) and F(i,k) denote the generator word
    and its divided power; E/K are rejected (module operators)."""
    if isinstance(node, Sum):
        total = GradedVector(ctx, {})
        for sign, term in node.terms:
            val = eval_free(ctx, term)
            total = total + (val if sign > 0 else -val)
        return total
    if isinstance(node, Product):
        total = unit(ctx)
        for f in node.factors:
            total = concat_mul(total, eval_free(ctx, f))
        return total
    if isinstance(node, Scalar):
        return unit(ctx).scaled(eval_scalar(ctx, node))
    if isinstance(node, WordLit):
        for letter in node.letters:
            _check_root(ctx, letter)
        return word_vector(ctx, node.letters)
    if isinstance(node, Gen):
        if node.name == "F":
            if len(node.args) == 1:
                _check_root(ctx, node.args[0])
                return word_vector(ctx, (node.args[0],))
            if len(node.args) == 2:
                _check_root(ctx, node.args[0])
                return divided_power_word(ctx, node.args[0], node.args[1])
            raise EvalError("F takes 1 or 2 arguments")
        if node.name == "dp":
            if len(node.args) != 2:
                raise EvalError("dp takes 2 arguments")
            _check_root(ctx, node.args[0])
            return divided_power_word(ctx, node.args[0], node.args[1])
        if node.name == "serre":
            if len(node.args) != 2:
                raise EvalError("serre takes 2 arguments")
            _check_root(ctx, node.args[0])
            _check_root(ctx, node.args[1])
            if node.args[0] == node.args[1]:
                raise EvalError("serre needs two distinct roots")
            return serre_element(ctx, node.args[0], node.args[1])
        raise EvalError("%s is a module operator; not valid in a ring-element "
                        "context" % node.name)
    raise TypeError(node)


def eval_bm(ctx, node, normalized=False):
    from .shuffle import iota
    return iota(ctx, eval_free(ctx, node), normalized=normalized)


def eval_operator(ctx, node):
    """Evaluate as an operator word: a list of (scalar, [steps]) where each
    step is ("F", i, k), ("E", i), ("Edp", i, k) or ("K", i, power); the
    rightmost step acts first."""
    if isinstance(node, Sum):
        out = []
        for sign, term in node.terms:
            for coeff, steps in eval_operator(ctx, term):
                out.append((coeff if sign > 0 else -coeff, steps))
        return out
    if isinstance(node, Product):
        out = [(ctx.one_frac(), [])]
        for f in node.factors:
            parts = eval_operator(ctx, f)
            out = [(c1 * c2, s1 + s2) for c1, s1 in out for c2, s2 in parts]
        return out
    if isinstance(node, Scalar):
        return [(eval_scalar(ctx, node), [])]
    if isinstance(node, Gen):
        name, args = node.name, node.args
        if name == "F":
            _check_root(ctx, args[0])
            k = args[1] if len(args) > 1 else 1
            if k < 0:
                raise EvalError("F divided power needs k >= 0")
            return [(ctx.one_frac(), [("F", args[0], k)])]
        if name == "E":
            _check_root(ctx, args[0])
            if len(args) > 1:
                if args[1] < 0:
                    raise EvalError("E divided power needs k >= 0")
                return [(ctx.one_frac(), [("Edp", args[0], args[1])])]
            return [(ctx.one_frac(), [("E", args[0])])]
        if name == "K":
            _check_root(ctx, args[0])
            return [(ctx.one_frac(), [("K", args[0], 1)])]
        if name == "Kinv":
            _check_root(ctx, args[0])
            return [(ctx.one_frac(), [("K", args[0], -1)])]
        raise EvalError("%s is a ring element; not valid in an operator "
                        "context" % name)
    if isinstance(node, WordLit):
        raise EvalError("word literals are not valid in an operator context")
    raise TypeError(node)


def apply_operator(ctx, opexpr, element):
    """Apply an evaluated operator word to a module element (tensor or n=1);
    the rightmost factor acts first."""
    from .verma import act_E, act_F, act_K
    total = None
    for coeff, steps in opexpr:
        current = element
        for step in reversed(steps):
            if step[0] == "F":
                current = act_F(ctx, step[1], step[2], current)
            elif step[0] == "E":
                current = act_E(ctx, step[1], current)
            elif step[0] == "Edp":
                i, k = step[1], step[2]
                for _ in range(k):
                    current = act_E(ctx, i, current)
                fact = qnum("sym_fact", k, var=ctx.ring.v(ctx.datum.d[i - 1]))
                current = current.scaled(ctx.frac(1) / ctx.frac(fact))
            else:
                current = act_K(ctx, step[1], current, power=step[2])
        current = current.scaled(coeff)
        total = current if total is None else total + current
    if total is None:
        total = element.scaled(ctx.zero_frac())
    return total
