"""Command-line entry point.

Exit codes: 0 success, 1 a checked identity failed, 2 usage error,
3 resource bound exceeded.  Identical invocations produce byte-identical
output (all iteration orders are fixed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import braiding as bd
from . import braidops as br
from . import expr as ex
from . import freealg as fa
from . import linalg
from . import pairing as pr
from . import shuffle as sh
from . import verma as vm
from .cartan import (CartanError, SizeError, coloring_of_word, colorings_up_to,
                     enumerate_words, named_datum, validate_datum, weight_of,
                     word_count)
from .context import Context
from .scalars import fraction_str

USAGE_ERROR = 2
CHECK_FAILED = 1
BOUND_EXCEEDED = 3


class UsageError(Exception):
    pass


def load_datum(args):
    """Datum from --name or a JSON file {"name": ...} or
    {"cartan": [[...]], "d": [...]}; validation failures report the violated
    conditions."""
    if args.name and args.datum:
        raise UsageError("pass either --name or --datum, not both")
    if args.name:
        return named_datum(args.name)
    if args.datum:
        with open(args.datum) as fh:
            data = json.load(fh)
        if "name" in data:
            return named_datum(data["name"])
        if "cartan" in data:
            return validate_datum(data["cartan"], data.get("d"))
        raise UsageError("datum file needs a 'name' or 'cartan' entry")
    raise UsageError("a Cartan datum is required (--name or --datum)")


def make_context(args, punctures=0):
    datum = load_datum(args)
    return Context(datum, punctures=punctures,
                   max_weight=args.max_weight,
                   max_tensor_weight=args.max_weight)


def parse_weight(text, rank):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("weight must be a comma-separated integer vector")
    if len(parts) != rank or any(x < 0 for x in parts):
        raise UsageError("weight needs %d nonnegative entries" % rank)
    return parts


def emit(args, payload):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        _emit_text(payload)


def _emit_text(payload, indent=""):
    if isinstance(payload, dict):
        for key in sorted(payload):
            val = payload[key]
            if isinstance(val, (dict, list)):
                print("%s%s:" % (indent, key))
                _emit_text(val, indent + "  ")
            else:
                print("%s%s: %s" % (indent, key, val))
    elif isinstance(payload, list):
        for val in payload:
            if isinstance(val, (dict, list)):
                _emit_text(val, indent + "  ")
            else:
                print("%s- %s" % (indent, val))
    else:
        print("%s%s" % (indent, payload))


def scalar_out(args, x):
    if args.format == "json":
        return x.to_json()
    return fraction_str(x)


def element_out(args, elt):
    if args.format == "json":
        return elt.to_json()
    return {elt._key_str(k): fraction_str(v) for k, v in sorted(elt.coeffs.items())}


def _eval_free(ctx, text):
    return ex.eval_free(ctx, ex.parse(text))


# commands ----------------------------------------------------------------------

def cmd_dims(args):
    ctx = make_context(args)
    c = parse_weight(args.weight, ctx.rank)
    emit(args, {"weight": list(c), "count": word_count(c)})
    return 0


def cmd_gram(args):
    ctx = make_context(args)
    c = parse_weight(args.weight, ctx.rank)
    words = enumerate_words(c, ctx.max_weight)
    matrix = pr.gram(ctx, c, ctx.max_weight)
    payload = {
        "slots": ctx.ring.slot_names(),
        "words": [",".join(str(x) for x in w) for w in words],
        "matrix": [[scalar_out(args, x) for x in row] for row in matrix],
    }
    emit(args, payload)
    return 0


def cmd_rank(args):
    ctx = make_context(args)
    c = parse_weight(args.weight, ctx.rank)
    emit(args, {"weight": list(c), "words": word_count(c),
                "rank": pr.radical_rank(ctx, c)})
    return 0


def cmd_pair(args):
    ctx = make_context(args)
    left = _eval_free(ctx, args.left)
    right = _eval_free(ctx, args.right)
    emit(args, {"slots": ctx.ring.slot_names(),
                "value": scalar_out(args, pr.pair(ctx, left, right))})
    return 0


def cmd_coproduct(args):
    ctx = make_context(args)
    x = _eval_free(ctx, args.expr)
    emit(args, {"slots": ctx.ring.slot_names(),
                "value": element_out(args, fa.coproduct_r(x))})
    return 0


def cmd_iota(args):
    ctx = make_context(args)
    x = _eval_free(ctx, args.expr)
    emit(args, {"slots": ctx.ring.slot_names(), "normalized": args.normalized,
                "value": element_out(args, sh.iota(ctx, x, args.normalized))})
    return 0


def cmd_shuffle(args):
    ctx = make_context(args)
    left = sh.iota(ctx, _eval_free(ctx, args.left), args.normalized)
    right = sh.iota(ctx, _eval_free(ctx, args.right), args.normalized)
    emit(args, {"slots": ctx.ring.slot_names(),
                "value": element_out(args, sh.shuffle_mul(left, right))})
    return 0


def cmd_serre_check(args):
    ctx = make_context(args)
    results = {}
    ok = True
    for i in range(1, ctx.rank + 1):
        for j in range(1, ctx.rank + 1):
            if i == j:
                continue
            k = 1 - ctx.datum.a[i - 1][j - 1]
            vanished = sh.is_in_radical(ctx, fa.serre_element(ctx, i, j))
            ok = ok and vanished
            results["(%d,%d)" % (i, j)] = {"k": k, "vanishes": vanished}
    emit(args, {"datum": ctx.datum.name or "custom", "pairs": results,
                "pass": ok})
    return 0 if ok else CHECK_FAILED


def cmd_braid_t(args):
    ctx = make_context(args)
    x = _eval_free(ctx, args.expr)
    image = br.t_i_apply(ctx, args.i, x)
    emit(args, {"slots": ctx.ring.slot_names(),
                "value": element_out(args, image)})
    return 0


def cmd_vanishing(args):
    ctx = make_context(args)
    x = _eval_free(ctx, args.expr)
    from .freealg import content_of
    c = content_of(x)
    val = br.vanishing_element(ctx, args.i, x, args.k)
    emit(args, {"k": args.k, "threshold": br.truncation_threshold(ctx, args.i, c),
                "zero": val.is_zero(), "value": element_out(args, val)})
    return 0


def cmd_verma_act(args):
    ctx = make_context(args, punctures=args.punctures)
    opexpr = ex.eval_operator(ctx, ex.parse(args.expr))
    result = ex.apply_operator(ctx, opexpr, vm.vacuum(ctx, args.punctures))
    emit(args, {"slots": ctx.ring.slot_names(), "punctures": args.punctures,
                "value": element_out(args, result)})
    return 0


def _basis_tensor(ctx, words):
    """Pure tensor of the basis vectors iota(w_p) over the folds."""
    slices = [sh.iota(ctx, fa.word_vector(ctx, w)).coeffs for w in words]
    keys = [()]
    vals = [ctx.one_frac()]
    for sl in slices:
        nkeys, nvals = [], []
        for key, val in zip(keys, vals):
            for w, coeff in sl.items():
                nkeys.append(key + (w,))
                nvals.append(val * coeff)
        keys, vals = nkeys, nvals
    return vm.TensorElement(ctx, dict(zip(keys, vals)))


def cmd_split_check(args):
    n = args.punctures
    if n < 2:
        raise UsageError("split-check needs --punctures >= 2")
    ctx = make_context(args, punctures=n)
    bound = min(args.truncate, ctx.max_tensor_weight)
    gens = []
    for alpha in range(1, ctx.rank + 1):
        gens += [("F", alpha, 1), ("F", alpha, 2), ("E", alpha),
                 ("K", alpha, 1), ("K", alpha, -1)]
    report = {}
    ok = True
    contents = [(0,) * ctx.rank] + colorings_up_to(ctx.rank, bound)
    for c in contents:
        entry = {}
        for t in bd.tuple_basis(ctx, n, c):
            m = _basis_tensor(ctx, t)
            for gen in gens:
                key = "%s%s" % (gen[0], gen[1:])
                good = all(vm.split_equivariant(ctx, gen, m, cut)
                           for cut in range(1, n))
                entry[key] = entry.get(key, True) and good
                ok = ok and good
        report[",".join(str(x) for x in c)] = entry
    emit(args, {"punctures": n, "truncate": bound, "blocks": report, "pass": ok})
    return 0 if ok else CHECK_FAILED


def cmd_adjoint_check(args):
    ctx = make_context(args, punctures=1)
    bound = args.truncate
    report = {}
    ok = True
    kmax = args.kmax
    contents = colorings_up_to(ctx.rank, bound)
    for c in contents:
        entries = {}
        for alpha in range(1, ctx.rank + 1):
            for k in range(1, kmax + 1):
                target = tuple(x + (k if idx == alpha - 1 else 0)
                               for idx, x in enumerate(c))
                if weight_of(target) > bound:
                    continue
                good = True
                for u in enumerate_words(target, ctx.max_weight):
                    x = sh.BMElement(ctx, {u: ctx.one_frac()})
                    ex_img = vm.act_E_divided(ctx, alpha, k, x)
                    for w in enumerate_words(c, ctx.max_weight):
                        y = sh.BMElement(ctx, {w: ctx.one_frac()})
                        lhs = vm.intersection_pair(ctx, ex_img, y)
                        rhs = vm.intersection_pair(ctx, x, vm.act_F(ctx, alpha, k, y))
                        good = good and (lhs == rhs)
                entries["E[%d] alpha=%d" % (k, alpha)] = good
                ok = ok and good
        report[",".join(str(x) for x in c)] = entries
    emit(args, {"truncate": bound, "blocks": report, "pass": ok})
    return 0 if ok else CHECK_FAILED


def cmd_rmatrix(args):
    ctx = make_context(args, punctures=2)
    try:
        res = bd.braiding_operator(ctx, args.truncate)
    except bd.BraidingError as err:
        emit(args, {"error": str(err), "block": list(err.block) if err.block else None})
        return CHECK_FAILED
    blocks = {}
    for c in sorted(res.blocks):
        basis = res.bases[c]
        labels = ["%s|%s" % (",".join(str(x) for x in w1), ",".join(str(x) for x in w2))
                  for (_, w1, _, w2) in basis]
        mat = res.blocks[c]
        det = linalg.det(mat) if mat else ctx.one_frac()
        blocks[",".join(str(x) for x in c)] = {
            "basis": labels,
            "matrix": [[scalar_out(args, x) for x in row] for row in mat],
            "det": scalar_out(args, det),
            "invertible": not det.is_zero(),
        }
    emit(args, {"slots": ctx.ring.slot_names(), "truncate": args.truncate,
                "blocks": blocks})
    return 0


def cmd_ybe(args):
    ctx = make_context(args, punctures=1)
    report = bd.ybe_check(ctx, args.truncate)
    ok = all(report.values())
    emit(args, {"truncate": args.truncate,
                "blocks": {",".join(str(x) for x in c): bool(v)
                           for c, v in sorted(report.items())},
                "pass": ok})
    return 0 if ok else CHECK_FAILED


def cmd_parse_eval(args):
    ctx = make_context(args, punctures=args.punctures)
    tree = ex.parse(args.expr)
    printed = ex.pretty(tree)
    payload = {"printed": printed,
               "roundtrip": ex.parse(printed) == tree}
    if args.side == "free":
        payload["value"] = element_out(args, ex.eval_free(ctx, tree))
    elif args.side == "bm":
        payload["value"] = element_out(args, ex.eval_bm(ctx, tree, args.normalized))
    else:
        opexpr = ex.eval_operator(ctx, tree)
        payload["value"] = element_out(
            args, ex.apply_operator(ctx, opexpr, vm.vacuum(ctx, args.punctures)))
    emit(args, payload)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--name", help="named Cartan datum (A2, B2, G2, ...)")
    common.add_argument("--datum", help="JSON datum file")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--max-weight", type=int, default=8,
                        help="resource bound on coloring weight")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property commands")
    common.add_argument("--normalized", action="store_true",
                        help="use the normalized canonical map")

    top = argparse.ArgumentParser(prog="qshuffle", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("dims", cmd_dims, help="word count of a weight space")
    p.add_argument("--weight", required=True)

    p = add("gram", cmd_gram, help="Gram matrix of the bilinear form")
    p.add_argument("--weight", required=True)

    p = add("rank", cmd_rank, help="rank of the Gram matrix")
    p.add_argument("--weight", required=True)

    p = add("pair", cmd_pair, help="pair two free-algebra expressions")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("coproduct", cmd_coproduct, help="twisted coproduct of an expression")
    p.add_argument("--expr", required=True)

    p = add("iota", cmd_iota, help="canonical map to shuffle coordinates")
    p.add_argument("--expr", required=True)

    p = add("shuffle", cmd_shuffle, help="shuffle product of two images")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    add("serre-check", cmd_serre_check, help="verify Serre elements vanish")

    p = add("braid-t", cmd_braid_t, help="apply a braid operator T_i")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--expr", required=True)

    p = add("vanishing", cmd_vanishing, help="truncated alternating sum V_k")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--expr", required=True)

    p = add("verma-act", cmd_verma_act, help="apply an operator word to the vacuum")
    p.add_argument("--punctures", type=int, default=1)
    p.add_argument("--expr", required=True)

    p = add("split-check", cmd_split_check, help="split equivariance report")
    p.add_argument("--punctures", type=int, default=2)
    p.add_argument("--truncate", type=int, default=3)

    p = add("adjoint-check", cmd_adjoint_check, help="adjointness report")
    p.add_argument("--truncate", type=int, default=3)
    p.add_argument("--kmax", type=int, default=2)

    p = add("rmatrix", cmd_rmatrix, help="solve the braiding blockwise")
    p.add_argument("--truncate", type=int, default=2)

    p = add("ybe", cmd_ybe, help="verify the braid relation on 3 strands")
    p.add_argument("--truncate", type=int, default=2)

    p = add("parse-eval", cmd_parse_eval, help="parse, print and evaluate")
    p.add_argument("--expr", required=True)
    p.add_argument("--side", choices=("free", "bm", "operator"), default="free")
    p.add_argument("--punctures", type=int, default=1)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return USAGE_ERROR if err.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as err:
        print("error: %s" % err, file=sys.stderr)
        return USAGE_ERROR
    except CartanError as err:
        print("invalid datum: %s" % err, file=sys.stderr)
        return USAGE_ERROR
    except ex.ExprError as err:
        print("parse error: %s" % err, file=sys.stderr)
        return USAGE_ERROR
    except SizeError as err:
        print("bound exceeded: %s" % err, file=sys.stderr)
        return BOUND_EXCEEDED
    except (ValueError, KeyError) as err:
        print("error: %s" % err, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
