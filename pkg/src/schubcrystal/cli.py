"""
Command line front end.

    schubcrystal schubert 143625 --method rfc
    schubcrystal demazure 0,2,1,2
    schubcrystal crystal rfc 153264 --dot rfc.dot
    schubcrystal verify --max-n 4

Exit status: 0 on success, 1 when two methods disagree or a check fails,
2 on bad arguments.
"""

import argparse
import json
import sys

from .crystals import character, key_crystal, rf_crystal, rfc_crystal, ssyt_crystal
from .edelman_greene import (
    demazure_expansion_schubert, eg_correspondence, eg_record_factorization,
    schur_expansion_stanley, weak_eg,
)
from .factorizations import ReducedFactorization
from .key_tableaux import enumerate_sskt
from .permutations import (
    format_composition, format_word, is_partition, parse_composition,
    parse_permutation, parse_word, reduced_words,
)
from .polynomials import (
    SparsePolynomial, demazure_character, generating_polynomial, schubert_bgg,
    schubert_via_rfc, schur_via_ssyt, stanley_polynomial,
)
from .verification import run_all


def _arg(parse):
    def convert(text):
        try:
            return parse(text)
        except ValueError as err:
            raise argparse.ArgumentTypeError(str(err) or f"invalid value {text!r}")
    convert.__name__ = parse.__name__
    return convert


def _partition(text):
    lam = parse_composition(text)
    if not is_partition(lam):
        raise ValueError(f"{text} is not a partition")
    return tuple(p for p in lam if p)


def _positive(text):
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text}")
    return value


class _Disagreement(Exception):
    pass


def _agree(results):
    """results: [(method name, polynomial)]; raise if any two differ."""
    (name0, first), *rest = results
    for name, poly in rest:
        if poly != first:
            raise _Disagreement(f"methods disagree: {name0} gives {first}, {name} gives {poly}")


def _expansion_text(terms, prefix):
    if not terms:
        return "0"
    def label(a):
        a = tuple(a)
        while len(a) > 1 and a[-1] == 0:
            a = a[:-1]
        return prefix + format_composition(a)
    return " + ".join(
        (f"{m}*" if m != 1 else "") + label(a) for a, m in sorted(terms.items(), reverse=True))


def _kappa_sum(terms, n):
    total = SparsePolynomial.zero(n)
    for a, m in terms.items():
        total = total + demazure_character(tuple(a) + (0,) * (n - len(a))) * m
    return total


def _schur_sum(terms, n):
    total = SparsePolynomial.zero(n)
    for lam, m in terms.items():
        total = total + schur_via_ssyt(lam, n) * m
    return total


def _emit_polynomial(args, poly):
    print(json.dumps(poly.to_json()) if args.json else poly)


def cmd_schubert(args):
    w, n = args.w, len(args.w)
    expansion = demazure_expansion_schubert(w)
    methods = {
        "bgg": lambda: schubert_bgg(w),
        "rfc": lambda: schubert_via_rfc(w),
        "kappa-expansion": lambda: _kappa_sum(expansion, n),
    }
    chosen = methods[args.method]()
    if not args.no_check:
        _agree([(args.method, chosen)] + [(k, f()) for k, f in methods.items() if k != args.method])
    if args.expand:
        print(_expansion_text(expansion, "k"))
    else:
        _emit_polynomial(args, chosen)


def cmd_stanley(args):
    w, ell = args.w, args.blocks
    expansion = schur_expansion_stanley(w)
    methods = {
        "rf": lambda: stanley_polynomial(w, ell),
        "schur-expansion": lambda: _schur_sum(expansion, ell),
    }
    chosen = methods[args.method]()
    if not args.no_check:
        _agree([(args.method, chosen)] + [(k, f()) for k, f in methods.items() if k != args.method])
    if args.expand:
        print(_expansion_text(expansion, "s"))
    else:
        _emit_polynomial(args, chosen)


def cmd_demazure(args):
    a = args.a
    poly = demazure_character(a)
    if not args.no_check:
        tableaux = generating_polynomial((t.weight() for t in enumerate_sskt(a)), len(a))
        _agree([("divided differences", poly), ("key tableaux", tableaux)])
    _emit_polynomial(args, poly)


def cmd_schur(args):
    if len(args.lam) > args.n:
        poly = SparsePolynomial.zero(args.n)
    else:
        poly = schur_via_ssyt(args.lam, args.n)
        if not args.no_check:
            _agree([("tableaux", poly), ("crystal", character(ssyt_crystal(args.lam, args.n)))])
    _emit_polynomial(args, poly)


def cmd_reduced_words(args):
    for word in sorted(reduced_words(args.w)):
        print(format_word(word) or "()")


def _crystal_graph(kind, values):
    usage = {"ssyt": "PARTITION N", "key": "COMPOSITION", "rf": "PERMUTATION BLOCKS",
             "rfc": "PERMUTATION"}
    expected = len(usage[kind].split())
    if len(values) != expected:
        raise ValueError(f"crystal {kind} expects {usage[kind]}")
    if kind == "ssyt":
        lam, n = _partition(values[0]), _positive(values[1])
        if len(lam) > n:
            raise ValueError(f"{lam} has more than {n} rows")
        return ssyt_crystal(lam, n)
    if kind == "key":
        return key_crystal(parse_composition(values[0]))
    if kind == "rf":
        return rf_crystal(parse_permutation(values[0]), _positive(values[1]))
    return rfc_crystal(parse_permutation(values[0]))


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as out:
            out.write(text)


def cmd_crystal(args):
    graph = _crystal_graph(args.kind, args.args)
    if args.dot:
        _write(args.dot, graph.to_dot())
    if args.json:
        _write(args.json, graph.to_json())
    if "-" in (args.dot, args.json):
        return
    print(f"nodes: {len(graph)}")
    print(f"edges: {len(graph.edges)}")
    print(f"components: {len(graph.components())}")
    for key in graph.highest_weight_nodes():
        print(f"highest weight: {key}  wt={format_composition(graph.weights[key])}")


def _read_insert_input(text):
    text = text.strip()
    if text.startswith("("):
        return ReducedFactorization.parse(text)
    return parse_word(text)


def cmd_insert(args):
    source = _read_insert_input(args.input)
    factorization = isinstance(source, ReducedFactorization)
    if args.mode == "eg":
        pair = eg_record_factorization(source) if factorization else eg_correspondence(source)
        left, right = pair.p, pair.q
    else:
        pair = weak_eg(source)
        left, right = pair.p_hat, pair.q_hat
    if args.json:
        print(json.dumps(pair.to_json(), sort_keys=True))
        return
    print("P:")
    print(left)
    print("Q:")
    print(right)


def cmd_verify(args):
    checks = run_all(args.max_n)
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)} of {len(checks)} checks passed")
    if failed:
        raise _Disagreement(f"{len(failed)} check(s) failed")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schubcrystal",
        description="Exact Schubert, Demazure and Schur computations and their crystals.")
    sub = parser.add_subparsers(dest="command", required=True)
    perm, comp = _arg(parse_permutation), _arg(parse_composition)

    def polynomial_flags(p):
        p.add_argument("--json", action="store_true", help="print the polynomial as JSON terms")
        p.add_argument("--no-check", action="store_true", help="skip the cross-method comparison")

    p = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    p.add_argument("w", type=perm)
    p.add_argument("--method", choices=["bgg", "rfc", "kappa-expansion"], default="bgg")
    p.add_argument("--expand", action="store_true", help="print the key polynomial expansion")
    polynomial_flags(p)
    p.set_defaults(run=cmd_schubert)

    p = sub.add_parser("stanley", help="Stanley symmetric polynomial in BLOCKS variables")
    p.add_argument("w", type=perm)
    p.add_argument("--blocks", type=_arg(_positive), required=True)
    p.add_argument("--method", choices=["rf", "schur-expansion"], default="rf")
    p.add_argument("--expand", action="store_true", help="print the Schur expansion")
    polynomial_flags(p)
    p.set_defaults(run=cmd_stanley)

    p = sub.add_parser("demazure", help="Demazure character of a weak composition")
    p.add_argument("a", type=comp)
    polynomial_flags(p)
    p.set_defaults(run=cmd_demazure)

    p = sub.add_parser("schur", help="Schur polynomial s_L(x_1..x_N)")
    p.add_argument("lam", type=_arg(_partition), metavar="L")
    p.add_argument("n", type=_arg(_positive), metavar="N")
    polynomial_flags(p)
    p.set_defaults(run=cmd_schur)

    p = sub.add_parser("reduced-words", help="all reduced words of a permutation")
    p.add_argument("w", type=perm)
    p.set_defaults(run=cmd_reduced_words)

    p = sub.add_parser("crystal", help="build a crystal graph and summarize or export it")
    p.add_argument("kind", choices=["ssyt", "key", "rf", "rfc"])
    p.add_argument("args", nargs="+", metavar="ARGS",
                   help="ssyt: PARTITION N; key: COMPOSITION; rf: PERMUTATION BLOCKS; rfc: PERMUTATION")
    p.add_argument("--dot", metavar="FILE", help="write Graphviz text ('-' for stdout)")
    p.add_argument("--json", metavar="FILE", help="write JSON ('-' for stdout)")
    p.set_defaults(run=cmd_crystal)

    p = sub.add_parser("insert", help="Edelman-Greene or weak Edelman-Greene insertion")
    p.add_argument("mode", choices=["eg", "weak-eg"])
    p.add_argument("input", help="a reduced word like 45232 or a factorization like (4)(5)(23)(2)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_insert)

    p = sub.add_parser("verify", help="run the exhaustive identity checks")
    p.add_argument("--max-n", type=_arg(_positive), default=4,
                   help="largest rank to sweep (default 4; 5 takes minutes)")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        args.run(args)
    except _Disagreement as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
