"""Command-line front end.

Algebras are described in a line-oriented text format with 1-based vertex
indices (0-based internally):

    # comments start with '#'
    vertices: 5
    arrows: a1 1 2; a2 3 2; a3 2 4; a4 2 5
    relations: a1 a3; a2 a4

Exit codes: 0 success / suite passed, 2 a verification suite found a
counterexample, 1 usage or input errors.  All commands are deterministic;
no randomness is used anywhere.
"""

import argparse
import json
import sys
from importlib import resources

from . import __version__
from .endo import (
    EndomorphismContext,
    gabriel_quiver,
    is_nakayama_algebra,
    is_qf2_algebra,
    kupisch_of_endo,
)
from .enumeration import CorpusBounds
from .errors import AlgebraParseError, QuivalgError
from .homological import (
    base_algebra,
    dominant_dimension,
    double_centralizer_check,
    injective_coresolution,
    minimal_faithful_proj_inj,
)
from .monomial import Side, build
from .nakayama import (
    algebra_to_kupisch,
    injective_uniserial_id,
    parse_kupisch,
    kupisch_to_algebra,
    uniserial_module,
)
from .quiver import Quiver, shape_classify
from .representations import homological_status
from .verify import DEFAULT_CORPORA, DEFAULT_MAX_C, DEFAULT_MAX_N, SUITES, run_suite


def parse_algebra(text):
    """Parse the algebra file format; raises AlgebraParseError with a line
    number on malformed input, and the usual construction errors after."""
    vertex_count = None
    arrow_specs = []
    relation_specs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise AlgebraParseError("expected 'vertices:', 'arrows:' or 'relations:'", lineno)
        key = key.strip().lower()
        if key == "vertices":
            if vertex_count is not None:
                raise AlgebraParseError("duplicate 'vertices:' line", lineno)
            try:
                vertex_count = int(rest.strip())
            except ValueError:
                raise AlgebraParseError(f"bad vertex count {rest.strip()!r}", lineno) from None
            if vertex_count < 1:
                raise AlgebraParseError("vertex count must be positive", lineno)
        elif key == "arrows":
            for chunk in rest.split(";"):
                if not chunk.strip():
                    continue
                parts = chunk.split()
                if len(parts) != 3:
                    raise AlgebraParseError(
                        f"arrow needs 'name source target', got {chunk.strip()!r}", lineno)
                name, s, t = parts
                try:
                    src, tgt = int(s), int(t)
                except ValueError:
                    raise AlgebraParseError(f"bad arrow endpoints in {chunk.strip()!r}",
                                            lineno) from None
                arrow_specs.append((name, src, tgt, lineno))
        elif key == "relations":
            for chunk in rest.split(";"):
                if chunk.strip():
                    relation_specs.append((chunk.split(), lineno))
        else:
            raise AlgebraParseError(f"unknown key {key!r}", lineno)
    if vertex_count is None:
        raise AlgebraParseError("missing 'vertices:' line")
    names = set()
    arrows = []
    for name, src, tgt, lineno in arrow_specs:
        if name in names:
            raise AlgebraParseError(f"duplicate arrow name {name!r}", lineno)
        names.add(name)
        if not (1 <= src <= vertex_count and 1 <= tgt <= vertex_count):
            raise AlgebraParseError(
                f"arrow {name!r} endpoints outside 1..{vertex_count}", lineno)
        arrows.append((name, src - 1, tgt - 1))
    quiver = Quiver.from_arrows(vertex_count, arrows)
    relations = []
    for tokens, lineno in relation_specs:
        for tok in tokens:
            if tok not in names:
                raise AlgebraParseError(f"relation names unknown arrow {tok!r}", lineno)
        try:
            relations.append(quiver.path(tokens))
        except ValueError:
            raise AlgebraParseError(
                f"arrows {' '.join(tokens)} do not form a path", lineno) from None
    return build(quiver, relations)


def load_algebra(path):
    if path == "-":
        return parse_algebra(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def paper_example_text():
    return resources.files("quivalg.fixtures").joinpath("paper_example.alg").read_text()


def describe_basic(c):
    if not c.radical:
        return " x ".join(["K"] * c.num_summands)
    return f"dim {c.dimension} basic algebra with {c.num_summands} summands"


def paper_example():
    """Summary record of the five-vertex two-relation example algebra."""
    algebra = parse_algebra(paper_example_text())
    dd = dominant_dimension(algebra)
    pi_right = minimal_faithful_proj_inj(algebra, Side.RIGHT)
    base = base_algebra(algebra)
    dc = double_centralizer_check(algebra)
    return {
        "dominant_dimension": dd.value if dd.kind == "finite" else str(dd),
        "nakayama": algebra_to_kupisch(algebra) is not None,
        "qf2_right": algebra.is_qf2(Side.RIGHT),
        "min_faithful_proj_inj_right": [v + 1 for v in pi_right],
        "base_algebra": describe_basic(base),
        "base_algebra_dimension": base.dimension,
        "double_centralizer": dc.holds,
    }


def _parse_summand_tokens(spec, algebra):
    ids = []
    for tok in spec.split():
        try:
            if tok.startswith("top="):
                fields = dict(kv.split("=", 1) for kv in tok.split(","))
                ids.append((int(fields["top"]) - 1, int(fields["len"])))
            elif tok.startswith("P"):
                v = int(tok[1:]) - 1
                ids.append((v, len(algebra.paths_from(v))))
            elif tok.startswith("I"):
                rest = tok[1:]
                mod_soc = rest.endswith("/s")
                v = int(rest[:-2] if mod_soc else rest) - 1
                t, l = injective_uniserial_id(algebra, v)
                if mod_soc:
                    l -= 1
                    if l == 0:
                        raise ValueError(f"{tok}: quotient by the socle is zero")
                ids.append((t, l))
            else:
                raise ValueError(f"unrecognized summand token {tok!r}")
        except (KeyError, IndexError, ValueError) as exc:
            raise QuivalgError(f"bad summand token {tok!r}: {exc}") from None
    return ids


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser():
    parser = _Parser(
        prog="quivalg",
        description="Exact workbench for monomial bound quiver algebras.")
    parser.add_argument("--version", action="version", version=f"quivalg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="algebra description file, or - for stdin")
        return p

    algebra_cmd("check", "parse an algebra file and print a summary")
    p = algebra_cmd("domdim", "dominant dimension")
    p.add_argument("--cutoff", type=int, default=12)
    p = algebra_cmd("coresolve", "terms of the minimal injective coresolution")
    p.add_argument("--terms", type=int, required=True)
    algebra_cmd("nakayama", "Nakayama shape test and Kupisch series")
    p = algebra_cmd("qf2", "simple-socle test for the indecomposable projectives")
    p.add_argument("--side", choices=["right", "left", "both"], default="both")
    algebra_cmd("base", "base algebra fAf of the minimal faithful projective-injective")
    algebra_cmd("dc", "double centraliser check")

    p = sub.add_parser("endo", help="endomorphism algebra of uniserial modules "
                                    "over a Nakayama algebra")
    p.add_argument("--kupisch", required=True,
                   help="series, e.g. 'cyclic:3,2' or 'linear:2,1'")
    p.add_argument("--summands", required=True,
                   help="space-separated tokens: P<i>, I<i>, I<i>/s, top=<v>,len=<l>")

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--max-arrows", type=int)
    p.add_argument("--max-rel-len", type=int)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--max-c", type=int, default=DEFAULT_MAX_C)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report", help="write the JSON report to this file (atomically)")
    p.add_argument("--csv", help="write a CSV summary to this file")

    p = sub.add_parser("paper-example", help="summary of the built-in example algebra")
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_check(algebra):
    quiver = algebra.quiver
    print(f"vertices: {quiver.vertex_count}")
    print(f"arrows: {len(quiver.arrows)}")
    print(f"relations: {len(algebra.relations)}")
    print(f"dimension: {algebra.dimension}")
    print(f"shape: {shape_classify(quiver).value}")
    return 0


def _cmd_domdim(algebra, cutoff):
    print(f"dominant dimension: {dominant_dimension(algebra, cutoff)}")
    return 0


def _cmd_coresolve(algebra, terms):
    core = injective_coresolution(algebra, terms)
    for k, term in enumerate(core.terms):
        status = homological_status(term)
        print(f"I_{k}: dims {tuple(term.dims)} total {term.total_dim} "
              f"projective={'yes' if status.is_projective else 'no'}")
    if core.terminated:
        print(f"coresolution terminates after {len(core.terms)} terms")
    else:
        print(f"truncated at {core.truncated_at} terms")
    return 0


def _cmd_nakayama(algebra):
    ks = algebra_to_kupisch(algebra)
    if ks is None:
        print("not a Nakayama algebra")
    else:
        print(f"Nakayama algebra with Kupisch series {ks}")
    return 0


def _cmd_qf2(algebra, side):
    chosen = {"right": Side.RIGHT, "left": Side.LEFT, "both": Side.BOTH}[side]
    result = algebra.is_qf2(chosen)
    sides = (Side.RIGHT, Side.LEFT) if chosen is Side.BOTH else (chosen,)
    for s in sides:
        for v in range(algebra.quiver.vertex_count):
            ok = algebra.socle_criterion(v, s)
            print(f"{s.value} socle at vertex {v + 1}: {'simple' if ok else 'not simple'}")
    print(f"QF-2 ({side}): {result}")
    return 0


def _cmd_base(algebra):
    base = base_algebra(algebra)
    verts = sorted(base.payloads[i].source for i in base.idempotents)
    print(f"idempotent vertices: {[v + 1 for v in verts]}")
    print(f"dimension: {base.dimension}")
    print(f"radical dimension: {len(base.radical)}")
    print(f"base algebra: {describe_basic(base)}")
    print(f"nakayama (componentwise): {is_nakayama_algebra(base)}")
    return 0


def _cmd_dc(algebra):
    dc = double_centralizer_check(algebra)
    print(f"dim A: {dc.dim_algebra}")
    print(f"dim End over the base algebra: {dc.dim_commutant}")
    print(f"double centraliser: {dc.holds}")
    return 0


def _cmd_endo(args):
    ks = parse_kupisch(args.kupisch)
    algebra = kupisch_to_algebra(ks)
    ids = _parse_summand_tokens(args.summands, algebra)
    reps = [uniserial_module(algebra, t, l) for t, l in sorted(set(ids))]
    ctx = EndomorphismContext(reps)
    endo = ctx.endo_algebra(range(len(reps)))
    print(f"summands: {len(reps)}")
    print(f"dimension: {endo.dimension}")
    quiver = gabriel_quiver(endo)
    print(f"gabriel quiver: {quiver.vertex_count} vertices, {len(quiver.arrows)} arrows")
    print(f"nakayama: {is_nakayama_algebra(endo)}")
    kc = kupisch_of_endo(endo)
    print(f"kupisch: {kc if kc is not None else 'none'}")
    print(f"qf2: {is_qf2_algebra(endo)}")
    return 0


def _cmd_verify(args):
    bounds = None
    triple = (args.max_vertices, args.max_arrows, args.max_rel_len)
    if any(x is not None for x in triple):
        if any(x is None for x in triple):
            print("verify: give all of --max-vertices/--max-arrows/--max-rel-len "
                  "or none", file=sys.stderr)
            return 1
        bounds = (CorpusBounds(*triple),)
    else:
        bounds = DEFAULT_CORPORA
    report = run_suite(args.suite, bounds=bounds, max_n=args.max_n,
                       max_c=args.max_c, workers=args.workers)
    if args.report:
        report.write(args.report)
        print(f"report written to {args.report}", file=sys.stderr)
    else:
        sys.stdout.write(report.to_json())
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.csv_summary())
    print(f"suite {report.suite}: {'PASS' if report.passed else 'FAIL'} "
          f"({report.counts.get('algebras', '-')} algebras, "
          f"{len(report.counterexamples)} counterexamples, "
          f"{report.wall_time_seconds:.1f}s)", file=sys.stderr)
    return 0 if report.passed else 2


def _cmd_paper_example(args):
    record = paper_example()
    if args.json:
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        print(f"dominant dimension: {record['dominant_dimension']}")
        print(f"nakayama: {record['nakayama']}")
        print(f"QF-2 (right): {record['qf2_right']}")
        print("minimal faithful projective-injective vertices (right): "
              f"{record['min_faithful_proj_inj_right']}")
        print(f"base algebra: {record['base_algebra']}")
        print(f"double centraliser: {record['double_centralizer']}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "endo":
            return _cmd_endo(args)
        if args.command == "paper-example":
            return _cmd_paper_example(args)
        algebra = load_algebra(args.file)
        if args.command == "check":
            return _cmd_check(algebra)
        if args.command == "domdim":
            return _cmd_domdim(algebra, args.cutoff)
        if args.command == "coresolve":
            return _cmd_coresolve(algebra, args.terms)
        if args.command == "nakayama":
            return _cmd_nakayama(algebra)
        if args.command == "qf2":
            return _cmd_qf2(algebra, args.side)
        if args.command == "base":
            return _cmd_base(algebra)
        if args.command == "dc":
            return _cmd_dc(algebra)
    except OSError as exc:
        print(f"quivalg: {exc}", file=sys.stderr)
        return 1
    except QuivalgError as exc:
        print(f"quivalg: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unhandled command")


if __name__ == "__main__":
    sys.exit(main())
