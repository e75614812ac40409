"""Command-line interface.

Exit codes: 0 success, 1 a check failed (or a search found nothing),
2 bad input, 3 a domain violation such as a non-skew matrix.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .arf import arf_invariant, rank_mod2, symplectic_basis
from .checks import GROUPS, lemma_battery, verify_published
from .congruence import RngConfig, random_skew, random_unimodular, search_delta_discrepancy
from .linalg import NotSkewError, SkewMatrix
from .markov import Rank3Params, markov_delta_identity
from .matio import MatrixFormatError, format_json, format_text, read_matrix
from .mutation import MutationSequence, mutate_sequence
from .orbit import bounded_equivalence, invariant_report, orbit_bfs

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _skew(path: str) -> SkewMatrix:
    try:
        m = read_matrix(path)
    except MatrixFormatError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    try:
        return SkewMatrix.from_matrix(m)
    except NotSkewError as exc:
        raise CliError(f"{path}: {exc}", EXIT_DOMAIN) from None


def _emit_matrix(m, fmt: str) -> None:
    sys.stdout.write(format_json(m) + "\n" if fmt == "json" else format_text(m))


def _bits(v) -> str:
    return "".join(str(x) for x in v)


def cmd_delta(args) -> int:
    rep = invariant_report(_skew(args.file))
    if args.format == "json":
        print(json.dumps(rep.as_dict()))
    else:
        print("\n".join(rep.lines()))
    return EXIT_OK


def cmd_mutate(args) -> int:
    b = _skew(args.file)
    try:
        seq = MutationSequence.parse(args.sequence)
        seq.validate(b.n)
    except (ValueError, IndexError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    _emit_matrix(mutate_sequence(b, seq), args.format)
    return EXIT_OK


def cmd_orbit(args) -> int:
    b = _skew(args.file)
    rep = orbit_bfs(b, args.depth, args.max_nodes, args.max_entry, workers=args.workers)
    text = "\n".join(rep.lines()) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print("\n".join(rep.lines()[:8]))
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep.delta_constant else EXIT_CHECK


def cmd_equiv(args) -> int:
    b, b2 = _skew(args.first), _skew(args.second)
    if b.shape != b2.shape:
        raise CliError("matrices have different sizes", EXIT_INPUT)
    verdict = bounded_equivalence(b, b2, args.depth, args.max_nodes, args.max_entry)
    r1, r2 = invariant_report(b), invariant_report(b2)
    distinguished = [
        name for name in ("delta", "rank", "smith", "det") if getattr(r1, name) != getattr(r2, name)
    ]
    if args.format == "json":
        print(json.dumps({
            "status": verdict.status,
            "sequence": list(verdict.sequence.steps) if verdict.equivalent else None,
            "permutation": list(verdict.permutation.perm) if verdict.equivalent else None,
            "explored": verdict.explored,
            "distinguished_by": distinguished,
        }))
        return EXIT_OK
    print(f"status={verdict.status}")
    if verdict.equivalent:
        print(f"sequence={verdict.sequence}")
        print(f"permutation={verdict.permutation}")
    print(f"explored={verdict.explored}")
    if distinguished:
        print("not mutation equivalent: invariants differ (" + ", ".join(distinguished) + ")")
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = RngConfig(args.seed, args.bound)
    m = random_skew(cfg, args.n) if args.kind == "skew" else random_unimodular(cfg, args.n)
    _emit_matrix(m, args.format)
    return EXIT_OK


def cmd_search(args) -> int:
    cfg = RngConfig(args.seed, args.bound)
    w = search_delta_discrepancy(cfg, args.n, args.trials, workers=args.workers)
    if w is None:
        print(f"no discrepancy in {args.trials} trials")
        return EXIT_CHECK
    if args.format == "json":
        print(json.dumps({
            "trial": w.trial,
            "b": w.b.tolist(),
            "x": w.x.tolist(),
            "b_conj": w.b_conj.tolist(),
            "checks": w.report.checks,
            "delta": list(w.report.delta_pair),
        }))
    else:
        print(f"trial={w.trial}")
        for label, m in (("B", w.b), ("X", w.x), ("XBX^t", w.b_conj)):
            print(f"# {label}")
            sys.stdout.write(format_text(m))
        print("\n".join(w.report.lines()))
    return EXIT_OK if w.report.passed else EXIT_CHECK


def cmd_markov(args) -> int:
    if args.file:
        b = _skew(args.file)
        if b.shape != (3, 3):
            raise CliError("markov needs a 3x3 matrix", EXIT_INPUT)
    elif len(args.pqr) == 3:
        b = Rank3Params(*args.pqr).to_matrix()
    else:
        raise CliError("give p q r or --file", EXIT_INPUT)
    rep = markov_delta_identity(b)
    x = rep.params
    lines = [
        f"p={x.p} q={x.q} r={x.r}",
        f"cyclic={str(rep.cyclic).lower()}",
        f"C={rep.c}",
        f"det={rep.det} formula={rep.det_formula}",
        f"delta={rep.delta} 2C_mod4={(2 * rep.c) % 4}",
        f"identity={'pass' if rep.passed else 'fail'}",
    ]
    print("\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_CHECK


def cmd_arf(args) -> int:
    b = _skew(args.file)
    basis = pairs = None
    try:
        if args.basis:
            basis = read_matrix(args.basis).tolist()
        if args.pairs:
            vecs = read_matrix(args.pairs).tolist()
            if len(vecs) % 2:
                raise CliError("pairs file needs an even number of rows", EXIT_INPUT)
            pairs = [(vecs[i], vecs[i + 1]) for i in range(0, len(vecs), 2)]
        value = arf_invariant(b, basis=basis, pairs=pairs)
    except MatrixFormatError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    print(f"rank_mod2={rank_mod2(b)}")
    if pairs is None:
        sym = symplectic_basis(b)
        for i, (e, f) in enumerate(sym.pairs, start=1):
            print(f"pair {i}: e={_bits(e)} f={_bits(f)}")
        for v in sym.radical:
            print(f"radical: {_bits(v)}")
    print(f"arf={value}")
    return EXIT_OK


def _print_results(results, fmt: str) -> int:
    failed = [r for r in results if not r.passed]
    if fmt == "json":
        print(json.dumps([
            {"group": r.group, "name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail}
            for r in results
        ]))
    else:
        for r in results:
            print(r.line())
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
        for r in failed:
            print(f"failed: {r.group}/{r.name}")
    return EXIT_CHECK if failed else EXIT_OK


def cmd_check_lemmas(args) -> int:
    results = lemma_battery(seed=args.seed, n_random=args.random, exhaustive=not args.no_exhaustive)
    return _print_results(results, args.format)


def cmd_verify_paper(args) -> int:
    only = None
    if args.only:
        only = [g.strip() for g in args.only.split(",") if g.strip()]
        bad = set(only) - set(GROUPS)
        if bad:
            raise CliError(f"unknown groups {sorted(bad)}; choose from {', '.join(GROUPS)}", EXIT_INPUT)
    fixtures_dir = Path(args.fixtures) if args.fixtures else None
    return _print_results(verify_published(only, fixtures_dir, seed=args.seed), args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltamut",
        description="Mutation of skew-symmetric integer matrices and the mod-4 delta invariant.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("delta", cmd_delta, "delta and classical invariants of a matrix")
    p.add_argument("file")

    p = add("mutate", cmd_mutate, "apply a mutation sequence such as 3,1,4")
    p.add_argument("file")
    p.add_argument("sequence", nargs="?", default="")

    p = add("orbit", cmd_orbit, "bounded BFS over the mutation class")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--max-nodes", type=int, default=5000)
    p.add_argument("--max-entry", type=int, default=10**9)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")

    p = add("equiv", cmd_equiv, "look for a mutation-equivalence witness")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--max-nodes", type=int, default=5000)
    p.add_argument("--max-entry", type=int, default=10**12)

    p = add("gen", cmd_gen, "random skew or unimodular matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=50000)
    p.add_argument("--kind", choices=("skew", "unimodular"), default="skew")

    p = add("search", cmd_search, "search congruent pairs with different delta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=50000)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)

    p = add("markov", cmd_markov, "rank-3 Markov constant against delta")
    p.add_argument("pqr", nargs="*", type=int, metavar="p q r")
    p.add_argument("--file")

    p = add("arf", cmd_arf, "rank mod 2, symplectic pairs and Arf invariant")
    p.add_argument("file")
    p.add_argument("--basis", help="matrix file whose rows span N (refinement is 1 on them)")
    p.add_argument("--pairs", help="matrix file with rows e1, f1, e2, f2, ...")

    p = add("check-lemmas", cmd_check_lemmas, "run the lemma oracle battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=500)
    p.add_argument("--no-exhaustive", action="store_true")

    p = add("verify-paper", cmd_verify_paper, "check every shipped published example")
    p.add_argument("--only", help="comma-separated groups: " + ", ".join(GROUPS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fixtures", help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        # flag values the library rejects, e.g. a size below 1
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
