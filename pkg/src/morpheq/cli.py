"""Command-line interface.

Commands:
    prove          build an induction proof for a problem file
    check          re-verify a serialized proof
    verify-prefix  compare coded prefixes of both sides of a problem
    subseq         print even/odd subsequence prefixes or a block encoding
    search         enumerate small representations matching a target prefix

Exit codes: 0 on success, 1 when the requested fact does not hold (proof
attempt gave up, certificate rejected, prefixes differ), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .formats import (
    ParseError,
    parse_problem,
    parse_proof,
    parse_rep,
    serialize_proof,
)
from .proofdoc import check_proof, render_latex, render_text
from .prover import ProveFailure, ProverConfig, prove_basic, prove_general
from .repsearch import SearchSpec, search
from .subseq import block_encode, odd_length_power
from .words import MorphicRep, NotProlongableError, format_word


def _read(path: str) -> str:
    with open(path, encoding="ascii") as handle:
        return handle.read()


def _cmd_prove(args) -> int:
    problem = parse_problem(_read(args.file))
    config = ProverConfig(tol=args.tol, max_pair_len=args.max_pair_len)
    try:
        if args.basic:
            proof = prove_basic(problem, config)
        else:
            proof = prove_general(problem, config)
    except ProveFailure as failure:
        print(f"gave up: {failure.stage.value}: {failure.detail}")
        return 1
    rendered = render_latex(proof) if args.format == "latex" else render_text(proof)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    if args.save_proof:
        with open(args.save_proof, "w", encoding="ascii") as handle:
            handle.write(serialize_proof(proof))
    return 0


def _cmd_check(args) -> int:
    proof = parse_proof(_read(args.file))
    report = check_proof(proof)
    if report.ok:
        print(
            f"proof OK: {len(proof.table)} pairs, exponents ({proof.p}, {proof.q}), "
            f"{proof.mode.value} mode"
        )
        return 0
    for violation in report.violations:
        print(f"violation: {violation.condition} on pair {violation.pair}: {violation.detail}")
    return 1


def _cmd_verify_prefix(args) -> int:
    problem = parse_problem(_read(args.file))
    n = args.n
    left = MorphicRep(problem.f, problem.tau).prefix(n)
    right = MorphicRep(problem.g, problem.rho).prefix(n)
    if left == right:
        print(f"equal on the first {n} symbols")
        return 0
    pos = next(i for i in range(n) if left[i] != right[i])
    print(f"first mismatch at position {pos}: {left[pos]} != {right[pos]}")
    return 1


def _cmd_subseq(args) -> int:
    if args.encode_blocks:
        f, coding = parse_rep(_read(args.encode_blocks))
        k = odd_length_power(f)
        if k is None:
            print("no power up to 12 makes every image length odd", file=sys.stderr)
            return 1
        g, first, second = block_encode(f.power(k))
        blocks = [
            format_word((first.table[b], second.table[b]))
            for b in range(g.alphabet_size)
        ]
        print(f"upscale {k}")
        print(f"blocks {' '.join(blocks)}")
        print(g.alphabet_size)
        for im in g.images:
            print(format_word(im))
        print(format_word(coding.apply(first.table)))
        print(format_word(coding.apply(second.table)))
        return 0
    prefix = catalog.builtin_prefix(args.builtin, 2 * args.n)
    picked = prefix[0::2][: args.n] if args.op == "even" else prefix[1::2][: args.n]
    print(format_word(picked))
    return 0


def _cmd_search(args) -> int:
    if args.target in catalog.BUILTIN_NAMES:
        target = catalog.builtin_prefix(args.target, args.prefix)
    else:
        text = "".join(_read(args.target).split())
        if not text.isdigit():
            print("target file must contain digits only", file=sys.stderr)
            return 2
        target = tuple(int(c) for c in text)
    spec = SearchSpec(
        target=target,
        alphabet_size=args.alphabet,
        max_image_len=args.maxlen,
        prefix_len=args.prefix,
        jobs=args.jobs,
    )
    results = search(spec)
    print(f"found {len(results)} representations", file=sys.stderr)
    blocks = []
    for rep in results:
        lines = [f"complexity {rep.complexity}", str(rep.morphism.alphabet_size)]
        lines.extend(format_word(im) for im in rep.morphism.images)
        lines.append(format_word(rep.coding.table))
        blocks.append("\n".join(lines))
    if blocks:
        print("\n\n".join(blocks))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morpheq",
        description="Prove equality of coded morphic sequences by simultaneous induction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="prove a problem file and print the proof")
    prove.add_argument("file", help="problem file")
    prove.add_argument("--basic", action="store_true", help="use the fixed per-symbol table shape")
    prove.add_argument("--format", choices=("text", "latex"), default="text")
    prove.add_argument("--tol", type=float, default=ProverConfig.tol, help="growth-rate gap tolerance")
    prove.add_argument(
        "--max-pair-len", type=int, default=ProverConfig.max_pair_len, help="longest safe pair considered"
    )
    prove.add_argument("--output", help="write the rendered proof here instead of stdout")
    prove.add_argument("--save-proof", help="also write the machine-checkable certificate here")
    prove.set_defaults(func=_cmd_prove)

    check = sub.add_parser("check", help="verify a serialized proof file")
    check.add_argument("file", help="proof file")
    check.set_defaults(func=_cmd_check)

    verify = sub.add_parser("verify-prefix", help="compare coded prefixes of both sides")
    verify.add_argument("file", help="problem file")
    verify.add_argument("--n", type=int, default=10000, help="prefix length to compare")
    verify.set_defaults(func=_cmd_verify_prefix)

    subseq = sub.add_parser("subseq", help="subsequence prefixes and block encodings")
    group = subseq.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", choices=catalog.BUILTIN_NAMES)
    group.add_argument("--encode-blocks", metavar="FILE", help="representation file to block-encode")
    subseq.add_argument("--op", choices=("even", "odd"), help="which subsequence of the builtin")
    subseq.add_argument("--n", type=int, default=32, help="how many symbols to print")
    subseq.set_defaults(func=_cmd_subseq)

    searchp = sub.add_parser("search", help="enumerate representations matching a target prefix")
    searchp.add_argument("--target", required=True, help="digit file or builtin name")
    searchp.add_argument("--alphabet", type=int, required=True, help="alphabet size")
    searchp.add_argument("--maxlen", type=int, required=True, help="maximum image length")
    searchp.add_argument("--prefix", type=int, required=True, help="symbols of the target to match")
    searchp.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    searchp.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "subseq" and args.builtin and not args.op:
        parser.error("--builtin requires --op")
    try:
        return args.func(args)
    except (ParseError, NotProlongableError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
