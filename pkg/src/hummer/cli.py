"""Command-line front end.

Exit codes: 0 when the command succeeded or the invariant held, 1 when a
sought property failed (counterexample, target not found, limit hit), 2 on
usage, parse or parameter errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .campaigns import baby_hummer, random_verify, split_twenty
from .deck import Color, ColorScheme, Deck, DeckError, deck_as_perm, new_deck
from .dsl import ProgramParseError, parse_program
from .families import FAMILIES, FamilyError, family_generators, get_family
from .grouplab import (
    DEFAULT_LIMIT,
    GeneratorSet,
    GroupLimitError,
    check_decomposition,
    format_word,
    generate_group,
    membership,
    orbit_of_deck,
    search_min_generators,
    verify_on_orbit,
)
from .invariants import (
    alternation_by_position,
    hummer_balance,
    strict_parity_relation,
    three_property_constant,
    uniform_parity_relation,
)
from .shuffles import ShuffleError, move_as_perm, run_program

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
RECORD_KEYS = ("command", "n", "family", "order", "depth", "holds", "witness")


class UsageError(Exception):
    pass


def _bool(x) -> str:
    return "-" if x is None else ("true" if x else "false")


def _record(out, **fields) -> None:
    vals = []
    for key in RECORD_KEYS:
        v = fields.get(key)
        if isinstance(v, bool):
            v = _bool(v)
        v = "-" if v is None or v == "" else str(v)
        vals.append(f"{key}={v.replace(' ', ',')}")
    print(" ".join(vals), file=out)


def _limit(args) -> int:
    if args.limit is not None:
        return args.limit
    env = os.environ.get("HUMMER_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HUMMER_LIMIT must be an integer, got {env!r}") from None
    return DEFAULT_LIMIT


def _scheme(args) -> ColorScheme:
    return ColorScheme(Color(args.first_color))


def _generators(spec: str, n: int) -> GeneratorSet:
    """A family name, or a comma list of single moves such as ``g2,g4,d2``."""
    if spec in FAMILIES:
        return family_generators(spec, n)
    gens = []
    for token in spec.split(","):
        token = token.strip()
        prog = parse_program(token, n)
        if len(prog) != 1 or prog.steps[0][1] != 1 or "'" in token:
            raise UsageError(f"generator {token!r} must be a single plain move")
        move = prog.steps[0][0]
        gens.append((str(move), move_as_perm(move, n)))
    return GeneratorSet(spec, tuple(gens), n)


def _read_decks(path: str) -> list[Deck]:
    decks = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                decks.append(Deck.parse(line))
    return decks


# -- commands ----------------------------------------------------------------

def cmd_apply(args, out) -> int:
    if args.deck_file:
        decks = _read_decks(args.deck_file)
    elif args.deck:
        decks = [Deck.parse(args.deck)]
    elif args.n is not None:
        decks = [new_deck(args.n)]
    else:
        raise UsageError("apply needs --n, --deck or --deck-file")
    scheme = _scheme(args)
    programs = {}
    for d in decks:
        if len(d) not in programs:
            programs[len(d)] = parse_program(args.moves, len(d))
    for d in decks:
        result = run_program(d, programs[len(d)])
        print(result, file=out)
        print(f"hummer_balance={_bool(hummer_balance(result))}", file=out)
        print(f"strict_parity_relation={_bool(strict_parity_relation(result))}", file=out)
        print(f"uniform_parity_relation={_bool(uniform_parity_relation(result))}", file=out)
        print(f"alternation_by_position={_bool(alternation_by_position(result, scheme))}", file=out)
        print(f"three_property_constant={_bool(three_property_constant(result, scheme))}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    fam = get_family(args.family)
    fam.check_size(args.n)
    if args.mode == "exhaustive":
        rep = verify_on_orbit(new_deck(args.n), family_generators(args.family, args.n), fam.predicate,
                              _limit(args), workers=args.workers)
        holds = rep.holds and not rep.truncated
        states, depth = rep.states_checked, rep.depth
        witness = format_word(rep.counterexample_word) if rep.counterexample_word is not None else None
        truncated = rep.truncated
    else:
        if args.samples < 0:
            raise UsageError("--samples must be >= 0")
        rep = random_verify(args.family, args.n, args.samples, args.max_word_length, args.seed)
        holds, states, depth = rep.holds, rep.states_checked, args.max_word_length
        witness = str(rep.counterexample) if rep.counterexample is not None else None
        truncated = False
    if args.format == "records":
        _record(out, command="verify", n=args.n, family=args.family, order=states, depth=depth,
                holds=holds, witness=witness)
    else:
        print(f"verify family={args.family} n={args.n} mode={args.mode}", file=out)
        print(f"invariant: {fam.invariant}", file=out)
        if args.mode == "random":
            print(f"seed: {args.seed}", file=out)
            print(f"samples: {args.samples}", file=out)
            print(f"max word length: {args.max_word_length}", file=out)
        else:
            print(f"depth: {depth}", file=out)
        print(f"states checked: {states}", file=out)
        if truncated:
            print("truncated: true", file=out)
        print(f"holds: {_bool(holds)}", file=out)
        if witness is not None:
            print(f"counterexample: {witness}", file=out)
    return EXIT_OK if holds else EXIT_FAILED


def cmd_orbit(args, out) -> int:
    g = _generators(args.gens, args.n)
    if args.start:
        start = Deck.parse(args.start)
        if len(start) != args.n:
            raise UsageError(f"--start has {len(start)} cards, --n is {args.n}")
        rep = orbit_of_deck(start, g, _limit(args), workers=args.workers)
        size, depth, truncated, lines = rep.size, rep.depth, rep.truncated, rep.dump_lines
        what = "orbit size"
    else:
        rep = generate_group(g, _limit(args), workers=args.workers)
        size, depth, truncated, lines = rep.order, rep.bfs_depth, rep.truncated, rep.dump_lines
        what = "order"
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.writelines(line + "\n" for line in lines())
    if args.format == "records":
        _record(out, command="orbit", n=args.n, family=args.gens, order=size, depth=depth, holds=not truncated)
    else:
        print(f"orbit gens={args.gens} n={args.n}" + (f" start={args.start}" if args.start else ""), file=out)
        print(f"{what}: {size}", file=out)
        print(f"depth: {depth}", file=out)
        print(f"truncated: {_bool(truncated)}", file=out)
    return EXIT_FAILED if truncated else EXIT_OK


def _target(text: str, n: int):
    t = text.strip()
    if "," in t or t.startswith("~") or t.isdigit():
        return deck_as_perm(Deck.parse(t))
    return deck_as_perm(run_program(new_deck(n), parse_program(t, n)))


def cmd_member(args, out) -> int:
    g = _generators(args.gens, args.n)
    target = _target(args.target, args.n)
    if len(target) != args.n:
        raise UsageError(f"target has {len(target)} cards, --n is {args.n}")
    res = membership(target, g, _limit(args), workers=args.workers)
    witness = format_word(res.witness) if res.found else None
    if args.format == "records":
        _record(out, command="member", n=args.n, family=args.gens, order=res.searched,
                depth=len(res.witness) if res.found else None, holds=res.found, witness=witness)
    else:
        print(f"member gens={args.gens} n={args.n} target={target}", file=out)
        status = "found" if res.found else ("absent" if res.proven_absent else "not found within limit")
        print(f"status: {status}", file=out)
        print(f"elements searched: {res.searched}", file=out)
        if res.found:
            print(f"witness: {witness or '(empty)'}", file=out)
    return EXIT_OK if res.found else EXIT_FAILED


def cmd_decompose(args, out) -> int:
    conventions = ("lr", "rl") if args.convention == "both" else (args.convention,)
    verdicts = [check_decomposition(args.k, args.n, c, check_membership=not args.no_member, limit=_limit(args))
                for c in conventions]
    for v in verdicts:
        if args.format == "records":
            _record(out, command="decompose", n=v.n, family="cato", depth=v.k, holds=v.equal,
                    witness=format_word(v.member_witness) if v.member_witness else None)
        else:
            print(f"decompose k={v.k} n={v.n} convention={v.convention}", file=out)
            print(f"explicit word: {'equal' if v.displayed_equal else 'differs'}", file=out)
            print(f"product formula: {'equal' if v.product_equal else 'differs'}", file=out)
            print("remark: " + " ".join(f"m{m}={'equal' if ok else 'differs'}" for m, ok in v.remark), file=out)
            if v.member is not None:
                print(f"member of <a,b>: {_bool(v.member)}", file=out)
                if v.member_witness is not None:
                    print(f"witness: {format_word(v.member_witness) or '(empty)'}", file=out)
    return EXIT_OK


def cmd_mingen(args, out) -> int:
    g = _generators(args.gens, args.n)
    rep = search_min_generators(g, args.max_size, _limit(args), max_results=args.max_results)
    found = rep.size is not None
    first = ";".join(str(p) for p in rep.subsets[0]) if found else None
    if args.format == "records":
        _record(out, command="mingen", n=args.n, family=args.gens, order=rep.group_order, depth=rep.size,
                holds=found, witness=first)
    else:
        print(f"mingen gens={args.gens} n={args.n}", file=out)
        print(f"group order: {rep.group_order}", file=out)
        print(f"searched sizes: {' '.join(map(str, rep.searched_sizes))}", file=out)
        print(f"smallest generating size: {rep.size if found else 'none in searched range'}", file=out)
        for subset in rep.subsets:
            print("generating set: " + " | ".join(str(p) for p in subset), file=out)
    return EXIT_OK if found else EXIT_FAILED


def cmd_demo(args, out) -> int:
    if args.scenario == "baby-hummer":
        rep = baby_hummer(_limit(args))
        n, family = 4, "cato"
    else:
        if args.trials < 0:
            raise UsageError("--trials must be >= 0")
        rep = split_twenty(args.trials, args.seed, args.max_word_length)
        n, family = 20, "cato+dato"
    if args.format == "records":
        _record(out, command="demo", n=n, family=family, order=rep.checked, holds=rep.holds)
    else:
        print(f"demo {args.scenario}", file=out)
        for line in rep.lines:
            print(line, file=out)
        print(f"holds: {_bool(rep.holds)}", file=out)
    return EXIT_OK if rep.holds else EXIT_FAILED


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hummer", description="Card-shuffle groups and their invariants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, workers=True):
        p.add_argument("--format", choices=("text", "records"), default="text")
        p.add_argument("--limit", type=int, default=None,
                       help="maximum number of elements to enumerate (default: $HUMMER_LIMIT or 20000000)")
        if workers:
            p.add_argument("--workers", type=int, default=1, help="processes used to expand BFS levels")

    p = sub.add_parser("apply", help="run a shuffle program on a deck")
    p.add_argument("--n", type=int)
    p.add_argument("--deck", help="start deck, e.g. '~1,2,3,4'")
    p.add_argument("--deck-file", help="file with one deck per line; '#' starts a comment")
    p.add_argument("--moves", default="", help="shuffle program, e.g. 'd2 a d4'")
    p.add_argument("--first-color", choices=("red", "black"), default="red")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="check a family's invariant")
    p.add_argument("--family", required=True, choices=tuple(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--max-word-length", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="enumerate a group or the orbit of a deck")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True, help="family name or comma list such as 'g2,g4,d2,d4'")
    p.add_argument("--start", help="start deck; omit to enumerate the group itself")
    p.add_argument("--dump", help="write sorted canonical encodings, one per line")
    common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("member", help="search for a word producing a target")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True)
    p.add_argument("--target", required=True, help="shuffle program or deck text")
    common(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("decompose", help="compare explicit cut/flip words with an even flip")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--convention", choices=("lr", "rl", "both"), default="both")
    p.add_argument("--no-member", action="store_true", help="skip the membership cross-check")
    common(p, workers=False)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("mingen", help="search for small generating sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True)
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--max-results", type=int, default=10)
    common(p, workers=False)
    p.set_defaults(func=cmd_mingen)

    p = sub.add_parser("demo", help="run a worked scenario")
    p.add_argument("scenario", choices=("baby-hummer", "split-20"))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-word-length", type=int, default=50)
    common(p, workers=False)
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except GroupLimitError as exc:
        print(f"hummer: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, ProgramParseError, ShuffleError, DeckError, FamilyError, ValueError, KeyError) as exc:
        print(f"hummer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hummer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
