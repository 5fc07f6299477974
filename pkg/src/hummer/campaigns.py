"""Randomized verification runs and the two worked scenarios."""
from __future__ import annotations

from dataclasses import dataclass

from .deck import Color, ColorScheme, Deck, act, new_deck
from .families import family_generators, get_family, word_moves
from .grouplab import DEFAULT_LIMIT, orbit_of_deck
from .invariants import cyclic_distance_to_maloriented, maloriented, three_property_constant
from .rng import SplitMix64
from .shuffles import ShuffleMove, ShuffleProgram, move_as_perm, split_deck, stack_decks


@dataclass(frozen=True)
class RandomReport:
    holds: bool
    words: int
    states_checked: int
    counterexample: ShuffleProgram | None = None


def _compress(moves: list[ShuffleMove]) -> ShuffleProgram:
    steps: list[tuple[ShuffleMove, int]] = []
    for m in moves:
        if steps and steps[-1][0] == m:
            steps[-1] = (m, steps[-1][1] + 1)
        else:
            steps.append((m, 1))
    return ShuffleProgram(tuple(steps))


def random_word(rng: SplitMix64, alphabet: list, max_len: int) -> list:
    """A word of length ``1 + below(max_len)``, each letter ``alphabet[below(len)]``."""
    length = 1 + rng.below(max_len)
    return [alphabet[rng.below(len(alphabet))] for _ in range(length)]


def random_verify(family: str, n: int, samples: int, max_len: int, seed: int) -> RandomReport:
    """Apply ``samples`` random words to a fresh deck, checking after every move."""
    fam = get_family(family)
    fam.check_size(n)
    if max_len < 1:
        raise ValueError("max word length must be >= 1")
    moves = word_moves(family, n)
    images = [move_as_perm(m, n).images for m in moves]
    rng = SplitMix64(seed)
    start = new_deck(n).codes()
    checked = 0
    for w in range(samples):
        word = random_word(rng, list(range(len(moves))), max_len)
        state = start
        for i, mi in enumerate(word):
            state = act(state, images[mi])
            checked += 1
            if not fam.predicate(Deck._trusted(state)):
                bad = _compress([moves[x] for x in word[:i + 1]])
                return RandomReport(False, w + 1, checked, bad)
    return RandomReport(True, samples, checked)


@dataclass(frozen=True)
class DemoReport:
    holds: bool
    checked: int
    lines: tuple[str, ...]


def baby_hummer(limit: int = DEFAULT_LIMIT) -> DemoReport:
    start = Deck.parse("~1,2,3,4")
    orbit = orbit_of_deck(start, family_generators("cato", 4), limit)
    failures = []
    for d in orbit.decks:
        rep = maloriented(d)
        if rep.count != 1:
            failures.append(f"{d}: maloriented count {rep.count}")
        elif cyclic_distance_to_maloriented(d, 3) != 2:
            failures.append(f"{d}: card 3 at distance {cyclic_distance_to_maloriented(d, 3)}")
    lines = [f"start: {start}", f"orbit size: {orbit.size}", f"depth: {orbit.depth}"]
    lines += [f"violation: {f}" for f in failures]
    holds = not failures and not orbit.truncated
    return DemoReport(holds, orbit.size, tuple(lines))


def _run(deck: Deck, perms: list[tuple[int, ...]]) -> Deck:
    codes = deck.codes()
    for p in perms:
        codes = act(codes, p)
    return Deck._trusted(codes)


def split_twenty(trials: int, seed: int, max_len: int = 50, size: int = 20, cut: int = 7) -> DemoReport:
    """Shuffle a whole deck, split it, shuffle the odd pile, and recombine both ways."""
    rng = SplitMix64(seed)
    scheme = ColorScheme(Color.RED)
    whole = [move_as_perm(m, size).images for m in word_moves("cato", size)]
    pile = [move_as_perm(m, size - cut).images for m in word_moves("dato", size - cut)]
    failures = []
    checked = 0
    for t in range(trials):
        deck = _run(new_deck(size), random_word(rng, whole, max_len))
        top, rest = split_deck(deck, cut)
        rest = _run(rest, random_word(rng, pile, max_len))
        for name, combined in (("table-on-top", stack_decks(top, rest)), ("hand-on-top", stack_decks(rest, top))):
            checked += 1
            if not three_property_constant(combined, scheme):
                failures.append(f"trial {t + 1} {name}: {combined}")
    lines = [f"trials: {trials}", f"seed: {seed}", f"recombinations checked: {checked}"]
    lines += [f"violation: {f}" for f in failures]
    return DemoReport(not failures, checked, tuple(lines))
