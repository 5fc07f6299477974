"""Breadth-first exploration of groups generated by shuffle moves.

Group elements and deck states share one representation, the tuple of
signed codes (see :mod:`hummer.deck`). Enumerating a group is the same as
enumerating the orbit of a fresh deck, since a fresh deck's state *is* the
identity permutation.

Words are sequences of ``(label, exponent)`` pairs. Search witnesses are
read left to right: the leftmost symbol acts on the deck first.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .deck import (
    Deck,
    SignedPermutation,
    act,
    compose,
    format_codes,
    invert_codes,
    power,
)
from .shuffles import ALPHA, BETA, ShuffleMove, delta, move_as_perm

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 20_000_000
LEFT_TO_RIGHT = "lr"
RIGHT_TO_LEFT = "rl"

# below this many frontier states a level is expanded in-process
_PARALLEL_MIN_FRONTIER = 2048

Word = list[tuple[str, int]]


class GroupLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    name: str
    generators: tuple[tuple[str, SignedPermutation], ...]
    n: int

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a generator set needs at least one generator")
        labels = [lab for lab, _ in gens]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate generator labels in {labels}")
        for lab, p in gens:
            if len(p) != self.n:
                raise ValueError(f"generator {lab} has length {len(p)}, expected {self.n}")

    @classmethod
    def from_moves(cls, name: str, moves: Sequence[ShuffleMove], n: int) -> GeneratorSet:
        return cls(name, tuple((str(m), move_as_perm(m, n)) for m in moves), n)

    def lookup(self, label: str) -> SignedPermutation:
        for lab, p in self.generators:
            if lab == label:
                return p
        raise KeyError(f"unknown generator {label!r}")

    def labels(self) -> list[str]:
        return [lab for lab, _ in self.generators]


@dataclass(frozen=True)
class GroupReport:
    order: int
    bfs_depth: int
    truncated: bool
    elements: frozenset = field(repr=False, compare=False, default=frozenset())

    def dump_lines(self) -> list[str]:
        return sorted(format_codes(e) for e in self.elements)


@dataclass(frozen=True)
class OrbitReport:
    size: int
    depth: int
    truncated: bool
    states: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def decks(self) -> list[Deck]:
        return [Deck._trusted(s) for s in sorted(self.states)]

    def dump_lines(self) -> list[str]:
        return sorted(format_codes(s) for s in self.states)


@dataclass(frozen=True)
class VerifyReport:
    holds: bool
    states_checked: int
    depth: int
    truncated: bool = False
    counterexample_word: Word | None = None


@dataclass(frozen=True)
class MembershipResult:
    found: bool
    witness: Word | None
    searched: int
    truncated: bool

    @property
    def proven_absent(self) -> bool:
        return not self.found and not self.truncated


# -- search engine -----------------------------------------------------------

def _steps(g: GeneratorSet) -> list[tuple[str, int, tuple[int, ...]]]:
    """Generators in declaration order, each followed by its inverse if distinct."""
    steps = []
    for lab, p in g.generators:
        steps.append((lab, 1, p.images))
        inv = invert_codes(p.images)
        if inv != p.images:
            steps.append((lab, -1, inv))
    return steps


def _expand_chunk(args):
    chunk, images, predicate = args
    out = []
    for state in chunk:
        kids = [act(state, im) for im in images]
        flags = None if predicate is None else [predicate(Deck._trusted(k)) for k in kids]
        out.append((kids, flags))
    return out


@dataclass
class _Search:
    parents: dict
    depth: int
    truncated: bool
    hit: tuple | None


def _bfs(start, steps, limit, predicate=None, target=None, workers=1) -> _Search:
    """Level-by-level BFS that stops at the first predicate failure or target.

    Children are admitted in (frontier order, step order), so the result is
    the same whether levels are expanded in one process or several.
    """
    images = [im for _, _, im in steps]
    parents = {start: None}
    if (predicate is not None and not predicate(Deck._trusted(start))) or start == target:
        return _Search(parents, 0, False, start)
    frontier = [start]
    depth = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        while frontier:
            if pool is not None and len(frontier) >= _PARALLEL_MIN_FRONTIER:
                size = -(-len(frontier) // (workers * 4))
                chunks = [frontier[i:i + size] for i in range(0, len(frontier), size)]
                expanded = [r for part in pool.map(_expand_chunk, [(c, images, predicate) for c in chunks]) for r in part]
                lazy = False
            else:
                expanded = ((([act(s, im) for im in images]), None) for s in frontier)
                lazy = True
            nxt = []
            for state, (kids, flags) in zip(frontier, expanded):
                for si, child in enumerate(kids):
                    if child in parents:
                        continue
                    if len(parents) >= limit:
                        return _Search(parents, depth + (1 if nxt else 0), True, None)
                    parents[child] = (state, si)
                    nxt.append(child)
                    if child == target:
                        return _Search(parents, depth + 1, False, child)
                    if predicate is not None:
                        ok = predicate(Deck._trusted(child)) if lazy else flags[si]
                        if not ok:
                            return _Search(parents, depth + 1, False, child)
            if nxt:
                depth += 1
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return _Search(parents, depth, False, None)


def _witness(parents, state, steps) -> Word:
    labels = []
    while parents[state] is not None:
        state, si = parents[state]
        labels.append(steps[si][:2])
    labels.reverse()
    word: Word = []
    for lab, e in labels:
        if word and word[-1][0] == lab and (word[-1][1] > 0) == (e > 0):
            word[-1] = (lab, word[-1][1] + e)
        else:
            word.append((lab, e))
    return word


def format_word(word: Word) -> str:
    """Render a word in shuffle-program syntax, e.g. ``b a'^2 d4``."""
    parts = []
    for lab, e in word:
        parts.append(lab + ("'" if e < 0 else "") + (f"^{abs(e)}" if abs(e) != 1 else ""))
    return " ".join(parts)


# -- public operations -------------------------------------------------------

def generate_group(g: GeneratorSet, limit: int = DEFAULT_LIMIT, workers: int = 1) -> GroupReport:
    start = tuple(range(1, g.n + 1))
    res = _bfs(start, _steps(g), limit, workers=workers)
    logger.debug("group %s on %d cards: order %d", g.name, g.n, len(res.parents))
    return GroupReport(len(res.parents), res.depth, res.truncated, frozenset(res.parents))


def orbit_of_deck(start: Deck, g: GeneratorSet, limit: int = DEFAULT_LIMIT, workers: int = 1) -> OrbitReport:
    if len(start) != g.n:
        raise ValueError(f"deck of {len(start)} cards, generators act on {g.n}")
    res = _bfs(start.codes(), _steps(g), limit, workers=workers)
    return OrbitReport(len(res.parents), res.depth, res.truncated, frozenset(res.parents))


def verify_on_orbit(
    start: Deck,
    g: GeneratorSet,
    predicate: Callable[[Deck], bool],
    limit: int = DEFAULT_LIMIT,
    workers: int = 1,
) -> VerifyReport:
    """Check ``predicate`` on every deck reachable from ``start``.

    With ``workers > 1`` the predicate is shipped to worker processes and so
    must be picklable (a module-level function or a ``functools.partial``).
    """
    if len(start) != g.n:
        raise ValueError(f"deck of {len(start)} cards, generators act on {g.n}")
    steps = _steps(g)
    res = _bfs(start.codes(), steps, limit, predicate=predicate, workers=workers)
    if res.hit is not None:
        return VerifyReport(False, len(res.parents), res.depth, res.truncated, _witness(res.parents, res.hit, steps))
    return VerifyReport(True, len(res.parents), res.depth, res.truncated)


def evaluate_word(word: Word, g: GeneratorSet, convention: str = LEFT_TO_RIGHT) -> SignedPermutation:
    if convention not in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
        raise ValueError(f"convention must be 'lr' or 'rl', got {convention!r}")
    result = SignedPermutation.identity(g.n)
    for lab, e in word:
        sym = power(g.lookup(lab), e)
        result = compose(sym, result) if convention == LEFT_TO_RIGHT else compose(result, sym)
    return result


def membership(target: SignedPermutation, g: GeneratorSet, limit: int = DEFAULT_LIMIT, workers: int = 1) -> MembershipResult:
    if len(target) != g.n:
        raise ValueError(f"target has length {len(target)}, generators act on {g.n}")
    steps = _steps(g)
    res = _bfs(tuple(range(1, g.n + 1)), steps, limit, target=target.images, workers=workers)
    if res.hit is not None:
        return MembershipResult(True, _witness(res.parents, res.hit, steps), len(res.parents), False)
    return MembershipResult(False, None, len(res.parents), res.truncated)


# -- flip-packet decomposition into cut and flip-two -------------------------

def _pow(label: str, e: int) -> Word:
    return [(label, e)] if e else []


def _term(i: int, with_flip: bool) -> Word:
    """``b (a b)^i a^-i``, without the leading ``b`` when ``with_flip`` is false."""
    w: Word = [("b", 1)] if with_flip else []
    for _ in range(i):
        w += [("a", 1), ("b", 1)]
    return w + _pow("a", -i)


def displayed_word(k: int) -> Word:
    """The explicit word pattern written out for k = 2, 4, 6: terms for i = k-2 down to 1, then b."""
    w: Word = []
    for i in range(k - 2, 0, -1):
        w += _term(i, True)
    return w + [("b", 1)]


def product_word(upper: int) -> Word:
    """Terms for i = 0..upper written left to right, the i = 0 term being the identity."""
    w: Word = []
    for i in range(upper + 1):
        w += _term(i, i != 0)
    return w


@dataclass(frozen=True)
class DecompositionVerdict:
    k: int
    n: int
    convention: str
    displayed_equal: bool
    product_equal: bool
    remark: tuple[tuple[int, bool], ...]
    member: bool | None
    member_witness: Word | None = None

    @property
    def equal(self) -> bool:
        return self.displayed_equal


def _reverse_top(m: int, n: int, flip: bool) -> SignedPermutation:
    s = -1 if flip else 1
    return SignedPermutation(tuple(s * (m + 1 - q) if q <= m else q for q in range(1, n + 1)))


def check_decomposition(k: int, n: int, convention: str = LEFT_TO_RIGHT, check_membership: bool = True,
                        limit: int = DEFAULT_LIMIT) -> DecompositionVerdict:
    """Compare the explicit cut/flip words for a k-packet flip against the flip itself.

    This is a report: it records which reading of the words reproduces the
    flip, and separately whether the flip lies in the cut/flip-two group.
    ``remark`` lists ``(m, equal)`` for the product with upper index m
    against the top-m reversal, flipped for even m and unflipped for odd m.
    """
    delta(k).check(n)
    g = GeneratorSet.from_moves("cato", [ALPHA, BETA], n)
    target = move_as_perm(delta(k), n)
    displayed = evaluate_word(displayed_word(k), g, convention) == target
    product = evaluate_word(product_word(k - 2), g, convention) == target
    remark = tuple(
        (m, evaluate_word(product_word(m), g, convention) == _reverse_top(m, n, m % 2 == 0))
        for m in range(0, n + 1)
    )
    member = witness = None
    if check_membership:
        res = membership(target, g, limit)
        member = res.found if res.found or res.proven_absent else None
        witness = res.witness
    return DecompositionVerdict(k, n, convention, displayed, product, remark, member, witness)


# -- generator search --------------------------------------------------------

@dataclass(frozen=True)
class MinGenReport:
    group_order: int
    size: int | None
    subsets: tuple[tuple[SignedPermutation, ...], ...]
    searched_sizes: tuple[int, ...]


def _order_of(perms: Sequence[tuple[int, ...]], n: int, limit: int) -> int:
    g = GeneratorSet("candidate", tuple((str(i), SignedPermutation(p)) for i, p in enumerate(perms)), n)
    return len(_bfs(tuple(range(1, n + 1)), _steps(g), limit + 1).parents)


def search_min_generators(g: GeneratorSet, max_subset_size: int, limit: int = DEFAULT_LIMIT,
                          max_results: int | None = None) -> MinGenReport:
    """Look for the smallest generating sets of ``<g>`` up to ``max_subset_size``.

    Sizes 1 and 2 draw from every element of the group; larger sizes draw
    from the original generators only. The search stops at the first size
    that yields any generating set.
    """
    full = generate_group(g, limit)
    if full.truncated:
        raise GroupLimitError(f"group exceeds the limit of {limit} elements")
    order = full.order
    elements = sorted(full.elements)
    originals = [p.images for _, p in g.generators]
    searched = []
    for size in range(1, max_subset_size + 1):
        searched.append(size)
        pool = elements if size <= 2 else originals
        found = []
        for combo in combinations(pool, size):
            if _order_of(combo, g.n, order) == order:
                found.append(tuple(SignedPermutation(p) for p in combo))
                if max_results is not None and len(found) >= max_results:
                    break
        if found:
            return MinGenReport(order, size, tuple(found), tuple(searched))
    return MinGenReport(order, None, (), tuple(searched))
