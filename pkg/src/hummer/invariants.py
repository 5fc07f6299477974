"""Predicates that the shuffle families are claimed to preserve.

Each card carries a relation bit ``r = face_up XOR parity_changed`` where
``parity_changed`` compares the card's current position with its original
index. Most predicates below are statements about that bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .deck import Card, Color, ColorScheme, Deck, DeckError, color_of


def relation_bits(d: Deck) -> list[int]:
    return [int(c.face_up) ^ ((pos - c.index) & 1) for pos, c in enumerate(d.cards, 1)]


def hummer_balance(d: Deck) -> bool:
    """Face-up cards at even positions equal face-up cards at odd positions."""
    even = sum(1 for pos, c in enumerate(d.cards, 1) if c.face_up and pos % 2 == 0)
    odd = sum(1 for pos, c in enumerate(d.cards, 1) if c.face_up and pos % 2 == 1)
    return even == odd


def strict_parity_relation(d: Deck) -> bool:
    """Every card is face up exactly when its position parity has changed."""
    return not any(relation_bits(d))


def odd_hummer_literal(d: Deck) -> bool:
    """Face-up cards only: each sits at a position of the opposite parity to its origin."""
    return all((pos - c.index) % 2 == 1 for pos, c in enumerate(d.cards, 1) if c.face_up)


def uniform_parity_relation(d: Deck) -> bool:
    return len(set(relation_bits(d))) == 1


def three_property_constant(d: Deck, scheme: ColorScheme) -> bool:
    # computed from colors, not from relation_bits, as a cross-check
    bits = {
        int(c.face_up) ^ int(pos % 2 == 0) ^ int(color_of(c, scheme) is scheme.first_color)
        for pos, c in enumerate(d.cards, 1)
    }
    return len(bits) == 1


def alternation_by_position(d: Deck, scheme: ColorScheme) -> bool:
    odd = {color_of(c, scheme) for c in d.cards[0::2]}
    even = {color_of(c, scheme) for c in d.cards[1::2]}
    if len(odd) > 1 or len(even) > 1:
        return False
    return not even or odd != even


@dataclass(frozen=True)
class MalorientedReport:
    """Minority-orientation cards; ``count`` is None on an exact tie."""

    count: int | None
    members: frozenset[int]

    @property
    def ambiguous(self) -> bool:
        return self.count is None


def maloriented(d: Deck) -> MalorientedReport:
    up = frozenset(c.index for c in d.cards if c.face_up)
    down = frozenset(c.index for c in d.cards if not c.face_up)
    if len(up) == len(down):
        return MalorientedReport(None, frozenset())
    minority = up if len(up) < len(down) else down
    return MalorientedReport(len(minority), minority)


def cyclic_distance_to_maloriented(d: Deck, target: int) -> int:
    report = maloriented(d)
    if report.count != 1:
        raise DeckError(f"need exactly one maloriented card, found {report.count}")
    (bad,) = report.members
    gap = abs(d.position_of(target) - d.position_of(bad))
    return min(gap, len(d) - gap)


def red_black_split_check(d: Deck, scheme: ColorScheme) -> bool:
    """Split at the middle: reds in the top half equal blacks in the bottom half."""
    size = len(d)
    if size % 2:
        raise DeckError(f"red-black split needs an even deck, got {size} cards")
    colors = [color_of(c, scheme) for c in d.cards]
    if colors.count(Color.RED) != size // 2:
        raise DeckError("red-black split needs equally many red and black cards")
    half = size // 2
    return colors[:half].count(Color.RED) == colors[half:].count(Color.BLACK)


def decks_with_color_patterns(n: int):
    """Yield one deck per arrangement of ``n`` odd-indexed and ``n`` even-indexed cards."""
    size = 2 * n
    first = [i for i in range(1, size + 1, 2)]
    second = [i for i in range(2, size + 1, 2)]
    for slots in combinations(range(size), n):
        order = [0] * size
        a, b = iter(first), iter(second)
        chosen = set(slots)
        for s in range(size):
            order[s] = next(a) if s in chosen else next(b)
        yield Deck(tuple(Card(i) for i in order))
