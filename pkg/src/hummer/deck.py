"""Oriented cards, decks and signed permutations.

Positions and card indices are 1-based throughout. A signed permutation is
stored in one-line form: entry ``p`` (1-based) is ``+i`` or ``-i``, meaning
the card currently at position ``i`` lands at position ``p`` and, when the
sign is negative, is turned over.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class DeckError(ValueError):
    """Malformed deck, permutation, or mismatched sizes."""


class Orientation(enum.Enum):
    FACE_DOWN = 0
    FACE_UP = 1

    def toggled(self) -> Orientation:
        return Orientation.FACE_UP if self is Orientation.FACE_DOWN else Orientation.FACE_DOWN


class Color(enum.Enum):
    RED = "red"
    BLACK = "black"

    def other(self) -> Color:
        return Color.BLACK if self is Color.RED else Color.RED


class Card(NamedTuple):
    index: int
    orientation: Orientation = Orientation.FACE_DOWN

    @property
    def face_up(self) -> bool:
        return self.orientation is Orientation.FACE_UP

    def flipped(self) -> Card:
        return Card(self.index, self.orientation.toggled())

    def code(self) -> int:
        return -self.index if self.face_up else self.index

    @classmethod
    def from_code(cls, code: int) -> Card:
        if code < 0:
            return cls(-code, Orientation.FACE_UP)
        return cls(code, Orientation.FACE_DOWN)

    def __str__(self) -> str:
        return ("~" if self.face_up else "") + str(self.index)


@dataclass(frozen=True)
class ColorScheme:
    """Odd-indexed cards get ``first_color``, even-indexed cards the other."""

    first_color: Color = Color.RED


@dataclass(frozen=True)
class Deck:
    """An immutable ordered sequence of distinct oriented cards.

    A full deck holds exactly the indices ``1..n``. Piles split off a larger
    deck keep their parent indices, so only distinctness is enforced here;
    :meth:`is_full` tells the two apart.
    """

    cards: tuple[Card, ...]

    def __post_init__(self):
        cards = tuple(self.cards)
        object.__setattr__(self, "cards", cards)
        if not cards:
            raise DeckError("a deck needs at least one card")
        seen = set()
        for c in cards:
            if not isinstance(c, Card):
                raise DeckError(f"not a card: {c!r}")
            if c.index < 1:
                raise DeckError(f"card index must be >= 1, got {c.index}")
            if c.index in seen:
                raise DeckError(f"card {c.index} appears twice")
            seen.add(c.index)

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> Deck:
        return cls(tuple(Card.from_code(c) for c in codes))

    @classmethod
    def parse(cls, text: str) -> Deck:
        """Parse the comma-separated text form, e.g. ``~5,~4,~3,1,6,~2``."""
        cards = []
        for offset, token in enumerate(text.split(",")):
            tok = token.strip()
            up = tok.startswith("~")
            digits = tok[1:] if up else tok
            if not digits.isdigit() or not digits.isascii():
                raise DeckError(f"bad deck token {token!r} at item {offset + 1}")
            cards.append(Card(int(digits), Orientation.FACE_UP if up else Orientation.FACE_DOWN))
        return cls(tuple(cards))

    @classmethod
    def _trusted(cls, codes: Iterable[int]) -> Deck:
        # skips validation; only for codes produced by permutation actions
        d = object.__new__(cls)
        object.__setattr__(d, "cards", tuple(Card.from_code(c) for c in codes))
        return d

    def codes(self) -> tuple[int, ...]:
        return tuple(c.code() for c in self.cards)

    def is_full(self) -> bool:
        return {c.index for c in self.cards} == set(range(1, len(self.cards) + 1))

    def __len__(self) -> int:
        return len(self.cards)

    def __iter__(self):
        return iter(self.cards)

    def __getitem__(self, position: int) -> Card:
        """Card at a 1-based position."""
        if not 1 <= position <= len(self.cards):
            raise IndexError(position)
        return self.cards[position - 1]

    def position_of(self, index: int) -> int:
        for pos, c in enumerate(self.cards, 1):
            if c.index == index:
                return pos
        raise DeckError(f"card {index} is not in the deck")

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.cards)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """One-line signed permutation; ``images[p-1]`` is ``±i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)):
            raise DeckError(f"not a signed permutation: {images}")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(x == p for p, x in enumerate(self.images, 1))

    def encode(self) -> str:
        """Canonical text: the deck this permutation makes from a fresh deck."""
        return format_codes(self.images)

    def __str__(self) -> str:
        return self.encode()


def format_codes(codes: Sequence[int]) -> str:
    return ",".join(("~" + str(-c)) if c < 0 else str(c) for c in codes)


def new_deck(n: int) -> Deck:
    if n < 1:
        raise DeckError(f"deck size must be positive, got {n}")
    return Deck(tuple(Card(i) for i in range(1, n + 1)))


# Raw-tuple kernels, shared with the orbit search.

def act(codes: Sequence[int], images: Sequence[int]) -> tuple[int, ...]:
    return tuple(codes[x - 1] if x > 0 else -codes[-x - 1] for x in images)


def compose_codes(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(q[x - 1] if x > 0 else -q[-x - 1] for x in p)


def invert_codes(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for pos, x in enumerate(p, 1):
        inv[abs(x) - 1] = pos if x > 0 else -pos
    return tuple(inv)


def apply_perm(d: Deck, p: SignedPermutation) -> Deck:
    if len(d) != len(p):
        raise DeckError(f"permutation of length {len(p)} applied to {len(d)} cards")
    src = d.cards
    return Deck(tuple(src[x - 1] if x > 0 else src[-x - 1].flipped() for x in p.images))


def compose(p: SignedPermutation, q: SignedPermutation) -> SignedPermutation:
    """``q`` acts first, then ``p``."""
    if len(p) != len(q):
        raise DeckError(f"cannot compose lengths {len(p)} and {len(q)}")
    return SignedPermutation(compose_codes(p.images, q.images))


def invert(p: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(invert_codes(p.images))


def power(p: SignedPermutation, exponent: int) -> SignedPermutation:
    base = p if exponent >= 0 else invert(p)
    result = SignedPermutation.identity(len(p))
    for _ in range(abs(exponent)):
        result = compose(base, result)
    return result


def deck_as_perm(d: Deck) -> SignedPermutation:
    if not d.is_full():
        raise DeckError("only a deck holding cards 1..n corresponds to a permutation")
    return SignedPermutation(d.codes())


def color_of(card: Card, scheme: ColorScheme) -> Color:
    return scheme.first_color if card.index % 2 == 1 else scheme.first_color.other()
