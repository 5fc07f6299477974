"""The shuffle maps, both as deck operations and as signed permutations.

The deck operations below are written directly with slicing; the
permutations come from position formulas in :func:`move_as_perm`. The two
routes are kept separate on purpose so each can check the other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .deck import Deck, DeckError, SignedPermutation, apply_perm, invert


class ShuffleError(ValueError):
    """A move whose parameter has the wrong parity or is out of range."""


class ProgramError(ShuffleError):
    def __init__(self, message: str, position: int):
        super().__init__(f"move {position}: {message}")
        self.position = position


class MoveKind(enum.Enum):
    ALPHA = "a"
    BETA = "b"
    DELTA = "d"   # flip an even top packet
    GAMMA = "g"   # deal an even packet to the bottom
    TAU = "t"     # flip an odd top packet
    LAMBDA = "l"  # flip an odd packet onto the bottom
    OMEGA = "w"   # odd cut variant

    @property
    def takes_param(self) -> bool:
        return self not in (MoveKind.ALPHA, MoveKind.BETA)


_EVEN = {MoveKind.DELTA, MoveKind.GAMMA}
_ODD = {MoveKind.TAU, MoveKind.LAMBDA, MoveKind.OMEGA}


@dataclass(frozen=True)
class ShuffleMove:
    kind: MoveKind
    param: int | None = None
    inverse: bool = False

    def __post_init__(self):
        if self.kind.takes_param and self.param is None:
            raise ShuffleError(f"move {self.kind.value} needs a packet size")
        if not self.kind.takes_param and self.param is not None:
            raise ShuffleError(f"move {self.kind.value} takes no packet size")

    def check(self, n: int) -> None:
        """Raise :class:`ShuffleError` unless the move is legal on ``n`` cards."""
        kind, x = self.kind, self.param
        if n < 1:
            raise ShuffleError(f"deck size must be positive, got {n}")
        if kind is MoveKind.BETA and n < 2:
            raise ShuffleError("b needs at least 2 cards")
        if kind in _EVEN:
            if x % 2:
                raise ShuffleError(f"{kind.value}{x}: packet size must be even")
            if not 2 <= x <= n:
                raise ShuffleError(f"{kind.value}{x}: packet size must be in 2..{n}")
        if kind in _ODD:
            if x % 2 == 0:
                raise ShuffleError(f"{kind.value}{x}: packet size must be odd")
            top = n - 1 if kind is MoveKind.OMEGA else n
            if not 1 <= x <= top:
                raise ShuffleError(f"{kind.value}{x}: packet size must be in 1..{top}")

    def inverted(self) -> ShuffleMove:
        return ShuffleMove(self.kind, self.param, not self.inverse)

    def __str__(self) -> str:
        s = self.kind.value + ("" if self.param is None else str(self.param))
        return s + ("'" if self.inverse else "")


ALPHA = ShuffleMove(MoveKind.ALPHA)
BETA = ShuffleMove(MoveKind.BETA)


def delta(k): return ShuffleMove(MoveKind.DELTA, k)
def gamma(j): return ShuffleMove(MoveKind.GAMMA, j)
def tau(m): return ShuffleMove(MoveKind.TAU, m)
def lam(l): return ShuffleMove(MoveKind.LAMBDA, l)
def omega(l): return ShuffleMove(MoveKind.OMEGA, l)


@dataclass(frozen=True)
class ShuffleProgram:
    """Moves with repetition counts, applied first to last."""

    steps: tuple[tuple[ShuffleMove, int], ...] = field(default=())

    def __post_init__(self):
        steps = tuple((m, int(r)) for m, r in self.steps)
        for m, r in steps:
            if r < 1:
                raise ShuffleError(f"repetition of {m} must be >= 1, got {r}")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def of(cls, *moves: ShuffleMove) -> ShuffleProgram:
        return cls(tuple((m, 1) for m in moves))

    def expanded(self) -> list[ShuffleMove]:
        return [m for m, r in self.steps for _ in range(r)]

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return " ".join(str(m) + (f"^{r}" if r != 1 else "") for m, r in self.steps)


# -- deck operations ---------------------------------------------------------

def _flip_top(d: Deck, count: int) -> Deck:
    cards = d.cards
    return Deck(tuple(c.flipped() for c in reversed(cards[:count])) + cards[count:])


def cut_alpha(d: Deck) -> Deck:
    cards = d.cards
    return Deck(cards[1:] + cards[:1])


def flip_beta(d: Deck) -> Deck:
    BETA.check(len(d))
    return _flip_top(d, 2)


def flip_even(d: Deck, k: int) -> Deck:
    delta(k).check(len(d))
    return _flip_top(d, k)


def deal_even(d: Deck, j: int) -> Deck:
    gamma(j).check(len(d))
    cards = d.cards
    return Deck(cards[j:] + tuple(reversed(cards[:j])))


def flip_odd_top(d: Deck, m: int) -> Deck:
    tau(m).check(len(d))
    return _flip_top(d, m)


def flip_odd_to_bottom(d: Deck, l: int) -> Deck:
    lam(l).check(len(d))
    cards = d.cards
    return Deck(cards[l:] + tuple(c.flipped() for c in reversed(cards[:l])))


def odd_cut_omega(d: Deck, l: int) -> Deck:
    omega(l).check(len(d))
    cards = d.cards
    return Deck(cards[l + 1:] + (cards[l],) + cards[:l])


_DIRECT = {
    MoveKind.ALPHA: lambda d, _: cut_alpha(d),
    MoveKind.BETA: lambda d, _: flip_beta(d),
    MoveKind.DELTA: flip_even,
    MoveKind.GAMMA: deal_even,
    MoveKind.TAU: flip_odd_top,
    MoveKind.LAMBDA: flip_odd_to_bottom,
    MoveKind.OMEGA: odd_cut_omega,
}


def apply_move(d: Deck, move: ShuffleMove) -> Deck:
    if move.inverse:
        return apply_perm(d, move_as_perm(move, len(d)))
    return _DIRECT[move.kind](d, move.param)


# -- permutations ------------------------------------------------------------

def _images(kind: MoveKind, x: int | None, n: int) -> list[int]:
    out = []
    for q in range(1, n + 1):
        if kind is MoveKind.ALPHA:
            out.append(q + 1 if q < n else 1)
        elif kind is MoveKind.BETA:
            out.append(-(3 - q) if q <= 2 else q)
        elif kind in (MoveKind.DELTA, MoveKind.TAU):
            out.append(-(x + 1 - q) if q <= x else q)
        elif kind is MoveKind.GAMMA:
            out.append(x + q if q <= n - x else n + 1 - q)
        elif kind is MoveKind.LAMBDA:
            out.append(x + q if q <= n - x else -(n + 1 - q))
        else:  # OMEGA
            if q < n - x:
                out.append(x + 1 + q)
            elif q == n - x:
                out.append(x + 1)
            else:
                out.append(q - (n - x))
    return out


def move_as_perm(move: ShuffleMove, n: int) -> SignedPermutation:
    move.check(n)
    p = SignedPermutation(tuple(_images(move.kind, move.param, n)))
    return invert(p) if move.inverse else p


def run_program(d: Deck, prog: ShuffleProgram) -> Deck:
    n = len(d)
    for pos, (move, _) in enumerate(prog.steps, 1):
        try:
            move.check(n)
        except ShuffleError as exc:
            raise ProgramError(str(exc), pos) from None
    for move, reps in prog.steps:
        for _ in range(reps):
            d = apply_move(d, move)
    return d


def split_deck(d: Deck, top_count: int) -> tuple[Deck, Deck]:
    if not 1 <= top_count <= len(d) - 1:
        raise DeckError(f"split point must be in 1..{len(d) - 1}, got {top_count}")
    return Deck(d.cards[:top_count]), Deck(d.cards[top_count:])


def stack_decks(top: Deck, bottom: Deck) -> Deck:
    return Deck(top.cards + bottom.cards)
