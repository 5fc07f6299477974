"""Named shuffle families: their generators, random-word alphabets and invariants."""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable

from .deck import ColorScheme, Deck
from .grouplab import GeneratorSet
from .invariants import (
    alternation_by_position,
    hummer_balance,
    strict_parity_relation,
    uniform_parity_relation,
)
from .shuffles import ALPHA, BETA, ShuffleMove, delta, gamma, lam, omega, tau


class FamilyError(ValueError):
    pass


def hummer_and_uniform(d: Deck) -> bool:
    return hummer_balance(d) and uniform_parity_relation(d)


@dataclass(frozen=True)
class Family:
    name: str
    parity: int  # required deck-size parity: 0 even, 1 odd
    invariant: str
    predicate: Callable[[Deck], bool]

    def check_size(self, n: int) -> None:
        if n < 1 or n % 2 != self.parity:
            need = "even" if self.parity == 0 else "odd"
            raise FamilyError(f"family {self.name} needs an {need} deck size, got {n}")


_ALTERNATING = partial(alternation_by_position, scheme=ColorScheme())

FAMILIES = {
    "cato": Family("cato", 0, "hummer_balance+uniform_parity_relation", hummer_and_uniform),
    "dato": Family("dato", 1, "strict_parity_relation", strict_parity_relation),
    "dato-ext": Family("dato-ext", 1, "uniform_parity_relation", uniform_parity_relation),
    "tau-even": Family("tau-even", 0, "alternation_by_position", _ALTERNATING),
    "tau-odd": Family("tau-odd", 1, "alternation_by_position", _ALTERNATING),
}


def _evens(n):
    return range(2, n + 1, 2)


def _odds(n, top=None):
    return range(1, (n if top is None else top) + 1, 2)


def generator_moves(family: str, n: int) -> list[ShuffleMove]:
    """Generators used for exhaustive enumeration, every valid parameter included."""
    if family == "cato":
        return [ALPHA, BETA]
    if family == "dato":
        return [gamma(j) for j in _evens(n)] + [delta(k) for k in _evens(n)]
    if family == "dato-ext":
        return (generator_moves("dato", n) + [lam(l) for l in _odds(n)]
                + [omega(l) for l in _odds(n, n - 1)])
    if family == "tau-even":
        return [tau(m) for m in _odds(n)] + [ALPHA]
    if family == "tau-odd":
        return [tau(m) for m in _odds(n)] + [gamma(j) for j in _evens(n)]
    raise FamilyError(f"unknown family {family!r}")


def word_moves(family: str, n: int) -> list[ShuffleMove]:
    """Alphabet for random words: each (move, parameter) pair drawn uniformly."""
    if family == "cato":
        return [ALPHA] + [delta(k) for k in _evens(n)]
    return generator_moves(family, n)


def family_generators(family: str, n: int) -> GeneratorSet:
    fam = get_family(family)
    fam.check_size(n)
    return GeneratorSet.from_moves(family, generator_moves(family, n), n)


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise FamilyError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
