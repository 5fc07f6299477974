"""Shuffle maps on oriented decks, the signed-permutation groups they
generate, and the invariants those groups preserve."""
from .deck import (
    Card,
    Color,
    ColorScheme,
    Deck,
    DeckError,
    Orientation,
    SignedPermutation,
    apply_perm,
    color_of,
    compose,
    deck_as_perm,
    invert,
    new_deck,
)
from .shuffles import (
    MoveKind,
    ShuffleError,
    ShuffleMove,
    ShuffleProgram,
    cut_alpha,
    deal_even,
    flip_beta,
    flip_even,
    flip_odd_to_bottom,
    flip_odd_top,
    move_as_perm,
    odd_cut_omega,
    run_program,
    split_deck,
    stack_decks,
)

__version__ = "0.1.0"
