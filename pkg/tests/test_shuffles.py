import random

import pytest
from hypothesis import given, strategies as st

from conftest import all_decks, decks
from hummer.deck import Deck, DeckError, SignedPermutation, apply_perm, new_deck
from hummer.shuffles import (
    ALPHA,
    BETA,
    MoveKind,
    ProgramError,
    ShuffleError,
    ShuffleMove,
    ShuffleProgram,
    apply_move,
    cut_alpha,
    deal_even,
    delta,
    flip_beta,
    flip_even,
    flip_odd_to_bottom,
    flip_odd_top,
    gamma,
    lam,
    move_as_perm,
    odd_cut_omega,
    omega,
    run_program,
    split_deck,
    stack_decks,
    tau,
)

D = Deck.parse


def all_moves(n):
    moves = [ALPHA]
    if n >= 2:
        moves.append(BETA)
    moves += [delta(k) for k in range(2, n + 1, 2)]
    moves += [gamma(j) for j in range(2, n + 1, 2)]
    moves += [tau(m) for m in range(1, n + 1, 2)]
    moves += [lam(l) for l in range(1, n + 1, 2)]
    moves += [omega(l) for l in range(1, n, 2)]
    return moves + [m.inverted() for m in moves]


def test_cut_alpha():
    assert cut_alpha(D("1")) == D("1")
    assert cut_alpha(new_deck(4)) == D("2,3,4,1")
    assert cut_alpha(D("~2,~1,3,4")) == D("~1,3,4,~2")


def test_flip_beta():
    assert flip_beta(new_deck(4)) == D("~2,~1,3,4")
    assert flip_beta(D("~2,~1,3,4")) == new_deck(4)
    assert flip_beta(new_deck(2)) == D("~2,~1")
    with pytest.raises(ShuffleError):
        flip_beta(new_deck(1))


def test_flip_even():
    assert flip_even(new_deck(6), 4) == D("~4,~3,~2,~1,5,6")
    assert flip_even(flip_even(new_deck(6), 4), 4) == new_deck(6)
    for d in all_decks(4):
        assert flip_even(d, 2) == flip_beta(d)


@pytest.mark.parametrize("k", [3, 0, 8, -2])
def test_flip_even_rejects(k):
    with pytest.raises(ShuffleError):
        flip_even(new_deck(6), k)


def test_deal_even():
    assert deal_even(new_deck(5), 2) == D("3,4,5,2,1")
    assert deal_even(new_deck(7), 4) == D("5,6,7,4,3,2,1")
    assert deal_even(new_deck(3), 2) == D("3,2,1")
    assert deal_even(new_deck(4), 4) == D("4,3,2,1")
    for j in (1, 0, 6):
        with pytest.raises(ShuffleError):
            deal_even(new_deck(5), j)


def test_deal_even_position_formula_discrepancy():
    # A card below the dealt packet moves up by j places, it does not move to j + i.
    n, j = 7, 4
    after = deal_even(new_deck(n), j)
    for i in range(1, n + 1):
        expected = i - j if i > j else n + 1 - i
        assert after.position_of(i) == expected
    # the alternative case formula "j + i" would put card 5 off the end of a 7-card deck
    assert j + 5 > n
    assert after.position_of(5) == 1


def test_flip_odd_top():
    assert flip_odd_top(new_deck(5), 3) == D("~3,~2,~1,4,5")
    assert flip_odd_top(new_deck(5), 1) == D("~1,2,3,4,5")
    assert flip_odd_top(flip_odd_top(new_deck(5), 3), 3) == new_deck(5)
    for m in (2, 0, 7):
        with pytest.raises(ShuffleError):
            flip_odd_top(new_deck(5), m)


def test_flip_odd_to_bottom():
    assert flip_odd_to_bottom(new_deck(5), 3) == D("4,5,~3,~2,~1")
    assert flip_odd_to_bottom(new_deck(3), 1) == D("2,3,~1")
    assert flip_odd_to_bottom(new_deck(1), 1) == D("~1")
    with pytest.raises(ShuffleError):
        flip_odd_to_bottom(new_deck(5), 2)


def test_odd_cut_omega():
    assert odd_cut_omega(new_deck(7), 3) == D("5,6,7,4,1,2,3")
    assert odd_cut_omega(new_deck(3), 1) == D("3,2,1")
    assert odd_cut_omega(new_deck(5), 3) == D("5,4,1,2,3")
    with pytest.raises(ShuffleError):
        odd_cut_omega(new_deck(3), 3)
    with pytest.raises(ShuffleError):
        odd_cut_omega(new_deck(5), 2)


def test_move_as_perm_examples():
    assert move_as_perm(ALPHA, 4) == SignedPermutation((2, 3, 4, 1))
    assert move_as_perm(BETA, 4) == SignedPermutation((-2, -1, 3, 4))
    assert move_as_perm(delta(2), 6) == move_as_perm(BETA, 6)
    with pytest.raises(ShuffleError):
        move_as_perm(delta(3), 6)


def test_move_as_perm_matches_direct_ops_exhaustive():
    for n in range(1, 5):
        for d in all_decks(n):
            for m in all_moves(n):
                assert apply_perm(d, move_as_perm(m, n)) == apply_move(d, m), (n, str(m), str(d))


def test_inverse_moves_undo():
    for n in range(1, 6):
        d = new_deck(n)
        for m in all_moves(n):
            assert apply_move(apply_move(d, m), m.inverted()) == d


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_involutions_exhaustive(n):
    for d in all_decks(n):
        if n >= 2:
            assert flip_beta(flip_beta(d)) == d
        for k in range(2, n + 1, 2):
            assert flip_even(flip_even(d, k), k) == d
        for m in range(1, n + 1, 2):
            assert flip_odd_top(flip_odd_top(d, m), m) == d


@given(decks(min_n=6, max_n=14), st.data())
def test_involutions_random(d, data):
    n = len(d)
    k = data.draw(st.sampled_from(range(2, n + 1, 2)))
    m = data.draw(st.sampled_from(range(1, n + 1, 2)))
    assert flip_even(flip_even(d, k), k) == d
    assert flip_odd_top(flip_odd_top(d, m), m) == d


@given(decks(max_n=12))
def test_alpha_has_order_n(d):
    out = d
    for _ in range(len(d)):
        out = cut_alpha(out)
    assert out == d


def _bookkeeping(before, after):
    """Per card: (position parity changed, orientation changed)."""
    out = {}
    for c in after:
        p0 = before.position_of(c.index)
        p1 = after.position_of(c.index)
        out[c.index] = ((p0 - p1) % 2 == 1, before[p0].face_up != c.face_up)
    return out


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_parity_bookkeeping_odd_decks(n):
    rng = random.Random(n)
    for _ in range(20):
        d = Deck.from_codes(rng.choice((1, -1)) * x for x in rng.sample(range(1, n + 1), n))
        for j in range(2, n + 1, 2):
            assert set(_bookkeeping(d, deal_even(d, j)).values()) <= {(False, False)}
        for l in range(1, n, 2):
            assert set(_bookkeeping(d, odd_cut_omega(d, l)).values()) <= {(False, False)}
        for k in range(2, n + 1, 2):
            book = _bookkeeping(d, flip_even(d, k))
            for i, flags in book.items():
                touched = d.position_of(i) <= k
                assert flags == ((True, True) if touched else (False, False))
        for l in range(1, n + 1, 2):
            for moved, turned in _bookkeeping(d, flip_odd_to_bottom(d, l)).values():
                assert moved != turned


def test_run_program():
    d6 = new_deck(6)
    assert run_program(d6, ShuffleProgram()) == d6
    assert str(run_program(d6, ShuffleProgram.of(delta(2), ALPHA, delta(4)))) == "~5,~4,~3,1,6,~2"
    assert str(run_program(d6, ShuffleProgram.of(delta(4)))) == "~4,~3,~2,~1,5,6"
    assert run_program(new_deck(5), ShuffleProgram(((ALPHA, 3),))) == D("4,5,1,2,3")


def test_run_program_reports_bad_position():
    with pytest.raises(ProgramError) as info:
        run_program(new_deck(4), ShuffleProgram.of(ALPHA, BETA, gamma(6)))
    assert info.value.position == 3


def test_move_parameter_shape():
    with pytest.raises(ShuffleError):
        ShuffleMove(MoveKind.DELTA)
    with pytest.raises(ShuffleError):
        ShuffleMove(MoveKind.ALPHA, 2)
    with pytest.raises(ShuffleError):
        ShuffleProgram(((ALPHA, 0),))


def test_split_and_stack():
    top, bottom = split_deck(new_deck(3), 1)
    assert top == D("1") and bottom == D("2,3")
    assert stack_decks(top, bottom) == new_deck(3)
    top, bottom = split_deck(new_deck(20), 7)
    assert (len(top), len(bottom)) == (7, 13)
    assert [c.index for c in bottom] == list(range(8, 21))
    for c in (0, 20):
        with pytest.raises(DeckError):
            split_deck(new_deck(20), c)


@given(decks(min_n=2, max_n=12), st.data())
def test_split_stack_round_trip(d, data):
    c = data.draw(st.integers(1, len(d) - 1))
    assert stack_decks(*split_deck(d, c)) == d


def test_moves_on_sub_decks_depend_only_on_length():
    _, pile = split_deck(new_deck(20), 7)
    dealt = deal_even(pile, 2)
    assert [c.index for c in dealt] == list(range(10, 21)) + [9, 8]
