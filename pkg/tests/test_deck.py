import pytest
from hypothesis import given

from conftest import all_decks, all_signed, decks, signed_perms
from hummer.deck import (
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

BETA4 = SignedPermutation((-2, -1, 3, 4))
ALPHA4 = SignedPermutation((2, 3, 4, 1))


@pytest.mark.parametrize("n, text", [(1, "1"), (4, "1,2,3,4"), (6, "1,2,3,4,5,6")])
def test_new_deck(n, text):
    d = new_deck(n)
    assert str(d) == text
    assert all(c.orientation is Orientation.FACE_DOWN for c in d)


def test_new_deck_rejects_zero():
    with pytest.raises(DeckError):
        new_deck(0)


def test_deck_rejects_repeats_and_bad_indices():
    with pytest.raises(DeckError):
        Deck.parse("1,2,2")
    with pytest.raises(DeckError):
        Deck.parse("0,1")
    with pytest.raises(DeckError):
        Deck.parse("1,x")
    with pytest.raises(DeckError):
        Deck.parse("")


def test_text_format():
    d = Deck.parse(" ~5, ~4,~3 ,1,6,~2 ")
    assert str(d) == "~5,~4,~3,1,6,~2"
    assert Deck.parse(str(d)) == d


@given(decks())
def test_text_round_trip(d):
    assert Deck.parse(str(d)) == d


def test_apply_perm_examples():
    d = new_deck(4)
    assert apply_perm(d, SignedPermutation.identity(4)) == d
    flipped = apply_perm(d, BETA4)
    assert str(flipped) == "~2,~1,3,4"
    assert apply_perm(flipped, BETA4) == d
    assert str(d) == "1,2,3,4"  # input untouched


def test_apply_perm_length_mismatch():
    with pytest.raises(DeckError):
        apply_perm(new_deck(3), BETA4)
    with pytest.raises(DeckError):
        compose(BETA4, SignedPermutation.identity(3))


def test_compose_examples():
    ident = SignedPermutation.identity(4)
    assert compose(ident, BETA4) == BETA4
    assert compose(BETA4, BETA4) == ident
    alpha2 = SignedPermutation((2, 1))
    assert compose(alpha2, alpha2).is_identity()


def test_beta_squared_by_brute_force():
    # every one of the 2^4 * 4! oriented arrangements returns after two flips
    for d in all_decks(4):
        assert apply_perm(apply_perm(d, BETA4), BETA4) == d


def test_invert_examples():
    assert invert(SignedPermutation.identity(5)).is_identity()
    right_shift = invert(ALPHA4)
    assert right_shift == SignedPermutation((4, 1, 2, 3))
    assert compose(ALPHA4, right_shift).is_identity()
    d4 = SignedPermutation((-4, -3, -2, -1, 5, 6))
    assert invert(d4) == d4


def test_composition_law_exhaustive_small():
    for n in (1, 2, 3):
        perms = [SignedPermutation(c) for c in all_signed(n)]
        ds = all_decks(n)
        for p in perms:
            for q in perms:
                pq = compose(p, q)
                for d in ds[:: max(1, len(ds) // 6)]:
                    assert apply_perm(d, pq) == apply_perm(apply_perm(d, q), p)


@given(signed_perms(n=7), signed_perms(n=7), decks(n=7))
def test_composition_law(p, q, d):
    assert apply_perm(d, compose(p, q)) == apply_perm(apply_perm(d, q), p)


@given(signed_perms())
def test_inverse_laws(p):
    assert compose(p, invert(p)).is_identity()
    assert compose(invert(p), p).is_identity()
    assert invert(invert(p)) == p


@given(signed_perms())
def test_deck_as_perm_round_trip(p):
    assert deck_as_perm(apply_perm(new_deck(len(p)), p)) == p


@given(signed_perms())
def test_unsigned_twice_keeps_orientation(p):
    unsigned = SignedPermutation(tuple(abs(x) for x in p.images))
    twice = apply_perm(apply_perm(new_deck(len(p)), unsigned), unsigned)
    assert not any(c.face_up for c in twice)


def test_deck_as_perm_examples():
    assert deck_as_perm(new_deck(4)).is_identity()
    assert deck_as_perm(Deck.parse("~2,~1,3,4")) == BETA4
    assert deck_as_perm(Deck.parse("~4,~3,~2,~1,5,6")) == SignedPermutation((-4, -3, -2, -1, 5, 6))
    with pytest.raises(DeckError):
        deck_as_perm(Deck.parse("3,5"))


def test_color_of():
    black = ColorScheme(Color.BLACK)
    assert color_of(Card(1), black) is Color.BLACK
    assert color_of(Card(2), black) is Color.RED
    assert color_of(Card(5), ColorScheme(Color.RED)) is Color.RED
    assert color_of(Card(5, Orientation.FACE_UP), ColorScheme(Color.RED)) is Color.RED


def test_signed_permutation_validation():
    with pytest.raises(DeckError):
        SignedPermutation((1, 1))
    with pytest.raises(DeckError):
        SignedPermutation((1, 3))
