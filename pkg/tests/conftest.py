from itertools import permutations, product

import pytest
from hypothesis import strategies as st

from hummer.deck import Deck, SignedPermutation


def all_signed(n):
    """Every signed permutation of length n, as code tuples."""
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, perm))


def all_decks(n):
    return [Deck.from_codes(c) for c in all_signed(n)]


@st.composite
def signed_perms(draw, min_n=1, max_n=9, n=None):
    size = n if n is not None else draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(list(range(1, size + 1))))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=size, max_size=size))
    return SignedPermutation(tuple(s * x for s, x in zip(signs, perm)))


@st.composite
def decks(draw, min_n=1, max_n=9, n=None):
    return Deck.from_codes(draw(signed_perms(min_n=min_n, max_n=max_n, n=n)).images)


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""
    def record(number, title, ok):
        _ACCEPTANCE.append((number, title, bool(ok)))
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}  {title}")
