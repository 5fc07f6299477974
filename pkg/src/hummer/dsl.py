"""Parser for shuffle programs such as ``d2 a d4`` or ``g2 a'^3``.

Grammar::

    program := move (WS+ move)*
    move    := base ["'"] ["^" UINT]
    base    := "a" | "b" | ("d" | "g" | "t" | "l" | "w") UINT
    WS      := " " | "\\t"

Letters stand for cut, flip-two, even flip, even deal, odd flip, odd flip
to bottom and odd cut. A quote inverts the move; ``^k`` repeats it k times.
Blank input is the empty program.
"""
from __future__ import annotations

from .shuffles import MoveKind, ShuffleError, ShuffleMove, ShuffleProgram

_WS = " \t"
_LETTERS = {k.value: k for k in MoveKind}


class ProgramParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


class ProgramSyntaxError(ProgramParseError):
    def __init__(self, offset: int, expected: str, found: str):
        super().__init__(f"expected {expected}, found {found}", offset)
        self.expected = expected


class ProgramSemanticError(ProgramParseError):
    pass


def _describe(src: str, pos: int) -> str:
    return "end of input" if pos >= len(src) else repr(src[pos])


def _digits(src: str, pos: int) -> tuple[int | None, int]:
    end = pos
    while end < len(src) and src[end] in "0123456789":
        end += 1
    return (int(src[pos:end]) if end > pos else None), end


def parse_program(src: str, n: int) -> ShuffleProgram:
    """Parse ``src`` and check every move against a deck of ``n`` cards."""
    steps = []
    pos = 0
    size = len(src)
    while pos < size and src[pos] in _WS:
        pos += 1
    while pos < size:
        start = pos
        letter = src[pos]
        if letter not in _LETTERS:
            raise ProgramSyntaxError(pos, "a move letter (a b d g t l w)", _describe(src, pos))
        kind = _LETTERS[letter]
        pos += 1
        param = None
        if kind.takes_param:
            param, pos = _digits(src, pos)
            if param is None:
                raise ProgramSyntaxError(pos, f"a packet size after {letter!r}", _describe(src, pos))
        inverse = pos < size and src[pos] == "'"
        if inverse:
            pos += 1
        reps = 1
        if pos < size and src[pos] == "^":
            reps, pos = _digits(src, pos + 1)
            if reps is None:
                raise ProgramSyntaxError(pos, "a repetition count after '^'", _describe(src, pos))
            if reps < 1:
                raise ProgramSemanticError(f"repetition count must be >= 1, got {reps}", start)
        if pos < size and src[pos] not in _WS:
            raise ProgramSyntaxError(pos, "whitespace or end of input", _describe(src, pos))
        move = ShuffleMove(kind, param, inverse)
        try:
            move.check(n)
        except ShuffleError as exc:
            raise ProgramSemanticError(str(exc), start) from None
        steps.append((move, reps))
        while pos < size and src[pos] in _WS:
            pos += 1
    return ShuffleProgram(tuple(steps))


def format_program(prog: ShuffleProgram) -> str:
    return str(prog)
