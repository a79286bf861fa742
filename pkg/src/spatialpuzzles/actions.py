"""Canonical action grammar: parsing and rendering of action tokens.

The wire format is bit-exact: lowercase operators, no interior whitespace,
comma-separated integer/identifier arguments, parentheses required only when
an operator takes arguments.  Parsing is case-sensitive and reports the byte
offset of the first violation.  `parse(render(a)) == a` for every legal action.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .types import GameId

_OP_RE = re.compile(r"[a-z_]+")
_INT_RE = re.compile(r"-?\d+")


@dataclass(frozen=True)
class ActionToken:
    game: GameId
    op: str
    args: tuple = ()

    @property
    def text(self) -> str:
        return render_action(self)


# Argument kinds.  Each is (validator, description); validators return the
# typed value or None on mismatch.

def _arg_dir(s):
    return s if s in ("up", "down", "left", "right") else None


def _arg_int(minimum):
    def check(s):
        if not _INT_RE.fullmatch(s):
            return None
        v = int(s)
        return v if v >= minimum else None

    return check


def _arg_vehicle(s):
    return s if len(s) == 1 and "A" <= s <= "Z" else None


def _arg_piece(s):
    if len(s) >= 2 and s[0] == "P" and s[1:].isdigit():
        return s
    return None


def _arg_deg45(s):
    if s.isdigit():
        v = int(s)
        if 0 <= v < 360 and v % 45 == 0:
            return v
    return None


def _arg_deg90(s):
    if s.isdigit():
        v = int(s)
        if 0 <= v < 360 and v % 90 == 0:
            return v
    return None


def _arg_cwccw(s):
    return s if s in ("cw", "ccw") else None


def _arg_slot(s):
    return s if len(s) == 1 and "A" <= s <= "Z" else None


def _arg_glyph(s):
    return s if len(s) == 1 and (s.isdigit() or "A" <= s <= "Z") else None


def _arg_word(s):
    return s if s and all("a" <= c <= "z" for c in s) else None


def _arg_signed15(s):
    if s in ("+15", "-15"):
        return 15 if s[0] == "+" else -15
    return None


def _arg_axis(s):
    return s if s in ("x", "y", "z") else None


_MOVE_OPS = {"up": (), "down": (), "left": (), "right": ()}

#: Operator signatures per game: op name -> tuple of argument validators.
GRAMMARS: dict[GameId, dict[str, tuple]] = {
    GameId.SOKOBAN: _MOVE_OPS,
    GameId.BLOXORZ: _MOVE_OPS,
    GameId.RUSH_HOUR: {"slide": (_arg_vehicle, _arg_dir, _arg_int(1))},
    GameId.TANGRAM: {
        "rotate": (_arg_piece, _arg_deg45),
        "place": (_arg_piece, _arg_int(0), _arg_int(0)),
    },
    GameId.JIGSAW: {
        "rotate": (_arg_piece, _arg_cwccw),
        "place": (_arg_piece, _arg_int(0), _arg_int(0)),
    },
    GameId.CHAR_RECOGNITION: {
        "rotate": (_arg_int(0), _arg_deg90),
        "place": (_arg_int(0), _arg_slot),
        "identify": (_arg_glyph,),
    },
    GameId.SHAPE_MATCH_2D: {"rotate": (_arg_signed15,)},
    GameId.SHAPE_MATCH_3D: {"rotate": (_arg_axis, _arg_signed15)},
    GameId.ANAGRAM: {
        "swap": (_arg_int(0), _arg_int(0)),
        "identify": (_arg_word,),
    },
}
GRAMMARS[GameId.TANGRAM_CERTIFICATE] = GRAMMARS[GameId.TANGRAM]
GRAMMARS[GameId.MENTAL_ROTATION_2D] = GRAMMARS[GameId.SHAPE_MATCH_2D]
GRAMMARS[GameId.MENTAL_ROTATION_3D] = GRAMMARS[GameId.SHAPE_MATCH_3D]


def parse_action(game: GameId, text: str) -> ActionToken:
    """Parse one action token; surrounding whitespace is ignored.

    Raises ParseError carrying the byte offset of the first violation in
    `text`.
    """
    game = GameId(game)
    grammar = GRAMMARS[game]

    start = 0
    end = len(text)
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start == end:
        raise ParseError("empty action", start)

    m = _OP_RE.match(text, start)
    if not m:
        raise ParseError("expected operator name", start)
    op = m.group(0)
    if op not in grammar:
        raise ParseError(f"unknown operator {op!r} for {game.value}", start)
    sig = grammar[op]
    pos = m.end()

    if not sig:
        if pos != end:
            raise ParseError("unexpected text after operator", pos)
        return ActionToken(game, op)

    if pos >= end or text[pos] != "(":
        raise ParseError("expected '('", pos)
    pos += 1
    args = []
    for i, validator in enumerate(sig):
        close = "," if i + 1 < len(sig) else ")"
        sep = text.find(close, pos, end)
        if sep < 0:
            raise ParseError(f"expected {close!r}", pos)
        raw = text[pos:sep]
        value = validator(raw)
        if value is None:
            raise ParseError(f"bad argument {raw!r} for {op}", pos)
        args.append(value)
        pos = sep + 1
    if pos != end:
        raise ParseError("unexpected text after ')'", pos)
    return ActionToken(game, op, tuple(args))


def render_action(token: ActionToken) -> str:
    """Render the canonical wire form of a token."""
    if not token.args:
        return token.op
    parts = []
    grammar_sig = GRAMMARS[token.game][token.op]
    for value, validator in zip(token.args, grammar_sig):
        if validator is _arg_signed15:
            parts.append(f"+{value}" if value > 0 else str(value))
        else:
            parts.append(str(value))
    return f"{token.op}({','.join(parts)})"


def action(game: GameId, op: str, *args) -> ActionToken:
    """Build a token directly; round-trips through the parser as a check."""
    tok = ActionToken(GameId(game), op, tuple(args))
    return parse_action(tok.game, render_action(tok))
