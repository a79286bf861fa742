"""Sokoban: push boxes onto goal cells with four-directional moves.

Boxes can only be pushed, never pulled.  Every player move is one action;
a move into a box pushes it one cell further when that cell is free.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction
from ..types import GameId

DIRS = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}
DIR_ORDER = ("up", "down", "left", "right")


@dataclass(frozen=True)
class SokobanState:
    width: int
    height: int
    walls: frozenset
    player: tuple
    boxes: frozenset
    goals: frozenset

    def __post_init__(self):
        if self.player in self.walls or self.player in self.boxes:
            raise ValueError("player overlaps wall or box")
        if self.boxes & self.walls:
            raise ValueError("box inside wall")
        if len(self.boxes) != len(self.goals) or not self.boxes:
            raise ValueError("need equally many boxes and goals, at least one")


def parse_grid(text: str) -> SokobanState:
    """Build a state from rows of '#', '.', '@', 'O', 'X', '*', '+' (rows split on '/')."""
    rows = text.strip().split("/")
    height, width = len(rows), len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged grid")
    walls, boxes, goals = set(), set(), set()
    player = None
    for r, row in enumerate(rows):
        for c, ch in enumerate(row):
            cell = (r, c)
            if ch == "#":
                walls.add(cell)
            elif ch == "@":
                player = cell
            elif ch == "O":
                boxes.add(cell)
            elif ch == "X":
                goals.add(cell)
            elif ch == "*":
                boxes.add(cell)
                goals.add(cell)
            elif ch == "+":
                player = cell
                goals.add(cell)
            elif ch != ".":
                raise ValueError(f"unknown grid char {ch!r}")
    return SokobanState(width, height, frozenset(walls), player, frozenset(boxes), frozenset(goals))


def grid_string(state: SokobanState) -> str:
    """Row-major grid with row breaks stripped, for the state-JSON channel."""
    out = []
    for r in range(state.height):
        for c in range(state.width):
            cell = (r, c)
            if cell in state.walls:
                out.append("#")
            elif cell == state.player:
                out.append("+" if cell in state.goals else "@")
            elif cell in state.boxes:
                out.append("*" if cell in state.goals else "O")
            elif cell in state.goals:
                out.append("X")
            else:
                out.append(".")
    return "".join(out)


def _inside(state, cell) -> bool:
    return 0 <= cell[0] < state.height and 0 <= cell[1] < state.width


def apply(state: SokobanState, act: ActionToken) -> SokobanState:
    dr, dc = DIRS[act.op]
    target = (state.player[0] + dr, state.player[1] + dc)
    if not _inside(state, target) or target in state.walls:
        raise IllegalAction("blocked by wall")
    if target in state.boxes:
        beyond = (target[0] + dr, target[1] + dc)
        if not _inside(state, beyond) or beyond in state.walls:
            raise IllegalAction("push blocked by wall")
        if beyond in state.boxes:
            raise IllegalAction("push blocked by box")
        boxes = (state.boxes - {target}) | {beyond}
        return replace(state, player=target, boxes=frozenset(boxes))
    return replace(state, player=target)


def is_goal(state: SokobanState) -> bool:
    return state.boxes == state.goals


def legal_actions(state: SokobanState):
    out = []
    for d in DIR_ORDER:
        try:
            apply(state, ActionToken(GameId.SOKOBAN, d))
        except IllegalAction:
            continue
        out.append(ActionToken(GameId.SOKOBAN, d))
    return out
