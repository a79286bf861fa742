"""Bloxorz: roll a 1x1x2 block until it stands on the goal cell.

Tile codes: '.' solid, '~' fragile, 'x' broken, '_' absent.  A fragile tile
may be stood or lain on, but breaks the moment the block leaves it; broken
and absent cells can never be entered.  The goal counts only when the block
is standing on it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction
from ..types import GameId

SOLID, FRAGILE, BROKEN, ABSENT = ".", "~", "x", "_"

STANDING, LYING_X, LYING_Y = "standing", "lying_x", "lying_y"

DIR_ORDER = ("up", "down", "left", "right")


def covered_cells(block, orientation):
    r, c = block
    if orientation == STANDING:
        return ((r, c),)
    if orientation == LYING_X:
        return ((r, c), (r, c + 1))
    return ((r, c), (r + 1, c))


@dataclass(frozen=True)
class BloxorzState:
    width: int
    height: int
    tiles: tuple  # tuple of row strings over the tile codes
    goal: tuple
    block: tuple  # (row, col) anchor: topmost/leftmost covered cell
    orientation: str

    def cells(self):
        return covered_cells(self.block, self.orientation)

    def tile(self, cell) -> str:
        r, c = cell
        if not (0 <= r < self.height and 0 <= c < self.width):
            return ABSENT
        return self.tiles[r][c]

    def has_fragile(self) -> bool:
        return any(FRAGILE in row for row in self.tiles)

    def __post_init__(self):
        for cell in self.cells():
            if self.tile(cell) in (BROKEN, ABSENT):
                raise ValueError(f"block rests on missing tile {cell}")


def rolled(block, orientation, direction):
    """Pure rigid-body roll: new (anchor, orientation)."""
    r, c = block
    if orientation == STANDING:
        if direction == "up":
            return (r - 2, c), LYING_Y
        if direction == "down":
            return (r + 1, c), LYING_Y
        if direction == "left":
            return (r, c - 2), LYING_X
        return (r, c + 1), LYING_X
    if orientation == LYING_X:
        if direction == "left":
            return (r, c - 1), STANDING
        if direction == "right":
            return (r, c + 2), STANDING
        if direction == "up":
            return (r - 1, c), LYING_X
        return (r + 1, c), LYING_X
    # LYING_Y
    if direction == "up":
        return (r - 1, c), STANDING
    if direction == "down":
        return (r + 2, c), STANDING
    if direction == "left":
        return (r, c - 1), LYING_Y
    return (r, c + 1), LYING_Y


def apply(state: BloxorzState, act: ActionToken) -> BloxorzState:
    new_block, new_orient = rolled(state.block, state.orientation, act.op)
    cells_after = covered_cells(new_block, new_orient)
    for cell in cells_after:
        if state.tile(cell) in (BROKEN, ABSENT):
            raise IllegalAction(f"no tile under {cell}")
    departed = set(state.cells()) - set(cells_after)
    tiles = state.tiles
    for cell in departed:
        if state.tile(cell) == FRAGILE:
            r, c = cell
            row = tiles[r]
            tiles = tiles[:r] + (row[:c] + BROKEN + row[c + 1 :],) + tiles[r + 1 :]
    return replace(state, tiles=tiles, block=new_block, orientation=new_orient)


def is_goal(state: BloxorzState) -> bool:
    return state.orientation == STANDING and state.block == state.goal


def legal_actions(state: BloxorzState):
    out = []
    for d in DIR_ORDER:
        try:
            apply(state, ActionToken(GameId.BLOXORZ, d))
        except IllegalAction:
            continue
        out.append(ActionToken(GameId.BLOXORZ, d))
    return out


def grid_string(state: BloxorzState) -> str:
    """Row-major map with the block drawn over tiles ('S' standing, '=' lying
    along x, 'H' lying along y) and 'G' marking the goal."""
    marks = {}
    for cell in state.cells():
        if state.orientation == STANDING:
            marks[cell] = "S"
        elif state.orientation == LYING_X:
            marks[cell] = "="
        else:
            marks[cell] = "H"
    out = []
    for r in range(state.height):
        for c in range(state.width):
            cell = (r, c)
            if cell in marks:
                out.append(marks[cell])
            elif cell == state.goal:
                out.append("G")
            else:
                out.append(state.tiles[r][c])
    return "".join(out)


def broken_count(state: BloxorzState) -> int:
    return sum(row.count(BROKEN) for row in state.tiles)


def goal_distance(state: BloxorzState) -> int:
    """Manhattan distance from the block anchor to the goal cell."""
    return abs(state.block[0] - state.goal[0]) + abs(state.block[1] - state.goal[1])
