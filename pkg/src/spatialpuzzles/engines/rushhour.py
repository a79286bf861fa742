"""Rush hour: slide vehicles on a 6x6 grid to free car A to the right edge.

One slide of any distance is a single action.  Car A is horizontal, length 2,
on the exit row; the puzzle is solved when A's right end reaches the exit
column (the right edge).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction
from ..types import GameId

BOARD = 6
EXIT_COL = BOARD - 1

HORIZONTAL, VERTICAL = "horizontal", "vertical"
DIR_ORDER = ("up", "down", "left", "right")


@dataclass(frozen=True)
class Vehicle:
    letter: str
    orientation: str
    length: int
    row: int
    col: int  # anchor: leftmost/topmost cell

    def cells(self):
        if self.orientation == HORIZONTAL:
            return tuple((self.row, self.col + i) for i in range(self.length))
        return tuple((self.row + i, self.col) for i in range(self.length))


@dataclass(frozen=True)
class RushHourState:
    vehicles: tuple  # sorted by letter
    exit_row: int

    def __post_init__(self):
        seen = set()
        letters = [v.letter for v in self.vehicles]
        if letters != sorted(letters) or len(set(letters)) != len(letters):
            raise ValueError("vehicles must be unique and sorted by letter")
        for v in self.vehicles:
            if v.length not in (2, 3):
                raise ValueError("vehicle length must be 2 or 3")
            for cell in v.cells():
                if not (0 <= cell[0] < BOARD and 0 <= cell[1] < BOARD):
                    raise ValueError(f"vehicle {v.letter} off board")
                if cell in seen:
                    raise ValueError(f"vehicle overlap at {cell}")
                seen.add(cell)
        a = self.vehicle("A")
        if a is None or a.orientation != HORIZONTAL or a.length != 2 or a.row != self.exit_row:
            raise ValueError("car A must be horizontal, length 2, on the exit row")

    def vehicle(self, letter):
        for v in self.vehicles:
            if v.letter == letter:
                return v
        return None

    def occupancy(self):
        occ = {}
        for v in self.vehicles:
            for cell in v.cells():
                occ[cell] = v.letter
        return occ


_DELTAS = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}


def apply(state: RushHourState, act: ActionToken) -> RushHourState:
    letter, direction, dist = act.args
    v = state.vehicle(letter)
    if v is None:
        raise IllegalAction(f"no vehicle {letter}")
    if v.orientation == HORIZONTAL and direction not in ("left", "right"):
        raise IllegalAction("horizontal vehicles slide left/right only")
    if v.orientation == VERTICAL and direction not in ("up", "down"):
        raise IllegalAction("vertical vehicles slide up/down only")
    dr, dc = _DELTAS[direction]
    occ = state.occupancy()
    own = set(v.cells())
    # March one cell at a time so a slide through any occupied cell is illegal
    # even when the far cell is free.
    head = v.cells()[-1] if (dr > 0 or dc > 0) else v.cells()[0]
    r, c = head
    for step in range(1, dist + 1):
        probe = (r + dr * step, c + dc * step)
        if not (0 <= probe[0] < BOARD and 0 <= probe[1] < BOARD):
            raise IllegalAction("slide off board")
        if probe in occ and probe not in own:
            raise IllegalAction(f"slide blocked at {probe}")
    moved = replace(v, row=v.row + dr * dist, col=v.col + dc * dist)
    vehicles = tuple(moved if u.letter == letter else u for u in state.vehicles)
    return replace(state, vehicles=vehicles)


def is_goal(state: RushHourState) -> bool:
    a = state.vehicle("A")
    return a.col + a.length - 1 == EXIT_COL


def legal_actions(state: RushHourState):
    """All legal slides, vehicles alphabetically, directions in fixed order,
    distances ascending."""
    out = []
    occ = state.occupancy()
    for v in state.vehicles:
        dirs = ("left", "right") if v.orientation == HORIZONTAL else ("up", "down")
        for direction in DIR_ORDER:
            if direction not in dirs:
                continue
            dr, dc = _DELTAS[direction]
            head = v.cells()[-1] if (dr > 0 or dc > 0) else v.cells()[0]
            r, c = head
            dist = 0
            while True:
                dist += 1
                probe = (r + dr * dist, c + dc * dist)
                if not (0 <= probe[0] < BOARD and 0 <= probe[1] < BOARD):
                    break
                if probe in occ:
                    break
                out.append(ActionToken(GameId.RUSH_HOUR, "slide", (v.letter, direction, dist)))
    return out


def grid_string(state: RushHourState) -> str:
    occ = state.occupancy()
    return "".join(
        occ.get((r, c), ".") for r in range(BOARD) for c in range(BOARD)
    )


def blocking_vehicles(state: RushHourState) -> list:
    """Letters of vehicles sitting strictly between A's right end and the exit."""
    a = state.vehicle("A")
    right_end = a.col + a.length - 1
    occ = state.occupancy()
    blockers = {
        occ[(state.exit_row, c)]
        for c in range(right_end + 1, EXIT_COL + 1)
        if (state.exit_row, c) in occ
    }
    return sorted(blockers)
