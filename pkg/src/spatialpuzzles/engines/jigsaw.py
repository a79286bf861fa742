"""Jigsaw: rotate pieces to upright and place them at their home cells.

Pieces are square patches cut from a procedurally colored image on a k x k
grid (k in {2, 3}).  Rotations are 90-degree steps (counterclockwise
positive), applied only before placement.  Solved when every piece sits at
its hidden home cell with rotation 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction
from ..types import GameId


@dataclass(frozen=True)
class JigsawState:
    k: int
    cells: tuple  # len k*k, piece index or None, row-major
    rotations: tuple  # per piece, degrees in {0, 90, 180, 270}
    home_cells: tuple  # hidden: piece index -> cell index
    patterns: tuple  # per piece: 4 corner RGB triples (render content)

    @property
    def n_pieces(self) -> int:
        return self.k * self.k

    def placement(self, piece: int):
        for idx, p in enumerate(self.cells):
            if p == piece:
                return idx
        return None


def _piece_index(pid: str, state: JigsawState) -> int:
    k = int(pid[1:])
    if k >= state.n_pieces:
        raise IllegalAction(f"no piece {pid}")
    return k


def apply(state: JigsawState, act: ActionToken) -> JigsawState:
    if act.op == "rotate":
        pid, spin = act.args
        piece = _piece_index(pid, state)
        if state.placement(piece) is not None:
            raise IllegalAction(f"{pid} already placed")
        delta = 90 if spin == "ccw" else -90
        rotations = list(state.rotations)
        rotations[piece] = (rotations[piece] + delta) % 360
        return replace(state, rotations=tuple(rotations))

    pid, row, col = act.args
    piece = _piece_index(pid, state)
    if not (0 <= row < state.k and 0 <= col < state.k):
        raise IllegalAction("cell off grid")
    if state.placement(piece) is not None:
        raise IllegalAction(f"{pid} already placed")
    idx = row * state.k + col
    if state.cells[idx] is not None:
        raise IllegalAction("cell occupied")
    cells = list(state.cells)
    cells[idx] = piece
    return replace(state, cells=tuple(cells))


def is_goal(state: JigsawState) -> bool:
    if any(r != 0 for r in state.rotations):
        return False
    return all(
        state.cells[state.home_cells[p]] == p for p in range(state.n_pieces)
    )


def legal_actions(state: JigsawState):
    out = []
    placed = {p for p in state.cells if p is not None}
    for piece in range(state.n_pieces):
        if piece in placed:
            continue
        pid = f"P{piece}"
        for spin in ("cw", "ccw"):
            out.append(ActionToken(GameId.JIGSAW, "rotate", (pid, spin)))
        for idx, occupant in enumerate(state.cells):
            if occupant is None:
                out.append(
                    ActionToken(GameId.JIGSAW, "place", (pid, idx // state.k, idx % state.k))
                )
    return out


def unplaced_pieces(state: JigsawState) -> list:
    placed = {p for p in state.cells if p is not None}
    return [p for p in range(state.n_pieces) if p not in placed]
