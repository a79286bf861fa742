"""Tangram on a discrete cell grid.

The seven classical pieces are approximated as polyomino footprints (two
large staircase triangles, a medium and two small ones, a square and a
parallelogram).  Rotations are the multiples of 90 degrees; placements stamp
a footprint onto the target silhouette.  Solved when every target cell is
covered and every piece is placed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction


def _normalize(cells):
    mr = min(r for r, _ in cells)
    mc = min(c for _, c in cells)
    return frozenset((r - mr, c - mc) for r, c in cells)


def _rot90(cells):
    """Rotate a footprint 90 degrees counterclockwise (row 0 at top)."""
    return _normalize({(-c, r) for r, c in cells})


def footprints(base_cells):
    """Footprint per rotation degree; degrees with equal footprints coexist."""
    out = {}
    cells = _normalize(base_cells)
    for deg in (0, 90, 180, 270):
        out[deg] = cells
        cells = _rot90(cells)
    return out


#: Base footprints of the classical pieces, smallest ids first.
PIECE_SHAPES = {
    "P0": {(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)},
    "P1": {(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)},
    "P2": {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)},
    "P3": {(0, 0), (0, 1), (1, 0)},
    "P4": {(0, 0), (0, 1), (1, 0)},
    "P5": {(0, 0), (0, 1), (1, 0), (1, 1)},
    "P6": {(0, 0), (0, 1), (1, 1), (1, 2)},
}

PIECE_FOOTPRINTS = {pid: footprints(cells) for pid, cells in PIECE_SHAPES.items()}

#: Piece ids ordered by footprint size then id; reduced-difficulty instances
#: use a prefix of this list.
PIECES_BY_SIZE = sorted(PIECE_SHAPES, key=lambda p: (len(PIECE_SHAPES[p]), p))


def piece_subset(count: int):
    """The `count` smallest pieces, in id order."""
    if not 2 <= count <= 7:
        raise ValueError("piece count must be between 2 and 7")
    return sorted(PIECES_BY_SIZE[:count])


@dataclass(frozen=True)
class PieceState:
    pid: str
    rotation: int
    placed_at: tuple | None  # anchor cell of the footprint bounding box


@dataclass(frozen=True)
class TangramState:
    width: int
    height: int
    target: frozenset  # silhouette cells to cover
    pieces: tuple  # PieceState in id order

    def piece(self, pid):
        for p in self.pieces:
            if p.pid == pid:
                return p
        return None

    def piece_cells(self, p: PieceState):
        fr = PIECE_FOOTPRINTS[p.pid][p.rotation]
        ar, ac = p.placed_at
        return frozenset((r + ar, c + ac) for r, c in fr)

    def covered(self):
        cov = {}
        for p in self.pieces:
            if p.placed_at is not None:
                for cell in self.piece_cells(p):
                    cov[cell] = p.pid
        return cov


def apply(state: TangramState, act: ActionToken) -> TangramState:
    if act.op == "rotate":
        pid, deg = act.args
        p = state.piece(pid)
        if p is None:
            raise IllegalAction(f"no piece {pid}")
        if p.placed_at is not None:
            raise IllegalAction(f"{pid} already placed")
        if deg not in PIECE_FOOTPRINTS[pid]:
            raise IllegalAction(f"rotation {deg} not available for {pid}")
        pieces = tuple(replace(q, rotation=deg) if q.pid == pid else q for q in state.pieces)
        return replace(state, pieces=pieces)

    pid, row, col = act.args
    p = state.piece(pid)
    if p is None:
        raise IllegalAction(f"no piece {pid}")
    if p.placed_at is not None:
        raise IllegalAction(f"{pid} already placed")
    placed = replace(p, placed_at=(row, col))
    cells = state.piece_cells(placed)
    occupied = state.covered()
    for cell in cells:
        if not (0 <= cell[0] < state.height and 0 <= cell[1] < state.width):
            raise IllegalAction("placement off canvas")
        if cell not in state.target:
            raise IllegalAction("placement covers a non-target cell")
        if cell in occupied:
            raise IllegalAction(f"overlap with {occupied[cell]}")
    pieces = tuple(placed if q.pid == pid else q for q in state.pieces)
    return replace(state, pieces=pieces)


def is_goal(state: TangramState) -> bool:
    if any(p.placed_at is None for p in state.pieces):
        return False
    return set(state.covered()) == set(state.target)


def legal_actions(state: TangramState):
    out = []
    occupied = set(state.covered())
    for p in state.pieces:
        if p.placed_at is not None:
            continue
        for deg in sorted(PIECE_FOOTPRINTS[p.pid]):
            out.append(ActionToken(state_game(state), "rotate", (p.pid, deg)))
        fr = PIECE_FOOTPRINTS[p.pid][p.rotation]
        for row in range(state.height):
            for col in range(state.width):
                cells = {(r + row, c + col) for r, c in fr}
                if cells <= state.target and not (cells & occupied):
                    out.append(ActionToken(state_game(state), "place", (p.pid, row, col)))
    return out


def state_game(state: TangramState):
    # The engine serves both the construction game and its certificate
    # variant; tokens default to the construction id, which shares a grammar.
    from ..types import GameId

    return GameId.TANGRAM


def canvas_string(state: TangramState) -> str:
    """Row-major canvas: piece digit for covered cells, 'T' for uncovered
    target cells, '.' elsewhere."""
    cov = state.covered()
    out = []
    for r in range(state.height):
        for c in range(state.width):
            cell = (r, c)
            if cell in cov:
                out.append(cov[cell][-1])
            elif cell in state.target:
                out.append("T")
            else:
                out.append(".")
    return "".join(out)


def unplaced_rotations(state: TangramState) -> list:
    return [[p.pid, p.rotation] for p in state.pieces if p.placed_at is None]
