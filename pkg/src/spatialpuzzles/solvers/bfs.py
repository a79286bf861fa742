"""Breadth-first expert solvers for the sliding games.

Each solver works on a compact state key (not the engine dataclasses) for
speed; the sampler replay-verifies every solution through the real engine, so
any divergence between the two rule encodings fails loudly.

Tie-breaking is fixed: directions in (up, down, left, right) order, vehicles
alphabetically, slide distances ascending, so solutions are reproducible.
"""

from __future__ import annotations

from collections import deque

from ..actions import ActionToken
from ..errors import BudgetExceeded, Unsolvable
from ..types import GameId, Solution
from ..engines import bloxorz as bx
from ..engines import rushhour as rh
from ..engines.bloxorz import ABSENT, BROKEN, FRAGILE, covered_cells
from ..engines.sokoban import SokobanState

EXPANSION_CAP = 5_000_000

_DIRS = (("up", (-1, 0)), ("down", (1, 0)), ("left", (0, -1)), ("right", (0, 1)))


def _reconstruct(parents, key):
    ops = []
    while True:
        prev = parents[key]
        if prev is None:
            break
        key, op = prev
        ops.append(op)
    ops.reverse()
    return ops


def solve_sokoban(state: SokobanState, cap: int = EXPANSION_CAP) -> Solution:
    walls = state.walls
    goals = state.goals
    width, height = state.width, state.height
    start = (state.player, state.boxes)
    if state.boxes == goals:
        return Solution((), expansions=0)

    parents = {start: None}
    queue = deque([start])
    expansions = 0
    while queue:
        key = queue.popleft()
        expansions += 1
        if expansions > cap:
            raise BudgetExceeded("sokoban expansion cap hit")
        player, boxes = key
        for op, (dr, dc) in _DIRS:
            target = (player[0] + dr, player[1] + dc)
            if not (0 <= target[0] < height and 0 <= target[1] < width):
                continue
            if target in walls:
                continue
            if target in boxes:
                beyond = (target[0] + dr, target[1] + dc)
                if (
                    not (0 <= beyond[0] < height and 0 <= beyond[1] < width)
                    or beyond in walls
                    or beyond in boxes
                ):
                    continue
                new_boxes = (boxes - {target}) | {beyond}
                nxt = (target, frozenset(new_boxes))
            else:
                nxt = (target, boxes)
            if nxt in parents:
                continue
            parents[nxt] = (key, op)
            if nxt[1] == goals:
                ops = _reconstruct(parents, nxt)
                actions = tuple(ActionToken(GameId.SOKOBAN, op) for op in ops)
                return Solution(actions, expansions=expansions)
            queue.append(nxt)
    raise Unsolvable("sokoban state space exhausted", expansions)


def solve_bloxorz(state: bx.BloxorzState, cap: int = EXPANSION_CAP) -> Solution:
    base = state.tiles  # codes before any further breakage
    height, width = state.height, state.width
    goal = state.goal

    def tile(cell, broken):
        r, c = cell
        if not (0 <= r < height and 0 <= c < width):
            return ABSENT
        if cell in broken:
            return BROKEN
        return base[r][c]

    initial_broken = frozenset(
        (r, c) for r in range(height) for c in range(width) if base[r][c] == BROKEN
    )
    start = (state.block, state.orientation, initial_broken)
    if state.orientation == bx.STANDING and state.block == goal:
        return Solution((), expansions=0)

    parents = {start: None}
    queue = deque([start])
    expansions = 0
    while queue:
        key = queue.popleft()
        expansions += 1
        if expansions > cap:
            raise BudgetExceeded("bloxorz expansion cap hit")
        block, orient, broken = key
        cells_before = covered_cells(block, orient)
        for op, _ in _DIRS:
            nb, no = bx.rolled(block, orient, op)
            cells_after = covered_cells(nb, no)
            if any(tile(c, broken) in (BROKEN, ABSENT) for c in cells_after):
                continue
            new_broken = broken
            for cell in cells_before:
                if cell not in cells_after and tile(cell, broken) == FRAGILE:
                    new_broken = new_broken | {cell}
            nxt = (nb, no, new_broken)
            if nxt in parents:
                continue
            parents[nxt] = (key, op)
            if no == bx.STANDING and nb == goal:
                ops = _reconstruct(parents, nxt)
                actions = tuple(ActionToken(GameId.BLOXORZ, op) for op in ops)
                return Solution(actions, expansions=expansions)
            queue.append(nxt)
    raise Unsolvable("bloxorz state space exhausted", expansions)


def solve_rushhour(state: rh.RushHourState, cap: int = EXPANSION_CAP) -> Solution:
    statics = [(v.letter, v.orientation, v.length) for v in state.vehicles]
    a_index = next(i for i, (letter, _, _) in enumerate(statics) if letter == "A")
    start = tuple((v.row, v.col) for v in state.vehicles)

    def cells_of(i, anchor):
        _, orientation, length = statics[i]
        r, c = anchor
        if orientation == rh.HORIZONTAL:
            return [(r, c + k) for k in range(length)]
        return [(r + k, c) for k in range(length)]

    def solved(anchors):
        _, _, length = statics[a_index]
        return anchors[a_index][1] + length - 1 == rh.EXIT_COL

    if solved(start):
        return Solution((), expansions=0)

    parents = {start: None}
    queue = deque([start])
    expansions = 0
    while queue:
        key = queue.popleft()
        expansions += 1
        if expansions > cap:
            raise BudgetExceeded("rush hour expansion cap hit")
        occupied = set()
        for i, anchor in enumerate(key):
            occupied.update(cells_of(i, anchor))
        for i, (letter, orientation, length) in enumerate(statics):
            dirs = ("left", "right") if orientation == rh.HORIZONTAL else ("up", "down")
            own = set(cells_of(i, key[i]))
            for op, (dr, dc) in _DIRS:
                if op not in dirs:
                    continue
                head = cells_of(i, key[i])[-1] if (dr > 0 or dc > 0) else cells_of(i, key[i])[0]
                dist = 0
                while True:
                    dist += 1
                    probe = (head[0] + dr * dist, head[1] + dc * dist)
                    if not (0 <= probe[0] < rh.BOARD and 0 <= probe[1] < rh.BOARD):
                        break
                    if probe in occupied and probe not in own:
                        break
                    anchor = (key[i][0] + dr * dist, key[i][1] + dc * dist)
                    nxt = key[:i] + (anchor,) + key[i + 1 :]
                    if nxt not in parents:
                        parents[nxt] = (key, (letter, op, dist))
                        if solved(nxt):
                            ops = _reconstruct(parents, nxt)
                            actions = tuple(
                                ActionToken(GameId.RUSH_HOUR, "slide", args) for args in ops
                            )
                            return Solution(actions, expansions=expansions)
                        queue.append(nxt)
    raise Unsolvable("rush hour state space exhausted", expansions)
