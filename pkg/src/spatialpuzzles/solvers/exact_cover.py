"""Dancing-links exact cover for the tangram games.

Columns are one per piece (each piece must be used exactly once) plus one per
silhouette cell (each cell covered exactly once).  Rows are legal placements
(piece, rotation, anchor).  Column choice is the classic min-size heuristic
with deterministic ties, so identical instances search identically.
"""

from __future__ import annotations

from ..actions import ActionToken
from ..errors import Unsolvable
from ..types import GameId, Solution
from ..engines.tangram import PIECE_FOOTPRINTS, TangramState


class _Node:
    __slots__ = ("left", "right", "up", "down", "column", "row_id")

    def __init__(self):
        self.left = self.right = self.up = self.down = self
        self.column = None
        self.row_id = -1


class _Column(_Node):
    __slots__ = ("size", "index")

    def __init__(self, index):
        super().__init__()
        self.size = 0
        self.index = index
        self.column = self


class DancingLinks:
    """Sparse boolean matrix over circular doubly-linked lists."""

    def __init__(self, n_columns: int):
        self.header = _Column(-1)
        self.columns = []
        prev = self.header
        for i in range(n_columns):
            col = _Column(i)
            col.left, col.right = prev, prev.right
            prev.right.left = col
            prev.right = col
            prev = col
            self.columns.append(col)
        self.rows = []

    def add_row(self, column_indices) -> int:
        row_id = len(self.rows)
        first = None
        for ci in column_indices:
            col = self.columns[ci]
            node = _Node()
            node.column = col
            node.row_id = row_id
            node.up, node.down = col.up, col
            col.up.down = node
            col.up = node
            col.size += 1
            if first is None:
                first = node
            else:
                node.left, node.right = first.left, first
                first.left.right = node
                first.left = node
        self.rows.append(tuple(column_indices))
        return row_id

    def _cover(self, col):
        col.right.left = col.left
        col.left.right = col.right
        i = col.down
        while i is not col:
            j = i.right
            while j is not i:
                j.down.up = j.up
                j.up.down = j.down
                j.column.size -= 1
                j = j.right
            i = i.down

    def _uncover(self, col):
        i = col.up
        while i is not col:
            j = i.left
            while j is not i:
                j.column.size += 1
                j.down.up = j
                j.up.down = j
                j = j.left
            i = i.up
        col.right.left = col
        col.left.right = col

    def search(self):
        """First exact cover in deterministic order, or None when exhausted.

        Returns (row_ids, nodes_expanded).
        """
        solution = []
        expanded = 0

        def rec():
            nonlocal expanded
            if self.header.right is self.header:
                return True
            col = None
            j = self.header.right
            while j is not self.header:
                if col is None or j.size < col.size:
                    col = j
                j = j.right
            if col.size == 0:
                return False
            self._cover(col)
            r = col.down
            while r is not col:
                expanded += 1
                solution.append(r.row_id)
                j = r.right
                while j is not r:
                    self._cover(j.column)
                    j = j.right
                if rec():
                    return True
                j = r.left
                while j is not r:
                    self._uncover(j.column)
                    j = j.left
                solution.pop()
                r = r.down
            self._uncover(col)
            return False

        found = rec()
        return (list(solution) if found else None), expanded


def build_matrix(state: TangramState):
    """Placement rows over piece+cell constraint columns.

    Returns (dlx, row_meta) where row_meta[row_id] = (pid, degrees, anchor).
    """
    pieces = [p.pid for p in state.pieces]
    target = sorted(state.target)
    cell_col = {cell: len(pieces) + i for i, cell in enumerate(target)}
    target_set = state.target
    dlx = DancingLinks(len(pieces) + len(target))
    meta = []
    for pi, pid in enumerate(pieces):
        seen_footprints = {}
        for deg in sorted(PIECE_FOOTPRINTS[pid]):
            fr = PIECE_FOOTPRINTS[pid][deg]
            if fr in seen_footprints:
                continue
            seen_footprints[fr] = deg
            max_r = max(r for r, _ in fr)
            max_c = max(c for _, c in fr)
            for row in range(state.height - max_r):
                for col in range(state.width - max_c):
                    cells = [(r + row, c + col) for r, c in fr]
                    if all(cell in target_set for cell in cells):
                        dlx.add_row([pi] + sorted(cell_col[cell] for cell in cells))
                        meta.append((pid, deg, (row, col)))
    return dlx, meta


def solve_tangram(state: TangramState, certificate: bool = False) -> Solution:
    """Exact-cover solution (or certificate answer) for a fresh tangram state.

    For the certificate game, exhaustion is a valid outcome and yields the
    answer "no" with the proof kind recorded.
    """
    total_area = sum(len(PIECE_FOOTPRINTS[p.pid][0]) for p in state.pieces)
    game = GameId.TANGRAM_CERTIFICATE if certificate else GameId.TANGRAM
    if total_area != len(state.target):
        if certificate:
            return Solution((), answer="no", expansions=0, proof="area_mismatch")
        raise Unsolvable("piece area does not match silhouette area")

    dlx, meta = build_matrix(state)
    rows, expanded = dlx.search()
    if rows is None:
        if certificate:
            return Solution((), answer="no", expansions=expanded, proof="search_exhausted")
        raise Unsolvable("exact cover exhausted", expanded)

    chosen = sorted(meta[r] for r in rows)  # ascending piece id
    actions = []
    rotation_now = {p.pid: p.rotation for p in state.pieces}
    for pid, deg, (row, col) in chosen:
        if rotation_now[pid] != deg:
            actions.append(ActionToken(game, "rotate", (pid, deg)))
        actions.append(ActionToken(game, "place", (pid, row, col)))
    answer = "yes" if certificate else None
    return Solution(tuple(actions), answer=answer, expansions=expanded)


def brute_force_coverable(state: TangramState) -> bool:
    """Independent oracle: recursive enumeration over per-piece placements.

    No linked lists, no column heuristics; pieces are tried in id order
    against every (rotation, anchor).  Exponential, fine for small piece sets.
    """
    total_area = sum(len(PIECE_FOOTPRINTS[p.pid][0]) for p in state.pieces)
    if total_area != len(state.target):
        return False
    pieces = [p.pid for p in state.pieces]
    target = state.target

    placements = []
    for pid in pieces:
        opts = []
        seen = set()
        for deg in sorted(PIECE_FOOTPRINTS[pid]):
            fr = PIECE_FOOTPRINTS[pid][deg]
            if fr in seen:
                continue
            seen.add(fr)
            max_r = max(r for r, _ in fr)
            max_c = max(c for _, c in fr)
            for row in range(state.height - max_r):
                for col in range(state.width - max_c):
                    cells = frozenset((r + row, c + col) for r, c in fr)
                    if cells <= target:
                        opts.append(cells)
        placements.append(opts)

    def rec(i, covered):
        if i == len(placements):
            return covered == target
        for cells in placements[i]:
            if not (cells & covered):
                if rec(i + 1, covered | cells):
                    return True
        return False

    return rec(0, frozenset())
