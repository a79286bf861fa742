"""2D polyomino and 3D polycube rotation tasks.

Both the shape-matching games (reach a target pose) and the mental-rotation
certificates (decide whether two shapes are the same) share these states.
Angles live on the 15-degree lattice, counterclockwise positive, modulo 360.
Shape identity for certificates is judged over the 24 orthogonal orientations
(4 planar rotations in 2D).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction
from ..types import GameId

ANGLES = tuple(range(0, 360, 15))


def shortest_delta(current: int, target: int) -> int:
    """Signed delta d in (-180, 180] with current + d = target (mod 360).

    Ties at half a turn resolve to +180.
    """
    if current % 15 or target % 15:
        raise ValueError("angles must be multiples of 15")
    d = (target - current) % 360
    return d - 360 if d > 180 else d


def normalize_cells(cells):
    mins = [min(p[i] for p in cells) for i in range(len(next(iter(cells))))]
    return frozenset(tuple(v - m for v, m in zip(p, mins)) for p in cells)


def rotate_cells_90(cells, quarter_turns: int):
    """Rotate a 2D cell set counterclockwise by 90-degree steps, normalized."""
    out = cells
    for _ in range(quarter_turns % 4):
        out = {(-c, r) for r, c in out}
    return normalize_cells(out)


def rotations_2d(cells):
    return [rotate_cells_90(cells, k) for k in range(4)]


def _matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


def _orientation_matrices():
    rx = ((1, 0, 0), (0, 0, -1), (0, 1, 0))
    ry = ((0, 0, 1), (0, 1, 0), (-1, 0, 0))
    rz = ((0, -1, 0), (1, 0, 0), (0, 0, 1))
    identity = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        m = frontier.pop()
        for g in (rx, ry, rz):
            n = _matmul(g, m)
            if n not in seen:
                seen.add(n)
                frontier.append(n)
    return tuple(sorted(seen))


#: The 24 proper rotations of the cubic lattice, deterministic order.
ORIENTATIONS_3D = _orientation_matrices()


def apply_matrix(m, voxels):
    return frozenset(
        (
            m[0][0] * x + m[0][1] * y + m[0][2] * z,
            m[1][0] * x + m[1][1] * y + m[1][2] * z,
            m[2][0] * x + m[2][1] * y + m[2][2] * z,
        )
        for x, y, z in voxels
    )


def rotations_3d(voxels):
    return [normalize_cells(apply_matrix(m, voxels)) for m in ORIENTATIONS_3D]


def same_shape_2d(cells_a, cells_b) -> bool:
    b = normalize_cells(cells_b)
    return any(rot == b for rot in rotations_2d(cells_a))


def same_shape_3d(voxels_a, voxels_b) -> bool:
    b = normalize_cells(voxels_b)
    return any(rot == b for rot in rotations_3d(voxels_a))


def mirror_3d(voxels):
    return normalize_cells({(-x, y, z) for x, y, z in voxels})


def is_chiral(voxels) -> bool:
    return not same_shape_3d(voxels, mirror_3d(voxels))


def euler_matrix(rx: int, ry: int, rz: int):
    """Rotation Rz*Ry*Rx as floats; callers quantize as needed."""
    cx, sx = math.cos(math.radians(rx)), math.sin(math.radians(rx))
    cy, sy = math.cos(math.radians(ry)), math.sin(math.radians(ry))
    cz, sz = math.cos(math.radians(rz)), math.sin(math.radians(rz))
    mx = ((1, 0, 0), (0, cx, -sx), (0, sx, cx))
    my = ((cy, 0, sy), (0, 1, 0), (-sy, 0, cy))
    mz = ((cz, -sz, 0), (sz, cz, 0), (0, 0, 1))
    return _matmul(mz, _matmul(my, mx))


@dataclass(frozen=True)
class Rot2DState:
    cells: frozenset  # polyomino in its canonical frame
    angle: int
    target_angle: int
    right_cells: frozenset | None = None  # certificate reference shape
    same: bool | None = None  # hidden certificate answer

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    def __post_init__(self):
        if self.angle % 15 or self.target_angle % 15:
            raise ValueError("angles must be multiples of 15")

    def reference_cells(self):
        return self.right_cells if self.right_cells is not None else self.cells


@dataclass(frozen=True)
class Rot3DState:
    voxels: frozenset
    angles: tuple  # (rx, ry, rz)
    targets: tuple  # (tx, ty, tz): target pose / certificate reference pose
    right_voxels: frozenset | None = None
    same: bool | None = None

    @property
    def n_voxels(self) -> int:
        return len(self.voxels)

    def __post_init__(self):
        for a in (*self.angles, *self.targets):
            if a % 15:
                raise ValueError("angles must be multiples of 15")

    def reference_voxels(self):
        return self.right_voxels if self.right_voxels is not None else self.voxels


AXIS_INDEX = {"x": 0, "y": 1, "z": 2}


def apply_2d(state: Rot2DState, act: ActionToken) -> Rot2DState:
    (sign,) = act.args
    return replace(state, angle=(state.angle + sign) % 360)


def apply_3d(state: Rot3DState, act: ActionToken) -> Rot3DState:
    axis, sign = act.args
    i = AXIS_INDEX[axis]
    angles = list(state.angles)
    angles[i] = (angles[i] + sign) % 360
    return replace(state, angles=tuple(angles))


def is_goal_2d(state: Rot2DState) -> bool:
    return state.angle == state.target_angle


def is_goal_3d(state: Rot3DState) -> bool:
    return state.angles == state.targets


def legal_actions_2d(state: Rot2DState):
    game = GameId.SHAPE_MATCH_2D
    return [ActionToken(game, "rotate", (15,)), ActionToken(game, "rotate", (-15,))]


def legal_actions_3d(state: Rot3DState):
    game = GameId.SHAPE_MATCH_3D
    return [
        ActionToken(game, "rotate", (axis, sign))
        for axis in ("x", "y", "z")
        for sign in (15, -15)
    ]


def poses_match_2d(cells, angle: int, right_cells, right_angle: int) -> bool:
    """Do the rendered poses coincide?

    A polyomino rotated off the 90-degree sublattice can never equal a
    lattice-aligned reference, so only quarter-turn deltas can match.
    """
    delta = (angle - right_angle) % 360
    if delta % 90:
        return False
    return rotate_cells_90(cells, delta // 90) == normalize_cells(right_cells)


def _nearest_orientation(matrix):
    for m in ORIENTATIONS_3D:
        if all(
            abs(matrix[i][j] - m[i][j]) < 1e-6 for i in range(3) for j in range(3)
        ):
            return m
    return None


def poses_match_3d(voxels, angles, right_voxels, right_angles) -> bool:
    """True when the two rendered voxel sets coincide as rigid geometry."""
    ra = euler_matrix(*angles)
    rb = euler_matrix(*right_angles)
    rb_inv = tuple(tuple(rb[j][i] for j in range(3)) for i in range(3))  # transpose
    m = _nearest_orientation(_matmul(rb_inv, ra))
    if m is None:
        return False
    return normalize_cells(apply_matrix(m, voxels)) == normalize_cells(right_voxels)
