"""Closed-form experts: rotation games, jigsaw, character recognition, anagram.

These games admit direct optimal solutions with no search: rotations follow
the signed shortest angular delta per axis (x, then y, then z), assemblies
follow the hidden true layout, and anagram swaps come from the cycle
decomposition of the best letter assignment.
"""

from __future__ import annotations

from ..actions import ActionToken
from ..types import GameId, Solution
from ..engines import anagram as an
from ..engines import charrec as cr
from ..engines import jigsaw as jg
from ..engines import rotation as rot


def _delta_steps(game, current, target, axis=None):
    d = rot.shortest_delta(current, target)
    sign = 15 if d > 0 else -15
    args = (sign,) if axis is None else (axis, sign)
    return [ActionToken(game, "rotate", args)] * (abs(d) // 15)


def solve_2d(state: rot.Rot2DState, game: GameId) -> Solution:
    actions = _delta_steps(game, state.angle, state.target_angle)
    return Solution(tuple(actions))


def solve_3d(state: rot.Rot3DState, game: GameId) -> Solution:
    actions = []
    for axis, cur, tgt in zip("xyz", state.angles, state.targets):
        actions.extend(_delta_steps(game, cur, tgt, axis))
    return Solution(tuple(actions))


def solve_cert_2d(state: rot.Rot2DState) -> Solution:
    """Demonstrate the match for positives; answer directly for negatives."""
    if not state.same:
        return Solution((), answer="no", proof="pose_search_exhausted")
    actions = _delta_steps(GameId.MENTAL_ROTATION_2D, state.angle, state.target_angle)
    return Solution(tuple(actions), answer="yes")


def solve_cert_3d(state: rot.Rot3DState) -> Solution:
    if not state.same:
        return Solution((), answer="no", proof="orientation_search_exhausted")
    actions = []
    for axis, cur, tgt in zip("xyz", state.angles, state.targets):
        actions.extend(_delta_steps(GameId.MENTAL_ROTATION_3D, cur, tgt, axis))
    return Solution(tuple(actions), answer="yes")


def solve_jigsaw(state: jg.JigsawState) -> Solution:
    actions = []
    for piece in range(state.n_pieces):
        pid = f"P{piece}"
        r = state.rotations[piece]
        if r == 90:
            spins = ["cw"]
        elif r == 180:
            spins = ["cw", "cw"]
        elif r == 270:
            spins = ["ccw"]
        else:
            spins = []
        for spin in spins:
            actions.append(ActionToken(GameId.JIGSAW, "rotate", (pid, spin)))
        home = state.home_cells[piece]
        actions.append(
            ActionToken(GameId.JIGSAW, "place", (pid, home // state.k, home % state.k))
        )
    return Solution(tuple(actions))


def solve_charrec(state: cr.CharRecState) -> Solution:
    actions = []
    for frag in range(state.n_fragments):
        if state.rotations[frag] != 0:
            actions.append(ActionToken(GameId.CHAR_RECOGNITION, "rotate", (frag, 0)))
        actions.append(
            ActionToken(
                GameId.CHAR_RECOGNITION, "place", (frag, cr.slot_label(state.home[frag]))
            )
        )
    actions.append(ActionToken(GameId.CHAR_RECOGNITION, "identify", (state.glyph,)))
    return Solution(tuple(actions), answer=state.glyph)


def solve_anagram(state: an.AnagramState) -> Solution:
    swaps = an.swap_plan(state.letters, state.target_word)
    actions = [ActionToken(GameId.ANAGRAM, "swap", (i, j)) for i, j in swaps]
    actions.append(ActionToken(GameId.ANAGRAM, "identify", (state.target_word,)))
    return Solution(tuple(actions), answer=state.target_word)
