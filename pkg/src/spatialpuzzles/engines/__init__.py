"""Engine dispatch: one behavioral contract over the twelve games.

Every engine is pure: `step` never mutates its input and equal inputs give
equal outputs, so states are safe to share across workers.
"""

from __future__ import annotations

from ..actions import ActionToken, parse_action
from ..errors import IllegalAction
from ..types import GameId
from . import anagram, bloxorz, charrec, jigsaw, rotation, rushhour, sokoban, tangram

_STEP = {
    GameId.SOKOBAN: sokoban.apply,
    GameId.BLOXORZ: bloxorz.apply,
    GameId.RUSH_HOUR: rushhour.apply,
    GameId.TANGRAM: tangram.apply,
    GameId.TANGRAM_CERTIFICATE: tangram.apply,
    GameId.JIGSAW: jigsaw.apply,
    GameId.ANAGRAM: anagram.apply,
    GameId.CHAR_RECOGNITION: charrec.apply,
    GameId.SHAPE_MATCH_2D: rotation.apply_2d,
    GameId.MENTAL_ROTATION_2D: rotation.apply_2d,
    GameId.SHAPE_MATCH_3D: rotation.apply_3d,
    GameId.MENTAL_ROTATION_3D: rotation.apply_3d,
}

_IS_GOAL = {
    GameId.SOKOBAN: sokoban.is_goal,
    GameId.BLOXORZ: bloxorz.is_goal,
    GameId.RUSH_HOUR: rushhour.is_goal,
    GameId.TANGRAM: tangram.is_goal,
    GameId.TANGRAM_CERTIFICATE: tangram.is_goal,
    GameId.JIGSAW: jigsaw.is_goal,
    GameId.ANAGRAM: anagram.is_goal,
    GameId.CHAR_RECOGNITION: charrec.is_goal,
    GameId.SHAPE_MATCH_2D: rotation.is_goal_2d,
    GameId.MENTAL_ROTATION_2D: rotation.is_goal_2d,
    GameId.SHAPE_MATCH_3D: rotation.is_goal_3d,
    GameId.MENTAL_ROTATION_3D: rotation.is_goal_3d,
}

_LEGAL = {
    GameId.SOKOBAN: sokoban.legal_actions,
    GameId.BLOXORZ: bloxorz.legal_actions,
    GameId.RUSH_HOUR: rushhour.legal_actions,
    GameId.TANGRAM: tangram.legal_actions,
    GameId.TANGRAM_CERTIFICATE: tangram.legal_actions,
    GameId.JIGSAW: jigsaw.legal_actions,
    GameId.ANAGRAM: anagram.legal_actions,
    GameId.CHAR_RECOGNITION: charrec.legal_actions,
    GameId.SHAPE_MATCH_2D: rotation.legal_actions_2d,
    GameId.MENTAL_ROTATION_2D: rotation.legal_actions_2d,
    GameId.SHAPE_MATCH_3D: rotation.legal_actions_3d,
    GameId.MENTAL_ROTATION_3D: rotation.legal_actions_3d,
}


def step(game: GameId, state, action):
    """Apply one action; returns the successor state or raises IllegalAction.

    `action` may be an ActionToken or raw token text (parsed first).
    """
    game = GameId(game)
    if isinstance(action, str):
        action = parse_action(game, action)
    return _STEP[game](state, action)


def is_goal(game: GameId, state) -> bool:
    return _IS_GOAL[GameId(game)](state)


def legal_actions(game: GameId, state):
    return _LEGAL[GameId(game)](state)
