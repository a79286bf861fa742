"""Core domain types: game identifiers, instances, episodes, verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional


class GameId(str, Enum):
    SOKOBAN = "sokoban"
    BLOXORZ = "bloxorz"
    RUSH_HOUR = "rush_hour"
    TANGRAM = "tangram"
    TANGRAM_CERTIFICATE = "tangram_certificate"
    JIGSAW = "jigsaw"
    ANAGRAM = "anagram"
    CHAR_RECOGNITION = "char_recognition"
    SHAPE_MATCH_2D = "shape_match_2d"
    MENTAL_ROTATION_2D = "mental_rotation_2d"
    SHAPE_MATCH_3D = "shape_match_3d"
    MENTAL_ROTATION_3D = "mental_rotation_3d"


#: Games where the instance may be unsolvable and the required output is a
#: bare yes/no answer rather than a goal configuration.
CERTIFICATE_GAMES = frozenset(
    {GameId.TANGRAM_CERTIFICATE, GameId.MENTAL_ROTATION_2D, GameId.MENTAL_ROTATION_3D}
)

#: Games whose episodes end with a textual response (carried in the action
#: stream for identify-style games, as a trailing answer for certificates).
ANSWER_GAMES = CERTIFICATE_GAMES | {GameId.ANAGRAM, GameId.CHAR_RECOGNITION}

MAX_SEED = (1 << 64) - 1


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or not (0 <= seed <= MAX_SEED):
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    return seed


@dataclass(frozen=True)
class Solution:
    """Expert solver output: an optimal action sequence and/or an answer."""

    actions: tuple  # tuple[ActionToken, ...]
    answer: Optional[str] = None
    optimal: bool = True
    expansions: int = 0
    proof: Optional[str] = None  # for negative certificates: why no solution exists


@dataclass(frozen=True)
class Instance:
    """One seeded puzzle instantiation.

    `ground_truth` is hidden supervision: it replays to a goal state for
    solvable instances, or carries an unsolvability proof plus the answer
    "no" for negative certificates.
    """

    game: GameId
    seed: int
    difficulty: dict
    initial_state: Any
    ground_truth: Solution
    solvable: bool

    def step_limit(self) -> int:
        """Replay budget: 4x the expert solution length, floor 64."""
        return max(64, 4 * len(self.ground_truth.actions))


@dataclass(frozen=True)
class Episode:
    """A replayed expert trajectory: prompt, actions, per-step states."""

    instance: Instance
    prompt: str
    actions: tuple  # tuple[ActionToken, ...]
    answer: Optional[str]
    states: tuple  # states after each action (s_1 .. s_N)
    solver_stats: dict = field(default_factory=dict)


class FailureReason(str, Enum):
    PARSE_ERROR = "parse_error"
    ILLEGAL_ACTION = "illegal_action"
    WRONG_ANSWER = "wrong_answer"
    NOT_AT_GOAL = "not_at_goal"
    STEP_LIMIT = "step_limit"


@dataclass(frozen=True)
class Verdict:
    """Result of replaying a candidate action sequence against an instance."""

    solved: bool
    failure: Optional[FailureReason] = None
    failing_step: Optional[int] = None  # 1-based index of the first bad action

    def __post_init__(self):
        if self.solved and self.failure is not None:
            raise ValueError("a solved verdict cannot carry a failure")
