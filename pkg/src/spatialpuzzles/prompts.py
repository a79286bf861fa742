"""Task instruction strings shown at the start of every episode."""

from __future__ import annotations

from .types import GameId

PROMPTS: dict[GameId, str] = {
    GameId.TANGRAM: (
        "Complete the tangram. Fill the grey silhouette using the colored pieces."
    ),
    GameId.TANGRAM_CERTIFICATE: (
        "Determine if the pieces can fill the silhouette. "
        "Say 'yes' if they can, 'no' if they can't."
    ),
    GameId.SHAPE_MATCH_3D: "Rotate the left shape to match the right shape.",
    GameId.MENTAL_ROTATION_3D: (
        "Determine if the left and right shapes are the same. "
        "Rotate to check, then say 'yes' if they match or 'no' if they don't."
    ),
    GameId.SHAPE_MATCH_2D: "Rotate the left 2D shape to match the right shape.",
    GameId.MENTAL_ROTATION_2D: (
        "Determine if the left and right 2D shapes are the same (possibly rotated). "
        "Rotate to check, then say 'yes' if they match or 'no' if they don't."
    ),
    GameId.JIGSAW: (
        "Reconstruct the original image by rotating each piece to the correct "
        "orientation and placing it at its correct grid position."
    ),
    GameId.ANAGRAM: (
        "The letters of a word have been scrambled. Swap letters to unscramble "
        "the word, then submit with identify(word)."
    ),
    GameId.CHAR_RECOGNITION: (
        "A character has been broken into pieces that are scattered and rotated. "
        "Rotate each numbered piece to the correct orientation and place it into "
        "the matching lettered slot in the assembly area. Once all pieces are "
        "correctly assembled, identify the character."
    ),
    GameId.SOKOBAN: "Solve this Sokoban puzzle. Push the brown boxes onto the red diamonds.",
    GameId.BLOXORZ: "Solve this Bloxorz puzzle. Roll the block so it stands on the red goal.",
    GameId.RUSH_HOUR: (
        "Slide vehicles to free the red car (A) and move it to the right edge exit."
    ),
}

FRAGILE_SUFFIX = (
    " Striped tiles are fragile and will break after the block leaves them."
)


def prompt_for(game: GameId, state=None) -> str:
    """Prompt for a game; bloxorz gains the fragile-tile sentence when relevant."""
    game = GameId(game)
    text = PROMPTS[game]
    if game is GameId.BLOXORZ and state is not None and state.has_fragile():
        text += FRAGILE_SUFFIX
    return text
