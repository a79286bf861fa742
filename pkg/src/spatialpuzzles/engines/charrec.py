"""Character recognition: reassemble a shattered glyph, then name it.

A hidden glyph (A-Z or 0-9) is split into four quadrant fragments.  Fragments
carry a rotation and may be placed into lettered slots of the 2x2 assembly
grid; the hidden `home` permutation says which slot each fragment belongs to.
`identify` becomes legal once every fragment is placed somewhere; a wrong or
premature character only surfaces as a failed verdict, never as a step error.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..actions import ActionToken
from ..errors import IllegalAction


def slot_label(index: int) -> str:
    return chr(ord("A") + index)


def slot_index(label: str) -> int:
    return ord(label) - ord("A")


@dataclass(frozen=True)
class CharRecState:
    glyph: str  # hidden
    rotations: tuple  # per fragment, degrees
    slots: tuple  # fragment -> slot index or None
    home: tuple  # hidden: fragment -> correct slot index
    identified: str | None = None

    @property
    def n_fragments(self) -> int:
        return len(self.rotations)

    def slot_occupant(self, slot: int):
        for frag, s in enumerate(self.slots):
            if s == slot:
                return frag
        return None

    def all_placed(self) -> bool:
        return all(s is not None for s in self.slots)


def apply(state: CharRecState, act: ActionToken) -> CharRecState:
    if act.op == "rotate":
        frag, deg = act.args
        if frag >= state.n_fragments:
            raise IllegalAction(f"no fragment {frag}")
        if state.slots[frag] is not None:
            raise IllegalAction(f"fragment {frag} already placed")
        rotations = list(state.rotations)
        rotations[frag] = deg
        return replace(state, rotations=tuple(rotations))

    if act.op == "place":
        frag, label = act.args
        if frag >= state.n_fragments:
            raise IllegalAction(f"no fragment {frag}")
        slot = slot_index(label)
        if slot >= state.n_fragments:
            raise IllegalAction(f"no slot {label}")
        if state.slots[frag] is not None:
            raise IllegalAction(f"fragment {frag} already placed")
        if state.slot_occupant(slot) is not None:
            raise IllegalAction(f"slot {label} occupied")
        slots = list(state.slots)
        slots[frag] = slot
        return replace(state, slots=tuple(slots))

    # identify
    if not state.all_placed():
        raise IllegalAction("identify requires all fragments placed")
    return replace(state, identified=act.args[0])


def is_goal(state: CharRecState) -> bool:
    return (
        state.slots == state.home
        and all(r == 0 for r in state.rotations)
        and state.identified == state.glyph
    )


def legal_actions(state: CharRecState):
    from ..types import GameId

    out = []
    for frag in range(state.n_fragments):
        if state.slots[frag] is not None:
            continue
        for deg in (0, 90, 180, 270):
            out.append(ActionToken(GameId.CHAR_RECOGNITION, "rotate", (frag, deg)))
        for slot in range(state.n_fragments):
            if state.slot_occupant(slot) is None:
                out.append(
                    ActionToken(GameId.CHAR_RECOGNITION, "place", (frag, slot_label(slot)))
                )
    if state.all_placed():
        out.append(ActionToken(GameId.CHAR_RECOGNITION, "identify", (state.glyph,)))
    return out
