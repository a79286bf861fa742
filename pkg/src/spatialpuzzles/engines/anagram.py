"""Anagram: swap letters into a word, then submit it.

Swaps conserve the letter multiset; `identify` is legal at any time and the
verdict accepts any dictionary word that is an anagram of the letters, not
only the hidden target.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from itertools import permutations

from ..actions import ActionToken
from ..errors import IllegalAction
from ..types import GameId


@dataclass(frozen=True)
class AnagramState:
    letters: str
    target_word: str  # hidden
    dictionary: frozenset
    identified: str | None = None

    def __post_init__(self):
        if sorted(self.letters) != sorted(self.target_word):
            raise ValueError("letters must be an anagram of the target word")


def apply(state: AnagramState, act: ActionToken) -> AnagramState:
    if act.op == "swap":
        i, j = act.args
        n = len(state.letters)
        if i >= n or j >= n:
            raise IllegalAction("swap index out of range")
        chars = list(state.letters)
        chars[i], chars[j] = chars[j], chars[i]
        return replace(state, letters="".join(chars))
    return replace(state, identified=act.args[0])


def is_goal(state: AnagramState) -> bool:
    return (
        state.identified is not None
        and state.identified in state.dictionary
        and sorted(state.identified) == sorted(state.letters)
    )


def legal_actions(state: AnagramState):
    n = len(state.letters)
    out = [
        ActionToken(GameId.ANAGRAM, "swap", (i, j))
        for i in range(n)
        for j in range(i, n)
    ]
    key = "".join(sorted(state.letters))
    for word in sorted(state.dictionary):
        if "".join(sorted(word)) == key:
            out.append(ActionToken(GameId.ANAGRAM, "identify", (word,)))
    return out


def letter_counts(letters: str) -> str:
    """Space-separated `letter:count` pairs in alphabetical order."""
    counts = Counter(letters)
    return " ".join(f"{ch}:{counts[ch]}" for ch in sorted(counts))


def _assignments(scrambled: str, target: str):
    """Yield position maps sigma with target[sigma[i]] == scrambled[i]."""
    by_letter_src = {}
    by_letter_dst = {}
    for i, ch in enumerate(scrambled):
        by_letter_src.setdefault(ch, []).append(i)
    for i, ch in enumerate(target):
        by_letter_dst.setdefault(ch, []).append(i)
    letters = sorted(by_letter_src)
    if sorted(by_letter_dst) != letters or any(
        len(by_letter_src[ch]) != len(by_letter_dst[ch]) for ch in letters
    ):
        raise ValueError("mismatched letter multisets")

    def rec(idx, sigma):
        if idx == len(letters):
            yield tuple(sigma)
            return
        ch = letters[idx]
        src = by_letter_src[ch]
        for perm in permutations(by_letter_dst[ch]):
            for s, d in zip(src, perm):
                sigma[s] = d
            yield from rec(idx + 1, sigma)

    yield from rec(0, [None] * len(scrambled))


def _cycles(sigma):
    seen = [False] * len(sigma)
    cycles = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cycle = []
        p = start
        while not seen[p]:
            seen[p] = True
            cycle.append(p)
            p = sigma[p]
        cycles.append(cycle)
    return cycles


def best_assignment(scrambled: str, target: str):
    """The position map maximizing cycle count (ties: first in enumeration)."""
    best, best_cycles = None, -1
    for sigma in _assignments(scrambled, target):
        n_cycles = len(_cycles(sigma))
        if n_cycles > best_cycles:
            best, best_cycles = sigma, n_cycles
    return best


def min_swaps(scrambled: str, target: str) -> int:
    """Minimal transpositions mapping scrambled to target, minimized over
    position assignments for repeated letters."""
    sigma = best_assignment(scrambled, target)
    return len(scrambled) - len(_cycles(sigma))


def swap_plan(scrambled: str, target: str) -> list:
    """A concrete minimal swap sequence realizing the best assignment."""
    sigma = best_assignment(scrambled, target)
    swaps = []
    for cycle in _cycles(sigma):
        for t in range(len(cycle) - 1, 0, -1):
            i, j = cycle[t - 1], cycle[t]
            swaps.append((min(i, j), max(i, j)))
    chars = list(scrambled)
    for i, j in swaps:
        chars[i], chars[j] = chars[j], chars[i]
    if "".join(chars) != target:
        raise AssertionError("swap plan failed to reach the target")
    return swaps
