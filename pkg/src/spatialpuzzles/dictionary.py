"""Bundled word list: UTF-8, one lowercase word per line, lengths 3-12."""

from __future__ import annotations

import functools
from importlib import resources
from pathlib import Path

MIN_LEN, MAX_LEN = 3, 12


def _clean(lines) -> frozenset:
    words = set()
    for line in lines:
        w = line.strip()
        if MIN_LEN <= len(w) <= MAX_LEN and w.isascii() and w.isalpha() and w == w.lower():
            words.add(w)
    return frozenset(words)


@functools.lru_cache(maxsize=8)
def load_dictionary(path: str | None = None) -> frozenset:
    """The word set; `path` overrides the bundled list."""
    if path is not None:
        return _clean(Path(path).read_text(encoding="utf-8").splitlines())
    text = resources.files("spatialpuzzles").joinpath("data/words.txt").read_text("utf-8")
    return _clean(text.splitlines())


@functools.lru_cache(maxsize=8)
def anagram_index(dictionary: frozenset) -> dict:
    """sorted-letters -> tuple of matching words (sorted)."""
    index: dict = {}
    for word in dictionary:
        index.setdefault("".join(sorted(word)), []).append(word)
    return {k: tuple(sorted(v)) for k, v in index.items()}


def valid_anagrams(letters: str, dictionary: frozenset) -> tuple:
    return anagram_index(dictionary).get("".join(sorted(letters)), ())
