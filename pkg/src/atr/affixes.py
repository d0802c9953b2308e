"""Affix tables and the two-segment word split.

A word is cut into a *prefix+root* segment (the word with its longest
known suffix removed) and a *root+suffix* segment (the word with its
longest known prefix removed).  The two segments overlap on the root.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, TextIO

from .errors import AffixParseError

MAX_AFFIX_LEN = 15
MIN_SEGMENT_LEN = 3

_SECTIONS = {"[prefixes]": "prefixes", "[suffixes]": "suffixes"}


@dataclass(frozen=True)
class AffixTable:
    prefixes: frozenset[str] = field(default_factory=frozenset)
    suffixes: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("prefixes", "suffixes"):
            entries = frozenset(e.lower() for e in getattr(self, name))
            for entry in entries:
                if not 1 <= len(entry) <= MAX_AFFIX_LEN:
                    raise ValueError(f"affix {entry!r} must have 1 to {MAX_AFFIX_LEN} characters")
            object.__setattr__(self, name, entries)

    @classmethod
    def from_lists(cls, prefixes: Iterable[str] = (), suffixes: Iterable[str] = ()) -> AffixTable:
        return cls(frozenset(prefixes), frozenset(suffixes))

    def __len__(self):
        return len(self.prefixes) + len(self.suffixes)


@dataclass(frozen=True)
class WordSegments:
    word: str
    prefix_root: str
    root_suffix: str

    @property
    def overlap(self) -> int:
        """Number of characters shared by the two segments."""
        return len(self.prefix_root) + len(self.root_suffix) - len(self.word)


def load_affix_table(source: TextIO | str) -> AffixTable:
    """Parse an affix file.

    The format is a sequence of ``[prefixes]`` / ``[suffixes]`` sections
    with one affix per line.  Blank lines and lines starting with ``#``
    are ignored.  Entries are lowercased and deduplicated.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    found: dict[str, set[str]] = {"prefixes": set(), "suffixes": set()}
    section = None
    for lineno, raw in enumerate(source, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") or line.endswith("]"):
            section = _SECTIONS.get(line.lower())
            if section is None:
                raise AffixParseError(f"malformed section header {line!r}", lineno)
            continue
        if section is None:
            raise AffixParseError("entry outside of a [prefixes] or [suffixes] section", lineno)
        if any(ch.isspace() for ch in line):
            raise AffixParseError(f"affix {line!r} contains whitespace", lineno)
        if len(line) > MAX_AFFIX_LEN:
            raise AffixParseError(f"affix {line!r} longer than {MAX_AFFIX_LEN} characters", lineno)
        found[section].add(line.lower())
    if not found["prefixes"] and not found["suffixes"]:
        raise AffixParseError("no affixes")
    return AffixTable(frozenset(found["prefixes"]), frozenset(found["suffixes"]))


def load_affix_file(path) -> AffixTable:
    with open(path, encoding="utf-8") as fh:
        return load_affix_table(fh)


_default_table = None


def default_table() -> AffixTable:
    """The bundled English affix table (loaded once)."""
    global _default_table
    if _default_table is None:
        text = resources.files("atr").joinpath("data/affixes.txt").read_text(encoding="utf-8")
        _default_table = load_affix_table(text)
    return _default_table


def _min_remainder(n: int) -> int:
    return max(MIN_SEGMENT_LEN, math.ceil(n / 2))


def split_word(word: str, table: AffixTable) -> WordSegments:
    """Split ``word`` into its prefix+root and root+suffix segments.

    The longest matching affix is stripped, provided what remains keeps at
    least ``max(3, ceil(len(word) / 2))`` characters; otherwise shorter
    affixes are tried.  Matching ignores case, the returned segments keep
    the characters of ``word``.

    >>> t = AffixTable.from_lists(["ap"], ["ate"])
    >>> split_word("Aproximate", t)
    WordSegments(word='Aproximate', prefix_root='Aproxim', root_suffix='roximate')
    """
    n = len(word)
    longest = min(MAX_AFFIX_LEN, n - _min_remainder(n))

    prefix_root = word
    for size in range(longest, 0, -1):
        if word[n - size:].lower() in table.suffixes:
            prefix_root = word[: n - size]
            break

    root_suffix = word
    for size in range(longest, 0, -1):
        if word[:size].lower() in table.prefixes:
            root_suffix = word[size:]
            break

    return WordSegments(word, prefix_root, root_suffix)
