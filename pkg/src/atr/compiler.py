"""Compile queries into gap patterns.

Multi-word queries become a *composite*: the words are split into
overlapping segments, the segments are dealt round-robin into ``b``
interlaced components, and consecutive literals inside a component are
separated by bounded wildcard gaps.  A component still matches when the
words it does not use are corrupted, so the alternation of all
components tolerates damage to any word that is absent from at least one
of them.

Single-word queries become an alternation of near-copies of the word,
each allowing one localized edit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .affixes import AffixTable, default_table, split_word
from .errors import QueryError

MIN_SPLIT_LEN = 3
SINGLE_WORD_GAP = 2

MULTI_WORD = "multi-word"
SINGLE_WORD = "single-word"
LITERAL = "literal"

_META = set("\\.^$|?*+()[]{}")


@dataclass(frozen=True)
class QueryConfig:
    percent_scan: int = 50
    gap_multiplier: int = 20
    min_gap_factor: int = 3
    short_word_limit: int = 4

    def __post_init__(self):
        if not 1 <= self.percent_scan <= 100:
            raise ValueError("percent_scan must lie in [1, 100]")
        if self.gap_multiplier < 1 or self.min_gap_factor < 1:
            raise ValueError("gap factors must be >= 1")
        if self.short_word_limit < 0:
            raise ValueError("short_word_limit must be >= 0")


@dataclass(frozen=True)
class Segment:
    text: str
    start: int
    end: int
    word_index: int
    word_length: int


@dataclass(frozen=True)
class SegmentSequence:
    segments: tuple[Segment, ...]
    n: int
    query_layout: str

    @property
    def m(self) -> int:
        return len(self.segments)

    def __getitem__(self, i) -> Segment:
        return self.segments[i]

    def __len__(self):
        return len(self.segments)


@dataclass(frozen=True)
class Literal:
    text: str


@dataclass(frozen=True)
class Gap:
    max_len: int


@dataclass(frozen=True)
class ComponentPattern:
    """Literals separated by gaps of at most ``gaps[i]`` characters.

    ``sources`` optionally records, for each literal, the indices of the
    segments it was built from.
    """

    literals: tuple[str, ...]
    gaps: tuple[int, ...] = ()
    sources: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.literals:
            raise ValueError("a component needs at least one literal")
        if any(not lit for lit in self.literals):
            raise ValueError("literals must be nonempty")
        if len(self.gaps) != len(self.literals) - 1:
            raise ValueError("need exactly one gap between consecutive literals")
        if any(g < 0 for g in self.gaps):
            raise ValueError("gap lengths must be >= 0")

    @classmethod
    def from_elements(cls, elements: Sequence[Literal | Gap]) -> ComponentPattern:
        literals = tuple(e.text for e in elements[0::2])
        gaps = tuple(e.max_len for e in elements[1::2])
        if any(not isinstance(e, Literal) for e in elements[0::2]) or any(
            not isinstance(e, Gap) for e in elements[1::2]
        ):
            raise ValueError("elements must alternate Literal, Gap, Literal, ...")
        return cls(literals, gaps)

    @property
    def elements(self) -> list[Literal | Gap]:
        out: list[Literal | Gap] = [Literal(self.literals[0])]
        for gap, lit in zip(self.gaps, self.literals[1:]):
            out += [Gap(gap), Literal(lit)]
        return out

    @property
    def literal_length(self) -> int:
        return sum(map(len, self.literals))

    def render(self) -> str:
        parts = [escape(self.literals[0])]
        for gap, lit in zip(self.gaps, self.literals[1:]):
            parts.append(f".{{0,{gap}}}{escape(lit)}")
        return "".join(parts)


@dataclass(frozen=True)
class CompositeQuery:
    components: tuple[ComponentPattern, ...]
    b: int
    kind: str
    query: str = ""
    sequence: SegmentSequence | None = field(default=None, compare=False)


def escape(text: str) -> str:
    return "".join("\\" + ch if ch in _META else ch for ch in text)


def normalize(query: str) -> list[str]:
    return query.split()


def build_segment_sequence(words: Sequence[str], table: AffixTable) -> SegmentSequence:
    """Lay the words out with single spaces and collect their segments.

    Words shorter than three characters keep their place in the layout
    but contribute no segments.
    """
    if not words:
        raise QueryError("empty query")
    segments = []
    offset = 0
    for index, word in enumerate(words):
        if len(word) >= MIN_SPLIT_LEN:
            parts = split_word(word, table)
            end = offset + len(word)
            segments.append(Segment(parts.prefix_root, offset, offset + len(parts.prefix_root), index, len(word)))
            segments.append(Segment(parts.root_suffix, end - len(parts.root_suffix), end, index, len(word)))
        offset += len(word) + 1
    if not segments:
        raise QueryError("query too short for composite mode")
    return SegmentSequence(tuple(segments), len(words), " ".join(words))


def block_count(cfg: QueryConfig, m: int) -> int:
    return max(1, min(m // 2, 1 + 100 // cfg.percent_scan))


def gap_distance(seq: SegmentSequence, i: int, i_next: int, cfg: QueryConfig) -> int:
    """Maximum gap allowed between segments ``i`` and ``i_next`` (0-based)."""
    if not 0 <= i < i_next < len(seq):
        raise IndexError(f"bad segment pair ({i}, {i_next})")
    min_d = max(0, seq[i_next].start - seq[i].end)
    if seq[i_next].word_length <= cfg.short_word_limit:
        return cfg.min_gap_factor * min_d
    return max(cfg.gap_multiplier * (i_next - i), cfg.min_gap_factor * min_d)


def build_components(seq: SegmentSequence, b: int, cfg: QueryConfig) -> list[ComponentPattern]:
    """Deal segments ``k, k+b, k+2b, ...`` into component ``k``.

    Segments that overlap in the query layout (the two halves of one word
    when ``b == 1``) cannot follow each other across a gap, so they are
    fused into the single literal spanning their union.
    """
    if not 1 <= b <= max(1, seq.m // 2):
        raise QueryError(f"block count {b} outside [1, {max(1, seq.m // 2)}]")
    layout = seq.query_layout
    components = []
    for k in range(b):
        indices = range(k, seq.m, b)
        literals, gaps, sources = [], [], []
        start, end, prev, group = None, None, None, []
        for i in indices:
            seg = seq[i]
            if start is not None and seg.start < end:
                end = max(end, seg.end)
                group.append(i)
            else:
                if start is not None:
                    literals.append(layout[start:end])
                    sources.append(tuple(group))
                    gaps.append(gap_distance(seq, prev, i, cfg))
                start, end, group = seg.start, seg.end, [i]
            prev = i
        literals.append(layout[start:end])
        sources.append(tuple(group))
        components.append(ComponentPattern(tuple(literals), tuple(gaps), tuple(sources)))
    return components


def _single_word_branches(q: str) -> list[ComponentPattern]:
    n = len(q)
    g = SINGLE_WORD_GAP
    branches = []
    # Replace `width` original characters after the cut with a short gap.
    # width 0 absorbs insertions, 1 substitutions and deletions, 2 the
    # two-character damage. Cuts next to the word ends are covered by the
    # plain truncations appended last.
    for width, first, last in ((0, 2, n - 2), (1, 1, n - 2), (2, 1, n - 3)):
        for cut in range(first, last + 1):
            branches.append(ComponentPattern((q[:cut], q[cut + width:]), (g,)))
    branches.append(ComponentPattern((q[: n - 1],)))
    branches.append(ComponentPattern((q[1:],)))
    return branches


def build_single_word(q: str) -> CompositeQuery:
    if not q:
        raise QueryError("empty query")
    if len(q) < MIN_SPLIT_LEN:
        return CompositeQuery((ComponentPattern((q,)),), 1, LITERAL, q)
    return CompositeQuery(tuple(_single_word_branches(q)), 1, SINGLE_WORD, q)


def compile_query(
    query: str,
    table: AffixTable | None = None,
    cfg: QueryConfig | None = None,
    blocks: int | None = None,
) -> CompositeQuery:
    """Compile ``query`` into a :class:`CompositeQuery`.

    ``blocks`` overrides the block count derived from ``cfg.percent_scan``.
    """
    words = normalize(query)
    if not words:
        raise QueryError("empty query")
    if len(words) == 1:
        return build_single_word(words[0])
    table = default_table() if table is None else table
    cfg = cfg or QueryConfig()
    seq = build_segment_sequence(words, table)
    b = block_count(cfg, seq.m) if blocks is None else blocks
    components = build_components(seq, b, cfg)
    return CompositeQuery(tuple(components), b, MULTI_WORD, seq.query_layout, seq)


def render_pattern(cq: CompositeQuery) -> str:
    if cq.kind == LITERAL:
        return escape(cq.components[0].literals[0])
    return "(?:" + "|".join(c.render() for c in cq.components) + ")"
