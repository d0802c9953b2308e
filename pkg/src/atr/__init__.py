"""Fault-tolerant text retrieval with interlaced segment gap-patterns."""
from .affixes import AffixTable, WordSegments, default_table, load_affix_file, load_affix_table, split_word
from .compiler import (
    ComponentPattern,
    CompositeQuery,
    Gap,
    Literal,
    QueryConfig,
    SegmentSequence,
    block_count,
    build_components,
    build_segment_sequence,
    build_single_word,
    compile_query,
    gap_distance,
    render_pattern,
)
from .errors import AffixParseError, ATRError, DomainError, QueryError
from .estimator import CharModel, MissModel, composite_expected, expected_occurrences, miss_probability, pattern_probability
from .matcher import BACKEND, Document, Match, highlight, scan, scan_each_component

__version__ = "0.1.0"
