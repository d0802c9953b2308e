"""Scan documents for compiled queries and format hits.

The scan kernel is the compiled ``atr._scan`` extension when it is
available, else the pure-Python ``atr._scan_py``.  Setting the
environment variable ``ATR_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .compiler import MULTI_WORD, CompositeQuery

if os.environ.get("ATR_PURE_PYTHON", "") not in ("", "0"):
    from . import _scan_py as _kernel
else:
    try:
        from . import _scan as _kernel
    except ImportError:
        from . import _scan_py as _kernel

BACKEND = "python" if _kernel.__name__.endswith("_scan_py") else "cython"
find_all = _kernel.find_all
count_embeddings = _kernel.count_embeddings


@dataclass(frozen=True)
class Document:
    id: str
    text: str

    @property
    def length(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class Match:
    doc_id: str
    component_index: int
    spans: tuple[tuple[int, int], ...]

    @property
    def full_span(self) -> tuple[int, int]:
        return self.spans[0][0], self.spans[-1][1]

    def to_dict(self) -> dict:
        return {"doc": self.doc_id, "component": self.component_index, "spans": [list(s) for s in self.spans]}


def fold(text: str) -> str:
    """Lowercase ``text`` character by character, keeping its length."""
    low = text.lower()
    if len(low) == len(text):
        return low
    return "".join(lc if len(lc := ch.lower()) == 1 else ch for ch in text)


def _kernel_components(cq: CompositeQuery, case_insensitive: bool):
    prep = fold if case_insensitive else (lambda s: s)
    return [(tuple(prep(lit) for lit in c.literals), c.gaps) for c in cq.components]


def _label(cq: CompositeQuery, position: int) -> int:
    return position + 1 if cq.kind == MULTI_WORD else 0


def scan(cq: CompositeQuery, doc: Document, case_insensitive: bool = True, kernel=None) -> list[Match]:
    """All leftmost non-overlapping occurrences of ``cq`` in ``doc``.

    ``component_index`` is 1-based for multi-word queries and 0 for the
    single-word and literal kinds.
    """
    text = fold(doc.text) if case_insensitive else doc.text
    finder = kernel.find_all if kernel is not None else find_all
    hits = finder(text, _kernel_components(cq, case_insensitive))
    return [Match(doc.id, _label(cq, c), tuple(map(tuple, spans))) for c, spans in hits]


def scan_each_component(cq: CompositeQuery, doc: Document, case_insensitive: bool = True) -> list[list[Match]]:
    """Scan every component on its own (diagnostics)."""
    text = fold(doc.text) if case_insensitive else doc.text
    out = []
    for position, comp in enumerate(_kernel_components(cq, case_insensitive)):
        hits = find_all(text, [comp])
        out.append([Match(doc.id, _label(cq, position), tuple(map(tuple, s))) for _, s in hits])
    return out


def scan_many(cq: CompositeQuery, docs, case_insensitive: bool = True) -> list[Match]:
    """Scan several documents; results ordered by document id, then offset."""
    matches = [m for doc in docs for m in scan(cq, doc, case_insensitive)]
    return sorted(matches, key=lambda m: (m.doc_id, m.full_span))


def highlight(m: Match, doc: Document, context: int = 40, markers: tuple[str, str] = ("**", "**")) -> str:
    """Snippet around ``m`` with its literal spans wrapped in ``markers``.

    Touching spans are wrapped together.  ``...`` marks text cut off at
    either side.
    """
    text = doc.text
    start, end = m.full_span
    if not 0 <= start < end <= len(text) or context < 0:
        raise ValueError(f"match span {m.full_span} does not fit document {doc.id!r}")
    lo = max(0, start - context)
    hi = min(len(text), end + context)

    merged: list[list[int]] = []
    for s, e in m.spans:
        if merged and s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])

    open_, close = markers
    parts = ["..." if lo > 0 else ""]
    cursor = lo
    for s, e in merged:
        parts += [text[cursor:s], open_, text[s:e], close]
        cursor = e
    parts.append(text[cursor:hi])
    parts.append("..." if hi < len(text) else "")
    return "".join(parts)
