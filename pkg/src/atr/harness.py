"""Error injection and Monte-Carlo checks of recall and occurrence counts."""
from __future__ import annotations

import json
import string
from dataclasses import asdict, dataclass

import numpy as np

from .compiler import ComponentPattern, QueryConfig, compile_query, normalize
from .errors import QueryError
from .estimator import CharModel, miss_probability, pattern_probability
from .matcher import Document, count_embeddings, scan

KINDS = ("substitution", "insertion", "deletion")


@dataclass(frozen=True)
class ErrorSpec:
    rate: float
    kinds: tuple[str, ...] = KINDS
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.rate <= 1:
            raise ValueError("rate must lie in [0, 1]")
        if not self.kinds or any(k not in KINDS for k in self.kinds):
            raise ValueError(f"kinds must be a nonempty subset of {KINDS}")
        object.__setattr__(self, "kinds", tuple(self.kinds))


@dataclass(frozen=True)
class Edit:
    position: int
    kind: str
    before: str
    after: str


@dataclass(frozen=True)
class TrialReport:
    b: int
    epsilon: float
    trials: int
    recall: float
    predicted_miss: float
    observed_miss: float

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def inject_errors(text: str, spec: ErrorSpec, alphabet=None, rng=None) -> tuple[str, list[Edit]]:
    """Corrupt ``text``: each character is edited with probability ``spec.rate``.

    The edit kind is drawn uniformly from ``spec.kinds``; substituted and
    inserted characters are drawn uniformly from ``alphabet`` (by default
    the characters of ``text``).  Insertions go in front of the character.
    Positions in the returned log refer to the original text.
    """
    if rng is None:
        rng = np.random.default_rng(spec.seed)
    symbols = sorted(set(text) if alphabet is None else set(alphabet))
    n = len(text)
    if n == 0 or spec.rate == 0:
        return text, []
    hit = np.flatnonzero(rng.random(n) < spec.rate)
    kind_draw = rng.integers(len(spec.kinds), size=len(hit))
    char_draw = rng.integers(len(symbols), size=len(hit)) if symbols else np.zeros(len(hit), dtype=int)

    pieces, log, prev = [], [], 0
    for p, kd, cd in zip(hit.tolist(), kind_draw.tolist(), char_draw.tolist()):
        kind = spec.kinds[kd]
        if kind != "deletion" and not symbols:
            continue
        pieces.append(text[prev:p])
        if kind == "substitution":
            pieces.append(symbols[cd])
            log.append(Edit(p, kind, text[p], symbols[cd]))
        elif kind == "insertion":
            pieces.append(symbols[cd] + text[p])
            log.append(Edit(p, kind, "", symbols[cd]))
        else:
            log.append(Edit(p, kind, text[p], ""))
        prev = p + 1
    pieces.append(text[prev:])
    return "".join(pieces), log


def remap_region(log: list[Edit], start: int, end: int) -> tuple[int, int]:
    """Where the original half-open region ``[start, end)`` ended up after ``log``."""
    new_start, new_end = start, end
    for e in log:
        if e.kind == "insertion":
            new_start += e.position <= start
            new_end += e.position < end
        elif e.kind == "deletion":
            new_start -= e.position < start
            new_end -= e.position < end
    return new_start, max(new_start, new_end)


def _overlaps(matches, start: int, end: int) -> bool:
    return any(s < end and e > start for s, e in (m.full_span for m in matches))


def _locate(query: str, carrier: str) -> tuple[str, int, int]:
    planted = " ".join(normalize(query))
    start = carrier.find(planted)
    if not planted or start < 0:
        raise QueryError("query absent from carrier text")
    return planted, start, start + len(planted)


def measure_recall(
    query: str,
    carrier_text: str,
    specs: list[ErrorSpec],
    cfg: QueryConfig | None = None,
    trials: int = 100,
    table=None,
    blocks: int | None = None,
    case_insensitive: bool = True,
) -> list[TrialReport]:
    """Corrupt ``carrier_text`` repeatedly and count how often the planted query survives.

    Trial ``t`` of a spec uses the generator seeded with ``(spec.seed, t)``,
    so runs that differ only in ``blocks`` see identical corruption.
    """
    planted, start, end = _locate(query, carrier_text)
    cq = compile_query(planted, table, cfg, blocks)
    alphabet = sorted(set(carrier_text))
    reports = []
    for spec in specs:
        misses = 0
        for t in range(trials):
            rng = np.random.default_rng([spec.seed, t])
            corrupted, log = inject_errors(carrier_text, spec, alphabet, rng)
            lo, hi = remap_region(log, start, end)
            if not _overlaps(scan(cq, Document("trial", corrupted), case_insensitive), lo, hi):
                misses += 1
        observed = misses / trials if trials else 0.0
        predicted = miss_probability(cq, spec.rate).composite if spec.rate < 1 else 1.0
        reports.append(TrialReport(cq.b, spec.rate, trials, 1.0 - observed, predicted, observed))
    return reports


def scrambled_word_recall(
    query: str,
    carrier_text: str,
    trials: int,
    seed: int = 0,
    cfg: QueryConfig | None = None,
    table=None,
    blocks: int | None = None,
) -> float:
    """Recall when one whole query word (chosen at random) is rewritten.

    Every character of the chosen word is replaced by a different
    non-space character of the carrier's alphabet, keeping its length.
    """
    planted, start, end = _locate(query, carrier_text)
    cq = compile_query(planted, table, cfg, blocks)
    words = planted.split(" ")
    offsets = np.cumsum([0] + [len(w) + 1 for w in words[:-1]]) + start
    symbols = sorted(ch for ch in set(carrier_text) if not ch.isspace())
    found = 0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        w = int(rng.integers(len(words)))
        pos = int(offsets[w])
        chars = list(carrier_text)
        for j in range(pos, pos + len(words[w])):
            choices = [s for s in symbols if s != chars[j]]
            chars[j] = choices[int(rng.integers(len(choices)))]
        if _overlaps(scan(cq, Document("trial", "".join(chars))), start, end):
            found += 1
    return found / trials if trials else 1.0


def random_text(model: CharModel, length: int, rng) -> str:
    symbols = sorted(model.alphabet)
    probs = np.array([model.probs[s] for s in symbols])
    return "".join(np.array(symbols)[rng.choice(len(symbols), size=length, p=probs)])


def random_words(rng, count: int, min_len: int = 1, max_len: int = 10, alphabet: str = string.ascii_lowercase) -> list[str]:
    letters = np.array(list(alphabet))
    lengths = rng.integers(min_len, max_len + 1, size=count)
    return ["".join(letters[rng.integers(len(letters), size=k)]) for k in lengths]


def monte_carlo_occurrences(c: ComponentPattern, model: CharModel, l_T: int, trials: int, seed: int = 0) -> float:
    """Mean number of placements of ``c`` over random texts drawn from ``model``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pattern_probability(c, model)  # raises DomainError for foreign characters
    symbols = sorted(model.alphabet)
    index = {s: i for i, s in enumerate(symbols)}
    probs = np.array([model.probs[s] for s in symbols])
    literals = [np.array([index[ch] for ch in lit], dtype=np.intc) for lit in c.literals]
    rng = np.random.default_rng(seed)
    total = 0
    for _ in range(trials):
        codes = rng.choice(len(symbols), size=l_T, p=probs).astype(np.intc)
        total += count_embeddings(codes, literals, list(c.gaps))
    return total / trials
