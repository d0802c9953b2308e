"""Analytic occurrence and miss-probability estimates for gap patterns.

The occurrence estimate counts all placements of a pattern in a random
text of length ``l_T``: every start position, times every admissible
combination of gap lengths, times the probability that the literal
characters line up::

    E = l_T * prod(max_len + 1 for each gap) * P(literals)

Boundary effects near the end of the text are ignored.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .compiler import ComponentPattern, CompositeQuery
from .errors import DomainError

PROB_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CharModel:
    probs: Mapping[str, float]

    def __post_init__(self):
        if not self.probs:
            raise ValueError("empty alphabet")
        if any(len(ch) != 1 for ch in self.probs):
            raise ValueError("alphabet members must be single characters")
        if any(p < 0 for p in self.probs.values()):
            raise ValueError("negative probability")
        total = math.fsum(self.probs.values())
        if abs(total - 1.0) > PROB_TOLERANCE:
            raise ValueError(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "probs", dict(self.probs))

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.probs)

    @classmethod
    def uniform(cls, alphabet) -> CharModel:
        symbols = sorted(set(alphabet))
        return cls({ch: 1.0 / len(symbols) for ch in symbols})

    @classmethod
    def from_text(cls, text: str) -> CharModel:
        """Empirical character frequencies of ``text``."""
        counts = Counter(text)
        if not counts:
            raise ValueError("cannot build a model from empty text")
        total = sum(counts.values())
        return cls({ch: n / total for ch, n in sorted(counts.items())})


@dataclass(frozen=True)
class MissModel:
    epsilon: float
    per_component: tuple[float, ...]
    composite: float
    query_miss: float
    """Miss probability of the unsplit query, for comparison."""


def pattern_probability(c: ComponentPattern, model: CharModel) -> float:
    prob = 1.0
    for lit in c.literals:
        for ch in lit:
            try:
                prob *= model.probs[ch]
            except KeyError:
                raise DomainError(f"character {ch!r} is not in the model alphabet") from None
    return prob


def expected_occurrences(c: ComponentPattern, l_T: int, model: CharModel) -> float:
    if l_T < 0:
        raise ValueError("text length must be >= 0")
    placements = math.prod(g + 1 for g in c.gaps)
    return l_T * placements * pattern_probability(c, model)


def composite_expected(cq: CompositeQuery, l_T: int, model: CharModel) -> float:
    return math.fsum(expected_occurrences(c, l_T, model) for c in cq.components)


def _miss(length: int, epsilon: float) -> float:
    return 1.0 - (1.0 - epsilon) ** length


def miss_probability(cq: CompositeQuery, epsilon: float) -> MissModel:
    """Chance that per-character errors at rate ``epsilon`` break each component.

    A component is missed when any of its literal characters is hit; the
    composite is missed when every component is, taken as independent.
    Components share words, so the composite figure is an approximation
    rather than an exact value.
    """
    if not 0 <= epsilon < 1:
        raise ValueError("epsilon must lie in [0, 1)")
    per = tuple(_miss(c.literal_length, epsilon) for c in cq.components)
    query_chars = len(cq.query.replace(" ", "")) if cq.query else max(c.literal_length for c in cq.components)
    return MissModel(epsilon, per, math.prod(per), _miss(query_chars, epsilon))
