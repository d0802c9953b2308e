"""Pure-Python scan kernels.

Both functions have compiled twins in ``_scan.pyx`` with identical
signatures and results; :mod:`atr.matcher` picks one at import time.

A component is a pair ``(literals, gaps)``.  Texts passed to
``find_all`` are already case-folded.
"""
import numpy as np


def _extend(text, literals, gaps, k, end, failed, spans):
    # Place literal k somewhere in [end, end + gaps[k-1]], smallest gap first.
    lit = literals[k]
    stop = end + gaps[k - 1] + len(lit)
    last = k == len(literals) - 1
    q = text.find(lit, end, stop)
    while q != -1:
        if last:
            spans.append((q, q + len(lit)))
            return True
        if (k, q) not in failed:
            spans.append((q, q + len(lit)))
            if _extend(text, literals, gaps, k + 1, q + len(lit), failed, spans):
                return True
            spans.pop()
            failed.add((k, q))
        q = text.find(lit, q + 1, stop)
    return False


def find_all(text, components):
    """Leftmost, non-overlapping matches of the alternation ``components``.

    Returns ``[(component_position, [(start, end), ...]), ...]`` with one
    span per literal.  At a given start the first component in order that
    matches wins; inside a component gaps are as short as possible.
    """
    heads = [lits[0] for lits, _ in components]
    nxt = [text.find(h) for h in heads]
    failed = [set() for _ in components]
    out = []
    pos = 0
    while True:
        best = -1
        for c, p in enumerate(nxt):
            if 0 <= p < pos:
                p = nxt[c] = text.find(heads[c], pos)
            if p != -1 and (best == -1 or p < best):
                best = p
        if best == -1:
            return out
        for c, (lits, gaps) in enumerate(components):
            if nxt[c] != best:
                continue
            spans = [(best, best + len(lits[0]))]
            if len(lits) == 1 or _extend(text, lits, gaps, 1, spans[0][1], failed[c], spans):
                out.append((c, spans))
                pos = spans[-1][1]
                break
        else:
            for c in range(len(components)):
                if nxt[c] == best:
                    nxt[c] = text.find(heads[c], best + 1)


def _occurrences(codes, lit):
    n, size = len(codes), len(lit)
    if size > n:
        return np.zeros(n, dtype=np.int64)
    hit = np.ones(n - size + 1, dtype=bool)
    for t, ch in enumerate(lit):
        hit &= codes[t : n - size + 1 + t] == ch
    out = np.zeros(n, dtype=np.int64)
    out[: n - size + 1] = hit
    return out


def count_embeddings(codes, literals, gaps):
    """Count every (start, gap lengths) placement of the pattern in ``codes``.

    ``codes`` and each literal are integer arrays.  Overlapping placements
    all count, which is the quantity whose expectation the estimator
    predicts.
    """
    codes = np.asarray(codes)
    n = len(codes)
    weight = _occurrences(codes, literals[-1])
    for k in range(len(literals) - 2, -1, -1):
        size, gap = len(literals[k]), gaps[k]
        csum = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(weight, out=csum[1:])
        j = np.arange(n)
        lo = np.minimum(j + size, n)
        hi = np.minimum(j + size + gap + 1, n)
        weight = _occurrences(codes, literals[k]) * (csum[hi] - csum[lo])
    return int(weight.sum())
