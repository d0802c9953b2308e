"""Independent reference implementations used only by the tests.

They enumerate every start position and every gap-length combination
explicitly and share no code with the library kernels.
"""
import itertools


def place(text, literals, gaps, start):
    """Spans of the first gap combination (lexicographic) placing the pattern at ``start``."""
    for combo in itertools.product(*(range(g + 1) for g in gaps)):
        spans, pos, ok = [], start, True
        for k, lit in enumerate(literals):
            if k:
                pos += combo[k - 1]
            if text[pos:pos + len(lit)] != lit:
                ok = False
                break
            spans.append((pos, pos + len(lit)))
            pos += len(lit)
        if ok:
            return spans
    return None


def brute_find_all(text, components):
    out, pos = [], 0
    while pos < len(text):
        for c, (lits, gaps) in enumerate(components):
            spans = place(text, lits, gaps, pos)
            if spans is not None:
                out.append((c, spans))
                pos = spans[-1][1]
                break
        else:
            pos += 1
    return out


def brute_count(seq, literals, gaps):
    """Number of (start, gap combination) placements; ``seq`` is any sequence."""
    seq = list(seq)
    literals = [list(lit) for lit in literals]
    total = 0
    for start in range(len(seq)):
        for combo in itertools.product(*(range(g + 1) for g in gaps)):
            pos, ok = start, True
            for k, lit in enumerate(literals):
                if k:
                    pos += combo[k - 1]
                if seq[pos:pos + len(lit)] != lit:
                    ok = False
                    break
                pos += len(lit)
            total += ok
    return total


def single_edits(word, alphabet):
    """(kind, edited word) for every substitution, deletion and 1-2 char insertion."""
    for i in range(len(word)):
        for ch in alphabet:
            if ch != word[i]:
                yield "substitution", word[:i] + ch + word[i + 1:]
        yield "deletion", word[:i] + word[i + 1:]
    for i in range(len(word) + 1):
        for ch in alphabet:
            yield "insertion-1", word[:i] + ch + word[i:]
        for a, b in itertools.product(alphabet, repeat=2):
            yield "insertion-2", word[:i] + a + b + word[i:]
