# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels, same contract as ``_scan_py``."""
from cpython.unicode cimport PyUnicode_Find
from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t

import numpy as np


cdef inline bint _eq_at(str text, Py_ssize_t pos, str lit, Py_ssize_t size):
    cdef Py_ssize_t t
    for t in range(size):
        if text[pos + t] != lit[t]:
            return False
    return True


cdef bint _extend(str text, Py_ssize_t n, list literals, list gaps, Py_ssize_t k,
                  Py_ssize_t end, unsigned char* memo, list spans) except -1:
    cdef str lit = <str>literals[k]
    cdef Py_ssize_t size = len(lit)
    cdef Py_ssize_t hi = end + <Py_ssize_t>gaps[k - 1]
    cdef Py_ssize_t nlit = len(literals)
    cdef bint last = k == nlit - 1
    cdef Py_ssize_t q
    cdef unsigned char* row = NULL
    if hi > n - size:
        hi = n - size
    if not last:
        row = memo + (k - 1) * n
    for q in range(end, hi + 1):
        if row != NULL and row[q]:
            continue
        if not _eq_at(text, q, lit, size):
            continue
        spans.append((q, q + size))
        if last or _extend(text, n, literals, gaps, k + 1, q + size, memo, spans):
            return True
        spans.pop()
        row[q] = 1
    return False


def find_all(str text, components):
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t ncomp = len(components)
    cdef Py_ssize_t c, p, best, pos = 0
    cdef list lits_of = []
    cdef list gaps_of = []
    cdef list heads = []
    cdef list out = []
    cdef list spans, lits
    cdef Py_ssize_t* nxt = <Py_ssize_t*>calloc(ncomp, sizeof(Py_ssize_t))
    cdef unsigned char** memos = <unsigned char**>calloc(ncomp, sizeof(unsigned char*))
    cdef bint found
    if nxt == NULL or memos == NULL:
        free(nxt)
        free(memos)
        raise MemoryError()
    for literals, gaps in components:
        lits_of.append(list(literals))
        gaps_of.append(list(gaps))
        heads.append(literals[0])
    try:
        for c in range(ncomp):
            nxt[c] = PyUnicode_Find(text, heads[c], 0, n, 1)
        while True:
            best = -1
            for c in range(ncomp):
                p = nxt[c]
                if 0 <= p < pos:
                    p = PyUnicode_Find(text, heads[c], pos, n, 1)
                    nxt[c] = p
                if p != -1 and (best == -1 or p < best):
                    best = p
            if best == -1:
                return out
            found = False
            for c in range(ncomp):
                if nxt[c] != best:
                    continue
                lits = <list>lits_of[c]
                spans = [(best, best + len(<str>lits[0]))]
                if len(lits) > 2 and memos[c] == NULL:
                    memos[c] = <unsigned char*>calloc((len(lits) - 2) * n + 1, 1)
                    if memos[c] == NULL:
                        raise MemoryError()
                if len(lits) == 1 or _extend(text, n, lits, <list>gaps_of[c], 1,
                                             best + len(<str>lits[0]), memos[c], spans):
                    out.append((c, spans))
                    pos = spans[len(spans) - 1][1]
                    found = True
                    break
            if not found:
                for c in range(ncomp):
                    if nxt[c] == best:
                        nxt[c] = PyUnicode_Find(text, heads[c], best + 1, n, 1)
    finally:
        for c in range(ncomp):
            free(memos[c])
        free(memos)
        free(nxt)


cdef void _occurrences(const int[:] codes, const int[:] lit, int64_t* out) noexcept nogil:
    cdef Py_ssize_t n = codes.shape[0], size = lit.shape[0], j, t
    for j in range(n):
        out[j] = 0
    for j in range(n - size + 1):
        for t in range(size):
            if codes[j + t] != lit[t]:
                break
        else:
            out[j] = 1


def count_embeddings(codes, literals, gaps):
    cdef const int[:] text = np.ascontiguousarray(codes, dtype=np.intc)
    cdef Py_ssize_t n = text.shape[0], j, lo, hi, size, gap, k
    cdef int64_t[:] weight = np.zeros(n, dtype=np.int64)
    cdef int64_t[:] occ = np.zeros(n, dtype=np.int64)
    cdef int64_t[:] csum = np.zeros(n + 1, dtype=np.int64)
    cdef const int[:] lit
    cdef int64_t total = 0
    lit = np.ascontiguousarray(literals[len(literals) - 1], dtype=np.intc)
    _occurrences(text, lit, &weight[0] if n else NULL)
    for k in range(len(literals) - 2, -1, -1):
        lit = np.ascontiguousarray(literals[k], dtype=np.intc)
        size = lit.shape[0]
        gap = gaps[k]
        with nogil:
            csum[0] = 0
            for j in range(n):
                csum[j + 1] = csum[j] + weight[j]
            if n:
                _occurrences(text, lit, &occ[0])
            for j in range(n):
                if occ[j]:
                    lo = j + size
                    hi = j + size + gap + 1
                    if lo > n:
                        lo = n
                    if hi > n:
                        hi = n
                    weight[j] = csum[hi] - csum[lo]
                else:
                    weight[j] = 0
    for j in range(n):
        total += weight[j]
    return int(total)
