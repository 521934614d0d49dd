# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Mirrors `flatsep._pykernels` function for function."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free


def run(const int[:] delta, int n_symbols, int state, const int[:] codes):
    cdef Py_ssize_t i, m = codes.shape[0]
    cdef int q = state
    for i in range(m):
        q = delta[q * n_symbols + codes[i]]
    return q


def word_action(const int[:] delta, int n_states, int n_symbols, const int[:] codes):
    cdef Py_ssize_t i, m = codes.shape[0]
    cdef int p, q
    out = []
    for p in range(n_states):
        q = p
        for i in range(m):
            q = delta[q * n_symbols + codes[i]]
        out.append(q)
    return tuple(out)


def cyk_dense(const int[:] codes, const unsigned long long[:] unary,
              const int[:] rules, int start):
    """Bitset CYK for grammars with at most 64 nonterminals.

    `unary[t]` is the mask of nonterminals with a production to terminal code
    `t`; `rules` holds flattened (A, B, C) triples for A -> B C.
    """
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t n_rules = rules.shape[0] // 3
    cdef Py_ssize_t i, j, k, span, r
    cdef uint64_t left, right, acc
    cdef uint64_t *chart
    cdef bint result
    if n == 0:
        return False
    # chart[i * n + j] holds the mask for the span codes[i..j] inclusive
    chart = <uint64_t *> calloc(n * n, sizeof(uint64_t))
    if chart == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            chart[i * n + i] = unary[codes[i]]
        for span in range(2, n + 1):
            for i in range(n - span + 1):
                j = i + span - 1
                acc = 0
                for k in range(i, j):
                    left = chart[i * n + k]
                    if left == 0:
                        continue
                    right = chart[(k + 1) * n + j]
                    if right == 0:
                        continue
                    for r in range(n_rules):
                        if (left >> rules[3 * r + 1]) & 1 and (right >> rules[3 * r + 2]) & 1:
                            acc |= (<uint64_t> 1) << rules[3 * r]
                chart[i * n + j] = acc
        result = (chart[n - 1] >> start) & 1
    finally:
        free(chart)
    return bool(result)
