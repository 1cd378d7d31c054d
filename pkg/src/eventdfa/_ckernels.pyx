# cython: language_level=3
"""Compiled counterparts of ``eventdfa._pykernels`` (same signatures)."""

from libc.stdlib cimport malloc, free


def walk(const int[:] table, int n_symbols, int state, const int[:] codes):
    cdef Py_ssize_t i, n = codes.shape[0]
    cdef int q = state
    for i in range(n):
        q = table[q * n_symbols + codes[i]]
    return q


def trajectory(const int[:] table, int n_symbols, int state, const int[:] codes):
    cdef Py_ssize_t i, n = codes.shape[0]
    cdef int q = state
    out = [q]
    for i in range(n):
        q = table[q * n_symbols + codes[i]]
        out.append(q)
    return out


def walk_many(const int[:] table, int n_symbols, int state,
              const int[:] codes, const int[:] offsets):
    cdef Py_ssize_t i, j, n = offsets.shape[0] - 1
    cdef int q
    finals = []
    for i in range(n):
        q = state
        for j in range(offsets[i], offsets[i + 1]):
            q = table[q * n_symbols + codes[j]]
        finals.append(q)
    return finals


def live_states(const int[:] table, int n_states, int n_symbols, accepting):
    cdef Py_ssize_t n_edges = <Py_ssize_t>n_states * n_symbols
    cdef int *count = <int *>malloc((n_states + 1) * sizeof(int))
    cdef int *pred = <int *>malloc((n_edges + 1) * sizeof(int))
    cdef int *stack = <int *>malloc((n_states + 1) * sizeof(int))
    cdef char *live = <char *>malloc(n_states + 1)
    cdef Py_ssize_t e
    cdef int q, p, c, top = 0, k
    if not count or not pred or not stack or not live:
        free(count); free(pred); free(stack); free(live)
        raise MemoryError()
    try:
        # reverse edges in CSR form: count[t]..count[t+1] index pred
        for q in range(n_states + 1):
            count[q] = 0
        for e in range(n_edges):
            count[table[e] + 1] += 1
        for q in range(n_states):
            count[q + 1] += count[q]
        for q in range(n_states):
            for c in range(n_symbols):
                p = table[q * n_symbols + c]
                pred[count[p]] = q
                count[p] += 1
        # count[t] now points one past t's block; shift back
        for q in range(n_states, 0, -1):
            count[q] = count[q - 1]
        count[0] = 0
        for q in range(n_states):
            live[q] = 1 if accepting[q] else 0
            if live[q]:
                stack[top] = q
                top += 1
        while top > 0:
            top -= 1
            q = stack[top]
            for k in range(count[q], count[q + 1]):
                p = pred[k]
                if not live[p]:
                    live[p] = 1
                    stack[top] = p
                    top += 1
        return [live[q] != 0 for q in range(n_states)]
    finally:
        free(count); free(pred); free(stack); free(live)
