# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate-NFA filter.

Same contract as ``sfnfa._kernel._pure.filter_tables``: enumerate every
transition table of a k-state NFA (start = state 0) over s symbols, walk
the labeled word trie once per table, and emit the tables for which some
final-state choice matches the sample, paired with the maximal consistent
final mask.  Survivors come out in ascending table-encoding order.
"""

from libc.stdlib cimport free, malloc

IMPL = "compiled"


def filter_tables(int num_states, int num_symbols, parents, symbols, accepts,
                  long cap=200000):
    cdef int k = num_states
    cdef int s = num_symbols
    cdef int ncells = k * s
    cdef int full = (1 << k) - 1
    cdef long n_tables = 1
    cdef int j, i, st, x
    for j in range(ncells):
        n_tables *= (1 << k)

    cdef int nnodes = len(parents)
    cdef int *par = <int *> malloc(nnodes * sizeof(int))
    cdef int *sym = <int *> malloc(nnodes * sizeof(int))
    cdef char *acc = <char *> malloc(nnodes * sizeof(char))
    cdef int *cell = <int *> malloc(ncells * sizeof(int))
    cdef int *reach = <int *> malloc(nnodes * sizeof(int))
    if par == NULL or sym == NULL or acc == NULL or cell == NULL or reach == NULL:
        free(par); free(sym); free(acc); free(cell); free(reach)
        raise MemoryError()
    for i in range(nnodes):
        par[i] = parents[i]
        sym[i] = symbols[i]
        acc[i] = 1 if accepts[i] else 0

    out = []
    cdef long t, enc
    cdef int forbidden, finals, pm, nm, viable
    try:
        for t in range(n_tables):
            enc = t
            for j in range(ncells):
                cell[j] = enc & full
                enc >>= k
            forbidden = 0 if acc[0] else 1
            reach[0] = 1
            for i in range(1, nnodes):
                pm = reach[par[i]]
                x = sym[i]
                nm = 0
                for st in range(k):
                    if pm & (1 << st):
                        nm |= cell[st * s + x]
                reach[i] = nm
                if not acc[i]:
                    forbidden |= nm
            finals = (~forbidden) & full
            viable = 1
            for i in range(nnodes):
                if acc[i] and not (reach[i] & finals):
                    viable = 0
                    break
            if viable:
                out.append((tuple([cell[j] for j in range(ncells)]), finals))
                if len(out) >= cap:
                    break
    finally:
        free(par); free(sym); free(acc); free(cell); free(reach)
    return out
