# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel.  Mirrors ``_pykernels.packing_search`` exactly."""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    FOUND = 1
    EXHAUSTED = 0
    BUDGET = -1


def packing_search(int n, dist, order, radii, long long budget, fixed=None, bint symmetry=True):
    cdef int k = len(radii)
    cdef int m = len(order)
    cdef int i, v, w, c, r, depth, cnt, pos
    cdef long long nodes = 0
    cdef bint placed, dead

    cdef int *d = <int *> malloc(n * n * sizeof(int)) if n > 0 else NULL
    cdef int *rad = <int *> malloc(k * sizeof(int))
    cdef int *prev_same = <int *> malloc(k * sizeof(int))
    cdef int *ord_ = <int *> malloc((m + 1) * sizeof(int))
    cdef int *nxt = <int *> calloc(m + 1, sizeof(int))
    cdef int *color = <int *> malloc((n + 1) * sizeof(int))
    cdef int *size = <int *> calloc(k, sizeof(int))
    cdef int *nblock = <int *> calloc(n + 1, sizeof(int))
    cdef int *blocked = <int *> calloc(k * n + 1, sizeof(int))
    # ball CSR per class: start[c*(n+1)+v] .. start[c*(n+1)+v+1]
    cdef int *start = <int *> malloc((k * (n + 1) + 1) * sizeof(int))
    cdef int *data = NULL
    cdef int *bc
    cdef int total = 0

    try:
        for i in range(n * n):
            d[i] = dist[i]
        for c in range(k):
            rad[c] = radii[c]
            prev_same[c] = 1 if (c > 0 and radii[c] == radii[c - 1]) else 0
        for i in range(m):
            ord_[i] = order[i]
        for v in range(n):
            color[v] = -1

        for c in range(k):
            for v in range(n):
                for w in range(n):
                    if w != v and d[v * n + w] <= rad[c]:
                        total += 1
        data = <int *> malloc((total + 1) * sizeof(int))
        pos = 0
        for c in range(k):
            for v in range(n):
                start[c * (n + 1) + v] = pos
                for w in range(n):
                    if w != v and d[v * n + w] <= rad[c]:
                        data[pos] = w
                        pos += 1
            start[c * (n + 1) + n] = pos

        if fixed is not None:
            for v in range(n):
                c = fixed[v]
                if c >= 0:
                    if blocked[c * n + v]:
                        return EXHAUSTED, None, 0
                    _assign(v, c, n, color, size, blocked, nblock, start, data)

        depth = 0
        while True:
            if depth == m:
                return FOUND, [color[i] for i in range(n)], nodes
            if depth < 0:
                return EXHAUSTED, None, nodes
            v = ord_[depth]
            if color[v] >= 0:
                _unassign(v, n, color, size, blocked, nblock, start, data)
            c = nxt[depth]
            placed = False
            while c < k:
                if blocked[c * n + v] == 0 and not (symmetry and prev_same[c] and size[c - 1] == 0):
                    nodes += 1
                    if nodes > budget:
                        return BUDGET, None, nodes
                    _assign(v, c, n, color, size, blocked, nblock, start, data)
                    dead = False
                    for i in range(start[c * (n + 1) + v], start[c * (n + 1) + v + 1]):
                        w = data[i]
                        if color[w] < 0 and nblock[w] == k:
                            dead = True
                            break
                    if dead:
                        _unassign(v, n, color, size, blocked, nblock, start, data)
                        c += 1
                        continue
                    placed = True
                    break
                c += 1
            if placed:
                nxt[depth] = c + 1
                depth += 1
                if depth <= m:
                    nxt[depth] = 0
            else:
                nxt[depth] = 0
                depth -= 1
    finally:
        free(d); free(rad); free(prev_same); free(ord_); free(nxt); free(color)
        free(size); free(nblock); free(blocked); free(start); free(data)


cdef inline void _assign(int v, int c, int n, int *color, int *size, int *blocked,
                         int *nblock, int *start, int *data) nogil:
    cdef int i, w
    cdef int *bc = blocked + c * n
    color[v] = c
    size[c] += 1
    for i in range(start[c * (n + 1) + v], start[c * (n + 1) + v + 1]):
        w = data[i]
        if bc[w] == 0:
            nblock[w] += 1
        bc[w] += 1


cdef inline void _unassign(int v, int n, int *color, int *size, int *blocked,
                           int *nblock, int *start, int *data) nogil:
    cdef int i, w
    cdef int c = color[v]
    cdef int *bc = blocked + c * n
    color[v] = -1
    size[c] -= 1
    for i in range(start[c * (n + 1) + v], start[c * (n + 1) + v + 1]):
        w = data[i]
        bc[w] -= 1
        if bc[w] == 0:
            nblock[w] -= 1
