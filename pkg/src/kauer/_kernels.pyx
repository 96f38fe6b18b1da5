# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


def compose(a, b):
    cdef Py_ssize_t n = len(b), i
    out = [0] * n
    for i in range(n):
        out[i] = a[b[i]]
    return tuple(out)


def inverse(a):
    cdef Py_ssize_t n = len(a), i
    out = [0] * n
    for i in range(n):
        out[a[i]] = i
    return tuple(out)


def orbit_labels(a):
    cdef Py_ssize_t n = len(a), i, j
    cdef int k = 0
    cdef int *p = <int *> malloc(n * sizeof(int) + 1)
    cdef int *lab = <int *> malloc(n * sizeof(int) + 1)
    try:
        for i in range(n):
            p[i] = a[i]
            lab[i] = -1
        for i in range(n):
            if lab[i] >= 0:
                continue
            j = i
            while lab[j] < 0:
                lab[j] = k
                j = p[j]
            k += 1
        return [lab[i] for i in range(n)], k
    finally:
        free(p)
        free(lab)


def min_code(sigma, iota, members):
    cdef Py_ssize_t n = len(sigma), m = len(members)
    cdef Py_ssize_t i, s, pos, clen, olen, best_len = -1
    cdef int x, y, v, w, t
    cdef bint worse, tied
    cdef int *sg = <int *> malloc(n * sizeof(int) + 1)
    cdef int *io = <int *> malloc(n * sizeof(int) + 1)
    cdef int *num = <int *> malloc(n * sizeof(int) + 1)
    cdef int *order = <int *> malloc(n * sizeof(int) + 1)
    cdef int *best_order = <int *> malloc(n * sizeof(int) + 1)
    cdef int *code = <int *> malloc(2 * n * sizeof(int) + 1)
    cdef int *best = <int *> malloc(2 * n * sizeof(int) + 1)
    try:
        for i in range(n):
            sg[i] = sigma[i]
            io[i] = iota[i]
        for s in range(m):
            for i in range(n):
                num[i] = -1
            x = members[s]
            order[0] = x
            num[x] = 0
            olen = 1
            clen = 0
            worse = False
            tied = best_len >= 0
            pos = 0
            while pos < olen:
                x = order[pos]
                for t in range(2):
                    y = sg[x] if t == 0 else io[x]
                    if num[y] < 0:
                        num[y] = olen
                        order[olen] = y
                        olen += 1
                    v = num[y]
                    if tied:
                        w = best[clen]
                        if v > w:
                            worse = True
                            break
                        if v < w:
                            tied = False
                    code[clen] = v
                    clen += 1
                if worse:
                    break
                pos += 1
            if worse or (best_len >= 0 and tied):
                continue
            for i in range(clen):
                best[i] = code[i]
            for i in range(olen):
                best_order[i] = order[i]
            best_len = clen
        if best_len < 0:
            return (), []
        return (tuple([best[i] for i in range(best_len)]),
                [best_order[i] for i in range(best_len // 2)])
    finally:
        free(sg)
        free(io)
        free(num)
        free(order)
        free(best_order)
        free(code)
        free(best)
