# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled standard-monomial walkers; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef struct Walk:
    int nvars
    int *gens          # ngens x nvars, grouped by last nonzero index
    int *bucket_start  # nvars + 1 offsets into gens (in rows)
    int *exps
    long long *weights
    long long count
    long long wsum


cdef inline bint _divisible(Walk *w, int i):
    cdef int r, k
    cdef int *g
    for r in range(w.bucket_start[i], w.bucket_start[i + 1]):
        g = w.gens + r * w.nvars
        for k in range(i + 1):
            if w.exps[k] < g[k]:
                break
        else:
            return True
    return False


cdef void _rec(Walk *w, int i, int remaining, long long partial, list out):
    cdef int e
    cdef int last = w.nvars - 1
    if i == last:
        w.exps[i] = remaining
        if not _divisible(w, i):
            w.count += 1
            w.wsum += partial + w.weights[i] * remaining
            if out is not None:
                out.append(tuple([w.exps[k] for k in range(w.nvars)]))
        w.exps[i] = 0
        return
    for e in range(remaining + 1):
        w.exps[i] = e
        if _divisible(w, i):
            break
        _rec(w, i + 1, remaining - e, partial + w.weights[i] * e, out)
    w.exps[i] = 0


cdef tuple _run(gens, weights, int nvars, int m, bint collect):
    cdef Walk w
    cdef int i, k, r, last, ngens
    rows = [tuple(g) for g in gens]
    ngens = len(rows)
    if m < 0:
        return 0, 0, []
    buckets = [[] for _ in range(nvars)]
    for g in rows:
        last = -1
        for k in range(nvars):
            if g[k]:
                last = k
        if last < 0:
            return 0, 0, []
        buckets[last].append(g)

    w.nvars = nvars
    w.gens = <int *> malloc(max(ngens, 1) * nvars * sizeof(int))
    w.bucket_start = <int *> malloc((nvars + 1) * sizeof(int))
    w.exps = <int *> malloc(nvars * sizeof(int))
    w.weights = <long long *> malloc(nvars * sizeof(long long))
    if not w.gens or not w.bucket_start or not w.exps or not w.weights:
        free(w.gens); free(w.bucket_start); free(w.exps); free(w.weights)
        raise MemoryError()
    try:
        r = 0
        for i in range(nvars):
            w.bucket_start[i] = r
            for g in buckets[i]:
                for k in range(nvars):
                    w.gens[r * nvars + k] = g[k]
                r += 1
        w.bucket_start[nvars] = r
        for k in range(nvars):
            w.exps[k] = 0
            w.weights[k] = weights[k] if weights is not None else 0
        w.count = 0
        w.wsum = 0
        out = [] if collect else None
        _rec(&w, 0, m, 0, out)
        return w.count, w.wsum, out
    finally:
        free(w.gens)
        free(w.bucket_start)
        free(w.exps)
        free(w.weights)


def standard_monomials(gens, int nvars, int m):
    return _run(gens, None, nvars, m, True)[2]


def count_standard(gens, int nvars, int m):
    return _run(gens, None, nvars, m, False)[0]


def weigh_standard(gens, weights, int nvars, int m):
    count, wsum, _ = _run(gens, weights, nvars, m, False)
    return count, wsum
