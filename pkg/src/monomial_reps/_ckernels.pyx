# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; same search trees as ``_pykernels``.

Leaf counts are accumulated in ``long long``: a leaf-by-leaf enumeration
cannot reach 2**63 within any feasible runtime.
"""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    MAXDIM = 128


cdef struct SSYTState:
    int rows
    int nvals
    int *shape
    int *content
    int *cur


cdef long long _ssyt_place(SSYTState *st, int i, int r, int left) nogil:
    cdef int cap, room, t, hi
    cdef long long total = 0
    if r < 0:
        if left:
            return 0
        if i + 1 == st.nvals:
            return 1
        return _ssyt_place(st, i + 1, st.rows - 1, st.content[i + 1])
    if r == 0:
        cap = st.shape[0]
    else:
        cap = st.shape[r] if st.shape[r] < st.cur[r - 1] else st.cur[r - 1]
    room = cap - st.cur[r]
    hi = room if room < left else left
    for t in range(hi + 1):
        st.cur[r] += t
        total += _ssyt_place(st, i, r - 1, left - t)
        st.cur[r] -= t
    return total


def count_ssyt(shape, content):
    """Number of semistandard tableaux of ``shape`` with the given content."""
    content = tuple(c for c in content if c)
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return 0
    if len(shape) == 0:
        return 1
    if len(shape) > MAXDIM or len(content) > MAXDIM:
        raise ValueError("shape or content too long for the compiled kernel")
    cdef int shp[MAXDIM]
    cdef int cnt[MAXDIM]
    cdef int cur[MAXDIM]
    cdef SSYTState st
    cdef int j
    cdef long long total
    for j in range(len(shape)):
        shp[j] = shape[j]
        cur[j] = 0
    for j in range(len(content)):
        cnt[j] = content[j]
    st.rows = len(shape)
    st.nvals = len(content)
    st.shape = shp
    st.content = cnt
    st.cur = cur
    with nogil:
        total = _ssyt_place(&st, 0, st.rows - 1, cnt[0])
    return int(total)


cdef struct MSPState:
    int m
    int nb
    int *rem
    int *sizes
    int *blocks


cdef long long _msp_block(MSPState *st, int b) nogil:
    if b == st.nb:
        return 1
    cdef bint tight = b > 0 and st.sizes[b - 1] == st.sizes[b]
    return _msp_entry(st, b, 0, st.sizes[b], tight)


cdef long long _msp_entry(MSPState *st, int b, int j, int left, bint tight) nogil:
    cdef int hi, v, tail, q
    cdef int m = st.m
    cdef long long total = 0
    if j == m:
        if left == 0:
            return _msp_block(st, b + 1)
        return 0
    hi = st.rem[j] if st.rem[j] < left else left
    if tight and st.blocks[(b - 1) * m + j] < hi:
        hi = st.blocks[(b - 1) * m + j]
    tail = 0
    for q in range(j + 1, m):
        tail += st.rem[q]
    v = hi
    while v >= 0:
        if left - v > tail:
            break
        st.blocks[b * m + j] = v
        st.rem[j] -= v
        total += _msp_entry(st, b, j + 1, left - v,
                            tight and v == st.blocks[(b - 1) * m + j])
        st.rem[j] += v
        v -= 1
    st.blocks[b * m + j] = 0
    return total


def count_sized_multiset_partitions(mults, sizes):
    """Number of multiset partitions of ``mults`` with block sizes ``sizes``."""
    rem = [x for x in mults if x]
    sizes = sorted(sizes, reverse=True)
    if sum(rem) != sum(sizes) or any(s <= 0 for s in sizes):
        return 0
    if not sizes:
        return 1
    cdef int m = len(rem)
    cdef int nb = len(sizes)
    cdef MSPState st
    cdef int j
    cdef long long total
    st.m = m
    st.nb = nb
    st.rem = <int *> malloc(m * sizeof(int))
    st.sizes = <int *> malloc(nb * sizeof(int))
    st.blocks = <int *> calloc(m * nb, sizeof(int))
    if st.rem == NULL or st.sizes == NULL or st.blocks == NULL:
        free(st.rem)
        free(st.sizes)
        free(st.blocks)
        raise MemoryError()
    try:
        for j in range(m):
            st.rem[j] = rem[j]
        for j in range(nb):
            st.sizes[j] = sizes[j]
        with nogil:
            total = _msp_block(&st, 0)
    finally:
        free(st.rem)
        free(st.sizes)
        free(st.blocks)
    return int(total)


cdef long long _bal_assign(int k, int e, int nblocks, int debt, int *owed) nogil:
    cdef long long total = 0
    cdef int b
    if e == 2 * k:
        return 1 if debt == 0 else 0
    if e < k:
        for b in range(nblocks):
            owed[b] += 1
            total += _bal_assign(k, e + 1, nblocks, debt + 1, owed)
            owed[b] -= 1
        owed[nblocks] = 1
        total += _bal_assign(k, e + 1, nblocks + 1, debt + 1, owed)
        owed[nblocks] = 0
    else:
        if debt > 2 * k - e:
            return 0
        for b in range(nblocks):
            if owed[b] > 0:
                owed[b] -= 1
                total += _bal_assign(k, e + 1, nblocks, debt - 1, owed)
                owed[b] += 1
    return total


def count_balanced_set_partitions(int k):
    """Number of balanced set partitions of {1..k} u {1'..k'}."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1
    if k > MAXDIM:
        raise ValueError("k too large for the compiled kernel")
    cdef int owed[MAXDIM]
    cdef int b
    cdef long long total
    for b in range(MAXDIM):
        owed[b] = 0
    with nogil:
        total = _bal_assign(k, 0, 0, 0, owed)
    return int(total)
