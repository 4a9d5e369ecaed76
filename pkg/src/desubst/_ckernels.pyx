# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled boolean relation kernels for systems with at most 64 states.

Same contracts as :mod:`desubst._pykernels`; wider systems are forwarded
to the pure-Python versions.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from desubst import _pykernels as _py

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXQ = 64


cdef inline void _mul(const uint64_t* a, const uint64_t* b, uint64_t* out, int n) noexcept nogil:
    cdef int q
    cdef uint64_t bits, acc
    for q in range(n):
        bits = a[q]
        acc = 0
        while bits:
            acc |= b[__builtin_ctzll(bits)]
            bits &= bits - 1
        out[q] = acc


cdef inline tuple _pack(const uint64_t* rows, int n):
    cdef list out = [None] * n
    cdef int q
    for q in range(n):
        out[q] = rows[q]
    return tuple(out)


cdef uint64_t* _load_all(rels, int k, int n) except NULL:
    cdef uint64_t* buf = <uint64_t*> malloc(max(k, 1) * MAXQ * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef int a, q
    for a in range(k):
        rows = rels[a]
        for q in range(n):
            buf[a * MAXQ + q] = rows[q]
    return buf


def identity(int n):
    return _py.identity(n)


def compose(a, b):
    cdef int n = len(a)
    if n > MAXQ:
        return _py.compose(a, b)
    cdef uint64_t ra[MAXQ]
    cdef uint64_t rb[MAXQ]
    cdef uint64_t ro[MAXQ]
    cdef int q
    for q in range(n):
        ra[q] = a[q]
        rb[q] = b[q]
    _mul(ra, rb, ro, n)
    return _pack(ro, n)


cdef void _word(const uint64_t* buf, const int* word, int length, int n,
                uint64_t* out) noexcept nogil:
    cdef uint64_t tmp[MAXQ]
    cdef int q, i
    if length == 0:
        for q in range(n):
            out[q] = (<uint64_t> 1) << q
        return
    for q in range(n):
        out[q] = buf[word[0] * MAXQ + q]
    for i in range(1, length):
        _mul(out, buf + word[i] * MAXQ, tmp, n)
        for q in range(n):
            out[q] = tmp[q]


def word_relation(rels, word, int n):
    if n > MAXQ:
        return _py.word_relation(rels, word, n)
    cdef int k = len(rels)
    cdef int length = len(word)
    cdef uint64_t ro[MAXQ]
    cdef uint64_t* buf = _load_all(rels, k, n)
    cdef int* w = <int*> malloc(max(length, 1) * sizeof(int))
    cdef int i
    try:
        for i in range(length):
            w[i] = word[i]
        _word(buf, w, length, n, ro)
        return _pack(ro, n)
    finally:
        free(w)
        free(buf)


def desub_relations(rels, images, int n):
    if n > MAXQ:
        return _py.desub_relations(rels, images, n)
    cdef int k = len(rels)
    cdef uint64_t ro[MAXQ]
    cdef uint64_t* buf = _load_all(rels, k, n)
    cdef int maxlen = 1
    for img in images:
        if len(img) > maxlen:
            maxlen = len(img)
    cdef int* w = <int*> malloc(maxlen * sizeof(int))
    cdef int i, length
    cdef list out = []
    try:
        for img in images:
            length = len(img)
            for i in range(length):
                w[i] = img[i]
            _word(buf, w, length, n, ro)
            out.append(_pack(ro, n))
        return tuple(out)
    finally:
        free(w)
        free(buf)


def live_mask(rels, int n):
    if n > MAXQ:
        return _py.live_mask(rels, n)
    cdef uint64_t succ[MAXQ]
    cdef int q
    cdef uint64_t live, nxt
    for q in range(n):
        succ[q] = 0
    for rows in rels:
        for q in range(n):
            succ[q] |= <uint64_t> rows[q]
    live = ((<uint64_t> 1) << n) - 1 if n < 64 else ~(<uint64_t> 0)
    while True:
        nxt = 0
        for q in range(n):
            if (live >> q) & 1 and succ[q] & live:
                nxt |= (<uint64_t> 1) << q
        if nxt == live:
            return live
        live = nxt


cdef inline uint64_t _image(const uint64_t* rows, uint64_t mask) noexcept nogil:
    cdef uint64_t acc = 0
    while mask:
        acc |= rows[__builtin_ctzll(mask)]
        mask &= mask - 1
    return acc


def image_mask(rels, int letter, mask):
    return _py.image_mask(rels, letter, mask)


def powerset_universal(rels, start):
    cdef int k = len(rels)
    cdef int n = len(rels[0]) if k else 0
    if n > MAXQ:
        return _py.powerset_universal(rels, start)
    if not start:
        return False
    cdef uint64_t* buf = _load_all(rels, k, n)
    cdef uint64_t cur, nxt
    cdef int a
    seen = {start}
    stack = [start]
    try:
        while stack:
            cur = stack.pop()
            for a in range(k):
                nxt = _image(buf + a * MAXQ, cur)
                if nxt == 0:
                    return False
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return True
    finally:
        free(buf)


cdef void _word_strided(const uint64_t* rels, const int* word, int length, int n,
                        uint64_t* out, uint64_t* tmp) noexcept nogil:
    # rels: letter a occupies rels[a*n : a*n+n]
    cdef int q, i
    if length == 0:
        for q in range(n):
            out[q] = (<uint64_t> 1) << q
        return
    for q in range(n):
        out[q] = rels[word[0] * n + q]
    for i in range(1, length):
        _mul(out, rels + word[i] * n, tmp, n)
        for q in range(n):
            out[q] = tmp[q]


cdef uint64_t _live(const uint64_t* rels, int k, int n) noexcept nogil:
    cdef uint64_t succ[MAXQ]
    cdef uint64_t live, nxt
    cdef int q, a
    for q in range(n):
        succ[q] = 0
        for a in range(k):
            succ[q] |= rels[a * n + q]
    live = ((<uint64_t> 1) << n) - 1 if n < 64 else ~(<uint64_t> 0)
    while True:
        nxt = 0
        for q in range(n):
            if (live >> q) & 1 and succ[q] & live:
                nxt |= (<uint64_t> 1) << q
        if nxt == live:
            return live
        live = nxt


def meta_closure(rels0, codes_list, int n, long budget):
    if n > MAXQ:
        return _py.meta_closure(rels0, codes_list, n, budget)
    cdef int k = len(rels0)
    cdef int nsub = len(codes_list)
    cdef Py_ssize_t width = k * n
    cdef Py_ssize_t nbytes = width * sizeof(uint64_t)
    cdef int total = 0, maxlen = 1
    cdef int s, a, i, v, q
    for codes in codes_list:
        for img in codes:
            total += len(img)
            if len(img) > maxlen:
                maxlen = len(img)
    cdef int* flat = <int*> malloc(max(total, 1) * sizeof(int))
    cdef int* offs = <int*> malloc((nsub * k + 1) * sizeof(int))
    cdef uint64_t* cur = <uint64_t*> malloc(max(width, 1) * sizeof(uint64_t))
    cdef uint64_t* out = <uint64_t*> malloc(max(width, 1) * sizeof(uint64_t))
    cdef uint64_t tmp[MAXQ]
    cdef const char* src
    if flat == NULL or offs == NULL or cur == NULL or out == NULL:
        free(flat); free(offs); free(cur); free(out)
        raise MemoryError()
    try:
        i = 0
        for s in range(nsub):
            codes = codes_list[s]
            for a in range(k):
                offs[s * k + a] = i
                for c in codes[a]:
                    flat[i] = c
                    i += 1
        offs[nsub * k] = i
        for a in range(k):
            rows = rels0[a]
            for q in range(n):
                cur[a * n + q] = rows[q]
        key0 = (<char*> cur)[:nbytes]
        index = {key0: 0}
        verts = [key0]
        edges = []
        v = 0
        while v < len(verts):
            src = verts[v]
            for i in range(width):
                cur[i] = (<const uint64_t*> src)[i]
            row = []
            for s in range(nsub):
                for a in range(k):
                    _word_strided(cur, flat + offs[s * k + a],
                                  offs[s * k + a + 1] - offs[s * k + a], n, out + a * n, tmp)
                key = (<char*> out)[:nbytes]
                w = index.get(key)
                if w is None:
                    if len(verts) >= budget:
                        return None
                    w = len(verts)
                    index[key] = w
                    verts.append(key)
                row.append(w)
            edges.append(tuple(row))
            v += 1
        lives = []
        result = []
        for key in verts:
            src = key
            lives.append(_live(<const uint64_t*> src, k, n))
            result.append(tuple(
                tuple((<const uint64_t*> src)[a * n + q] for q in range(n)) for a in range(k)
            ))
        return result, edges, lives
    finally:
        free(flat)
        free(offs)
        free(cur)
        free(out)
