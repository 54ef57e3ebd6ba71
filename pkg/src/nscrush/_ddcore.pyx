# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loop of the double description method.

The quadratic-in-rays adjacency scan dominates enumeration time; here
it runs over packed 64-bit support bitsets.  Semantics match
nscrush.dd._adjacent_pairs_pure exactly.
"""

from cpython.bytes cimport PyBytes_AsString
from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc


def adjacent_pairs(bytes mask_blob, Py_ssize_t nwords, Py_ssize_t nrays,
                   list pos, list neg):
    """Pairs (p, q) from pos x neg such that no other ray's support is
    contained in support(p) | support(q).

    mask_blob holds nrays * nwords little-endian uint64 words, one
    row of words per ray's support bitset.
    """
    cdef const uint64_t* masks = <const uint64_t*> PyBytes_AsString(mask_blob)
    cdef Py_ssize_t npos = len(pos)
    cdef Py_ssize_t nneg = len(neg)
    cdef Py_ssize_t ia, ib, w, other
    cdef Py_ssize_t a, b
    cdef uint64_t* union_words = <uint64_t*> malloc(nwords * sizeof(uint64_t))
    if union_words == NULL:
        raise MemoryError()
    cdef long* pos_c = <long*> malloc(npos * sizeof(long))
    cdef long* neg_c = <long*> malloc(nneg * sizeof(long))
    if pos_c == NULL or neg_c == NULL:
        free(union_words)
        if pos_c != NULL:
            free(pos_c)
        if neg_c != NULL:
            free(neg_c)
        raise MemoryError()
    for ia in range(npos):
        pos_c[ia] = pos[ia]
    for ib in range(nneg):
        neg_c[ib] = neg[ib]

    out = []
    cdef bint subset, blocked
    try:
        for ia in range(npos):
            a = pos_c[ia]
            for ib in range(nneg):
                b = neg_c[ib]
                for w in range(nwords):
                    union_words[w] = masks[a * nwords + w] | masks[b * nwords + w]
                blocked = False
                for other in range(nrays):
                    if other == a or other == b:
                        continue
                    subset = True
                    for w in range(nwords):
                        if masks[other * nwords + w] & ~union_words[w]:
                            subset = False
                            break
                    if subset:
                        blocked = True
                        break
                if not blocked:
                    out.append((a, b))
    finally:
        free(union_words)
        free(pos_c)
        free(neg_c)
    return out
