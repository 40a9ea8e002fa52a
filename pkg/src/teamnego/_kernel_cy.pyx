# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: negotiation backward induction and vote-multiset search.

Same contract as ``_kernel_py``; see that module for the semantics.  Inputs
are plain Python sequences, converted once per call into C buffers, so the
hot loops run without touching Python objects.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef inline int _bit_count(unsigned int x) noexcept nogil:
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef int _fill_table(const int* pos_t, const int* pos_o, int m, int* table) noexcept nogil:
    """table[mask*2 + proposer] = realized outcome for the subgame ``mask``."""
    cdef unsigned int full = (1u << m) - 1
    cdef unsigned int mask, bit
    cdef int proposer, offer, cont, realized, best, best_rank
    cdef const int* pos_p
    cdef const int* pos_r
    for mask in range(1u, full + 1):
        if mask & (mask - 1) == 0:
            offer = _bit_count(mask - 1)
            table[mask * 2] = offer
            table[mask * 2 + 1] = offer
            continue
        for proposer in range(2):
            pos_p = pos_t if proposer == 0 else pos_o
            pos_r = pos_o if proposer == 0 else pos_t
            best = -1
            best_rank = -1
            for offer in range(m):
                bit = 1u << offer
                if not (mask & bit):
                    continue
                cont = table[(mask ^ bit) * 2 + (1 - proposer)]
                realized = offer if pos_r[offer] > pos_r[cont] else cont
                if pos_p[realized] > best_rank:
                    best_rank = pos_p[realized]
                    best = realized
            table[mask * 2 + proposer] = best
    return 0


def spe_pair(pos_t, pos_o):
    """Equilibrium results (team-opening, other-opening) as outcome indices."""
    cdef int m = len(pos_t)
    if len(pos_o) != m:
        raise ValueError("position arrays differ in length")
    cdef unsigned int full = (1u << m) - 1
    cdef int* buf = <int*> malloc((2 * m + (full + 1) * 2) * sizeof(int))
    if buf is NULL:
        raise MemoryError()
    cdef int* c_pos_t = buf
    cdef int* c_pos_o = buf + m
    cdef int* table = buf + 2 * m
    cdef int i
    try:
        for i in range(m):
            c_pos_t[i] = pos_t[i]
            c_pos_o[i] = pos_o[i]
        _fill_table(c_pos_t, c_pos_o, m, table)
        return table[full * 2], table[full * 2 + 1]
    finally:
        free(buf)


def find_coalition(base_scores, awards, pos_o, int k, int target, bint constructive):
    """First qualifying vote multiset as a tuple of award-row indices, or None.

    Enumerates non-decreasing index tuples in lexicographic order, matching
    ``itertools.combinations_with_replacement``.
    """
    cdef int m = len(base_scores)
    cdef int votes = len(awards)
    if votes == 0 and k > 0:
        return None
    cdef unsigned int full = (1u << m) - 1
    cdef size_t need = (
        m                      # base scores
        + m                    # other party positions
        + votes * m            # award rows
        + m                    # working scores
        + m                    # ranking order
        + m                    # team positions
        + (k if k > 0 else 1)  # multiset odometer
        + (full + 1) * 2       # induction table
    )
    cdef int* buf = <int*> malloc(need * sizeof(int))
    if buf is NULL:
        raise MemoryError()
    cdef int* base = buf
    cdef int* c_pos_o = base + m
    cdef int* award = c_pos_o + m
    cdef int* scores = award + votes * m
    cdef int* order = scores + m
    cdef int* c_pos_t = order + m
    cdef int* combo = c_pos_t + m
    cdef int* table = combo + (k if k > 0 else 1)
    cdef int i, j, c, v, rank, key_score, key_idx, n_t, n_o
    cdef bint ok
    try:
        for c in range(m):
            base[c] = base_scores[c]
            c_pos_o[c] = pos_o[c]
        for v in range(votes):
            row = awards[v]
            for c in range(m):
                award[v * m + c] = row[c]
        for j in range(k):
            combo[j] = 0
        while True:
            for c in range(m):
                scores[c] = base[c]
            for j in range(k):
                v = combo[j]
                for c in range(m):
                    scores[c] += award[v * m + c]
            # insertion sort: score descending, index ascending on ties
            for c in range(m):
                order[c] = c
            for i in range(1, m):
                key_idx = order[i]
                key_score = scores[key_idx]
                j = i - 1
                while j >= 0 and (scores[order[j]] < key_score or
                                  (scores[order[j]] == key_score and order[j] > key_idx)):
                    order[j + 1] = order[j]
                    j -= 1
                order[j + 1] = key_idx
            for rank in range(m):
                c_pos_t[order[rank]] = m - 1 - rank
            _fill_table(c_pos_t, c_pos_o, m, table)
            n_t = table[full * 2]
            n_o = table[full * 2 + 1]
            if constructive:
                ok = n_t == target and n_o == target
            else:
                ok = n_t != target and n_o != target
            if ok:
                return tuple(combo[j] for j in range(k))
            # next non-decreasing index tuple
            j = k - 1
            while j >= 0 and combo[j] == votes - 1:
                j -= 1
            if j < 0:
                return None
            combo[j] += 1
            for i in range(j + 1, k):
                combo[i] = combo[j]
    finally:
        free(buf)
