# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit-packed kernels.

Behaviour must stay identical to ``_fallback``: same splitmix64 stream,
same draw order, same tie-breaking.  Any change here needs the matching
change there, and the cross-lane equality tests keep both honest.
"""

from libc.stdlib cimport calloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil

cdef u64 GOLDEN = 0x9E3779B97F4A7C15ULL

MASK64 = (1 << 64) - 1


cdef inline u64 _mix(u64 z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline int _highbit(u64 w) nogil:
    return 63 - __builtin_clzll(w)


def mix64(z):
    """splitmix64 finalizer (bijective avalanche on 64-bit ints)."""
    return _mix(<u64> (z & MASK64))


def symplectic_parity(u64 a1, u64 b1, u64 a2, u64 b2):
    """Return (a1.b2 + b1.a2) mod 2: 0 if the operators commute, 1 if not."""
    return (__builtin_popcountll(a1 & b2) + __builtin_popcountll(b1 & a2)) & 1


def multiply_packed(int d1, u64 a1, u64 b1, int d2, u64 a2, u64 b2):
    """Product of i^d1 X^a1 Z^b1 and i^d2 X^a2 Z^b2 as (phase, x, z)."""
    cdef int phase = (d1 + d2 + 2 * (__builtin_popcountll(b1 & a2) & 1)) & 3
    return phase, a1 ^ a2, b1 ^ b2


def rank_f2(rows):
    """Rank over GF(2) of integer bitmask rows (leading-bit elimination)."""
    cdef u64 pivots[64]
    cdef u64 w
    cdef int rank = 0, hb, i
    for i in range(64):
        pivots[i] = 0
    for row in rows:
        w = <u64> row
        while w:
            hb = _highbit(w)
            if pivots[hb]:
                w ^= pivots[hb]
            else:
                pivots[hb] = w
                rank += 1
                break
    return rank


cdef inline u64 _syndrome(u64 a, u64 b, u64 *xs, u64 *zs, int p) nogil:
    cdef u64 bits = 0
    cdef int t
    for t in range(p):
        if (__builtin_popcountll(a & zs[t]) + __builtin_popcountll(b & xs[t])) & 1:
            bits |= (<u64> 1) << t
    return bits


def syndrome_bits(u64 a, u64 b, gens_a, gens_b):
    """Commutation pattern of (a, b) against each generator, bit t = generator t."""
    cdef u64 xs[24]
    cdef u64 zs[24]
    cdef int p = len(gens_a), t
    for t in range(p):
        xs[t] = <u64> gens_a[t]
        zs[t] = <u64> gens_b[t]
    return _syndrome(a, b, xs, zs, p)


cdef int _sample_group(int p, u64 state, u64 *xs, u64 *zs) nogil:
    # Greedy sampler; returns the number of draws consumed (unused by
    # callers, handy when profiling).  Mirrors _fallback exactly.
    cdef u64 vmask = ((<u64> 1) << (2 * p)) - 1
    cdef u64 pmask = ((<u64> 1) << p) - 1
    cdef u64 pivots[48]
    cdef u64 v, a, b, w
    cdef int kept = 0, t, hb, ok, draws = 0
    for t in range(48):
        pivots[t] = 0
    while kept < p:
        state += GOLDEN
        v = _mix(state) & vmask
        draws += 1
        a = v & pmask
        b = v >> p
        ok = 1
        for t in range(kept):
            if (__builtin_popcountll(a & zs[t]) + __builtin_popcountll(b & xs[t])) & 1:
                ok = 0
                break
        if not ok:
            continue
        w = v
        while w:
            hb = _highbit(w)
            if pivots[hb]:
                w ^= pivots[hb]
            else:
                pivots[hb] = w
                xs[kept] = a
                zs[kept] = b
                kept += 1
                break
    return draws


def random_group_packed(int p, seed):
    """Greedily sample p independent pairwise-commuting (x, z) pairs."""
    cdef u64 xs[24]
    cdef u64 zs[24]
    cdef u64 state = <u64> (seed & MASK64)
    cdef int t
    _sample_group(p, state, xs, zs)
    return [xs[t] for t in range(p)], [zs[t] for t in range(p)]


def greedy_label_scan(int p, err_labels, int k_target=-1):
    """Greedy coset-label selection over labels 0..2^p-1 ascending."""
    cdef int n = len(err_labels)
    cdef u64 *errs = <u64 *> calloc(n if n else 1, sizeof(u64))
    cdef char *used = <char *> calloc((<size_t> 1) << p, 1)
    cdef u64 lam, total = (<u64> 1) << p
    cdef int k, nkept = 0, ok
    kept = []
    try:
        for k in range(n):
            errs[k] = <u64> err_labels[k]
        for lam in range(total):
            ok = 1
            for k in range(n):
                if used[errs[k] ^ lam]:
                    ok = 0
                    break
            if not ok:
                continue
            for k in range(n):
                used[errs[k] ^ lam] = 1
            kept.append(lam)
            nkept += 1
            if nkept == k_target:
                break
        return kept
    finally:
        free(errs)
        free(used)


def search_range(int p, errs_a, errs_b, int k_target, seed, start, count):
    """Scan candidate indices [start, start+count); see the fallback docstring."""
    cdef int n = len(errs_a)
    cdef u64 ea[1024]
    cdef u64 eb[1024]
    cdef u64 labels[1024]
    cdef u64 xs[24]
    cdef u64 zs[24]
    cdef char *used = NULL
    cdef u64 base_seed = <u64> (seed & MASK64)
    cdef u64 i, hit_index = 0, istart = <u64> start, iend = <u64> (start + count)
    cdef u64 st, lab
    cdef int k, nlab, ok, hit = 0
    if n > 1024:
        raise ValueError("error set too large for the compiled kernel (max 1024)")
    for k in range(n):
        ea[k] = <u64> errs_a[k]
        eb[k] = <u64> errs_b[k]
    used = <char *> calloc((<size_t> 1) << p, 1)
    try:
        with nogil:
            for i in range(istart, iend):
                st = _mix(base_seed + (i + 1) * GOLDEN)
                _sample_group(p, st, xs, zs)
                ok = 1
                nlab = 0
                for k in range(n):
                    lab = _syndrome(ea[k], eb[k], xs, zs, p)
                    if used[lab]:
                        ok = 0
                        break
                    used[lab] = 1
                    labels[nlab] = lab
                    nlab += 1
                for k in range(nlab):
                    used[labels[k]] = 0
                if not ok:
                    continue
                if _greedy_hit(p, labels, n, k_target, used):
                    hit = 1
                    hit_index = i
                    break
        if not hit:
            return None
        kept = greedy_label_scan(p, [labels[k] for k in range(n)], k_target)
        return int(hit_index), [xs[k] for k in range(p)], [zs[k] for k in range(p)], kept
    finally:
        free(used)


cdef int _greedy_hit(int p, u64 *err_labels, int n, int k_target, char *used) nogil:
    # Same scan as greedy_label_scan but allocation-free; `used` must be
    # all-zero on entry and is left all-zero on exit.
    cdef u64 lam, total = (<u64> 1) << p
    cdef u64 marked[4096]
    cdef int k, nkept = 0, nmarked = 0, ok, result = 0
    for lam in range(total):
        ok = 1
        for k in range(n):
            if used[err_labels[k] ^ lam]:
                ok = 0
                break
        if not ok:
            continue
        for k in range(n):
            used[err_labels[k] ^ lam] = 1
            if nmarked < 4096:
                marked[nmarked] = err_labels[k] ^ lam
                nmarked += 1
        nkept += 1
        if nkept >= k_target:
            result = 1
            break
    if nmarked < 4096:
        for k in range(nmarked):
            used[marked[k]] = 0
    else:
        for lam in range(total):
            used[lam] = 0
    return result
