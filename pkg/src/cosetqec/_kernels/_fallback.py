"""Pure-Python implementations of the bit-packed hot kernels.

This module mirrors the compiled extension exactly: same RNG
(splitmix64), same draw order, same tie-breaking.  Both lanes must
produce bit-identical groups, labels, and search results for a given
seed; tests enforce this whenever the compiled lane is available.

Packing: a width-p Pauli is a pair of p-bit masks (x, z); a symplectic
vector is the 2p-bit integer x | (z << p).  All widths are <= 24, so
every packed value fits in 64 bits.
"""

from __future__ import annotations

from typing import Sequence

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer (bijective avalanche on 64-bit ints)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def symplectic_parity(a1: int, b1: int, a2: int, b2: int) -> int:
    """Return (a1.b2 + b1.a2) mod 2: 0 if the operators commute, 1 if not."""
    return ((a1 & b2).bit_count() + (b1 & a2).bit_count()) & 1


def multiply_packed(d1: int, a1: int, b1: int, d2: int, a2: int, b2: int):
    """Product of i^d1 X^a1 Z^b1 and i^d2 X^a2 Z^b2 as (phase, x, z)."""
    phase = (d1 + d2 + 2 * ((b1 & a2).bit_count() & 1)) & 3
    return phase, a1 ^ a2, b1 ^ b2


def rank_f2(rows: Sequence[int]) -> int:
    """Rank over GF(2) of integer bitmask rows (leading-bit elimination)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        w = row
        while w:
            hb = w.bit_length() - 1
            if hb in pivots:
                w ^= pivots[hb]
            else:
                pivots[hb] = w
                rank += 1
                break
    return rank


def syndrome_bits(a: int, b: int, gens_a: Sequence[int], gens_b: Sequence[int]) -> int:
    """Commutation pattern of (a, b) against each generator, bit t = generator t."""
    bits = 0
    for t in range(len(gens_a)):
        if ((a & gens_b[t]).bit_count() + (b & gens_a[t]).bit_count()) & 1:
            bits |= 1 << t
    return bits


def random_group_packed(p: int, seed: int):
    """Greedily sample p independent pairwise-commuting (x, z) pairs.

    Draws uniform 2p-bit candidates from splitmix64 seeded at ``seed``,
    keeping each draw that commutes with everything kept so far and
    raises the GF(2) rank.  Returns (xs, zs) lists of length p.
    """
    state = seed & MASK64
    vmask = (1 << (2 * p)) - 1
    pmask = (1 << p) - 1
    xs: list[int] = []
    zs: list[int] = []
    pivots: dict[int, int] = {}
    while len(xs) < p:
        state = (state + _GOLDEN) & MASK64
        v = mix64(state) & vmask
        a = v & pmask
        b = v >> p
        ok = True
        for t in range(len(xs)):
            if ((a & zs[t]).bit_count() + (b & xs[t]).bit_count()) & 1:
                ok = False
                break
        if not ok:
            continue
        w = v
        while w:
            hb = w.bit_length() - 1
            if hb in pivots:
                w ^= pivots[hb]
            else:
                pivots[hb] = w
                xs.append(a)
                zs.append(b)
                break
    return xs, zs


def greedy_label_scan(p: int, err_labels: Sequence[int], k_target: int = -1):
    """Greedy coset-label selection: scan labels 0..2^p-1 ascending, keep a
    label when every XOR with the error labels is still unused.

    ``k_target >= 0`` stops as soon as that many labels are kept; -1 runs
    the full scan (maximum greedy dimension).
    """
    used = bytearray(1 << p)
    kept: list[int] = []
    for lam in range(1 << p):
        for e in err_labels:
            if used[e ^ lam]:
                break
        else:
            for e in err_labels:
                used[e ^ lam] = 1
            kept.append(lam)
            if len(kept) == k_target:
                break
    return kept


def search_range(
    p: int,
    errs_a: Sequence[int],
    errs_b: Sequence[int],
    k_target: int,
    seed: int,
    start: int,
    count: int,
):
    """Scan candidate indices [start, start+count) of the seeded stream.

    Candidate i gets its own decorrelated splitmix64 stream derived from
    (seed, i), samples a group, and is accepted when all error labels are
    distinct and the greedy scan keeps k_target labels.  Returns
    (index, xs, zs, labels) for the first hit, or None.
    """
    n = len(errs_a)
    for i in range(start, start + count):
        st = mix64((seed + (i + 1) * _GOLDEN) & MASK64)
        xs, zs = random_group_packed(p, st)
        seen = 0
        labels: list[int] = []
        ok = True
        for k in range(n):
            lab = syndrome_bits(errs_a[k], errs_b[k], xs, zs)
            if (seen >> lab) & 1:
                ok = False
                break
            seen |= 1 << lab
            labels.append(lab)
        if not ok:
            continue
        kept = greedy_label_scan(p, labels, k_target)
        if len(kept) >= k_target:
            return i, xs, zs, kept
    return None
