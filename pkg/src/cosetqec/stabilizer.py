"""Maximal abelian subgroups of the Pauli group and their coset partition.

A group here is given by exactly p independent, pairwise commuting,
Hermitian generators on p qubits, so its closure under multiplication
has 2^p elements mod phase and is maximal abelian.  The syndrome of an
operator is the length-p bit vector of commutation values against the
generators.  Because the symplectic form is bilinear, the syndrome map
is a group homomorphism onto Z_2^p whose kernel is the closure mod
phase: it indexes the partition of all 4^p Pauli classes into 2^p
cosets, and that label map is the only representation of the partition
this module ever stores.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from ._kernels import random_group_packed, symplectic_parity, syndrome_bits
from .pauli import (
    PauliOperator,
    WidthMismatchError,
    format_pauli,
    parse_pauli,
)

ENUMERATION_MAX_WIDTH = 3


class GroupError(ValueError):
    """A generating set fails validation (commutation, independence,
    Hermiticity) or a group is used before sign normalization."""


@dataclass(frozen=True)
class StabilizerGroup:
    """A maximal abelian subgroup, fixed by its ordered generator tuple."""

    generators: tuple[PauliOperator, ...]

    def __post_init__(self) -> None:
        gens = self.generators
        if not gens:
            raise GroupError("no generators given")
        p = gens[0].width
        if len(gens) != p:
            raise GroupError(
                f"need exactly {p} generators for width {p}, got {len(gens)}"
            )
        for i, g in enumerate(gens):
            if g.width != p:
                raise GroupError(f"generator {i} has width {g.width}, expected {p}")
            if not g.is_hermitian:
                raise GroupError(
                    f"generator {i} ({format_pauli(g)}) is not Hermitian"
                )
        for i, j in itertools.combinations(range(p), 2):
            if symplectic_parity(gens[i].x, gens[i].z, gens[j].x, gens[j].z):
                raise GroupError(f"generators {i} and {j} anticommute")
        self._check_independent()

    def _check_independent(self) -> None:
        # Leading-bit elimination with combination tracking: a row that
        # reduces to zero names the dependent subset.
        p = self.width
        pivots: dict[int, tuple[int, int]] = {}
        for idx, g in enumerate(self.generators):
            w = g.x | (g.z << p)
            comb = 1 << idx
            while w:
                hb = w.bit_length() - 1
                if hb in pivots:
                    pw, pc = pivots[hb]
                    w ^= pw
                    comb ^= pc
                else:
                    pivots[hb] = (w, comb)
                    break
            else:
                subset = [i for i in range(p) if (comb >> i) & 1]
                raise GroupError(
                    "dependent generators: the product of indices "
                    f"{subset} is +/-identity mod phase"
                )

    @property
    def width(self) -> int:
        return self.generators[0].width

    @cached_property
    def _packed(self) -> tuple[list[int], list[int]]:
        return (
            [g.x for g in self.generators],
            [g.z for g in self.generators],
        )

    def syndrome(self, op: PauliOperator) -> int:
        """Coset label of ``op``: bit t is its commutation value against
        generator t.  Zero exactly on the closure mod phase."""
        if op.width != self.width:
            raise WidthMismatchError(
                f"operator width {op.width} != group width {self.width}"
            )
        xs, zs = self._packed
        return syndrome_bits(op.x, op.z, xs, zs)

    @cached_property
    def _closure(self) -> tuple[PauliOperator, ...]:
        p = self.width
        elems = [PauliOperator.identity(p)]
        for lam in range(1, 1 << p):
            lo = lam & -lam
            elems.append(self.generators[lo.bit_length() - 1] * elems[lam ^ lo])
        return tuple(elems)

    def closure(self) -> tuple[PauliOperator, ...]:
        """All 2^p elements; index lam is the ordered product of the
        generators selected by the bits of lam (ascending index)."""
        return self._closure

    @cached_property
    def closure_classes(self) -> frozenset[tuple[int, int]]:
        """The closure as a set of (x, z) pairs, i.e. mod phase."""
        return frozenset((s.x, s.z) for s in self._closure)

    def contains_mod_phase(self, op: PauliOperator) -> bool:
        return (op.x, op.z) in self.closure_classes

    def _solve_member(self, label: int) -> PauliOperator:
        """One operator with the requested syndrome, via a GF(2) solve of
        the p x 2p symplectic system (always solvable: generators are
        independent)."""
        p = self.width
        if not 0 <= label < (1 << p):
            raise ValueError(f"label {label} out of range for width {p}")
        pivots: dict[int, tuple[int, int]] = {}
        for t, g in enumerate(self.generators):
            w = g.z | (g.x << p)
            r = (label >> t) & 1
            while w:
                hb = w.bit_length() - 1
                if hb in pivots:
                    pw, pr = pivots[hb]
                    w ^= pw
                    r ^= pr
                else:
                    pivots[hb] = (w, r)
                    break
            else:
                if r:
                    raise GroupError("inconsistent syndrome system")
        v = 0
        for bit in sorted(pivots):
            w, r = pivots[bit]
            if r ^ (((w ^ (1 << bit)) & v).bit_count() & 1):
                v |= 1 << bit
        member = PauliOperator.from_symplectic(v & ((1 << p) - 1), v >> p, p)
        assert self.syndrome(member) == label
        return member

    def coset_members(self, label: int) -> tuple[PauliOperator, ...]:
        """The 2^p mod-phase classes with the given syndrome, as canonical
        Hermitian representatives; label 0 gives the closure itself."""
        rep = self._solve_member(label)
        out = []
        for s in self._closure:
            prod = rep * s
            out.append(PauliOperator.from_symplectic(prod.x, prod.z, self.width))
        return tuple(out)

    def normalized(self, base: int = 0) -> "StabilizerGroup":
        """Re-choose generators so the diagonal subgroup (elements with no
        X part) is generated by a subset of them, each signed to act as +1
        on the computational-basis state ``base``; non-diagonal generators
        get a + sign.  The closure mod phase is unchanged."""
        p = self.width
        out: list[PauliOperator] = []
        pivots: dict[int, int] = {}
        for g in self.generators:
            cur = g
            while cur.x:
                hb = cur.x.bit_length() - 1
                if hb in pivots:
                    cur = out[pivots[hb]] * cur
                else:
                    pivots[hb] = len(out)
                    break
            out.append(cur)
        fixed = []
        for g in out:
            if g.x == 0:
                flip = (g.z & base).bit_count() & 1
                fixed.append(PauliOperator(2 * flip, 0, g.z, p))
            else:
                fixed.append(PauliOperator.from_symplectic(g.x, g.z, p))
        return StabilizerGroup(tuple(fixed))

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "generators": [format_pauli(g) for g in self.generators],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StabilizerGroup":
        width = int(data["width"])
        gens = tuple(parse_pauli(s, width) for s in data["generators"])
        return cls(gens)


def format_label(label: int, width: int) -> str:
    """Coset label as a bit string; character t is the bit for generator t."""
    return "".join("1" if (label >> t) & 1 else "0" for t in range(width))


def random_group(p: int, seed: int) -> StabilizerGroup:
    """Deterministic greedy sampler: draw random operators, keep those
    that commute with everything kept and raise the mod-phase rank, until
    p generators are held.  Generators come out in canonical + form."""
    if p < 1:
        raise ValueError(f"width must be at least 1, got {p}")
    xs, zs = random_group_packed(p, seed)
    gens = tuple(
        PauliOperator.from_symplectic(x, z, p) for x, z in zip(xs, zs)
    )
    return StabilizerGroup(gens)


def _span(vectors: Sequence[int]) -> set[int]:
    out = {0}
    for v in vectors:
        out |= {s ^ v for s in out}
    return out


def enumerate_groups(p: int) -> Iterator[StabilizerGroup]:
    """Every maximal abelian subgroup exactly once (up to closure mod
    phase), in lexicographic order of the sorted packed closure.

    Limited to p <= 3: the count is 3, 15, 135 and grows roughly like
    2^(p(p+1)/2) beyond that.
    """
    if p < 1:
        raise ValueError(f"width must be at least 1, got {p}")
    if p > ENUMERATION_MAX_WIDTH:
        raise ValueError(
            f"group enumeration is limited to width <= {ENUMERATION_MAX_WIDTH}; "
            f"the count at width {p} is impractical to stream exhaustively"
        )
    pmask = (1 << p) - 1
    total = 1 << (2 * p)
    seen: set[tuple[int, ...]] = set()
    keys: list[tuple[int, ...]] = []

    def commute(v: int, w: int) -> bool:
        return (
            symplectic_parity(v & pmask, v >> p, w & pmask, w >> p) == 0
        )

    def dfs(start: int, chosen: list[int], span: set[int]) -> None:
        if len(chosen) == p:
            key = tuple(sorted(span))
            if key not in seen:
                seen.add(key)
                keys.append(key)
            return
        for v in range(start, total):
            if v in span:
                continue
            if all(commute(v, c) for c in chosen):
                dfs(v + 1, chosen + [v], _span(chosen + [v]))

    dfs(1, [], {0})
    for key in sorted(keys):
        gens: list[int] = []
        for v in key:
            if v and v not in _span(gens):
                gens.append(v)
                if len(gens) == p:
                    break
        ops = tuple(
            PauliOperator.from_symplectic(v & pmask, v >> p, p) for v in gens
        )
        yield StabilizerGroup(ops)
