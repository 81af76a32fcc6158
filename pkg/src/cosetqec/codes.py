"""Seed states, codeword operators, and assembled quantum codes.

The seed of a group is the unnormalized state obtained by summing every
closure element applied to a computational-basis state.  After sign
normalization the surviving coefficients share one magnitude (the size
of the diagonal subgroup), so a seed stores only the unit coefficient
i^k per basis string; the magnitude and the 1/sqrt(#terms) factor are
left to the dense-state module.

Coefficients are units in {1, i, -1, -i} rather than bare signs: a
closure element whose Y count is odd contributes an imaginary unit (for
example the group generated by Y alone seeds |0> + i|1>), and that unit
is a coset invariant of the diagonal subgroup, so no sign convention can
remove it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .pauli import (
    PauliOperator,
    ParseError,
    format_bits,
    format_pauli,
    parse_bits,
    parse_pauli,
)
from .stabilizer import GroupError, StabilizerGroup, format_label

SEED_STABILIZER = "stabilizer"
SEED_PUNCTURED = "punctured"
SEED_EXPLICIT = "explicit"

_UNIT_TO_TOKEN = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_TOKEN_TO_UNIT = {"+": 0, "+i": 1, "i": 1, "-": 2, "-i": 3}


@dataclass(frozen=True)
class SeedState:
    """A sparse signed superposition of basis strings.

    ``terms`` holds (unit, string) pairs where the coefficient of the
    basis string is i**unit; strings are distinct and at least one term
    is present.  ``origin`` records how the seed was made: derived from a
    group closure, punctured from such a seed, or supplied explicitly.
    """

    terms: tuple[tuple[int, int], ...]
    width: int
    base: int = 0
    origin: str = SEED_STABILIZER

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("seed state has no terms")
        if self.origin not in (SEED_STABILIZER, SEED_PUNCTURED, SEED_EXPLICIT):
            raise ValueError(f"unknown seed origin {self.origin!r}")
        mask = (1 << self.width) - 1
        seen = set()
        for unit, string in self.terms:
            if not 0 <= unit <= 3:
                raise ValueError(f"coefficient exponent {unit} out of range")
            if not 0 <= string <= mask:
                raise ValueError(f"basis string {string:#x} exceeds width {self.width}")
            if string in seen:
                raise ValueError(f"duplicate basis string {format_bits(string, self.width)}")
            seen.add(string)

    @property
    def strings(self) -> frozenset[int]:
        return frozenset(s for _, s in self.terms)

    def term_tokens(self) -> list[list[str]]:
        """JSON form: [[sign, bitstring], ...] with sign in + - +i -i."""
        return [
            [_UNIT_TO_TOKEN[unit], format_bits(string, self.width)]
            for unit, string in self.terms
        ]

    @classmethod
    def from_tokens(
        cls, tokens: Iterable[Sequence[str]], width: int, origin: str = SEED_EXPLICIT
    ) -> "SeedState":
        terms = []
        for sign, bits in tokens:
            unit = _TOKEN_TO_UNIT.get(sign)
            if unit is None:
                raise ParseError(f"unknown seed coefficient {sign!r}")
            terms.append((unit, parse_bits(bits, width)))
        return cls(tuple(terms), width, origin=origin)


def seed_state(group: StabilizerGroup, base: int = 0) -> SeedState:
    """Sum the group closure applied to |base>, symbolically.

    Element i^d X^x Z^z sends |base> to i^d (-1)^(z.base) |base^x|, so all
    elements sharing an X part land on one string; after sign
    normalization they agree, every coefficient has magnitude equal to
    the diagonal subgroup size, and only the unit i^k is kept.  Refuses
    groups whose diagonal subgroup does not fix |base> with +1, since the
    character sum then cancels every coefficient to zero.
    """
    p = group.width
    for s in group.closure():
        if s.x == 0:
            # diagonal Hermitian elements have an even phase exponent
            if (s.phase // 2 + (s.z & base).bit_count()) % 2:
                raise GroupError(
                    f"group is not sign-normalized for base "
                    f"{format_bits(base, p)}: element {format_pauli(s)} acts as -1 "
                    "(the seed would cancel to zero); call normalized() first"
                )
    coeffs: dict[int, int] = {}
    for s in group.closure():
        unit = (s.phase + 2 * ((s.z & base).bit_count() & 1)) % 4
        string = base ^ s.x
        prev = coeffs.setdefault(string, unit)
        if prev != unit:
            raise GroupError("inconsistent seed coefficients; group signs are broken")
    terms = tuple(
        (unit, string) for string, unit in sorted(coeffs.items())
    )
    return SeedState(terms, p, base=base, origin=SEED_STABILIZER)


def punctured_seed(seed: SeedState, removed: Iterable[int | str]) -> SeedState:
    """Drop the given basis strings from a seed (to build the nonadditive
    code families); at least two strings must go and at least one term
    must survive."""
    remove: set[int] = set()
    for item in removed:
        remove.add(parse_bits(item, seed.width) if isinstance(item, str) else item)
    present = seed.strings
    missing = remove - present
    if missing:
        shown = ", ".join(format_bits(s, seed.width) for s in sorted(missing))
        raise ValueError(f"cannot remove absent strings: {shown}")
    if len(remove) < 2:
        raise ValueError("puncturing must remove more than one string")
    kept = tuple(t for t in seed.terms if t[1] not in remove)
    if not kept:
        raise ValueError("puncturing removed every term")
    return SeedState(kept, seed.width, base=seed.base, origin=SEED_PUNCTURED)


def coset_representative(group: StabilizerGroup, label: int) -> PauliOperator:
    """The minimum-weight member of the coset, ties broken by the
    lexicographically smallest letter string; label 0 gives the identity."""
    best: tuple[tuple[int, str], PauliOperator] | None = None
    for m in group.coset_members(label):
        key = (m.weight, m.body())
        if best is None or key < best[0]:
            best = (key, m)
    assert best is not None
    return best[1]


@dataclass(frozen=True)
class QuantumCode:
    """A dimension-K code: a seed plus K codeword operators, one per
    chosen coset of the group, the first being the identity."""

    group: StabilizerGroup
    seed: SeedState
    codeword_ops: tuple[PauliOperator, ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.group.width
        if self.seed.width != p:
            raise ValueError("seed width does not match the group")
        k = len(self.codeword_ops)
        if k != len(self.labels):
            raise ValueError("codeword/label count mismatch")
        if not 1 <= k <= (1 << p):
            raise ValueError(f"dimension {k} out of range for width {p}")
        if self.labels[0] != 0 or not self.codeword_ops[0].is_identity:
            raise ValueError("the first codeword operator must be the identity")
        if len(set(self.labels)) != k:
            raise ValueError("codeword coset labels must be distinct")
        for op, lab in zip(self.codeword_ops, self.labels):
            if self.group.syndrome(op) != lab:
                raise ValueError(
                    f"operator {format_pauli(op)} is not in coset "
                    f"{format_label(lab, p)}"
                )

    @property
    def width(self) -> int:
        return self.group.width

    @property
    def dimension(self) -> int:
        return len(self.codeword_ops)

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "cartanion": self.group.to_dict(),
            "seed": self.seed.term_tokens(),
            "codeword_spinors": [format_pauli(op) for op in self.codeword_ops],
            "labels": [format_label(lab, self.width) for lab in self.labels],
            "seed_origin": self.seed.origin,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "QuantumCode":
        width = int(data["width"])
        group = StabilizerGroup.from_dict(data["cartanion"])
        origin = data.get("seed_origin", SEED_EXPLICIT)
        seed = SeedState.from_tokens(data["seed"], width, origin=origin)
        ops = tuple(parse_pauli(s, width) for s in data["codeword_spinors"])
        labels = tuple(parse_bits(s, width) for s in data["labels"])
        return cls(group=group, seed=seed, codeword_ops=ops, labels=labels)


def build_code(
    group: StabilizerGroup,
    labels: Sequence[int],
    seed: SeedState | None = None,
) -> QuantumCode:
    """Assemble a code from a group and K distinct coset labels (the first
    must be zero).

    The stored group keeps the caller's generators, so the given labels
    keep their meaning; sign normalization happens only on the internal
    copy that derives the seed state, which is a frame-independent
    object.  Codeword operators are chosen by the min-weight/lex policy.
    An explicit ``seed`` (e.g. punctured) replaces the derived one.
    """
    if not labels:
        raise ValueError("no coset labels given")
    if labels[0] != 0:
        raise ValueError("labels[0] must be the zero coset")
    if len(set(labels)) != len(labels):
        dup = [l for l in labels if labels.count(l) > 1][0]
        raise ValueError(
            f"duplicate coset label {format_label(dup, group.width)}"
        )
    if seed is None:
        seed = seed_state(group.normalized(0), 0)
    ops = tuple(coset_representative(group, lab) for lab in labels)
    return QuantumCode(group=group, seed=seed, codeword_ops=ops, labels=tuple(labels))
