"""Exact arithmetic for signed p-qubit Pauli operators.

An operator is stored in phase + binary-symplectic form as
``i**phase * X^x * Z^z`` with X applied after (to the left of) Z on
every qubit.  Bit j of the ``x`` and ``z`` masks belongs to qubit j,
which is the j-th character of the string form, so ``"XIZ"`` has
``x = 0b001`` and ``z = 0b100``.

A Y factor is X*Z with an explicit i folded into the global phase
(``Y = i * X * Z``), which keeps every unprefixed Pauli string
Hermitian.  The string form carries an optional prefix from
``{"+", "-", "+i", "-i"}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ._kernels import multiply_packed, rank_f2, symplectic_parity

MAX_WIDTH = 24

_PREFIX_TO_EXP = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_EXP_TO_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}
_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


class ParseError(ValueError):
    """Malformed Pauli string, bit string, or input file."""


class WidthMismatchError(ValueError):
    """Operands act on different numbers of qubits."""


def _check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {width}")


@dataclass(frozen=True, slots=True)
class PauliOperator:
    """A signed Pauli operator ``i**phase * X^x * Z^z`` on ``width`` qubits."""

    phase: int
    x: int
    z: int
    width: int

    def __post_init__(self) -> None:
        _check_width(self.width)
        mask = (1 << self.width) - 1
        if not 0 <= self.x <= mask or not 0 <= self.z <= mask:
            raise ValueError("x/z masks exceed the operator width")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, width: int) -> "PauliOperator":
        return cls(0, 0, 0, width)

    @classmethod
    def from_symplectic(cls, x: int, z: int, width: int) -> "PauliOperator":
        """Canonical Hermitian representative of (x, z) with a + sign."""
        return cls((x & z).bit_count() % 4, x, z, width)

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.width != other.width:
            raise WidthMismatchError(
                f"cannot multiply width {self.width} by width {other.width}"
            )
        phase, x, z = multiply_packed(
            self.phase, self.x, self.z, other.phase, other.x, other.z
        )
        return PauliOperator(phase, x, z, self.width)

    def adjoint(self) -> "PauliOperator":
        """Conjugate transpose; equals self exactly when Hermitian."""
        return PauliOperator(
            (-self.phase + 2 * (self.x & self.z).bit_count()) % 4,
            self.x,
            self.z,
            self.width,
        )

    def commutes(self, other: "PauliOperator") -> bool:
        return symplectic_product(self, other) == 0

    @property
    def weight(self) -> int:
        """Number of qubits on which the operator is not the identity."""
        return (self.x | self.z).bit_count()

    @property
    def is_hermitian(self) -> bool:
        return (self.phase - (self.x & self.z).bit_count()) % 2 == 0

    @property
    def sign_exp(self) -> int:
        """Exponent of the i prefix once each Y has absorbed its own i."""
        return (self.phase - (self.x & self.z).bit_count()) % 4

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase == 0

    def equal_mod_phase(self, other: "PauliOperator") -> bool:
        return (self.x, self.z, self.width) == (other.x, other.z, other.width)

    def body(self) -> str:
        """Unsigned letter string, e.g. ``"XIZ"``."""
        letters = []
        for j in range(self.width):
            letters.append(_BITS_TO_LETTER[(self.x >> j) & 1, (self.z >> j) & 1])
        return "".join(letters)

    def __str__(self) -> str:
        return format_pauli(self)


def parse_pauli(text: str, width: int | None = None) -> PauliOperator:
    """Parse a Pauli string with an optional ``+ - +i -i`` prefix.

    Each character of the body must be one of I, X, Y, Z; a Y at position
    j sets both masks there and adds one to the phase exponent, so any
    unprefixed string parses to a Hermitian operator.
    """
    s = text.strip()
    prefix = ""
    for cand in ("-i", "+i", "i", "-", "+"):
        if s.startswith(cand):
            prefix = cand
            s = s[len(cand):]
            break
    if not s:
        raise ParseError(f"empty Pauli body in {text!r}")
    if width is not None and len(s) != width:
        raise ParseError(
            f"expected {width} Pauli characters, got {len(s)} in {text!r}"
        )
    _check_width(len(s))
    phase = _PREFIX_TO_EXP[prefix]
    x = z = 0
    for j, ch in enumerate(s):
        bits = _LETTER_TO_BITS.get(ch)
        if bits is None:
            raise ParseError(f"invalid character {ch!r} at position {j} in {text!r}")
        x |= bits[0] << j
        z |= bits[1] << j
        if bits == (1, 1):
            phase += 1
    return PauliOperator(phase % 4, x, z, len(s))


def format_pauli(op: PauliOperator) -> str:
    """Inverse of :func:`parse_pauli` on canonical forms."""
    return _EXP_TO_PREFIX[op.sign_exp] + op.body()


def symplectic_product(s1: PauliOperator, s2: PauliOperator) -> int:
    """0 if the operators commute, 1 if they anticommute (phases ignored)."""
    if s1.width != s2.width:
        raise WidthMismatchError(
            f"cannot compare width {s1.width} with width {s2.width}"
        )
    return symplectic_parity(s1.x, s1.z, s2.x, s2.z)


def rank_mod_phase(ops: Sequence[PauliOperator]) -> int:
    """GF(2) rank of the (x|z) rows; the size of any maximal independent
    mod-phase subset."""
    if not ops:
        return 0
    width = ops[0].width
    for op in ops:
        if op.width != width:
            raise WidthMismatchError("mixed widths in rank computation")
    return rank_f2([op.x | (op.z << width) for op in ops])


def parse_bits(text: str, width: int | None = None) -> int:
    """Parse a bit string; character j is bit j of the result."""
    s = text.strip()
    if width is not None and len(s) != width:
        raise ParseError(f"expected {width} bits, got {len(s)} in {text!r}")
    value = 0
    for j, ch in enumerate(s):
        if ch == "1":
            value |= 1 << j
        elif ch != "0":
            raise ParseError(f"invalid bit {ch!r} at position {j} in {text!r}")
    return value


def format_bits(value: int, width: int) -> str:
    return "".join("1" if (value >> j) & 1 else "0" for j in range(width))


@dataclass(frozen=True, slots=True)
class ErrorSet:
    """An ordered error collection; entry 0 is the identity and no two
    entries are equal mod phase."""

    errors: tuple[PauliOperator, ...]

    def __post_init__(self) -> None:
        if not self.errors:
            raise ValueError("error set is empty")
        width = self.errors[0].width
        for op in self.errors:
            if op.width != width:
                raise WidthMismatchError("mixed widths in error set")
        first = self.errors[0]
        if not first.is_identity:
            raise ValueError(
                f"the first error must be the identity, got {format_pauli(first)!r}"
            )
        seen: set[tuple[int, int]] = set()
        for i, op in enumerate(self.errors):
            key = (op.x, op.z)
            if key in seen:
                raise ValueError(f"error {i} duplicates an earlier entry mod phase")
            seen.add(key)

    @classmethod
    def from_strings(
        cls, lines: Iterable[str], width: int | None = None
    ) -> "ErrorSet":
        ops = [parse_pauli(line, width) for line in lines]
        return cls(tuple(ops))

    @classmethod
    def from_text(cls, text: str, width: int | None = None) -> "ErrorSet":
        """Parse an error file: one Pauli string per line, '#' comments and
        blank lines ignored, first entry must be the identity."""
        lines = []
        for raw in text.splitlines():
            line = raw.strip()
            if line and not line.startswith("#"):
                lines.append(line)
        if not lines:
            raise ParseError("error file contains no Pauli strings")
        return cls.from_strings(lines, width)

    @property
    def width(self) -> int:
        return self.errors[0].width

    def __len__(self) -> int:
        return len(self.errors)

    def __iter__(self) -> Iterator[PauliOperator]:
        return iter(self.errors)

    def __getitem__(self, i: int) -> PauliOperator:
        return self.errors[i]
