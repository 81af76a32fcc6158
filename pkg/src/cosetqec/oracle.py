"""Exact dense state-vector engine over Gaussian integers.

This is the independent referee for every orthogonality and eigenvector
claim the algebraic modules make.  It deliberately avoids the packed
kernels and the syndrome machinery: states are materialized as 2^p
arbitrary-precision Gaussian-integer amplitudes, operators act by index
permutation plus unit factors, and every comparison is an exact
equality.  There are no tolerances anywhere because every amplitude in
this framework is an integer times a fourth root of unity.

Normalization is never applied: a state is a (vector, norm2) pair, and
normalized quantities are formed as exact ratios on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .codes import QuantumCode, SeedState
from .pauli import ErrorSet, PauliOperator, WidthMismatchError, format_pauli
from .stabilizer import StabilizerGroup, format_label

MAX_WIDTH = 14
DICHOTOMY_MAX_WIDTH = 10
ORTHOGONALITY_MAX_WIDTH = 12


class OracleLimitError(ValueError):
    """Requested width exceeds the dense engine's cap."""


class InternalOracleError(AssertionError):
    """A structural property of the dense engine failed; indicates a bug."""


def _check_dense_width(width: int, cap: int = MAX_WIDTH) -> None:
    if width > cap:
        raise OracleLimitError(
            f"width {width} exceeds the dense-state cap of {cap}"
        )


# Multiplication of a Gaussian integer (re, im) by i^k.
def _unit_mul(re: int, im: int, k: int) -> tuple[int, int]:
    k &= 3
    if k == 0:
        return re, im
    if k == 1:
        return -im, re
    if k == 2:
        return -re, -im
    return im, -re


@dataclass(frozen=True)
class DenseState:
    """An unnormalized state: 2^width Gaussian-integer amplitudes."""

    re: tuple[int, ...]
    im: tuple[int, ...]
    width: int

    def __post_init__(self) -> None:
        _check_dense_width(self.width)
        if len(self.re) != (1 << self.width) or len(self.im) != (1 << self.width):
            raise ValueError("amplitude arrays must have length 2^width")

    @cached_property
    def norm2(self) -> int:
        return sum(r * r + i * i for r, i in zip(self.re, self.im))

    @property
    def is_zero(self) -> bool:
        return self.norm2 == 0

    @classmethod
    def from_basis(cls, string: int, width: int) -> "DenseState":
        _check_dense_width(width)
        re = [0] * (1 << width)
        re[string] = 1
        return cls(tuple(re), (0,) * (1 << width), width)

    @classmethod
    def from_seed(cls, seed: SeedState) -> "DenseState":
        _check_dense_width(seed.width)
        re = [0] * (1 << seed.width)
        im = [0] * (1 << seed.width)
        for unit, string in seed.terms:
            re[string], im[string] = _unit_mul(1, 0, unit)
        return cls(tuple(re), tuple(im), seed.width)

    def apply(self, op: PauliOperator) -> "DenseState":
        """Image under i^d X^x Z^z: |a> -> i^d (-1)^(z.a) |a^x>."""
        if op.width != self.width:
            raise WidthMismatchError(
                f"operator width {op.width} != state width {self.width}"
            )
        size = 1 << self.width
        re = [0] * size
        im = [0] * size
        for a in range(size):
            r, i = self.re[a], self.im[a]
            if r == 0 and i == 0:
                continue
            k = (op.phase + 2 * ((op.z & a).bit_count() & 1)) & 3
            re[a ^ op.x], im[a ^ op.x] = _unit_mul(r, i, k)
        return DenseState(tuple(re), tuple(im), self.width)

    def inner(self, other: "DenseState") -> tuple[int, int]:
        """<self|other> as an exact Gaussian integer (conjugate-linear in
        self); divide by norms only if you must, as an exact ratio."""
        if other.width != self.width:
            raise WidthMismatchError("inner product of mismatched widths")
        re = im = 0
        for ur, ui, vr, vi in zip(self.re, self.im, other.re, other.im):
            re += ur * vr + ui * vi
            im += ur * vi - ui * vr
        return re, im

    def is_orthogonal(self, other: "DenseState") -> bool:
        return self.inner(other) == (0, 0)

    def eigencheck(self, op: PauliOperator) -> int | None:
        """+1 or -1 when the state is an exact eigenvector of op with that
        eigenvalue, None otherwise."""
        if self.is_zero:
            raise ValueError("eigencheck on the zero vector")
        moved = self.apply(op)
        if moved.re == self.re and moved.im == self.im:
            return 1
        if all(m == -s for m, s in zip(moved.re, self.re)) and all(
            m == -s for m, s in zip(moved.im, self.im)
        ):
            return -1
        return None


@dataclass(frozen=True)
class OracleReport:
    """Result of one exhaustive dense-state sweep."""

    check: str
    cases: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def codeword_states(code: QuantumCode) -> list[DenseState]:
    base = DenseState.from_seed(code.seed)
    return [base.apply(op) for op in code.codeword_ops]


def syndrome_states(
    code: QuantumCode, errors: ErrorSet
) -> list[tuple[int, int, DenseState]]:
    """(error index, codeword index, state) row-major; the state is the
    error applied to the codeword."""
    words = codeword_states(code)
    out = []
    for i, err in enumerate(errors):
        for j, w in enumerate(words):
            out.append((i, j, w.apply(err)))
    return out


def check_overlap_dichotomy(group: StabilizerGroup) -> OracleReport:
    """Sweep all 4^p mod-phase operators against the group's seed: the
    expectation <seed|S|seed> must vanish exactly when S is outside the
    closure, and be exactly +/-norm2 when inside."""
    from .codes import seed_state  # local import to keep module layering flat

    p = group.width
    _check_dense_width(p, DICHOTOMY_MAX_WIDTH)
    norm = group.normalized(0)
    seed = DenseState.from_seed(seed_state(norm, 0))
    n2 = seed.norm2
    members = norm.closure_classes
    violations = []
    cases = 0
    for x in range(1 << p):
        for z in range(1 << p):
            cases += 1
            op = PauliOperator.from_symplectic(x, z, p)
            val = seed.inner(seed.apply(op))
            inside = (x, z) in members
            if inside:
                if val not in ((n2, 0), (-n2, 0)):
                    violations.append(
                        f"{format_pauli(op)}: inside but expectation {val} != +/-{n2}"
                    )
            elif val != (0, 0):
                violations.append(
                    f"{format_pauli(op)}: outside but expectation {val} != 0"
                )
    return OracleReport("overlap-dichotomy", cases, tuple(violations))


def check_eigenvectors(
    code: QuantumCode, errors: ErrorSet | None = None
) -> OracleReport:
    """Every basis codeword (and, with an error set, every syndrome state)
    must be an exact +/-1 eigenvector of every closure element."""
    _check_dense_width(code.width, ORTHOGONALITY_MAX_WIDTH)
    states: list[tuple[str, DenseState]] = [
        (f"codeword {j}", s) for j, s in enumerate(codeword_states(code))
    ]
    if errors is not None:
        states += [
            (f"syndrome ({i},{j})", s)
            for i, j, s in syndrome_states(code, errors)
        ]
    violations = []
    cases = 0
    for name, state in states:
        for elem in code.group.closure():
            cases += 1
            if state.eigencheck(elem) is None:
                violations.append(
                    f"{name} is not an eigenvector of {format_pauli(elem)}"
                )
    return OracleReport("eigenvectors", cases, tuple(violations))


def check_syndrome_orthogonality(
    code: QuantumCode, errors: ErrorSet
) -> OracleReport:
    """Exact biconditional over all syndrome-state pairs: orthogonal if
    and only if their coset labels differ.

    Proven only for full-closure seeds; on punctured or explicit seeds
    treat the report as informational.
    """
    _check_dense_width(code.width, ORTHOGONALITY_MAX_WIDTH)
    group = code.group
    states = syndrome_states(code, errors)
    err_labels = [group.syndrome(e) for e in errors]
    labeled = [
        (i, j, err_labels[i] ^ code.labels[j], s) for i, j, s in states
    ]
    violations = []
    cases = 0
    for a in range(len(labeled)):
        i1, j1, l1, s1 = labeled[a]
        for b in range(a + 1, len(labeled)):
            i2, j2, l2, s2 = labeled[b]
            cases += 1
            ortho = s1.is_orthogonal(s2)
            if ortho != (l1 != l2):
                violations.append(
                    f"states ({i1},{j1}) and ({i2},{j2}): orthogonal={ortho} "
                    f"but labels {format_label(l1, code.width)} vs "
                    f"{format_label(l2, code.width)}"
                )
    return OracleReport("syndrome-orthogonality", cases, tuple(violations))


@dataclass(frozen=True)
class KLReport:
    """Knill-Laflamme cross-check: <psi_i|Ea' Eb|psi_j> = c_ab delta_ij."""

    passed: bool
    witness: tuple[int, int, int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.passed


def check_knill_laflamme(code: QuantumCode, errors: ErrorSet) -> KLReport:
    """Verify the standard correctability conditions over the dense
    codeword basis.  All codewords share the seed's norm (Pauli images),
    so the constants compare as raw Gaussian integers; the first
    violating (a, b, i, j) is returned as the witness."""
    _check_dense_width(code.width, ORTHOGONALITY_MAX_WIDTH)
    words = codeword_states(code)
    norms = {w.norm2 for w in words}
    if len(norms) != 1:
        raise InternalOracleError("codeword norms diverged; Pauli action is broken")
    # <psi_i|Ea' Eb|psi_j> = <Ea psi_i | Eb psi_j>
    moved = [[w.apply(e) for w in words] for e in errors]
    k = len(words)
    for a in range(len(errors)):
        for b in range(len(errors)):
            c_ab = moved[a][0].inner(moved[b][0])
            for i in range(k):
                for j in range(k):
                    val = moved[a][i].inner(moved[b][j])
                    want = c_ab if i == j else (0, 0)
                    if val != want:
                        return KLReport(passed=False, witness=(a, b, i, j))
    return KLReport(passed=True)
