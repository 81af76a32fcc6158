"""Syndrome tables, the algebraic correctability check, and diagnosis.

Correctability of an error set against a code is decided purely on
coset labels: the code corrects the set exactly when the N*K labels of
all error x codeword products are distinct.  This runs at widths the
dense-state engine cannot reach; for seeds that are not full group
closures the verdict is flagged as algebraic-only so callers know to
ask the dense engine for confirmation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .codes import QuantumCode, SEED_STABILIZER
from .pauli import ErrorSet, PauliOperator, WidthMismatchError
from .stabilizer import format_label


class UnknownSyndromeError(LookupError):
    """Observed label absent from the table: an uncorrectable event."""


class InternalCheckError(AssertionError):
    """An identity that must hold algebraically failed; indicates a bug."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of the correctability check.

    ``collision`` names the first repeated label in row-major (error,
    codeword) order as (i1, j1, i2, j2).  ``pigeonhole`` marks the
    immediate N*K > 2^p refusal.  ``algebraic_only`` is set when the seed
    is not a full closure, where distinct labels alone do not prove
    orthogonal syndrome states.
    """

    correctable: bool
    collision: tuple[int, int, int, int] | None = None
    pigeonhole: bool = False
    algebraic_only: bool = False


@dataclass(frozen=True)
class SyndromeTable:
    """Labels of every error x codeword product, row-major by error."""

    code: QuantumCode
    errors: ErrorSet
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def inverse(self) -> dict[int, tuple[int, int]] | None:
        """Label -> (error index, codeword index); None if not injective."""
        out: dict[int, tuple[int, int]] = {}
        for i, row in enumerate(self.rows):
            for j, lab in enumerate(row):
                if lab in out:
                    return None
                out[lab] = (i, j)
        return out

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def iter_entries(self):
        for i, row in enumerate(self.rows):
            for j, lab in enumerate(row):
                yield i, j, lab


def build_table(code: QuantumCode, errors: ErrorSet) -> SyndromeTable:
    """Compute every product label twice, once from the product operator
    and once by XOR additivity, and insist the two agree."""
    if errors.width != code.width:
        raise WidthMismatchError(
            f"error width {errors.width} != code width {code.width}"
        )
    group = code.group
    err_labels = [group.syndrome(e) for e in errors]
    rows = []
    for i, err in enumerate(errors):
        row = []
        for j, op in enumerate(code.codeword_ops):
            direct = group.syndrome(err * op)
            additive = err_labels[i] ^ code.labels[j]
            if direct != additive:
                raise InternalCheckError(
                    f"syndrome additivity failed at entry ({i}, {j})"
                )
            row.append(direct)
        rows.append(tuple(row))
    return SyndromeTable(code=code, errors=errors, rows=tuple(rows))


def check_correctable(code: QuantumCode, errors: ErrorSet) -> Verdict:
    """Distinct-label criterion; reports the first row-major collision."""
    algebraic_only = code.seed.origin != SEED_STABILIZER
    n, k, p = len(errors), code.dimension, code.width
    if n * k > (1 << p):
        return Verdict(
            correctable=False, pigeonhole=True, algebraic_only=algebraic_only
        )
    table = build_table(code, errors)
    seen: dict[int, tuple[int, int]] = {}
    for i, j, lab in table.iter_entries():
        if lab in seen:
            i1, j1 = seen[lab]
            return Verdict(
                correctable=False,
                collision=(i1, j1, i, j),
                algebraic_only=algebraic_only,
            )
        seen[lab] = (i, j)
    return Verdict(correctable=True, algebraic_only=algebraic_only)


@dataclass(frozen=True)
class Diagnosis:
    error_index: int
    codeword_index: int
    correction: PauliOperator


def diagnose(
    code: QuantumCode,
    errors: ErrorSet,
    observed: int,
    table: SyndromeTable | None = None,
) -> Diagnosis:
    """Invert the syndrome table at an observed label.  The returned
    error operator is the correction to apply (self-inverse up to sign).
    Requires a correctable pairing; raises UnknownSyndromeError when the
    label is not in the table."""
    if table is None:
        table = build_table(code, errors)
    inverse = table.inverse
    if inverse is None:
        raise ValueError("syndrome table is not injective; code does not correct this set")
    hit = inverse.get(observed)
    if hit is None:
        raise UnknownSyndromeError(
            f"label {format_label(observed, code.width)} matches no "
            "error/codeword product"
        )
    i, j = hit
    return Diagnosis(error_index=i, codeword_index=j, correction=errors[i])
