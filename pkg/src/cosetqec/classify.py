"""Four-type code classification from two subgroup predicates.

A code is classified by whether (a) its codeword operators form a group
and (b) its seed's basis strings form an XOR subgroup.  Predicate (a) is
evaluated on coset labels (i.e. mod the abelian group), because codeword
operators are only chosen representatives of their cosets and the class
should not depend on that choice; the strict mod-phase closure of the
chosen operators is also computed and reported for transparency.

Type I is the additive (stabilizer) case: both predicates hold.  Type II
drops (a), type III drops (b), type IV drops both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .codes import QuantumCode
from .pauli import PauliOperator


def is_xor_subgroup(strings: Iterable[int]) -> bool:
    """True iff the set contains zero and is closed under XOR."""
    values = set(strings)
    if not values or 0 not in values:
        return False
    return all(a ^ b in values for a in values for b in values)


def is_closed_mod_phase(ops: Sequence[PauliOperator]) -> bool:
    """True iff the operators contain the identity and are closed under
    multiplication with phases ignored."""
    classes = {(op.x, op.z) for op in ops}
    if (0, 0) not in classes:
        return False
    return all(
        (x1 ^ x2, z1 ^ z2) in classes
        for (x1, z1) in classes
        for (x2, z2) in classes
    )


@dataclass(frozen=True)
class CodeClass:
    """Classification outcome; ``bcw_is_group`` is the label-level
    (representative-independent) predicate used for the type."""

    type_tag: str
    bcw_is_group: bool
    csb_is_group: bool
    additive: bool
    bcw_is_group_strict: bool
    linear: bool


_TYPE = {
    (True, True): "I",
    (False, True): "II",
    (True, False): "III",
    (False, False): "IV",
}


def classify(code: QuantumCode) -> CodeClass:
    bcw = is_xor_subgroup(code.labels)
    bcw_strict = is_closed_mod_phase(code.codeword_ops)
    csb = is_xor_subgroup(s ^ code.seed.base for s in code.seed.strings)
    tag = _TYPE[(bcw, csb)]
    return CodeClass(
        type_tag=tag,
        bcw_is_group=bcw,
        csb_is_group=csb,
        additive=(tag == "I"),
        bcw_is_group_strict=bcw_strict,
        linear=bcw,
    )


def linearity_note(code: QuantumCode) -> str:
    """"linear" when the codeword coset labels form an XOR subgroup, so
    the classical image of the code is a linear code."""
    return "linear" if is_xor_subgroup(code.labels) else "nonlinear"
