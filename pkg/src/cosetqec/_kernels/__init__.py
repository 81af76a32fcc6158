"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``COSETQEC_PURE=1`` to force the pure-Python lane regardless of
whether the extension was built.  ``BACKEND`` records the active lane.
"""

from __future__ import annotations

import os

if os.environ.get("COSETQEC_PURE") == "1":
    from . import _fallback as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _fallback as _impl  # type: ignore[no-redef]

        BACKEND = "python"

mix64 = _impl.mix64
symplectic_parity = _impl.symplectic_parity
multiply_packed = _impl.multiply_packed
rank_f2 = _impl.rank_f2
syndrome_bits = _impl.syndrome_bits
random_group_packed = _impl.random_group_packed
greedy_label_scan = _impl.greedy_label_scan
search_range = _impl.search_range

__all__ = [
    "BACKEND",
    "mix64",
    "symplectic_parity",
    "multiply_packed",
    "rank_f2",
    "syndrome_bits",
    "random_group_packed",
    "greedy_label_scan",
    "search_range",
]
