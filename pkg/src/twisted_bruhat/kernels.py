"""Kernel selection: the compiled extension when it imports, else pure Python.

Set ``TWISTED_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("TWISTED_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

_BITS = bytes.maketrans(b"\x00\x01", b"01")

pack_dots = _impl.pack_dots
leq_table = _impl.leq_table
inversions = _impl.inversions


def leq_masks(dots_a, na, dots_b, nb, mm):
    """Row bitmasks: bit ``q`` of entry ``p`` is set iff ``A[p] <= B[q]``."""
    flags = bytes(leq_table(dots_a, na, dots_b, nb, mm)).translate(_BITS)
    masks = []
    for p in range(na):
        # reversed so that bit q of the int is flag q
        row = flags[p * nb:(p + 1) * nb][::-1]
        masks.append(int(row, 2) if nb else 0)
    return masks
