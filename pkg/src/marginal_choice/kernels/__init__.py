"""Subset-lattice transform kernels with a compiled fast path.

The compiled extension (``_fast``, Cython) handles int64-sized numerator
arrays; the pure-Python reference handles everything else, including
arbitrary-precision integers.  Set ``MARGINAL_CHOICE_PURE_PYTHON=1`` to
force the reference path.

Public helpers take and return ``list[int]``; routing between backends is
transparent and exact either way.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _reference

if os.environ.get("MARGINAL_CHOICE_PURE_PYTHON"):
    _fast = None
else:
    try:
        from . import _fast
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "python"

# Intermediate zeta/mobius values are bounded by 2^n * max|input|; keep a
# wide safety margin below int64.
_INT64_SAFE = 1 << 62


def _fits_int64(values: Sequence[int], n: int) -> bool:
    if _fast is None:
        return False
    peak = max((abs(v) for v in values), default=0)
    return peak < (_INT64_SAFE >> n)


def _as_i64(values: Sequence[int]):
    import numpy as np

    return np.asarray(values, dtype=np.int64)


def zeta(values: Sequence[int], n: int) -> list[int]:
    """out[A] = sum of values[B] over B subseteq A, for all 2^n masks."""
    if _fits_int64(values, n):
        return [int(x) for x in _fast.zeta(_as_i64(values), n)]
    return _reference.zeta(list(values), n)


def mobius(values: Sequence[int], n: int) -> list[int]:
    """Inverse subset-sum transform (inclusion-exclusion)."""
    if _fits_int64(values, n):
        return [int(x) for x in _fast.mobius(_as_i64(values), n)]
    return _reference.mobius(list(values), n)


def supermodular(values: Sequence[int], n: int, strict: bool = False) -> bool:
    """Pairwise-increment supermodularity test over the full lattice."""
    if _fits_int64(values, n):
        return bool(_fast.supermodular(_as_i64(values), n, strict))
    return _reference.supermodular(list(values), n, strict)
