"""Pure-Python subset-lattice transforms over arbitrary-precision integers.

These are the reference implementations of the compiled kernels in
``_fast.pyx``.  They operate on integer numerator arrays (a shared
denominator is factored out by the caller) so both backends are exact.
"""

from __future__ import annotations


def zeta(values: list[int], n: int) -> list[int]:
    """Subset-sum transform: out[A] = sum of values[B] over B subseteq A."""
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                out[mask] += out[mask ^ bit]
    return out


def mobius(values: list[int], n: int) -> list[int]:
    """Inverse of :func:`zeta`: signed inclusion-exclusion over the lattice."""
    out = list(values)
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                out[mask] -= out[mask ^ bit]
    return out


def supermodular(values: list[int], n: int, strict: bool = False) -> bool:
    """Check v(A|i) - v(A) <= v(A|i|j) - v(A|j) for all A and i, j not in A.

    With ``strict`` the inequality must be strict, which characterizes
    strict convexity via the local increments.
    """
    size = 1 << n
    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            both = bi | bj
            for mask in range(size):
                if mask & both:
                    continue
                lhs = values[mask | bi] - values[mask]
                rhs = values[mask | both] - values[mask | bj]
                if lhs > rhs or (strict and lhs == rhs):
                    return False
    return True
