"""Bitmask blades and their product, shared by everything Clifford-flavored.

Generators are indexed 1..n; a blade is the bitmask of its generator set.
The sign convention bakes in the relations: each generator squares to -1 and
distinct generators anticommute.  The compiled kernel is used when the build
produced one, the pure module otherwise; both expose the same two functions.
"""

from __future__ import annotations

from collections.abc import Iterable

try:
    from . import _blademask as _kernel  # type: ignore[import-not-found]
except ImportError:
    from . import _blademask_py as _kernel  # type: ignore[no-redef]

BACKEND: str = _kernel.BACKEND
blade_sign = _kernel.blade_sign
blade_mul_mask = _kernel.blade_mul_mask


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        b = 1 << (i - 1)
        if m & b:
            raise ValueError(f"repeated generator index {i}")
        m |= b
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def grade(mask: int) -> int:
    return mask.bit_count()


def blade_mul(s: frozenset[int], t: frozenset[int]) -> tuple[int, frozenset[int]]:
    """Set-level wrapper: returns (sign, symmetric difference)."""
    sign, u = blade_mul_mask(mask_of(s), mask_of(t))
    return sign, frozenset(indices_of(u))
