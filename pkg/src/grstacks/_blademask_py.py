"""Reference blade product kernel, pure Python.

A basis blade is a bitmask: bit i-1 set means generator i is present.  The
product of two blades is the symmetric difference, with a sign composed of
the index crossings needed to interleave the sorted factors and one -1 per
squared generator.
"""

from __future__ import annotations

BACKEND = "python"


def blade_sign(s: int, t: int) -> int:
    # crossings: pairs (i in s, j in t) with i > j
    inv = 0
    a = s >> 1
    while a:
        inv += (a & t).bit_count()
        a >>= 1
    inv += (s & t).bit_count()
    return -1 if inv & 1 else 1


def blade_mul_mask(s: int, t: int) -> tuple[int, int]:
    return blade_sign(s, t), s ^ t
