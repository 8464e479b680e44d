# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled blade product kernel; must agree with the pure module bit for bit."""

BACKEND = "cython"


cdef inline int _popcount(unsigned long long x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _sign(unsigned long long s, unsigned long long t) noexcept nogil:
    cdef unsigned long long a = s >> 1
    cdef int inv = 0
    while a:
        inv += _popcount(a & t)
        a >>= 1
    inv += _popcount(s & t)
    return -1 if inv & 1 else 1


def blade_sign(unsigned long long s, unsigned long long t):
    return _sign(s, t)


def blade_mul_mask(unsigned long long s, unsigned long long t):
    return _sign(s, t), s ^ t
