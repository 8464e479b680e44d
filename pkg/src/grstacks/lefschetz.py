"""Canonical arithmetic in the subring of Q(L) spanned by integer
polynomials times integer powers of L and of cyclotomic polynomials.

An element is stored as  core * L^l_exp * prod_d Phi_d^{m_d}  where

  - core is an integer polynomial with nonzero constant term that no
    cyclotomic polynomial divides,
  - l_exp may be negative, and the multiplicities m_d are nonzero ints.

Because Z[L] is a UFD and the Phi_d are irreducible, this factorization is
unique, so structural equality is ring equality and the unit test is just
"core is +-1".  Zero is the single value with core == (), l_exp == 0 and no
cyclotomic factors.

Multiplication never re-scans cores for cyclotomic factors: a product of
two polynomials not divisible by any Phi_d is again not divisible by any
Phi_d (irreducibility), so only the L-valuation needs re-extraction.
Addition pulls out the common factor of the two operands, adds the expanded
cofactors and renormalizes the sum from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intpoly


class NotAUnit(ArithmeticError):
    pass


class ZeroInverse(ZeroDivisionError):
    pass


@dataclass(frozen=True, slots=True)
class LefschetzClass:
    core: tuple[int, ...]
    l_exp: int
    cyc: tuple[tuple[int, int], ...]  # sorted (d, multiplicity), m != 0

    def __bool__(self) -> bool:
        return bool(self.core)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LefschetzClass") -> "LefschetzClass":
        return lc_add(self, other)

    def __sub__(self, other: "LefschetzClass") -> "LefschetzClass":
        return lc_add(self, lc_neg(other))

    def __neg__(self) -> "LefschetzClass":
        return lc_neg(self)

    def __mul__(self, other: "LefschetzClass") -> "LefschetzClass":
        return lc_mul(self, other)

    def __pow__(self, k: int) -> "LefschetzClass":
        if k < 0:
            return lc_pow(lc_inv(self), -k)
        return lc_pow(self, k)

    def inv(self) -> "LefschetzClass":
        return lc_inv(self)

    def is_unit(self) -> bool:
        return self.core in ((1,), (-1,))

    def eval_at(self, q: int) -> Fraction:
        return lc_eval_at(self, q)

    def __str__(self) -> str:
        return render_factors(self)


LC_ZERO = LefschetzClass(intpoly.ZERO, 0, ())
LC_ONE = LefschetzClass(intpoly.ONE, 0, ())


def lc_normalize(core, l_exp: int = 0, cyc_exps=None) -> LefschetzClass:
    """Canonical form of core * L^l_exp * prod Phi_d^cyc_exps[d].

    Strips the L-valuation of core into l_exp, then trial-divides by every
    Phi_d whose totient is at most deg(core) -- the complete candidate set,
    see intpoly.phi_bounded.  An integer-point divisibility prefilter skips
    nearly all failing candidates without a polynomial division.
    """
    core = intpoly.normalize(core)
    exps: dict[int, int] = dict(cyc_exps) if cyc_exps else {}
    if not core:
        return LC_ZERO
    v, core = intpoly.content_and_valuation(core)
    l_exp += v
    deg = intpoly.degree(core)
    if deg > 0:
        lead = core[-1] < 0
        t = 2
        while intpoly.eval_at(core, t) == 0:
            t += 1
        point = intpoly.eval_at(core, t)
        for d in intpoly.phi_bounded(deg):
            phi_t = intpoly.cyclotomic_at(d, t)
            if phi_t != 0 and point % phi_t:
                continue
            while True:
                q = intpoly.monic_div(core, intpoly.cyclotomic(d))
                if q is None:
                    break
                core = q
                exps[d] = exps.get(d, 0) + 1
                point = intpoly.eval_at(core, t)
                if intpoly.degree(core) == 0:
                    break
            if intpoly.degree(core) == 0:
                break
        assert (core[-1] < 0) == lead
    cyc = tuple(sorted((d, m) for d, m in exps.items() if m))
    return LefschetzClass(core, l_exp, cyc)


def lc_from_poly(coeffs) -> LefschetzClass:
    return lc_normalize(coeffs)


def lc_int(n: int) -> LefschetzClass:
    return lc_normalize((n,))


def l_power(k: int) -> LefschetzClass:
    return LefschetzClass(intpoly.ONE, k, ())


def l_pow_minus_one(n: int) -> LefschetzClass:
    """The class of L^n - 1, with the cyclotomic factors split out."""
    return lc_normalize(intpoly.x_pow_minus_one(n))


def lc_neg(a: LefschetzClass) -> LefschetzClass:
    if not a.core:
        return LC_ZERO
    return LefschetzClass(intpoly.neg(a.core), a.l_exp, a.cyc)


def lc_mul(a: LefschetzClass, b: LefschetzClass) -> LefschetzClass:
    if not a.core or not b.core:
        return LC_ZERO
    core = intpoly.mul(a.core, b.core)
    # cores are Phi-free so their product is; only x | core is impossible
    # too (both constant terms nonzero), hence no re-extraction at all.
    exps: dict[int, int] = dict(a.cyc)
    for d, m in b.cyc:
        exps[d] = exps.get(d, 0) + m
    cyc = tuple(sorted((d, m) for d, m in exps.items() if m))
    return LefschetzClass(core, a.l_exp + b.l_exp, cyc)


def _common_cofactors(a: LefschetzClass, b: LefschetzClass):
    """Write a = F * pa, b = F * pb with F the common factor of the two
    canonical forms (componentwise min of exponents) and pa, pb expanded
    integer polynomials.  Returns (pa, pb, l0, common)."""
    am, bm = dict(a.cyc), dict(b.cyc)
    l0 = min(a.l_exp, b.l_exp)
    common: dict[int, int] = {}
    for d in set(am) | set(bm):
        m = min(am.get(d, 0), bm.get(d, 0))
        if m:
            common[d] = m

    def cofactor(x: LefschetzClass, xm: dict[int, int]) -> tuple[int, ...]:
        # exponent difference is >= 0 by construction of the min, but the
        # loop must cover factors present only in the common part
        p = intpoly.shift(x.core, x.l_exp - l0)
        for d in set(xm) | set(common):
            for _ in range(xm.get(d, 0) - common.get(d, 0)):
                p = intpoly.mul(p, intpoly.cyclotomic(d))
        return p

    return cofactor(a, am), cofactor(b, bm), l0, common


def lc_add(a: LefschetzClass, b: LefschetzClass) -> LefschetzClass:
    if not a.core:
        return b
    if not b.core:
        return a
    pa, pb, l0, common = _common_cofactors(a, b)
    return lc_normalize(intpoly.add(pa, pb), l0, common)


def lc_pow(a: LefschetzClass, k: int) -> LefschetzClass:
    assert k >= 0
    out = LC_ONE
    base = a
    while k:
        if k & 1:
            out = lc_mul(out, base)
        base_needed = k >> 1
        if base_needed:
            base = lc_mul(base, base)
        k = base_needed
    return out


def lc_inv(a: LefschetzClass) -> LefschetzClass:
    if not a.core:
        raise ZeroInverse("zero has no inverse")
    if a.core == (1,):
        sign = intpoly.ONE
    elif a.core == (-1,):
        sign = (-1,)
    else:
        raise NotAUnit(f"not a unit: core {intpoly.to_text(a.core)}")
    return LefschetzClass(sign, -a.l_exp, tuple((d, -m) for d, m in a.cyc))


def lc_eq(a: LefschetzClass, b: LefschetzClass, debug: bool = False) -> bool:
    """Structural equality; canonicity makes it ring equality.

    debug=True additionally cross-multiplies both sides into plain integer
    polynomials and compares those, as an independent oracle.
    """
    structural = a == b
    if debug:
        assert structural == _cross_multiply_eq(a, b)
    return structural


def _cross_multiply_eq(a: LefschetzClass, b: LefschetzClass) -> bool:
    """Compare by clearing the common factor and expanding both cofactors."""
    if not a.core or not b.core:
        return (not a.core) == (not b.core)
    pa, pb, _, _ = _common_cofactors(a, b)
    return pa == pb


def lc_eval_at(a: LefschetzClass, q: int) -> Fraction:
    """Exact specialization at an integer q >= 2 (Phi_d(q) > 0 there)."""
    if q < 2:
        raise ValueError("specialization point must be >= 2")
    if not a.core:
        return Fraction(0)
    out = Fraction(intpoly.eval_at(a.core, q))
    out *= Fraction(q) ** a.l_exp
    for d, m in a.cyc:
        out *= Fraction(intpoly.cyclotomic_at(d, q)) ** m
    return out


# -- display ----------------------------------------------------------


def regroup_cyclotomics(cyc) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Split Phi-multiplicities into (L^n - 1) blocks plus leftovers.

    Greedy from the largest d: when every divisor of d still carries a
    multiplicity of the same sign, emit an (L^d - 1)^sign block.  Returns
    (blocks, leftover) as lists of (n, exponent) / (d, exponent).
    """
    exps = {d: m for d, m in cyc}
    blocks: list[tuple[int, int]] = []
    leftover: list[tuple[int, int]] = []
    while exps:
        d = max(exps)
        s = 1 if exps[d] > 0 else -1
        divisors = [e for e in range(1, d + 1) if d % e == 0]
        if all(exps.get(e, 0) * s >= 1 for e in divisors):
            count = 0
            while all(exps.get(e, 0) * s >= 1 for e in divisors):
                for e in divisors:
                    exps[e] = exps.get(e, 0) - s
                    if exps[e] == 0:
                        del exps[e]
                count += s
            blocks.append((d, count))
        else:
            leftover.append((d, exps.pop(d)))
    blocks.sort()
    leftover.sort()
    return blocks, leftover


def render_factors(a: LefschetzClass, regroup: bool = True) -> str:
    """Factored display, e.g. ``L^-6 * (L^6-1)^-1 * (L^2-1)^-1``.

    The output reparses in the expression grammar (cyclo(d) covers factors
    that do not regroup into (L^n - 1) blocks).
    """
    if not a.core:
        return "0"
    parts: list[str] = []
    core = a.core
    if core == (-1,):
        parts.append("-1")
    elif core != (1,):
        text = intpoly.to_text(core)
        parts.append(f"({text})" if (len(core) > 1 or core[0] < 0) else text)
    if a.l_exp:
        parts.append("L" if a.l_exp == 1 else f"L^{a.l_exp}")
    if regroup:
        blocks, leftover = regroup_cyclotomics(a.cyc)
    else:
        blocks, leftover = [], list(a.cyc)
    for n, k in blocks:
        base = f"(L^{n}-1)" if n > 1 else "(L-1)"
        parts.append(base if k == 1 else f"{base}^{k}")
    for d, m in leftover:
        parts.append(f"cyclo({d})" if m == 1 else f"cyclo({d})^{m}")
    if not parts:
        return "1"
    return " * ".join(parts)
