"""Classifying-stack classes: known class formulas, the generic two-stratum
equation, and the recursion tower that writes the class of B Spin_n as a
linear combination of the finite-group atoms BDelta_m.

A MotiveExpr is a scalar LefschetzClass plus a finite map m -> coefficient
on formal atoms BDelta_m.  The three mutually recursive families

  spin(n):  (L^n - 1) * spin(n) = L^(2-n) * spin(n-2) + (L-1) * pin(n-1)
  pin(n):   (L^n - 1) * pin(n)  = L^(2-n) * pin(n-2)  + (L-1) * g(n, 1)
  g(n, r):  (L^(n-r) - 1) * g(n, r)
                = L^(r+2-n) * g(n-2, r) + (L-1) * g(n, r+1)

bottom out at pin(0) = pin(1) = spin(1) = 1, spin(2) = (L-1)^-1, and the
collapse g(n, r) = BDelta_n for r >= n - 1.  The rank-1 corner g(1, 1) is
the order-4 cyclic group (the diagonal preimage in rank 1); its classifying
class is recorded as the constant 1, so the atom with index 1 never occurs.

Every recursion step preserves n mod 2, so bspin(n) only supports atoms
with m == n - 1 (mod 2); in particular the n = 3..max solve in
solve_deltas is triangular with a fresh atom BDelta_(n-1) in every row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .lefschetz import (
    LC_ONE,
    LC_ZERO,
    LefschetzClass,
    l_pow_minus_one,
    l_power,
    lc_add,
    lc_eq,
    lc_from_poly,
    lc_inv,
    lc_mul,
    lc_neg,
)


class DomainError(ValueError):
    pass


class MissingAtom(KeyError):
    pass


class Inconsistent(ArithmeticError):
    pass


@dataclass(frozen=True)
class MotiveExpr:
    scalar: LefschetzClass = LC_ZERO
    atoms: tuple[tuple[int, LefschetzClass], ...] = ()

    def __post_init__(self):
        for m, c in self.atoms:
            assert m >= 1 and c.core, "zero coefficients must not be stored"

    def atom_map(self) -> dict[int, LefschetzClass]:
        return dict(self.atoms)

    def support(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.atoms)

    def is_scalar(self) -> bool:
        return not self.atoms

    def __add__(self, other: "MotiveExpr") -> "MotiveExpr":
        return m_add(self, other)

    def __sub__(self, other: "MotiveExpr") -> "MotiveExpr":
        return m_add(self, m_scale(other, lc_neg(LC_ONE)))

    def __str__(self) -> str:
        parts = [f"({self.scalar})"] if self.scalar.core or not self.atoms else []
        for m, c in self.atoms:
            parts.append(f"({c})*BDelta({m})")
        return " + ".join(parts)


M_ZERO = MotiveExpr()
M_ONE = MotiveExpr(LC_ONE)


def m_scalar(c: LefschetzClass) -> MotiveExpr:
    return MotiveExpr(c)


def m_atom(m: int, coeff: LefschetzClass = LC_ONE) -> MotiveExpr:
    if m < 1:
        raise DomainError("atom index must be >= 1")
    if not coeff.core:
        return M_ZERO
    return MotiveExpr(LC_ZERO, ((m, coeff),))


def m_add(a: MotiveExpr, b: MotiveExpr) -> MotiveExpr:
    coeffs = a.atom_map()
    for m, c in b.atoms:
        s = lc_add(coeffs.get(m, LC_ZERO), c)
        if s.core:
            coeffs[m] = s
        else:
            coeffs.pop(m, None)
    return MotiveExpr(lc_add(a.scalar, b.scalar), tuple(sorted(coeffs.items())))


def m_scale(a: MotiveExpr, c: LefschetzClass) -> MotiveExpr:
    if not c.core:
        return M_ZERO
    return MotiveExpr(
        lc_mul(a.scalar, c), tuple((m, lc_mul(k, c)) for m, k in a.atoms)
    )


# -- known class formulas ---------------------------------------------


def class_gl(n: int) -> LefschetzClass:
    """(L^n - 1)(L^n - L) ... (L^n - L^(n-1))."""
    if n < 1:
        raise DomainError("n must be >= 1")
    out = l_power(n * (n - 1) // 2)
    for j in range(1, n + 1):
        out = lc_mul(out, l_pow_minus_one(j))
    return out


def class_sl(n: int) -> LefschetzClass:
    if n < 1:
        raise DomainError("n must be >= 1")
    return lc_mul(class_gl(n), lc_inv(l_pow_minus_one(1)))


def class_g2() -> LefschetzClass:
    return lc_mul(
        l_power(6), lc_mul(l_pow_minus_one(2), l_pow_minus_one(6))
    )


def class_spin(n: int) -> LefschetzClass:
    """L^(m^2-m) (L^m - 1) prod_(i<m) (L^2i - 1) for n = 2m, and
    L^(m^2) prod_(i<=m) (L^2i - 1) for n = 2m + 1."""
    if n < 2:
        raise DomainError("n must be >= 2")
    m = n // 2
    if n % 2 == 0:
        out = lc_mul(l_power(m * m - m), l_pow_minus_one(m))
        for i in range(1, m):
            out = lc_mul(out, l_pow_minus_one(2 * i))
    else:
        out = l_power(m * m)
        for i in range(1, m + 1):
            out = lc_mul(out, l_pow_minus_one(2 * i))
    return out


# -- the generic two-stratum equation ---------------------------------


def strat_equation(n: int, null_cone_term: MotiveExpr, quadric_term: MotiveExpr) -> MotiveExpr:
    """(L^n - 1)^-1 * (null_cone_term + (L - 1) * quadric_term)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    inner = m_add(null_cone_term, m_scale(quadric_term, l_pow_minus_one(1)))
    return m_scale(inner, lc_inv(l_pow_minus_one(n)))


# -- the recursion tower ----------------------------------------------


@dataclass(frozen=True, slots=True)
class RecursionKey:
    kind: str  # SPIN | PIN | G
    n: int
    r: int = 0

    def __post_init__(self):
        assert self.kind in ("SPIN", "PIN", "G")
        if self.kind == "G" and not (1 <= self.r <= self.n):
            raise DomainError(f"G requires 1 <= r <= n, got {self}")


@cache
def _tower(key: RecursionKey) -> MotiveExpr:
    kind, n, r = key.kind, key.n, key.r
    if kind == "SPIN":
        if n == 1:
            return M_ONE
        if n == 2:
            return m_scalar(lc_inv(l_pow_minus_one(1)))
        return strat_equation(
            n,
            m_scale(bspin(n - 2), l_power(2 - n)),
            bpin(n - 1),
        )
    if kind == "PIN":
        if n <= 1:
            return M_ONE
        return strat_equation(
            n,
            m_scale(bpin(n - 2), l_power(2 - n)),
            bg(n, 1),
        )
    # kind == "G"
    if n == 1:
        # rank-1 diagonal preimage is the cyclic group of order 4; its
        # classifying class is recorded as the constant 1, never an atom
        return M_ONE
    if r >= n - 1:
        return m_atom(n)
    inner = m_add(
        m_scale(bg(n - 2, r), l_power(r + 2 - n)),
        m_scale(bg(n, r + 1), l_pow_minus_one(1)),
    )
    return m_scale(inner, lc_inv(l_pow_minus_one(n - r)))


def bspin(n: int) -> MotiveExpr:
    if n < 1:
        raise DomainError("n must be >= 1")
    return _tower(RecursionKey("SPIN", n))


def bpin(n: int) -> MotiveExpr:
    if n < 0:
        raise DomainError("n must be >= 0")
    return _tower(RecursionKey("PIN", n))


def bg(n: int, r: int) -> MotiveExpr:
    if r > n:
        raise DomainError(f"r = {r} exceeds n = {n}")
    if r < 1 or n < 1:
        raise DomainError("need n >= 1 and r >= 1")
    return _tower(RecursionKey("G", n, r))


def clear_tower_cache() -> None:
    """Drop the memo table (used to test memoization transparency)."""
    _tower.cache_clear()


def leading_delta_coeff(n: int) -> LefschetzClass:
    """Coefficient of the top atom BDelta_(n-1) in bspin(n).

    Checked against the closed form (L-1)^(n-1) / prod_(i=2..n) (L^i - 1)
    before returning.
    """
    if n < 3:
        raise DomainError("n must be >= 3")
    coeff = bspin(n).atom_map().get(n - 1, LC_ZERO)
    closed = lc_from_poly((-1, 1)) ** (n - 1)
    for i in range(2, n + 1):
        closed = lc_mul(closed, lc_inv(l_pow_minus_one(i)))
    if not lc_eq(coeff, closed):
        raise Inconsistent(
            f"top-atom coefficient of bspin({n}) does not match the closed form"
        )
    return coeff


def substitute_deltas(e: MotiveExpr, values: dict[int, LefschetzClass]) -> LefschetzClass:
    missing = [m for m, _ in e.atoms if m not in values]
    if missing:
        raise MissingAtom(f"no value for atom indices {missing}")
    out = e.scalar
    for m, c in e.atoms:
        out = lc_add(out, lc_mul(c, values[m]))
    return out


def solve_deltas(max_n: int, spin_classes=class_spin) -> dict[int, LefschetzClass]:
    """Equate bspin(n) with the inverse of the known spin class for
    n = 3..max_n and solve the triangular system for the atom values.

    Every row carries exactly one new atom, BDelta_(n-1), whose coefficient
    is a unit, so the solve is a single division per row.  After solving,
    every equation for n = 2..max_n is re-verified against the canonical
    spin classes; any failure raises Inconsistent.  The spin_classes hook
    only feeds the solve stage, so injecting a wrong class there is caught
    here (the triangular solve itself absorbs any single wrong row into
    the fresh atom of the rows after it).  Atoms that never occur (index 1,
    and anything outside the parity classes that appear) are simply absent
    from the result.
    """
    if not 3 <= max_n <= 8:
        raise DomainError("max_n must be in 3..8")
    solved: dict[int, LefschetzClass] = {}
    for n in range(3, max_n + 1):
        e = bspin(n)
        assert 1 not in e.support(), "atom index 1 must never occur"
        target = lc_inv(spin_classes(n))
        residual = lc_neg(e.scalar)
        new_atom = None
        for m, c in e.atoms:
            if m in solved:
                residual = lc_add(residual, lc_neg(lc_mul(c, solved[m])))
            elif new_atom is None:
                new_atom = (m, c)
            else:
                raise Inconsistent(
                    f"equation for n={n} has two unsolved atoms {new_atom[0]}, {m}"
                )
        residual = lc_add(residual, target)
        if new_atom is None:
            if not lc_eq(e.scalar, target):
                raise Inconsistent(f"scalar equation for n={n} fails")
            continue
        m, c = new_atom
        assert m == n - 1, "the fresh atom is always the top one"
        solved[m] = lc_mul(residual, lc_inv(c))
    for n in range(2, max_n + 1):
        lhs = substitute_deltas(bspin(n), solved)
        if not lc_eq(lhs, lc_inv(class_spin(n))):
            raise Inconsistent(f"solved values do not satisfy the n={n} equation")
    for n in range(3, 13):
        assert 1 not in bspin(n).support(), "atom index 1 must never occur"
    return solved
