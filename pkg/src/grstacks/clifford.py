"""Exact Clifford algebra on n anticommuting generators with square -1.

Elements are sparse blade maps with Gaussian-rational coefficients, so every
membership test and homomorphism law below is an exact equality.  The module
covers the three standard involutions, the unit groups cut out by them, the
twisted conjugation action on vectors, and the two explicit homomorphisms
that drive the classifying-class recursion: the embedding of the one-lower
pin group into the spin group times a sign, and the unipotent one-parameter
family w -> w*f1 + 1 attached to an isotropic vector f1.

Matrices are tuples of row tuples of GaussianRational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .blades import blade_mul_mask, indices_of, mask_of
from .gaussian import GR_HALF, GR_I, GR_ONE, GR_ZERO, GaussianRational
from .report import CheckReport

Scalar = GaussianRational | int | Fraction
Vector = tuple[GaussianRational, ...]
Matrix = tuple[tuple[GaussianRational, ...], ...]


class NotPin(ValueError):
    pass


class DegenerateDirection(ValueError):
    pass


class BadSupport(ValueError):
    pass


class CliffordElement:
    __slots__ = ("n", "terms")

    n: int
    terms: dict[int, GaussianRational]

    def __init__(self, n: int, terms: dict[int, GaussianRational] | None = None):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        object.__setattr__(self, "n", n)
        clean = {}
        for mask, c in (terms or {}).items():
            if mask < 0 or mask >= 1 << n:
                raise ValueError(f"blade mask {mask} out of range for n={n}")
            c = GaussianRational.coerce(c)
            if c:
                clean[mask] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CliffordElement is immutable")

    @classmethod
    def scalar(cls, n: int, c: Scalar) -> "CliffordElement":
        return cls(n, {0: GaussianRational.coerce(c)})

    @classmethod
    def vector(cls, n: int, coords: tuple[Scalar, ...] | list[Scalar]) -> "CliffordElement":
        if len(coords) != n:
            raise ValueError(f"expected {n} coordinates, got {len(coords)}")
        return cls(n, {1 << j: GaussianRational.coerce(c) for j, c in enumerate(coords)})

    @classmethod
    def blade(cls, n: int, indices: tuple[int, ...], coeff: Scalar = GR_ONE) -> "CliffordElement":
        return cls(n, {mask_of(indices): GaussianRational.coerce(coeff)})

    def coeff(self, mask: int) -> GaussianRational:
        return self.terms.get(mask, GR_ZERO)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = CliffordElement.scalar(self.n, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "CliffordElement | Scalar") -> "CliffordElement":
        o = self._coerce(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, GR_ZERO) + c
        return CliffordElement(self.n, out)

    __radd__ = __add__

    def __sub__(self, other: "CliffordElement | Scalar") -> "CliffordElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "CliffordElement | Scalar") -> "CliffordElement":
        return self._coerce(other) - self

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.n, {m: -c for m, c in self.terms.items()})

    def _coerce(self, other: "CliffordElement | Scalar") -> "CliffordElement":
        if isinstance(other, CliffordElement):
            if other.n != self.n:
                raise ValueError("dimension mismatch")
            return other
        return CliffordElement.scalar(self.n, other)

    def __mul__(self, other: "CliffordElement | Scalar") -> "CliffordElement":
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            return CliffordElement(self.n, {m: v * c for m, v in self.terms.items()})
        o = self._coerce(other)
        out: dict[int, GaussianRational] = {}
        for ma, ca in self.terms.items():
            for mb, cb in o.terms.items():
                sign, mu = blade_mul_mask(ma, mb)
                c = ca * cb
                if sign < 0:
                    c = -c
                cur = out.get(mu)
                out[mu] = c if cur is None else cur + c
        return CliffordElement(self.n, out)

    def __rmul__(self, other: Scalar) -> "CliffordElement":
        c = GaussianRational.coerce(other)
        return CliffordElement(self.n, {m: c * v for m, v in self.terms.items()})

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def parity(self) -> int | None:
        """0 even, 1 odd, None when mixed or zero."""
        ps = {g & 1 for g in self.grades()}
        return ps.pop() if len(ps) == 1 else None

    def grade_part(self, g: int) -> "CliffordElement":
        return CliffordElement(self.n, {m: c for m, c in self.terms.items() if m.bit_count() == g})

    def is_vector(self) -> bool:
        return bool(self.terms) and all(m.bit_count() == 1 for m in self.terms)

    def vector_coords(self) -> Vector:
        if any(m.bit_count() != 1 for m in self.terms):
            raise ValueError("element has components outside grade 1")
        return tuple(self.coeff(1 << j) for j in range(self.n))

    def eps(self) -> "CliffordElement":
        # grade involution: blades of grade g scale by (-1)^g
        return CliffordElement(
            self.n,
            {m: (-c if m.bit_count() & 1 else c) for m, c in self.terms.items()},
        )

    def transpose(self) -> "CliffordElement":
        # reversal: (-1)^(g(g-1)/2)
        out = {}
        for m, c in self.terms.items():
            g = m.bit_count()
            out[m] = -c if (g * (g - 1) // 2) & 1 else c
        return CliffordElement(self.n, out)

    def bar(self) -> "CliffordElement":
        out = {}
        for m, c in self.terms.items():
            g = m.bit_count()
            out[m] = -c if (g * (g + 1) // 2) & 1 else c
        return CliffordElement(self.n, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            c = self.terms[m]
            name = "".join(f"e{i}" for i in indices_of(m)) or ""
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(cs if not name else f"{cs}*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<C{self.n}: {self}>"


def basis_vector(n: int, i: int) -> CliffordElement:
    return CliffordElement(n, {1 << (i - 1): GR_ONE})


def involutions(a: CliffordElement) -> tuple[CliffordElement, CliffordElement, CliffordElement]:
    return a.eps(), a.transpose(), a.bar()


# ---------------------------------------------------------------------------
# exact matrices

def mat_identity(n: int) -> Matrix:
    return tuple(
        tuple(GR_ONE if i == j else GR_ZERO for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), GR_ZERO) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), GR_ZERO) for row in a)


def mat_det(a: Matrix) -> GaussianRational:
    n = len(a)
    rows = [list(r) for r in a]
    det = GR_ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return GR_ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = GR_ONE / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


def mat_inv(a: Matrix) -> Matrix:
    n = len(a)
    rows = [list(r) + [GR_ONE if i == j else GR_ZERO for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = GR_ONE / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


# ---------------------------------------------------------------------------
# quadratic spaces

NEG_SUM = "neg_sum"
SPLIT = "split"


@dataclass(frozen=True, slots=True)
class QuadSpace:
    n: int
    form: str = NEG_SUM

    def __post_init__(self) -> None:
        if self.form not in (NEG_SUM, SPLIT):
            raise ValueError(f"unknown form {self.form!r}")

    def q(self, v: Vector) -> GaussianRational:
        if self.form == NEG_SUM:
            return -sum((x * x for x in v), GR_ZERO)
        tot = GR_ZERO
        for k in range(0, self.n - 1, 2):
            tot = tot + v[k] * v[k + 1]
        if self.n & 1:
            tot = tot + v[-1] * v[-1]
        return tot

    def h(self, v: Vector, w: Vector) -> GaussianRational:
        # closed polarization of each form, so h(v, v) = q(v)
        if self.form == NEG_SUM:
            return -sum((a * b for a, b in zip(v, w)), GR_ZERO)
        tot = GR_ZERO
        for k in range(0, self.n - 1, 2):
            tot = tot + GR_HALF * (v[k] * w[k + 1] + v[k + 1] * w[k])
        if self.n & 1:
            tot = tot + v[-1] * w[-1]
        return tot

    def norm2(self, v: Vector) -> GaussianRational:
        return sum((x * x for x in v), GR_ZERO)

    def _pair_entry(self, i: int, j: int) -> GaussianRational:
        # h on basis vectors, by index
        if self.form == NEG_SUM:
            return -GR_ONE if i == j else GR_ZERO
        if self.n & 1 and i == self.n - 1 and j == self.n - 1:
            return GR_ONE
        lo, hi = (i, j) if i <= j else (j, i)
        if hi == lo + 1 and lo % 2 == 0:
            return GR_HALF
        return GR_ZERO

    def gram(self) -> Matrix:
        return tuple(
            tuple(self._pair_entry(i, j) for j in range(self.n))
            for i in range(self.n)
        )

    def preserves(self, m: Matrix) -> bool:
        cols = [tuple(m[i][j] for i in range(self.n)) for j in range(self.n)]
        return all(
            self.h(cols[i], cols[j]) == self._pair_entry(i, j)
            for i in range(self.n)
            for j in range(i, self.n)
        )


# ---------------------------------------------------------------------------
# pin and spin membership, twisted conjugation

def _stabilizes_vectors(a: CliffordElement, conj: CliffordElement) -> bool:
    for i in range(1, a.n + 1):
        w = a * basis_vector(a.n, i) * conj
        if any(m.bit_count() != 1 for m in w.terms):
            return False
    return True


def is_pin(a: CliffordElement) -> bool:
    if a.parity() is None:
        return False
    ab = a.bar()
    if a * ab != 1:
        return False
    # definition uses plain conjugation a v bar(a); the twisted form used by
    # the vector action is checked in rho
    return _stabilizes_vectors(a, ab)


def is_spin(a: CliffordElement) -> bool:
    return a.parity() == 0 and is_pin(a)


def rho(a: CliffordElement) -> Matrix:
    """Matrix of v -> eps(a) v bar(a) on e_1..e_n.  Raises NotPin."""
    if not is_pin(a):
        raise NotPin(str(a))
    ea, ab = a.eps(), a.bar()
    cols = []
    for i in range(1, a.n + 1):
        w = ea * basis_vector(a.n, i) * ab
        cols.append(w.vector_coords())
    m = tuple(tuple(cols[j][i] for j in range(a.n)) for i in range(a.n))
    space = QuadSpace(a.n, NEG_SUM)
    if not space.preserves(m):
        raise NotPin(f"image of {a} does not preserve the form")
    return m


# ---------------------------------------------------------------------------
# sampling exact points of the unit sphere

def _dot(u: Vector, v: Vector) -> GaussianRational:
    return sum((a * b for a, b in zip(u, v)), GR_ZERO)


def reflect_point(base: Vector, u: Vector) -> Vector:
    """Second intersection of the line base + t*u with the sphere sum x^2 = 1."""
    d = _dot(u, u)
    if not d:
        raise DegenerateDirection(f"direction {u} has isotropic dot square")
    t = (2 * _dot(u, base)) / d
    return tuple(b - t * x for b, x in zip(base, u))


def _random_direction(n: int, rng: random.Random, support: tuple[int, ...]) -> Vector:
    u = [GR_ZERO] * n
    picked = rng.sample(support, k=min(len(support), rng.randint(1, 3)))
    for i in picked:
        if rng.random() < 0.15:
            u[i - 1] = GaussianRational(rng.randint(-3, 3), rng.choice((-1, 1)))
        else:
            u[i - 1] = GaussianRational(rng.randint(1, 5) * rng.choice((-1, 1)))
    return tuple(u)


def unit_vector_sample(
    n: int,
    seed: int | random.Random,
    support: tuple[int, ...] | None = None,
    retries: int = 64,
) -> Vector:
    """Exact vector with sum of squared coordinates 1, supported on `support`."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if support is None:
        support = tuple(range(1, n + 1))
    if not support:
        raise ValueError("empty support")
    base = tuple(GR_ONE if i == support[0] else GR_ZERO for i in range(1, n + 1))
    last: DegenerateDirection | None = None
    for _ in range(retries):
        u = _random_direction(n, rng, support)
        try:
            v = reflect_point(base, u)
        except DegenerateDirection as exc:
            last = exc
            continue
        assert _dot(v, v) == 1
        return v
    raise DegenerateDirection(f"no usable direction after {retries} tries") from last


def pin_sample(
    n: int,
    rng: random.Random,
    factors: int | None = None,
    support: tuple[int, ...] | None = None,
) -> CliffordElement:
    """Product of `factors` (default 1..4) exact unit vectors."""
    k = factors if factors is not None else rng.randint(1, 4)
    out = CliffordElement.scalar(n, GR_ONE)
    for _ in range(k):
        out = out * CliffordElement.vector(n, unit_vector_sample(n, rng, support))
    return out


def spin_sample(n: int, rng: random.Random, support: tuple[int, ...] | None = None) -> CliffordElement:
    return pin_sample(n, rng, factors=2 * rng.randint(1, 2), support=support)


def _random_element(n: int, rng: random.Random) -> CliffordElement:
    """General algebra element: a few random blades, not required invertible."""
    terms: dict[int, GaussianRational] = {}
    for _ in range(rng.randint(1, 4)):
        terms[rng.randrange(1 << n)] = GaussianRational(
            rng.randint(-4, 4), rng.randint(-2, 2)
        )
    return CliffordElement(n, terms)


def verify_clifford_relations(n: int, samples: int = 100, seed: int = 0) -> CheckReport:
    """Generator relations, involution product laws, and the vector action."""
    rep = CheckReport(f"clifford.rel.{n}", seed)
    rng = random.Random(seed)
    space = QuadSpace(n, NEG_SUM)
    full = tuple(range(1, n + 1))

    sq_bad = pol_bad = 0
    for _ in range(samples):
        vc = _random_direction(n, rng, full)
        wc = _random_direction(n, rng, full)
        v, w = CliffordElement.vector(n, vc), CliffordElement.vector(n, wc)
        if v * v != space.q(vc):
            sq_bad += 1
        if v * w + w * v != 2 * space.h(vc, wc):
            pol_bad += 1
    rep.add("rel.square", sq_bad == 0, f"v*v = q(v) on {samples} samples")
    rep.add("rel.polar", pol_bad == 0, f"vw + wv = 2h(v, w) on {samples} samples")

    # the involution laws hold on the whole algebra, not just the pin group
    law_bad = comp_bad = 0
    for _ in range(samples):
        a, b = _random_element(n, rng), _random_element(n, rng)
        ab = a * b
        if ab.eps() != a.eps() * b.eps():
            law_bad += 1
        if ab.transpose() != b.transpose() * a.transpose():
            law_bad += 1
        if ab.bar() != b.bar() * a.bar():
            law_bad += 1
        if a.bar() != a.eps().transpose() or a.bar() != a.transpose().eps():
            comp_bad += 1
    rep.add(
        "inv.products",
        law_bad == 0,
        "eps multiplicative, transpose and bar antimultiplicative",
    )
    rep.add("inv.compose", comp_bad == 0, "bar = eps after transpose, both orders")

    rep.add(
        "rho.reflect",
        rho(CliffordElement.vector(n, basis_vector(n, 1).vector_coords()))
        == tuple(
            tuple(
                (GR_ONE if i == j else GR_ZERO) if (i, j) != (0, 0) else -GR_ONE
                for j in range(n)
            )
            for i in range(n)
        ),
        "rho(e_1) is the reflection diag(-1, 1, ..., 1)",
    )

    hom_bad = det_bad = 0
    runs = max(10, samples // 4)
    for _ in range(runs):
        a, b = pin_sample(n, rng), pin_sample(n, rng)
        ra = rho(a)
        if rho(a * b) != mat_mul(ra, rho(b)):
            hom_bad += 1
        if mat_det(ra) != GaussianRational(1 - 2 * (a.parity() or 0)):
            det_bad += 1
    rep.add("rho.hom", hom_bad == 0, f"rho(ab) = rho(a) rho(b) on {runs} pin pairs")
    rep.add(
        "rho.det",
        det_bad == 0,
        "determinant of rho is +1 on even elements and -1 on odd ones",
    )
    return rep


# ---------------------------------------------------------------------------
# the embedding of Pin_{n-1} into Spin_n x mu_2

def phi_pin(beta: CliffordElement) -> tuple[CliffordElement, int]:
    """Send an element of the one-lower pin group (generated by unit vectors
    orthogonal to e_1) to (beta, 1) when even and (e_1 * beta, -1) when odd."""
    p = beta.parity()
    if p is None:
        raise NotPin("mixed parity")
    if p == 0:
        return beta, 1
    return basis_vector(beta.n, 1) * beta, -1


def verify_phi_pin_embedding(n: int, samples: int = 100, seed: int = 0) -> CheckReport:
    if not 3 <= n <= 8:
        raise ValueError("n must be in 3..8")
    rep = CheckReport(f"clifford.phi_pin.{n}", seed)
    rng = random.Random(seed)
    sub = tuple(range(2, n + 1))
    e1 = basis_vector(n, 1)

    case_counts = {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 0}
    hom_bad = stab_bad = spin_bad = 0
    for _ in range(samples):
        b1 = pin_sample(n, rng, support=sub)
        b2 = pin_sample(n, rng, support=sub)
        p1, p2 = b1.parity(), b2.parity()
        assert p1 is not None and p2 is not None
        case_counts[(p1, p2)] += 1
        g1, x1 = phi_pin(b1)
        g2, x2 = phi_pin(b2)
        gp, xp = phi_pin(b1 * b2)
        if g1 * g2 != gp or x1 * x2 != xp:
            hom_bad += 1
        # the image stabilizes e_1 up to the recorded sign
        w = g1.eps() * e1 * g1.bar()
        if w != (e1 if x1 == 1 else -e1):
            stab_bad += 1
        if g1.parity() != 0:
            spin_bad += 1

    all_cases = all(v > 0 for v in case_counts.values())
    rep.add(
        "phi.cases",
        all_cases,
        "parity case coverage " + str({f"{k[0]}{k[1]}": v for k, v in sorted(case_counts.items())}),
    )
    rep.add("phi.hom", hom_bad == 0, f"{samples - hom_bad}/{samples} pairs multiplicative")
    rep.add("phi.stab", stab_bad == 0, f"{samples - stab_bad}/{samples} stabilize e1 up to sign")
    rep.add("phi.even", spin_bad == 0, "first component always even")

    # spot check full spin membership on a few samples (costlier)
    ok = True
    for _ in range(4):
        g, _x = phi_pin(pin_sample(n, rng, support=sub))
        ok = ok and is_spin(g)
    rep.add("phi.spin", ok, "sampled images pass the spin membership test")
    return rep


# ---------------------------------------------------------------------------
# the one-parameter family f(w) = w f1 + 1

def f1_vector(n: int) -> Vector:
    coords = [GR_ZERO] * n
    coords[0] = GR_I * GR_HALF
    coords[1] = GR_HALF
    return tuple(coords)


def f2_vector(n: int) -> Vector:
    coords = [GR_ZERO] * n
    coords[0] = GR_I * GR_HALF
    coords[1] = -GR_HALF
    return tuple(coords)


def _check_tail_support(n: int, w: Vector) -> None:
    if len(w) != n:
        raise BadSupport(f"expected {n} coordinates")
    if w[0] or w[1]:
        raise BadSupport("vector must be supported on indices >= 3")


def f_map(n: int, w: Vector) -> CliffordElement:
    if n < 3:
        raise ValueError("need n >= 3")
    _check_tail_support(n, w)
    wv = CliffordElement.vector(n, w)
    f1 = CliffordElement.vector(n, f1_vector(n))
    return wv * f1 + 1


def f_recover(a: CliffordElement) -> Vector:
    """Read w back from f(w): the {1,k} blade carries coefficient -i*w_k/2."""
    n = a.n
    coords = [GR_ZERO] * n
    for k in range(3, n + 1):
        c = a.coeff((1 << (k - 1)) | 1)
        coords[k - 1] = 2 * GR_I * c
    return tuple(coords)


def _random_tail_vector(n: int, rng: random.Random, gaussian: bool = False) -> Vector:
    coords = [GR_ZERO] * n
    for j in range(2, n):
        if rng.random() < 0.6:
            im = rng.randint(-2, 2) if gaussian and rng.random() < 0.3 else 0
            coords[j] = GaussianRational(Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2))), im)
    return tuple(coords)


def _random_isotropic_tail(n: int, rng: random.Random) -> Vector:
    # reflect the seed e_3 + i*e_4 through random hyperplanes: the dot form
    # is preserved, so the result stays isotropic with tail support
    seed = [GR_ZERO] * n
    seed[2], seed[3] = GR_ONE, GR_I
    v: Vector = tuple(seed)
    c = GaussianRational(rng.randint(1, 4), rng.randint(-2, 2))
    if not c:
        c = GR_ONE
    v = tuple(c * x for x in v)
    for _ in range(rng.randint(0, 2)):
        u = _random_direction(n, rng, tuple(range(3, n + 1)))
        if _dot(u, u):
            t_num = 2 * _dot(u, v)
            v = tuple(x - (t_num / _dot(u, u)) * ux for x, ux in zip(v, u))
    return v


def verify_f_properties(n: int, samples: int = 100, seed: int = 0) -> CheckReport:
    if not 3 <= n <= 8:
        raise ValueError("n must be in 3..8")
    rep = CheckReport(f"clifford.f.{n}", seed)
    rng = random.Random(seed)
    space = QuadSpace(n, NEG_SUM)
    f1 = CliffordElement.vector(n, f1_vector(n))
    tail = tuple(range(3, n + 1))

    hom_bad = 0
    for _ in range(samples):
        w1 = _random_tail_vector(n, rng, gaussian=True)
        w2 = _random_tail_vector(n, rng, gaussian=True)
        ws = tuple(a + b for a, b in zip(w1, w2))
        if f_map(n, w1) * f_map(n, w2) != f_map(n, ws):
            hom_bad += 1
    rep.add("f.hom", hom_bad == 0, f"{samples - hom_bad}/{samples} pairs satisfy f(w)f(w') = f(w+w')")

    # anisotropic factorization: scale a unit tail vector so the square norm
    # has the explicit square root a
    anis_bad = 0
    anis_runs = max(10, samples // 4)
    for _ in range(anis_runs):
        v = unit_vector_sample(n, rng, support=tail)
        a = GaussianRational(Fraction(rng.randint(1, 6) * rng.choice((-1, 1)), rng.choice((1, 2))))
        w = tuple(a * x for x in v)
        lhs = f_map(n, w)
        nrm = space.norm2(w)
        assert nrm == a * a
        wv = CliffordElement.vector(n, w)
        factor1 = wv * (GR_ONE / a)
        factor2 = (nrm * f1 - wv) * (GR_ONE / a)
        if factor1 * factor2 != lhs:
            anis_bad += 1
    rep.add("f.factor.anis", anis_bad == 0, f"{anis_runs - anis_bad}/{anis_runs} square-norm factorizations")

    if n >= 4:
        iso_bad = 0
        iso_runs = max(10, samples // 4)
        e1 = basis_vector(n, 1)
        e2 = basis_vector(n, 2)
        for k in range(iso_runs):
            if k == 0:
                w = [GR_ZERO] * n
                w[2], w[3] = GR_ONE, GR_I
                w = tuple(w)
            else:
                w = _random_isotropic_tail(n, rng)
            assert space.norm2(w) == 0
            wv = CliffordElement.vector(n, w)
            prod = (e1 - GR_HALF * GR_I * wv) * e1 * (e2 - GR_HALF * wv) * e2
            if prod != f_map(n, w):
                iso_bad += 1
        rep.add("f.factor.iso", iso_bad == 0, f"{iso_runs - iso_bad}/{iso_runs} isotropic factorizations")

    stab_bad = frame_bad = 0
    frame_runs = max(10, samples // 4)
    fr_cols = [f1_vector(n), f2_vector(n)] + [
        tuple(GR_ONE if j == i else GR_ZERO for j in range(n)) for i in range(2, n)
    ]
    p_mat = tuple(tuple(fr_cols[j][i] for j in range(n)) for i in range(n))
    p_inv = mat_inv(p_mat)
    for _ in range(frame_runs):
        w = _random_tail_vector(n, rng)
        fw = f_map(n, w)
        if fw.eps() * f1 * fw.bar() != f1:
            stab_bad += 1
        m = rho(fw)
        frame = mat_mul(p_inv, mat_mul(m, p_mat))
        qw = space.q(w)
        expect = [[GR_ZERO] * n for _ in range(n)]
        expect[0][0] = GR_ONE
        expect[0][1] = -qw
        expect[1][1] = GR_ONE
        for j in range(2, n):
            expect[j][1] = w[j]
            expect[0][j] = -2 * space.h(
                tuple(GR_ONE if t == j else GR_ZERO for t in range(n)), w
            )
            expect[j][j] = GR_ONE
        if frame != tuple(tuple(row) for row in expect):
            frame_bad += 1
    rep.add("f.stab", stab_bad == 0, f"{frame_runs - stab_bad}/{frame_runs} fix the pivot isotropic vector")
    rep.add(
        "f.frame",
        frame_bad == 0,
        f"{frame_runs - frame_bad}/{frame_runs} match the unipotent template in the hyperbolic frame",
    )

    conj_bad = 0
    conj_runs = max(10, samples // 4)
    for k in range(conj_runs):
        w = _random_tail_vector(n, rng)
        fw = f_map(n, w)
        if k % 2 == 0 and n >= 4:
            i, j = rng.sample(range(3, n + 1), 2)
            alpha = CliffordElement.blade(n, (i, j))
        else:
            alpha = f_map(n, _random_tail_vector(n, rng))
        out = alpha * fw * alpha.bar()
        w2 = f_recover(out)
        if out != f_map(n, w2):
            conj_bad += 1
    rep.add("f.conj", conj_bad == 0, f"{conj_runs - conj_bad}/{conj_runs} conjugates stay in the image")
    return rep


# ---------------------------------------------------------------------------
# the center of the rank-8 spin group

def eta_center_check(samples: int = 100, seed: int = 0) -> CheckReport:
    rep = CheckReport("clifford.eta", seed)
    rng = random.Random(seed)
    n = 8
    eta = CliffordElement.blade(n, tuple(range(1, n + 1)))
    rep.add("eta.square", eta * eta == 1, "top blade squares to 1")
    rep.add("eta.spin", is_spin(eta), "top blade is in the spin group")

    bad = 0
    for _ in range(samples):
        g = spin_sample(n, rng)
        if eta * g != g * eta:
            bad += 1
    rep.add("eta.central", bad == 0, f"commutes with {samples - bad}/{samples} sampled even units")

    # multiplicativity of (g, s) -> (eta^[s=-1] g, s) on the e_1-stabilizer copy
    sub = tuple(range(2, n + 1))
    emb_bad = 0
    runs = max(10, samples // 4)
    for _ in range(runs):
        g1, g2 = spin_sample(n, rng, sub), spin_sample(n, rng, sub)
        s1, s2 = rng.choice((1, -1)), rng.choice((1, -1))
        lift1 = g1 if s1 == 1 else eta * g1
        lift2 = g2 if s2 == 1 else eta * g2
        prod = g1 * g2 if s1 * s2 == 1 else eta * (g1 * g2)
        if lift1 * lift2 != prod:
            emb_bad += 1
    rep.add("eta.embed", emb_bad == 0, f"{runs - emb_bad}/{runs} sign-twisted products multiplicative")
    return rep


# ---------------------------------------------------------------------------
# the unipotent stabilizer template on the split form

def phi_w_matrix(space: QuadSpace, n: int, w: Vector) -> Matrix:
    if space.n != n:
        raise ValueError("dimension mismatch")
    _check_tail_support(n, w)
    qw = space.q(w)
    rows = [[GR_ZERO] * n for _ in range(n)]
    rows[0][0] = GR_ONE
    rows[0][1] = -qw
    rows[1][1] = GR_ONE
    for j in range(2, n):
        rows[j][1] = w[j]
        ej = tuple(GR_ONE if t == j else GR_ZERO for t in range(n))
        rows[0][j] = -2 * space.h(ej, w)
        rows[j][j] = GR_ONE
    return tuple(tuple(r) for r in rows)


def verify_phi_w(n: int, samples: int = 100, seed: int = 0) -> CheckReport:
    if n < 3:
        raise ValueError("need n >= 3")
    rep = CheckReport(f"clifford.phi_w.{n}", seed)
    rng = random.Random(seed)
    space = QuadSpace(n, SPLIT)
    e1 = tuple(GR_ONE if i == 0 else GR_ZERO for i in range(n))

    zero = tuple([GR_ZERO] * n)
    rep.add("phiw.zero", phi_w_matrix(space, n, zero) == mat_identity(n), "w = 0 gives the identity")

    bad_form = bad_fix = bad_hom = 0
    for _ in range(samples):
        w1 = _random_tail_vector(n, rng)
        w2 = _random_tail_vector(n, rng)
        m1 = phi_w_matrix(space, n, w1)
        m2 = phi_w_matrix(space, n, w2)
        if not space.preserves(m1):
            bad_form += 1
        if mat_vec(m1, e1) != e1:
            bad_fix += 1
        ws = tuple(a + b for a, b in zip(w1, w2))
        if mat_mul(m1, m2) != phi_w_matrix(space, n, ws):
            bad_hom += 1
    rep.add("phiw.form", bad_form == 0, f"{samples - bad_form}/{samples} preserve the split form")
    rep.add("phiw.fix", bad_fix == 0, f"{samples - bad_fix}/{samples} fix the first basis vector")
    rep.add("phiw.hom", bad_hom == 0, f"{samples - bad_hom}/{samples} compose additively")
    return rep
