"""The finite groups of signed basis blades inside the Clifford algebra.

Elements are pairs (sign, mask): the blade e_S with a sign attached, for S a
subset of the n generators.  The group of all of these has order 2^(n+1) and
sits inside the pin group; its structure (center, commutators, the diagonal
vector action, the shifted embedding into one-higher even blades) feeds the
atom bookkeeping of the classifying-class recursion and is small enough to
check exhaustively.
"""

from __future__ import annotations

import csv
from collections import deque

from .blades import blade_mul_mask, indices_of
from .clifford import CliffordElement, is_spin, rho
from .gaussian import GR_ONE
from .report import CheckReport

Element = tuple[int, int]  # (sign in {1,-1}, generator mask)


def blade_label(el: Element) -> str:
    sign, mask = el
    inner = ",".join(str(i) for i in indices_of(mask))
    return ("+" if sign > 0 else "-") + "e{" + inner + "}"


class DeltaGroup:
    """Signed basis blades on n generators under the Clifford product."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        self.elements: list[Element] = [
            (s, m) for m in range(1 << n) for s in (1, -1)
        ]

    @property
    def order(self) -> int:
        return 2 << self.n

    def mul(self, a: Element, b: Element) -> Element:
        s, m = blade_mul_mask(a[1], b[1])
        return (a[0] * b[0] * s, m)

    def inv(self, a: Element) -> Element:
        s, m = blade_mul_mask(a[1], a[1])
        # a * a = s, so a^-1 = s * a
        return (a[0] * s, a[1])

    def identity(self) -> Element:
        return (1, 0)

    def generators(self) -> list[Element]:
        return [(1, 1 << j) for j in range(self.n)] + [(-1, 0)]

    def commutes(self, a: Element, b: Element) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def center(self) -> list[Element]:
        gens = [(1, 1 << j) for j in range(self.n)]
        return [a for a in self.elements if all(self.commutes(a, g) for g in gens)]

    def square(self, a: Element) -> Element:
        return self.mul(a, a)

    def commutator(self, a: Element, b: Element) -> Element:
        return self.mul(self.mul(a, b), self.inv(self.mul(b, a)))

    def commutator_subgroup(self, exhaustive: bool | None = None) -> set[Element]:
        """Closure of the pairwise commutators.

        With `exhaustive` (default for order <= 1024) every pair contributes a
        generator; otherwise only pairs of group generators do, which gives
        the same subgroup because all commutators here are central.
        """
        if exhaustive is None:
            exhaustive = self.order <= 1024
        if exhaustive:
            gens = {self.commutator(a, b) for a in self.elements for b in self.elements}
        else:
            gg = self.generators()
            gens = {self.commutator(a, b) for a in gg for b in gg}
        seen = {self.identity()}
        frontier = deque(seen)
        while frontier:
            x = frontier.popleft()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def rho_diagonal(self, a: Element) -> tuple[int, ...]:
        """Diagonal of the vector action v -> eps(a) v bar(a); entries are +-1.

        The attached sign cancels because it enters twice, so only the mask
        matters.
        """
        _, m = a
        g = m.bit_count()
        base = -1 if (g + g * (g + 1) // 2) & 1 else 1
        out = []
        for j in range(self.n):
            mj = 1 << j
            s1, m1 = blade_mul_mask(m, mj)
            s2, m2 = blade_mul_mask(m1, m)
            assert m2 == mj
            out.append(base * s1 * s2)
        return tuple(out)

    def to_clifford(self, a: Element) -> CliffordElement:
        return CliffordElement(self.n, {a[1]: GR_ONE * a[0]})

    def write_table(self, path: str) -> None:
        """Full multiplication table as CSV, rows and columns labeled."""
        els = self.elements
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["*"] + [blade_label(b) for b in els])
            for a in els:
                w.writerow([blade_label(a)] + [blade_label(self.mul(a, b)) for b in els])


def delta_group(n: int) -> DeltaGroup:
    return DeltaGroup(n)


def delta_embed_spin(n: int) -> dict[Element, Element]:
    """Generator i goes to e_i e_(n+1); blades map to even blades one size up."""
    grp = DeltaGroup(n)
    top = 1 << n
    out: dict[Element, Element] = {}
    for el in grp.elements:
        s, m = el
        acc: Element = (s, 0)
        big = DeltaGroup(n + 1)
        for i in indices_of(m):
            acc = big.mul(acc, (1, (1 << (i - 1)) | top))
        out[el] = acc
    return out


def verify_delta_structure(n: int) -> CheckReport:
    rep = CheckReport(f"delta.{n}")
    grp = delta_group(n)
    rep.add("order", len(grp.elements) == grp.order == 2 ** (n + 1), f"order {grp.order}")

    ident = grp.identity()
    inv_ok = all(grp.mul(a, grp.inv(a)) == ident for a in grp.elements)
    rep.add("inverses", inv_ok, "a * inv(a) = 1 for every element")

    if n <= 3:
        assoc_ok = all(
            grp.mul(grp.mul(a, b), c) == grp.mul(a, grp.mul(b, c))
            for a in grp.elements
            for b in grp.elements
            for c in grp.elements
        )
        rep.add("assoc", assoc_ok, "exhaustive associativity")

    center = grp.center()
    if n % 2 == 0:
        expect = {(1, 0), (-1, 0)}
    else:
        top = (1 << n) - 1
        expect = {(1, 0), (-1, 0), (1, top), (-1, top)}
    rep.add(
        "center",
        set(center) == expect,
        f"center order {len(center)} ({'with' if n % 2 else 'without'} the top blade)",
    )

    sq_ok = True
    for el in grp.elements:
        g = el[1].bit_count()
        want = -1 if (g * (g + 1) // 2) & 1 else 1
        if grp.square(el) != (want, 0):
            sq_ok = False
    rep.add("squares", sq_ok, "e_S^2 = (-1)^(g(g+1)/2) with g = |S|")

    if n >= 2:
        comm = grp.commutator_subgroup()
        rep.add("commutators", comm == {(1, 0), (-1, 0)}, "commutator subgroup is {+-1}")
        if grp.order > 1024:
            els = grp.elements
            spot = all(
                grp.commutator(els[i], els[(i * 7 + 3) % len(els)]) in comm
                for i in range(0, len(els), 9)
            )
            rep.add("commutators.spot", spot, "sampled commutators land in the subgroup")
        rep.add(
            "abelianization",
            grp.order // len(comm) == 2**n,
            f"abelianization has order {2 ** n}",
        )

    diags = {grp.rho_diagonal(a) for a in grp.elements}
    rep.add(
        "rho.image",
        len(diags) == 2**n and all(all(d in (1, -1) for d in t) for t in diags),
        f"vector action image is all {2 ** n} diagonal sign matrices",
    )
    fibers_ok = all(
        sum(1 for b in grp.elements if grp.rho_diagonal(b) == grp.rho_diagonal(a)) == 2
        for a in grp.elements[:8]
    )
    rep.add("rho.fiber", fibers_ok, "each diagonal has exactly two preimages (spot checked)")

    if n <= 6:
        # cross-check the sign formula against the rational Clifford action
        sample = grp.elements[:: max(1, len(grp.elements) // 8)]
        cross_ok = True
        for el in sample:
            m = rho(grp.to_clifford(el))
            diag = tuple(1 if m[j][j] == 1 else -1 for j in range(n))
            if diag != grp.rho_diagonal(el) or not all(
                m[i][j] == 0 for i in range(n) for j in range(n) if i != j
            ):
                cross_ok = False
        rep.add("rho.cross", cross_ok, "sign formula matches the exact Clifford action")

    return rep


def verify_delta_embedding(n: int) -> CheckReport:
    if n > 6:
        raise ValueError("exhaustive embedding check is limited to n <= 6")
    rep = CheckReport(f"delta.embed.{n}")
    grp = delta_group(n)
    big = delta_group(n + 1)
    emb = delta_embed_spin(n)

    hom_ok = all(
        emb[grp.mul(a, b)] == big.mul(emb[a], emb[b])
        for a in grp.elements
        for b in grp.elements
    )
    rep.add("hom", hom_ok, f"multiplicative on all {len(grp.elements) ** 2} pairs")

    rep.add("injective", len(set(emb.values())) == len(grp.elements), "no collisions")

    even = {el for el in big.elements if el[1].bit_count() % 2 == 0}
    rep.add(
        "image",
        set(emb.values()) == even,
        f"image is exactly the {len(even)} even blades one size up",
    )

    spot_ok = all(
        is_spin(big.to_clifford(emb[el])) for el in grp.elements[:: max(1, len(grp.elements) // 6)]
    )
    rep.add("spin", spot_ok, "sampled image elements pass the spin membership test")
    return rep
