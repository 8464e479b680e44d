"""Named verification suites shared by the command line and the tests.

Each builder returns one CheckReport; sub-reports from the specialized
verifiers are merged under stable id prefixes so the flat, sorted check list
of a suite is deterministic for a fixed seed.
"""

import random

from . import intpoly, ledgers
from .clifford import (
    eta_center_check,
    verify_clifford_relations,
    verify_f_properties,
    verify_phi_pin_embedding,
    verify_phi_w,
)
from .delta import verify_delta_embedding, verify_delta_structure
from .finite import (
    ModelRank2,
    ModelSL3Swap,
    ModelUnitriangular,
    classcount_sanity,
    verify_c4_structure,
    verify_model_laws,
    verify_q6_claims,
    verify_strata_partition,
)
from .lefschetz import (
    LC_ONE,
    LefschetzClass,
    NotAUnit,
    ZeroInverse,
    _cross_multiply_eq,
    l_pow_minus_one,
    l_power,
    lc_eq,
    lc_eval_at,
    lc_from_poly,
    lc_inv,
    lc_mul,
    lc_normalize,
)
from .motive import bspin, class_spin, leading_delta_coeff, solve_deltas, substitute_deltas
from .report import CheckReport


def _random_unit(rng: random.Random) -> LefschetzClass:
    u = l_power(rng.randint(-6, 6))
    if rng.random() < 0.3:
        u = lc_mul(u, lc_from_poly((-1,)))
    for _ in range(rng.randint(0, 3)):
        f = l_pow_minus_one(rng.randint(1, 9))
        u = lc_mul(u, f if rng.random() < 0.5 else lc_inv(f))
    if rng.random() < 0.4:
        d = rng.randint(1, 12)
        u = lc_mul(u, lc_normalize(intpoly.ONE, 0, ((d, rng.choice((-2, -1, 1, 2))),)))
    return u


def _random_class(rng: random.Random) -> LefschetzClass:
    coeffs = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 5)))
    a = lc_from_poly(coeffs)
    if not a.core:
        a = LC_ONE
    return lc_mul(a, _random_unit(rng))


def suite_ring(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = CheckReport("ring", seed)
    rng = random.Random(seed)

    eq_bad = neq_bad = agree_bad = 0
    for _ in range(samples):
        a = _random_class(rng)
        u = _random_unit(rng)
        b = lc_mul(lc_mul(a, u), lc_inv(u))
        if not (lc_eq(a, b) and _cross_multiply_eq(a, b)):
            eq_bad += 1
        c = _random_class(rng)
        if lc_eq(a, c) != _cross_multiply_eq(a, c):
            agree_bad += 1
        if lc_eq(a, a + LC_ONE):
            neq_bad += 1
    rep.add(
        "canonical.unique",
        eq_bad == 0,
        f"a * u / u is structurally a again on {samples} random (class, unit) pairs",
    )
    rep.add(
        "canonical.oracle",
        agree_bad == 0,
        f"structural equality agrees with the cross-multiplication oracle on {samples} pairs",
    )
    rep.add("canonical.separates", neq_bad == 0, "a + 1 never collides with a")

    poly_bad = class_bad = 0
    for n in range(1, 65):
        prod = intpoly.ONE
        cls = LC_ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = intpoly.mul(prod, intpoly.cyclotomic(d))
                cls = lc_mul(cls, lc_normalize(intpoly.ONE, 0, ((d, 1),)))
        want = tuple([-1] + [0] * (n - 1) + [1])
        if prod != want:
            poly_bad += 1
        if not lc_eq(cls, l_pow_minus_one(n)):
            class_bad += 1
    rep.add(
        "phi.product.poly",
        poly_bad == 0,
        "cyclotomic factors multiply out to x^n - 1 for n <= 64",
    )
    rep.add(
        "phi.product.class",
        class_bad == 0,
        "the same product holds structurally in the localized ring",
    )

    unit_bad = 0
    for _ in range(samples):
        u = _random_unit(rng)
        if not lc_eq(lc_mul(u, lc_inv(u)), LC_ONE) or not lc_eq(lc_inv(lc_inv(u)), u):
            unit_bad += 1
    rep.add("units.roundtrip", unit_bad == 0, f"u * u^-1 = 1 and (u^-1)^-1 = u on {samples} units")

    try:
        lc_inv(lc_from_poly((2, 1)))
        rep.add("units.reject", False, "inverting L + 2 should fail")
    except NotAUnit:
        try:
            lc_inv(lc_from_poly(()))
            rep.add("units.reject", False, "inverting 0 should fail")
        except ZeroInverse:
            rep.add("units.reject", True, "non-units and zero are refused")

    eval_bad = 0
    for _ in range(min(samples, 50)):
        a, b = _random_class(rng), _random_class(rng)
        if lc_eval_at(lc_mul(a, b), 7) != lc_eval_at(a, 7) * lc_eval_at(b, 7):
            eval_bad += 1
        if lc_eval_at(a + b, 7) != lc_eval_at(a, 7) + lc_eval_at(b, 7):
            eval_bad += 1
    rep.add("eval.hom", eval_bad == 0, "specialization at 7 is a ring homomorphism")
    return rep


def suite_g2(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = ledgers.verify_g2_ledger()
    rep.seed = seed
    return rep


def suite_spin78(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = ledgers.verify_spin78_ledger()
    rep.seed = seed
    return rep


def suite_tower(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = CheckReport("tower", seed)
    for n in range(3, 31):
        e = bspin(n)
        coeff = e.atom_map().get(n - 1)
        support = e.support()
        ok = (
            coeff is not None
            and lc_eq(coeff, leading_delta_coeff(n))
            and coeff.is_unit()
            and max(support) <= n - 1
            and all(m % 2 == (n - 1) % 2 for m in support)
        )
        rep.add(
            f"lead.{n:02d}",
            ok,
            "top atom coefficient, unit flag, support bound and parity",
        )

    sol = solve_deltas(8)
    rep.add(
        "solve.allones",
        bool(sol) and all(lc_eq(v, LC_ONE) for v in sol.values()),
        f"atoms {sorted(sol)} all solve to 1",
    )
    ones = {m: LC_ONE for m in range(1, 9)}
    for n in range(2, 9):
        got = substitute_deltas(bspin(n), ones)
        rep.add(
            f"subst.{n}",
            lc_eq(got, lc_inv(class_spin(n))),
            "all-ones substitution gives the inverse group class",
        )
    return rep


def suite_clifford(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = CheckReport("clifford", seed)
    for n in range(2, 9):
        rep.extend(verify_clifford_relations(n, samples, seed), prefix=f"n{n}.")
    for n in range(3, 9):
        rep.extend(verify_phi_pin_embedding(n, samples, seed), prefix=f"n{n}.")
        rep.extend(verify_f_properties(n, samples, seed), prefix=f"n{n}.")
        rep.extend(verify_phi_w(n, samples, seed), prefix=f"n{n}.")
    rep.extend(eta_center_check(samples, seed))
    for n in range(1, 11):
        rep.extend(verify_delta_structure(n), prefix=f"delta.{n}.")
    for n in range(2, 7):
        rep.extend(verify_delta_embedding(n), prefix=f"embed.{n}.")
    return rep


def suite_finite(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = CheckReport(f"finite.q{q}", seed)
    for model in (ModelSL3Swap(q), ModelRank2(q), ModelUnitriangular(q)):
        rep.extend(
            verify_model_laws(model, samples, seed), prefix=f"laws.{model.name}."
        )
    rep.extend(verify_q6_claims(q), prefix="q6.")
    rep.extend(verify_c4_structure(q), prefix="q4.")
    rep.extend(verify_strata_partition(q), prefix="strata.")
    for qq in (3, 5):
        rep.extend(classcount_sanity(qq), prefix=f"count.{qq}.")
    return rep


def suite_all(seed: int = 0, samples: int = 100, q: int = 5) -> CheckReport:
    rep = CheckReport("all", seed)
    for name in ("ring", "g2", "spin78", "tower", "clifford", "finite"):
        rep.extend(SUITES[name](seed, samples, q), prefix=f"{name}.")
    return rep


SUITES = {
    "ring": suite_ring,
    "g2": suite_g2,
    "spin78": suite_spin78,
    "tower": suite_tower,
    "clifford": suite_clifford,
    "finite": suite_finite,
    "all": suite_all,
}
