"""Verification batteries shared by the command line and the test-suite.

Each suite returns a list of :class:`Check` records; a suite passes when
every record does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from quadco import additive, quadratic, singer, steenrod
from quadco.gf2 import F2Matrix, same_rowspace
from quadco.gf2.matrix import _rref
from quadco.quadratic import Window


@dataclass(frozen=True)
class Check:
    id: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"id": self.id, "expected": self.expected, "actual": self.actual, "ok": self.ok}


def _witness(result: quadratic.CheckResult):
    if result.witness is None:
        return None
    return [list(x) if isinstance(x, tuple) else x for x in result.witness]


# -- suites -------------------------------------------------------------------


def suite_foracle(max_excess: int = 24, max_abs_j: int = 8, **_) -> list[Check]:
    report = singer.f_cross_validate(max_excess, max_abs_j)
    return [
        Check("h-image rows vs closed-form f", [], [list(map(str, m)) for m in report.mismatches]),
        Check("rows checked", (max_excess + 1) * (2 * max_abs_j + 1), report.rows),
    ]


def suite_selfdual(window: int = 15, **_) -> list[Check]:
    spec = singer.gamma_spec()
    win = Window.symmetric(window)
    result = quadratic.check_strict_self_dual(spec, win)
    audit_win = Window.symmetric(min(window, 10))
    checks = [
        Check(f"strict self-duality, sigma(n) = 1 - n, |index| <= {window}", None, _witness(result)),
        Check("support enumerators complete on window", [], [list(map(str, m)) for m in quadratic.audit_supports(spec, audit_win)]),
        Check("f((3,0),(1,2)) = f((0,-1),(-2,1))", [1, 1], [spec.f((3, 0), (1, 2)), spec.f((0, -1), (-2, 1))]),
    ]
    dual = quadratic.transpose_dual(spec, audit_win)
    checks.append(Check("transpose dual coefficient f!((1,2),(3,0))", 1, dual.coefficient((1, 2), (3, 0))))
    return checks


def suite_copbw(n: int = 4, dmax: int = 40, callback_dmax: int = 40, **_) -> list[Check]:
    spec = singer.gamma_plus_spec()
    checks = []
    for k in range(0, n + 1):
        failures = []
        for d in range(0, dmax + 1):
            callback = additive.bplus_slice if (k >= 1 and d <= callback_dmax) else None
            r = quadratic.weak_copbw_check(spec, k, d, Window(0, max(d, 0)), coalgebra_slices=callback)
            if not r.ok:
                failures.append({"d": d, "admissible": r.admissible_count, "dim": r.intersection_dim,
                                 "rank": r.projection_rank, "coalgebra": r.coalgebra_matches})
        checks.append(Check(f"weak coPBW for B+, n = {k}, d <= {dmax}", [], failures))
    counts = [steenrod.admissible_basis_count(3, 7), len(additive.alpha_monomials(3, 7))]
    checks.append(Check("|S^(3)| in degree 7 vs alpha-monomials of B+_3", [4, 4], counts))
    return checks


def suite_quadratic(n: int = 4, dmax: int = 25, **_) -> list[Check]:
    checks = []
    for k in range(3, max(n, 3) + 1):
        report = additive.quadraticity_check(k, dmax)
        bad = [r.degree for r in report.records if not r.equal]
        checks.append(Check(f"B+_{k} = intersection of B+_{k-1}⊗B+_1 and B+_1⊗B+_{k-1}, degree <= {dmax}", [], bad))
    return checks


def suite_milnor(n: int = 5, **_) -> list[Check]:
    checks = []
    for k in range(1, n + 1):
        got = [p.to_text(additive.NAMES) for p in additive.milnor_coproduct(k)]
        want = [p.to_text(additive.NAMES) for p in additive.milnor_formula(k)]
        checks.append(Check(f"coproduct of xi_1..xi_{k}", want, got))
    return checks


def suite_comonoid(n: int = 5, **_) -> list[Check]:
    bad_assoc = []
    bad_counit = []
    for total in range(0, n + 1):
        if not additive.counit_holds(total):
            bad_counit.append(total)
        for p in range(total + 1):
            for q in range(total - p + 1):
                if not additive.coassociativity_holds(p, q, total - p - q):
                    bad_assoc.append([p, q, total - p - q])
    return [Check(f"coassociativity, p + q + r <= {n}", [], bad_assoc), Check(f"counit, n <= {n}", [], bad_counit)]


def suite_adem(window: int = 12, samples: int = 1000, seed: int = 0, **_) -> list[Check]:
    first = []
    for n in range(-window, window + 1):
        for k in range(-window, window + 1):
            rhs = steenrod.adem_first_form(n, k)
            u, v = 2 * k - 1 - n, k
            if rhs is None:
                if u < 2 * v:
                    first.append([n, k])
            elif rhs != steenrod.adem_expand(u, v):
                first.append([n, k])
    classical = []
    for v in range(0, 11):
        for u in range(0, 2 * v):
            full = steenrod.adem_expand(u, v)
            clipped = steenrod.QElement(frozenset(w for w in full.monomials if min(w) >= 0))
            if clipped != steenrod.classical_adem(u, v):
                classical.append([u, v])
    rng = random.Random(seed)
    disagree = []
    max_steps = 0
    for _ in range(samples):
        m = tuple(rng.randint(-6, 12) for _ in range(rng.randint(1, 4)))
        a, s1 = steenrod.normalize(m, "leftmost")
        b, s2 = steenrod.normalize(m, "rightmost")
        max_steps = max(max_steps, s1, s2)
        if a != b or not a.is_admissible():
            disagree.append(list(m))
    return [
        Check(f"first form = reindexed form, |n|,|k| <= {window}", [], first),
        Check("clipped expansion = classical Adem, 0 <= u < 2v <= 20", [], classical),
        Check(f"leftmost = rightmost on {samples} random words", [], disagree),
        Check("rewrites stay under the step bound", True, max_steps < steenrod.DEFAULT_MAX_STEPS),
    ]


def random_finite_set(rng: random.Random, radius: int) -> frozenset:
    return frozenset(k for k in range(-radius, radius + 1) if rng.random() < 0.5)


def suite_reciprocity(window: int = 10, samples: int = 20, seed: int = 0, **_) -> list[Check]:
    spec = singer.gamma_spec()
    win = Window.symmetric(window)
    nat = quadratic.reciprocity_check(spec, singer.is_natural, win)
    checks = [Check("J = N: pullback and pushforward along sigma(J)", [True, True], [nat.pullback.ok, nat.pushforward.ok])]
    rng = random.Random(seed)
    disagree = []
    for _ in range(samples):
        J = random_finite_set(rng, window)
        r = quadratic.reciprocity_check(spec, J, win)
        if not r.agree:
            disagree.append(sorted(J))
    checks.append(Check(f"{samples} random finite J, |index| <= {window}", [], disagree))
    return checks


def suite_pairing(window: int = 15, **_) -> list[Check]:
    report = steenrod.relations_match_f(Window.symmetric(window))
    return [
        Check(f"Adem coefficients = f on S' pairs, |u|,|v| <= {window}", [], [list(map(str, m)) for m in report.mismatches]),
        Check("adem_expand(2,2)", [[3, 1]], steenrod.adem_expand(2, 2).to_json()),
    ]


XY = ("x", "y")


def two_generator_relations(*pairs) -> F2Matrix:
    return F2Matrix.from_supports([[p] for p in pairs], quadratic.pair_labels(XY))


def _supports(m: F2Matrix) -> list:
    rows = _rref(m.rows)
    return sorted(sorted("η" + a + "⊗η" + b for a, b in m.support(r)) for r in rows)


def suite_perp(samples: int = 50, seed: int = 0, **_) -> list[Check]:
    R = two_generator_relations(("x", "y"), ("y", "x"))
    T = two_generator_relations(("x", "x"), ("x", "y"))
    r_perp = quadratic.perp(XY, R)
    t_perp = quadratic.perp(XY, T)
    checks = [
        Check("R = <x⊗y, y⊗x>: R^⊥", [["ηx⊗ηx"], ["ηy⊗ηy"]], _supports(r_perp)),
        Check("T = <x⊗x, x⊗y>: T^⊥", [["ηy⊗ηx"], ["ηy⊗ηy"]], _supports(t_perp)),
        Check("R quadratically self-dual", False, quadratic.find_self_duality(XY, R) is not None),
        Check("T quadratically self-dual", True, quadratic.find_self_duality(XY, T) is not None),
    ]
    rng = random.Random(seed)
    labels = quadratic.pair_labels(XY)
    bad = 0
    for _ in range(samples):
        rows = tuple(rng.randrange(16) for _ in range(rng.randint(0, 4)))
        m = F2Matrix(rows, labels)
        if not same_rowspace(quadratic.perp(XY, quadratic.perp(XY, m)), m):
            bad += 1
    checks.append(Check(f"perp(perp(R)) = R on {samples} random subspaces", 0, bad))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "selfdual": suite_selfdual,
    "copbw": suite_copbw,
    "quadratic": suite_quadratic,
    "milnor": suite_milnor,
    "adem": suite_adem,
    "reciprocity": suite_reciprocity,
    "pairing": suite_pairing,
    "perp": suite_perp,
    "comonoid": suite_comonoid,
    "foracle": suite_foracle,
}
