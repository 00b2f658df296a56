"""Cut restriction to faces, injection restriction, and line-label statistics.

The operators here connect k-way cuts of the big simplex grid to
non-opposite cuts of the triangle: restriction to a 3-element face (with
the "bad point" fix-up), restriction along an injection of index sets,
the per-pair label sets D_{i,j} and their mean, and exact-enumeration
verification of the probability and cost bounds built on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .core import (
    KWAY,
    NONOPPOSITE,
    Cut,
    Point,
    WeightFunction,
    cost,
    enumerate_points,
    support,
)


@dataclass
class RestrictionResult:
    raw: dict[Point, int]  # labels in {0,1,2,3} before the fix-up
    fixed: Cut  # valid non-opposite cut of the triangle grid
    bad_points: frozenset[Point]  # side points whose raw label was opposite


def restrict_triple(P: Cut, i1: int, i2: int, i3: int) -> RestrictionResult:
    """Cut induced by P on the face spanned by terminals i1, i2, i3.

    A face point maps through the face embedding; labels outside the
    triple become the extra cluster.  Side points whose induced label is
    the opposite corner are "bad" and forced to the extra cluster.
    """
    triple = (i1, i2, i3)
    if len(set(triple)) != 3 or not all(0 <= i < P.k for i in triple):
        raise ValueError(f"indices must be distinct and in range, got {triple}")
    raw: dict[Point, int] = {}
    bad = []
    for x in enumerate_points(3, P.n):
        big = [0] * P.k
        for j, i in enumerate(triple):
            big[i] = x[j]
        lab = P.labels[tuple(big)]
        r = triple.index(lab) if lab in triple else 3
        raw[x] = r
        if r < 3 and r not in support(x):
            bad.append(x)
    fixed_labels = {x: (3 if x in set(bad) else r) for x, r in raw.items()}
    fixed = Cut(3, P.n, fixed_labels, NONOPPOSITE)
    return RestrictionResult(raw=raw, fixed=fixed, bad_points=frozenset(bad))


def restrict_injection(P: Cut, f: Sequence[int], k: int) -> Cut:
    """Non-opposite cut of the small grid induced by P along injection f.

    f maps the k small indices into P's K indices; a point whose image
    label falls outside its embedded support gets the extra cluster, so
    the result is always non-opposite.
    """
    if len(f) != k or len(set(f)) != k:
        raise ValueError(f"f must be an injection of {k} indices, got {f}")
    if not all(0 <= i < P.k for i in f):
        raise ValueError(f"injection image out of range: {f}")
    if k != 3:
        raise ValueError("the triangle grid is the only supported target")
    inv = {fi: j for j, fi in enumerate(f)}
    labels: dict[Point, int] = {}
    for x in enumerate_points(k, P.n):
        big = [0] * P.k
        for j in range(k):
            big[f[j]] = x[j]
        lab = P.labels[tuple(big)]
        image_supp = {f[j] for j in support(x)}
        labels[x] = inv[lab] if lab in image_supp else k
    return Cut(k, P.n, labels, NONOPPOSITE)


def injection_bad_points(P: Cut, f: Sequence[int], k: int) -> set[Point]:
    """Points x with P(x o f) landing in f([k] \\ supp(x))."""
    bad = set()
    fset = set(f)
    for x in enumerate_points(k, P.n):
        big = [0] * P.k
        for j in range(k):
            big[f[j]] = x[j]
        lab = P.labels[tuple(big)]
        image_supp = {f[j] for j in support(x)}
        if lab in fset and lab not in image_supp:
            bad.add(x)
    return bad


@dataclass
class DProfile:
    per_pair: dict[tuple[int, int], frozenset[int]]
    mean: Fraction  # average label-set size over pairs, always >= 2


def d_profile(P: Cut) -> DProfile:
    """Label sets used on the lines between terminal pairs, and their mean size."""
    if P.family != KWAY:
        raise ValueError("d_profile expects a k-way cut")
    per_pair = {}
    for i, j in combinations(range(P.k), 2):
        labs = set()
        for t in range(P.n + 1):
            x = [0] * P.k
            x[i], x[j] = t, P.n - t
            labs.add(P.labels[tuple(x)])
        per_pair[(i, j)] = frozenset(labs)
    total = sum(len(s) for s in per_pair.values())
    return DProfile(per_pair=per_pair, mean=Fraction(total, comb(P.k, 2)))


@dataclass
class ProjectionReport:
    fraction_nonopposite: Fraction
    refined_bound: Fraction  # 1 - 3(D(P) - 2)/(k - 2), clamped at 0
    coarse_bound: Fraction  # 1 - 3(n - 1)/(k - 2), clamped at 0
    ok: bool


def check_projection_bounds(P: Cut) -> ProjectionReport:
    """Exact fraction of faces with non-opposite restriction vs both bounds."""
    if P.k < 3:
        raise ValueError("need k >= 3")
    good = 0
    triples = list(combinations(range(P.k), 3))
    for t in triples:
        if not restrict_triple(P, *t).bad_points:
            good += 1
    frac = Fraction(good, len(triples))
    D = d_profile(P).mean
    refined = max(Fraction(0), 1 - Fraction(3) * (D - 2) / (P.k - 2))
    coarse = max(Fraction(0), 1 - Fraction(3 * (P.n - 1), P.k - 2))
    return ProjectionReport(
        fraction_nonopposite=frac,
        refined_bound=refined,
        coarse_bound=coarse,
        ok=frac >= refined and frac >= coarse,
    )


@dataclass
class CostLemmaReport:
    d_mean: Fraction
    cost_hat: Fraction
    cost_prime: Fraction
    cost_tilde: Fraction
    bound_hat: Fraction  # 1 - (D(P) - 2)/(k - 2)
    bound_prime: Fraction  # D(P) - 1
    bound_tilde: Fraction  # exactly 1
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_cost_lemmas(
    P: Cut,
    n: int,
    weights: Optional[tuple[WeightFunction, WeightFunction, WeightFunction]] = None,
) -> CostLemmaReport:
    """Exact costs of P against w_hat, w_prime, w_tilde vs the three bounds.

    Prebuilt (w_hat, w_prime, w_tilde) can be passed to amortize
    construction over a corpus of cuts on the same grid.
    """
    from .weights import build_w_hat, build_w_prime, build_w_tilde

    if n != P.n:
        raise ValueError(f"cut is on n = {P.n}, expected {n}")
    if weights is None:
        weights = (build_w_hat(P.k, n), build_w_prime(P.k, n), build_w_tilde(P.k, n))
    what, wprime, wtilde = weights
    D = d_profile(P).mean
    ch, cp, ct = cost(P, what), cost(P, wprime), cost(P, wtilde)
    bh = 1 - (D - 2) / Fraction(P.k - 2)
    bp = D - 1
    bt = Fraction(1)
    violations = []
    if ch < bh:
        violations.append(f"cost(P, w_hat) = {ch} < {bh}")
    if cp < bp:
        violations.append(f"cost(P, w_prime) = {cp} < {bp}")
    if ct < bt:
        violations.append(f"cost(P, w_tilde) = {ct} < {bt}")
    return CostLemmaReport(D, ch, cp, ct, bh, bp, bt, violations)
