"""Restriction of k-way cuts to triangle faces and the D(P) machinery."""

import itertools
import random
from fractions import Fraction

import pytest

from mwgap.core import (
    Cut,
    KWAY,
    enumerate_points,
    random_kway_cut,
    support,
    terminal,
)
from mwgap.projection import (
    check_cost_lemmas,
    check_projection_bounds,
    d_profile,
    injection_bad_points,
    restrict_injection,
    restrict_triple,
)


def _identity_cut(k, n):
    labels = {}
    for p in enumerate_points(k, n):
        labels[p] = max(range(k), key=lambda i: (p[i], -i))
    for i in range(k):
        labels[terminal(i, k, n)] = i
    return Cut(k, n, labels, KWAY)


def test_restrict_triple_relabels_into_range():
    P = _identity_cut(5, 3)
    res = restrict_triple(P, 0, 2, 4)
    res.fixed.validate()
    assert res.fixed.k == 3
    for x, c in res.fixed.labels.items():
        assert c in support(x) | {3}


def test_restrict_triple_marks_opposite_side_labels_as_bad():
    # a side point of the face labeled with the opposite triple corner is bad
    P = _identity_cut(5, 3)
    labels = dict(P.labels)
    labels[(0, 0, 1, 0, 2)] = 0  # face point (0, 1, 2): corner 0 is opposite
    P = Cut(5, 3, labels, KWAY)
    res = restrict_triple(P, 0, 2, 4)
    assert res.raw[(0, 1, 2)] == 0
    assert (0, 1, 2) in res.bad_points
    assert res.fixed.labels[(0, 1, 2)] == 3
    # a label outside the triple is the extra cluster, not a bad point
    labels[(1, 0, 1, 0, 1)] = 3
    res = restrict_triple(Cut(5, 3, labels, KWAY), 0, 2, 4)
    assert res.fixed.labels[(1, 1, 1)] == 3
    assert (1, 1, 1) not in res.bad_points


def test_d_profile_identity_cut():
    P = _identity_cut(4, 3)
    prof = d_profile(P)
    # boundary-line points between i and j only use labels i and j
    for pair, labs in prof.per_pair.items():
        assert labs == frozenset(pair)
    assert prof.mean == 2


def test_d_profile_mean_is_average():
    rng = random.Random(3)
    P = random_kway_cut(5, 3, rng)
    prof = d_profile(P)
    pairs = list(itertools.combinations(range(5), 2))
    assert prof.mean == Fraction(sum(len(prof.per_pair[p]) for p in pairs), len(pairs))


def test_projection_bounds_hold_on_random_cuts():
    for k, n in ((5, 3), (6, 3)):
        rng = random.Random(100 * k + n)
        for _ in range(100):
            rep = check_projection_bounds(random_kway_cut(k, n, rng))
            assert rep.ok
            assert 0 <= rep.fraction_nonopposite <= 1
            assert rep.refined_bound >= 0 and rep.coarse_bound >= 0


def test_projection_identity_cut_all_triples_nonopposite():
    rep = check_projection_bounds(_identity_cut(6, 3))
    assert rep.fraction_nonopposite == 1


def test_restrict_injection_always_nonopposite():
    rng = random.Random(7)
    pts = enumerate_points(3, 3)
    for _ in range(50):
        P = random_kway_cut(10, 3, rng)
        f = rng.sample(range(10), 3)
        Q = restrict_injection(P, f, 3)
        Q.validate()
        for x in pts:
            assert Q.labels[x] in support(x) | {3}


def test_injection_bad_points_definition():
    rng = random.Random(9)
    P = random_kway_cut(10, 3, rng)
    f = [2, 5, 8]
    bad = injection_bad_points(P, f, 3)
    for x in enumerate_points(3, 3):
        big = tuple(
            sum(x[j] for j in range(3) if f[j] == i) for i in range(10)
        )
        lab = P.labels[big]
        outside = lab in set(f) - {f[j] for j in support(x)}
        assert (x in bad) == outside


def test_cost_lemmas_on_random_cuts():
    rng = random.Random(13)
    for _ in range(50):
        P = random_kway_cut(5, 3, rng)
        rep = check_cost_lemmas(P, 3)
        assert rep.ok
        assert rep.cost_tilde >= 1


def test_cost_lemma_tightness_direction():
    # the identity cut has D(P) = 2, so the w_hat bound degenerates to >= 1
    rep = check_cost_lemmas(_identity_cut(5, 3), 3)
    assert rep.ok
    assert rep.d_mean == 2
    assert rep.cost_hat >= 1
