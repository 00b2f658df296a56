"""Randomized simplex-partition sampler and the density estimator."""

import random
from fractions import Fraction

import numpy as np
import pytest

from mwgap.core import enumerate_points, support
from mwgap.rounding import (
    BallCut,
    CornerCut,
    DIAGONALS,
    DegenerateEvaluationError,
    EXTRA,
    PARAM_CELLS,
    _batch_labels,
    _draw_params,
    _params_to_cut,
    estimate_density,
    evaluate,
    sample_cut,
    segments_intersect,
)


def F(a, b=1):
    return Fraction(a, b)


def _ball_at(diag, t, side_choice=(False, False, False)):
    A, B = DIAGONALS[diag]
    r = tuple((1 - t) * A[i] + t * B[i] for i in range(3))
    return BallCut(r=r, side_choice=side_choice, diag=diag, t=t)


def test_corner_cut_thresholds():
    cut = CornerCut(r=F(7, 10))
    assert evaluate(cut, (F(9, 10), F(1, 20), F(1, 20))) == 0
    assert evaluate(cut, (F(1, 20), F(9, 10), F(1, 20))) == 1
    assert evaluate(cut, (F(1, 3), F(1, 3), F(1, 3))) == EXTRA
    # exactly at the threshold is not strictly inside the corner
    assert evaluate(cut, (F(7, 10), F(3, 10), F(0))) == EXTRA


def test_ball_cut_corners_keep_their_labels():
    for diag in (0, 1):
        for choice in ((False,) * 3, (True,) * 3, (True, False, True)):
            cut = _ball_at(diag, F(1, 2), choice)
            for i in range(3):
                corner = tuple(F(1) if j == i else F(0) for j in range(3))
                assert evaluate(cut, corner) == i


def test_ball_cut_point_near_corner():
    cut = _ball_at(0, F(1, 2))
    assert evaluate(cut, (F(9, 10), F(1, 20), F(1, 20))) == 0


def test_ball_cut_regions_partition_points():
    rng = random.Random(2)
    n = 7
    pts = enumerate_points(3, n)
    evaluated = 0
    for _ in range(30):
        cut = sample_cut(rng)
        labels = {}
        try:
            for p in pts:
                labels[p] = evaluate(cut, tuple(F(a, n) for a in p))
        except DegenerateEvaluationError:
            continue
        evaluated += 1
        # non-opposite: a label is either in the support or the extra one
        for p, c in labels.items():
            assert c == EXTRA or c in support(p)
        # each simplex corner keeps its own label
        for i in range(3):
            corner = tuple(n if j == i else 0 for j in range(3))
            assert labels[corner] == i
    assert evaluated >= 20


def test_segments_intersect_basics():
    a, b = (F(0), F(0)), (F(1), F(1))
    c, d = (F(0), F(1)), (F(1), F(0))
    assert segments_intersect(a, b, c, d)
    assert not segments_intersect(a, (F(1, 3), F(1, 3)), c, d)
    # shared endpoint counts as intersecting
    assert segments_intersect(a, b, b, (F(2), F(0)))
    # collinear but disjoint
    assert not segments_intersect(a, (F(1, 4), F(1, 4)), (F(1, 2), F(1, 2)), b)


def test_sample_cut_reproducible_and_mixture():
    rng1, rng2 = random.Random(5), random.Random(5)
    kinds = []
    for _ in range(400):
        c1, c2 = sample_cut(rng1), sample_cut(rng2)
        assert c1 == c2
        kinds.append(isinstance(c1, CornerCut))
    frac = sum(kinds) / len(kinds)
    assert 0.1 < frac < 0.35  # p_corner = 1/5


def test_sampled_parameter_ranges():
    rng = random.Random(6)
    for _ in range(500):
        cut = sample_cut(rng)
        if isinstance(cut, CornerCut):
            assert F(2, 3) <= cut.r < 1
        else:
            assert 0 < cut.t < 1
            assert cut.diag in (0, 1)
            assert all(0 < ri < 1 for ri in cut.r)
            assert sum(cut.r) == 1


def test_sample_cut_rejects_bad_mixture():
    with pytest.raises(ValueError):
        sample_cut(random.Random(0), Fraction(7, 5))


def test_batch_labels_match_reference_evaluator():
    n = 5
    pts = enumerate_points(3, n)
    rng = np.random.default_rng(42)
    params = _draw_params(rng, 300, Fraction(1, 5))
    labels, degenerate = _batch_labels(params, pts, n)
    for i in range(300):
        if degenerate[i]:
            continue
        cut = _params_to_cut(params, i)
        for j, p in enumerate(pts):
            ref = evaluate(cut, tuple(Fraction(a, n) for a in p))
            assert labels[i, j] == ref


def test_estimate_density_deterministic():
    a = estimate_density(3, 20000, Fraction(1, 5), 123)
    b = estimate_density(3, 20000, Fraction(1, 5), 123)
    assert a.tau_hat == b.tau_hat
    assert a.worst_pair == b.worst_pair
    c = estimate_density(3, 20000, Fraction(1, 5), 124)
    assert a.tau_hat != c.tau_hat


def test_estimate_density_statistics_shape():
    est = estimate_density(3, 50000, Fraction(1, 5), 7)
    assert est.samples == 50000
    assert 0 < est.tau_hat < 2
    assert est.ci3sigma > 0
    assert abs(est.corner_fraction - 0.2) < 0.02
    for stat in est.pair_stats:
        assert 0 <= stat.separations <= est.samples
        assert 0.0 <= stat.p_hat <= 1.0


def test_estimate_density_rejects_bad_parameters():
    with pytest.raises(ValueError):
        estimate_density(1, 100000, Fraction(1, 5), 1)
    with pytest.raises(ValueError):
        estimate_density(3, 100000, Fraction(7, 5), 1)


def test_param_cells_is_power_of_two():
    assert PARAM_CELLS & (PARAM_CELLS - 1) == 0
