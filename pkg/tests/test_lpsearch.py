"""Cutting-plane search for minimum-total-weight certified instances."""

from fractions import Fraction

import numpy as np
import pytest

from mwgap.core import NONOPPOSITE, enumerate_edges
from mwgap.dual import certify
from mwgap.lpsearch import _to_weight_function, search, solve_lp
from mwgap.weights import lpc_w3_closed


def test_solve_lp_unconstrained_is_zero():
    edges = enumerate_edges(3, 3)
    x = solve_lp([], 3, edges)
    assert np.allclose(x, 0)


def test_solve_lp_single_constraint():
    edges = enumerate_edges(3, 3)
    con = {edges[0]: 2, edges[1]: 1}
    x = solve_lp([con], 3, edges)
    # cheapest way to push the row to 1 uses the doubled edge
    assert abs(sum(x) - 0.5) < 1e-7


def test_to_weight_function_is_exact_on_floats():
    edges = enumerate_edges(3, 3)
    x = np.zeros(len(edges))
    x[0] = 0.375  # an exact binary float
    w = _to_weight_function(3, edges, x)
    assert w.get(*edges[0]) == Fraction(3, 8)


def test_search_tiny_converges_and_certifies():
    st = search(3)
    assert st.certified
    assert st.iterations >= 1
    # the rescaled instance really is certified at target 1
    cert = certify(3, st.weights, NONOPPOSITE, Fraction(1))
    assert cert.passed
    assert st.lpc_exact == st.weights.total() / 3
    # never better than the rounding-scheme floor, never worse than w3
    assert Fraction(5, 6) <= st.lpc_exact <= lpc_w3_closed(3)


def test_search_n6_beats_w3():
    st = search(6)
    assert st.certified
    assert Fraction(5, 6) <= st.lpc_exact < lpc_w3_closed(6)


def test_search_respects_iteration_cap():
    st = search(6, max_iter=2)
    assert st.iterations <= 2
    assert not st.certified


def test_search_rejects_bad_n():
    with pytest.raises(ValueError):
        search(0)
