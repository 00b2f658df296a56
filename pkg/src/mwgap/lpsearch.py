"""Cutting-plane search for minimum-lpc weights certified against
non-opposite cuts.

The master LP minimizes the canonical LP value subject to accumulated
path-system constraints (each demanding a witness ball or 3-corner path
system to cost at least one); the separation oracle is the dual-graph
certifier, which returns the currently cheapest path system.  The inner
LP runs in floating point; every final claim is re-established by an
exact rational recheck after rescaling, so numeric drift cannot corrupt
a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from .core import Edge, WeightFunction, enumerate_edges
from .dual import NONOPPOSITE, Certificate, build_dual, certify, dijkstra, witness_path


@dataclass
class SearchState:
    n: int
    tol: float
    iterations: int
    certified: bool
    weights: WeightFunction  # final weights, exactly rescaled to lower bound 1
    lpc_exact: Fraction  # exact lpc of the rescaled weights
    objective: float  # last master LP objective (unscaled)
    constraints: list[dict[Edge, int]] = field(default_factory=list)
    log: list[str] = field(default_factory=list)
    certificate: Optional[Certificate] = None


def solve_lp(constraints: list[dict[Edge, int]], n: int, edges: list[Edge]) -> np.ndarray:
    """Minimize sum(w)/n subject to w >= 0 and each constraint's weighted
    edge sum being at least one.  Deterministic for fixed inputs."""
    m = len(edges)
    if not constraints:
        return np.zeros(m)
    eindex = {e: i for i, e in enumerate(edges)}
    A = np.zeros((len(constraints), m))
    for r, con in enumerate(constraints):
        for e, mult in con.items():
            A[r, eindex[e]] = -mult
    res = linprog(
        c=np.full(m, 1.0 / n),
        A_ub=A,
        b_ub=np.full(len(constraints), -1.0),
        bounds=[(0, None)] * m,
        method="highs",
    )
    if not res.success:
        raise RuntimeError(f"master LP failed: {res.message}")
    return np.maximum(res.x, 0.0)


def _to_weight_function(n: int, edges: list[Edge], x: np.ndarray) -> WeightFunction:
    weights = {e: Fraction(float(v)) for e, v in zip(edges, x) if v > 0}
    return WeightFunction(3, n, weights)


def _add_multiset(con: dict[Edge, int], path: list[Edge]) -> None:
    for e in path:
        con[e] = con.get(e, 0) + 1


def search(n: int, tol: float = 1e-9, max_iter: int = 500) -> SearchState:
    """Row generation until both certified bounds reach 1 - tol.

    A violated ball bound contributes the three shortest paths from the
    cheapest face to the outer nodes as one multiset constraint; a
    violated corner bound contributes the three pairwise outer paths.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    edges = enumerate_edges(3, n)
    constraints: list[dict[Edge, int]] = []
    log: list[str] = []
    x = np.zeros(len(edges))
    objective = 0.0
    certified_numeric = False
    it = 0
    for it in range(1, max_iter + 1):
        x = solve_lp(constraints, n, edges)
        objective = float(x.sum() / n)
        w = _to_weight_function(n, edges, x)
        g = build_dual(n, w)
        dd = [
            dijkstra(g, ("O", i), frozenset(("O", j) for j in range(3) if j != i))
            for i in range(3)
        ]
        dists = [d for d, _ in dd]
        preds = [p for _, p in dd]

        ball_face = min(g.faces, key=lambda f: (dists[0][f] + dists[1][f] + dists[2][f], f))
        ball = dists[0][ball_face] + dists[1][ball_face] + dists[2][ball_face]
        corner = (
            dists[0][("O", 1)] + dists[0][("O", 2)] + dists[1][("O", 2)]
        )
        log.append(f"iter {it}: objective {objective:.9f} ball {float(ball):.9f} corner {float(corner):.9f}")
        added = 0
        for f in g.faces:
            if dists[0][f] + dists[1][f] + dists[2][f] < 1 - tol:
                con: dict[Edge, int] = {}
                for i in range(3):
                    _add_multiset(con, witness_path(preds[i], ("O", i), f))
                constraints.append(con)
                added += 1
        if corner < 1 - tol:
            con = {}
            _add_multiset(con, witness_path(preds[0], ("O", 0), ("O", 1)))
            _add_multiset(con, witness_path(preds[0], ("O", 0), ("O", 2)))
            _add_multiset(con, witness_path(preds[1], ("O", 1), ("O", 2)))
            constraints.append(con)
            added += 1
        if added == 0:
            certified_numeric = True
            break

    w = _to_weight_function(n, edges, x)
    cert = certify(n, w, NONOPPOSITE, Fraction(1))
    bound = cert.overall
    if bound > 0:
        scaled = w.scaled(1 / bound)
        final_cert = certify(n, scaled, NONOPPOSITE, Fraction(1))
        lpc_exact = w.total() / n / bound
        certified = final_cert.passed
    else:
        scaled = w
        final_cert = cert
        lpc_exact = Fraction(0)
        certified = False
    log.append(f"exact recheck: bound {bound} lpc_exact {lpc_exact} ({float(lpc_exact):.9f})")
    return SearchState(
        n=n,
        tol=tol,
        iterations=it,
        certified=certified and certified_numeric,
        weights=scaled,
        lpc_exact=lpc_exact,
        objective=objective,
        constraints=constraints,
        log=log,
        certificate=final_cert,
    )
