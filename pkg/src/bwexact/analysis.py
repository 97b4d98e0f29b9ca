"""Numeric analysis of the state-count branching recurrences.

The state generator branches over the spanning tree in root-to-leaf
order; weighting pending vertices 1, alpha, or beta by how their parent
was handled turns the branching bounds, under the ansatz T(w) = kappa^w,
into four algebraic constraints on kappa:

    leaf:          max(4 k^-1, 4 k^-alpha, 4 k^-beta) <= 1
    parent_unset:  2 k^-1 + 2 k^-(2-beta) + k^-(2-alpha) <= 1
    parent_left:   k^-alpha + k^-(1+alpha-beta) + 2 k^-1 <= 1
    parent_right:  2 k^-beta + 2 k^-1 + k^-(1+beta-alpha) <= 1

Each left side is strictly decreasing in kappa, so the smallest feasible
kappa is the max of the four single-constraint roots. The total state
count is then bounded by 3(n+1) kappa^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

CONSTRAINTS = ("leaf", "parent_unset", "parent_left", "parent_right")


@dataclass(frozen=True)
class McWeights:
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha <= 1.0 and 0.0 < self.beta <= 1.0):
            raise ValueError(
                f"weights must lie in (0, 1], got alpha={self.alpha}, beta={self.beta}"
            )


@dataclass(frozen=True)
class McBound:
    kappa: float
    binding: tuple[str, ...]


def constraint_residuals(kappa, w: McWeights):
    """Residuals (LHS - 1) of the four constraints; feasible when <= 0.

    Accepts a scalar or a numpy array for kappa.
    """
    a, b = w.alpha, w.beta
    k = kappa
    leaf = np.maximum(4 * k**-1.0, np.maximum(4 * k**-a, 4 * k**-b)) - 1
    unset = 2 * k**-1.0 + 2 * k ** -(2 - b) + k ** -(2 - a) - 1
    left = k**-a + k ** -(1 + a - b) + 2 * k**-1.0 - 1
    right = 2 * k**-b + 2 * k**-1.0 + k ** -(1 + b - a) - 1
    if np.isscalar(kappa):
        return float(leaf), float(unset), float(left), float(right)
    return leaf, unset, left, right


def _bisect_root(f, tol: float) -> float:
    """Root of a strictly decreasing f on (1, inf) with f -> -1 at inf."""
    lo, hi = 1.0 + 1e-12, 2.0
    while f(hi) > 0:
        lo, hi = hi, hi * hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    # Upper endpoint: all residuals are <= 0 at the reported value.
    return hi


def kappa_for(w: McWeights, tol: float = 1e-9) -> McBound:
    """Smallest kappa > 1 satisfying all four constraints.

    Bisection per constraint (each LHS is strictly decreasing in kappa);
    the answer is the max of the roots, accurate to tol.
    """
    roots = [
        _bisect_root(lambda k, i=i: constraint_residuals(k, w)[i], tol)
        for i in range(4)
    ]
    kappa = max(roots)
    slack = max(tol * 10, 1e-12)
    binding = tuple(
        name for name, r in zip(CONSTRAINTS, roots) if kappa - r <= slack
    )
    return McBound(kappa, binding)


def _kappa_vectorized(alpha: np.ndarray, beta: np.ndarray, tol: float) -> np.ndarray:
    """Per-element kappa root over weight arrays, by vectorized bisection
    on the max of the four residuals (still strictly decreasing).

    Works on x = log(kappa) so tiny weights (huge roots) stay bounded
    and the terms reduce to exp() calls. Accuracy is tol in kappa near
    the useful range (kappa < 8); far larger roots are resolved only in
    relative terms, which is irrelevant for the argmin.
    """

    def worst(x):
        e = np.exp
        leaf = np.maximum(4 * e(-x), np.maximum(4 * e(-alpha * x), 4 * e(-beta * x)))
        unset = 2 * e(-x) + 2 * e(-(2 - beta) * x) + e(-(2 - alpha) * x)
        left = e(-alpha * x) + e(-(1 + alpha - beta) * x) + 2 * e(-x)
        right = 2 * e(-beta * x) + 2 * e(-x) + e(-(1 + beta - alpha) * x)
        return np.maximum(np.maximum(leaf, unset), np.maximum(left, right)) - 1

    lo = np.full(alpha.shape, 1e-12)
    hi = np.full(alpha.shape, np.log(2.0))
    for _ in range(64):
        bad = worst(hi) > 0
        if not bad.any():
            break
        lo = np.where(bad, hi, lo)
        hi = np.where(bad, hi * 2, hi)
    tol_x = tol / 8.0
    while float((hi - lo).max()) > tol_x:
        mid = (lo + hi) / 2
        high = worst(mid) > 0
        lo = np.where(high, mid, lo)
        hi = np.where(high, hi, mid)
    return np.exp(hi)


def optimize_weights(
    grid_step: float = 0.005,
    refine_step: float = 1e-4,
    tol: float = 1e-9,
) -> tuple[McWeights, McBound]:
    """Minimize kappa over (alpha, beta) in (0, 1]^2.

    Coarse grid scan followed by a local grid refinement around the best
    coarse point; both stages are vectorized.
    """
    coarse = np.arange(grid_step, 1.0 + grid_step / 2, grid_step)
    coarse = np.minimum(coarse, 1.0)
    a_best, b_best = _grid_argmin(coarse, coarse, tol=1e-7)

    fine_a = np.arange(a_best - grid_step, a_best + grid_step + refine_step / 2, refine_step)
    fine_b = np.arange(b_best - grid_step, b_best + grid_step + refine_step / 2, refine_step)
    fine_a = fine_a[(fine_a > 0) & (fine_a <= 1.0 + 1e-12)]
    fine_b = fine_b[(fine_b > 0) & (fine_b <= 1.0 + 1e-12)]
    a_best, b_best = _grid_argmin(np.minimum(fine_a, 1.0), np.minimum(fine_b, 1.0), tol=tol)

    weights = McWeights(float(a_best), float(b_best))
    return weights, kappa_for(weights, tol)


def _grid_argmin(a_vals: np.ndarray, b_vals: np.ndarray, tol: float):
    A, B = np.meshgrid(a_vals, b_vals, indexing="ij")
    K = _kappa_vectorized(A, B, tol)
    i, j = np.unravel_index(int(np.argmin(K)), K.shape)
    return float(A[i, j]), float(B[i, j])


def log_total_state_bound(n: int, bound: McBound) -> float:
    """Natural log of 3(n+1) kappa^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.log(3 * (n + 1)) + n * math.log(bound.kappa)


def total_state_bound(n: int, bound: McBound) -> float:
    """3(n+1) kappa^n, evaluated in log space; inf on float overflow."""
    lg = log_total_state_bound(n, bound)
    return math.exp(lg) if lg < 709 else math.inf
