import math

import pytest

from bwexact.analysis import (
    CONSTRAINTS,
    McBound,
    McWeights,
    constraint_residuals,
    kappa_for,
    log_total_state_bound,
    optimize_weights,
    total_state_bound,
)


class TestResiduals:
    def test_unit_weights_collapse_to_five_way_branching(self):
        w = McWeights(1, 1)
        leaf, unset, left, right = constraint_residuals(5.0, w)
        assert unset == pytest.approx(0, abs=1e-12)
        assert right == pytest.approx(0, abs=1e-12)
        assert left == pytest.approx(4 / 5 - 1, abs=1e-12)
        assert leaf == pytest.approx(4 / 5 - 1, abs=1e-12)

    def test_reference_weights_feasible(self):
        w = McWeights(0.8805, 1)
        assert all(r <= 1e-3 for r in constraint_residuals(4.8285, w))

    def test_limits_at_large_kappa(self):
        w = McWeights(1, 1)
        assert all(
            r == pytest.approx(-1, abs=1e-6)
            for r in constraint_residuals(1e9, w)
        )

    def test_strictly_decreasing_in_kappa(self):
        w = McWeights(0.7, 0.9)
        ks = [1.5, 2.0, 3.0, 5.0, 8.0]
        for i in range(4):
            lo = constraint_residuals(ks[i], w)
            hi = constraint_residuals(ks[i + 1], w)
            assert all(h < l for l, h in zip(lo, hi))


class TestKappaFor:
    def test_unit_anchor_is_five(self):
        assert kappa_for(McWeights(1, 1)).kappa == pytest.approx(5, abs=1e-6)

    def test_reference_weights(self):
        bound = kappa_for(McWeights(0.8805, 1))
        assert 4.8280 <= bound.kappa <= 4.8290

    def test_all_residuals_feasible_at_answer(self):
        for w in [McWeights(1, 1), McWeights(0.8805, 1), McWeights(0.6, 0.8)]:
            bound = kappa_for(w)
            assert all(r <= 0 for r in constraint_residuals(bound.kappa, w))

    def test_leaf_root_closed_form(self):
        # With the reference weights the leaf constraint roots at
        # 4^(1/alpha) and sits within 2e-3 of the overall bound.
        w = McWeights(0.8805, 1)
        leaf_root = 4 ** (1 / 0.8805)
        assert constraint_residuals(leaf_root, w)[0] == pytest.approx(0, abs=1e-9)
        assert abs(kappa_for(w).kappa - leaf_root) <= 2e-3

    def test_binding_reported(self):
        bound = kappa_for(McWeights(1, 1))
        assert set(bound.binding) <= set(CONSTRAINTS)
        assert "parent_unset" in bound.binding


class TestOptimize:
    def test_reproduces_reference_bound(self):
        weights, bound = optimize_weights()
        assert bound.kappa < 4.83
        assert bound.kappa <= 4.8285 + 1e-3
        assert abs(weights.alpha - 0.8805) <= 0.01
        assert abs(weights.beta - 1.0) <= 0.01

    def test_degenerate_line_gives_five(self):
        # Restricting to alpha = beta = 1 recovers the unweighted bound.
        assert kappa_for(McWeights(1, 1)).kappa == pytest.approx(5, abs=1e-6)

    def test_weight_validation(self):
        with pytest.raises(ValueError):
            McWeights(0, 1)
        with pytest.raises(ValueError):
            McWeights(0.5, 1.2)


class TestTotalStateBound:
    def test_small_values(self):
        assert total_state_bound(1, McBound(5.0, ())) == pytest.approx(30)

    def test_log_space_agrees(self):
        bound = McBound(4.8285, ())
        direct = 3 * 11 * 4.8285**10
        assert total_state_bound(10, bound) == pytest.approx(direct, rel=1e-6)

    def test_large_n_does_not_overflow(self):
        bound = McBound(4.8285, ())
        assert total_state_bound(10_000, bound) == math.inf
        lg = log_total_state_bound(10_000, bound)
        assert lg == pytest.approx(math.log(3 * 10_001) + 10_000 * math.log(4.8285))
