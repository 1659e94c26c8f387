import numpy as np
import pytest

from shellmodes import (
    DispersionCurve,
    KPolicy,
    MeshSpec,
    estimate_order,
    first_mode,
    run_sweep,
    sweep_k,
)
from shellmodes.errors import IncompleteCurve, InsufficientSpan, KmaxExceeded

COARSE = MeshSpec(n_thick=1, n_merid=4, geo_degree=1, graded=False)


def make_curve(lams, stop="rise_detected", eps=0.01):
    lams = np.asarray(lams, dtype=float)
    return DispersionCurve(
        eps=eps,
        operator="laplace",
        ks=np.arange(len(lams)),
        lams=lams,
        residuals=np.zeros(len(lams)),
        stop_reason=stop,
    )


def test_first_mode_tie_breaks_to_smaller_k():
    curve = make_curve([5.0, 3.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0])
    assert first_mode(curve) == (1, 3.0)


def test_first_mode_requires_completed_curve():
    with pytest.raises(IncompleteCurve):
        first_mode(make_curve([3.0, 2.0, 1.0], stop="kmax_hit"))


def test_laplace_sweep_is_increasing_and_stops(ring_plate):
    curve = sweep_k(ring_plate, None, "laplace", 0.05, COARSE, p=3)
    assert curve.stop_reason == "rise_detected"
    assert curve.argmin_k == 0
    assert np.all(np.diff(curve.lams) > 0)
    assert len(curve.ks) == KPolicy().window + 1


def test_cap_raises_with_partial_curve(ring_plate):
    with pytest.raises(KmaxExceeded) as exc_info:
        sweep_k(ring_plate, None, "laplace", 0.05, COARSE, p=2, k_policy=KPolicy(5, 3))
    partial = exc_info.value.curve
    assert partial.stop_reason == "kmax_hit"
    assert list(partial.ks) == [0, 1, 2, 3]


def test_run_sweep_orders_and_rows(ring_plate):
    sweep = run_sweep(ring_plate, None, "laplace", [0.05, 0.02], COARSE, p=2)
    assert [row.eps for row in sweep.rows] == [0.05, 0.02]
    assert all(row.k_star == 0 for row in sweep.rows)
    with pytest.raises(ValueError):
        run_sweep(ring_plate, None, "laplace", [0.01, 0.05], COARSE, p=2)


def test_argmin_stable_under_p_enrichment(ring_plate):
    a = sweep_k(ring_plate, None, "laplace", 0.05, COARSE, p=2)
    b = sweep_k(ring_plate, None, "laplace", 0.05, COARSE, p=3)
    assert a.argmin_k == b.argmin_k
    # converged eigenvalues barely move when p grows past the resolved regime
    fine_a = sweep_k(ring_plate, None, "laplace", 0.05, MeshSpec(1, 4, 1), p=5)
    fine_b = sweep_k(ring_plate, None, "laplace", 0.05, MeshSpec(1, 4, 1), p=6)
    assert fine_a.lams[0] == pytest.approx(fine_b.lams[0], rel=1e-9)


def test_estimate_order_recovers_synthetic_exponents():
    eps = np.array([0.1, 0.04, 0.01, 0.001])
    for a0, c, delta in [(0.0, 3.0, 1.0), (0.0, 2.0, 2.0), (0.2, 1.4, 2.0 / 7.0)]:
        samples = [(e, a0 + c * e**delta) for e in eps]
        assert estimate_order(samples, offset=a0) == pytest.approx(delta, rel=1e-10)


def test_estimate_order_uses_three_smallest_by_default():
    # contaminate the largest thickness; the default fit must ignore it
    eps = [0.8, 0.04, 0.01, 0.004]
    samples = [(e, 5.0 * e) for e in eps]
    samples[0] = (0.8, 123.0)
    assert estimate_order(samples) == pytest.approx(1.0, rel=1e-10)


def test_estimate_order_span_requirements():
    with pytest.raises(InsufficientSpan):
        estimate_order([(0.01, 1.0), (0.008, 1.1)])
    with pytest.raises(InsufficientSpan):
        estimate_order([(0.01, 1.0), (0.008, 1.1), (0.005, 1.2)])
    # narrow spans are allowed when explicitly requested
    val = estimate_order(
        [(0.01, 0.01), (0.008, 0.008), (0.005, 0.005)], min_decades=0.25
    )
    assert val == pytest.approx(1.0, rel=1e-10)


def test_estimate_order_rejects_nonpositive_values():
    with pytest.raises(ValueError):
        estimate_order([(0.1, 1.0), (0.01, 0.5), (0.001, 0.2)], offset=0.5)
