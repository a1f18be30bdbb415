import math

import numpy as np
import pytest

from cdwtunnel.numerics import integrate_adaptive
from cdwtunnel.potential import topological_charge
from cdwtunnel.wavefunctional import (
    KinkPairProfile,
    WavefunctionalSpec,
    eval_wavefunctional,
    kink_pair_profile,
    norm_constant,
    sample_profile,
    thin_wall_box,
    thin_wall_ft,
    thin_wall_ft_oracle,
    transport_pair_specs,
)

TWO_PI = 2.0 * math.pi
# mpmath: 2 sqrt(2) / pi^(3/2)
FT_L2_K_HALF_PI = 0.5079490874739278


def test_pair_midpoint_saturates():
    kp = KinkPairProfile(x_a=-5.0, x_b=5.0, b=5.0)
    assert kink_pair_profile(0.0, kp) == pytest.approx(2.0, abs=1e-10)


def test_pair_far_tails_cancel():
    kp = KinkPairProfile(x_a=-1.0, x_b=1.0, b=2.0)
    assert kink_pair_profile(1e6, kp) == pytest.approx(0.0, abs=1e-12)
    assert kink_pair_profile(-1e6, kp) == pytest.approx(0.0, abs=1e-12)


def test_pair_value_at_left_center():
    kp = KinkPairProfile(x_a=0.0, x_b=3.0, b=1.2)
    assert kink_pair_profile(0.0, kp) == pytest.approx(math.tanh(kp.b * kp.l), rel=1e-15)


def test_pair_validation():
    with pytest.raises(ValueError):
        KinkPairProfile(x_a=1.0, x_b=1.0, b=1.0)
    with pytest.raises(ValueError):
        KinkPairProfile(x_a=0.0, x_b=1.0, b=0.0)


def test_sample_profile_charge_and_peak():
    kp = KinkPairProfile(x_a=-5.0, x_b=5.0, b=1.0)
    prof = sample_profile(kp, half_width=20.0, n=1001)  # odd n puts a node at the midpoint
    assert abs(topological_charge(prof)) <= 1e-12
    assert np.max(prof.phis) == pytest.approx(2.0 * math.tanh(kp.b * kp.l / 2.0), rel=1e-12)


def test_sample_profile_two_point_grid():
    kp = KinkPairProfile(x_a=0.0, x_b=1.0, b=1.0)
    prof = sample_profile(kp, half_width=2.0, n=2)
    assert len(prof) == 2
    assert prof.xs[0] == -2.0 and prof.xs[-1] == 3.0


def test_sample_profile_rejects_degenerate_grid():
    kp = KinkPairProfile(x_a=0.0, x_b=1.0, b=1.0)
    with pytest.raises(ValueError):
        sample_profile(kp, half_width=2.0, n=1)


def test_box_values_and_boundary():
    assert thin_wall_box(0.0, 4.0, 2.0) == 2.0
    assert thin_wall_box(2.0, 4.0, 2.0) == 2.0  # closed interval at |x| = l/2
    assert thin_wall_box(-2.0, 4.0, 2.0) == 2.0
    assert thin_wall_box(2.0000001, 4.0, 2.0) == 0.0


def test_pair_converges_to_box_away_from_walls():
    b, l = 50.0, 2.0
    kp = KinkPairProfile(x_a=-1.0, x_b=1.0, b=b)
    margin = 10.0 / b
    xs = np.concatenate(
        [
            np.linspace(-3.0, -1.0 - margin, 200),
            np.linspace(-1.0 + margin, 1.0 - margin, 200),
            np.linspace(1.0 + margin, 3.0, 200),
        ]
    )
    worst = max(
        abs(kink_pair_profile(float(x), kp) - thin_wall_box(float(x), l, 2.0)) for x in xs
    )
    assert worst <= 1e-8


def test_ft_small_k_limit():
    for l in (1.0, 2.0, 10.0):
        assert thin_wall_ft(0.0, l) == pytest.approx(math.sqrt(2.0 / math.pi) * l / 2.0)
        assert thin_wall_ft(1e-13, l) == thin_wall_ft(0.0, l)


def test_ft_zeros_at_harmonics():
    l = 5.0
    for n in (1, 2, 3):
        k = TWO_PI * n / l
        assert abs(thin_wall_ft(k, l)) <= 1e-15


def test_ft_reference_value():
    assert thin_wall_ft(math.pi / 2.0, 2.0) == pytest.approx(FT_L2_K_HALF_PI, abs=1e-12)


def test_ft_matches_box_transform_quadrature():
    for l in (1.0, 2.0, 5.0, 10.0):
        for k in np.linspace(0.01, 20.0, 12):
            closed = thin_wall_ft(float(k), l)
            direct = thin_wall_ft_oracle(float(k), l, tol=1e-12)
            assert abs(closed - direct) <= 1e-6 * abs(closed)


def test_ft_oracle_agrees_with_generic_quadrature():
    # the fused oracle must be the same computation as integrate_adaptive
    k, l = 3.3, 4.0
    direct = integrate_adaptive(lambda x: math.cos(k * x), -l / 2, l / 2, 1e-12)
    assert thin_wall_ft_oracle(k, l, tol=1e-12) == pytest.approx(
        direct / math.sqrt(TWO_PI), rel=1e-12
    )


def test_norm_constant_small_alpha_limit():
    l = 3.0
    u_max = l / math.sqrt(TWO_PI)
    assert norm_constant(1e-12, l) == pytest.approx(u_max**-0.5, rel=1e-8)


def test_norm_constant_saturated_limit():
    alpha, l = 50.0, 10.0
    assert norm_constant(alpha, l) == pytest.approx(
        math.sqrt(2.0) * (2.0 * alpha / math.pi) ** 0.25, rel=1e-12
    )


def test_norm_constant_round_trip():
    for alpha in (0.1, 1.0, 10.0, 100.0):
        for l in (0.5, 5.0, 50.0):
            c = norm_constant(alpha, l)
            u_max = l / math.sqrt(TWO_PI)
            val = integrate_adaptive(
                lambda u: c * c * math.exp(-2.0 * alpha * u * u), 0.0, u_max, 1e-11
            )
            assert val == pytest.approx(1.0, abs=1e-8)


def test_norm_constant_rejects_bad_inputs():
    with pytest.raises(ValueError):
        norm_constant(0.0, 1.0)
    with pytest.raises(ValueError):
        norm_constant(1.0, -1.0)


def test_wavefunctional_peak_and_symmetry():
    spec = WavefunctionalSpec.normalized(1.0, 5.0, center=1.5)
    assert eval_wavefunctional(spec.center, spec) == spec.norm_c
    for d in (0.1, 0.5, 2.0):
        assert eval_wavefunctional(spec.center + d, spec) == eval_wavefunctional(
            spec.center - d, spec
        )
    assert eval_wavefunctional(spec.center + 1.0, spec) == pytest.approx(
        spec.norm_c * math.exp(-1.0), rel=1e-15
    )


def test_wavefunctional_maximized_at_center():
    spec = WavefunctionalSpec.normalized(0.7, 4.0, center=0.3)
    peak = eval_wavefunctional(spec.center, spec)
    rng = np.random.default_rng(31)
    for u in rng.uniform(-10, 10, size=300):
        if u != spec.center:
            assert eval_wavefunctional(float(u), spec) < peak


def test_transport_pair_specs():
    l = 7.0
    initial, final = transport_pair_specs(l)
    assert initial.alpha == final.alpha == pytest.approx(1.0 / l)
    assert initial.center == 0.0
    assert final.center == pytest.approx(TWO_PI + 1e-3)
    assert initial.u_max == pytest.approx(l / math.sqrt(TWO_PI))


def test_spec_validation():
    with pytest.raises(ValueError):
        WavefunctionalSpec(alpha=0.0, center=0.0, norm_c=1.0, u_max=1.0)
    with pytest.raises(ValueError):
        WavefunctionalSpec(alpha=1.0, center=0.0, norm_c=-1.0, u_max=1.0)
