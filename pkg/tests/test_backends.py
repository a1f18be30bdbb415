"""Compiled and pure kernel backends must be numerically interchangeable."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from cdwtunnel import _purekernels as pure

fast = pytest.importorskip("cdwtunnel._fastkernels")


def test_backend_names():
    assert pure.BACKEND_NAME == "pure"
    assert fast.BACKEND_NAME == "compiled"


def test_erf_bitwise_agreement():
    rng = np.random.default_rng(101)
    for x in rng.uniform(-8.0, 8.0, size=5000):
        assert pure.erf(float(x)) == fast.erf(float(x))


def test_scalar_kernels_agree():
    rng = np.random.default_rng(103)
    for _ in range(500):
        phi, c1, c2, phi0 = rng.uniform(-5, 5, size=4)
        assert pure.extended_potential(phi, c1, c2, phi0) == fast.extended_potential(
            phi, c1, c2, phi0
        )
        d1, d2 = rng.uniform(0, 100, size=2)
        assert pure.driven_sg_potential(phi, d1, d2) == fast.driven_sg_potential(phi, d1, d2)
        x, xa, b = rng.uniform(-4, 4, size=3)
        xb = xa + abs(rng.uniform(0.5, 5))
        bb = abs(b) + 0.1
        assert pure.kink_pair_value(x, xa, xb, bb) == fast.kink_pair_value(x, xa, xb, bb)
        k = rng.uniform(-20, 20)
        l = abs(rng.uniform(0.5, 10))
        assert pure.thin_wall_ft(k, l) == fast.thin_wall_ft(k, l)
        alpha = abs(rng.uniform(0.1, 50))
        assert pure.norm_constant(alpha, l) == fast.norm_constant(alpha, l)


def test_matrix_element_kernels_agree():
    rng = np.random.default_rng(107)
    for _ in range(300):
        x_bar = float(rng.uniform(0.1, 10))
        l = float(rng.uniform(0.5, 30))
        alpha = float(rng.uniform(0.02, 2))
        n1 = float(rng.uniform(0.5, 1.0))
        c1n, c2n, m = rng.uniform(0.1, 5, size=3)
        assert pure.t_if_analytic(x_bar, l, alpha, n1, c1n, c2n, m) == fast.t_if_analytic(
            x_bar, l, alpha, n1, c1n, c2n, m
        )
        assert pure.t_if_simplified(x_bar, l, alpha, c1n, c2n, m) == fast.t_if_simplified(
            x_bar, l, alpha, c1n, c2n, m
        )


def test_current_kernels_agree():
    rng = np.random.default_rng(109)
    for _ in range(500):
        e = float(rng.uniform(0.01, 100))
        e_t, c_v, ct1, g_p = rng.uniform(0.2, 3, size=4)
        for sub in (False, True):
            assert pure.current_sge(e, e_t, c_v, ct1, sub) == fast.current_sge(e, e_t, c_v, ct1, sub)
            assert pure.current_sge_log(e, e_t, c_v, ct1, sub) == fast.current_sge_log(
                e, e_t, c_v, ct1, sub
            )
        assert pure.current_zener(e, e_t, g_p) == fast.current_zener(e, e_t, g_p)


def test_quadrature_agrees_and_raises_alike():
    for f, a, b in [(math.sin, 0.0, math.pi), (lambda x: math.exp(-2 * x * x), 0.0, 3.0)]:
        assert pure.integrate_adaptive(f, a, b, 1e-12) == pytest.approx(
            fast.integrate_adaptive(f, a, b, 1e-12), rel=1e-14, abs=1e-15
        )
    for mod in (pure, fast):
        with pytest.raises(mod.QuadratureError):
            mod.integrate_adaptive(lambda x: math.sin(1e6 * x), 0.0, 3.0, 1e-14, 6)


def test_fused_oracles_agree():
    for k in (0.01, 1.7, 19.5):
        for l in (1.0, 5.0):
            assert pure.box_ft_quadrature(k, l, 1e-12) == pytest.approx(
                fast.box_ft_quadrature(k, l, 1e-12), rel=1e-13, abs=1e-16
            )
    args = (1.1, 0.2, 0.0, 1.3, 0.25, 6.28, 3.14, 1.0, 20.0, 1e-11)
    assert pure.gaussian_overlap_current(*args) == pytest.approx(
        fast.gaussian_overlap_current(*args), rel=1e-12
    )


def test_env_var_selects_backend():
    for requested, want in (("pure", "pure"), ("compiled", "compiled"), ("auto", "compiled")):
        proc = subprocess.run(
            [sys.executable, "-c", "import cdwtunnel; print(cdwtunnel.BACKEND)"],
            capture_output=True,
            text=True,
            env={**os.environ, "CDWTUNNEL_BACKEND": requested},
        )
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout.strip() == want


def test_unknown_backend_is_an_import_error():
    proc = subprocess.run(
        [sys.executable, "-c", "import cdwtunnel"],
        capture_output=True,
        text=True,
        env={**os.environ, "CDWTUNNEL_BACKEND": "gpu"},
    )
    assert proc.returncode != 0
    assert "CDWTUNNEL_BACKEND" in proc.stderr
