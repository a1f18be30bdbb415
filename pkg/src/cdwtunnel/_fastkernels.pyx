# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled scalar kernels; function-for-function twin of ``_purekernels``.

Both backends run the same arithmetic in the same order, so results agree
to the last bit wherever libm does.
"""

from libc.math cimport cos, cosh, exp, fabs, log, log1p, sin, sqrt, tanh, INFINITY

import math

BACKEND_NAME = "compiled"

cdef double _TWO_OVER_SQRT_PI = 2.0 / sqrt(math.pi)
cdef double _SQRT_TWO_OVER_PI = sqrt(2.0 / math.pi)
cdef double _SQRT_PI = sqrt(math.pi)
cdef double _PI = math.pi
cdef double _COSH_DIRECT_LIMIT = 35.0
cdef double _LN2 = log(2.0)


class QuadratureError(RuntimeError):
    """Adaptive quadrature hit its refinement depth limit before converging."""


# ---------------------------------------------------------------------------
# error function
# ---------------------------------------------------------------------------

cdef double _erf_c(double x):
    cdef double ax, term, total, new, val
    cdef int n
    if x != x:
        return x
    ax = fabs(x)
    if ax == 0.0:
        return 0.0
    if ax <= 3.0:
        term = ax
        total = ax
        n = 0
        while True:
            n += 1
            term *= 2.0 * ax * ax / (2.0 * n + 1.0)
            new = total + term
            if new == total:
                break
            total = new
        val = _TWO_OVER_SQRT_PI * exp(-ax * ax) * total
        if val > 1.0:
            val = 1.0
    else:
        val = 1.0 - _erfc_cf(ax)
    return -val if x < 0.0 else val


cdef double _erfc_cf(double x):
    cdef double tiny = 1e-300
    cdef double f, c, d, a, delta, ex
    cdef int n
    f = x if x != 0.0 else tiny
    c = f
    d = 0.0
    n = 0
    while n < 300:
        n += 1
        a = 0.5 * n
        d = x + a * d
        if d == 0.0:
            d = tiny
        c = x + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if fabs(delta - 1.0) < 1e-17:
            break
    ex = exp(-x * x) if x < 26.0 else 0.0
    return ex / (_SQRT_PI * f)


def erf(double x):
    """Error function via Maclaurin series (|x| <= 3) / continued fraction."""
    return _erf_c(x)


# ---------------------------------------------------------------------------
# adaptive Simpson quadrature (generic Python callback)
# ---------------------------------------------------------------------------

cdef double _simpson_rec(f, double a, double fa, double b, double fb,
                         double m, double fm, double whole, double tol,
                         int depth) except? -1e308:
    cdef double lm = 0.5 * (a + m)
    cdef double flm = f(lm)
    cdef double rm = 0.5 * (m + b)
    cdef double frm = f(rm)
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double delta = left + right - whole
    if fabs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureError(
            "refinement depth limit reached on [%g, %g] (residual %g > %g)"
            % (a, b, fabs(delta) / 15.0, tol)
        )
    cdef double half = 0.5 * tol
    return _simpson_rec(f, a, fa, m, fm, lm, flm, left, half, depth - 1) + \
        _simpson_rec(f, m, fm, b, fb, rm, frm, right, half, depth - 1)


def integrate_adaptive(f, double a, double b, double tol, int max_depth=48):
    """Integral of ``f`` on [a, b] by adaptive Simpson bisection."""
    if not (a <= b):
        raise ValueError("integration bounds must satisfy a <= b")
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    if a == b:
        return 0.0
    cdef double fa = f(a)
    cdef double fb = f(b)
    cdef double m = 0.5 * (a + b)
    cdef double fm = f(m)
    cdef double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth)


# ---------------------------------------------------------------------------
# fused quadrature oracles (integrand evaluated at C level)
# ---------------------------------------------------------------------------

cdef double _cos_kx(double x, double k):
    return cos(k * x)


cdef double _simpson_rec_cos(double k, double a, double fa, double b, double fb,
                             double m, double fm, double whole, double tol,
                             int depth) except? -1e308:
    cdef double lm = 0.5 * (a + m)
    cdef double flm = _cos_kx(lm, k)
    cdef double rm = 0.5 * (m + b)
    cdef double frm = _cos_kx(rm, k)
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double delta = left + right - whole
    if fabs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureError("refinement depth limit reached in box transform")
    cdef double half = 0.5 * tol
    return _simpson_rec_cos(k, a, fa, m, fm, lm, flm, left, half, depth - 1) + \
        _simpson_rec_cos(k, m, fm, b, fb, rm, frm, right, half, depth - 1)


def box_ft_quadrature(double k, double l, double tol):
    """Cosine-transform oracle for the unit-height box of width ``l``."""
    cdef double a = -0.5 * l
    cdef double b = 0.5 * l
    cdef double fa = _cos_kx(a, k)
    cdef double fb = _cos_kx(b, k)
    cdef double m = 0.5 * (a + b)
    cdef double fm = _cos_kx(m, k)
    cdef double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    cdef double val = _simpson_rec_cos(k, a, fa, b, fb, m, fm, whole, tol, 48)
    return val / sqrt(2.0 * _PI)


cdef double _overlap_integrand(double u, double ci, double ai, double mi,
                               double cf, double af, double mf):
    cdef double di = u - mi
    cdef double df = u - mf
    cdef double pi_ = ci * exp(-ai * di * di)
    cdef double pf = cf * exp(-af * df * df)
    cdef double ppi = pi_ * (4.0 * ai * ai * di * di - 2.0 * ai)
    cdef double ppf = pf * (4.0 * af * af * df * df - 2.0 * af)
    return pi_ * ppf - pf * ppi


cdef double _simpson_rec_overlap(double ci, double ai, double mi, double cf,
                                 double af, double mf, double a, double fa,
                                 double b, double fb, double m, double fm,
                                 double whole, double tol, int depth) except? -1e308:
    cdef double lm = 0.5 * (a + m)
    cdef double flm = _overlap_integrand(lm, ci, ai, mi, cf, af, mf)
    cdef double rm = 0.5 * (m + b)
    cdef double frm = _overlap_integrand(rm, ci, ai, mi, cf, af, mf)
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double delta = left + right - whole
    if fabs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise QuadratureError("refinement depth limit reached in overlap oracle")
    cdef double half = 0.5 * tol
    return _simpson_rec_overlap(ci, ai, mi, cf, af, mf, a, fa, m, fm, lm, flm,
                                left, half, depth - 1) + \
        _simpson_rec_overlap(ci, ai, mi, cf, af, mf, m, fm, b, fb, rm, frm,
                             right, half, depth - 1)


def gaussian_overlap_current(double ci, double ai, double mi, double cf,
                             double af, double mf, double u0, double m_star,
                             double hi, double tol):
    """|T| for two Gaussian collective-coordinate states by quadrature."""
    cdef double fa = _overlap_integrand(u0, ci, ai, mi, cf, af, mf)
    cdef double fb = _overlap_integrand(hi, ci, ai, mi, cf, af, mf)
    cdef double m = 0.5 * (u0 + hi)
    cdef double fm = _overlap_integrand(m, ci, ai, mi, cf, af, mf)
    cdef double whole = (hi - u0) / 6.0 * (fa + 4.0 * fm + fb)
    cdef double val = _simpson_rec_overlap(ci, ai, mi, cf, af, mf, u0, fa, hi,
                                           fb, m, fm, whole, tol, 48)
    return fabs(val) / (2.0 * m_star)


# ---------------------------------------------------------------------------
# potential-energy kernels
# ---------------------------------------------------------------------------

def extended_potential(double phi, double c1, double c2, double phi0):
    """C1 (phi-phi0)^2 - 4 C2 phi phi0 (phi-phi0)^2 + C2 (phi^2-phi0^2)^2."""
    cdef double d = phi - phi0
    cdef double s = phi * phi - phi0 * phi0
    return c1 * d * d - 4.0 * c2 * phi * phi0 * d * d + c2 * s * s


def driven_sg_potential(double phi, double d1, double d2):
    """D1 (1 - cos phi) + D2 phi^2."""
    return d1 * (1.0 - cos(phi)) + d2 * phi * phi


def hamiltonian_density(double phi, double pi, double dphi_dx, double mu,
                        double varphi, double i0):
    """pi^2/2 + (d_x phi)^2/2 + mu^2 (phi - varphi)^2/2 - I0/2."""
    cdef double d = phi - varphi
    return 0.5 * (pi * pi + dphi_dx * dphi_dx + mu * mu * d * d - i0)


# ---------------------------------------------------------------------------
# profile / wavefunctional kernels
# ---------------------------------------------------------------------------

def kink_pair_value(double x, double x_a, double x_b, double b):
    """tanh(b (x - x_a)) + tanh(b (x_b - x))."""
    return tanh(b * (x - x_a)) + tanh(b * (x_b - x))


def thin_wall_ft(double k, double l):
    """sqrt(2/pi) sin(k l / 2) / k, with the k -> 0 limit sqrt(2/pi) l / 2."""
    if fabs(k) < 1e-12:
        return _SQRT_TWO_OVER_PI * 0.5 * l
    return _SQRT_TWO_OVER_PI * sin(0.5 * k * l) / k


def norm_constant(double alpha, double l):
    """Constant C making the one-sided Gaussian integral unity."""
    cdef double u_max = l / sqrt(2.0 * _PI)
    cdef double a = 2.0 * alpha
    cdef double integral = 0.5 * sqrt(_PI / a) * _erf_c(u_max * sqrt(a))
    return 1.0 / sqrt(integral)


# ---------------------------------------------------------------------------
# tunneling matrix elements
# ---------------------------------------------------------------------------

cdef double _cosh_times_exp(double arg, double expo):
    cdef double a = fabs(arg)
    cdef double t
    if a <= _COSH_DIRECT_LIMIT:
        return cosh(arg) * exp(expo)
    t = a + expo - _LN2
    if t > 709.0:
        return INFINITY
    return exp(t)


def t_if_analytic(double x_bar, double l, double alpha, double n1,
                  double c1n, double c2n, double m_star):
    """Full matrix-element magnitude, occupation factor n1 kept everywhere."""
    cdef double n1sq = n1 * n1
    cdef double pref = (2.0 / (2.0 * m_star)) * (n1sq - 0.5 * n1sq * n1sq) * c1n * c2n
    cdef double arg = 2.0 * sqrt(x_bar / (2.0 * l)) - sqrt(l / (2.0 * x_bar))
    cdef double expo = -alpha * l * (n1sq * (l / (2.0 * x_bar)))
    return pref * _cosh_times_exp(arg, expo)


def t_if_simplified(double x_bar, double l, double alpha, double c1n,
                    double c2n, double m_star):
    """Reduced matrix-element magnitude (n1 -> 1 with a dropped factor 2)."""
    cdef double pref = c1n * c2n / m_star
    cdef double arg = 2.0 * sqrt(x_bar / (2.0 * l)) - sqrt(l / (2.0 * x_bar))
    cdef double expo = -alpha * l * (l / (2.0 * x_bar))
    return pref * _cosh_times_exp(arg, expo)


# ---------------------------------------------------------------------------
# current laws
# ---------------------------------------------------------------------------

cdef (double, double) _sge_arg_expo(double e, double e_t, double c_v,
                                    bint substituted):
    cdef double chi = e_t * c_v / e
    cdef double arg, expo
    if substituted:
        arg = sqrt(2.0 / chi) - sqrt(0.5 * chi)
        expo = -0.5 * chi
    else:
        arg = sqrt(2.0 / chi) - sqrt(chi)
        expo = -chi
    return arg, expo


def current_sge(double e, double e_t, double c_v, double c_tilde1,
                bint substituted):
    """Soliton-pair current; overflow-safe (inf / 0.0 at the range ends)."""
    cdef double arg, expo
    arg, expo = _sge_arg_expo(e, e_t, c_v, substituted)
    return c_tilde1 * _cosh_times_exp(arg, expo)


def current_sge_log(double e, double e_t, double c_v, double c_tilde1,
                    bint substituted):
    """ln of current_sge, usable far outside double-precision range."""
    cdef double arg, expo, a
    arg, expo = _sge_arg_expo(e, e_t, c_v, substituted)
    a = fabs(arg)
    return log(c_tilde1) + a + log1p(exp(-2.0 * a)) - _LN2 + expo


def current_zener(double e, double e_t, double g_p):
    """Phenomenological depinning law G_p (E - E_T) e^(-E_T/E) above threshold."""
    if e <= e_t:
        return 0.0
    return g_p * (e - e_t) * exp(-e_t / e)
