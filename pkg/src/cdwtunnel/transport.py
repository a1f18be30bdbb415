"""Field-to-geometry maps and the two current-vs-field laws.

``current_sge`` is the soliton-pair law as printed, with chi = E_T c_v / E:

    I = C~1 cosh(sqrt(2E/(E_T c_v)) - sqrt(chi)) exp(-chi)

Back-substituting the pair geometry into the matrix element instead yields
exp(-chi/2) and sqrt(chi/2); since c_v exists to absorb such bookkeeping,
both conventions are exposed through ``convention`` and the printed form is
the default.  The printed law is ungated below threshold (it carries no
threshold clause); the Zener law is zero at and below E_T.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels

__all__ = [
    "CurveSeries",
    "TransportParams",
    "curve_series",
    "current_sge",
    "current_sge_log",
    "current_zener",
    "l_over_x",
    "pair_separation",
    "reference_displacement",
    "sge_from_matrix_element_form",
    "tunneling_onset",
]

CONVENTIONS = ("printed", "substituted")
MODELS = ("sge", "zener")


@dataclass(frozen=True)
class TransportParams:
    """Threshold, amplitudes and microscopic constants of the current laws."""

    e_t: float = 1.0
    c_v: float = 1.0
    c_tilde1: float = 1.0
    g_p: float = 1.0
    delta_s: float = 1.0
    e_star: float = 1.0
    eps_g: float = 1.0
    m_e: float = 1.0
    omega: float = 1.0
    e_charge: float = 1.0

    def __post_init__(self):
        for name in ("e_t", "c_v", "c_tilde1", "g_p", "delta_s", "e_star", "m_e", "omega", "e_charge"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be positive and finite")
        if not (math.isfinite(self.eps_g) and self.eps_g >= 0.0):
            raise ValueError("eps_g must be non-negative and finite")


class CurveSeries:
    """Sampled (E, I) curve with strictly increasing positive fields."""

    def __init__(self, es, currents, label):
        es = np.asarray(es, dtype=float)
        currents = np.asarray(currents, dtype=float)
        if es.ndim != 1 or currents.ndim != 1 or es.size != currents.size:
            raise ValueError("es and currents must be 1-D arrays of equal length")
        if es.size == 0:
            raise ValueError("series must not be empty")
        if not (np.all(es > 0.0) and np.all(np.diff(es) > 0.0)):
            raise ValueError("fields must be positive and strictly increasing")
        if not np.all(np.isfinite(currents)) or np.any(currents < 0.0):
            raise ValueError("currents must be finite and non-negative")
        self.es = es
        self.currents = currents
        self.label = str(label)

    def __len__(self):
        return self.es.size

    def points(self):
        return list(zip(self.es.tolist(), self.currents.tolist()))


def _check_field(e):
    if not e > 0.0:
        raise ValueError("field E must be positive")


def pair_separation(e, tp):
    """Pair separation (2 Delta_s / e*) / E; L is inversely proportional to E."""
    _check_field(e)
    return (2.0 * tp.delta_s / tp.e_star) * (1.0 / e)


def tunneling_onset(e, tp):
    """Literal onset inequality e* E L(E) > eps_G.

    Because L(E) = (2 Delta_s/e*)/E, the product e* E L collapses to
    2 Delta_s and the outcome is independent of E; the literal inequality
    is evaluated anyway.
    """
    _check_field(e)
    return tp.e_star * e * pair_separation(e, tp) > tp.eps_g


def reference_displacement(e, tp):
    """Harmonic observer point e_charge E / (m omega^2)."""
    _check_field(e)
    return tp.e_charge * e / (tp.m_e * tp.omega**2)


def l_over_x(e, tp):
    """Separation-to-observer ratio c_v E_T / E."""
    _check_field(e)
    return tp.c_v * tp.e_t / e


def current_sge(e, tp, convention="printed"):
    """Soliton-pair current at field e; see module docs for the convention flag."""
    _check_field(e)
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    return kernels.current_sge(float(e), tp.e_t, tp.c_v, tp.c_tilde1, convention == "substituted")


def current_sge_log(e, tp, convention="printed"):
    """ln of current_sge; stable where the current itself over/underflows."""
    _check_field(e)
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    return kernels.current_sge_log(float(e), tp.e_t, tp.c_v, tp.c_tilde1, convention == "substituted")


def current_zener(e, tp):
    """Zener law G_p (E - E_T) e^(-E_T/E) for E > E_T, else 0."""
    _check_field(e)
    return kernels.current_zener(float(e), tp.e_t, tp.g_p)


def sge_from_matrix_element_form(e, tp):
    """Printed current law re-assembled from the matrix-element form.

    The matrix-element magnitude reads cosh(2 sqrt(x/2L) - sqrt(L/2x))
    * exp(-aL L/(2x)) with aL = 1.  The printed law follows by absorbing
    the factor 2 into c_v exactly where the 1/2 sits next to the observer
    point: the exponent and second cosh term use L/(2x) := c_v E_T / E,
    while the first cosh term keeps the literal ratio L/x := c_v E_T / E.
    Agreeing with ``current_sge`` to rounding is the reconciliation check.
    """
    _check_field(e)
    chi = tp.c_v * tp.e_t / e
    first = 2.0 * math.sqrt(1.0 / (2.0 * chi))
    second = math.sqrt((2.0 * chi) / 2.0)
    expo = -1.0 * ((2.0 * chi) / 2.0)
    return tp.c_tilde1 * math.cosh(first - second) * math.exp(expo)


def curve_series(model, tp, e_grid, convention="printed"):
    """Evaluate the selected current law pointwise on a strictly increasing grid."""
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")
    es = np.asarray(e_grid, dtype=float)
    if es.ndim != 1 or es.size == 0:
        raise ValueError("e_grid must be a non-empty 1-D array")
    if not (np.all(es > 0.0) and np.all(np.diff(es) > 0.0)):
        raise ValueError("e_grid must be positive and strictly increasing")
    if model == "sge":
        vals = [current_sge(float(e), tp, convention) for e in es]
    else:
        vals = [current_zener(float(e), tp) for e in es]
    return CurveSeries(es, vals, label=model)
