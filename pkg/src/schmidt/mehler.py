"""Closed-form Schmidt spectrum of the symmetric double-Gaussian kernel.

At a 45 degree correlation angle the kernel is
exp(-alpha (w1 + w2)^2 - beta (w1 - w2)^2) with complex alpha when the pump is
chirped. Its reduced kernel is a Mehler kernel, so the Schmidt numbers fall off
geometrically: r_n = sqrt(1 - q) q^(n / 2).
"""

import math

import numpy as np

from schema.specs import PumpSpec


def mehler_ratio(alpha_real: float, alpha_imag: float, beta: float) -> float:
    """q = (r_{n+1} / r_n)^2 for exp(-(alpha_r + i alpha_i)(w1 + w2)^2 - beta (w1 - w2)^2)."""
    if alpha_real <= 0 or beta <= 0:
        raise ValueError("alpha_real and beta must be positive")
    s = alpha_real + beta
    c = ((alpha_real - beta) ** 2 + alpha_imag**2) / (2 * s)
    a_plus_c = s + alpha_imag**2 / s
    a_minus_c = 4 * alpha_real * beta / s
    a = 0.5 * (a_plus_c + a_minus_c)
    return c / (a + math.sqrt(a_minus_c * a_plus_c))


def gaussian_exponents(pump: PumpSpec, sigma_m: float) -> tuple[float, float, float]:
    """(alpha_r, alpha_i, beta) of the 45 degree kernel built by build_gaussian_jsf."""
    sigma_p_sq = pump.bandwidth_sigma_p**2
    return 1 / (4 * sigma_p_sq), -pump.chirp_coefficient / (2 * sigma_p_sq), 1 / (8 * sigma_m**2)


def gaussian_schmidt_spectrum(pump: PumpSpec, sigma_m: float, n_modes: int) -> np.ndarray:
    """First ``n_modes`` Schmidt numbers of the symmetric double-Gaussian kernel."""
    q = mehler_ratio(*gaussian_exponents(pump, sigma_m))
    n = np.arange(n_modes)
    return math.sqrt(1 - q) * q ** (n / 2)


def real_kernel_ratio(pump: PumpSpec, sigma_m: float) -> float:
    """r_{n+1} / r_n = |sqrt(beta) - sqrt(alpha)| / (sqrt(beta) + sqrt(alpha)) without chirp."""
    alpha, _, beta = gaussian_exponents(pump, sigma_m)
    return abs(math.sqrt(beta) - math.sqrt(alpha)) / (math.sqrt(beta) + math.sqrt(alpha))
