import sys
from pathlib import Path

import numpy as np
from dotenv import load_dotenv

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from jsf import build_gaussian_jsf  # noqa: E402
from schema import PumpSpec  # noqa: E402
from schmidt import decompose  # noqa: E402
from schmidt.mehler import gaussian_schmidt_spectrum  # noqa: E402
from spectral import FrequencyGrid  # noqa: E402

load_dotenv()


def check_mehler(
    chirps: tuple[float, ...] = (0.0, 0.5, 1.0, 2.0),
    sigma_m: float = 1.0,
    n_points: int = 256,
    half_span: float = 8.0,
    n_modes: int = 4,
) -> float:
    """Compare numerical Schmidt numbers with the closed form; returns the worst deviation."""
    grid = FrequencyGrid(-half_span, half_span, n_points)
    worst = 0.0
    for chirp in chirps:
        pump = PumpSpec(chirp_coefficient=chirp)
        kernel = build_gaussian_jsf(pump, np.pi / 4, 1.0, grid, grid, sigma_m)
        numeric = decompose(kernel).spectrum[:n_modes]
        analytic = gaussian_schmidt_spectrum(pump, sigma_m, n_modes)
        deviation = float(np.max(np.abs(numeric - analytic)))
        worst = max(worst, deviation)
        print(f"chirp {chirp:4.1f}: numeric {np.round(numeric, 4).tolist()}")
        print(f"            analytic {np.round(analytic, 4).tolist()}  max dev {deviation:.2e}")
    return worst


if __name__ == "__main__":
    worst = check_mehler()
    print(f"Worst deviation: {worst:.2e}")
    sys.exit(0 if worst < 1e-4 else 1)
