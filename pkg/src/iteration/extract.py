"""Feedback iteration: amplify, feed the output back as the next seed, repeat.

Repeated amplification suppresses every mode relative to the strongest one by
(cosh G_k / cosh G_1)^N, so the iterate settles onto the leading mode of the
seed's remaining span. Projecting out already-found modes after every step
walks down the gain ladder.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from amplifier.osa import linear_response, measure_spectrum
from amplifier.seeded import SeededAmplifier
from core.errors import DegenerateSeedError, EmptyFieldError
from iteration.feedback import reconstruct_real_field
from jsf.kernel import JointSpectralKernel
from schema.models import AttenuationPolicy, FeedbackMode
from schema.specs import IterationConfig
from schmidt.decomposition import SchmidtDecomposition, decompose
from spectral import SpectralField, gram_schmidt_project_out, inner_product, overlap

logger = logging.getLogger(__name__)

# relative gap below which two neighbouring gains cannot be told apart
DEGENERATE_GAIN_GAP = 1e-6
# step defects below this are rounding noise
DEFECT_FLOOR = 1e-20


@dataclass(eq=False)
class ModeExtractionResult:
    mode_index: int
    mode: SpectralField | None
    iterations_used: int
    overlap_history: np.ndarray
    power_gain: float
    converged: bool
    gain_history: np.ndarray = field(default_factory=lambda: np.zeros(0))
    degenerate: bool = False
    failure: str | None = None
    iterates: list[SpectralField] | None = None
    estimated_error: float = math.inf

    @property
    def gain(self) -> float:
        """Squeezing parameter G_k = arccosh(sqrt(power_gain)); 0 without excess gain."""
        return math.acosh(math.sqrt(self.power_gain)) if self.power_gain > 1 else 0.0

    @property
    def reliable(self) -> bool:
        return self.converged and not self.degenerate and self.failure is None


def _as_amplifier(source: SeededAmplifier | SchmidtDecomposition) -> SeededAmplifier:
    if isinstance(source, SeededAmplifier):
        return source
    return SeededAmplifier(source)


def default_seed(kernel: JointSpectralKernel) -> SpectralField:
    """Broadband Gaussian over the signal marginal, offset by half an rms width.

    The offset breaks parity so odd as well as even modes get a nonzero share.
    """
    grid = kernel.signal_grid
    marginal = kernel.signal_marginal()
    weight = marginal / marginal.sum()
    center = float(np.sum(weight * grid.omega))
    width = float(np.sqrt(np.sum(weight * (grid.omega - center) ** 2)))
    width = max(width, 2 * grid.d_omega)
    amplitudes = np.exp(-((grid.omega - center - 0.5 * width) ** 2) / (4 * width**2))
    return SpectralField(grid, amplitudes).normalized()


def step_defect(a: SpectralField, b: SpectralField) -> float:
    """1 - |<a, b>| of the normalized fields, as half the squared phase-aligned distance."""
    a_hat, b_hat = a.normalized(), b.normalized()
    product = inner_product(a_hat, b_hat)
    if product == 0:
        return 1.0
    return 0.5 * (b_hat - a_hat * (product / abs(product))).norm_squared()


def estimated_mode_error(defects: Sequence[float]) -> float:
    """Distance 1 - |<a_N, mode>| still left, extrapolated from the step defects.

    Near the limit the defects shrink by rho^2 per step, rho being the contraction
    ratio, and the remaining distance is about defect / (1 - rho)^2. The larger of
    the last two defect ratios stands in for rho^2.
    """
    if not defects:
        return math.inf
    last = defects[-1]
    if last < DEFECT_FLOOR:
        return last
    if len(defects) < 3 or min(defects[-3:-1]) <= 0:
        return math.inf
    rho_squared = max(defects[-1] / defects[-2], defects[-2] / defects[-3])
    if rho_squared >= 1.0:
        return math.inf
    return last / (1.0 - math.sqrt(rho_squared)) ** 2


def _feedback(signal: SpectralField, cfg: IterationConfig) -> SpectralField:
    if cfg.feedback_mode == FeedbackMode.FULL_COMPLEX:
        return signal
    response = (
        linear_response(signal.grid, cfg.detector_tilt) if cfg.detector_tilt != 0 else None
    )
    spectrum = measure_spectrum(
        signal,
        noise_floor=cfg.noise_floor,
        response=response,
        resolution_bins=cfg.osa_resolution_bins,
    )
    return reconstruct_real_field(signal.grid, spectrum, cfg.zero_detection_threshold)


def extract_mode(
    source: SeededAmplifier | SchmidtDecomposition,
    k: int,
    known_modes: Sequence[SpectralField],
    seed: SpectralField,
    cfg: IterationConfig,
) -> ModeExtractionResult:
    """Extract the k-th mode given the k - 1 modes found before it.

    Raises DegenerateSeedError when the seed has no component outside the span
    of ``known_modes``. Running out of iterations is not an error: the result
    comes back with ``converged=False``.
    """
    amplifier = _as_amplifier(source)
    projection = gram_schmidt_project_out(seed, known_modes, floor=cfg.degenerate_floor)
    if projection.degenerate:
        raise DegenerateSeedError(
            f"seed for mode {k} lies in the span of the {len(known_modes)} known modes "
            f"(remainder {projection.remainder_norm:.3e})"
        )

    if cfg.attenuation_policy == AttenuationPolicy.DIVIDE_BY_COSH_G1:
        attenuation = cfg.cosh_g1 if cfg.cosh_g1 is not None else amplifier.cosh_g1
    else:
        attenuation = None

    current = projection.remainder.normalized()
    overlaps: list[float] = []
    defects: list[float] = []
    gains: list[float] = []
    estimated_error = math.inf
    iterates = [current] if cfg.record_iterates else None
    converged = False
    failure = None

    for step in range(1, cfg.max_iterations + 1):
        output = amplifier.amplify(current)
        gains.append(output.power_gain_total)
        fed_back = _feedback(output.signal_out, cfg)
        if attenuation is None:
            try:
                fed_back = fed_back.normalized()
            except EmptyFieldError:
                failure = "feedback field vanished"
                break
        else:
            fed_back = fed_back / attenuation

        projection = gram_schmidt_project_out(fed_back, known_modes, floor=cfg.degenerate_floor)
        if projection.degenerate:
            failure = "iterate collapsed into the span of known modes"
            logger.warning(f"Mode {k}: {failure} at step {step}")
            break
        following = projection.remainder
        if attenuation is None:
            following = following.normalized()

        step_overlap = overlap(current, following)
        overlaps.append(step_overlap)
        defects.append(step_defect(current, following))
        estimated_error = estimated_mode_error(defects)
        logger.debug(
            f"Mode {k} step {step}: overlap {step_overlap:.12f}, "
            f"estimated error {estimated_error:.3e}, gain {gains[-1]:.8f}"
        )
        current = following
        if iterates is not None:
            iterates.append(current.normalized())
        # both the step agreement and the extrapolated distance to the mode must pass
        if step_overlap > cfg.overlap_target and estimated_error < 1.0 - cfg.overlap_target:
            converged = True
            break

    power_gain = gains[-1] if gains else 1.0
    mode = current.normalized() if failure is None else None
    degenerate = power_gain - 1.0 < cfg.min_excess_gain
    history = np.asarray(overlaps)
    if history.size > 2 and np.any(np.diff(history[1:]) < -1e-12):
        logger.debug(f"Mode {k}: overlap history is not monotone after the first step")

    if not converged:
        logger.warning(
            f"Mode {k} did not converge in {len(gains)} steps "
            f"(last overlap {overlaps[-1] if overlaps else float('nan'):.3e})"
        )
    elif degenerate:
        logger.warning(f"Mode {k}: power gain {power_gain:.8f} is indistinguishable from 1")
    else:
        logger.info(
            f"Mode {k} converged in {len(gains)} steps, power gain {power_gain:.6f}, "
            f"estimated error {estimated_error:.1e}"
        )

    return ModeExtractionResult(
        mode_index=k,
        mode=mode,
        iterations_used=len(gains),
        overlap_history=history,
        power_gain=power_gain,
        converged=converged,
        gain_history=np.asarray(gains),
        degenerate=degenerate,
        failure=failure,
        iterates=iterates,
        estimated_error=estimated_error,
    )


def extract_all_modes(
    source: JointSpectralKernel | SeededAmplifier,
    K: int,
    cfg: IterationConfig,
    seed: SpectralField | None = None,
) -> list[ModeExtractionResult]:
    """Extract K modes in sequence, deflating each new seed against the modes found so far.

    A failure does not abort the run: the failing order and every later one come
    back with ``failure`` set.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if isinstance(source, JointSpectralKernel):
        amplifier = SeededAmplifier(decompose(source))
        seed = default_seed(source) if seed is None else seed
    else:
        amplifier = source
        if seed is None:
            raise ValueError("a seed is required when passing an amplifier")

    results: list[ModeExtractionResult] = []
    known: list[SpectralField] = []
    for k in range(1, K + 1):
        try:
            result = extract_mode(amplifier, k, known, seed, cfg)
        except DegenerateSeedError as exc:
            logger.warning(f"Stopping at mode {k}: {exc}")
            results.extend(_failed(order, str(exc)) for order in range(k, K + 1))
            break
        results.append(result)
        if result.mode is None:
            reason = f"mode {k} failed: {result.failure}"
            results.extend(_failed(order, reason) for order in range(k + 1, K + 1))
            break
        known.append(result.mode)

    _flag_gain_degeneracies(results)
    ordered = sorted(results, key=lambda r: r.power_gain, reverse=True)
    if [r.mode_index for r in ordered] != [r.mode_index for r in results]:
        logger.warning("Extracted power gains are out of order; results were re-sorted")
    return ordered


def _failed(order: int, reason: str) -> ModeExtractionResult:
    return ModeExtractionResult(
        mode_index=order,
        mode=None,
        iterations_used=0,
        overlap_history=np.zeros(0),
        power_gain=1.0,
        converged=False,
        degenerate=True,
        failure=reason,
    )


def _flag_gain_degeneracies(results: list[ModeExtractionResult]) -> None:
    for first, second in zip(results, results[1:], strict=False):
        if first.mode is None or second.mode is None:
            continue
        g1, g2 = first.gain, second.gain
        if g1 > 0 and abs(g1 - g2) / g1 < DEGENERATE_GAIN_GAP:
            first.degenerate = second.degenerate = True
            logger.warning(
                f"Modes {first.mode_index} and {second.mode_index} have equal gains; "
                "only their joint subspace is meaningful"
            )


def mode_numbers_from_gains(power_gains: Sequence[float]) -> np.ndarray:
    """r_k / r_1 = arccosh(sqrt(g_k)) / arccosh(sqrt(g_1))."""
    gains = gains_from_power_gains(power_gains)
    return gains / gains[0]


def gains_from_power_gains(power_gains: Sequence[float]) -> np.ndarray:
    """G_k = arccosh(sqrt(g_k)); a gain at or below unity carries no information."""
    values = np.asarray(power_gains, dtype=float)
    if values.size == 0:
        raise ValueError("no power gains given")
    if np.any(values <= 1.0):
        raise ValueError(
            f"power gains must exceed 1, got {values.tolist()}: the pump is too weak "
            "for the modes to be told apart"
        )
    return np.arccosh(np.sqrt(values))


def extract_mode_numbers(results: Sequence[ModeExtractionResult]) -> np.ndarray:
    """Mode numbers r_k / r_1 from extracted power gains."""
    for result in results:
        if not result.converged:
            raise ValueError(f"mode {result.mode_index} did not converge")
    ratios = mode_numbers_from_gains([r.power_gain for r in results])
    ratios[0] = 1.0
    return ratios
