from amplifier.osa import linear_response, measure_spectrum
from amplifier.seeded import SeededAmplifier, SeededOutput, amplify_seed

__all__ = [
    "SeededAmplifier",
    "SeededOutput",
    "amplify_seed",
    "linear_response",
    "measure_spectrum",
]
