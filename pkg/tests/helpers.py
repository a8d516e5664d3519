import numpy as np


def rel_err(got, expected) -> float:
    """Max-entry error relative to the max entry of ``expected``."""
    got = np.asarray(got, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    return float(np.max(np.abs(got - expected)) / max(float(np.max(np.abs(expected))), 1e-300))
