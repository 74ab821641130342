"""Entropy kernels shared by the classical, quantum, and tomographic layers.

All functions take plain float arrays, use natural logarithms, treat
0*ln(0) as 0, and signal a diverging relative entropy with math.inf rather
than NaN so that inequality verdicts stay decidable.
"""

import math

import numpy as np


def shannon(values: np.ndarray) -> float:
    pos = values[values > 0.0]
    if pos.size == 0:
        return 0.0
    return float(-(pos * np.log(pos)).sum())


def tsallis(values: np.ndarray, q: float) -> float:
    pos = values[values > 0.0]
    total = float((pos**q).sum()) if pos.size else 0.0
    return (total - 1.0) / (1.0 - q)


def relative_shannon(p: np.ndarray, r: np.ndarray) -> float:
    mask = p > 0.0
    if not mask.any():
        return 0.0
    pm, rm = p[mask], r[mask]
    if (rm <= 0.0).any():
        return math.inf
    return float((pm * np.log(pm / rm)).sum())


def relative_tsallis(p: np.ndarray, r: np.ndarray, q: float) -> float:
    mask = p > 0.0
    if not mask.any():
        return 0.0
    pm, rm = p[mask], r[mask]
    if q > 1.0 and (rm <= 0.0).any():
        return math.inf
    # For q < 1 a vanishing reference weight contributes 0 (r**(1-q) -> 0).
    total = float((pm**q * rm ** (1.0 - q)).sum())
    return (total - 1.0) / (q - 1.0)
