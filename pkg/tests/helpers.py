"""Independent oracles shared by the test modules.

These re-derive results with plain loops over composed indices or dense
angle grids, deliberately avoiding the library's vectorized paths, so each
comparison is dual-route.
"""

import math
from functools import lru_cache
from itertools import product as iter_product

import numpy as np

from quditcorr import Factorization, MultiIndex, compose, decompose


def shannon_ref(values) -> float:
    """Plain-Python Shannon entropy in nats."""
    return -sum(v * math.log(v) for v in values if v > 0.0)


def all_coords(dims):
    """Every 1-based coordinate tuple over `dims` (any order)."""
    return iter_product(*[range(1, d + 1) for d in dims])


def brute_force_reduction(rho: np.ndarray, dims, s: int, keep: str) -> np.ndarray:
    """Partial trace by explicit summation over composed flat indices.

    keep='left' keeps axes 1..s and sums the rest; keep='right' mirrors it.
    """
    f = Factorization(tuple(dims))
    left_dims, right_dims = f.dims[:s], f.dims[s:]
    kept_dims = left_dims if keep == "left" else right_dims
    summed_dims = right_dims if keep == "left" else left_dims
    kept_f = Factorization(kept_dims)
    size = kept_f.total
    out = np.zeros((size, size), dtype=complex)
    for i in range(1, size + 1):
        a = decompose(i, kept_f).coords
        for k in range(1, size + 1):
            ap = decompose(k, kept_f).coords
            total = 0.0 + 0.0j
            for b in all_coords(summed_dims):
                if keep == "left":
                    y = compose(MultiIndex(a + b, f))
                    yp = compose(MultiIndex(ap + b, f))
                else:
                    y = compose(MultiIndex(b + a, f))
                    yp = compose(MultiIndex(b + ap, f))
                total += rho[y - 1, yp - 1]
            out[i - 1, k - 1] = total
    return out


def chsh_grid_oracle(t_matrix: np.ndarray, n_theta: int = 5, n_phi: int = 20):
    """Dense grid search over the first party's two measurement directions,
    with the second party's optimum taken in closed form.

    Returns (best value, number of direction pairs examined).
    """
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
    directions = np.array(
        [
            [math.sin(t) * math.cos(p), math.sin(t) * math.sin(p), math.cos(t)]
            for t in thetas
            for p in phis
        ]
    )
    mapped = directions @ t_matrix
    best = 0.0
    for row in mapped:
        combined = np.linalg.norm(row + mapped, axis=1) + np.linalg.norm(row - mapped, axis=1)
        best = max(best, float(combined.max()))
    return best, len(mapped) ** 2


@lru_cache(maxsize=None)
def ordered_factorizations(n: int) -> tuple:
    """All ordered tuples of factors >= 2 with product n (() for n = 1)."""
    if n == 1:
        return ((),)
    out = []
    for d in range(2, n + 1):
        if n % d == 0:
            out.extend((d,) + rest for rest in ordered_factorizations(n // d))
    return tuple(out)


def random_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Raw Ginibre density matrix (kept here so tests do not depend on the
    package's sampling module for oracle inputs)."""
    g = rng.standard_normal((dim, dim)) + 1.0j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m)
