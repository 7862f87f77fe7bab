"""
Independent reference computations used to check the library.

Nothing here calls into the code paths it checks: the DFT is a direct
double sum, sine/cosine vectors come from least squares, extrema from a
dense grid.
"""

import math

import numpy as np


def direct_dft(x, sign=-1):
    """Literal ``M^-1/2 sum_m x[m] exp(sign * 2 pi i m u / M)`` with Python loops."""
    x = [complex(v) for v in x]
    m = len(x)
    out = []
    for u in range(m):
        acc = 0j
        for k, v in enumerate(x):
            acc += v * complex(math.cos(2 * math.pi * k * u / m), sign * math.sin(2 * math.pi * k * u / m))
        out.append(acc / math.sqrt(m))
    return np.array(out)


def superposition(directions, phases, omega, t):
    """Sum of ``n_i sin(omega t + phi_i)`` evaluated column by column."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.zeros((t.size, len(directions[0])))
    for n, phi in zip(directions, phases):
        for j, nj in enumerate(n):
            out[:, j] += nj * np.sin(omega * t + phi)
    return out


def lstsq_sin_cos(samples, omega):
    """
    Fit ``samples[m] ~ c sin(omega m) + s cos(omega m)`` by least squares.

    Returns ``(c, s)``. Exact for a pure on-bin tone.
    """
    samples = np.asarray(samples, dtype=float)
    m = np.arange(samples.shape[0], dtype=float)
    design = np.column_stack([np.sin(omega * m), np.cos(omega * m)])
    coef, *_ = np.linalg.lstsq(design, samples, rcond=None)
    return coef[0], coef[1]


def grid_extrema(c, s, n_grid=100_000):
    """Max and min of ``|c sin(tau) + s cos(tau)|`` over a uniform grid of one period."""
    tau = np.arange(n_grid) * (2 * math.pi / n_grid)
    f = np.outer(np.sin(tau), c) + np.outer(np.cos(tau), s)
    r = np.linalg.norm(f, axis=1)
    return float(r.max()), float(r.min())


def random_terms(rng, k, n, omega=None):
    """Directions, phases and omega for a random superposition."""
    directions = rng.standard_normal((k, n)) * rng.uniform(0.1, 3.0, (k, 1))
    phases = rng.uniform(-math.pi, math.pi, k)
    if omega is None:
        omega = float(rng.uniform(0.1, 10.0))
    return directions, phases, omega
