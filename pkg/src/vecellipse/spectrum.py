"""
Unitary DFT and the per-frequency ellipse spectrum of sampled vector signals.

Each pair of positive/negative frequency coefficients of a real signal sums
to one elliptical oscillation. :func:`ellipse_spectrum` turns the DFT of an
``M x N`` signal into a DC vector, one canonical ellipse per bin
``u = 1 .. ceil(M/2) - 1`` and, for even ``M``, a Nyquist vector.
:func:`synthesize_spectrum` inverts it exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .ellipse import EllipseAB, EllipseCS, ab_from_cs, eval_ab

__all__ = [
    "VectorSignal",
    "SpectralBin",
    "EllipseSpectrum",
    "unitary_dft",
    "unitary_idft",
    "ellipse_spectrum",
    "synthesize_spectrum",
    "bin_energies",
    "n_bins",
]


def n_bins(n_samples: int) -> int:
    """Number of ellipse bins for a record of ``n_samples``: ceil(M/2) - 1."""
    return max((n_samples + 1) // 2 - 1, 0)


@dataclass(frozen=True)
class VectorSignal:
    """``M`` uniformly spaced samples, row ``m`` being the N-vector at time ``m``."""

    samples: np.ndarray
    sample_interval: Optional[float] = None

    def __post_init__(self):
        x = np.array(self.samples, dtype=float)
        if x.ndim == 1:
            x = x[:, None]
        if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 1:
            raise ValueError(f"samples must be an M x N array with M, N >= 1, got {x.shape}")
        if not np.all(np.isfinite(x)):
            raise ValueError("samples contain non-finite values")
        x.flags.writeable = False
        object.__setattr__(self, "samples", x)
        if self.sample_interval is not None:
            dt = float(self.sample_interval)
            if not math.isfinite(dt) or dt <= 0.0:
                raise ValueError(f"sample_interval must be positive, got {dt}")
            object.__setattr__(self, "sample_interval", dt)

    @property
    def n_samples(self) -> int:
        return self.samples.shape[0]

    @property
    def dim(self) -> int:
        return self.samples.shape[1]


@dataclass(frozen=True)
class SpectralBin:
    """One ellipse of the spectrum; ``component.omega`` is in radians per sample."""

    u: int
    component: EllipseAB

    def freq_cycles_per_record(self) -> float:
        return float(self.u)

    def freq_hz(self, n_samples: int, sample_interval: float) -> float:
        return self.u / (n_samples * sample_interval)


@dataclass(frozen=True)
class EllipseSpectrum:
    n_samples: int
    dim: int
    dc: np.ndarray
    bins: tuple = ()
    nyquist: Optional[np.ndarray] = None
    sample_interval: Optional[float] = None

    def __post_init__(self):
        if self.n_samples < 1 or self.dim < 1:
            raise ValueError("n_samples and dim must be positive")
        dc = np.array(self.dc, dtype=float)
        if dc.shape != (self.dim,):
            raise ValueError(f"dc has shape {dc.shape}, expected ({self.dim},)")
        object.__setattr__(self, "dc", dc)
        if self.n_samples % 2 == 0:
            nyq = np.zeros(self.dim) if self.nyquist is None else np.array(self.nyquist, dtype=float)
            if nyq.shape != (self.dim,):
                raise ValueError(f"nyquist has shape {nyq.shape}, expected ({self.dim},)")
            object.__setattr__(self, "nyquist", nyq)
        elif self.nyquist is not None:
            raise ValueError("a Nyquist term only exists for an even number of samples")
        bins = tuple(self.bins)
        top = n_bins(self.n_samples)
        seen = set()
        for b in bins:
            if not 1 <= b.u <= top:
                raise ValueError(
                    f"bin index u={b.u} out of range 1..{top} for M={self.n_samples}"
                )
            if b.u in seen:
                raise ValueError(f"duplicate bin index u={b.u}")
            seen.add(b.u)
            if b.component.dim != self.dim:
                raise ValueError(
                    f"bin u={b.u} has dimension {b.component.dim}, spectrum has {self.dim}"
                )
        object.__setattr__(self, "bins", bins)

    def bin(self, u: int) -> Optional[SpectralBin]:
        for b in self.bins:
            if b.u == u:
                return b
        return None


def _as_series(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.ndim < 1 or x.shape[0] == 0:
        raise ValueError("empty series")
    if not np.all(np.isfinite(x)):
        raise ValueError("series contains non-finite values")
    return x


def unitary_dft(x) -> np.ndarray:
    """``F[u] = M^-1/2 sum_m x[m] exp(-2 pi i m u / M)`` along the first axis."""
    return np.fft.fft(_as_series(x), axis=0, norm="ortho")


def unitary_idft(F) -> np.ndarray:
    """``f[m] = M^-1/2 sum_u F[u] exp(+2 pi i m u / M)`` along the first axis."""
    return np.fft.ifft(_as_series(F), axis=0, norm="ortho")


def ellipse_spectrum(sig: VectorSignal) -> EllipseSpectrum:
    """
    Analyse a real vector signal into DC, per-bin ellipses and Nyquist.

    For bin ``u`` the sine and cosine vectors are
    ``c = -(2/sqrt(M)) Im F[u]`` and ``s = (2/sqrt(M)) Re F[u]``, which are then
    brought to canonical form with omega = 2 pi u / M radians per sample.
    """
    if not isinstance(sig, VectorSignal):
        sig = VectorSignal(sig)
    m, n = sig.samples.shape
    F = unitary_dft(sig.samples)
    scale = 1.0 / math.sqrt(m)
    dc = scale * F[0].real
    nyquist = scale * F[m // 2].real if m % 2 == 0 else None
    bins = []
    for u in range(1, n_bins(m) + 1):
        c = -2.0 * scale * F[u].imag
        s = 2.0 * scale * F[u].real
        omega = 2.0 * math.pi * u / m
        bins.append(SpectralBin(u, ab_from_cs(EllipseCS(c, s, omega))))
    return EllipseSpectrum(m, n, dc, tuple(bins), nyquist, sig.sample_interval)


def synthesize_spectrum(spec: EllipseSpectrum) -> VectorSignal:
    """
    Rebuild the sampled signal: ``dc + sum_u eval_ab(bin_u, m) + nyquist (-1)^m``.

    Bins absent from ``spec`` contribute nothing. Each bin is evaluated at
    the integer sample index with its own omega, which must equal 2 pi u / M.
    """
    m = spec.n_samples
    idx = np.arange(m, dtype=float)
    out = np.tile(spec.dc, (m, 1))
    for b in spec.bins:
        expected = 2.0 * math.pi * b.u / m
        if not math.isclose(b.component.omega, expected, rel_tol=1e-12):
            raise ValueError(
                f"bin u={b.u} has omega {b.component.omega}, expected {expected} rad/sample"
            )
        # reduce the phase index mod M so large records keep full precision
        k = (np.arange(m) * b.u) % m
        comp = EllipseAB(b.component.a, b.component.b, b.component.psi, 2.0 * math.pi / m)
        out += eval_ab(comp, k.astype(float))
    if spec.nyquist is not None:
        out += np.outer(np.where(idx % 2 == 0, 1.0, -1.0), spec.nyquist)
    return VectorSignal(out, spec.sample_interval)


def bin_energies(spec: EllipseSpectrum) -> dict:
    """
    Signal energy carried by each term of the spectrum.

    Keys are ``"dc"``, ``"nyquist"`` (even M only) and the integer bin
    indices. The values sum to ``sum_m |f[m]|^2`` for a spectrum produced by
    :func:`ellipse_spectrum`.
    """
    m = spec.n_samples
    out = {"dc": m * float(spec.dc @ spec.dc)}
    for b in spec.bins:
        out[b.u] = 0.5 * m * b.component.power
    if spec.nyquist is not None:
        out["nyquist"] = m * float(spec.nyquist @ spec.nyquist)
    return out
