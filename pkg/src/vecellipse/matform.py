"""
Fourier transform with the imaginary unit replaced by a real matrix root of -1.

A real ``N x N`` matrix ``J`` with ``J @ J == -I`` (only possible for even N)
gives the exponential ``exp(J theta) = I cos(theta) + J sin(theta)``, which
rotates vectors along a circle in the planes of ``J``. Substituting it for
``exp(i theta)`` in the unitary DFT pair yields a transform acting directly on
vector samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .spectrum import VectorSignal

__all__ = [
    "MatrixRoot",
    "PlanePair",
    "canonical_root",
    "root_from_planes",
    "generalized_exp",
    "matrix_dft",
    "matrix_idft",
]

ROOT_TOL = 1e-12
FRAME_TOL = 1e-10


@dataclass(frozen=True)
class MatrixRoot:
    J: np.ndarray

    def __post_init__(self):
        J = np.array(self.J, dtype=float)
        if J.ndim != 2 or J.shape[0] != J.shape[1]:
            raise ValueError(f"J must be square, got shape {J.shape}")
        n = J.shape[0]
        if n == 0 or n % 2:
            raise ValueError(f"no real matrix root of -1 in odd dimension (N={n})")
        resid = np.max(np.abs(J @ J + np.eye(n)))
        if resid > ROOT_TOL:
            raise ValueError(f"J @ J + I has max entry {resid:.3g}, not a root of -1")
        J.flags.writeable = False
        object.__setattr__(self, "J", J)

    @property
    def dim(self) -> int:
        return self.J.shape[0]


@dataclass(frozen=True)
class PlanePair:
    """Orthonormal pair spanning one plane of rotation; ``J u = v``, ``J v = -u``."""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.array(self.u, dtype=float)
        v = np.array(self.v, dtype=float)
        if u.ndim != 1 or u.shape != v.shape:
            raise ValueError("u and v must be 1-D vectors of equal length")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)


def canonical_root(n: int) -> MatrixRoot:
    """Block-diagonal root built from ``n/2`` copies of [[0, -1], [1, 0]]."""
    if n <= 0:
        raise ValueError(f"dimension must be positive, got {n}")
    if n % 2:
        raise ValueError(f"no real matrix root of -1 in odd dimension (N={n})")
    J = np.zeros((n, n))
    for k in range(0, n, 2):
        J[k, k + 1] = -1.0
        J[k + 1, k] = 1.0
    return MatrixRoot(J)


def root_from_planes(pairs: Sequence[PlanePair]) -> MatrixRoot:
    """
    Root of -1 rotating each ``(u_k, v_k)`` plane by a quarter turn.

    ``J = sum_k (v_k u_k^T - u_k v_k^T)``. The ``2 * len(pairs)`` vectors must
    form an orthonormal basis of R^N. The result is skew-symmetric.
    """
    if not pairs:
        raise ValueError("need at least one plane pair")
    frame = np.array([x for p in pairs for x in (p.u, p.v)], dtype=float)
    k, n = frame.shape
    if k != n:
        raise ValueError(
            f"{len(pairs)} plane pairs give {k} vectors, which cannot span R^{n}"
        )
    gram = frame @ frame.T
    resid = np.max(np.abs(gram - np.eye(n)))
    if resid > FRAME_TOL:
        raise ValueError(f"plane vectors are not orthonormal (Gram residual {resid:.3g})")
    J = np.zeros((n, n))
    for p in pairs:
        J += np.outer(p.v, p.u) - np.outer(p.u, p.v)
    return MatrixRoot(J)


def generalized_exp(root: MatrixRoot, theta: float) -> np.ndarray:
    """``exp(J theta) = I cos(theta) + J sin(theta)``; an orthogonal matrix of determinant 1."""
    return np.eye(root.dim) * math.cos(theta) + root.J * math.sin(theta)


def _kernels(m: int):
    # (m*u) mod M keeps the angle small so cos/sin stay accurate for long records
    k = np.outer(np.arange(m), np.arange(m)) % m
    theta = 2.0 * math.pi * k / m
    return np.cos(theta), np.sin(theta)


def _check(x, root: MatrixRoot) -> np.ndarray:
    x = np.asarray(x.samples if isinstance(x, VectorSignal) else x, dtype=float)
    if x.ndim != 2 or x.shape[0] < 1:
        raise ValueError(f"expected an M x N array with M >= 1, got shape {x.shape}")
    if x.shape[1] != root.dim:
        raise ValueError(f"signal dimension {x.shape[1]} does not match root dimension {root.dim}")
    return x


def matrix_dft(sig, root: MatrixRoot) -> np.ndarray:
    """
    ``F[u] = M^-1/2 sum_m exp(-J 2 pi m u / M) f[m]``, samples as column vectors.

    Expanding the exponential gives ``C f - S f J^T`` with the cosine and sine
    kernel matrices ``C``, ``S``; rows of the result are the ``F[u]``.
    """
    f = _check(sig, root)
    m = f.shape[0]
    cos_k, sin_k = _kernels(m)
    return (cos_k @ f - sin_k @ f @ root.J.T) / math.sqrt(m)


def matrix_idft(F, root: MatrixRoot, sample_interval=None) -> VectorSignal:
    """``f[m] = M^-1/2 sum_u exp(+J 2 pi m u / M) F[u]``; exact inverse of :func:`matrix_dft`."""
    F = _check(F, root)
    m = F.shape[0]
    cos_k, sin_k = _kernels(m)
    return VectorSignal((cos_k @ F + sin_k @ F @ root.J.T) / math.sqrt(m), sample_interval)
