"""
Single-frequency oscillations of vector-valued signals.

A sum of same-frequency sinusoids in R^N always stays in a plane and traces
an ellipse. This module turns such sums into the non-orthogonal ``c``/``s``
form and then into the canonical major/minor axis form ``a``/``b`` with a
common phase ``psi``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "Sinusoid",
    "EllipseCS",
    "EllipseAB",
    "PolarizationKind",
    "Polarization",
    "eval_superposition",
    "cs_from_sinusoids",
    "eval_cs",
    "psi_from_cs",
    "ab_from_cs",
    "cs_from_ab",
    "eval_ab",
    "classify_polarization",
    "planarity_residual",
    "rotation_sense",
    "check_canonical",
]

DEFAULT_IDENTITY_TOL = 1e-10
DEFAULT_POLARIZATION_TOL = 1e-6
DEFAULT_ZERO_TOL = 1e-12

_EPS = np.finfo(float).eps


def _as_vector(x, name: str) -> np.ndarray:
    v = np.array(x, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"{name} must be a 1-D vector, got shape {v.shape}")
    if v.size == 0:
        raise ValueError(f"{name} must have at least one component")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has non-finite entries")
    v.flags.writeable = False
    return v


def _check_omega(omega: float) -> float:
    omega = float(omega)
    if not math.isfinite(omega) or omega <= 0.0:
        raise ValueError(f"omega must be finite and > 0, got {omega}")
    return omega


@dataclass(frozen=True)
class Sinusoid:
    """Linearly polarized oscillation ``direction * sin(omega*t + phi)``."""

    direction: np.ndarray
    omega: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "direction", _as_vector(self.direction, "direction"))
        object.__setattr__(self, "omega", _check_omega(self.omega))
        phi = float(self.phi)
        if not math.isfinite(phi):
            raise ValueError("phi must be finite")
        object.__setattr__(self, "phi", phi)

    @property
    def dim(self) -> int:
        return self.direction.size

    @property
    def amplitude(self) -> float:
        return float(np.linalg.norm(self.direction))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return np.multiply.outer(np.sin(self.omega * t + self.phi), self.direction)


@dataclass(frozen=True)
class EllipseCS:
    """Ellipse as ``c*sin(omega*t) + s*cos(omega*t)``; value at t=0 is ``s``."""

    c: np.ndarray
    s: np.ndarray
    omega: float = 1.0

    def __post_init__(self):
        c = _as_vector(self.c, "c")
        s = _as_vector(self.s, "s")
        if c.shape != s.shape:
            raise ValueError(f"c and s differ in dimension: {c.size} != {s.size}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "omega", _check_omega(self.omega))

    @property
    def dim(self) -> int:
        return self.c.size


@dataclass(frozen=True)
class EllipseAB:
    """
    Canonical ellipse ``a*sin(omega*t + psi) + b*cos(omega*t + psi)``.

    ``a`` is the major axis and ``b`` the minor axis. The constructor only
    checks shapes and finiteness; use :func:`check_canonical` to verify
    orthogonality, dominance and the phase range.
    """

    a: np.ndarray
    b: np.ndarray
    psi: float
    omega: float = 1.0

    def __post_init__(self):
        a = _as_vector(self.a, "a")
        b = _as_vector(self.b, "b")
        if a.shape != b.shape:
            raise ValueError(f"a and b differ in dimension: {a.size} != {b.size}")
        psi = float(self.psi)
        if not math.isfinite(psi):
            raise ValueError("psi must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "omega", _check_omega(self.omega))

    @property
    def dim(self) -> int:
        return self.a.size

    @property
    def norm_a(self) -> float:
        return float(np.linalg.norm(self.a))

    @property
    def norm_b(self) -> float:
        return float(np.linalg.norm(self.b))

    @property
    def power(self) -> float:
        return float(self.a @ self.a + self.b @ self.b)


class PolarizationKind(str, enum.Enum):
    ZERO = "Zero"
    LINEAR = "Linear"
    CIRCULAR = "Circular"
    ELLIPTICAL = "Elliptical"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Polarization:
    kind: PolarizationKind
    tol_rel: float

    def __str__(self):
        return self.kind.value


def _common(terms: Sequence[Sinusoid]):
    dims = {t.dim for t in terms}
    if len(dims) > 1:
        raise ValueError(f"sinusoids have mismatched dimensions: {sorted(dims)}")
    omegas = {t.omega for t in terms}
    if len(omegas) > 1:
        raise ValueError(f"sinusoids have mismatched omegas: {sorted(omegas)}")
    return dims.pop(), omegas.pop()


def eval_superposition(terms: Sequence[Sinusoid], t, dim: int | None = None) -> np.ndarray:
    """
    Evaluate ``sum_i n_i sin(omega t + phi_i)`` term by term.

    ``t`` may be a scalar or an array of times; the result has shape
    ``t.shape + (N,)``. An empty sum needs ``dim`` to know its size.
    """
    t = np.asarray(t, dtype=float)
    if not terms:
        if dim is None or dim < 1:
            raise ValueError("an empty superposition needs a positive dim")
        return np.zeros(t.shape + (dim,))
    n, _ = _common(terms)
    if dim is not None and dim != n:
        raise ValueError(f"dim={dim} does not match sinusoid dimension {n}")
    out = np.zeros(t.shape + (n,))
    for term in terms:
        out += term(t)
    return out


def cs_from_sinusoids(terms: Sequence[Sinusoid]) -> EllipseCS:
    """Collapse same-frequency sinusoids into ``c = sum n cos(phi)``, ``s = sum n sin(phi)``."""
    if not terms:
        raise ValueError("need at least one sinusoid to fix dimension and omega")
    n, omega = _common(terms)
    c = np.zeros(n)
    s = np.zeros(n)
    for term in terms:
        c += term.direction * math.cos(term.phi)
        s += term.direction * math.sin(term.phi)
    return EllipseCS(c, s, omega)


def eval_cs(e: EllipseCS, t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("t must be finite")
    wt = e.omega * t
    return np.multiply.outer(np.sin(wt), e.c) + np.multiply.outer(np.cos(wt), e.s)


def psi_from_cs(c, s) -> float:
    """
    Phase that rotates the ``c``/``s`` pair onto the ellipse axes.

    Half of ``atan2(2<c,s>, |c|^2 - |s|^2)``, folded into (-pi/2, pi/2].
    ``atan2(0, 0)`` is taken as 0, so circles and the zero ellipse get psi=0.
    """
    c = np.asarray(c, dtype=float)
    s = np.asarray(s, dtype=float)
    if c.shape != s.shape:
        raise ValueError(f"c and s differ in shape: {c.shape} != {s.shape}")
    # + 0.0 turns a signed zero into +0.0 so atan2 cannot land on -pi
    y = 2.0 * float(c @ s) + 0.0
    x = float(c @ c) - float(s @ s) + 0.0
    psi = 0.5 * math.atan2(y, x)
    if psi <= -math.pi / 2:
        psi += math.pi
    return psi


def ab_from_cs(e: EllipseCS) -> EllipseAB:
    """
    Major/minor axis form of an ellipse given in ``c``/``s`` form.

    ``a = c cos(psi) + s sin(psi)``, ``b = -c sin(psi) + s cos(psi)``.
    With psi from the atan2 branch, ``|a| >= |b|`` always holds, so ``a`` is
    the major axis without any comparison of magnitudes.

    ``b`` is then cleaned of rounding error: two projection passes remove
    any component along ``a`` and a ``b`` below the rounding floor of the
    inputs is set to zero. Both steps are the identity in exact arithmetic.
    """
    c, s = e.c, e.s
    psi = psi_from_cs(c, s)
    cp, sp = math.cos(psi), math.sin(psi)
    a = c * cp + s * sp
    b = -c * sp + s * cp

    aa = float(a @ a)
    if aa > 0.0:
        for _ in range(2):
            b = b - (float(a @ b) / aa) * a
        floor = 16.0 * _EPS * math.sqrt(float(c @ c) + float(s @ s))
        if np.linalg.norm(b) <= floor:
            b = np.zeros_like(b)
    return EllipseAB(a, b, psi, e.omega)


def cs_from_ab(e: EllipseAB) -> EllipseCS:
    """Inverse rotation: ``c = a cos(psi) - b sin(psi)``, ``s = a sin(psi) + b cos(psi)``."""
    cp, sp = math.cos(e.psi), math.sin(e.psi)
    return EllipseCS(e.a * cp - e.b * sp, e.a * sp + e.b * cp, e.omega)


def eval_ab(e: EllipseAB, t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise ValueError("t must be finite")
    arg = e.omega * t + e.psi
    return np.multiply.outer(np.sin(arg), e.a) + np.multiply.outer(np.cos(arg), e.b)


def classify_polarization(
    e: EllipseAB,
    tol_rel: float = DEFAULT_POLARIZATION_TOL,
    tol_abs: float = DEFAULT_ZERO_TOL,
) -> Polarization:
    """
    Sort an ellipse into zero, linear, circular or elliptical polarization.

    Parameters
    ----------
    e : EllipseAB
        Canonical ellipse (``|a| >= |b|``).
    tol_rel : float
        Relative tolerance in (0, 1) for the linear and circular tests.
    tol_abs : float
        Absolute threshold on ``|a|`` below which the component is zero.
    """
    if not 0.0 < tol_rel < 1.0:
        raise ValueError(f"tol_rel must lie in (0, 1), got {tol_rel}")
    na, nb = e.norm_a, e.norm_b
    if na <= tol_abs:
        kind = PolarizationKind.ZERO
    elif nb <= tol_rel * na:
        kind = PolarizationKind.LINEAR
    elif na - nb <= tol_rel * na:
        kind = PolarizationKind.CIRCULAR
    else:
        kind = PolarizationKind.ELLIPTICAL
    return Polarization(kind, tol_rel)


def planarity_residual(samples, e: EllipseCS) -> float:
    """
    Largest distance of any sample from the plane spanned by ``c`` and ``s``.

    The span may be a plane, a line or (when both vectors vanish) the origin,
    in which case the largest sample norm is returned.
    """
    x = np.asarray(samples, dtype=float)
    if x.ndim == 1:
        x = x[None, :]
    if x.shape[-1] != e.dim:
        raise ValueError(f"samples have dimension {x.shape[-1]}, ellipse has {e.dim}")
    if x.shape[0] == 0:
        return 0.0
    basis = np.column_stack([e.c, e.s])
    u, sv, _ = np.linalg.svd(basis, full_matrices=False)
    if sv[0] == 0.0:
        return float(np.max(np.linalg.norm(x, axis=1)))
    q = u[:, sv > sv[0] * 1e-13]
    resid = x - (x @ q) @ q.T
    return float(np.max(np.linalg.norm(resid, axis=1)))


def rotation_sense(e: EllipseAB, tol_rel: float = DEFAULT_POLARIZATION_TOL) -> str | None:
    """
    Traversal sense of a 2-D ellipse: ``"counterclockwise"`` or ``"clockwise"``.

    Only defined for N = 2; returns None otherwise, or when the path is
    (numerically) a line. In higher dimensions the path runs from ``b``
    towards ``a`` in the ordered frame (a, b), which has no absolute sense.
    """
    if e.dim != 2:
        return None
    na, nb = e.norm_a, e.norm_b
    if na == 0.0 or nb <= tol_rel * na:
        return None
    # position b at phase 0 moves along a; z-component of b x a gives the sense
    cross = e.b[0] * e.a[1] - e.b[1] * e.a[0]
    return "counterclockwise" if cross > 0 else "clockwise"


def check_canonical(e: EllipseAB, tol: float = DEFAULT_IDENTITY_TOL) -> None:
    """Raise ValueError unless ``e`` is orthogonal, major-axis dominant and has psi in (-pi/2, pi/2]."""
    na, nb = e.norm_a, e.norm_b
    if abs(float(e.a @ e.b)) > tol * na * nb:
        raise ValueError(f"axes not orthogonal: <a,b>={float(e.a @ e.b):.3g}")
    if na * na - nb * nb < -tol * na * na:
        raise ValueError(f"|a| < |b|: {na:.17g} < {nb:.17g}")
    if not -math.pi / 2 < e.psi <= math.pi / 2:
        raise ValueError(f"psi={e.psi} outside (-pi/2, pi/2]")
