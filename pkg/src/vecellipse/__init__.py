"""
Elliptical frequency components of vector-valued signals.

Sums of same-frequency sinusoids in R^N, their canonical major/minor axis
form, the per-bin ellipse spectrum of sampled signals and a DFT built on
real matrix roots of -1.
"""

__version__ = "0.1.0"

from .ellipse import (
    EllipseAB,
    EllipseCS,
    Polarization,
    PolarizationKind,
    Sinusoid,
    ab_from_cs,
    check_canonical,
    classify_polarization,
    cs_from_ab,
    cs_from_sinusoids,
    eval_ab,
    eval_cs,
    eval_superposition,
    planarity_residual,
    psi_from_cs,
    rotation_sense,
)
from .matform import (
    MatrixRoot,
    PlanePair,
    canonical_root,
    generalized_exp,
    matrix_dft,
    matrix_idft,
    root_from_planes,
)
from .spectrum import (
    EllipseSpectrum,
    SpectralBin,
    VectorSignal,
    bin_energies,
    ellipse_spectrum,
    synthesize_spectrum,
    unitary_dft,
    unitary_idft,
)
