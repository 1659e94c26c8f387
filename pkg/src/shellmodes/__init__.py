"""Vibration eigenmodes of thin axisymmetric shells.

Fourier-reduced 2D finite elements on the meridian domain, dispersion
sweeps over the angular index, and closed-form thin-limit laws for
cylinders, Airy barrels and ring plates.
"""

__version__ = "0.1.0"

from .asymptotics import (
    AsymptoticPrediction,
    airy_first_zero,
    airy_barrel_prediction,
    clamped_beam_constant,
    clamped_beam_root,
    cylinder_prediction,
    plate_bending_eigenvalue,
    plate_bending_minimum,
    predict,
)
from .assembly import AssembledSystem, ModeFamily, assemble, assemble_family
from .dispersion import (
    DispersionCurve,
    KPolicy,
    MeshSpec,
    ThicknessSweep,
    estimate_order,
    first_mode,
    run_sweep,
    sweep_k,
)
from .eigen import EigenResult, smallest_eigenpairs
from .geometry import (
    MeridianProfile,
    ShellClass,
    barrel_coefficients,
    classify,
    embed,
    injectivity_bound,
    meridian_curvature_sq,
    meridian_curvature_sq_grad,
    profile_eval,
)
from .mesh import MeridianMesh, build_uniform, refine_boundary_layers
from .operators import (
    MaterialParams,
    ModeForm,
    elasticity_tensor,
    lame_constants,
    lame_form,
    laplace_form,
    membrane_limit,
)

from . import errors  # noqa: F401
