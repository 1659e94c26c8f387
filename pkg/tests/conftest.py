import numpy as np
import pytest

from shellmodes import MaterialParams, MeridianProfile

# material of the published benchmark computations
E_STEEL = 2.069e11
NU_STEEL = 0.3
RHO_STEEL = 7868.0


@pytest.fixture(scope="session")
def steel():
    return MaterialParams(E=E_STEEL, nu=NU_STEEL, rho=RHO_STEEL)


@pytest.fixture(scope="session")
def cylinder():
    return MeridianProfile.cylinder(1.0, 2.0)


@pytest.fixture(scope="session")
def barrel():
    # r = 1 - z^2/2 on the symmetric interval used throughout the benchmarks
    return MeridianProfile.parametrized([1.0, 0.0, -0.5], (-0.892668, 0.892668))


@pytest.fixture(scope="session")
def ring_plate():
    return MeridianProfile.ring_plate(1.0, 2.0)


def rigid_motion_vector(system, which):
    """Nodal dof vector of a rigid motion compatible with the system's mode.

    k=0: 'axial' translation, 'rotation' about the axis;
    k=1: 'transverse' translation, 'tilt' rotation about a transverse axis.
    """
    n_nodes = system.node_coords.shape[0]
    v = np.zeros(system.ndof_total)
    r = system.node_coords[:, 0]
    tau = system.node_coords[:, 1]
    idx = np.arange(n_nodes) * system.nfields
    if which == "axial":
        v[idx + 2] = 1.0
    elif which == "rotation":
        v[idx + 1] = r
    elif which == "transverse":
        v[idx + 0] = 1.0
        v[idx + 1] = -1.0
    elif which == "tilt":
        v[idx + 0] = -tau
        v[idx + 1] = tau
        v[idx + 2] = r
    else:
        raise ValueError(which)
    return v
