"""Exception hierarchy shared by all shellmodes modules."""


class ShellError(Exception):
    """Base class for all errors raised by shellmodes."""


# -- geometry ---------------------------------------------------------------

class OutOfInterval(ShellError):
    """Meridian abscissa outside the closed profile interval."""


class InvalidProfile(ShellError):
    """Profile violates a structural requirement (f <= 0, bad interval...)."""


class NonSmooth(ShellError):
    """Profile coefficients are not finite numbers."""


class InvalidThickness(ShellError):
    """Half-thickness violates the injectivity bound of the normal offset map."""


class InvalidGeometry(ShellError):
    """Nonsensical geometric input (nonpositive radius or length, ...)."""


# -- operators --------------------------------------------------------------

class PoissonLocking(ShellError):
    """Poisson ratio at or beyond the incompressible limit 1/2."""


class NotApplicable(ShellError):
    """Requested quantity is undefined for this shell class."""


# -- mesh -------------------------------------------------------------------

class DegenerateJacobian(ShellError):
    """Element geometry map has a vanishing or sign-changing Jacobian."""


class LayerCollision(ShellError):
    """Boundary-layer grid lines from opposite ends would interleave."""


# -- assembly ---------------------------------------------------------------

class QuadratureUnderflow(ShellError):
    """Radial coordinate not strictly positive at a quadrature point."""


# -- eigen ------------------------------------------------------------------

class FactorizationFailure(ShellError):
    """Shifted operator could not be factorized."""


class NoConvergence(ShellError):
    """Eigensolver failed to reach the requested residual tolerance."""


# -- dispersion -------------------------------------------------------------

class KmaxExceeded(ShellError):
    """Dispersion sweep hit the hard cap before detecting a rise.

    Carries the partial curve in the ``curve`` attribute.
    """

    def __init__(self, message, curve=None):
        super().__init__(message)
        self.curve = curve


class IncompleteCurve(ShellError):
    """First-mode extraction requested on a curve without a detected rise."""


class InsufficientSpan(ShellError):
    """Order estimation needs at least three samples spanning a decade."""


# -- asymptotics ------------------------------------------------------------

class UnsupportedClass(ShellError):
    """No asymptotic law is available for this shell class."""


class NegativeG(ShellError):
    """Coupling coefficient nonpositive at the boundary minimizer."""


# -- cli --------------------------------------------------------------------

class ConfigError(ShellError):
    """Malformed or inconsistent experiment configuration."""
