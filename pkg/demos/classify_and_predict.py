"""
Shell classes and their thin-limit laws
=======================================

Every axisymmetric shell in this library is generated by a meridian curve.
The geometry of that curve decides how the first vibration mode behaves as
the thickness goes to zero, and for two families (cylinders and "Airy"
barrels) explicit laws are available.  This tour classifies a few profiles
and prints their predictions.
"""

from shellmodes import (
    MaterialParams,
    MeridianProfile,
    classify,
    membrane_limit,
    predict,
)

steel = MaterialParams(E=2.069e11, nu=0.3, rho=7868.0)

# ---------------------------------------------------------------------------
# A cylinder: zero meridian curvature, the first eigenvalue decays like eps
# and the angular frequency of the first mode grows like eps^(-1/4).
cylinder = MeridianProfile.cylinder(R=1.0, L=2.0)
print("cylinder:", classify(cylinder).tag)
pred = predict(cylinder, steel)
print(f"  k(eps)      ~ {pred.k_gamma:.4f} * eps^-{pred.k_exponent}")
print(f"  lambda(eps) ~ {pred.a1_normalized:.4f} * eps  (units of E/rho)")

# ---------------------------------------------------------------------------
# An elliptic barrel, r = 1 - z^2/2.  The squared meridian curvature is
# minimal at the two lateral ends, which puts the profile in the "Airy"
# class: the eigenvalue tends to a positive floor and the first mode
# oscillates faster and faster, k ~ eps^(-3/7).
barrel = MeridianProfile.parametrized([1.0, 0.0, -0.5], (-0.892668, 0.892668))
cls = classify(barrel)
print("barrel:", cls.tag, "| curvature minimizers at z0 =", cls.z0)
print("  membrane floor:", f"{membrane_limit(cls):.5f} E/rho")
pred = predict(barrel, steel)
print(f"  k(eps)      ~ {pred.k_gamma:.5f} * eps^(-3/7)")
print(
    f"  lambda(eps) ~ {pred.a0_normalized:.4f} + {pred.a1_normalized:.4f} * eps^(2/7)"
    "  (units of E/rho)"
)

# ---------------------------------------------------------------------------
# A flat ring plate: the first eigenvalue scales like eps^2 times the first
# clamped eigenvalue of the scalar bending operator on the annulus.
plate = MeridianProfile.ring_plate(1.0, 2.0)
pred = predict(plate, steel)
print("ring plate:", classify(plate).tag)
print(
    f"  lambda(eps) ~ {pred.a1:.6g} * eps^2  (rad/s)^2,"
    f" bending mode k = {pred.extras['bending_mode']}"
)

# ---------------------------------------------------------------------------
# Profiles outside the supported laws are still classified.
gaussian = MeridianProfile.parametrized([1.0, 0.0, -0.5, 0.0, -0.2], (-0.5, 0.5))
print("gaussian barrel:", classify(gaussian).tag)
pred = predict(gaussian, steel)
print(
    f"  only the floor is predicted: a0 = {pred.a0_normalized:.4f} E/rho"
    f" (coefficients unavailable: {pred.coefficients_unavailable})"
)

hyperbolic = MeridianProfile.parametrized([1.0, 0.0, 0.5], (-0.5, 0.5))
print("hyperbolic profile:", classify(hyperbolic).tag, "(no asymptotic law)")
