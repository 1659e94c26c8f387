"""
Ring plates: separation of variables and the bending limit
==========================================================

Flat shells are the quiet reference case.  The acoustic eigenvalue does not
depend on the thickness at all (variables separate exactly and the first
transverse eigenvalue is 0), while the elastic eigenvalue drops like eps^2
with the coefficient given by the scalar bending operator on the annulus.
"""

from shellmodes import (
    MaterialParams,
    MeridianProfile,
    MeshSpec,
    first_mode,
    plate_bending_minimum,
    sweep_k,
)

steel = MaterialParams(E=2.069e11, nu=0.3, rho=7868.0)
plate = MeridianProfile.ring_plate(1.0, 2.0)

# -- acoustics: thickness-independent -----------------------------------------
uniform = MeshSpec(n_thick=2, n_merid=8, geo_degree=3, graded=False)
print("acoustic (Laplace) first eigenvalue:")
for h in (0.2, 0.02):
    curve = sweep_k(plate, None, "laplace", h / 2, uniform, p=6)
    k_star, lam = first_mode(curve)
    print(f"  h = {h:<5} lambda = {lam:.9f}  (argmin k = {k_star})")
print("  the annulus value; the Bessel cross-product root gives 9.753322...\n")

# -- elasticity: the eps^2 bending law ----------------------------------------
lam_b, k_b = plate_bending_minimum(plate, steel)
print(f"clamped bending eigenvalue on the annulus: {lam_b:.6g} (rad/s)^2, k = {k_b}")

graded = MeshSpec(n_thick=2, n_merid=8, geo_degree=3, graded=True)
print("elastic first eigenvalue against the bending prediction:")
for h in (0.1, 0.02):
    eps = h / 2.0
    _, lam = first_mode(sweep_k(plate, steel, "lame", eps, graded, p=6))
    print(
        f"  h = {h:<5} lambda/eps^2 = {lam / eps**2:.6g}"
        f"   ratio to bending value = {lam / eps**2 / lam_b:.4f}"
    )
