"""Counting conics on the quintic threefold: 609250.

Every conic spans a unique 2-plane in P^4, so the moduli space fibers over
Gr(3, 5): the fiber over a plane is the P^5 of conics inside it, i.e. the
projectivization of Sym^2(U*).  That total space has dimension 6 + 5 = 11.

A quintic equation restricts to a quintic form on the moving plane, but
forms divisible by the conic's own equation vanish on the conic for free:
the right bundle is the rank-11 quotient

    Sym^5(U*)  /  Sym^3(U*) (x) O(-1)

where O(-1) is the tautological line of equations of the conic.  The count
is the integral of its top Chern class over the 11-fold.

Run with:  python demos/conics_on_quintic.py
"""

from curvecount import (
    GrassmannianRing,
    ProjBundleRing,
    count_conics_quintic,
    dual_universal_vector,
    pb_integrate,
    pullback_vector,
    sym_power,
    tensor_line,
    whitney_quotient,
)

# Build the moduli space by hand first.
base = GrassmannianRing(3, 5)
cu = dual_universal_vector(base)
conics_in_plane = sym_power(cu, 2)
moduli = ProjBundleRing(conics_in_plane)
print(f"base {base}: dimension {base.dim}")
print(f"conic bundle rank: {conics_in_plane.rank} (a P^5 of conics per plane)")
print(f"total moduli dimension: {moduli.dim}")
print()

# The forms bundle: quintics on the plane modulo (conic) * (cubics).
quintics = pullback_vector(moduli, sym_power(cu, 5))
cubics_twisted = tensor_line(pullback_vector(moduli, sym_power(cu, 3)), -moduli.zeta())
forms = whitney_quotient(quintics, cubics_twisted, moduli.dim)
print(f"rank {quintics.rank} quintics / rank {cubics_twisted.rank} twisted cubics "
      f"-> rank {forms.rank} forms bundle")
print("conics on the quintic threefold:", pb_integrate(forms.top()))
print()

# The pipeline records the same derivation.
report = count_conics_quintic()
print("pipeline count:", report.count)
for label, value in report.trace:
    print(f"  {label}: {value}")
