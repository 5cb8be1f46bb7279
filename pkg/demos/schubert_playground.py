"""A tour of exact Schubert calculus on small Grassmannians.

Run with:  python demos/schubert_playground.py
"""

from curvecount import (
    GrassmannianRing,
    dual_partition,
    giambelli,
    integrate,
    multiply,
    pieri,
)

# Gr(2, 4): 2-dimensional subspaces of a 4-dimensional space, i.e. the
# classical space of lines in projective 3-space.  Its Chow ring has one
# basis class per partition inside a 2 x 2 box.
ring = GrassmannianRing(2, 4)
print(f"{ring}: dimension {ring.dim}")
print("basis classes:", ", ".join(str(list(p.parts)) for p in ring.basis()))
print()

# The Pieri rule multiplies by a special class sigma_a: add a boxes to the
# diagram, never two in the same column, and drop anything leaving the box.
s1 = ring.sigma((1,))
print("sigma(1) * sigma(1)   =", pieri(s1, 1))
print("sigma(2,1) * sigma(1) =", pieri(ring.sigma((2, 1)), 1), "   ((3,1) leaves the box)")
print()

# General products use the Littlewood-Richardson rule.  The two conditions
# "lines meeting a fixed line" squared to "lines through a point" plus
# "lines in a plane" is the Pieri product above; here is a pure LR one:
print("sigma(1,1)^2 =", multiply(ring.sigma((1, 1)), ring.sigma((1, 1))))
print()

# Integration reads off the coefficient of the point class (the full box).
# sigma(1)^4 integrates to 2: through two general lines in P^3 pass exactly
# two lines -- equivalently Gr(2,4) is a quadric in Pluecker space.
print("integral of sigma(1)^4 on Gr(2,4):", integrate(s1**4))

# The same computation on Gr(2,5) gives the degree 5 of the Pluecker
# embedding of the lines in P^4.
g25 = GrassmannianRing(2, 5)
print("integral of sigma(1)^6 on Gr(2,5):", integrate(g25.sigma((1,)) ** 6))
print()

# Giambelli writes any basis class as a determinant in special classes,
# an independent route used by the test suite to cross-check the LR rule.
print("giambelli((2,1)) on Gr(2,5) =", giambelli((2, 1), g25))
print()

# Poincare duality: a class pairs to 1 exactly with its box complement.
lam = (2,)
mu = dual_partition(lam, ring)
print(f"dual of {list(lam)} in the 2x2 box: {list(mu.parts)}")
print(
    "pairing sigma(2) with its dual:",
    integrate(multiply(ring.sigma(lam), ring.sigma(mu))),
)
print(
    "pairing sigma(2) with sigma(1,1):",
    integrate(multiply(ring.sigma(lam), ring.sigma((1, 1)))),
)
