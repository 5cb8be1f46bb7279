"""How infinite families of lines still count: equivalences of degenerations.

A smooth quintic threefold carries 2875 lines, but a quintic that breaks up
as a union of lower-degree pieces carries infinitely many.  Each piece's
family of lines still absorbs a definite number of the 2875 as a smooth
quintic degenerates onto the union: the zero-dimensional part of
c(forms bundle) capped with the Segre class of the family's locus in the
Grassmannian.  The pieces of every split must add back up to 2875.

Run with:  python demos/degenerate_quintics.py
"""

from curvecount import (
    NormalBundleType,
    degeneration_split_report,
    equivalence_lines_on_factor,
    naive_dimension_count,
    normal_bundle_h0,
    tally_checks,
)

# A quintic degenerating to hyperplane + quartic, and to quadric + cubic.
for e, name in ((1, "hyperplane"), (2, "quadric"), (3, "cubic"), (4, "quartic")):
    count = equivalence_lines_on_factor(5, e, 4).count
    print(f"lines absorbed by the degree-{e} factor ({name}): {count}")
print()

report = degeneration_split_report(5, 4)
for identity, ok in report.consistency:
    print(f"{identity}  ->  {'holds' if ok else 'FAILS'}")
print()

# The same degeneration story for the 27 lines of a cubic surface splitting
# into a plane and a quadric.
cubic = degeneration_split_report(3, 3)
print("cubic surface split:",
      ", ".join(f"degree {e}: {cubic.trace_value(f'equivalence_degree_{e}')}" for e in (1, 2)))
print()

# Published tallies of individual components: the 50 cones (20 each) and
# 375 special lines (5 each) of the most symmetric quintic, and the conic
# components of both quintic degenerations.
tallies = tally_checks()
for identity, ok in tallies.consistency:
    print(f"{identity}  ->  {'holds' if ok else 'FAILS'}")
print()

# Why one expects finitely many rational curves of every degree d on a
# quintic threefold: parameters minus conditions minus reparametrizations.
for d in (1, 2, 3, 7):
    rec = naive_dimension_count(4, 5, d)
    print(f"degree {d}: {rec.parameters} parameters - {rec.conditions} conditions "
          f"- {rec.reparametrizations} reparametrizations = {rec.expected_dim}")
print()

# Locally, a rational curve on a threefold with trivial canonical class has
# normal bundle O(a) + O(b) with a + b = -2; it is infinitesimally rigid
# exactly for the balanced type (-1, -1).
for a, b in ((-1, -1), (0, -2), (1, -3)):
    rec = normal_bundle_h0(NormalBundleType(a, b))
    print(f"normal bundle O({a}) + O({b}): h0 = {rec.h0}, rigid = {rec.rigid}")
