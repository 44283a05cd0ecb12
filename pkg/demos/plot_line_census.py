"""
Counting lines
==============

The 375 crossing lines on the Fermat quintic, then the van Geemen lines at
t = 1 and at a branch value where the count halves.
"""
from dworklines import census

cones, lines = census.enumerate_fermat_lines()
print(len(cones), "cones,", len(lines), "crossing lines")
print("all contained for every t:", all(census.crossing_contained(l) for l in lines))

sols = census.solve_van_geemen(1, precision_bits=128)
print("\nt = 1:", len(sols), "solutions (a, b)")
for s in sols[:3]:
    print("  residual %.2e, root radius %.2e" % (s.residual, s.root_radius))
print("  lines after the symmetry group:", census.orbit_count(sols))

tb = census.branch_t(0)
bsols = census.solve_van_geemen(tb)
print("\nbranch value t =", tb)
print(len(bsols), "exact solutions ->", census.orbit_count(bsols), "lines")
print("free action:", census.free_action(sols))
