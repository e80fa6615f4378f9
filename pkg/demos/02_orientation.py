"""
Orientations and the boundary operator
======================================

An orientation of a simplex is a vertex ordering up to even permutations.
Boundaries are alternating sums of faces, and applying the boundary twice
gives zero.
"""

from eulerpoincare import boundary, boundary_chain, build, orient, orientability_check
from eulerpoincare.orientation import assignment_defects, compatible_orientation, propagate

# swapping two vertices reverses the orientation, a 3-cycle does not
print(orient([0, 1, 2]), orient([0, 2, 1]), orient([2, 0, 1]))

sigma = orient([0, 1, 2])
print("boundary:", boundary(sigma))
print("boundary of boundary:", boundary_chain(boundary(sigma)))

# a neighbour across the edge (1, 2) gets the orientation that cancels it
tau = compatible_orientation(sigma, (1, 2, 3), (1, 2))
print("compatible:", tau, "shared edge sum:", boundary(sigma)[(1, 2)] + boundary(tau)[(1, 2)])

# the torus admits a coherent global orientation; the check is pure chain arithmetic
torus = build("torus")
verdict = orientability_check(torus)
print("torus orientable:", verdict.orientable, "defects:", assignment_defects(torus, verdict.assignment))

# the projective plane does not: carrying an orientation around the witness loop reverses it
verdict = orientability_check(build("projective-plane"))
carried = propagate(verdict.witness)
print("witness:", verdict.witness)
print("start", carried[0].sign, "end", carried[-1].sign)
