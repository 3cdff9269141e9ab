"""
When is a combination of embedding counts a polynomial function?
================================================================

del_z decorates an edge; del_x and del_y glue a neighbouring edge onto the
decorated one through its black or white end.  A formal sum G of graphs has
N_G polynomial in the S_k when (del_x^k - (-del_y)^k) del_z G = 0 for all k.
"""
from youngcalc import (BipartiteGraph, FormalSum, criterion_check,
                       decomposition_identity_check, del_x, del_y, del_z, fit_s_basis,
                       interpolate_in_z, triangle_profile)
from youngcalc.bigraphs import BLACK_STAR_2, WHITE_STAR_2

star = FormalSum.of(BLACK_STAR_2)
diff = FormalSum([(BLACK_STAR_2, 1), (WHITE_STAR_2, -1)])

print("del_z(black star)       =", del_z(star))
print("del_x del_z(black star) =", del_x(del_z(star)))
print("del_y del_z(black star) =", del_y(del_z(star)))

rep = criterion_check(star)
print("\nblack star alone:", rep.to_json()["verdict"])
rep = criterion_check(diff)
print("black star - white star:", rep.to_json()["verdict"])

# The difference of the stars is S_3; the lone black star is sum lambda_i^2,
# which no polynomial in S_2, S_3 reproduces.
print("\nfit(diff) =", fit_s_basis(diff).polynomial)
fit = fit_s_basis(star)
print("fit(black star) feasible:", fit.feasible, " witness:", fit.witness())

# Along the boundary of the triangle, N_{del_z G} is a polynomial in z, and
# integrating it back gives N_G as a combination of S_{i+2}.
tri = triangle_profile(2, 2)
print("\nz-coefficients of N_{del_z diff}:", interpolate_in_z(del_z(diff), tri).coeffs)
rep = decomposition_identity_check(diff, tri)
print("identity: lhs =", rep.lhs, " rhs =", rep.rhs, " holds:", rep.holds)

path = FormalSum.of(BipartiteGraph.from_edges([(0, 0), (1, 0), (1, 1)]))
print("\n3-vertex path criterion:", criterion_check(path).to_json()["verdict"])
