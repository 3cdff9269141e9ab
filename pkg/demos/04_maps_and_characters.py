"""
Characters from polygon gluings
===============================

Polygons with 2*mu_i sides and alternately coloured corners are glued in
pairs of edges.  Each gluing is a bipartite map; summing signed embedding
counts of the maps gives normalized characters of symmetric groups.
"""
from youngcalc import Partition, character_maps, enumerate_gluings, normalized_sigma
from youngcalc.maps import map_sum, zonal_identity

mu = Partition.parse("2")
for m in enumerate_gluings(mu):
    print(f"pairing {m.pairing}: V_w={m.num_white} V_b={m.num_black} "
          f"chi={m.euler_characteristic} orientable={m.orientable} oriented={m.oriented}")

# alpha = 1 uses the gluings that respect the polygons' orientation
lam = Partition.parse("3,1")
r = character_maps(mu, lam, 1)
print(f"\nSigma_{mu}({lam}): maps {r.value} (raw {r.raw_sum}, sign {r.calibration}), "
      f"Murnaghan-Nakayama {normalized_sigma(mu, lam)}")

for mu_text in ("1,1", "3", "2,1", "2,2", "3,1,1"):
    mu = Partition.parse(mu_text)
    lam = Partition.parse("3,2,1")
    print(f"Sigma_{mu}({lam}) = {character_maps(mu, lam, 1).value} "
          f"vs {normalized_sigma(mu, lam)}")

# alpha = 2: all gluings, weight (-2)^{V_b}
print("\nzonal raw sum, mu=(2), lam=(2,1):", character_maps(Partition((2,)), Partition((2, 1)), 2).raw_sum)

# Comparing with counts on a doubled diagram.  Doubling the rows scales
# white coordinates, doubling the columns scales black ones; only the second
# matches the (-2)^{V_b} weights.
mu, lam = Partition((2,)), Partition((2, 1))
print("rows doubled:   ", zonal_identity(mu, lam, "rows"))
print("columns doubled:", zonal_identity(mu, lam, "columns"))
print("\nsigned map sum for mu=(2):", map_sum(mu, -1, "oriented"))
