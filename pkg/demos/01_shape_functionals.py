"""
Shape functionals
=================

A Young diagram can be drawn in French coordinates (boxes in the first
quadrant) or rotated by 45 degrees in Russian coordinates, where its upper
boundary is a function omega(z).  The functionals S_k integrate powers of the
content z = x - y over the diagram; they generate all polynomial functions
on diagrams.
"""
from fractions import Fraction

from youngcalc import (Partition, Profile, SPolynomial, content_derivative, dilate,
                       evaluate_s_polynomial, profile_of_partition, s_k_partition, s_k_profile)

lam = Partition.parse("4,3,1")
print("lambda =", lam, " conjugate =", lam.conjugate())
print("contents:", lam.contents())

# S_2 is the area, S_3 is twice the sum of contents
for k in range(2, 6):
    print(f"S_{k}({lam}) = {s_k_partition(lam, k)}")

# the same numbers from the staircase profile
omega = profile_of_partition(lam)
print("\nprofile breakpoints:", [(str(z), str(w)) for z, w in omega.breakpoints])
print("S_4 from the profile:", s_k_profile(omega, 4))

# Profiles need not be staircases.  Any 1-Lipschitz function that equals |z|
# far away will do; this one has no symmetry at all.
skew = Profile([(-3, 3), (-1, Fraction(7, 2)), (1, 3), (Fraction(5, 2), Fraction(5, 2))])
print("\nskew profile area:", skew.area(), " strict:", skew.is_strict)

# dilation by t multiplies S_k by t^k
t = Fraction(3, 2)
for k in (2, 3, 4):
    print(f"S_{k}(t*skew) / S_{k}(skew) = {s_k_profile(dilate(skew, t), k) / s_k_profile(skew, k)}"
          f"   (t^{k} = {t ** k})")

# Polynomials in the S_k and the content derivative
S2, S3 = SPolynomial.generator(2), SPolynomial.generator(3)
P = S2 * S3 - 2 * S2
print("\nP =", P, " P(lambda) =", evaluate_s_polynomial(P, lam))
print("d/dC_z P =", content_derivative(P))
