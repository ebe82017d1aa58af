"""
The sign-flipping bijection
===========================

Cut the spirals of a pignose diagram, rotate, mirror and glue back.  The
result has one more negative entry, the same number of crossings, and
its flag weak excedance count is reflected around n + 1/2.
"""
from btableaux import genfun, signedperm as sp
from btableaux.matchings import phi, reverse, rho_power, split_spirals
from btableaux.render import render_pignose

pi = sp.SignedPermutation((3, -4, -2, 1))
print(render_pignose(pi))

split = split_spirals(pi)
rotated = rho_power(split.matching, 2 * split.extra + 1)
print("after rotation and reversal:", reverse(rotated))

image = phi(pi)
print(f"phi({pi}) = {image}")
for name, f in [("cro", sp.crossings), ("neg", sp.negatives), ("fwex", sp.fwex)]:
    print(f"  {name}: {f(pi)} -> {f(image)}")

# the consequence: B*_{n,k} is symmetric in k <-> 2n + 1 - k
n = 3
for k in range(1, 2 * n + 1):
    print(f"B*_{{{n},{k}}} =", genfun.b_star(n, k))
