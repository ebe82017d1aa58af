"""
Signed permutations as weighted Motzkin paths
=============================================

Two encodings: one scans values bottom to top and records peaks and
valleys, the other reads the arrow diagram on [-n, n] left to right.
Summing path weights recovers B_n either way.
"""
from btableaux import genfun
from btableaux.paths import fv1, fz1, path_sum
from btableaux.render import render_path
from btableaux.signedperm import SignedPermutation

for images, encode in [((3, -5, -2, 4, 1), fv1), ((-5, 4, 2, -3, 1), fz1)]:
    pi = SignedPermutation(images)
    p = encode(pi)
    print(f"{encode.__name__}({pi}):")
    print(render_path(p))
    print("step weights:", ", ".join(w.to_text() for w in p.step_weights()))
    print()

for n in range(5):
    same = path_sum(n, "M") == genfun.b_poly(n) == path_sum(n, "N")
    print(f"n = {n}: both path sums equal B_n: {same}")
