"""
Five ways to compute B_n
========================

Brute force over B_n, the tableau sum, the transfer matrices, the
q-derivative recurrence and the J-fraction all give the same polynomial.
At t = 1 there is also a closed formula.
"""
import time

from btableaux import ansatz, genfun
from btableaux.tableaux import b_poly_tableaux

n = 5
routes = {
    "permutations": lambda: genfun.b_poly_perms(n),
    "tableaux": lambda: b_poly_tableaux(n),
    "matrices (first solution)": lambda: ansatz.ansatz_bn(n, 1),
    "matrices (second solution)": lambda: ansatz.ansatz_bn(n, 2),
    "recurrence": lambda: ansatz.recurrence_bn(n),
    "J-fraction": lambda: ansatz.cf_series(n)[n],
}
values = {}
for name, fn in routes.items():
    start = time.perf_counter()
    values[name] = fn()
    print(f"{name:<28} {time.perf_counter() - start:6.3f}s")
print("all equal:", len(set(values.values())) == 1)
print("B_5 has", len(values["recurrence"]), "terms")

# the closed formula at t = 1 divides exactly by (1 - q)^n
print("B_5(y, 1, q) =", ansatz.closed_form_y1q(n))
print("matches:", ansatz.closed_form_y1q(n) == values["recurrence"].subs(t=1))
