"""The Heisenberg algebra fails the property; follow the counterexample."""

from leibnizkit.algebra import classify_subalgebra, upper_idealizer_series
from leibnizkit.latticescan import check_property_IorSI
from leibnizkit.scalars import GF
from leibnizkit.zoo import build_heisenberg

H = build_heisenberg(GF(2))
r = check_property_IorSI(H)
print(r.claim)

x = r.counterexample
c = classify_subalgebra(H, x)
print(H.format_subspace(x.space), "is", c.verdict.value)
print("idealizer", H.format_subspace(c.idealizer), "contains", H.format_vector(c.witness))
s, y, prod = c.escape
print(f"[{H.format_vector(y)}, {H.format_vector(s)}] or its mirror = {H.format_vector(prod)} leaves the span")

# the series climbs to L in two steps
print(" < ".join(H.format_subspace(s) for s in upper_idealizer_series(H, x)))
