"""Characteristic 2, over GF(2)(t).

The field GF(2) is 2-closed, so the constructions below are rejected there.
Over GF(2)(t) the element t is not a square and X^2 + t has no root.
"""

from leibnizkit.algebra import check_left_leibniz, leibniz_kernel, centers
from leibnizkit.errors import NotStrong, RootExists
from leibnizkit.latticescan import ScanBudget, check_property_IorSI, verify_declared_radical
from leibnizkit.scalars import GF, function_field, is_square, quadratic_has_root
from leibnizkit.zoo import build_example_3_8, build_example_3_10, build_strong_extraspecial

K = function_field(2, "t")
t = K.gen()
print("t square?", is_square(t), "  X^2+t root?", quadratic_has_root(K.zero, t).value)

try:
    build_example_3_10(GF(2), 1)
except RootExists as exc:
    print("GF(2):", exc)

L = build_example_3_10(K, t)
print("Leib(L) =", L.format_subspace(leibniz_kernel(L)), "  center =", L.format_subspace(centers(L)[2]))
print("span{a, z} nilpotent ideal:", verify_declared_radical(L, L.span("a", "z")).details["nilpotent ideal"])
r = check_property_IorSI(L, ScanBudget.for_field(K, max_degree=2))
print(r.claim, "-", r.subalgebras, "distinct subalgebras reached")

# strongness: [x, x] != 0 off the center
try:
    build_strong_extraspecial(GF(2), 2, [1, 1])
except NotStrong as exc:
    print("GF(2):", exc)
print(build_strong_extraspecial(K, 2, [1, t]).name, "is strong")

# the four-dimensional table as printed, and a symmetric reading of it
printed = build_example_3_8(K, t, t)
bad = [tuple(printed.basis_names[i] for i in v) for v in check_left_leibniz(printed)]
print("printed table fails the identity on", bad)
sym = build_example_3_8(K, t, t, variant="symmetric")
r = check_property_IorSI(sym, ScanBudget.for_field(K, max_degree=1))
print("symmetric reading:", r.claim, "at", sym.format_subspace(r.counterexample.space))
