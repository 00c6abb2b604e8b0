"""A small algebra where every subalgebra is an ideal or self-idealizing.

L = A + span{w}, A abelian, [w, a] = sigma a.  We scan every subspace of
GF(5)^4 and look at the structure the scan certifies.
"""

from leibnizkit.algebra import analyze_action, centers, classify_subalgebra, generated_subalgebra, idealizer
from leibnizkit.latticescan import check_property_IorSI, nilpotent_radical
from leibnizkit.scalars import GF
from leibnizkit.zoo import build_theorem_A

F = GF(5)
L = build_theorem_A(F, m=3, sigma=2)
print(L.dumps())

# exhaustive: 1120 subspaces, each closed one classified
report = check_property_IorSI(L)
print(report.claim, report.subspaces_scanned, "subspaces,", report.subalgebras, "subalgebras")
print("ideals:", report.ideals, " self-idealizing:", report.self_idealizing)

A = L.span("a1", "a2", "a3")
W = L.span("w")
print("left center  ", L.format_subspace(centers(L)[0]))
print("Ln(L)        ", L.format_subspace(nilpotent_radical(L)))
print("I(W)         ", L.format_subspace(idealizer(L, W)))
lam, rho = analyze_action(L, L.basis_vector("w"), A)
print("action of w  ", f"[w, a] = {lam} a,  [a, w] = {rho} a")

# a1 + w is not closed on its own: [a1 + w, a1 + w] = 2 a1
H = generated_subalgebra(L, [L.element(a1=1, w=1)])
c = classify_subalgebra(L, H)
print(L.format_subspace(H.space), c.verdict.value)
