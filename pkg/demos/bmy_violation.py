"""Walk through the surface that breaks the Bogomolov-Miyaoka-Yau inequality.

C is the Artin-Schreier curve z^2 + z = x^7, F is the projective line, and the
quotient of C x F by the diagonal field has a single elliptic singularity.
"""

from insepsurf.cli import build, named
from insepsurf.surface import analyze

d, k = build(named("bmy"))
print(f"g(C) = {d.gC}, g(F) = {d.gF}, d_C = {d.dC}, d_F = {d.dF}")

rep = analyze(d)
for s in rep["inventory"]:
    print(f"singular point: {s.type} from orders ({s.a}, {s.b}) at common {s.configuration}")

# the singular surface first, then the correction from the resolution
print(f"K^2 before resolving: {rep['k2_singular']}, after: {rep['k2_resolved']}")
print(f"chi(O) before: {rep['chi_singular']}, after: {rep['chi']}")

c1sq, chi = rep["k2_resolved"], rep["chi"]
print(f"c1^2 = {c1sq} against 9 chi = {9 * chi}: violated = {c1sq > 9 * chi}")
print(f"h01 in [{rep['h01'].lo}, {rep['h01'].hi}], b1 = {rep['b'][1]}")
print("Picard scheme reduced:", rep["predicates"]["picard_reduced"])
