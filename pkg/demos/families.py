"""Families where the Picard scheme grows non-reduced while b1 stays fixed."""

from insepsurf.cli import build, named
from insepsurf.surface import analyze

print("picard_family(q, d_F): h01 rises with d_F, b1 = 2q does not")
for q in (2, 3):
    for dF in (4, 8, 12, 16):
        rep = analyze(build(named(f"picard_family({q},{dF})"))[0])
        print(f"  q={q} d_F={dF:2}  chi={rep['chi']:3}  h01={rep['h01'].value:3}  b1={rep['b'][1]}"
              f"  reduced={rep['predicates']['picard_reduced']}")

print("\nvector-field families")
for ident in ("vf_family_rational(1)", "vf_family_rational(2)", "vf_family_abelian(1)", "vf_family_abelian(2)"):
    rep = analyze(build(named(ident))[0])
    p = rep["predicates"]
    print(f"  {ident:22} chi={rep['chi']:3} K^2={rep['k2_resolved']:4} p_g={rep['h02'].value:3}"
          f"  uniruled={p['uniruled']}  vector fields={p['has_global_vector_fields']}")
