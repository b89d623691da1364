"""Second zeta factor of the resolved surfaces, and the Artin invariant window."""

from insepsurf.arithmetic import artin_invariant_bounds, artin_tate_product, p2_blown_up, zeta_data
from insepsurf.cli import build, named
from insepsurf.surface import analyze

for ident in ("bmy", "minustwo_d8", "minustwo_d4"):
    d, k = build(named(ident))
    rep = analyze(d)
    z = zeta_data(d.C, d.F, k)
    blow = sum(s.blowups for s in rep["inventory"])
    P2 = p2_blown_up(z.P2, blow, z.q)
    a = artin_invariant_bounds(rep)
    at = artin_tate_product(d, rep, k)
    print(f"{ident}: q = {z.q}, deg P2 = {len(P2) - 1} (b2 = {rep['b'][2]}), "
          f"root deviation {z.max_root_deviation():.1e}")
    print(f"    sigma in [{a.sigma_lo}, {a.sigma_hi}]; Artin-Tate exponent {at['exponent']}")
