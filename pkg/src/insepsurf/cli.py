"""Command line front end: scenario runner, regression suite and local resolver.

    insepsurf analyze scenario.json [--json]
    insepsurf paper-suite
    insepsurf resolve-local --a 4 --b 2 --configuration poles
    insepsurf catalog
    insepsurf zeta scenario.json

Exit codes: 0 success, 1 regression mismatch, 2 invalid scenario,
3 unclassified singularity (a partial report is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from . import arithmetic, localres
from .algebra import GF2k, Poly
from .curves import BudgetExceeded, curve_from_json, genus
from .surface import InvalidData, SurfaceData, analyze
from .vectorfields import vf_from_json

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_UNCLASSIFIED = 0, 1, 2, 3


class InvalidScenario(ValueError):
    pass


# --- named scenarios -------------------------------------------------------------------

def _smallest_field(n):
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def _as_curve(h):
    return {"type": "artin_schreier", "h": h}


P1 = {"type": "p1"}


def bmy():
    return {"characteristic": 2, "k": 1, "curve_C": _as_curve(4), "curve_F": P1,
            "vf_C": {"catalog": "as_ddx"}, "vf_F": {"catalog": "delta1"}, "options": {"zeta": True}}


def bmy_genus4():
    return {"characteristic": 2, "k": 1, "curve_C": _as_curve(5), "curve_F": P1,
            "vf_C": {"catalog": "as_ddx"}, "vf_F": {"catalog": "delta1"}, "options": {"zeta": False}}


def minustwo_d8():
    return {"characteristic": 2, "k": 1, "curve_C": _as_curve(3), "curve_F": P1,
            "vf_C": {"catalog": "as_ddx"}, "vf_F": {"catalog": "delta1"}, "options": {"zeta": True}}


def minustwo_d4():
    # alpha is the generator of GF(8); a*alpha + b = 0 makes the field additive
    E = {"type": "elliptic_deuring", "alpha": 2}
    vf = {"catalog": "delta_elliptic", "a": 1, "b": 2}
    return {"characteristic": 2, "k": 3, "curve_C": E, "curve_F": E, "vf_C": vf, "vf_F": vf,
            "options": {"zeta": True}}


def picard_family(q, dF):
    """Genus-q Artin-Schreier curve against P^1 with d_F = dF."""
    if dF % 2 or dF < 2:
        raise InvalidScenario("d_F must be a positive even integer")
    n = dF // 2
    m = (q - 1) // 2
    k = _smallest_field(max(2 * n, m, 2))
    return {"characteristic": 2, "k": k, "curve_C": _as_curve(q + 1), "curve_F": P1,
            "vf_C": {"catalog": "as_pullback", "a": list(range(m))},
            "vf_F": {"catalog": "delta_prime", "a": list(range(n)), "b": list(range(n, 2 * n))},
            "options": {"zeta": False}}


def albanese_family(q, dF):
    return picard_family(q, dF)


def vf_family_rational(n):
    k = _smallest_field(2 * n)
    vf = {"catalog": "delta_prime", "a": list(range(n)), "b": list(range(n, 2 * n))}
    return {"characteristic": 2, "k": k, "curve_C": P1, "curve_F": P1, "vf_C": vf, "vf_F": vf,
            "options": {"zeta": True}}


def vf_family_abelian(n):
    """Ordinary genus-1 curve z^2 + x(x+1) z + x(x+1)(x^2+x+1) over GF(8) on both sides."""
    if not 1 <= n <= 3:
        raise InvalidScenario("vf_family_abelian needs 1 <= n <= 3 over GF(8)")
    F = GF2k(3)
    a, b = [2, 3, 4][:n], [5, 6, 7][:n]
    num, den = Poly(F, (1,)), Poly(F, (1,))
    for ai, bi in zip(a, b):
        num = num * Poly(F, (ai, 1)) ** 2
        den = den * Poly(F, (bi, 1)) ** 2
    curve = {"type": "hyperelliptic", "branch": [0, 1], "gpoly": [1, 1, 1]}
    vf = {"base": "ddx", "scale_num": list(num.coeffs), "scale_den": list(den.coeffs)}
    return {"characteristic": 2, "k": 3, "curve_C": curve, "curve_F": curve, "vf_C": vf, "vf_F": vf,
            "options": {"zeta": True}}


NAMED = {
    "bmy": bmy,
    "bmy_genus4": bmy_genus4,
    "minustwo_d4": minustwo_d4,
    "minustwo_d8": minustwo_d8,
    "picard_family": picard_family,
    "albanese_family": albanese_family,
    "vf_family_rational": vf_family_rational,
    "vf_family_abelian": vf_family_abelian,
}


def named(identifier):
    """Expand 'picard_family(2,8)' or 'bmy' into a scenario dict."""
    ident = identifier.strip()
    if "(" in ident:
        name, rest = ident.split("(", 1)
        args = [int(x) for x in rest.rstrip(")").split(",") if x.strip()]
    else:
        name, args = ident, []
    if name not in NAMED:
        raise InvalidScenario(f"unknown named scenario {name!r}")
    s = NAMED[name](*args)
    s["name"] = ident.replace(" ", "")
    return s


# --- building and reporting --------------------------------------------------------------

def build(scn):
    """SurfaceData from a scenario dict; raises InvalidScenario on schema errors."""
    try:
        if scn.get("characteristic", 2) != 2:
            raise InvalidScenario("only characteristic 2 is supported")
        k = int(scn.get("k", 1))
        if k < 1:
            raise InvalidScenario("k must be positive")
        F = GF2k(k)
        C = curve_from_json(scn["curve_C"], F)
        Fc = curve_from_json(scn["curve_F"], F)
        vC = vf_from_json(scn["vf_C"], C)
        vF = vf_from_json(scn["vf_F"], Fc)
    except InvalidScenario:
        raise
    except (KeyError, TypeError, ValueError) as ex:
        raise InvalidScenario(f"{type(ex).__name__}: {ex}") from ex
    return SurfaceData(vC, vF), k


def _num(value, by, status="exact"):
    if isinstance(value, Fraction):
        value = str(value) if value.denominator != 1 else value.numerator
    return {"value": value, "status": status, "by": by}


def _hv(h):
    return h.to_json()


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def report_json(d, rep, k, zeta=False, budget=24):
    out = {
        "status": rep["status"],
        "validation": rep["validation"],
        "curves": {
            "C": {**d.C.to_json(), "genus": d.gC},
            "F": {**d.F.to_json(), "genus": d.gF},
        },
        "vector_fields": {
            side: {"pole_degree": v.pole_degree, "zero_degree": v.zero_degree, "type": str(v.pclass),
                   "divisor": v.divisor.to_json()}
            for side, v in (("C", d.vC), ("F", d.vF))
        },
        "inventory": [s.to_json() for s in rep["inventory"]],
        "invariants": {
            "k2_singular": _num(rep["k2_singular"], "canonical divisor of the double cover of the twisted product"),
            "chi_singular": _num(rep["chi_singular"], "Riemann-Roch for N^vee on the product"),
        },
    }
    if rep["status"] != "ok":
        out["blocked"] = "unclassified singularity: resolution-dependent invariants are not computed"
        return out
    inv = out["invariants"]
    inv["chi_singular_kunneth"] = _num(rep["chi_singular_kunneth"], "Kunneth for N^vee = A [x] B")
    inv["k2_resolved"] = _num(rep["k2_resolved"], "singular value plus Z^2 of each elliptic fundamental cycle")
    inv["chi"] = _num(rep["chi"], "chi(O_X') minus the number of elliptic singularities")
    inv["c2"] = _num(rep["c2"], "Noether formula")
    for i, b in enumerate(rep["b"]):
        inv[f"b{i}"] = _num(b, "etale Betti numbers of the blown-up product" if i % 2 else
                            ("Euler characteristic" if i == 2 else "connected projective surface"))
    inv["b2_from_blowups"] = _num(rep["b2_blowup_check"], "2 + 4 g(C) g(F) + exceptional curves of the resolutions")
    out["hodge"] = {"h01": _hv(rep["h01"]), "h02": _hv(rep["h02"]), "h10": _hv(rep["h10"])}
    if rep["h10_claimed"] is not None:
        out["hodge"]["h10_claimed_lower"] = rep["h10_claimed"]
    out["fibrations"] = {
        "over_C": {"fiber_genus": _num(rep["fiber_genus_over_C"], "g(F) + d_F/2"),
                   "cusps": _jsonable(rep["cusps_over_C"])},
        "over_F": {"fiber_genus": _num(rep["fiber_genus_over_F"], "g(C) + d_C/2"),
                   "cusps": _jsonable(rep["cusps_over_F"])},
    }
    out["predicates"] = _jsonable(rep["predicates"])
    artin = arithmetic.artin_invariant_bounds(rep)
    out["artin"] = artin.to_json()
    out["artin_tate"] = arithmetic.artin_tate_product(d, rep, k)
    if rep["inventory"] and any(s.type.elliptic for s in rep["inventory"]):
        out["artin"]["lattice_note"] = "the (19)_0 graph contains a (-3)-curve, so NS is not an even lattice"
    if zeta:
        z = arithmetic.zeta_data(d.C, d.F, k, budget)
        blow = sum(s.blowups for s in rep["inventory"])
        p2x = arithmetic.p2_blown_up(z.P2, blow, z.q)
        out["zeta"] = {**z.to_json(), "P2_resolved": p2x, "blowups": blow,
                       "P2_resolved_note": "assumes every exceptional curve is defined over the base field",
                       "degree_matches_b2": len(p2x) - 1 == rep["b"][2]}
    return out


def run_scenario(scn, precision=24, budget=None, zeta=None):
    """(report dict, exit code) for a scenario dict."""
    d, k = build(scn)
    try:
        rep = analyze(d, precision)
    except InvalidData as ex:
        raise InvalidScenario(str(ex)) from ex
    opts = scn.get("options", {})
    z = opts.get("zeta", False) if zeta is None else zeta
    b = budget if budget is not None else opts.get("budget", 24)
    out = report_json(d, rep, k, z, b)
    if "name" in scn:
        out = {"scenario": scn["name"], **out}
    return out, (EXIT_OK if rep["status"] == "ok" else EXIT_UNCLASSIFIED)


def _val(field):
    if isinstance(field, dict) and "value" in field:
        v = field["value"]
        return f"[{v[0]}, {'inf' if v[1] is None else v[1]}]" if isinstance(v, list) else str(v)
    return str(field)


def render_table(out):
    lines = []
    if "scenario" in out:
        lines.append(f"scenario: {out['scenario']}")
    c, f = out["curves"]["C"], out["curves"]["F"]
    lines.append(f"C: {c['type']} genus {c['genus']}    F: {f['type']} genus {f['genus']}")
    lines.append(f"fields: {out['validation']['type']}, d_C = {out['vector_fields']['C']['pole_degree']}, "
                 f"d_F = {out['vector_fields']['F']['pole_degree']}")
    lines.append("singularities:")
    for s in out["inventory"]:
        lines.append(f"  {s['type']:<18} orders {tuple(s['orders'])} at common {s['configuration']}")
    if not out["inventory"]:
        lines.append("  none")
    lines.append("")
    width = 24
    for name, field in out["invariants"].items():
        lines.append(f"{name:<{width}}{_val(field):<10}{field['by']}")
    if out["status"] != "ok":
        lines.append(out["blocked"])
        return "\n".join(lines) + "\n"
    for name, field in out["hodge"].items():
        lines.append(f"{name:<{width}}{_val(field):<10}{field['by'] if isinstance(field, dict) else 'stronger bound stated for the family'}")
    for side in ("over_C", "over_F"):
        fb = out["fibrations"][side]
        lines.append(f"{'fiber genus ' + side:<{width}}{_val(fb['fiber_genus']):<10}{len(fb['cusps'])} cuspidal fibers")
    lines.append("")
    p = out["predicates"]
    inv = out["invariants"]
    K2, chi = inv["k2_resolved"]["value"], inv["chi"]["value"]
    rel = ">" if p["bmy_violated"] else "<="
    lines.append(f"BMY {'violated' if p['bmy_violated'] else 'holds'}: c1^2 = {K2} {rel} 9 chi = {9 * chi}")
    lines.append(f"disjoint (-2)-curves: {p['disjoint_minus2']}  (Miyaoka bound {p['miyaoka_bound']}, "
                 f"bound c1^2 + c2/2 = {p['sb_bound']}, Hodge index cap {p['hodge_index_cap']})")
    for key in ("picard_reduced", "crystalline_torsion_free", "frolicher_degenerates", "slope_degenerates",
                "ordinary", "has_global_vector_fields", "uniruled", "unirational"):
        v = p[key]
        lines.append(f"  {key:<26}{'undetermined' if v is None else v}")
    a = out["artin"]
    lines.append(f"Artin invariant: {a['sigma']['value'][0]} <= sigma <= {a['sigma']['value'][1]}; "
                 f"Artin-Tate: disc NS * |Br| = {out['artin_tate']['rhs']}")
    if "zeta" in out:
        lines.append(f"P2(S) = {out['zeta']['P2']}  (roots on |t| = 1/q: {out['zeta']['root_check']})")
    return "\n".join(lines) + "\n"


def dumps(obj):
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True)


# --- regression suite --------------------------------------------------------------------

def load_golden():
    text = resources.files("insepsurf").joinpath("data/golden.json").read_text()
    return json.loads(text)


def lookup(out, path):
    cur = out
    for part in path.split("."):
        if isinstance(cur, list):
            cur = cur[int(part)]
        else:
            cur = cur[part]
    return cur


def flatten_value(v):
    if isinstance(v, dict) and "value" in v:
        return v["value"]
    return v


def paper_suite(precision=24, budget=24, stream=None):
    """Run every golden scenario; returns (rows, all_passed)."""
    stream = stream or sys.stdout
    golden = load_golden()["scenarios"]
    rows = []
    ok_all = True
    for ident in sorted(golden):
        entry = golden[ident]
        scn = named(ident)
        try:
            out, code = run_scenario(scn, precision, budget)
        except (InvalidScenario, BudgetExceeded, localres.ResolutionError) as ex:
            rows.append((ident, False, [f"error: {ex}"]))
            ok_all = False
            continue
        diffs = []
        if code != entry.get("exit", 0):
            diffs.append(f"exit: expected {entry.get('exit', 0)}, got {code}")
        for path, exp in sorted(entry["expect"].items()):
            try:
                got = flatten_value(lookup(out, path))
            except (KeyError, IndexError, TypeError):
                got = "<missing>"
            if got != exp["value"]:
                diffs.append(f"{path}: expected {exp['value']!r}, got {got!r}")
        rows.append((ident, not diffs, diffs))
        ok_all = ok_all and not diffs
    for ident, ok, diffs in rows:
        print(f"{'PASS' if ok else 'FAIL'}  {ident}", file=stream)
        for dline in diffs:
            print(f"      {dline}", file=stream)
    return rows, ok_all


# --- catalog listing -----------------------------------------------------------------------

CATALOG_TEXT = {
    "curves": {
        "p1": "projective line; no parameters",
        "elliptic_deuring": "y^2 + alpha xy + y = x^3 (Deuring normal form); alpha: field element as int",
        "hyperelliptic": "z^2 + f z + f g = 0, f = prod (x - branch_i); branch: list of ints, gpoly: coefficients",
        "artin_schreier": "z^2 + z = x^(2h-1); h: positive integer, genus h - 1",
    },
    "vector_fields": {
        "delta1": "(x^-4 + x^-2) d/dx on P^1",
        "delta2": "(x^-2 + x^4) d/dx on P^1",
        "delta_prime": "prod (x - a_i)^2 / (x - b_i)^2 d/dx on P^1; a, b: lists of ints",
        "delta_elliptic": "(a + b x)((1 + alpha x) d/dx + (alpha y + x^2) d/dy); a, b: ints",
        "as_ddx": "canonical lift of d/dx to the Artin-Schreier curve",
        "as_pullback": "prod (x - a_i)^-2 d/dx lifted to the Artin-Schreier curve; a: list of ints",
        "pullback": '{"base": "ddx", "scale_num": [...], "scale_den": [...]}',
    },
    "named_scenarios": sorted(NAMED),
}


def _load_scenario(path):
    if path in NAMED or "(" in path:
        return named(path)
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as ex:
        raise InvalidScenario(f"cannot read scenario: {ex}") from ex


def main(argv=None):
    # shared flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON instead of a table")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="bit budget for point counting over extensions (default 24)")
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help="initial truncation order for local resolution (default 24)")
    ap = argparse.ArgumentParser(prog="insepsurf", description=__doc__.splitlines()[0], parents=[common])
    sub = ap.add_subparsers(dest="cmd", required=True)
    a = sub.add_parser("analyze", parents=[common], help="analyze a scenario file or named scenario")
    a.add_argument("scenario")
    a.add_argument("--zeta", action="store_true", help="include zeta data even if the scenario does not ask")
    sub.add_parser("paper-suite", parents=[common], help="run all named scenarios against the golden values")
    r = sub.add_parser("resolve-local", parents=[common], help="resolve a local model singularity")
    r.add_argument("--a", type=int, required=True)
    r.add_argument("--b", type=int, required=True)
    r.add_argument("--configuration", choices=["zeros", "poles"], default="zeros")
    sub.add_parser("catalog", parents=[common], help="list curve and vector-field constructors")
    z = sub.add_parser("zeta", parents=[common], help="zeta numerators and P_2 of the product")
    z.add_argument("scenario")
    args = ap.parse_args(argv)
    for name, default in (("json", False), ("budget", 24), ("precision", 24)):
        if not hasattr(args, name):
            setattr(args, name, default)

    try:
        if args.cmd == "analyze":
            scn = _load_scenario(args.scenario)
            out, code = run_scenario(scn, args.precision, args.budget, True if args.zeta else None)
            sys.stdout.write(dumps(out) + "\n" if args.json else render_table(out))
            return code
        if args.cmd == "paper-suite":
            _, ok = paper_suite(args.precision, args.budget)
            return EXIT_OK if ok else EXIT_MISMATCH
        if args.cmd == "resolve-local":
            v = localres.LocalVF(args.a, args.b, args.configuration, precision=args.precision)
            res = localres.resolve(v)
            out = {"a": args.a, "b": args.b, "configuration": args.configuration,
                   "order_table": str(localres.classify_pair(args.a, args.b, args.configuration)), **res.to_json()}
            if args.json:
                sys.stdout.write(dumps(out) + "\n")
            else:
                g = res.graph
                print(f"({args.a},{args.b}) {args.configuration}: {res.type} after {res.blowups} blow-ups "
                      f"over GF(2^{res.field_degree}), multiplicity {res.multiplicity}")
                print("self-intersections:", list(g.selfint))
                print("edges:", out["graph"]["edges"])
            return EXIT_OK if res.matched else EXIT_UNCLASSIFIED
        if args.cmd == "catalog":
            sys.stdout.write(dumps(CATALOG_TEXT) + "\n")
            return EXIT_OK
        if args.cmd == "zeta":
            scn = _load_scenario(args.scenario)
            d, k = build(scn)
            zd = arithmetic.zeta_data(d.C, d.F, k, args.budget)
            out = {"k": k, "genus_C": genus(d.C), "genus_F": genus(d.F), **zd.to_json()}
            sys.stdout.write(dumps(out) + "\n")
            return EXIT_OK
    except InvalidScenario as ex:
        print(f"invalid scenario: {ex}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, localres.NotIsolated) as ex:
        print(f"invalid input: {ex}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as ex:
        print(f"budget exceeded: {ex}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
