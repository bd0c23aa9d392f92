"""Analysis reports: the full pipeline for one triple, exact JSON
serialization, deterministic text rendering, and a result cache.

Numbers are serialized exactly: integers as JSON integers, rationals as
"num/den" strings, cyclotomic values as coefficient-string vectors.  No
floats appear anywhere in a report.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Dict, List, Optional

from . import __version__
from .lattice import UnimodularForm, diagonalize
from .obstruction import build_constraints, decide
from .plumbing import (canonical_resolution, graph_signature,
                       intersection_matrix, propagate_rotations)
from .seifert import BrieskornTriple, seifert_invariants, standard_action_valid
from .spectral import (eta_from_fixed_data, fixed_point_data, ll_extension_search,
                       rho_from_eta)

SCHEMA_VERSION = 1
CACHE_ENV_VAR = "BRIESKORN_CACHE_DIR"


def _frac(x) -> str:
    return str(Fraction(x))


def build_analysis(a: int, b: int, c: int, p: Optional[int] = None) -> Dict:
    """Run the full pipeline on Sigma(a,b,c), optionally with a Z/p action.

    Sections without p (Seifert data, graph, form, diagonalization) are
    always present; the equivariant, obstruction and locally-linear
    sections require p.
    """
    triple = BrieskornTriple.of(a, b, c)
    if p is not None:
        if not standard_action_valid(triple, p):
            raise ValueError(f"p={p} divides {triple.product}; "
                             "the standard action is not free")
    sd = seifert_invariants(triple)
    graph = canonical_resolution(sd)
    q = intersection_matrix(graph)
    signature, definiteness = graph_signature(graph)
    form = UnimodularForm.from_matrix(q)
    diag = diagonalize(form)

    report: Dict = {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "input": {"a": triple.a1, "b": triple.a2, "c": triple.a3, "p": p},
        "seifert": {
            "b": list(sd.b),
            "delta": sd.delta,
            "r_invariant": sd.r_invariant,
        },
        "graph": {
            "weights": list(graph.weights),
            "edges": [list(e) for e in sorted(graph.edges)],
            "center": graph.center,
        },
        "form": {
            "matrix": [list(row) for row in q],
            "determinant": form.determinant,
            "signature": signature,
            "definiteness": definiteness,
        },
    }

    if diag.found:
        report["diagonalization"] = {
            "found": True,
            "root_pairs": form.n,
            "C": [list(row) for row in diag.c],
            "C_inv": [list(row) for row in diag.c_inv],
        }
    else:
        report["diagonalization"] = {
            "found": False,
            "root_pairs": diag.root_pairs,
            "certificate": diag.message,
        }

    conclusions: List[str] = []
    name = str(triple)
    if sd.r_invariant == -1:
        conclusions.append(
            f"R-invariant -1: the necessary condition for {name} to bound "
            "a smooth contractible 4-manifold holds.")
    else:
        conclusions.append(
            f"R-invariant {sd.r_invariant} != -1: {name} does not bound a "
            "smooth contractible 4-manifold.")
    if not diag.found:
        conclusions.append(
            f"The plumbing form admits no integral diagonalization "
            f"({diag.root_pairs} root pairs < rank {form.n}): {name} does "
            "not bound a smooth acyclic 4-manifold whose fundamental group "
            "is normally generated by the boundary.")

    if p is not None and diag.found:
        markup = propagate_rotations(graph, p)
        fd = fixed_point_data(graph, markup)
        report["equivariant"] = {
            "p": p,
            "fixed_points": [list(pt) for pt in markup.isolated_points],
            "fixed_spheres": [
                {"node": node, "self_intersection": w, "normal_rotation": cf}
                for node, w, cf in markup.fixed_spheres
            ],
            "invariant_nodes": list(markup.invariant_nodes),
        }
        verdict = decide(build_constraints(markup, diag))
        report["obstruction"] = {
            "status": verdict.status,
            "certificate": verdict.certificate.render() if verdict.certificate else None,
        }
        if verdict.status == "infeasible":
            conclusions.append(
                f"If {name} bounds a smooth acyclic 4-manifold W whose "
                "fundamental group is normally generated by the image of "
                "the boundary's, then the standard free Z/"
                f"{p}-action on {name} does not extend to a smooth action "
                "on any such W (in particular not over a contractible one).")
        else:
            conclusions.append(
                "The orientation/sign constraint system is satisfiable; "
                "this criterion does not obstruct a smooth extension.")

        eta = eta_from_fixed_data(fd, p)
        rho = rho_from_eta(eta)
        candidates = ll_extension_search(triple, p)
        report["locally_linear"] = {
            "rho_quotient": [_frac(x) for x in rho.values],
            "candidates": [
                {
                    "r": cand.r,
                    "s": cand.s,
                    "product_mod_p": cand.product_residue,
                    "rs_mod_p": cand.rs_residue,
                    "multiset_classes": list(cand.multiset_residues),
                    "rho_match": cand.rho_match,
                }
                for cand in candidates
            ],
        }
        matched = [cand for cand in candidates if cand.rho_match]
        if matched:
            cand = matched[0]
            conclusions.append(
                f"The standard free Z/{p}-action extends to a locally "
                f"linear action with exactly one fixed point, of rotation "
                f"data ({cand.r},{cand.s}), on any smooth contractible "
                f"4-manifold that {name} bounds: the quotient satisfies the "
                f"degree-one-map congruences for L({p};{cand.r},{cand.s}) "
                "and all rho invariants agree (the homology equivalence is "
                "simple, so the torsion condition holds).")
        else:
            conclusions.append(
                "No lens space satisfies the congruence and rho conditions; "
                "this search finds no one-fixed-point locally linear "
                "extension.")

    report["conclusions"] = conclusions
    return report


def render_json(report: Dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(report: Dict) -> str:
    inp = report["input"]
    lines = []
    name = f"Sigma({inp['a']},{inp['b']},{inp['c']})"
    lines.append(f"analysis of {name}" + (f" with p = {inp['p']}" if inp["p"] else ""))
    sf = report["seifert"]
    lines.append(f"  seifert: b = {tuple(sf['b'])}, delta = {sf['delta']}, "
                 f"R = {sf['r_invariant']}")
    g = report["graph"]
    lines.append(f"  graph: {len(g['weights'])} nodes, weights {g['weights']}")
    f = report["form"]
    lines.append(f"  form: det = {f['determinant']}, signature = {f['signature']}"
                 f" ({f['definiteness']})")
    d = report["diagonalization"]
    if d["found"]:
        lines.append(f"  diagonalization: found ({d['root_pairs']} root pairs)")
    else:
        lines.append(f"  diagonalization: failed ({d['certificate']})")
    if "equivariant" in report:
        eq = report["equivariant"]
        pts = ", ".join(f"({a},{b})" for a, b in eq["fixed_points"])
        lines.append(f"  fixed points: {pts}")
        spheres = ", ".join(
            f"node {s['node']} (square {s['self_intersection']}, c_F = "
            f"{s['normal_rotation']})" for s in eq["fixed_spheres"])
        lines.append(f"  fixed spheres: {spheres}")
    if "obstruction" in report:
        ob = report["obstruction"]
        lines.append(f"  obstruction: {ob['status']}")
        if ob["certificate"]:
            lines.append(f"    {ob['certificate']}")
    if "locally_linear" in report:
        ll = report["locally_linear"]
        lines.append(f"  rho of quotient: {ll['rho_quotient']}")
        for cand in ll["candidates"]:
            lines.append(
                f"  lens candidate ({cand['r']},{cand['s']}): product "
                f"{cand['product_mod_p']} = rs {cand['rs_mod_p']} (mod p), "
                f"rho match: {cand['rho_match']}")
        if not ll["candidates"]:
            lines.append("  lens candidates: none")
    lines.append("conclusions:")
    for sentence in report["conclusions"]:
        lines.append(f"  - {sentence}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cache (an optimization only; verdicts never depend on it)
# ---------------------------------------------------------------------------

def cache_dir() -> str:
    return os.environ.get(
        CACHE_ENV_VAR,
        os.path.join(os.path.expanduser("~"), ".cache", "brieskorn"))


def _cache_path(a: int, b: int, c: int, p: Optional[int]) -> str:
    key = f"analyze_{a}_{b}_{c}_p{p if p is not None else 'none'}" \
          f"_s{SCHEMA_VERSION}_v{__version__}.json"
    return os.path.join(cache_dir(), key)


def cached_analysis(a: int, b: int, c: int, p: Optional[int] = None,
                    use_cache: bool = True) -> Dict:
    """build_analysis with a transparent file cache keyed by input and
    version."""
    path = _cache_path(a, b, c, p)
    if use_cache and os.path.exists(path):
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    report = build_analysis(a, b, c, p)
    if use_cache:
        os.makedirs(cache_dir(), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as handle:
            handle.write(render_json(report))
        os.replace(tmp, path)
    return report
