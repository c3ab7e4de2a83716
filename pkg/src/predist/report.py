"""JSON and text rendering of an :class:`~predist.characterize.Analysis`."""

import json
import math

import numpy as np

from .characterize import excess_means
from .config import DEFAULT_TOLERANCES
from .spectral import ADJACENCY, pd_closed_form, rd_closed_form

SIGNIFICANT_DIGITS = 12


def _clean(value):
    """JSON-ready copy: numpy scalars unwrapped, floats at 12 significant digits."""
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_clean(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
        value = float(f"{value:.{SIGNIFICANT_DIGITS}g}")
        return 0.0 if value == 0 else value
    return value


def _gate_dict(g):
    return {
        "kind": g.kind,
        "d": g.d,
        "D": g.D,
        "target": g.target,
        "hm": g.hm,
        "am": g.am,
        "hm_gap": g.hm_gap,
        "equality": g.equality,
        "am_equality": g.am_equality,
        "direct_check": g.direct_check,
        "direct_residual": g.direct_residual,
        "drg": g.drg_verdict,
        "closed_form_drg": g.closed_form_drg,
        "regular_implied": g.regular_implied,
        "warnings": list(g.warnings),
    }


def _poly_table(sys):
    point = sys.normalization_point
    return {
        "normalization_point": point,
        "coefficients": [p.coef.tolist() for p in sys.polys],
        "values": sys.norm_values.tolist(),
        "sum_values": np.cumsum(sys.norm_values).tolist(),
        "alpha": sys.alpha.tolist(),
        "beta": sys.beta[: sys.d].tolist(),
        "gamma": sys.gamma[1:].tolist(),
    }


def build_report(a, tol=DEFAULT_TOLERANCES):
    """Plain nested dict with fixed key order; floats already rounded."""
    g, ds, dd = a.graph, a.degrees, a.distances
    report = {
        "tolerances": tol.as_dict(),
        "graph": {
            "n": g.n,
            "edges": g.num_edges,
            "regular": ds.is_regular,
            "mean_degree": ds.mean_degree,
            "mean_square_degree": ds.mean_square_degree,
        },
        "D": dd.diameter,
        "spectra": {},
        "polynomials": {},
        "closed_forms": {},
        "means": None,
        "gates": {},
        "verdicts": [],
        "notes": list(a.notes),
    }
    for kind, s in a.spectra.items():
        report["spectra"][kind] = {
            "distinct": list(s.distinct),
            "multiplicities": list(s.multiplicities),
            "d": s.d,
            "alternative_d": list(s.alternative_d),
            "warnings": list(s.warnings),
        }
        report["polynomials"][kind] = _poly_table(a.systems[kind])
        if kind == ADJACENCY:
            report["closed_forms"]["p_d(lambda_0)"] = pd_closed_form(s)
        else:
            report["closed_forms"]["r_d(0)"] = rd_closed_form(s)
    if dd.diameter >= 1:
        m = excess_means(dd)
        report["means"] = {
            "values": list(m.values),
            "am": m.am,
            "hm": m.hm,
            "all_equal": m.all_equal,
            "vertices_without_antipodes": m.vertices_without_antipodes,
        }
    for kind, gate in a.gates.items():
        report["gates"][kind] = _gate_dict(gate)
        report["verdicts"].append(verdict_line(gate))
    return _clean(report)


def verdict_line(gate):
    poly = "q" if gate.kind == ADJACENCY else "s"
    at = "k" if gate.kind == ADJACENCY else "0"
    rel = "=" if gate.equality else ">"
    tail = "distance-regular" if gate.drg_verdict else (
        "A_D is a polynomial in the matrix" if gate.direct_check else "A_D is not given by the tail sum")
    return (f"{gate.kind}: HM {gate.hm:.10g} {rel} {poly}_{gate.D - 1}({at}) = {gate.target:.10g}; "
            f"D={gate.D}, d={gate.d}; {tail}")


def dumps_record(record):
    """One census hit as a single JSON line."""
    return json.dumps(_clean(record), allow_nan=False)


def dumps(report):
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def render_text(report):
    lines = []
    gr = report["graph"]
    lines.append(f"graph: n={gr['n']} edges={gr['edges']} regular={gr['regular']} "
                 f"mean degree={gr['mean_degree']:g} mean square degree={gr['mean_square_degree']:g}")
    lines.append(f"diameter D={report['D']}")
    for kind, s in report["spectra"].items():
        shown = ", ".join(f"{v:.8g}^{m}" for v, m in zip(s["distinct"], s["multiplicities"]))
        lines.append(f"{kind} spectrum (d={s['d']}): {shown}")
        for w in s["warnings"]:
            lines.append(f"  warning: {w}")
    for kind, t in report["polynomials"].items():
        name = "p" if kind == ADJACENCY else "r"
        lines.append(f"{kind} predistance polynomials (at {t['normalization_point']:.8g}):")
        for i, (coef, v, q) in enumerate(zip(t["coefficients"], t["values"], t["sum_values"])):
            cs = " ".join(f"{c:+.6g}" for c in coef)
            lines.append(f"  {name}_{i}: value {v:.10g}, running sum {q:.10g}; coefficients [{cs}]")
    for key, v in report["closed_forms"].items():
        lines.append(f"closed form {key} = {v:.10g}")
    if report["means"]:
        m = report["means"]
        lines.append(f"n - k_D(x): AM={m['am']:.10g} HM={m['hm']:.10g} all equal={m['all_equal']}")
        if m["vertices_without_antipodes"]:
            lines.append(f"  note: {m['vertices_without_antipodes']} vertices have no vertex at distance D")
    for kind, g in report["gates"].items():
        lines.append(f"{kind} gate: equality={g['equality']} direct_check={g['direct_check']} "
                     f"(residual {g['direct_residual']:.3g}) drg={g['drg']}"
                     + (" regular_implied=True" if g["regular_implied"] else ""))
        for w in g["warnings"]:
            lines.append(f"  warning: {w}")
    for v in report["verdicts"]:
        lines.append(f"verdict: {v}")
    for note in report["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
