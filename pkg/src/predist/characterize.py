"""Harmonic/arithmetic-mean excess gates and distance-regularity verdicts.

For a connected graph with diameter ``D`` the harmonic mean of the numbers
``n - k_D(x)`` is bounded below by ``q_{D-1}(k)`` (regular graphs, adjacency
polynomials) or by ``s_{D-1}(0)`` (any graph, Laplacian polynomials), and the
bound is attained exactly when ``A_D`` equals the tail sum of the
predistance polynomials evaluated at ``A`` (resp. ``L``). Each gate decides
equality from the scalar bound and confirms it with that matrix identity.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

import numpy as np

from .config import (
    DEFAULT_TOLERANCES,
    AnalysisError,
    DisconnectedGraphError,
    InternalConsistencyError,
    IrregularGraphError,
    ParseError,
)
from .graph import bfs_distances, degree_stats, laplacian_matrix, parse_graph6
from .orthopoly import build_ortho_system
from .spectral import ADJACENCY, LAPLACIAN, pd_closed_form, rd_closed_form, spectrum_of


@dataclass(frozen=True)
class MeanReport:
    values: tuple
    am: float
    hm: float
    all_equal: bool
    # vertices whose eccentricity is below D, so that k_D(x) = 0
    vertices_without_antipodes: int


@dataclass
class GateReport:
    kind: str
    d: int
    D: int
    target: float
    hm: float
    am: float
    hm_gap: float
    equality: bool
    am_equality: bool
    direct_check: bool
    direct_residual: float
    drg_verdict: bool
    regular_implied: bool = False
    # q_{D-1}(M) == 1 on every pair at distance < D; only meaningful under equality
    cs_structure_residual: float = float("nan")
    closed_form_top: float = float("nan")
    closed_form_drg: bool = False
    excess_bound_ok: bool = True
    warnings: list = field(default_factory=list)


def excess_means(dd):
    """Arithmetic and harmonic means of ``n - k_D(x)`` over all vertices."""
    n, big_d = dd.n, dd.diameter
    if big_d < 1:
        raise AnalysisError("diameter 0 (single vertex): excess means are undefined")
    kd = dd.k(big_d)
    values = n - kd
    am = float(values.sum()) / n
    hm = n / float(np.sum(1.0 / values))
    return MeanReport(
        values=tuple(values.tolist()),
        am=am,
        hm=hm,
        all_equal=bool((values == values[0]).all()),
        vertices_without_antipodes=int((kd == 0).sum()),
    )


def _gate(g, dd, sys, matrix, tol, closed_top):
    d, big_d = sys.d, dd.diameter
    if big_d < 1:
        raise AnalysisError("diameter 0 (single vertex): nothing to characterize")
    if big_d > d:
        raise InternalConsistencyError(
            f"diameter {big_d} exceeds d={d}; the spectrum does not belong to this graph")
    means = excess_means(dd)
    top = sys.norm_values  # p_i at the normalization point
    target = float(np.sum(top[:big_d]))
    tail_at_point = float(np.sum(top[big_d:]))
    warnings = []

    scaled_tol = tol.eq * abs(target)
    gap = means.hm - target
    equality = abs(gap) <= scaled_tol
    am_equality = abs(means.am - target) <= scaled_tol
    if 0.5 * scaled_tol < abs(gap) < 2 * scaled_tol:
        warnings.append(f"equality ambiguous: |HM - target| = {abs(gap):.3g} is within "
                        f"[0.5, 2] x tol_eq * target")
    if gap < -1e-7 * abs(target):
        warnings.append(f"harmonic mean {means.hm!r} is below the bound {target!r}")

    mats = list(islice(sys.matrices(matrix), d + 1))
    head = np.sum(mats[:big_d], axis=0)
    tail = np.sum(mats[big_d:], axis=0)
    a_far = dd.indicator(big_d)
    direct_residual = float(np.max(np.abs(tail - a_far)))
    direct_check = direct_residual <= tol.matrix
    if equality != direct_check:
        warnings.append(f"scalar gate says equality={equality} (|HM - target| = {abs(gap):.3g}) "
                        f"but matrix check residual is {direct_residual:.3g}")
    if am_equality != equality:
        warnings.append(f"AM gate ({am_equality}) disagrees with HM gate ({equality})")

    near = dd.dist < big_d
    cs_residual = float(np.max(np.abs(head[near] - 1.0)))

    kd = dd.k(big_d)
    excess_bound_ok = True
    if direct_check:
        excess_bound_ok = bool(np.all(kd <= tail_at_point + 1e-6))
        if not excess_bound_ok:
            warnings.append("matrix identity holds but some k_D(x) exceeds the spectral tail sum")

    closed_form_drg = False
    if big_d == d:
        # average excess against the spectrum-only value of p_d at the normalization point
        mean_excess = float(kd.mean())
        closed_form_drg = abs(mean_excess - closed_top) <= scaled_tol
        # the recurrence value is only absolutely accurate once it nears rounding
        if abs(closed_top - float(top[d])) > 1e-8 * abs(closed_top) + 1e-12:
            warnings.append(f"closed-form p_d = {closed_top!r} differs from recurrence value {top[d]!r}")
    drg_verdict = big_d == d and equality
    if big_d == d and closed_form_drg != drg_verdict:
        warnings.append(f"closed-form excess test ({closed_form_drg}) disagrees with HM gate ({drg_verdict})")

    return GateReport(
        kind=sys.kind, d=d, D=big_d, target=target, hm=means.hm, am=means.am, hm_gap=gap,
        equality=equality, am_equality=am_equality, direct_check=direct_check,
        direct_residual=direct_residual, drg_verdict=drg_verdict,
        cs_structure_residual=cs_residual, closed_form_top=closed_top,
        closed_form_drg=closed_form_drg, excess_bound_ok=excess_bound_ok,
        warnings=warnings + list(sys.spectrum.warnings),
    )


def adjacency_gate(g, dd, sys, tol=DEFAULT_TOLERANCES):
    """Harmonic-mean gate with adjacency predistance polynomials (regular graphs only)."""
    if sys.kind != ADJACENCY:
        raise ValueError("adjacency_gate needs the adjacency system")
    if not degree_stats(g).is_regular:
        raise IrregularGraphError(
            "graph is not regular; the adjacency bound needs a regular graph, "
            "use the laplacian gate (--kind laplacian) instead")
    return _gate(g, dd, sys, g.adjacency, tol, pd_closed_form(sys.spectrum))


def laplacian_gate(g, dd, sys, tol=DEFAULT_TOLERANCES):
    """Harmonic-mean gate with Laplacian predistance polynomials (any connected graph)."""
    if sys.kind != LAPLACIAN:
        raise ValueError("laplacian_gate needs the Laplacian system")
    report = _gate(g, dd, sys, laplacian_matrix(g), tol, rd_closed_form(sys.spectrum))
    if report.D == 2 and report.equality:
        report.regular_implied = True
        if not degree_stats(g).is_regular:
            report.warnings.append("equality at diameter 2 forces regularity, but the graph is irregular")
    return report


# -- pipeline ---------------------------------------------------------------

@dataclass
class Analysis:
    graph: object
    degrees: object
    distances: object
    spectra: dict = field(default_factory=dict)
    systems: dict = field(default_factory=dict)
    gates: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


def analyze(g, kinds=(ADJACENCY, LAPLACIAN), tol=DEFAULT_TOLERANCES, strict=False):
    """Run distances, spectra, predistance systems and gates for ``kinds``.

    An irregular graph skips the adjacency gate with a note, unless ``strict``
    is set, in which case :class:`IrregularGraphError` propagates.
    """
    dd = bfs_distances(g)
    res = Analysis(graph=g, degrees=degree_stats(g), distances=dd)
    for kind in kinds:
        matrix = g.adjacency if kind == ADJACENCY else laplacian_matrix(g)
        s = spectrum_of(matrix, kind, tol.group)
        res.spectra[kind] = s
        res.systems[kind] = sys = build_ortho_system(s)
        if dd.diameter < 1:
            res.notes.append("single vertex: gates not applicable")
            continue
        try:
            gate = adjacency_gate if kind == ADJACENCY else laplacian_gate
            res.gates[kind] = gate(g, dd, sys, tol)
        except IrregularGraphError:
            if strict:
                raise
            res.notes.append("adjacency gate skipped: graph is not regular")
    return res


@dataclass(frozen=True)
class ExcessSummary:
    am: float
    hm: float
    average_excess: float
    spectral_excess: float
    target: float
    D: int
    d: int
    hm_verdict: bool
    am_verdict: bool
    matrix_verdict: bool
    matrix_residual: float
    agree: bool
    warnings: tuple


def spectral_excess_summary(g, tol=DEFAULT_TOLERANCES):
    """Three equivalent distance-regularity tests for a regular graph.

    * harmonic mean of ``n - k_D(x)`` equals ``q_{d-1}(k)``, with ``D = d``;
    * average excess (mean of ``k_D(x)``) equals the spectral excess ``p_d(k)``;
    * ``p_d(A) = A_d`` with ``D = d``.
    """
    if not degree_stats(g).is_regular:
        raise IrregularGraphError("spectral excess summary needs a regular graph; "
                                  "use the laplacian gate instead")
    dd = bfs_distances(g)
    s = spectrum_of(g.adjacency, ADJACENCY, tol.group)
    sys = build_ortho_system(s)
    gate = adjacency_gate(g, dd, sys, tol)
    d, big_d = s.d, dd.diameter
    spectral_excess = pd_closed_form(s)
    average_excess = float(dd.k(big_d).mean())
    target = g.n - spectral_excess
    top = np.asarray(list(sys.matrices(g.adjacency))[d])
    matrix_residual = float(np.max(np.abs(top - dd.indicator(d)))) if big_d == d else float("inf")
    matrix_verdict = big_d == d and matrix_residual <= tol.matrix
    hm_verdict = big_d == d and abs(gate.hm - target) <= tol.eq * target
    am_verdict = big_d == d and abs(average_excess - spectral_excess) <= tol.eq * target
    agree = hm_verdict == am_verdict == matrix_verdict
    warnings = list(gate.warnings)
    if not agree:
        warnings.append(f"distance-regularity tests disagree: harmonic={hm_verdict}, "
                        f"average-excess={am_verdict}, matrix={matrix_verdict}")
    return ExcessSummary(
        am=gate.am, hm=gate.hm, average_excess=average_excess, spectral_excess=spectral_excess,
        target=target, D=big_d, d=d, hm_verdict=hm_verdict, am_verdict=am_verdict,
        matrix_verdict=matrix_verdict, matrix_residual=matrix_residual, agree=agree,
        warnings=tuple(warnings),
    )


# -- census -----------------------------------------------------------------

FILTERS = ("all", "d-gt-D")


class CensusIOError(AnalysisError):
    pass


@dataclass
class CensusSummary:
    scanned: int = 0
    hits: int = 0
    skipped: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    def skip(self, reason):
        self.skipped[reason] = self.skipped.get(reason, 0) + 1

    def as_dict(self):
        return {"scanned": self.scanned, "hits": self.hits,
                "skipped": dict(sorted(self.skipped.items())), "errors": list(self.errors)}


def _census_one(item, kinds, flt, tol):
    """Analyze one line; returns ``(hit records, skip reasons, errors)``."""
    lineno, text = item
    try:
        g = parse_graph6(text)
    except ParseError as exc:
        return [], ["parse error"], [f"line {lineno}: {exc}"]
    try:
        dd = bfs_distances(g)
    except DisconnectedGraphError:
        return [], ["disconnected"], []
    if dd.diameter < 1:
        return [], ["single vertex"], []
    regular = degree_stats(g).is_regular
    hits, skips, errors = [], [], []
    for kind in kinds:
        if kind == ADJACENCY and not regular:
            skips.append("irregular")
            continue
        try:
            matrix = g.adjacency if kind == ADJACENCY else laplacian_matrix(g)
            sys = build_ortho_system(spectrum_of(matrix, kind, tol.group))
            gate = (adjacency_gate if kind == ADJACENCY else laplacian_gate)(g, dd, sys, tol)
        except (AnalysisError, FloatingPointError, np.linalg.LinAlgError) as exc:
            skips.append("analysis error")
            errors.append(f"line {lineno}: {kind}: {exc}")
            continue
        if not gate.equality:
            continue
        if flt == "d-gt-D" and not gate.D < gate.d:
            continue
        hits.append(hit_record(text.strip(), g.n, gate))
    return hits, skips, errors


def hit_record(graph6, n, gate):
    return {
        "graph6": graph6,
        "n": n,
        "D": gate.D,
        "d": gate.d,
        "kind": gate.kind,
        "target": gate.target,
        "hm": gate.hm,
        "am": gate.am,
        "equality": gate.equality,
        "direct_residual": gate.direct_residual,
        "drg": gate.drg_verdict,
    }


def _numbered_lines(lines):
    it = iter(lines)
    lineno = 0
    while True:
        try:
            line = next(it)
        except StopIteration:
            return
        except (OSError, UnicodeDecodeError) as exc:
            raise CensusIOError(f"I/O error reading line {lineno + 1}: {exc}") from exc
        lineno += 1
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        if line.strip():
            yield lineno, line


def census_scan(lines, kind=ADJACENCY, flt="all", workers=1, tol=DEFAULT_TOLERANCES,
                summary=None, chunk=256):
    """Yield hit records for graphs attaining equality, in input order.

    ``kind`` is ``"adjacency"``, ``"laplacian"`` or ``"both"``. Counts of
    scanned and skipped lines accumulate in ``summary`` (a
    :class:`CensusSummary`) as the stream is consumed.
    """
    if flt not in FILTERS:
        raise ValueError(f"unknown census filter {flt!r}; choose from {FILTERS}")
    kinds = (ADJACENCY, LAPLACIAN) if kind == "both" else (kind,)
    if summary is None:
        summary = CensusSummary()
    items = _numbered_lines(lines)

    def consume(results):
        for hits, skips, errors in results:
            summary.scanned += 1
            for reason in skips:
                summary.skip(reason)
            summary.errors.extend(errors)
            summary.hits += len(hits)
            yield from hits

    if workers <= 1:
        yield from consume(_census_one(item, kinds, flt, tol) for item in items)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while True:
            batch = list(islice(items, chunk))
            if not batch:
                break
            results = pool.map(lambda item: _census_one(item, kinds, flt, tol), batch)
            yield from consume(results)
