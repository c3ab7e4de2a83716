"""Dense eigenvalues, grouping into distinct eigenvalues, and closed forms."""

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLERANCES, DisconnectedGraphError, InternalConsistencyError

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"
KINDS = (ADJACENCY, LAPLACIAN)


@dataclass(frozen=True)
class SpectrumData:
    """Distinct eigenvalues with multiplicities.

    ``distinct`` is strictly decreasing for the adjacency kind (largest first)
    and strictly increasing from exactly 0 for the Laplacian kind, so that
    ``distinct[0]`` is always the normalization point.
    """

    kind: str
    distinct: tuple
    multiplicities: tuple
    warnings: tuple = ()
    # d obtained when regrouping at tol/2 and 2*tol; equal to d unless ambiguous
    alternative_d: tuple = field(default=(), compare=False)

    @property
    def d(self):
        return len(self.distinct) - 1

    @property
    def n(self):
        return sum(self.multiplicities)

    @property
    def normalization_point(self):
        return self.distinct[0] if self.kind == ADJACENCY else 0.0

    @property
    def nodes(self):
        return np.asarray(self.distinct, dtype=float)

    @property
    def weights(self):
        return np.asarray(self.multiplicities, dtype=float) / self.n

    @property
    def spectral_radius(self):
        return float(np.max(np.abs(self.nodes)))


@dataclass(frozen=True)
class SpectralProducts:
    phi: tuple


def eigenvalues_symmetric(matrix):
    """All eigenvalues of a real symmetric matrix, in descending order."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix has non-finite entries")
    if m.size and np.max(np.abs(m - m.T)) > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    return np.linalg.eigvalsh(m)[::-1]


def _groups(values, threshold):
    """Split ascending ``values`` wherever consecutive gaps exceed ``threshold``."""
    cuts = np.flatnonzero(np.diff(values) > threshold) + 1
    return np.split(values, cuts)


def group_spectrum(raw, kind, tol=DEFAULT_TOLERANCES.group):
    """Merge numerically equal eigenvalues into distinct ones.

    Consecutive eigenvalues closer than ``tol * max(1, spectral radius)`` are
    merged, the group mean becoming the distinct value. Gaps falling between
    half and twice that threshold are reported in ``warnings`` together with
    the ``d`` each alternative grouping would give.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown spectrum kind {kind!r}")
    if not tol > 0:
        raise ValueError("grouping tolerance must be positive")
    values = np.sort(np.asarray(raw, dtype=float))
    if values.size == 0:
        raise ValueError("empty spectrum")
    scale = max(1.0, float(np.max(np.abs(values))))
    threshold = tol * scale
    groups = _groups(values, threshold)

    warnings = []
    gaps = np.diff(values)
    ambiguous = gaps[(gaps >= 0.5 * threshold) & (gaps <= 2 * threshold)]
    alternative_d = (len(groups) - 1, len(groups) - 1)
    if ambiguous.size:
        alternative_d = (len(_groups(values, 0.5 * threshold)) - 1,
                         len(_groups(values, 2 * threshold)) - 1)
        warnings.append(
            f"{kind} grouping ambiguous: {ambiguous.size} gap(s) within [0.5, 2] x tolerance "
            f"(smallest {ambiguous.min():.3g}); d would be {alternative_d[0]} at tol/2 "
            f"and {alternative_d[1]} at 2*tol"
        )

    distinct = [float(g.mean()) for g in groups]
    mult = [len(g) for g in groups]
    if kind == LAPLACIAN:
        zero = int(np.argmin(np.abs(distinct)))
        if mult[zero] > 1:
            raise DisconnectedGraphError(
                f"graph disconnected by spectrum: eigenvalue 0 has multiplicity {mult[zero]}")
        distinct[zero] = 0.0
        if zero != 0:
            raise InternalConsistencyError("Laplacian spectrum has an eigenvalue below 0")
    else:
        distinct.reverse()
        mult.reverse()
    return SpectrumData(kind=kind, distinct=tuple(distinct), multiplicities=tuple(mult),
                        warnings=tuple(warnings), alternative_d=alternative_d)


def spectrum_of(matrix, kind, tol=DEFAULT_TOLERANCES.group):
    return group_spectrum(eigenvalues_symmetric(matrix), kind, tol)


def spectral_products(s):
    """``phi_i = prod_{j != i} (mu_i - mu_j)`` over the distinct eigenvalues."""
    nodes = s.nodes
    phi = []
    for i, mu in enumerate(nodes):
        diffs = mu - np.delete(nodes, i)
        if np.any(diffs == 0):
            raise ValueError("repeated distinct eigenvalue")
        # multiply small factors first to keep partial products well scaled
        diffs = diffs[np.argsort(np.abs(diffs))]
        phi.append(float(np.prod(diffs)))
    return SpectralProducts(phi=tuple(phi))


def _top_value(s):
    phi = np.asarray(spectral_products(s).phi)
    m = np.asarray(s.multiplicities, dtype=float)
    ratio = phi[0] / phi
    return s.n / float(np.sum(ratio * ratio / m))


def pd_closed_form(s):
    """``p_d`` at the largest adjacency eigenvalue, from the spectrum alone."""
    if s.kind != ADJACENCY:
        raise ValueError("pd_closed_form needs an adjacency spectrum")
    return _top_value(s)


def rd_closed_form(s):
    """``r_d(0)`` for the Laplacian predistance polynomials, from the spectrum alone."""
    if s.kind != LAPLACIAN:
        raise ValueError("rd_closed_form needs a Laplacian spectrum")
    return _top_value(s)
