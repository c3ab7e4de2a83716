"""Predistance polynomials over the discrete spectral measure.

The system for a spectrum with distinct eigenvalues ``mu_0..mu_d`` and
multiplicities ``m_i`` is orthogonal for

    <f, g> = (1/n) * sum_i m_i f(mu_i) g(mu_i)

and normalized so that ``<p_i, p_i> = p_i(mu_0)``, where ``mu_0`` is the
largest adjacency eigenvalue or the Laplacian eigenvalue 0.
"""

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial

from .config import DEFAULT_TOLERANCES, InternalConsistencyError
from .graph import laplacian_matrix
from .spectral import ADJACENCY, LAPLACIAN

Poly = Polynomial


def as_poly(coeffs):
    """Polynomial from ascending coefficients, trailing zeros trimmed."""
    p = Polynomial(np.asarray(coeffs, dtype=float))
    return p.trim() if p.degree() > 0 else p


def inner_product(f, g, s):
    nodes = s.nodes
    return float(np.dot(s.weights, f(nodes) * g(nodes)))


@dataclass(frozen=True, eq=False)
class OrthoSystem:
    """Predistance polynomials ``p_0..p_d`` of one spectrum, plus their sums.

    The recurrence is stored in the form

        x * p_i = beta[i-1] p_{i-1} + alpha[i] p_i + gamma[i+1] p_{i+1}

    with ``gamma`` of length ``d + 2``: ``gamma[0]`` is unused (0) and
    ``gamma[d+1] = 1`` defines the terminal polynomial
    ``p_{d+1} = (x - alpha[d]) p_d - beta[d-1] p_{d-1}``. ``beta[d]`` is 0.
    """

    spectrum: object
    polys: tuple
    sums: tuple
    alpha: np.ndarray = field(repr=False)
    beta: np.ndarray = field(repr=False)
    gamma: np.ndarray = field(repr=False)
    terminal: Polynomial = field(repr=False)
    # p_i at the normalization point, computed from the recurrence rather than coefficients
    norm_values: np.ndarray = field(repr=False)

    @property
    def kind(self):
        return self.spectrum.kind

    @property
    def d(self):
        return self.spectrum.d

    @property
    def normalization_point(self):
        return self.spectrum.normalization_point

    def values(self, x):
        """``[p_0(x), ..., p_{d+1}(x)]`` via the recurrence; ``x`` may be an array."""
        x = np.asarray(x, dtype=float)
        out = [np.ones_like(x)]
        prev = np.zeros_like(x)
        for i in range(self.d + 1):
            nxt = ((x - self.alpha[i]) * out[i] - (self.beta[i - 1] * prev if i else 0.0)) / self.gamma[i + 1]
            prev = out[i]
            out.append(nxt)
        return np.array(out)

    def sum_values(self, x):
        """``[q_0(x), ..., q_d(x)]``."""
        return np.cumsum(self.values(x)[: self.d + 1], axis=0)

    def matrices(self, m):
        """Yield ``p_0(M), ..., p_{d+1}(M)`` by the recurrence on matrices."""
        m = np.asarray(m, dtype=float)
        eye = np.eye(m.shape[0])
        prev, cur = None, eye
        yield cur
        for i in range(self.d + 1):
            nxt = m @ cur - self.alpha[i] * cur
            if prev is not None:
                nxt -= self.beta[i - 1] * prev
            nxt /= self.gamma[i + 1]
            if not np.isfinite(nxt).all():
                raise FloatingPointError(f"non-finite entries evaluating p_{i + 1} at a matrix")
            prev, cur = cur, nxt
            yield cur

    def partial_sum_matrix(self, m, lo, hi):
        """``sum_{i=lo}^{hi} p_i(M)``."""
        total = np.zeros(np.shape(m), dtype=float)
        for i, p in enumerate(self.matrices(m)):
            if i > hi:
                break
            if i >= lo:
                total += p
        return total


def build_ortho_system(s):
    """Predistance polynomials by the Stieltjes procedure on the spectral measure.

    The node-value vectors of the monic polynomials are reorthogonalized
    against all earlier ones, which keeps the recurrence coefficients accurate
    up to degree ``d``, the number of nodes minus one.
    """
    if min(s.multiplicities) < 1 or not np.isfinite(s.nodes).all():
        raise InternalConsistencyError("spectrum has a non-positive multiplicity or non-finite eigenvalue")
    nodes = s.nodes
    w = s.weights
    d = s.d
    ip = lambda u, v: float(np.dot(w, u * v))  # noqa: E731

    vals = [np.ones_like(nodes)]
    norms = [1.0]
    a = np.zeros(d + 1)
    b = np.zeros(d + 1)
    for j in range(d + 1):
        a[j] = ip(nodes * vals[j], vals[j]) / norms[j]
        if j:
            b[j] = norms[j] / norms[j - 1]
        if j == d:
            break
        nxt = (nodes - a[j]) * vals[j]
        if j:
            nxt -= b[j] * vals[j - 1]
        for v, nv in zip(vals, norms):
            nxt -= ip(nxt, v) / nv * v
        vals.append(nxt)
        norms.append(ip(nxt, nxt))
    if s.kind == ADJACENCY:
        a[0] = 0.0 if abs(a[0]) <= 1e-12 * max(1.0, s.spectral_radius) else a[0]

    at_point = np.array([v[0] for v in vals])
    norm_values = at_point ** 2 / np.array(norms)
    for i, value in enumerate(norm_values):
        if not (np.isfinite(value) and value > 0):
            raise InternalConsistencyError(
                f"predistance polynomial p_{i} is not positive at the normalization point ({value!r})")
    scale = at_point / np.array(norms)  # p_i = scale[i] * monic_i

    alpha = a.copy()
    beta = np.zeros(d + 1)
    gamma = np.zeros(d + 2)
    gamma[d + 1] = 1.0
    for i in range(1, d + 1):
        gamma[i] = scale[i - 1] / scale[i]
        beta[i - 1] = scale[i] * b[i] / scale[i - 1]

    x = Polynomial([0.0, 1.0])
    polys = [Polynomial([1.0])]
    for i in range(d + 1):
        nxt = (x - alpha[i]) * polys[i]
        if i:
            nxt = nxt - beta[i - 1] * polys[i - 1]
        polys.append(nxt / gamma[i + 1])
    terminal = polys.pop()
    sums = [polys[0]]
    for p in polys[1:]:
        sums.append(sums[-1] + p)
    return OrthoSystem(spectrum=s, polys=tuple(polys), sums=tuple(sums), alpha=alpha,
                       beta=beta, gamma=gamma, terminal=terminal, norm_values=norm_values)


def evaluate_poly_at_matrix(f, m):
    """Horner evaluation of a monomial-basis polynomial at a square matrix."""
    m = np.asarray(m, dtype=float)
    coef = np.asarray(f.coef if hasattr(f, "coef") else f, dtype=float)
    eye = np.eye(m.shape[0])
    result = coef[-1] * eye
    for c in coef[-2::-1]:
        result = result @ m + c * eye
    if not np.isfinite(result).all():
        raise FloatingPointError("non-finite entries in matrix polynomial")
    return result


def hoffman_check(g, sys, tol=DEFAULT_TOLERANCES.hoffman):
    """Compare ``q_d(M)`` with the all-ones matrix; returns ``(ok, residual)``."""
    m = g.adjacency if sys.kind == ADJACENCY else laplacian_matrix(g)
    h = sys.partial_sum_matrix(m, 0, sys.d)
    residual = float(np.max(np.abs(h - 1.0)))
    return residual <= tol, residual


def r1_regularity_check(g, sys, tol=DEFAULT_TOLERANCES.regularity):
    """Whether ``r_1(L) = A``; returns ``(ok, residual)``."""
    if sys.kind != LAPLACIAN:
        raise ValueError("r1_regularity_check needs the Laplacian system")
    lap = laplacian_matrix(g)
    if sys.d < 1:
        r1 = np.zeros_like(lap)  # single vertex: no r_1, and A = 0
    else:
        r1 = sys.partial_sum_matrix(lap, 1, 1)
    residual = float(np.max(np.abs(r1 - g.adjacency)))
    return residual <= tol, residual


def terminal_poly_check(sys, m):
    """Largest entry of ``p_{d+1}(M)``."""
    *_, terminal = sys.matrices(m)
    return float(np.max(np.abs(terminal)))
