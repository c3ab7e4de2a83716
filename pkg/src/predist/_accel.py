"""Backend selection for the hot kernels.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python module is used. :func:`use_backend` switches explicitly, which is
what the benchmark and the backend-agreement tests do.
"""

from . import _fallback

try:
    from . import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = {"python": _fallback}
if _kernels is not None:
    BACKENDS["compiled"] = _kernels

_active = _kernels if _kernels is not None else _fallback


def backend_name():
    return "compiled" if _active is _kernels and _kernels is not None else "python"


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous name."""
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    previous = backend_name()
    _active = BACKENDS[name]
    return previous


def all_pairs_bfs(indptr, indices, n):
    return _active.all_pairs_bfs(indptr, indices, n)
