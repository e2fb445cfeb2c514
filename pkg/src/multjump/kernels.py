"""Backend selection for the lattice scans.

The compiled extension is used when it imported and the inputs fit in 64-bit
arithmetic; otherwise the pure-Python module runs.  Set
``MULTJUMP_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("MULTJUMP_PURE_PYTHON"):
        raise ImportError("compiled kernels disabled by MULTJUMP_PURE_PYTHON")
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# Largest magnitude any intermediate product may reach in the C code.
_LIMIT = 2**62


def _fits(normals, offsets, upper, a, b):
    dots = max(sum(abs(x) * (u + 1) for x, u in zip(n, upper)) + abs(n[-1]) for n in normals)
    big = max([abs(a), abs(b)] + [abs(o) for o in offsets] + [abs(x) for n in normals for x in n])
    return dots * big * max(abs(b), 1) < _LIMIT


def scaling_counts(normals, offsets, upper, bound_num, bound_den, backend=None):
    mod = _pick(backend, normals, offsets, upper, bound_num, bound_den)
    return mod.scaling_counts(normals, offsets, list(upper), bound_num, bound_den)


def staircase_heights(normals, offsets, prefix_upper, c_num, c_den, backend=None):
    mod = _pick(backend, normals, offsets, list(prefix_upper) + [0], c_num, c_den)
    return mod.staircase_heights(normals, offsets, list(prefix_upper), c_num, c_den)


def _pick(backend, normals, offsets, upper, a, b):
    if backend == "python" or _compiled is None:
        return _pykernels
    if not _fits(normals, offsets, upper, a, b):
        if backend == "compiled":
            raise OverflowError("input too large for the compiled kernels")
        return _pykernels
    return _compiled
