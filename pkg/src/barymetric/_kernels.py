"""Pick the compiled kernels when they were built, else the Python ones."""
from barymetric import _pykernels

try:
    from barymetric import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels


def set_backend(name: str) -> None:
    """Swap the kernel implementation for the whole package (benchmarks, tests)."""
    global BACKEND, bilinear, bilinear_diag, det3
    mod = BACKENDS[name]
    BACKEND = name
    bilinear, bilinear_diag, det3 = mod.bilinear, mod.bilinear_diag, mod.det3


set_backend("cython" if _ckernels is not None else "python")
