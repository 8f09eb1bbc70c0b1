"""Backend selection for the numerical kernels.

The compiled extension is preferred; the numpy fallback is used when it is
missing (e.g. a source checkout without a C compiler). ``BACKEND`` names
the implementation chosen at import time.
"""

import importlib

from . import _kernels_py

try:
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    _impl = _kernels_py
    BACKEND = "python"

legendre_pair = _impl.legendre_pair
lobatto_deriv_matrix = _impl.lobatto_deriv_matrix
tridiagonalize = _impl.tridiagonalize
tql_implicit = _impl.tql_implicit


def load_backend(name):
    """Return the kernel module for ``"compiled"`` or ``"python"``."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        return importlib.import_module("confined_gps._kernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    names = ["python"]
    try:
        load_backend("compiled")
    except ImportError:
        pass
    else:
        names.insert(0, "compiled")
    return names
