"""Kernel selection: compiled extension when importable, numpy otherwise.

Set ``BESTMOEBIUS_PURE=1`` to force the numpy fallback.
"""
import os

from . import _kernels_py

NAME = "python"
sc_log_derivatives = _kernels_py.sc_log_derivatives
blaschke_jet = _kernels_py.blaschke_jet

if not os.environ.get("BESTMOEBIUS_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        NAME = "cython"
        sc_log_derivatives = _compiled.sc_log_derivatives
        blaschke_jet = _compiled.blaschke_jet
