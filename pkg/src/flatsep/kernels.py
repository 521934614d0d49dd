"""Kernel selection.

The compiled extension `flatsep._ckernels` is used when it was built;
otherwise the pure-Python module is loaded. Setting ``FLATSEP_PURE_PYTHON=1``
forces the fallback.
"""

import os

from flatsep import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("FLATSEP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from flatsep import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

run = _impl.run
word_action = _impl.word_action
cyk_dense = _impl.cyk_dense

# bitset width of the compiled CYK chart
DENSE_MAX_NONTERMINALS = 64

__all__ = ["BACKEND", "run", "word_action", "cyk_dense", "DENSE_MAX_NONTERMINALS"]
