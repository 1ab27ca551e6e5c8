"""Hole-search kernel selection.

The compiled kernel (_fastcore, Cython) is used when it built successfully;
otherwise the pure-Python kernel (_pycore) takes over with identical
semantics. Set HOLELAB_PURE=1 to force the pure kernel, e.g. to benchmark
or to rule the extension out while debugging.
"""

from __future__ import annotations

import os

from . import _pycore

if os.environ.get("HOLELAB_PURE") == "1":
    _impl = _pycore
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pycore

find_holes = _impl.find_holes
IMPLEMENTATION = _impl.IMPLEMENTATION

__all__ = ["find_holes", "IMPLEMENTATION"]
