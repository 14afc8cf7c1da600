"""Backend selection for the hot enumeration kernel.

The compiled extension is used when present; the numpy fallback otherwise.
Set GRAPH2HAM_PURE=1 to force the fallback (used by the benchmark and to
cross-check the two implementations).
"""

import os

from . import _pure

if os.environ.get("GRAPH2HAM_PURE"):
    _backend = _pure
else:
    try:
        from . import _fast as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _pure

scan_min_int = _backend.scan_min_int
# the float path is cold (no reduction produces non-integer diagonals),
# so it is only implemented in numpy
scan_min_float = _pure.scan_min_float


def backend_name():
    return _backend.NAME
