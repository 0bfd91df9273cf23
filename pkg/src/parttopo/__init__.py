"""Exact numerical census of the clique complex of the partition graph."""

import os as _os

__version__ = "0.1.0"

# The bundled TBB is too old for numba; fall back to numba's own pool.
_os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")
