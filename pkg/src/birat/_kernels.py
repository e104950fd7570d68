"""Kernel backend selection.

Imports the compiled kernels when the extension was built, otherwise the pure
Python twins.  Set BIRAT_KERNELS=py to force the fallback (used by the
benchmark and by tests that compare the two backends).
"""

import os

if os.environ.get("BIRAT_KERNELS", "").lower() == "py":
    from . import _kernels_py as _impl

    BACKEND = "py"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cy"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "py"

mul_terms = _impl.mul_terms
add_terms = _impl.add_terms
scale_terms = _impl.scale_terms
