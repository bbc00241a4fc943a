"""Kernel backend selection.

The compiled extension is preferred when present; COVERLAB_KERNEL forces
a choice: "c" (fail if the extension is missing), "py", or "auto".
"""

from __future__ import annotations

import os

_choice = os.environ.get("COVERLAB_KERNEL", "auto")

if _choice not in ("auto", "c", "py"):
    raise RuntimeError(f"COVERLAB_KERNEL must be auto, c, or py, not {_choice!r}")

if _choice in ("auto", "c"):
    try:
        from . import _fastcore as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "c":
            raise
        from . import pure as _impl
else:
    from . import pure as _impl

BACKEND: str = _impl.BACKEND
minimalize = _impl.minimalize
product_minimalize = _impl.product_minimalize
lcm_minimalize = _impl.lcm_minimalize

__all__ = ["BACKEND", "minimalize", "product_minimalize", "lcm_minimalize"]
