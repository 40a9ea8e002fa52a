"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``TEAMNEGO_KERNEL=pure`` to force the fallback (used by the benchmark and
by tests that compare the two backends).
"""

from __future__ import annotations

import os

from teamnego import _kernel_py

if os.environ.get("TEAMNEGO_KERNEL", "").lower() == "pure":
    _impl = _kernel_py
else:
    try:
        from teamnego import _kernel_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND
spe_pair = _impl.spe_pair
find_coalition = _impl.find_coalition
