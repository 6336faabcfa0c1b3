"""Kernel backend selection.

The compiled extension is preferred when built; ``BISETKIT_KERNEL=py`` forces
the pure-Python fallback and ``BISETKIT_KERNEL=c`` insists on the extension.
Both expose the same functions with identical semantics (see test_kernels).
"""

from __future__ import annotations

import os

from . import _pykern

_choice = os.environ.get("BISETKIT_KERNEL", "auto")
_impl = None
if _choice in ("auto", "c"):
    try:
        from . import _ckern as _impl  # type: ignore[no-redef]
    except ImportError:
        if _choice == "c":
            raise ImportError(
                "BISETKIT_KERNEL=c but the compiled kernel is not built; "
                "run `pip install -e . --no-build-isolation`"
            )
if _impl is None:
    _impl = _pykern

BACKEND: str = _impl.BACKEND

closure = _impl.closure
canonical_conjugate = _impl.canonical_conjugate
coset_space = _impl.coset_space
double_cosets = _impl.double_cosets
tensor_orbits = _impl.tensor_orbits
