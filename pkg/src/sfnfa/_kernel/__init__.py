"""Hot-loop kernel selection: compiled extension when available, pure
numpy fallback otherwise.  Set ``SFNFA_FORCE_PURE=1`` to force the
fallback (used by the benchmark and the parity tests)."""

import os

if os.environ.get("SFNFA_FORCE_PURE") == "1":
    from ._pure import IMPL, filter_tables
else:
    try:
        from ._speed import IMPL, filter_tables
    except ImportError:
        from ._pure import IMPL, filter_tables

__all__ = ["IMPL", "filter_tables"]
