"""Runtime toggles.

Debug assertions enable expensive internal cross-checks (e.g. the
alternative characterizations of invertibility, or the derivative/dual
identity for ideal inverses).  They are controlled by the environment
variable ``BFTORUS_DEBUG_ASSERT=1`` or programmatically via
:func:`set_debug_asserts`.
"""

import os

_DEBUG_ASSERTS = os.environ.get("BFTORUS_DEBUG_ASSERT") == "1"


def debug_asserts_enabled() -> bool:
    return _DEBUG_ASSERTS


def set_debug_asserts(enabled: bool) -> None:
    global _DEBUG_ASSERTS
    _DEBUG_ASSERTS = bool(enabled)
