"""Exact committee selection under attribute constraints.

Thin wrapper around the compiled _cecac module. Installed builds place the
extension inside this package; in-tree builds expose it via the directory
named by CECAC_MODULE_DIR.
"""

try:
    from ._cecac import (
        Error,
        NotApplicable,
        canonical,
        check,
        classify,
        random_instance,
        solve,
    )
except ImportError:
    import os
    import sys

    _module_dir = os.environ.get("CECAC_MODULE_DIR")
    if _module_dir and _module_dir not in sys.path:
        sys.path.insert(0, _module_dir)
    from _cecac import (
        Error,
        NotApplicable,
        canonical,
        check,
        classify,
        random_instance,
        solve,
    )

__all__ = [
    "Error",
    "NotApplicable",
    "canonical",
    "check",
    "classify",
    "random_instance",
    "solve",
]
