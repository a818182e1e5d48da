"""Certified checks for trace conditions on knot group characters.

Thin wrapper over the compiled module; every function takes and returns
JSON strings so results stay self-contained and re-checkable.
"""

try:
    from ._bhverify import __version__, apoly, daha_check, recheck, verify
except ImportError:
    from _bhverify import __version__, apoly, daha_check, recheck, verify

__all__ = ["__version__", "apoly", "daha_check", "recheck", "verify"]
