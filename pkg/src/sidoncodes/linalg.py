"""Kernel dispatch: compiled extension if available, pure Python otherwise.

Set SIDON_CODES_BACKEND=pure (or =c) to force a backend; the benchmark
suite uses :func:`get_backend` to time both side by side.
"""

from __future__ import annotations

import os

from . import _pyops

_forced = os.environ.get("SIDON_CODES_BACKEND", "").strip().lower()

if _forced in ("pure", "py", "python"):
    _impl = _pyops
else:
    try:
        from . import _fastops as _impl  # type: ignore[no-redef]
    except ImportError:
        if _forced in ("c", "fast", "compiled"):
            raise ImportError(
                "SIDON_CODES_BACKEND requested the compiled kernels but "
                "sidoncodes._fastops is not built"
            )
        _impl = _pyops

BACKEND: str = _impl.NAME


def get_backend(name: str):
    """Return a kernel module by name ('pure' or 'c'), for benchmarks."""
    if name == "pure":
        return _pyops
    if name == "c":
        from . import _fastops

        return _fastops
    raise ValueError(f"unknown backend {name!r}")


def rref(rows, ncols: int, gf):
    """Canonical RREF rows (tuple of tuples, zero rows dropped) and rank."""
    return _impl.rref(rows, ncols, gf)


def rank(rows, ncols: int, gf) -> int:
    return _impl.rank(rows, ncols, gf)


def prepare(mats, ncols: int, gf):
    """Pack same-shape matrices for repeated stack_ranks calls."""
    return _impl.prepare(mats, ncols, gf)


def stack_ranks(top_rows, prepared, ncols: int, gf) -> list[int]:
    """Rank of top_rows stacked over each prepared matrix."""
    return _impl.stack_ranks(top_rows, prepared, ncols, gf)
