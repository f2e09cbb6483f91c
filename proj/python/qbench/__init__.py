"""Quantum benchmarking suite: application-motivated circuit classes,
a device compiler, ideal and noisy simulation, and the heavy-output /
cross-entropy / l1 figures of merit."""

from ._qbench import *  # noqa: F401,F403
from ._qbench import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
