"""Python face of the utq toolkit.

Operator-level building blocks for quasisymmetric circle maps acting on the
half-differentiable loop space: composition operators and their Siegel-disc
geometry, the truncated bosonic Fock space, and Connes-style quantum
differentials.  The heavy lifting lives in the compiled `_utq` module.
"""

try:
    from ._utq import *  # noqa: F401,F403
except ImportError:  # development tree: compiled module on PYTHONPATH
    from _utq import *  # noqa: F401,F403
