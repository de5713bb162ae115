"""Quantum-coherence timescales for a particle in a gated bistable barrier.

Thin re-export of the compiled extension; every operation lives in C++.
"""

from ._qcoherence import *  # noqa: F401,F403
