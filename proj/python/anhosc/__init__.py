"""Propagator of the quartic anharmonic oscillator: lattice, continuum and correction series."""

from ._anhosc import *  # noqa: F401,F403
from ._anhosc import __doc__  # noqa: F401

__all__ = [n for n in dir() if not n.startswith("_")]
