"""Simulation of quantum quasi-Zeno dynamics under frequent projective measurement."""
__version__ = "0.1.0"

from . import hilbert, models, numkernel, zeno
from .errors import QuasiZenoError
