"""Casimir-Polder energy of a two-level atom near a perfectly conducting wall."""

from ._core import *  # noqa: F401,F403
from ._core import AtomParams, ThermalEnvironment, DomainError, ConvergenceError  # noqa: F401
