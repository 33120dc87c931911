# Multi-pile OOOOOOB: exact solvers, closed-form rules and verification sweeps.

__version__ = '0.1.0'
