"""Binding energies of the spin-1/2 square-root Coulomb Hamiltonian.

Four routes to the same levels: the first-order alpha^4 formula, exact
Dirac energies, the Klein-Gordon-like 2-spinor equation, and direct
diagonalization of sqrt(m^2 + p^2 +- i e sigma.E) - alpha/r.
"""
from .kernels import BACKEND
from .quantum import ConvergenceError, CouplingSign, DomainError, PhysicalParams, QuantumNumbers
from .records import Method, SpectrumEntry

__version__ = "0.1.0"
__all__ = ["BACKEND", "ConvergenceError", "CouplingSign", "DomainError", "Method", "PhysicalParams",
           "QuantumNumbers", "SpectrumEntry", "__version__"]
