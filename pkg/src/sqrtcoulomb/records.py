"""Per-level output records shared by the solvers and the CLI."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .quantum import CouplingSign


class Method(enum.Enum):
    NONREL = "NONREL"
    PERTURBATIVE = "PERTURBATIVE"
    DIRAC = "DIRAC"
    KG = "KG"
    SQRT_SOLVER = "SQRT_SOLVER"

    def __str__(self):
        return self.value


FIELDS = ("method", "n", "l", "j", "two_j", "alpha", "binding_energy", "convergence_estimate", "sign")


@dataclass(frozen=True)
class SpectrumEntry:
    """One (method, state, alpha) binding energy.

    ``convergence_estimate`` is 0 for closed forms and the change between
    the last two basis sizes for the spectral solver (0 when not estimated).
    """

    method: Method
    n: int
    l: int
    two_j: int | None
    alpha: float
    binding: float
    convergence_estimate: float = 0.0
    sign: CouplingSign = CouplingSign.PLUS
    basis_meta: object = None

    @property
    def j(self):
        return None if self.two_j is None else self.two_j / 2

    def sort_key(self):
        return (self.method.value, self.n, -1 if self.two_j is None else self.two_j, self.l, self.alpha)

    def as_row(self):
        return {
            "method": self.method.value,
            "n": self.n,
            "l": self.l,
            "j": self.j,
            "two_j": self.two_j,
            "alpha": self.alpha,
            "binding_energy": self.binding,
            "convergence_estimate": self.convergence_estimate,
            "sign": self.sign.name,
        }
