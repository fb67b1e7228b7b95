"""Quantum-number bookkeeping shared by every module.

Half-odd-integer quantities (j, m) are stored doubled so that all
selection-rule arithmetic stays in exact integers.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class DomainError(ValueError):
    """Arguments are well-formed but outside the mathematical domain."""


class ConvergenceError(RuntimeError):
    """An iterative or variational solve did not converge."""


def twice(value, name="j"):
    """Return ``2*value`` as an int, rejecting values that are not multiples of 1/2."""
    if isinstance(value, bool):
        raise ValueError(f"{name} must be numeric, got {value!r}")
    doubled = 2 * value
    rounded = round(doubled)
    if abs(doubled - rounded) > 1e-9:
        raise ValueError(f"{name}={value!r} is not a multiple of 1/2")
    return int(rounded)


def two_j_of(j):
    """Doubled total angular momentum, validated to be a positive odd integer."""
    tj = twice(j, "j")
    if tj < 1 or tj % 2 != 1:
        raise ValueError(f"j={j!r} must be a positive half-odd-integer")
    return tj


class CouplingSign(enum.Enum):
    """Branch of the +-i*alpha*sigma.e_r coupling.

    PLUS is the upper sign of the Hamiltonian's ``+- i e sigma.E`` term,
    which appears as the upper (minus) sign in the Lambda operator.
    """

    PLUS = 1
    MINUS = -1

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        key = str(text).strip().upper()
        aliases = {"+": "PLUS", "+1": "PLUS", "PLUS": "PLUS", "-": "MINUS", "-1": "MINUS", "MINUS": "MINUS"}
        if key not in aliases:
            raise ValueError(f"unknown coupling sign {text!r}")
        return cls[aliases[key]]

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class QuantumNumbers:
    """Hydrogenic labels (n, l, j, m) with j and m stored doubled."""

    n: int
    l: int
    two_j: int
    two_m: int | None = None

    def __post_init__(self):
        for name in ("n", "l", "two_j"):
            if not isinstance(getattr(self, name), (int,)) or isinstance(getattr(self, name), bool):
                raise ValueError(f"{name} must be an integer")
        if self.two_m is None:
            object.__setattr__(self, "two_m", self.two_j)
        if self.n < 1:
            raise ValueError(f"n={self.n} must be >= 1")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError(f"l={self.l} must satisfy 0 <= l <= n-1 (n={self.n})")
        if self.two_j not in (2 * self.l + 1, 2 * self.l - 1) or self.two_j < 1:
            raise ValueError(f"j={self.two_j}/2 is not l +- 1/2 for l={self.l}")
        if abs(self.two_m) > self.two_j or (self.two_m - self.two_j) % 2:
            raise ValueError(f"m={self.two_m}/2 invalid for j={self.two_j}/2")

    @classmethod
    def of(cls, n, l, j, m=None):
        return cls(n, l, two_j_of(j), None if m is None else twice(m, "m"))

    @property
    def j(self):
        return self.two_j / 2

    @property
    def m(self):
        return self.two_m / 2

    @property
    def branch(self):
        """Channel index: 0 for l = j - 1/2, 1 for l = j + 1/2."""
        return 0 if 2 * self.l + 1 == self.two_j else 1

    @property
    def n_r(self):
        return self.n - self.l - 1


def hydrogen_states(n_max):
    """All (n, l, j) labels with n <= n_max, in (n, two_j, l) order."""
    states = []
    for n in range(1, n_max + 1):
        for two_j in range(1, 2 * n, 2):
            for l in sorted({(two_j - 1) // 2, (two_j + 1) // 2}):
                if l <= n - 1:
                    states.append(QuantumNumbers(n, l, two_j))
    return states


@dataclass(frozen=True)
class PhysicalParams:
    """Particle mass and coupling in natural units."""

    m: float = 1.0
    alpha: float = 7.2973525693e-3

    def __post_init__(self):
        if not (math.isfinite(self.m) and self.m > 0):
            raise ValueError(f"mass must be positive, got {self.m}")
        if not (0 < self.alpha < 1):
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")

    @property
    def a0(self):
        return 1.0 / (self.m * self.alpha)
