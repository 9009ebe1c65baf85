from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

import numpy as np
from sympy import Matrix

from cohomology.classes import m0_matrix, m0_inverse
from core.backend import ScalarBackend, get_backend
from core.errors import ArgumentError
from core.matrices import is_upper_unipotent, to_object
from core.types import Backend, Space


@dataclass(frozen=True)
class MonodromyMeta:
    """Where the data were computed."""

    space: Space = Space.PROJECTIVE
    k: int = 2
    r: int = 1
    chamber: Optional[int] = None
    slope: Optional[str] = None
    note: str = ""


@dataclass(frozen=True, eq=False)
class MonodromyData:
    """(mu, R, eta, S, C) of a semisimple point, S and C in a fixed order."""

    mu: tuple
    R: Matrix
    eta: Matrix
    S: Matrix
    C: np.ndarray
    backend: ScalarBackend = field(default_factory=get_backend)
    meta: MonodromyMeta = field(default_factory=MonodromyMeta)

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(Fraction(m) for m in self.mu))
        object.__setattr__(self, "C", to_object(self.C))
        n = len(self.mu)
        for name, M in (("R", self.R), ("eta", self.eta), ("S", self.S)):
            if M.shape != (n, n):
                raise ArgumentError(f"{name} has shape {M.shape}, expected {(n, n)}")
        if self.C.shape != (n, n):
            raise ArgumentError(f"C has shape {self.C.shape}, expected {(n, n)}")

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def dim(self) -> int:
        """Complex dimension: mu runs from -d/2 to d/2."""
        return int(2 * max(self.mu))

    def with_(self, **changes) -> "MonodromyData":
        return replace(self, **changes)

    def m0(self) -> np.ndarray:
        return m0_matrix(self.mu, self.R, self.backend)

    def m0_inverse(self) -> np.ndarray:
        return m0_inverse(self.mu, self.R, self.backend)

    def is_triangular(self) -> bool:
        return is_upper_unipotent(self.S)

    def numeric(self, precision: int = None) -> "MonodromyData":
        """Same data with C evaluated in the numeric backend."""
        if self.backend.kind == Backend.NUMERIC and precision in (None, self.backend.precision):
            return self
        backend = get_backend(Backend.NUMERIC, precision or self.backend.precision, self.backend.provider)
        C = np.vectorize(backend.scalar, otypes=[object])(self.C)
        return self.with_(C=C, backend=backend)
