"""Domain representation of the controlled plant and its noise intensities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from disc_lqg.domain.services.matrix_rules import FloatMatrix, as_matrix


@dataclass(frozen=True, slots=True, eq=False)
class LinearSystem:
    """Plant dx = (Ax + Bu) dt + dv, dy = (Cx + Du) dt + dw.

    C and W are absent for full-state problems. D defaults to zeros when C is given.
    Shapes are coerced but not cross-checked here; `validate_problem` reports mismatches.
    """

    A: FloatMatrix
    B: FloatMatrix
    V: FloatMatrix
    C: FloatMatrix | None = None
    D: FloatMatrix | None = None
    W: FloatMatrix | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", as_matrix(self.A, name="A"))
        object.__setattr__(self, "B", as_matrix(self.B, name="B"))
        object.__setattr__(self, "V", as_matrix(self.V, name="V"))
        if (self.C is None) != (self.W is None):
            raise ValueError("C and W must be given together (or both omitted)")
        if self.C is not None:
            object.__setattr__(self, "C", as_matrix(self.C, name="C"))
            object.__setattr__(self, "W", as_matrix(self.W, name="W"))
            if self.D is None:
                object.__setattr__(self, "D", as_matrix(np.zeros((self.C.shape[0], self.m))))
            else:
                object.__setattr__(self, "D", as_matrix(self.D, name="D"))
        elif self.D is not None:
            raise ValueError("D requires C and W")

    @classmethod
    def full_state(cls, A: ArrayLike, B: ArrayLike, V: ArrayLike) -> LinearSystem:
        return cls(A=A, B=B, V=V)

    @property
    def n(self) -> int:
        return int(self.A.shape[0])

    @property
    def m(self) -> int:
        return int(self.B.shape[1])

    @property
    def p(self) -> int:
        return 0 if self.C is None else int(self.C.shape[0])

    @property
    def has_output(self) -> bool:
        return self.C is not None

    def output_matrices(self) -> tuple[FloatMatrix, FloatMatrix, FloatMatrix]:
        """Return (C, D, W), failing loudly for full-state systems."""
        if self.C is None or self.D is None or self.W is None:
            raise ValueError("system has no measured output (C, W omitted)")
        return self.C, self.D, self.W

    def with_noise(self, *, V: ArrayLike | None = None, W: ArrayLike | None = None) -> LinearSystem:
        """Copy with replaced noise intensities."""
        return LinearSystem(
            A=self.A,
            B=self.B,
            V=self.V if V is None else V,
            C=self.C,
            D=self.D,
            W=self.W if W is None else W,
        )
