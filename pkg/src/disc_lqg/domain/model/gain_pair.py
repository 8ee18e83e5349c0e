"""Controller/observer gain pair."""

from __future__ import annotations

from dataclasses import dataclass

from numpy.typing import ArrayLike

from disc_lqg.domain.services.matrix_rules import FloatMatrix, as_matrix


@dataclass(frozen=True, slots=True, eq=False)
class GainPair:
    """Control law u = -F x_hat, observer gain K on the innovation.

    F is absent for observer-only designs; K is absent for full-state designs.
    """

    F: FloatMatrix | None = None
    K: FloatMatrix | None = None

    def __post_init__(self) -> None:
        if self.F is None and self.K is None:
            raise ValueError("GainPair needs at least one of F, K")
        if self.F is not None:
            object.__setattr__(self, "F", as_matrix(self.F, name="F"))
        if self.K is not None:
            object.__setattr__(self, "K", as_matrix(self.K, name="K"))

    @property
    def is_full_state(self) -> bool:
        return self.K is None

    def require_f(self) -> FloatMatrix:
        if self.F is None:
            raise ValueError("gain pair has no state-feedback gain F")
        return self.F

    def require_k(self) -> FloatMatrix:
        if self.K is None:
            raise ValueError("gain pair has no observer gain K")
        return self.K

    def replace(self, *, F: ArrayLike | None = None, K: ArrayLike | None = None) -> GainPair:
        return GainPair(F=self.F if F is None else F, K=self.K if K is None else K)

    def check_dimensions(self, *, n: int, m: int, p: int) -> None:
        """Raise ValueError when the gains do not fit an (n, m, p) system."""
        if self.F is not None and self.F.shape != (m, n):
            raise ValueError(f"F must be {m}x{n}, got {self.F.shape[0]}x{self.F.shape[1]}")
        if self.K is not None and self.K.shape != (n, p):
            raise ValueError(f"K must be {n}x{p}, got {self.K.shape[0]}x{self.K.shape[1]}")
