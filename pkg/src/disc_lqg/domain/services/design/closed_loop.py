"""Closed-loop spectrum of a controller/observer pair."""

from __future__ import annotations

import numpy as np

from disc_lqg.domain.model.gain_pair import GainPair
from disc_lqg.domain.model.linear_system import LinearSystem


def closed_loop_eigenvalues(system: LinearSystem, gains: GainPair) -> tuple[complex, ...]:
    """Eigenvalues of the (state, estimation error) closed loop, sorted by real part.

    The joint matrix is block upper triangular, so the spectrum is that of A - BF
    together with that of A - KC. A missing gain contributes A itself.
    """
    gains.check_dimensions(n=system.n, m=system.m, p=system.p)
    blocks = []
    if gains.F is not None:
        blocks.append(system.A - system.B @ gains.F)
    if gains.K is not None:
        C, _, _ = system.output_matrices()
        blocks.append(system.A - gains.K @ C)
        if gains.F is None:
            blocks.append(system.A)
    eigenvalues = np.concatenate([np.linalg.eigvals(block) for block in blocks])
    order = np.lexsort((eigenvalues.imag, eigenvalues.real))
    return tuple(complex(value) for value in eigenvalues[order])


def max_real_part(eigenvalues: tuple[complex, ...]) -> float:
    return max(value.real for value in eigenvalues)
