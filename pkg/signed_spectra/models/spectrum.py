from dataclasses import dataclass

import numpy as np

from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import OperatorKind


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues with eigenfunctions orthonormal in (·,·)_μ.

    ``eigenfunctions[:, i]`` is φ_{i+1}; μ is μ_d for the normalized
    operator and μ_1 for the Kirchhoff matrix.
    """

    eigenvalues: np.ndarray
    eigenfunctions: np.ndarray
    measure: VertexMeasure
    operator: OperatorKind

    def __post_init__(self):
        for name in ("eigenvalues", "eigenfunctions"):
            array = np.array(getattr(self, name), dtype=np.float64)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    def __len__(self) -> int:
        return int(self.eigenvalues.size)

    def eigenvalue(self, k: int) -> float:
        """λ_k, 1-based."""
        return float(self.eigenvalues[k - 1])

    def eigenfunction(self, k: int) -> np.ndarray:
        """φ_k, 1-based."""
        return self.eigenfunctions[:, k - 1]

    @property
    def smallest(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def largest(self) -> float:
        return float(self.eigenvalues[-1])
