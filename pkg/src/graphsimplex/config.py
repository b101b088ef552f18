"""Tolerance configuration.

All validation tolerances are scale-relative: the raw value is multiplied
by the dominant scale of the matrix at hand (max absolute diagonal entry,
largest eigenvalue, or max entry, depending on the check).
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # row sums, off-diagonal sign dead-band, symmetry, angle sign dead-band
    validation: float = 1e-9
    # eigenvalue treated as zero iff mu <= zero_eigenvalue * mu_max
    zero_eigenvalue: float = 1e-10
    # pass threshold for residual reports (Fiedler identity, circumsphere)
    residual: float = 1e-8
    # absolute slack for triangle-inequality checks, relative to max entry
    metric_slack: float = 1e-12
    # rounding clamp applied when re-canonicalizing Schur complements
    clamp: float = 1e-12

    def with_validation(self, tol: float) -> "Tolerances":
        return replace(self, validation=tol)


DEFAULT = Tolerances()
