"""Central tolerance configuration.

Every numeric gate in the package (test thresholds, verdict boundaries,
degeneracy floors) references a named field of :class:`Tolerances`
instead of a loose literal, so the whole tolerance budget lives in one
record.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: algebraic identities evaluated in floating point
    algebraic: float = 1e-12
    #: agreement between direct AD tensors and analytic assemblies
    cross_check: float = 1e-9
    #: agreement between AD and central finite differences
    finite_diff: float = 1e-6
    #: equality residuals of admissible models over sampled states
    residual: float = 1e-10
    #: noise floor for sums of a handful of rounded terms
    exact: float = 1e-15
    #: smallest violation the search is required to surface
    detection: float = 1e-4
    #: verdict boundary between "consistent" and "violation found"
    verdict_violation: float = 1e-6
    #: verdict boundary for a nonzero influx discrepancy
    verdict_discrepancy: float = 1e-8
    #: relative Gram-determinant floor for coefficient extraction
    gram_floor: float = 1e-8
    #: extraction residual allowed before declaring f non-representable,
    #: scaled by (1 + |f|)
    extraction_residual: float = 1e-6
    #: non-degeneracy floor on |u|, |v| for Jacobian-based checks
    degenerate_s: float = 0.1
    #: |u.v| <= alignment * |u| |v| required by Gram-based checks
    alignment: float = 0.99
    #: relative error allowed on the simulated wave speed
    wave_speed_rel: float = 0.02
    #: relative L2 error allowed against the diffusion kernel
    kernel_l2: float = 1e-3
    #: cumulative entropy production may not undershoot -entropy_floor
    entropy_floor: float = 1e-12
    #: interface jumps for identical materials
    contact_jump: float = 1e-12


TOL = Tolerances()
