"""
Chaos module - finite-horizon witnesses for pair and tuple chaos.
"""

from .pairs import (
    DEFAULT_SEPARATION,
    ProximalResult,
    TailResult,
    ChaosVerdict,
    FChaoticWitness,
    proximal_search,
    asymptotic_tail,
    li_yorke_verdict,
    f_chaotic_witness,
)
from .probes import (
    MAX_TARGETS,
    SensitivityWitness,
    TupleWitness,
    sensitivity_probe,
    almost_periodic_probe,
    ergodicity_probe,
    tuple_sensitivity_witness,
)

__all__ = [
    "DEFAULT_SEPARATION",
    "ProximalResult",
    "TailResult",
    "ChaosVerdict",
    "FChaoticWitness",
    "proximal_search",
    "asymptotic_tail",
    "li_yorke_verdict",
    "f_chaotic_witness",
    "MAX_TARGETS",
    "SensitivityWitness",
    "TupleWitness",
    "sensitivity_probe",
    "almost_periodic_probe",
    "ergodicity_probe",
    "tuple_sensitivity_witness",
]
