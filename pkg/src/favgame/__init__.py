"""Price of anarchy and strong price of anarchy for two machines where every
job has a favorite machine and runs ``s`` times slower on the other one."""

from .bounds import (
    PHI,
    Breakpoints,
    compute_breakpoints,
    poa_formula,
    segment_of,
    spoa_formula,
    spoa_simple,
)
from .certificates import (
    Certificate,
    CertificateReport,
    SegmentError,
    bad_ne_example,
    poa_certificate,
    spoa_certificate,
    verify,
)
from .conditions import se_condition_flags
from .equilibria import (
    EquilibriumReport,
    NoStrongEquilibrium,
    analyze,
    deviate,
    improving_coalition,
    is_nash,
    is_strong_nash,
    job_cost,
    poa_of_instance,
    spoa_of_instance,
)
from .lpverify import BranchSpec, Mode, build_system, dual_weights, max_l1
from .model import (
    M1,
    M2,
    CapExceeded,
    GroupDecomposition,
    Instance,
    Job,
    Machine,
    decompose,
    enumerate_allocations,
    loads_from_decomposition,
    machine_loads,
    makespan,
    optimum,
    processing_time,
)
from .simplex import Constraint, LinearProgram, LpResult, solve_lp

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "bad_ne_example",
    "BranchSpec",
    "Breakpoints",
    "build_system",
    "CapExceeded",
    "Certificate",
    "CertificateReport",
    "compute_breakpoints",
    "Constraint",
    "decompose",
    "deviate",
    "dual_weights",
    "enumerate_allocations",
    "EquilibriumReport",
    "GroupDecomposition",
    "improving_coalition",
    "Instance",
    "is_nash",
    "is_strong_nash",
    "Job",
    "job_cost",
    "LinearProgram",
    "loads_from_decomposition",
    "LpResult",
    "M1",
    "M2",
    "Machine",
    "machine_loads",
    "makespan",
    "max_l1",
    "Mode",
    "NoStrongEquilibrium",
    "optimum",
    "PHI",
    "poa_certificate",
    "poa_formula",
    "poa_of_instance",
    "processing_time",
    "se_condition_flags",
    "segment_of",
    "SegmentError",
    "solve_lp",
    "spoa_certificate",
    "spoa_formula",
    "spoa_of_instance",
    "spoa_simple",
    "verify",
]
