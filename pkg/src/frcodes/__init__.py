"""Fractional repetition code analysis.

Model a code as n node packet-sets over a universe of theta packets,
then ask the storage questions: is the declared replication respected,
how many nodes must a reader contact (best case and worst case), how
many helpers does a failed node need, and what is the worst-case
coverage R(k).  Exhaustive oracles and the seeded greedy procedures are
both exposed so their answers can always be compared.
"""

__version__ = "0.1.0"

from .corpus import CORPUS_NAMES, corpus
from .errors import (
    EnumerationCapExceeded,
    FRCodeError,
    GenerationExhausted,
    InfeasibleError,
    UnrepairableError,
)
from .frcfile import (
    FrcFileError,
    FrcParseError,
    FrcSemanticError,
    parse_frc,
    write_frc,
)
from .generate import GenSpec, generate, generate_random, generate_strong
from .model import (
    DerivedParams,
    FRCode,
    IncidenceMatrix,
    ValidationReport,
    Violation,
    column_support,
    derive_params,
    incidence_matrix,
    validate,
)
from .reconstruction import (
    DEFAULT_CAP,
    CoverageTarget,
    DegreeReport,
    GreedyTrace,
    TraceStep,
    coverage,
    degree_report,
    k_fr_exact,
    k_fr_greedy,
    k_star_exact,
    k_star_greedy,
    rate,
    rate_profile,
)
from .repair import (
    HelperSets,
    NodeRepair,
    RepairGroup,
    RepairReport,
    helper_sets,
    repair_degree_exact,
    repair_degree_greedy,
    repair_report,
)

__all__ = [
    "__version__",
    "CORPUS_NAMES",
    "CoverageTarget",
    "DEFAULT_CAP",
    "DegreeReport",
    "DerivedParams",
    "EnumerationCapExceeded",
    "FRCode",
    "FRCodeError",
    "FrcFileError",
    "FrcParseError",
    "FrcSemanticError",
    "GenSpec",
    "GenerationExhausted",
    "GreedyTrace",
    "HelperSets",
    "IncidenceMatrix",
    "InfeasibleError",
    "NodeRepair",
    "RepairGroup",
    "RepairReport",
    "TraceStep",
    "UnrepairableError",
    "ValidationReport",
    "Violation",
    "column_support",
    "corpus",
    "coverage",
    "degree_report",
    "derive_params",
    "generate",
    "generate_random",
    "generate_strong",
    "helper_sets",
    "incidence_matrix",
    "k_fr_exact",
    "k_fr_greedy",
    "k_star_exact",
    "k_star_greedy",
    "parse_frc",
    "rate",
    "rate_profile",
    "repair_degree_exact",
    "repair_degree_greedy",
    "repair_report",
    "validate",
    "write_frc",
]
