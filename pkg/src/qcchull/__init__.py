"""qcchull: combine-and-conquer maxima sets and output-sensitive convex
hulls of sorted integer points, with every quantum search subroutine run
classically while its query cost is charged to a ledger.
"""

from .geom import Point, Rational, Turn, cross, dominates, lex_less, orientation
from .hull import (
    Bridge,
    HullChain,
    classical_upper_hull,
    monotone_chain_upper,
    monotone_full_hull,
    quantum_full_hull,
    quantum_jarvis_full,
    quantum_upper_hull,
)
from .instances import GenSpec, Infeasible, generate
from .maxima import MaximaList, classical_maxima, quantum_maxima, scan_maxima
from .oracle import (
    BlockView,
    DistinctXRequired,
    OracleError,
    SortedPointSet,
    load,
    qprep,
    read_points,
    write_points,
)
from .qsim import (
    ANALYTIC,
    Analytic,
    BudgetExceeded,
    CostLedger,
    MonteCarlo,
    qlp,
    qmax,
    qmin,
)

__version__ = "0.1.0"

__all__ = [
    "ANALYTIC",
    "Analytic",
    "BlockView",
    "Bridge",
    "BudgetExceeded",
    "CostLedger",
    "DistinctXRequired",
    "GenSpec",
    "HullChain",
    "Infeasible",
    "MaximaList",
    "MonteCarlo",
    "OracleError",
    "Point",
    "Rational",
    "SortedPointSet",
    "Turn",
    "classical_maxima",
    "classical_upper_hull",
    "cross",
    "dominates",
    "generate",
    "lex_less",
    "load",
    "monotone_chain_upper",
    "monotone_full_hull",
    "orientation",
    "qlp",
    "qmax",
    "qmin",
    "qprep",
    "quantum_full_hull",
    "quantum_jarvis_full",
    "quantum_maxima",
    "quantum_upper_hull",
    "read_points",
    "scan_maxima",
    "write_points",
    "__version__",
]
