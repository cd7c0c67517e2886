"""Forward verification of very-well-structured transition systems.

Builds ideal-based Karp-Miller trees for labeled VAS, Petri nets and
omega-Petri nets, and answers coverability, repeated coverability,
downward trace inclusion and action-based LTL queries on top of them.
"""

from .errors import (
    AlphabetMismatchError,
    BudgetExceededError,
    DimensionMismatch,
    NetFormatError,
    SearchInconclusiveError,
    StateBlowupError,
    UnknownLabelError,
    UnknownSymbolError,
    WstsVerifyError,
)
from .ideals import (
    OMEGA,
    IdealDecomposition,
    IdealVec,
    decompose,
    lub_accelerate,
    omega_leq,
    parse_marking,
    vec_leq,
)

__version__ = "0.1.0"
