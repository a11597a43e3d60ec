"""q-decreasing binary words: membership, bijections, enumeration and Gray codes."""

from .bijection import DomainError, NotInImageError, phi, phi_inv, psi, psi_inv
from .enumeration import (
    CountTable,
    FrequencyReport,
    count_by_ones,
    count_qdecreasing,
    expand_series,
    frequency_report,
    gen_fib,
    parity_difference,
    popularity,
)
from .generation import (
    GrayReport,
    SearchBudgetExceeded,
    WordList,
    brgc_list,
    delta_list,
    gray1_W,
    gray1_Z,
    lex_stream,
    search_gray1,
    verify_gray,
)
from .rungraph import RunGraph, build_run_graph, export_dot, hamiltonian_path, is_hamiltonian_cycle
from .words import (
    BinaryWord,
    RunBlock,
    avoids_ones_run,
    decompose_runs,
    hamming,
    is_q_decreasing,
    repeat_trim,
)

__version__ = "0.1.0"
