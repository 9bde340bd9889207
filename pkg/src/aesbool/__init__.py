"""GF(2) Boolean function toolkit and AES-128 Boolean equation systems."""

from .anf import Anf, TermLimitError, VarSpace, batch_evaluate
from .boolfn import (
    TruthTable,
    algebraic_degree,
    anf_from_truth_table,
    evaluate,
    is_balanced,
    mobius_transform,
    support,
    truth_table_from_anf,
    weight,
)
from .serial import ParseError, read_system, write_system
from .system import (
    EquationSystem,
    Stage,
    build_decryption_system,
    build_encryption_system,
    evaluate_system,
    evaluate_system_batch,
)

__all__ = [
    "Anf",
    "EquationSystem",
    "ParseError",
    "Stage",
    "TermLimitError",
    "TruthTable",
    "VarSpace",
    "algebraic_degree",
    "anf_from_truth_table",
    "batch_evaluate",
    "build_decryption_system",
    "build_encryption_system",
    "evaluate",
    "evaluate_system",
    "evaluate_system_batch",
    "is_balanced",
    "mobius_transform",
    "read_system",
    "support",
    "truth_table_from_anf",
    "weight",
    "write_system",
]
