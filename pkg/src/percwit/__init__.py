"""Prediction witnesses for informationally restricted perceptrons.

Two parties each hold two input bits but may forward only one bit (one
qubit) to a decision node; the node is queried for the perceptron's
output on slot s of the inputs.  This package builds the prediction
witness p_cor for every implementable two-bit Boolean function, finds
exact optimal classical values by enumeration, evaluates the reference
qubit strategies, and searches for better qubit strategies numerically.
"""

from .classical import (BoundCertificate, ClassicalStrategy, behavior_of,
                        optimal_deterministic, paper_strategy)
from .optimize import OptimizerConfig, SearchResult, StrategyParams, search
from .perceptron import (FUNCTION_IDS, FunctionClass, PerceptronParams,
                         TruthTable, UnknownFunctionError, classify,
                         enumerate_separable, resolve_function)
from .quantum import (Povm, QuantumStrategy, behavior_of_quantum,
                      embed_classical, paper_measurement,
                      paper_quantum_strategy, paper_state)
from .witness import (Behavior, TrivialFunctionError, Witness, build_witness,
                      correct_output, evaluate)

__version__ = "0.1.0"

__all__ = [
    "Behavior", "BoundCertificate", "ClassicalStrategy", "FUNCTION_IDS",
    "FunctionClass", "OptimizerConfig", "PerceptronParams", "Povm",
    "QuantumStrategy", "SearchResult", "StrategyParams", "TruthTable",
    "TrivialFunctionError", "UnknownFunctionError", "Witness",
    "behavior_of", "behavior_of_quantum", "build_witness", "classify",
    "correct_output", "embed_classical", "enumerate_separable", "evaluate",
    "optimal_deterministic", "paper_measurement", "paper_quantum_strategy",
    "paper_state", "paper_strategy", "resolve_function", "search",
    "__version__",
]
