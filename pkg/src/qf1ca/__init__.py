"""Simulator, validator and construction kit for quantum one-counter automata."""

from .automaton import (AcceptanceType, ConfigClass, CounterDomain,
                        GeneralQf1ca, MissingDirection, Observation,
                        SimpleQf1ca, as_general, classify_config,
                        general_from_simple, validate_structure)
from .core import Configuration, Direction, StateVector, displacement, sign, tape
from .dynamics import (NegativeCounter, RunResult, brute_force_run, run,
                       run_mm, run_mo)
from .transforms import UnsupportedAcceptance, eliminate_negative, mo_to_mm
from .wellformed import (check_conditions, check_matrix_unitary, check_simple,
                         complete_unitary, isometry_oracle)

__all__ = [
    "AcceptanceType", "ConfigClass", "Configuration", "CounterDomain",
    "Direction", "GeneralQf1ca", "MissingDirection", "NegativeCounter",
    "Observation", "RunResult", "SimpleQf1ca", "StateVector",
    "UnsupportedAcceptance", "as_general", "brute_force_run",
    "check_conditions", "check_matrix_unitary", "check_simple",
    "classify_config", "complete_unitary", "displacement",
    "eliminate_negative", "general_from_simple", "isometry_oracle",
    "mo_to_mm", "run", "run_mm", "run_mo", "sign", "tape",
    "validate_structure",
]

__version__ = "0.1.0"
