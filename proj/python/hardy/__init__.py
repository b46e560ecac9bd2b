"""Classify n-qubit pure states: tensor products of 1-qubit states and
maximally entangled pairs (P_n), or logically contextual with n+2
witnessing local observables, verified by exhaustive satisfiability over
the empirical model."""

from ._hardy import (
    ContextWitness,
    ContextualityVerdict,
    DiffKind,
    DiffReport,
    EmpiricalModel,
    EntanglementType,
    HardyPair,
    InputError,
    InternalError,
    MeasurementScenario,
    Observable,
    PnResult,
    QubitState,
    Rng,
    SchmidtForm,
    Tolerances,
    Verdict,
    WitnessReport,
    b_observable,
    born_probability,
    build_model,
    check_logical,
    classify,
    export_dimacs,
    factor_difference,
    hardy_observables,
    hardy_paradox_probability,
    model_from_json,
    model_to_json,
    outcome_from_string,
    outcome_to_string,
    parse_state,
    random_pn_state,
    random_state,
    schmidt_2qubit,
    support,
    tau,
    test_pn,
    witness_from_json,
    witness_to_json,
    write_state,
    z_observable,
)

__version__ = "0.1.0"

__all__ = [
    "ContextWitness",
    "ContextualityVerdict",
    "DiffKind",
    "DiffReport",
    "EmpiricalModel",
    "EntanglementType",
    "HardyPair",
    "InputError",
    "InternalError",
    "MeasurementScenario",
    "Observable",
    "PnResult",
    "QubitState",
    "Rng",
    "SchmidtForm",
    "Tolerances",
    "Verdict",
    "WitnessReport",
    "b_observable",
    "born_probability",
    "build_model",
    "check_logical",
    "classify",
    "export_dimacs",
    "factor_difference",
    "hardy_observables",
    "hardy_paradox_probability",
    "model_from_json",
    "model_to_json",
    "outcome_from_string",
    "outcome_to_string",
    "parse_state",
    "random_pn_state",
    "random_state",
    "schmidt_2qubit",
    "support",
    "tau",
    "test_pn",
    "witness_from_json",
    "witness_to_json",
    "write_state",
    "z_observable",
]
