"""Experiment harness: records, drivers, emitters and the command line."""

from .experiments import (
    PERTURBATION_PAIRS,
    RNG_ALGORITHM,
    SampleConfig,
    Summary,
    SweepConfig,
    partitions,
    perturbation_experiment,
    run_compute,
    sample_random,
    sweep_partitions,
)
from .records import DegenerateEntry, ExperimentRecord, build_record

__all__ = [
    "PERTURBATION_PAIRS",
    "RNG_ALGORITHM",
    "DegenerateEntry",
    "ExperimentRecord",
    "SampleConfig",
    "Summary",
    "SweepConfig",
    "build_record",
    "partitions",
    "perturbation_experiment",
    "run_compute",
    "sample_random",
    "sweep_partitions",
]
