from larmortrack.simulation.clock import ExperimentClock
from larmortrack.simulation.measurement import sample_measurement
from larmortrack.simulation.seeding import derived_seed, outcome_generator, run_streams
from larmortrack.simulation.signal import (
    GroundTruthSignal,
    draw_initial_frequency,
    generate_ground_truth,
    steps_for,
    true_frequency_at,
)

__all__ = [
    "ExperimentClock",
    "GroundTruthSignal",
    "derived_seed",
    "draw_initial_frequency",
    "generate_ground_truth",
    "outcome_generator",
    "run_streams",
    "sample_measurement",
    "steps_for",
    "true_frequency_at",
]
