from larmortrack.control.adaptive import (
    SensingTimeState,
    choose_phase,
    choose_sensing_time,
    figure_of_merit,
    phase_frequency,
)
from larmortrack.control.schedule import (
    ControllerConfig,
    SensingOrder,
    sensing_exponents,
    sensing_measurement_count,
    sensing_schedule,
)

__all__ = [
    "ControllerConfig",
    "SensingOrder",
    "SensingTimeState",
    "choose_phase",
    "choose_sensing_time",
    "figure_of_merit",
    "phase_frequency",
    "sensing_exponents",
    "sensing_measurement_count",
    "sensing_schedule",
]
