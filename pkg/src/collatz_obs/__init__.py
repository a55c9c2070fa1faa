"""Compressed 3x+1 map: exact trajectories, rising-run jumps, pattern families,
peak census and exponent representations."""

from .accel import Decomposition, JumpReport, decompose, fast_trajectory, jump, recompose
from .core import (
    ResidueClass,
    StepRecord,
    Trajectory,
    UndecidedError,
    classify,
    peak,
    predecessors,
    steps_to_one,
    t_step,
    trajectory,
    v2,
)
from .families import (
    CensusRecord,
    CensusResult,
    census_brute,
    census_classes,
    enumerate_family,
    lift,
    shift_orbit,
)
from .representation import (
    EvalResult,
    Representation,
    bracket_experiment,
    eval_representation,
    extract_representation,
    partition_check,
    u_set,
    verify_representation,
)

__version__ = "0.1.0"
