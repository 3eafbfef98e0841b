from .algebra import derive_command, eval_command, mul_command
from .bernstein import bernstein_command, counterexample_command, theorem_command
from .harmonics import almansi_command, zonal_table_command
from .norms import norm_command, profile_command

ALL_COMMANDS = [
    eval_command,
    mul_command,
    derive_command,
    almansi_command,
    zonal_table_command,
    norm_command,
    profile_command,
    bernstein_command,
    theorem_command,
    counterexample_command,
]

__all__ = ['ALL_COMMANDS']
