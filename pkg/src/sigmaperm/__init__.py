"""σ-properties of sections of permutation groups."""

__version__ = "0.1.0"

from .config import Config, load_config, save_config, config_exists
from .core import (
    PermGroup,
    Section,
    is_sigma_nilpotent,
    is_sigma_p_permutable,
    is_sigma_permutable_soluble,
    is_sigma_soluble,
    is_sigma_subnormal,
    least_sigma_nilpotent,
    least_sigma_p_permutable,
    least_sigma_soluble,
)
from .models import Partition, Permutation
from .file_ops import parse_group_file, write_group_file

__all__ = [
    "Config",
    "load_config",
    "save_config",
    "config_exists",
    "PermGroup",
    "Section",
    "is_sigma_nilpotent",
    "is_sigma_p_permutable",
    "is_sigma_permutable_soluble",
    "is_sigma_soluble",
    "is_sigma_subnormal",
    "least_sigma_nilpotent",
    "least_sigma_p_permutable",
    "least_sigma_soluble",
    "Partition",
    "Permutation",
    "parse_group_file",
    "write_group_file",
]
