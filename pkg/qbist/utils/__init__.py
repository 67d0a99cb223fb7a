from .config import SimulationConfig, configure, get_config, override
from .config_reader import ConfigReader

__all__ = [
    "ConfigReader",
    "SimulationConfig",
    "configure",
    "get_config",
    "override",
]
