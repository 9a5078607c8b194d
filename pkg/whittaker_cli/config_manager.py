import json
import logging
import os
from typing import Any, Dict, List

from commons.constants import (
    CONFIG_COCHARACTER_BOUND, CONFIG_GOLDEN_SIZES, CONFIG_LOG_LEVEL, CONFIG_PRETTY_INDENT, DEFAULT_COCHARACTER_BOUND,
    DEFAULT_GOLDEN_SIZES, DEFAULT_LOG_LEVEL, DEFAULT_PRETTY_INDENT,
)

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "cli_config.json")


def _default_config() -> Dict[str, Any]:
    return {
        CONFIG_COCHARACTER_BOUND: DEFAULT_COCHARACTER_BOUND,
        CONFIG_LOG_LEVEL: DEFAULT_LOG_LEVEL,
        CONFIG_GOLDEN_SIZES: {key: list(sizes) for key, sizes in DEFAULT_GOLDEN_SIZES.items()},
        CONFIG_PRETTY_INDENT: DEFAULT_PRETTY_INDENT,
    }


class ConfigManager:
    """Class for managing CLI configuration"""

    def __init__(self, config_file: str = DEFAULT_CONFIG_FILE):
        """Initialize config manager with config file path"""
        self.config_file = config_file
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, falling back to the built-in defaults; never writes"""
        if not os.path.exists(self.config_file):
            logger.info(f"No config at {self.config_file}, using defaults")
            return _default_config()
        try:
            with open(self.config_file, 'r') as f:
                loaded = json.load(f)
        except (OSError, ValueError) as e:
            logger.error(f"Error loading config: {e}")
            return _default_config()
        if not isinstance(loaded, dict):
            logger.error(f"Config {self.config_file} is not a JSON object, using defaults")
            return _default_config()
        return {**_default_config(), **loaded}

    def get_cocharacter_bound(self) -> int:
        """Get the box bound used by the cocharacter search"""
        return int(self.config.get(CONFIG_COCHARACTER_BOUND, DEFAULT_COCHARACTER_BOUND))

    def get_log_level(self) -> str:
        return str(self.config.get(CONFIG_LOG_LEVEL, DEFAULT_LOG_LEVEL)).upper()

    def get_golden_sizes(self, case_set: str) -> List[int]:
        """Get the sizes (n or m) the golden battery runs for a case set"""
        sizes = self.config.get(CONFIG_GOLDEN_SIZES, {})
        return list(sizes.get(case_set, DEFAULT_GOLDEN_SIZES.get(case_set, [])))

    def get_pretty_indent(self) -> int:
        return int(self.config.get(CONFIG_PRETTY_INDENT, DEFAULT_PRETTY_INDENT))
