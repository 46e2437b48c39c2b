"""
Application settings and configuration.
"""
from pathlib import Path
from typing import Any, Dict, List, Union
import os
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Configure logging
logger = logging.getLogger(__name__)

# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent.parent
LOGS_DIR = Path(os.getenv('CELLNET_LOGS_DIR', str(BASE_DIR / 'logs')))

# Ensure directories exist
LOGS_DIR.mkdir(parents=True, exist_ok=True)


def _env_int(name: str, default: int) -> Union[int, str]:
    """Integer environment variable; unparsable text is kept so validate_config can report it."""
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        return raw


# Combinatorics limits
COMBINATORICS_CONFIG = {
    'max_partition_n': _env_int('MAX_PARTITION_N', 64),
    'table_workers': _env_int('TABLE_WORKERS', 1),
}

# Network algebra limits
NETWORK_CONFIG = {
    'canonical_form_cap': _env_int('CANONICAL_FORM_CAP', 8),
}

# Brute-force oracle settings
ORACLE_CONFIG = {
    'omega_budget': _env_int('OMEGA_BUDGET', 100000000),
    'workers': _env_int('ORACLE_WORKERS', 1),
    'chunk_size': _env_int('CENSUS_CHUNK_SIZE', 2048),
}

# Default logging settings
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'true').lower() == 'true'


class Settings:
    """
    Settings class that provides access to application configuration.
    This class makes configuration values accessible as attributes.
    """

    def __init__(self):
        """Initialize Settings with default values."""
        # Paths
        self.BASE_DIR = BASE_DIR
        self.LOGS_DIR = LOGS_DIR

        # Logging settings
        self.LOG_LEVEL = LOG_LEVEL
        self.LOG_TO_FILE = LOG_TO_FILE

        # Engine configurations
        self.COMBINATORICS_CONFIG = COMBINATORICS_CONFIG
        self.NETWORK_CONFIG = NETWORK_CONFIG
        self.ORACLE_CONFIG = ORACLE_CONFIG

        # Flattened shortcuts used throughout the engine
        self.MAX_PARTITION_N = COMBINATORICS_CONFIG['max_partition_n']
        self.TABLE_WORKERS = COMBINATORICS_CONFIG['table_workers']
        self.CANONICAL_FORM_CAP = NETWORK_CONFIG['canonical_form_cap']
        self.OMEGA_BUDGET = ORACLE_CONFIG['omega_budget']
        self.ORACLE_WORKERS = ORACLE_CONFIG['workers']
        self.CENSUS_CHUNK_SIZE = ORACLE_CONFIG['chunk_size']

    def get_config(self) -> Dict[str, Any]:
        """
        Get the complete configuration dictionary.

        Returns:
            Dict[str, Any]: Complete configuration dictionary
        """
        return {
            'combinatorics': self.COMBINATORICS_CONFIG,
            'network': self.NETWORK_CONFIG,
            'oracle': self.ORACLE_CONFIG,
            'logging': {
                'level': self.LOG_LEVEL,
                'to_file': self.LOG_TO_FILE,
                'dir': str(self.LOGS_DIR),
            },
        }

    def validate_config(self) -> bool:
        """
        Validate the configuration settings.

        Returns:
            bool: True if every numeric limit is positive, False otherwise
        """
        return validate_config(self.get_config())


def get_config() -> Dict[str, Any]:
    """
    Get the complete configuration dictionary.

    Returns:
        Dict[str, Any]: Complete configuration dictionary
    """
    return Settings().get_config()


def config_errors(config: Dict[str, Any] = None) -> List[str]:
    """
    Describe every numeric setting that is not a positive integer.

    Args:
        config (Dict[str, Any], optional): Configuration to check, defaults to the live one

    Returns:
        List[str]: One message per invalid setting, empty when the configuration is valid
    """
    config = config or get_config()
    errors = []
    for section in ('combinatorics', 'network', 'oracle'):
        for key, value in config[section].items():
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                errors.append(f"{section}.{key}={value!r} must be a positive integer")
    return errors


def validate_config(config: Dict[str, Any] = None) -> bool:
    """
    Validate the configuration settings.

    Args:
        config (Dict[str, Any], optional): Configuration to check, defaults to the live one

    Returns:
        bool: True if configuration is valid, False otherwise
    """
    errors = config_errors(config)
    for error in errors:
        logger.warning(f"Invalid setting {error}")
    return not errors
