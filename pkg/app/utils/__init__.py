"""
Utility functions for the app package.

This module provides logging and validation utilities for the application.
"""

# Import utility functions to make them available at the module level
from app.utils.logger import get_logger, set_log_level
from app.utils.validation import (
    Validator, ValidationError, MalformedNetworkError, UnsupportedSizeError,
    BudgetExceededError, InternalConsistencyError,
)

# Export specific functions for easier imports
__all__ = [
    # Logger
    'get_logger',
    'set_log_level',

    # Validation
    'Validator',
    'ValidationError',
    'MalformedNetworkError',
    'UnsupportedSizeError',
    'BudgetExceededError',
    'InternalConsistencyError',
]
