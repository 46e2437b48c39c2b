"""
Input validation helpers and the engine's exception hierarchy.
"""
from typing import Any, Iterable, Optional

from app.utils.logger import get_logger

logger = get_logger(__name__)


class ValidationError(Exception):
    """Exception raised for validation errors."""
    pass


class MalformedNetworkError(ValidationError):
    """Adjacency data that does not describe a homogeneous network."""
    pass


class UnsupportedSizeError(ValidationError):
    """Request above a configured size cap."""
    pass


class BudgetExceededError(ValidationError):
    """Brute-force enumeration larger than the configured budget."""

    def __init__(self, n: int, r: int, size: int, budget: int):
        self.n = n
        self.r = r
        self.size = size
        self.budget = budget
        super().__init__(
            f"|Omega({n},{r})| = {size} exceeds the enumeration budget of {budget}"
        )


class InternalConsistencyError(RuntimeError):
    """A result that the underlying theorems rule out; signals a defect."""
    pass


class Validator:
    """
    Utility class for validating input data.
    Provides methods for common validation tasks.
    """

    @staticmethod
    def validate_type(value: Any, expected_type: type, field_name: str = "value") -> None:
        """
        Validate that a value is of the expected type.

        Args:
            value (Any): Value to validate
            expected_type (type): Expected type
            field_name (str): Name of the field for error messages

        Raises:
            ValidationError: If value is not of the expected type
        """
        if not isinstance(value, expected_type) or isinstance(value, bool):
            raise ValidationError(
                f"Invalid type for {field_name}. Expected {expected_type.__name__}, "
                f"got {type(value).__name__}"
            )

    @staticmethod
    def validate_int_range(
        value: Any,
        min_value: Optional[int] = None,
        max_value: Optional[int] = None,
        field_name: str = "value",
        error_class: type = ValidationError
    ) -> None:
        """
        Validate that an integer lies within the specified range.

        Args:
            value (Any): Value to validate
            min_value (Optional[int]): Minimum allowed value
            max_value (Optional[int]): Maximum allowed value
            field_name (str): Name of the field for error messages
            error_class (type): Exception raised when the upper bound is exceeded

        Raises:
            ValidationError: If value is not an integer or is below min_value
        """
        Validator.validate_type(value, int, field_name)

        if min_value is not None and value < min_value:
            raise ValidationError(f"{field_name} must be at least {min_value}, got {value}")

        if max_value is not None and value > max_value:
            raise error_class(f"{field_name} must be at most {max_value}, got {value}")

    @staticmethod
    def validate_positive_int(value: Any, field_name: str = "value") -> None:
        """Raise ValidationError unless value is an integer >= 1."""
        Validator.validate_int_range(value, min_value=1, field_name=field_name)

    @staticmethod
    def validate_nonnegative_int(value: Any, field_name: str = "value") -> None:
        """Raise ValidationError unless value is an integer >= 0."""
        Validator.validate_int_range(value, min_value=0, field_name=field_name)

    @staticmethod
    def validate_choice(value: Any, choices: Iterable[Any], field_name: str = "value") -> None:
        """
        Validate that a value is one of the allowed choices.

        Args:
            value (Any): Value to validate
            choices (Iterable[Any]): Allowed values
            field_name (str): Name of the field for error messages

        Raises:
            ValidationError: If value is not among the choices
        """
        choices = list(choices)
        if value not in choices:
            raise ValidationError(
                f"{field_name} must be one of {', '.join(map(str, choices))}, got {value!r}"
            )


# Create a singleton instance
validator = Validator()
