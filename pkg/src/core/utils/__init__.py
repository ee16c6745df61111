from .file_utils import atomic_write_json, ensure_directory
from .retry import retry_on_exception
from .validation import validate_file_exists, validate_non_negative, validate_positive

__all__ = [
    "atomic_write_json",
    "ensure_directory",
    "retry_on_exception",
    "validate_file_exists",
    "validate_non_negative",
    "validate_positive",
]
