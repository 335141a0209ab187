"""
Пакет cli - документы, команды и консольный интерфейс nilform.
"""

from .commands import (
    cmd_analyze,
    cmd_audit_stabilizer,
    cmd_decompose,
    cmd_gallery,
    cmd_verify_euclidean,
    cmd_verify_skewpairing,
    cmd_verify_so3_module,
)
from .documents import load, parse_document, read_document
from .errors import (
    EXIT_COUNTEREXAMPLE,
    EXIT_HYPOTHESIS,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    HypothesisViolationError,
    InvalidInputError,
    NilformError,
)

__all__ = [
    # Команды
    'cmd_analyze',
    'cmd_decompose',
    'cmd_audit_stabilizer',
    'cmd_verify_euclidean',
    'cmd_verify_skewpairing',
    'cmd_verify_so3_module',
    'cmd_gallery',

    # Документы
    'load',
    'parse_document',
    'read_document',

    # Ошибки и коды выхода
    'NilformError',
    'InvalidInputError',
    'HypothesisViolationError',
    'EXIT_OK',
    'EXIT_INVALID_INPUT',
    'EXIT_HYPOTHESIS',
    'EXIT_COUNTEREXAMPLE',
]
