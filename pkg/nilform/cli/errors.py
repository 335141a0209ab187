"""
Ошибки командного интерфейса и коды выхода.
"""

import difflib
from typing import Iterable, List, Optional

from .schemas import ErrorResponse

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_HYPOTHESIS = 2
EXIT_COUNTEREXAMPLE = 3


class NilformError(Exception):
    """Базовый класс для ошибок командного интерфейса."""

    exit_code = EXIT_INVALID_INPUT

    def __init__(self, error: str, detail: Optional[str] = None, violations: Optional[List[str]] = None):
        super().__init__(detail or error)
        self.error = error
        self.detail = detail or error
        self.violations = list(violations or [])

    def to_response(self) -> ErrorResponse:
        """Преобразует ошибку в Pydantic модель."""
        return ErrorResponse(
            error=self.error,
            detail=self.detail,
            exit_code=self.exit_code,
            violations=self.violations,
        )


class InvalidInputError(NilformError):
    """Некорректный входной документ или аргумент."""

    exit_code = EXIT_INVALID_INPUT

    def __init__(self, detail: str):
        super().__init__("Invalid input", detail)


class UnknownGalleryEntryError(InvalidInputError):
    """Неизвестное имя в галерее."""

    def __init__(self, name: str, known: Iterable[str]):
        known = list(known)
        suggestions = difflib.get_close_matches(name, known, n=3)
        hint = f" Возможно: {', '.join(suggestions)}" if suggestions else ""
        super().__init__(f"Запись галереи '{name}' не найдена.{hint}")
        self.suggestions = suggestions


class HypothesisViolationError(NilformError):
    """Вход не удовлетворяет гипотезам команды."""

    exit_code = EXIT_HYPOTHESIS

    def __init__(self, detail: str, violations: Optional[List[str]] = None):
        super().__init__("Hypothesis violation", detail, violations)


def handle_error(exc: NilformError) -> ErrorResponse:
    """Обработчик для ошибок nilform."""
    return exc.to_response()


def handle_generic_error(exc: Exception) -> ErrorResponse:
    """Обработчик для прочих ошибок."""
    return ErrorResponse(error="Internal error", detail=str(exc), exit_code=EXIT_INVALID_INPUT)
