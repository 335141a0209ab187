"""
Чтение, проверка и экспорт документов AlgebraDocument.
"""

import hashlib
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional

import numpy as np
from pydantic import ValidationError

from ..config import settings
from ..core.gallery import GalleryEntry, get_entry, list_entries
from ..core.lie import LieAlgebra, LieValidationError
from ..core.linalg import (
    NotSymmetricError,
    RationalFormatError,
    Subspace,
    SymBilinearForm,
    format_rational,
    matrix_to_strings,
    parse_rational,
    zeros,
)
from .errors import InvalidInputError, UnknownGalleryEntryError
from .schemas import AlgebraDocument, Annotations

logger = logging.getLogger(__name__)

GALLERY_SCHEME = "gallery://"


@dataclass
class ParsedDocument:
    """Проверенный документ: алгебра, форма, разметки и дайджест."""

    document: AlgebraDocument
    algebra: LieAlgebra
    form: Optional[SymBilinearForm]
    annotations: Dict[str, Subspace] = field(default_factory=dict)
    digest: str = ""


def document_digest(document: AlgebraDocument) -> str:
    """SHA-256 канонического JSON документа."""
    canonical = json.dumps(document.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _rational(value, where: str):
    try:
        return parse_rational(str(value))
    except RationalFormatError as e:
        raise InvalidInputError(f"{where}: {e}")


def _rows(rows, dim: int, where: str) -> np.ndarray:
    M = zeros(len(rows), dim)
    for a, row in enumerate(rows):
        if len(row) != dim:
            raise InvalidInputError(f"{where}[{a}]: ожидалось {dim} элементов, получено {len(row)}")
        for b, value in enumerate(row):
            M[a, b] = _rational(value, f"{where}[{a}][{b}]")
    return M


def parse_document(document: AlgebraDocument) -> ParsedDocument:
    """
    Строит алгебру и форму из документа с проверкой.

    Raises:
        InvalidInputError: Некорректные индексы, числа, форма или тождество Якоби
    """
    n = document.dim
    if n > settings.MAX_DIM:
        raise InvalidInputError(f"dim = {n} превышает NILFORM_MAX_DIM = {settings.MAX_DIM}")
    if document.labels is not None and len(document.labels) != n:
        raise InvalidInputError(f"labels: ожидалось {n} имен, получено {len(document.labels)}")

    brackets = {}
    for p, entry in enumerate(document.brackets):
        if entry.j >= n:
            raise InvalidInputError(f"brackets[{p}]: индекс {entry.j} вне диапазона 0..{n - 1}")
        if (entry.i, entry.j) in brackets:
            raise InvalidInputError(f"brackets[{p}]: повторная скобка ({entry.i}, {entry.j})")
        coeffs = {}
        for key, value in entry.coeffs.items():
            try:
                k = int(key)
            except ValueError:
                raise InvalidInputError(f"brackets[{p}].coeffs: индекс '{key}' не является целым")
            if not 0 <= k < n:
                raise InvalidInputError(f"brackets[{p}].coeffs: индекс {k} вне диапазона 0..{n - 1}")
            coeffs[k] = _rational(value, f"brackets[{p}].coeffs[{key}]")
        brackets[(entry.i, entry.j)] = coeffs

    algebra = LieAlgebra.from_brackets(n, brackets, labels=document.labels, name=document.name)
    report = algebra.validate()
    if not report.ok:
        raise InvalidInputError(f"структурные константы: {report.describe()}")

    form = None
    if document.form is not None:
        if len(document.form) != n:
            raise InvalidInputError(f"form: ожидалось {n} строк, получено {len(document.form)}")
        try:
            form = SymBilinearForm(_rows(document.form, n, "form"))
        except NotSymmetricError as e:
            raise InvalidInputError(f"form: {e}")

    annotations = {}
    for key, rows in document.annotations.model_dump().items():
        if rows is not None:
            annotations[key] = Subspace.span(_rows(rows, n, f"annotations.{key}"), n)

    parsed = ParsedDocument(document, algebra, form, annotations, document_digest(document))
    logger.debug("Документ %s: dim %d, дайджест %s", document.name, n, parsed.digest[:12])
    return parsed


def algebra_to_document(
    algebra: LieAlgebra,
    form: Optional[SymBilinearForm] = None,
    annotations: Optional[Dict[str, Subspace]] = None,
    name: str = "",
) -> AlgebraDocument:
    """Экспорт алгебры в документ (скобки i < j, ненулевые коэффициенты)."""
    C = algebra.constants
    brackets = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            coeffs = {str(k): format_rational(c) for k, c in enumerate(C[i, j]) if c != 0}
            if coeffs:
                brackets.append({"i": i, "j": j, "coeffs": coeffs})
    notes = {
        key: matrix_to_strings(space.basis)
        for key, space in (annotations or {}).items()
        if key in Annotations.model_fields
    }
    return AlgebraDocument(
        name=name or algebra.name,
        dim=algebra.dim,
        labels=list(algebra.labels),
        brackets=brackets,
        form=form.to_strings() if form is not None else None,
        annotations=Annotations(**notes),
    )


def entry_to_document(entry: GalleryEntry) -> AlgebraDocument:
    return algebra_to_document(entry.algebra, entry.form, entry.annotations, entry.name)


def gallery_entry(name: str) -> GalleryEntry:
    """
    Raises:
        UnknownGalleryEntryError: Если имя неизвестно
    """
    try:
        return get_entry(name)
    except KeyError:
        raise UnknownGalleryEntryError(name, list_entries())


def read_document(source: str) -> AlgebraDocument:
    """
    Читает документ из файла, stdin ('-') или галереи (gallery://NAME).

    Raises:
        InvalidInputError: Нет файла, некорректный JSON или схема
    """
    if source.startswith(GALLERY_SCHEME):
        return entry_to_document(gallery_entry(source[len(GALLERY_SCHEME):]))
    if source == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        if not path.is_file():
            raise InvalidInputError(f"Файл '{source}' не найден")
        text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"JSON: {e.msg} (строка {e.lineno}, столбец {e.colno})")
    try:
        return AlgebraDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise InvalidInputError(f"{location}: {first['msg']}")


def load(source: str) -> ParsedDocument:
    """Чтение и проверка документа."""
    try:
        return parse_document(read_document(source))
    except LieValidationError as e:
        raise InvalidInputError(str(e))


__all__ = [
    "GALLERY_SCHEME",
    "ParsedDocument",
    "document_digest",
    "parse_document",
    "algebra_to_document",
    "entry_to_document",
    "gallery_entry",
    "read_document",
    "load",
]
