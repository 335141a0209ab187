"""
Сертификаты проверок: именованные пункты с формальным утверждением,
результатом и свидетелем нарушения.
"""

from typing import Any, List, Optional

import numpy as np
from pydantic import BaseModel, Field, computed_field

from .linalg import format_rational


class ClauseResult(BaseModel):
    """Один проверенный пункт."""
    name: str = Field(..., description="Имя пункта")
    statement: str = Field(..., description="Формальное утверждение")
    holds: Optional[bool] = Field(None, description="Результат; None - не вычислялся")
    witness: Optional[Any] = Field(None, description="Свидетель нарушения")


class Certificate(BaseModel):
    """Машинно проверяемый сертификат набора пунктов."""
    name: str
    statement: str
    applicable: bool = True
    reason: Optional[str] = Field(None, description="Почему проверка неприменима")
    clauses: List[ClauseResult] = Field(default_factory=list)

    @computed_field
    @property
    def holds(self) -> Optional[bool]:
        if not self.applicable:
            return None
        return all(c.holds is not False for c in self.clauses)

    def add(self, name: str, statement: str, holds: Optional[bool], witness: Any = None) -> "Certificate":
        self.clauses.append(
            ClauseResult(name=name, statement=statement, holds=holds, witness=witness if holds is False else None)
        )
        return self

    def failed(self) -> List[str]:
        return [c.name for c in self.clauses if c.holds is False]

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    @classmethod
    def not_applicable(cls, name: str, statement: str, reason: str) -> "Certificate":
        return cls(name=name, statement=statement, applicable=False, reason=reason)


def vector_witness(vector) -> List[str]:
    """Вектор в виде списка строк "p/q"."""
    return [format_rational(x) for x in np.asarray(vector).reshape(-1)]


def first_nonzero(matrix: np.ndarray) -> Optional[tuple]:
    """Первая ненулевая позиция матрицы (строка, столбец, значение) или None."""
    M = np.asarray(matrix)
    for index, value in np.ndenumerate(M):
        if value != 0:
            return tuple(int(i) for i in index) + (format_rational(value),)
    return None


__all__ = ["ClauseResult", "Certificate", "vector_witness", "first_nonzero"]
