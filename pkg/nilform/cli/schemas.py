"""
Pydantic схемы документов и отчетов.
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator

Rational = Union[str, int]
MatrixRows = List[List[Rational]]


class BracketEntry(BaseModel):
    """Скобка [e_i, e_j] = Σ_k coeffs[k] e_k, i < j."""
    i: int = Field(..., ge=0, description="Индекс первого базисного вектора")
    j: int = Field(..., ge=0, description="Индекс второго базисного вектора")
    coeffs: Dict[str, Rational] = Field(default_factory=dict, description="{k: 'p/q'}")

    @field_validator("j")
    @classmethod
    def validate_order(cls, v, info):
        i = info.data.get("i")
        if i is not None and v <= i:
            raise ValueError("ожидается i < j")
        return v


class Annotations(BaseModel):
    """Необязательные разметки документа (подпространства как списки векторов)."""
    center_part: Optional[MatrixRows] = Field(None, description="Выделенная часть A радикала")
    stabilizer: Optional[MatrixRows] = Field(None, description="Подалгебра h для аудита")
    cotangent_s1: Optional[MatrixRows] = Field(None, description="S1 для проверки кокасательной структуры")
    cotangent_b: Optional[MatrixRows] = Field(None, description="B для проверки кокасательной структуры")


class AlgebraDocument(BaseModel):
    """Алгебра Ли с необязательной формой."""
    name: str = Field("", description="Имя алгебры")
    dim: int = Field(..., ge=0, description="Размерность")
    labels: Optional[List[str]] = Field(None, description="Имена базисных векторов")
    brackets: List[BracketEntry] = Field(default_factory=list, description="Ненулевые скобки")
    form: Optional[MatrixRows] = Field(None, description="Матрица Грама dim×dim")
    annotations: Annotations = Field(default_factory=Annotations)

    class Config:
        json_schema_extra = {
            "example": {
                "name": "sl2",
                "dim": 3,
                "labels": ["e", "h", "f"],
                "brackets": [
                    {"i": 0, "j": 1, "coeffs": {"0": "-2"}},
                    {"i": 0, "j": 2, "coeffs": {"1": "1"}},
                    {"i": 1, "j": 2, "coeffs": {"2": "-2"}},
                ],
                "form": [["0", "0", "4"], ["0", "8", "0"], ["4", "0", "0"]],
            }
        }


class Report(BaseModel):
    """Отчет команды."""
    command: str = Field(..., description="Команда с аргументами")
    input_digest: Optional[str] = Field(None, description="SHA-256 канонического JSON документа")
    results: Dict[str, Any] = Field(default_factory=dict, description="Результаты")
    verdicts: Dict[str, Any] = Field(default_factory=dict, description="Вердикты")
    summary: str = Field("", description="Краткое описание для человека")
    counterexample: bool = Field(False, description="Найден контрпример к доказанному утверждению")


class GalleryListing(BaseModel):
    """Одна строка `gallery list`."""
    name: str
    description: str
    dim: int
    has_form: bool


class ErrorResponse(BaseModel):
    """Схема для ошибок."""
    error: str = Field(..., description="Текст ошибки")
    detail: Optional[str] = Field(None, description="Детали ошибки")
    exit_code: int = Field(..., description="Код выхода")
    violations: List[str] = Field(default_factory=list, description="Нарушенные гипотезы")

    class Config:
        json_schema_extra = {
            "example": {
                "error": "Hypothesis violation",
                "detail": "kernel-contains-ideal",
                "exit_code": 2,
                "violations": ["kernel-contains-ideal"],
            }
        }
