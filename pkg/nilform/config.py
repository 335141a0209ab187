"""
Конфигурация приложения.
"""

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Настройки nilform (переменные окружения с префиксом NILFORM_)."""

    # Основные настройки
    APP_NAME: str = "nilform"
    APP_VERSION: str = "1.0.0"

    # Лимиты размеров
    MAX_DIM: int = Field(64, ge=1, description="Максимальная размерность алгебры")
    MAX_EUCLIDEAN_N: int = Field(8, ge=1, description="Верхняя граница n для E_n")
    MAX_IRREP_L: int = Field(6, ge=0, description="Верхняя граница l для V_{2l+1}")

    # Случайные пробы
    DEFAULT_SEED: int = 0
    SPLIT_RANDOM_PROBES: int = Field(6, ge=1)

    # Генераторы нильпотентных элементов: включать попарные суммы
    JORDAN_PAIRWISE: bool = True

    # Логирование
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    class Config:
        env_prefix = "NILFORM_"
        env_file = ".env"
        case_sensitive = True
        extra = "allow"


# Создаем экземпляр настроек
settings = Settings()

# Экспортируем настройки
__all__ = ["settings", "Settings"]
