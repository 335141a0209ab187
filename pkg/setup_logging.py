#!/usr/bin/env python3
"""
Настройка логирования nilform (stderr, чтобы JSON в stdout оставался чистым).
"""

import logging
import sys
from typing import Union


def setup_logging(level: Union[int, str] = logging.WARNING) -> logging.Logger:
    """Настраивает корневой логгер: один обработчик stderr с форматом из настроек."""
    from nilform.config import settings

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Удаляем существующие обработчики
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(settings.LOG_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
    root_logger.addHandler(handler)
    return logging.getLogger(__name__)
