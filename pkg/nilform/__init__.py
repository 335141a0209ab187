"""
nilform - точная (рациональная) лаборатория для вещественных алгебр Ли
с нильинвариантными симметричными билинейными формами.
"""

__version__ = "1.0.0"

__all__ = ["__version__"]
