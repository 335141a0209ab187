"""
Пакет core - точная линейная алгебра, алгебры Ли и анализ нильинвариантных форм.
"""

from .linalg import Subspace, SymBilinearForm, parse_rational, format_rational
from .lie import LieAlgebra, LeviDecomposition, levi_subalgebra, radical
from .metric import analyze, is_invariant, is_nil_invariant, nil_invariant_form_space, structure_certificates
from .decompose import abelian_radical_decompose, euclidean_type_analyze, stabilizer_audit
from .gallery import get_entry, list_entries, random_instance

__all__ = [
    # Основные классы
    'Subspace',
    'SymBilinearForm',
    'LieAlgebra',
    'LeviDecomposition',

    # Функции
    'parse_rational',
    'format_rational',
    'levi_subalgebra',
    'radical',
    'analyze',
    'is_invariant',
    'is_nil_invariant',
    'nil_invariant_form_space',
    'structure_certificates',
    'abelian_radical_decompose',
    'euclidean_type_analyze',
    'stabilizer_audit',
    'get_entry',
    'list_entries',
    'random_instance',
]
