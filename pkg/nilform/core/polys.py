"""
Многочлены над Q и разложение Жордана-Шевалле.

Характеристические многочлены и разложение на множители считаются
через sympy (QQ, DomainMatrix, Poly). Итерация Ньютона идет в Q[x]/(p),
значения многочленов от матриц считаются в DomainMatrix; наружу
возвращаются object-массивы дробей из linalg.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import sympy
from sympy import Poly, QQ
from sympy.polys.matrices import DomainMatrix

from .linalg import (
    DimensionError,
    LinAlgError,
    from_domain_matrix,
    is_zero,
    matrix_power_is_zero,
    solve_linear,
    to_domain_matrix,
    to_qq,
    zeros,
)

logger = logging.getLogger(__name__)

X = sympy.Symbol("x")


class ZeroPolynomialError(LinAlgError):
    """Операция не определена для нулевого многочлена."""


def _square(matrix: np.ndarray, what: str) -> np.ndarray:
    M = np.asarray(matrix, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"{what} неквадратной матрицы {M.shape}")
    return M


def _charpoly_dm(D: DomainMatrix) -> Poly:
    if D.shape[0] == 0:
        return Poly(1, X, domain=QQ)
    return Poly.from_list([QQ.to_sympy(c) for c in D.charpoly()], X, domain=QQ)


def charpoly(matrix: np.ndarray) -> Poly:
    """
    Характеристический многочлен det(xI - M) над QQ.

    Raises:
        DimensionError: Если матрица не квадратная
    """
    M = _square(matrix, "характеристический многочлен")
    return _charpoly_dm(to_domain_matrix(M))


def squarefree_part(p: Poly) -> Poly:
    """
    Бесквадратная часть p / gcd(p, p') (приведенная).

    Raises:
        ZeroPolynomialError: Для нулевого многочлена
    """
    p = Poly(p, X, domain=QQ) if not isinstance(p, Poly) else p.set_domain(QQ)
    if p.is_zero:
        raise ZeroPolynomialError("бесквадратная часть нулевого многочлена")
    if p.degree() <= 0:
        return Poly(1, p.gen, domain=QQ)
    return p.sqf_part().monic()


def factor_charpoly(matrix: np.ndarray) -> List[Tuple[Poly, int]]:
    """
    Неприводимые множители характеристического многочлена над Q.

    Returns:
        Список (приведенный неприводимый множитель, кратность),
        произведение с учетом кратностей равно charpoly(M)
    """
    p = charpoly(matrix)
    if p.degree() <= 0:
        return []
    _, factors = p.factor_list()
    return [(f.monic(), int(m)) for f, m in factors]


def _evaluate_dm(p: Poly, D: DomainMatrix) -> DomainMatrix:
    """
    Значение многочлена от матрицы по схеме Патерсона-Стокмейера.

    Степени D^0..D^k (k ≈ √deg) считаются один раз, затем Горнер по D^k.
    """
    D = D.to_dense()
    n = D.shape[0]
    coeffs = [to_qq(c) for c in reversed(p.all_coeffs())]
    eye = DomainMatrix.eye(n, QQ).to_dense()
    if not coeffs or all(c == 0 for c in coeffs):
        return DomainMatrix.zeros((n, n), QQ).to_dense()
    k = max(1, math.isqrt(len(coeffs)))
    powers = [eye, D]
    while len(powers) <= k:
        powers.append(powers[-1] * D)
    step = powers[k]
    result = DomainMatrix.zeros((n, n), QQ).to_dense()
    for start in reversed(range(0, len(coeffs), k)):
        block = DomainMatrix.zeros((n, n), QQ).to_dense()
        for offset, c in enumerate(coeffs[start:start + k]):
            if c != 0:
                block = block + powers[offset] * c
        result = result * step + block
    return result


def evaluate_at(p: Poly, matrix: np.ndarray) -> np.ndarray:
    """Значение многочлена от матрицы."""
    M = _square(matrix, "значение многочлена от")
    if M.shape[0] == 0:
        return zeros(0, 0)
    return from_domain_matrix(_evaluate_dm(p, to_domain_matrix(M)))


@dataclass(frozen=True)
class JordanParts:
    """Аддитивное разложение Жордана-Шевалле M = S + N."""

    semisimple: np.ndarray
    nilpotent: np.ndarray

    def is_consistent(self, matrix: np.ndarray) -> bool:
        S, N = self.semisimple, self.nilpotent
        return (
            is_zero(S + N - np.asarray(matrix, dtype=object))
            and is_zero(S @ N - N @ S)
            and matrix_power_is_zero(N)
        )


def _semisimple_polynomial(p: Poly, q: Poly) -> Poly:
    """
    Многочлен s с S = s(M): итерация Ньютона s ← s - q(s)/q'(s)
    в кольце Q[x]/(p).
    """
    dq = q.diff(X)
    s = Poly(X, X, domain=QQ)
    for _ in range(p.degree() + 1):
        residual = q.compose(s).rem(p)
        if residual.is_zero:
            return s
        s = (s - residual * dq.compose(s).invert(p)).rem(p)
    raise LinAlgError("итерация Ньютона не сошлась")


def jordan_chevalley(matrix: np.ndarray) -> JordanParts:
    """
    Разложение Жордана-Шевалле над Q без вычисления собственных значений.

    q - бесквадратная часть характеристического многочлена p;
    полупростая часть S = s(M), где s получается итерацией Ньютона
    по модулю p, N = M - S. Итерация идет в кольце многочленов,
    от матрицы многочлен вычисляется один раз.

    Args:
        matrix: Квадратная рациональная матрица

    Returns:
        JordanParts
    """
    M = _square(matrix, "разложение Жордана")
    n = M.shape[0]
    if n == 0 or is_zero(M):
        return JordanParts(M.copy(), zeros(n, n))
    D = to_domain_matrix(M).to_dense()
    p = _charpoly_dm(D)
    q = squarefree_part(p)
    if q.degree() == p.degree():
        # различные собственные значения: M диагонализуема над C
        return JordanParts(M.copy(), zeros(n, n))
    if q.degree() == 1 and q.coeff_monomial(1) == 0:
        # q = x: M нильпотентна
        return JordanParts(zeros(n, n), M.copy())
    s = _semisimple_polynomial(p, q)
    if s == Poly(X, X, domain=QQ):
        return JordanParts(M.copy(), zeros(n, n))
    S = _evaluate_dm(s, D)
    logger.debug("Жордан-Шевалле: n=%d, deg q=%d, deg s=%d", n, q.degree(), s.degree())
    semisimple = from_domain_matrix(S)
    return JordanParts(semisimple, M - semisimple)


def is_polynomial_in(target: np.ndarray, matrix: np.ndarray) -> bool:
    """
    Проверяет, что target лежит в коммутативной алгебре, порожденной matrix
    (т.е. target = c_0 I + c_1 M + ... + c_{n-1} M^{n-1}).
    """
    M = _square(matrix, "степени")
    T = np.asarray(target, dtype=object)
    n = M.shape[0]
    if n == 0:
        return True
    D = to_domain_matrix(M).to_dense()
    power = DomainMatrix.eye(n, QQ).to_dense()
    columns = []
    for _ in range(n):
        columns.append(from_domain_matrix(power).reshape(-1))
        power = power * D
    A = np.array(columns, dtype=object).T
    return solve_linear(A, T.reshape(-1)) is not None


def is_nilpotent(matrix: np.ndarray) -> bool:
    return matrix_power_is_zero(matrix)


def is_semisimple(matrix: np.ndarray) -> bool:
    """Минимальный многочлен бесквадратен."""
    M = _square(matrix, "проверка полупростоты")
    if M.shape[0] == 0:
        return True
    D = to_domain_matrix(M).to_dense()
    return _evaluate_dm(squarefree_part(_charpoly_dm(D)), D).is_zero_matrix


def primary_component(p: Poly, multiplicity: int, matrix: np.ndarray) -> np.ndarray:
    """Матрица f(M)^m, ядро которой - примарная компонента множителя f."""
    M = _square(matrix, "примарная компонента")
    F = _evaluate_dm(p, to_domain_matrix(M).to_dense())
    result = F
    for _ in range(multiplicity - 1):
        result = result * F
    return from_domain_matrix(result)


__all__ = [
    "X",
    "ZeroPolynomialError",
    "JordanParts",
    "charpoly",
    "squarefree_part",
    "factor_charpoly",
    "evaluate_at",
    "jordan_chevalley",
    "is_polynomial_in",
    "is_nilpotent",
    "is_semisimple",
    "primary_component",
]
