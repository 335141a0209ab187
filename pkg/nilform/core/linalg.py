"""
Точная линейная алгебра над полем рациональных чисел.

Все матрицы - numpy-массивы с dtype=object, элементы которых
fractions.Fraction. Подпространства хранятся в канонической форме
(приведенный ступенчатый вид), поэтому равенство подпространств
сводится к сравнению данных.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


class LinAlgError(ValueError):
    """Базовая ошибка точной линейной алгебры."""


class DimensionError(LinAlgError):
    """Несогласованные размерности."""


class NotSymmetricError(LinAlgError):
    """Матрица Грама не симметрична."""


class RationalFormatError(LinAlgError):
    """Строка не является рациональным числом вида "p/q" или "p"."""


# ---------------------------------------------------------------------------
# Скаляры
# ---------------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """
    Разбирает строку "p/q" или "p".

    Args:
        text: Строковое представление

    Returns:
        Несократимая дробь

    Raises:
        RationalFormatError: Если строка не подходит под формат
    """
    if not isinstance(text, str):
        raise RationalFormatError(f"ожидалась строка, получено {type(text).__name__}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise RationalFormatError(f"некорректное рациональное число: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise RationalFormatError(f"нулевой знаменатель: {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value) -> str:
    """Сериализует рациональное число в строку "p/q" или "p"."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_rational(value) -> Fraction:
    """Приводит int, Fraction, строку или рациональное число sympy к Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational / sympy.Integer
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, _RationalABC) or (
        hasattr(value, "numerator") and hasattr(value, "denominator")
    ):
        return Fraction(int(value.numerator), int(value.denominator))
    raise LinAlgError(f"не рациональное значение: {value!r}")


# ---------------------------------------------------------------------------
# Матрицы
# ---------------------------------------------------------------------------

_to_fraction = np.frompyfunc(to_rational, 1, 1)


def zeros(rows: int, cols: int) -> np.ndarray:
    """Нулевая матрица rows×cols."""
    return np.full((rows, cols), ZERO, dtype=object)


def zero_vector(n: int) -> np.ndarray:
    return np.full(n, ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    """Единичная матрица n×n."""
    result = zeros(n, n)
    for i in range(n):
        result[i, i] = ONE
    return result


def as_matrix(data, cols: Optional[int] = None) -> np.ndarray:
    """
    Строит точную матрицу из вложенных последовательностей.

    Args:
        data: Строки матрицы (числа, дроби или строки "p/q")
        cols: Число столбцов; нужно только для пустой матрицы

    Returns:
        Двумерный object-массив дробей
    """
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        width = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
        return zeros(0, width)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise DimensionError(f"ожидалась матрица, получен массив формы {arr.shape}")
    return np.array(_to_fraction(arr), dtype=object)


def as_vector(data) -> np.ndarray:
    """Точный вектор из последовательности."""
    arr = np.array(data, dtype=object).reshape(-1)
    if arr.size == 0:
        return zero_vector(0)
    return np.array(_to_fraction(arr), dtype=object)


def is_zero(matrix: np.ndarray) -> bool:
    """Проверяет, что все элементы равны нулю."""
    return not any(np.asarray(matrix).flat)


def matrix_to_strings(matrix: np.ndarray) -> List[List[str]]:
    """Матрица в виде списка строк рациональных чисел (для JSON)."""
    return [[format_rational(x) for x in row] for row in np.asarray(matrix)]


def vector_to_strings(vector: np.ndarray) -> List[str]:
    return [format_rational(x) for x in np.asarray(vector).reshape(-1)]


# ---------------------------------------------------------------------------
# Мост к sympy DomainMatrix
# ---------------------------------------------------------------------------

# Порог объема работы, выше которого произведения и исключение
# выполняются в DomainMatrix над QQ
DOMAIN_MATRIX_THRESHOLD = 512


def to_qq(value):
    value = to_rational(value)
    return QQ(value.numerator, value.denominator)


def to_domain_matrix(matrix: np.ndarray) -> DomainMatrix:
    """Разреженная DomainMatrix над QQ из object-массива дробей."""
    M = np.asarray(matrix, dtype=object)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    rows, cols = M.shape
    dod: dict = {}
    for (i, j), value in np.ndenumerate(M):
        if value != 0:
            dod.setdefault(int(i), {})[int(j)] = to_qq(value)
    return DomainMatrix.from_dod(dod, (rows, cols), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> np.ndarray:
    """Обратное преобразование: object-массив дробей той же формы."""
    rows, cols = matrix.shape
    result = zeros(rows, cols)
    for i, row in matrix.to_dod().items():
        for j, value in row.items():
            result[i, j] = Fraction(int(value.numerator), int(value.denominator))
    return result


def mat_mul(*matrices: np.ndarray) -> np.ndarray:
    """
    Точное произведение цепочки матриц.

    Крупные произведения считаются в DomainMatrix, мелкие - в numpy.
    """
    mats = [np.asarray(m, dtype=object) for m in matrices]
    rows, cols = mats[0].shape[0], mats[-1].shape[1]
    if any(0 in m.shape for m in mats):
        return zeros(rows, cols)
    work = sum(a.shape[0] * a.shape[1] * b.shape[1] for a, b in zip(mats, mats[1:]))
    if work <= DOMAIN_MATRIX_THRESHOLD:
        result = mats[0]
        for m in mats[1:]:
            result = result @ m
        return np.array(result, dtype=object)
    product = to_domain_matrix(mats[0])
    for m in mats[1:]:
        product = product * to_domain_matrix(m)
    return from_domain_matrix(product)


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """
    Приведенный ступенчатый вид.

    Args:
        matrix: Исходная матрица (не изменяется)

    Returns:
        (R, pivots): матрица той же формы и список ведущих столбцов
    """
    M = np.asarray(matrix, dtype=object)
    n_rows, n_cols = M.shape
    if n_rows * n_cols * min(n_rows, n_cols) <= DOMAIN_MATRIX_THRESHOLD:
        return _rref_small(M)
    R, pivots = to_domain_matrix(M).rref()
    return from_domain_matrix(R), [int(p) for p in pivots]


def _rref_small(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Гаусс-Жордан на дробях для маленьких матриц."""
    R = np.array(matrix, dtype=object, copy=True)
    n_rows, n_cols = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if R[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = R[r] * (ONE / R[r, c])
        for i in range(n_rows):
            if i != r and R[i, c] != 0:
                R[i] = R[i] - R[i, c] * R[r]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix, dtype=object)
    if matrix.size == 0:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: np.ndarray, cols: Optional[int] = None) -> np.ndarray:
    """
    Базис ядра x ↦ Mx, по одному вектору в строке.

    Args:
        matrix: Матрица m×n
        cols: Число столбцов, если матрица пустая

    Returns:
        Матрица k×n, строки которой образуют базис ядра
    """
    M = np.asarray(matrix, dtype=object)
    n = M.shape[1] if M.ndim == 2 else (cols or 0)
    if M.ndim != 2 or M.shape[0] == 0:
        return identity(n)
    R, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = zeros(len(free), n)
    for t, f in enumerate(free):
        basis[t, f] = ONE
        for i, p in enumerate(pivots):
            if R[i, f] != 0:
                basis[t, p] = -R[i, f]
    return basis


def domain_nullspace(matrix: DomainMatrix) -> DomainMatrix:
    """То же, что nullspace, но целиком в DomainMatrix над QQ."""
    n = matrix.shape[1]
    R, pivots = matrix.rref()
    rows = R.to_dod()
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    dod: dict = {}
    for t, f in enumerate(free):
        dod[t] = {f: QQ(1)}
        for i, p in enumerate(pivots):
            value = rows.get(i, {}).get(f)
            if value:
                dod[t][int(p)] = -value
    return DomainMatrix.from_dod(dod, (len(free), n), QQ)


def inverse(matrix: np.ndarray) -> np.ndarray:
    """
    Обратная матрица.

    Raises:
        LinAlgError: Если матрица вырождена
    """
    M = np.asarray(matrix, dtype=object)
    n_rows, n_cols = M.shape
    if n_rows != n_cols:
        raise DimensionError(f"обращение неквадратной матрицы {M.shape}")
    augmented = np.concatenate([M, identity(n_rows)], axis=1)
    R, pivots = rref(augmented)
    if pivots[:n_rows] != list(range(n_rows)):
        raise LinAlgError("матрица вырождена")
    return R[:, n_rows:]


def matrix_power_is_zero(matrix: np.ndarray, power: Optional[int] = None) -> bool:
    """Проверяет M^power = 0 (по умолчанию power = размер матрицы)."""
    M = np.asarray(matrix, dtype=object)
    n = M.shape[0]
    if n == 0:
        return True
    power = n if power is None else power
    D = to_domain_matrix(M)
    acc = D
    for _ in range(power - 1):
        if acc.is_zero_matrix:
            return True
        acc = acc * D
    return acc.is_zero_matrix


@dataclass(frozen=True)
class AffineSolution:
    """Множество решений Ax = b: частное решение плюс ядро."""

    particular: np.ndarray
    kernel: "Subspace"

    def contains(self, x: np.ndarray) -> bool:
        return self.kernel.contains_vector(as_vector(x) - self.particular)


def solve_linear(A: np.ndarray, b: Sequence) -> Optional[AffineSolution]:
    """
    Решает систему Ax = b точно.

    Args:
        A: Матрица m×n
        b: Правая часть длины m

    Returns:
        AffineSolution или None, если система несовместна

    Raises:
        DimensionError: Если число строк A не совпадает с длиной b
    """
    A = np.asarray(A, dtype=object)
    b = as_vector(b)
    if A.ndim != 2 or A.shape[0] != b.shape[0]:
        raise DimensionError(f"матрица {A.shape} и правая часть длины {b.shape[0]}")
    n = A.shape[1]
    if A.shape[0] == 0:
        return AffineSolution(zero_vector(n), Subspace.whole(n))
    R, pivots = rref(np.concatenate([A, b.reshape(-1, 1)], axis=1))
    if pivots and pivots[-1] == n:
        return None
    particular = zero_vector(n)
    for i, p in enumerate(pivots):
        particular[p] = R[i, n]
    return AffineSolution(particular, Subspace.kernel(A))


# ---------------------------------------------------------------------------
# Подпространства
# ---------------------------------------------------------------------------

class Subspace:
    """
    Подпространство Q^n, заданное каноническим базисом (RREF, строки).

    Экземпляры неизменяемы; два равных подпространства имеют
    одинаковые матрицы базиса.
    """

    __slots__ = ("_ambient_dim", "_basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: np.ndarray, pivots: Sequence[int]):
        self._ambient_dim = int(ambient_dim)
        basis = np.array(basis, dtype=object).reshape(-1, ambient_dim)
        basis.flags.writeable = False
        self._basis = basis
        self._pivots = tuple(pivots)

    # -- конструкторы -------------------------------------------------------

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        """Линейная оболочка набора векторов."""
        M = np.array(vectors, dtype=object)
        if M.size == 0:
            return cls.zero(ambient_dim)
        M = M.reshape(-1, ambient_dim)
        R, pivots = rref(M)
        return cls(ambient_dim, R[: len(pivots)], pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, zeros(0, ambient_dim), ())

    @classmethod
    def whole(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim), range(ambient_dim))

    @classmethod
    def kernel(cls, matrix: np.ndarray) -> "Subspace":
        """Ядро отображения x ↦ Mx."""
        M = np.asarray(matrix, dtype=object)
        return cls.span(nullspace(M), M.shape[1])

    @classmethod
    def image(cls, matrix: np.ndarray) -> "Subspace":
        """Образ отображения x ↦ Mx (пространство столбцов)."""
        M = np.asarray(matrix, dtype=object)
        return cls.span(M.T, M.shape[0])

    # -- свойства -----------------------------------------------------------

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def basis(self) -> np.ndarray:
        return self._basis

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_whole(self) -> bool:
        return self.dim == self._ambient_dim

    # -- операции решетки ---------------------------------------------------

    def _check(self, other: "Subspace") -> None:
        if self._ambient_dim != other._ambient_dim:
            raise DimensionError(
                f"подпространства разных пространств: {self._ambient_dim} и {other._ambient_dim}"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace.span(np.concatenate([self._basis, other._basis]), self._ambient_dim)

    def sum(self, other: "Subspace") -> "Subspace":
        return self + other

    def annihilator(self) -> "Subspace":
        """Векторы y с <b, y> = 0 для всех базисных b (стандартное скалярное произведение)."""
        if self.dim == 0:
            return Subspace.whole(self._ambient_dim)
        return Subspace.kernel(self._basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Пересечение через аннуляторы: U∩W = (ann U + ann W)^0."""
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self._ambient_dim)
        constraints = np.concatenate(
            [self.annihilator().basis, other.annihilator().basis]
        )
        if constraints.shape[0] == 0:
            return Subspace.whole(self._ambient_dim)
        return Subspace.kernel(constraints)

    def contains_vector(self, vector) -> bool:
        v = np.asarray(vector, dtype=object).reshape(-1)
        if v.shape[0] != self._ambient_dim:
            raise DimensionError(f"вектор длины {v.shape[0]} в пространстве {self._ambient_dim}")
        if self.dim == 0:
            return is_zero(v)
        coords = v[list(self._pivots)]
        return is_zero(v - coords @ self._basis)

    def contains(self, other: "Subspace") -> bool:
        """True, если other ⊆ self."""
        self._check(other)
        if other.dim == 0:
            return True
        if other.dim > self.dim:
            return False
        if self.dim == 0:
            return False
        coords = np.array(other._basis[:, list(self._pivots)], dtype=object)
        return is_zero(other._basis - mat_mul(coords, self._basis))

    def coordinates(self, vector) -> np.ndarray:
        """
        Координаты вектора в каноническом базисе.

        Raises:
            LinAlgError: Если вектор не лежит в подпространстве
        """
        if not self.contains_vector(vector):
            raise LinAlgError("вектор не лежит в подпространстве")
        v = np.asarray(vector, dtype=object).reshape(-1)
        return np.array(v[list(self._pivots)], dtype=object)

    def complement(self, within: Optional["Subspace"] = None) -> "Subspace":
        """
        Каноническое дополнение self внутри within (по умолчанию - всего пространства).

        Дополнение составляется из базисных векторов within, жадно,
        в порядке канонического базиса.
        """
        within = within if within is not None else Subspace.whole(self._ambient_dim)
        self._check(within)
        if not within.contains(self):
            raise LinAlgError("дополнение: подпространство не содержится в объемлющем")
        current = self
        chosen = []
        for row in within.basis:
            if current.dim == within.dim:
                break
            if not current.contains_vector(row):
                chosen.append(row)
                current = current + Subspace.span([row], self._ambient_dim)
        return Subspace.span(chosen, self._ambient_dim)

    def apply(self, matrix: np.ndarray) -> "Subspace":
        """Образ подпространства под линейным отображением x ↦ Mx."""
        M = np.asarray(matrix, dtype=object)
        if self.dim == 0:
            return Subspace.zero(M.shape[0])
        return Subspace.span(mat_mul(self._basis, M.T), M.shape[0])

    # -- сравнение ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self._ambient_dim == other._ambient_dim
            and self._pivots == other._pivots
            and all(a == b for a, b in zip(self._basis.flat, other._basis.flat))
        )

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._pivots, tuple(self._basis.flat)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self._ambient_dim})"

    def to_strings(self) -> List[List[str]]:
        return matrix_to_strings(self._basis)


def span_of(vectors: Iterable, ambient_dim: int) -> Subspace:
    """Алиас для Subspace.span с произвольным итерируемым набором векторов."""
    vectors = list(vectors)
    return Subspace.span(vectors, ambient_dim) if vectors else Subspace.zero(ambient_dim)


# ---------------------------------------------------------------------------
# Симметричные формы
# ---------------------------------------------------------------------------

def is_symmetric(matrix: np.ndarray) -> bool:
    M = np.asarray(matrix, dtype=object)
    return M.ndim == 2 and M.shape[0] == M.shape[1] and is_zero(M - M.T)


def signature(gram: np.ndarray) -> Tuple[int, int, int]:
    """
    Сигнатура Сильвестра (n_plus, n_minus, n_zero).

    Диагонализация конгруэнциями с выбором ведущего элемента: сначала
    ненулевой диагональный элемент, иначе замена x_k ← x_k + x_j.

    Raises:
        NotSymmetricError: Если матрица не симметрична
    """
    A = as_matrix(gram)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetricError(f"матрица Грама должна быть квадратной, форма {A.shape}")
    if not is_symmetric(A):
        raise NotSymmetricError("матрица Грама не симметрична")
    n = A.shape[0]
    plus = minus = 0
    for k in range(n):
        if A[k, k] == 0:
            j = next((j for j in range(k + 1, n) if A[j, j] != 0), None)
            if j is not None:
                A[[k, j]] = A[[j, k]]
                A[:, [k, j]] = A[:, [j, k]]
            else:
                j = next((j for j in range(k + 1, n) if A[k, j] != 0), None)
                if j is None:
                    continue
                A[k, :] = A[k, :] + A[j, :]
                A[:, k] = A[:, k] + A[:, j]
        pivot = A[k, k]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        for i in range(k + 1, n):
            if A[i, k] != 0:
                f = A[i, k] / pivot
                A[i, :] = A[i, :] - f * A[k, :]
                A[:, i] = A[:, i] - f * A[:, k]
    return plus, minus, n - plus - minus


class SymBilinearForm:
    """Симметричная билинейная форма, заданная матрицей Грама в базисе алгебры."""

    __slots__ = ("_gram",)

    def __init__(self, gram):
        G = as_matrix(gram)
        if G.ndim != 2 or G.shape[0] != G.shape[1]:
            raise DimensionError(f"матрица Грама должна быть квадратной, форма {G.shape}")
        if not is_symmetric(G):
            raise NotSymmetricError("матрица Грама не симметрична")
        G.flags.writeable = False
        self._gram = G

    @classmethod
    def zero(cls, dim: int) -> "SymBilinearForm":
        return cls(zeros(dim, dim))

    @property
    def gram(self) -> np.ndarray:
        return self._gram

    @property
    def dim(self) -> int:
        return self._gram.shape[0]

    def pair(self, x, y):
        return np.asarray(x, dtype=object) @ self._gram @ np.asarray(y, dtype=object)

    def pairing_matrix(self, left: Subspace, right: Subspace) -> np.ndarray:
        """Матрица <u_a, w_b> по базисам двух подпространств."""
        if left.dim == 0 or right.dim == 0:
            return zeros(left.dim, right.dim)
        return mat_mul(left.basis, self._gram, right.basis.T)

    def is_orthogonal(self, left: Subspace, right: Subspace) -> bool:
        return is_zero(self.pairing_matrix(left, right))

    def restrict(self, space: Subspace) -> "SymBilinearForm":
        """Ограничение на подпространство в его каноническом базисе."""
        return SymBilinearForm(self.pairing_matrix(space, space))

    def kernel(self) -> Subspace:
        return Subspace.kernel(self._gram)

    def orthogonal(self, space: Subspace) -> Subspace:
        """Ортогонал подпространства: {x : <x, space> = 0}."""
        if space.dim == 0:
            return Subspace.whole(self.dim)
        return Subspace.kernel(mat_mul(space.basis, self._gram))

    def signature(self) -> Tuple[int, int, int]:
        return signature(self._gram)

    def is_nondegenerate(self) -> bool:
        return self.dim == 0 or rank(self._gram) == self.dim

    def congruent(self, change: np.ndarray) -> "SymBilinearForm":
        """Форма в новом базисе: столбцы change - новые базисные векторы."""
        P = np.asarray(change, dtype=object)
        return SymBilinearForm(mat_mul(P.T, self._gram, P))

    def __add__(self, other: "SymBilinearForm") -> "SymBilinearForm":
        return SymBilinearForm(self._gram + other._gram)

    def scaled(self, factor) -> "SymBilinearForm":
        return SymBilinearForm(self._gram * to_rational(factor))

    def to_strings(self) -> List[List[str]]:
        return matrix_to_strings(self._gram)


def block_diagonal(*blocks: np.ndarray) -> np.ndarray:
    """Блочно-диагональная матрица из квадратных блоков."""
    n = sum(np.asarray(b).shape[0] for b in blocks)
    result = zeros(n, n)
    offset = 0
    for block in blocks:
        block = np.asarray(block, dtype=object)
        k = block.shape[0]
        if k:
            result[offset:offset + k, offset:offset + k] = block
        offset += k
    return result
