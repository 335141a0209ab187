"""
Алгебры Ли, заданные структурными константами, и структурный инструментарий:
ряды, центр, форма Киллинга, радикал, подалгебра Леви, разложение
на простые идеалы, инварианты, наибольший идеал внутри подпространства.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..config import settings
from .linalg import (
    LinAlgError,
    ONE,
    ZERO,
    Subspace,
    SymBilinearForm,
    as_matrix,
    as_vector,
    format_rational,
    from_domain_matrix,
    inverse,
    is_zero,
    mat_mul,
    rank,
    rref,
    signature,
    solve_linear,
    to_domain_matrix,
    to_rational,
    zero_vector,
    zeros,
)
from .polys import factor_charpoly, primary_component

logger = logging.getLogger(__name__)

_to_fraction = np.frompyfunc(to_rational, 1, 1)


class LieValidationError(ValueError):
    """Структурные константы не задают алгебру Ли."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(report.describe())
        self.report = report


class NotSemisimpleError(ValueError):
    """Форма Киллинга вырождена."""


class NotSubalgebraError(ValueError):
    """Подпространство не замкнуто относительно скобки."""


class NotStableError(ValueError):
    """Подпространство не инвариантно относительно действия подалгебры."""


class LeviError(ValueError):
    """Система коцикла для подъема дополнения Леви несовместна."""


@dataclass(frozen=True)
class ValidationReport:
    """Результат проверки антисимметричности и тождества Якоби."""

    ok: bool
    kind: Optional[str] = None
    indices: Tuple[int, ...] = ()
    value: Tuple[str, ...] = ()

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.kind == "antisymmetry":
            return f"нарушена антисимметричность в паре {self.indices}"
        if self.kind == "jacobi":
            return f"нарушено тождество Якоби в тройке {self.indices}: сумма = ({', '.join(self.value)})"
        return f"некорректные структурные константы: {self.kind}"

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "kind": self.kind,
            "indices": list(self.indices),
            "value": list(self.value),
        }


class LieAlgebra:
    """
    Конечномерная алгебра Ли над Q: [e_i, e_j] = Σ_k c[i][j][k] e_k.

    Экземпляры неизменяемы; матрицы ad(e_i) и форма Киллинга кешируются.
    """

    def __init__(
        self,
        constants,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ):
        C = np.array(constants, dtype=object)
        if C.size == 0:
            n = C.shape[0] if C.ndim == 3 else 0
            C = np.full((n, n, n), ZERO, dtype=object)
        elif C.ndim != 3 or not (C.shape[0] == C.shape[1] == C.shape[2]):
            raise LieValidationError(ValidationReport(False, "shape", tuple(C.shape)))
        else:
            C = np.array(_to_fraction(C), dtype=object)
        C.flags.writeable = False
        n = C.shape[0]
        self._constants = C
        self._labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(n))
        if len(self._labels) != n:
            raise LieValidationError(ValidationReport(False, "labels", (len(self._labels), n)))
        self.name = name
        self._ad_basis: Optional[np.ndarray] = None
        self._ad_rows: Optional[DomainMatrix] = None
        self._killing: Optional[np.ndarray] = None

    # -- конструкторы -------------------------------------------------------

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[Tuple[int, int], Mapping[int, object]],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "LieAlgebra":
        """
        Строит алгебру по разреженному списку скобок.

        Args:
            dim: Размерность
            brackets: {(i, j): {k: коэффициент}}; пары с i<j дополняются
                антисимметрично, явно заданные (j, i) сохраняются как есть
            labels: Имена базисных векторов
            name: Имя алгебры
        """
        C = np.full((dim, dim, dim), ZERO, dtype=object)
        explicit = set(brackets.keys())
        for (i, j), coeffs in brackets.items():
            for k, value in coeffs.items():
                q = to_rational(value)
                C[i, j, k] = q
                if (j, i) not in explicit:
                    C[j, i, k] = -q
        return cls(C, labels=labels, name=name)

    @classmethod
    def abelian(cls, dim: int, name: str = "") -> "LieAlgebra":
        return cls(np.full((dim, dim, dim), ZERO, dtype=object), name=name or f"R^{dim}")

    @classmethod
    def from_matrices(
        cls,
        matrices: Sequence[np.ndarray],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "LieAlgebra":
        """
        Алгебра Ли, порожденная линейно независимыми матрицами, замкнутыми
        относительно коммутатора (например, so(n) в базисе E_ij - E_ji).
        """
        mats = [as_matrix(m) for m in matrices]
        n = len(mats)
        flat = np.array([m.reshape(-1) for m in mats], dtype=object)
        # координаты читаются по столбцам-пивотам, где подматрица обратима
        _, pivots = rref(flat)
        if len(pivots) != n:
            raise LinAlgError("матрицы линейно зависимы")
        reader = inverse(flat[:, pivots])
        C = np.full((n, n, n), ZERO, dtype=object)
        for i, j in combinations(range(n), 2):
            comm = (mats[i] @ mats[j] - mats[j] @ mats[i]).reshape(-1)
            if is_zero(comm):
                continue
            coords = comm[pivots] @ reader
            if not is_zero(coords @ flat - comm):
                raise NotSubalgebraError(f"коммутатор матриц {i}, {j} выходит из оболочки")
            C[i, j] = coords
            C[j, i] = -coords
        return cls(C, labels=labels, name=name)

    # -- свойства -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._constants.shape[0]

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def constants(self) -> np.ndarray:
        return self._constants

    @property
    def ad_basis(self) -> np.ndarray:
        """Тензор ad_basis[i] = ad(e_i), ad(e_i)[k][j] = c[i][j][k]."""
        if self._ad_basis is None:
            ad = np.ascontiguousarray(np.transpose(self._constants, (0, 2, 1)))
            ad.flags.writeable = False
            self._ad_basis = ad
        return self._ad_basis

    def whole(self) -> Subspace:
        return Subspace.whole(self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    def ad_many(self, vectors) -> List[DomainMatrix]:
        """
        Матрицы ad(v) для строк vectors в виде DomainMatrix над QQ.

        Все матрицы получаются одним произведением V · A, где строка i
        матрицы A - развернутая ad(e_i).
        """
        n = self.dim
        if n == 0:
            return [DomainMatrix.zeros((0, 0), QQ) for _ in range(len(vectors))]
        V = np.asarray(vectors, dtype=object).reshape(-1, n)
        if self._ad_rows is None:
            self._ad_rows = to_domain_matrix(self.ad_basis.reshape(n, n * n))
        flat = (to_domain_matrix(V) * self._ad_rows).to_dod()
        result = []
        for s in range(V.shape[0]):
            dod: dict = {}
            for index, value in flat.get(s, {}).items():
                k, j = divmod(index, n)
                dod.setdefault(k, {})[j] = value
            result.append(DomainMatrix.from_dod(dod, (n, n), QQ))
        return result

    def ad(self, x) -> np.ndarray:
        """Матрица ad(x) в базисе алгебры."""
        return from_domain_matrix(self.ad_many([x])[0])

    def bracket(self, x, y) -> np.ndarray:
        return bracket_vectors(self, [x], [y])[0]

    def basis_vector(self, i: int) -> np.ndarray:
        v = zero_vector(self.dim)
        v[i] = ONE
        return v

    def is_abelian(self) -> bool:
        return is_zero(self._constants)

    # -- проверка -----------------------------------------------------------

    def validate(self) -> ValidationReport:
        """
        Проверяет антисимметричность и тождество Якоби на всех базисных тройках.

        Returns:
            ValidationReport с первой найденной парой/тройкой-нарушителем
        """
        C = self._constants
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                if not is_zero(C[i, j] + C[j, i]):
                    return ValidationReport(False, "antisymmetry", (i, j))
        nonzero: Dict[Tuple[int, int], List[Tuple[int, Fraction]]] = {}
        for j in range(n):
            for k in range(n):
                nonzero[(j, k)] = [(m, c) for m, c in enumerate(C[j, k]) if c != 0]

        def double(i: int, j: int, k: int) -> np.ndarray:
            acc = zero_vector(n)
            for m, c in nonzero[(j, k)]:
                acc = acc + c * C[i, m]
            return acc

        for i, j, k in combinations(range(n), 3):
            total = double(i, j, k) + double(j, k, i) + double(k, i, j)
            if not is_zero(total):
                return ValidationReport(
                    False, "jacobi", (i, j, k), tuple(format_rational(x) for x in total)
                )
        return ValidationReport(True)

    def ensure_valid(self) -> "LieAlgebra":
        report = self.validate()
        if not report.ok:
            raise LieValidationError(report)
        return self

    # -- формы и преобразования ---------------------------------------------

    def killing_matrix(self) -> np.ndarray:
        """κ(e_i, e_j) = tr(ad e_i · ad e_j)."""
        if self._killing is None:
            n = self.dim
            if n == 0:
                K = zeros(0, 0)
            else:
                A = self.ad_basis.reshape(n, n * n)
                B = np.transpose(self.ad_basis, (0, 2, 1)).reshape(n, n * n)
                K = mat_mul(A, B.T)
            K.flags.writeable = False
            self._killing = K
        return self._killing

    def restrict(self, space: Subspace, name: str = "") -> "LieAlgebra":
        """
        Подалгебра на подпространстве в его каноническом базисе.

        Raises:
            NotSubalgebraError: Если подпространство не замкнуто
        """
        B = space.basis
        d = space.dim
        brackets = bracket_vectors(self, B, B)
        coords = np.array(brackets[:, list(space.pivots)], dtype=object)
        residual = brackets - mat_mul(coords, B)
        for row in range(d * d):
            if not is_zero(residual[row]):
                a, b = divmod(row, d)
                raise NotSubalgebraError(f"скобка базисных векторов {a}, {b} выходит из подпространства")
        return LieAlgebra(coords.reshape(d, d, d), name=name or f"{self.name}|{d}")

    def change_basis(self, change: np.ndarray, name: str = "") -> "LieAlgebra":
        """Та же алгебра в новом базисе: столбцы change - новые базисные векторы."""
        P = as_matrix(change)
        Pinv = inverse(P)
        n = self.dim
        # строка i*n + j: координаты [p_i, p_j] в новом базисе
        coords = mat_mul(bracket_vectors(self, P.T, P.T), Pinv.T)
        return LieAlgebra(coords.reshape(n, n, n), name=name or self.name)

    def direct_product(self, other: "LieAlgebra", name: str = "") -> "LieAlgebra":
        n, m = self.dim, other.dim
        C = np.full((n + m, n + m, n + m), ZERO, dtype=object)
        C[:n, :n, :n] = self._constants
        C[n:, n:, n:] = other._constants
        return LieAlgebra(
            C,
            labels=self._labels + other._labels,
            name=name or f"{self.name}x{other.name}",
        )

    def __repr__(self) -> str:
        return f"LieAlgebra(name={self.name!r}, dim={self.dim})"


# ---------------------------------------------------------------------------
# Подалгебры
# ---------------------------------------------------------------------------

def bracket_vectors(g: LieAlgebra, left, right) -> np.ndarray:
    """
    Все скобки строк left со строками right.

    Returns:
        Матрица (a·b, n): строка s·b + t равна [left_s, right_t]
    """
    n = g.dim
    if n == 0:
        return zeros(len(left) * len(right), 0)
    L = np.asarray(left, dtype=object).reshape(-1, n)
    R = np.asarray(right, dtype=object).reshape(-1, n)
    a, b = L.shape[0], R.shape[0]
    if a == 0 or b == 0:
        return zeros(a * b, n)
    right_t = to_domain_matrix(R).transpose()
    dod: dict = {}
    for s, ad_u in enumerate(g.ad_many(L)):
        for k, row in (ad_u * right_t).to_dod().items():
            for t, value in row.items():
                dod.setdefault(s * b + t, {})[k] = value
    return from_domain_matrix(DomainMatrix.from_dod(dod, (a * b, n), QQ))


def bracket_space(g: LieAlgebra, left: Subspace, right: Subspace) -> Subspace:
    """[U, W] = span{[u, w]}."""
    if left.dim == 0 or right.dim == 0:
        return g.zero()
    return Subspace.span(bracket_vectors(g, left.basis, right.basis), g.dim)


def is_subalgebra(g: LieAlgebra, space: Subspace) -> bool:
    return space.contains(bracket_space(g, space, space))


def is_ideal(g: LieAlgebra, space: Subspace) -> bool:
    return space.contains(bracket_space(g, g.whole(), space))


def is_abelian_space(g: LieAlgebra, space: Subspace) -> bool:
    return bracket_space(g, space, space).dim == 0


@dataclass(frozen=True)
class SubalgebraHandle:
    """Подпространство алгебры с закешированными флагами."""

    space: Subspace
    is_subalgebra: bool
    is_ideal: bool
    is_abelian: bool

    @classmethod
    def of(cls, g: LieAlgebra, space: Subspace) -> "SubalgebraHandle":
        abelian = is_abelian_space(g, space)
        return cls(
            space=space,
            is_subalgebra=abelian or is_subalgebra(g, space),
            is_ideal=is_ideal(g, space),
            is_abelian=abelian,
        )

    @property
    def dim(self) -> int:
        return self.space.dim


def handle(g: LieAlgebra, space: Subspace) -> SubalgebraHandle:
    return SubalgebraHandle.of(g, space)


def derived_series(g: LieAlgebra, space: Optional[Subspace] = None) -> List[Subspace]:
    """Производный ряд h ⊇ [h,h] ⊇ ... до стабилизации."""
    current = space if space is not None else g.whole()
    series = [current]
    while current.dim > 0:
        nxt = bracket_space(g, current, current)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


def lower_central_series(g: LieAlgebra) -> List[Subspace]:
    """Нижний центральный ряд g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... до стабилизации."""
    whole = g.whole()
    current = whole
    series = [current]
    while current.dim > 0:
        nxt = bracket_space(g, whole, current)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
    return series


def centralizer(g: LieAlgebra, space: Subspace) -> Subspace:
    """Z_g(h) = {x : [x, h] = 0}."""
    if space.dim == 0:
        return g.whole()
    blocks = [from_domain_matrix(m) for m in g.ad_many(space.basis)]
    return Subspace.kernel(np.concatenate(blocks))


def center(g: LieAlgebra, space: Optional[Subspace] = None) -> Subspace:
    """
    Центр алгебры, либо центр подалгебры space (внутри нее самой).
    """
    if space is None:
        return centralizer(g, g.whole())
    return space.intersect(centralizer(g, space))


def killing_form(g: LieAlgebra) -> SymBilinearForm:
    """Форма Киллинга κ(x, y) = tr(ad x · ad y)."""
    return SymBilinearForm(g.killing_matrix())


def radical(g: LieAlgebra) -> SubalgebraHandle:
    """
    Радикал по критерию Картана: {x : κ(x, [g, g]) = 0}.
    """
    derived = bracket_space(g, g.whole(), g.whole())
    if derived.dim == 0:
        return SubalgebraHandle.of(g, g.whole())
    space = Subspace.kernel(mat_mul(derived.basis, g.killing_matrix()))
    return SubalgebraHandle.of(g, space)


def invariants(g: LieAlgebra, h: SubalgebraHandle, module: Subspace) -> Subspace:
    """
    V^h = {v ∈ V : [x, v] = 0 для всех x ∈ h}.

    Raises:
        NotStableError: Если V не инвариантно относительно h
    """
    h_space = h.space if isinstance(h, SubalgebraHandle) else h
    if not module.contains(bracket_space(g, h_space, module)):
        raise NotStableError("подпространство не инвариантно относительно действия подалгебры")
    return module.intersect(centralizer(g, h_space))


def largest_ideal_in(g: LieAlgebra, space: Subspace) -> Subspace:
    """
    Наибольший идеал, содержащийся в W.

    Неподвижная точка итерации W_{k+1} = {x ∈ W_k : [e_i, x] ∈ W_k для всех i}.
    """
    current = space
    while current.dim > 0:
        annihilator = current.annihilator()
        if annihilator.dim == 0:
            return current
        blocks = [
            mat_mul(annihilator.basis, g.ad_basis[i], current.basis.T) for i in range(g.dim)
        ]
        coefficients = Subspace.kernel(np.concatenate(blocks))
        if coefficients.dim == current.dim:
            return current
        if coefficients.dim == 0:
            return g.zero()
        current = Subspace.span(mat_mul(coefficients.basis, current.basis), g.dim)
    return current


def ideal_generated(g: LieAlgebra, space: Subspace) -> Subspace:
    """Наименьший идеал, содержащий подпространство."""
    whole = g.whole()
    current = space
    while True:
        nxt = current + bracket_space(g, whole, current)
        if nxt.dim == current.dim:
            return current
        current = nxt


def subalgebra_generated(g: LieAlgebra, space: Subspace) -> Subspace:
    """Наименьшая подалгебра, содержащая подпространство."""
    current = space
    while True:
        nxt = current + bracket_space(g, current, current)
        if nxt.dim == current.dim:
            return current
        current = nxt


def quotient(g: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """Фактор-алгебра g/I в базисе канонического дополнения к I."""
    comp = ideal.complement()
    frame = np.concatenate([comp.basis, ideal.basis])
    frame_inv = inverse(frame)
    d = comp.dim
    coords = mat_mul(bracket_vectors(g, comp.basis, comp.basis), frame_inv)
    return LieAlgebra(coords[:, :d].reshape(d, d, d), name=f"{g.name}/{ideal.dim}")


# ---------------------------------------------------------------------------
# Разложение Леви
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LeviDecomposition:
    """g = (K × S) ⋉ R."""

    radical: SubalgebraHandle
    levi: SubalgebraHandle
    compact_part: SubalgebraHandle
    noncompact_part: SubalgebraHandle
    gs: SubalgebraHandle
    simple_ideals: Tuple[SubalgebraHandle, ...] = field(default_factory=tuple)

    @property
    def radical_is_abelian(self) -> bool:
        return self.radical.is_abelian

    def fingerprint(self) -> dict:
        return {
            "radical_dim": self.radical.dim,
            "levi_dim": self.levi.dim,
            "compact_dim": self.compact_part.dim,
            "noncompact_dim": self.noncompact_part.dim,
            "simple_ideal_dims": sorted(h.dim for h in self.simple_ideals),
            "radical_abelian": self.radical.is_abelian,
        }


def _lift_complement(g: LieAlgebra, rad: Subspace) -> Subspace:
    """
    Подъем векторного дополнения к радикалу до подалгебры.

    На каждом слое r_i ⊃ r_{i+1} производного ряда радикала решается
    линейная система для поправки φ: s → W (W - дополнение r_{i+1} в r_i):
    β(x,y) + [x,φy]_W - [y,φx]_W - φ(σ(x,y)) = 0.
    """
    n = g.dim
    whole = g.whole()
    s = rad.complement()
    series = derived_series(g, rad)
    if series[-1].dim != 0:
        raise LeviError("производный ряд радикала не доходит до нуля")
    ds = s.dim
    for layer, (upper, lower) in enumerate(zip(series, series[1:])):
        W = lower.complement(upper)
        dw = W.dim
        if dw == 0 or ds == 0:
            continue
        rest = (s + upper).complement(whole)
        frame = np.concatenate([b for b in (s.basis, W.basis, lower.basis, rest.basis) if b.shape[0]])
        frame_inv = inverse(frame)

        x = s.basis
        # action[a][c] - W-компонента [x_a, w_c]
        mixed = mat_mul(bracket_vectors(g, x, W.basis), frame_inv)
        action = [mixed[a * dw:(a + 1) * dw, ds:ds + dw] for a in range(ds)]
        own = mat_mul(bracket_vectors(g, x, x), frame_inv)

        rows = []
        rhs = []
        for a, b in combinations(range(ds), 2):
            co = own[a * ds + b]
            sigma = co[:ds]
            beta = co[ds:ds + dw]
            for t in range(dw):
                row = zero_vector(ds * dw)
                for c in range(dw):
                    row[b * dw + c] += action[a][c, t]
                    row[a * dw + c] -= action[b][c, t]
                for e in range(ds):
                    if sigma[e] != 0:
                        row[e * dw + t] -= sigma[e]
                rows.append(row)
                rhs.append(-beta[t])
        if not rows:
            continue
        solution = solve_linear(np.array(rows, dtype=object), rhs)
        if solution is None:
            raise LeviError(f"система коцикла несовместна на слое {layer}")
        phi = solution.particular.reshape(ds, dw)
        s = Subspace.span(x + phi @ W.basis, n)
        logger.debug("Леви: слой %d, dim W=%d, уравнений %d", layer, dw, len(rows))
    return s


def _proper_ideal(algebra: LieAlgebra, seed: int) -> Optional[Subspace]:
    """
    Ищет собственный ненулевой идеал полупростой алгебры.

    Для случайного x ad(x) сохраняет каждый простой идеал, поэтому
    примарная компонента ненулевого неприводимого множителя charpoly(ad x)
    лежит в одном из них и порождает его. Если ни одна из
    SPLIT_RANDOM_PROBES проб не дала собственного идеала, алгебра
    считается простой.
    """
    d = algebra.dim
    rng = np.random.default_rng(seed)
    for probe in range(settings.SPLIT_RANDOM_PROBES):
        x = as_vector([int(c) for c in rng.integers(-5, 6, size=d)])
        if is_zero(x):
            continue
        ad_x = algebra.ad(x)
        for factor, multiplicity in factor_charpoly(ad_x):
            if factor.degree() == 1 and factor.coeff_monomial(1) == 0:
                # обобщенное ядро ad x задевает все идеалы сразу
                continue
            component = Subspace.kernel(primary_component(factor, multiplicity, ad_x))
            if component.dim in (0, d):
                continue
            candidate = ideal_generated(algebra, component)
            if 0 < candidate.dim < d:
                logger.debug("Идеал dim=%d найден на пробе %d", candidate.dim, probe)
                return candidate
    return None


def _split_semisimple(levi_alg: LieAlgebra, ideal: Subspace, seed: int) -> List[Subspace]:
    if ideal.dim < 6:
        return [ideal]
    local = levi_alg.restrict(ideal)
    found = _proper_ideal(local, seed)
    if found is None:
        return [ideal]
    part = Subspace.span(found.basis @ ideal.basis, levi_alg.dim)
    complement = ideal.intersect(Subspace.kernel(part.basis @ levi_alg.killing_matrix()))
    logger.debug("Расщепление: %d = %d + %d", ideal.dim, part.dim, complement.dim)
    return _split_semisimple(levi_alg, part, seed) + _split_semisimple(levi_alg, complement, seed)


def split_levi(
    g: LieAlgebra, levi: Subspace, seed: Optional[int] = None
) -> Tuple[Subspace, Subspace, List[Subspace]]:
    """
    Разложение полупростой подалгебры Леви на простые идеалы.

    Args:
        g: Объемлющая алгебра
        levi: Подалгебра Леви (полупростая)
        seed: Зерно случайных проб

    Returns:
        (K, S, simple_ideals) - компактная часть, некомпактная часть
        и простые идеалы (как подпространства g)

    Raises:
        NotSemisimpleError: Если форма Киллинга подалгебры вырождена
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    if levi.dim == 0:
        return g.zero(), g.zero(), []
    levi_alg = g.restrict(levi)
    kill = levi_alg.killing_matrix()
    if rank(kill) != levi.dim:
        raise NotSemisimpleError("форма Киллинга подалгебры Леви вырождена")
    local_ideals = _split_semisimple(levi_alg, levi_alg.whole(), seed)
    compact = []
    noncompact = []
    ideals = []
    for local in local_ideals:
        ambient = Subspace.span(local.basis @ levi.basis, g.dim)
        ideals.append(ambient)
        sig = signature(local.basis @ kill @ local.basis.T)
        (compact if sig == (0, local.dim, 0) else noncompact).append(ambient)
    ideals.sort(key=lambda sp: (sp.dim, tuple(sp.basis.flat)))
    K = g.zero()
    for sp in compact:
        K = K + sp
    S = g.zero()
    for sp in noncompact:
        S = S + sp
    return K, S, ideals


def levi_subalgebra(g: LieAlgebra, seed: Optional[int] = None) -> LeviDecomposition:
    """
    Разложение Леви g = (K × S) ⋉ R.

    Raises:
        LieValidationError: Если структурные константы некорректны
    """
    g.ensure_valid()
    rad = radical(g)
    levi_space = _lift_complement(g, rad.space)
    K, S, ideals = split_levi(g, levi_space, seed)
    gs = S + rad.space
    decomposition = LeviDecomposition(
        radical=rad,
        levi=SubalgebraHandle.of(g, levi_space),
        compact_part=SubalgebraHandle.of(g, K),
        noncompact_part=SubalgebraHandle.of(g, S),
        gs=SubalgebraHandle.of(g, gs),
        simple_ideals=tuple(SubalgebraHandle.of(g, sp) for sp in ideals),
    )
    logger.debug("Леви %s: %s", g.name, decomposition.fingerprint())
    return decomposition


# Алиасы для удобства
levi_decomposition = levi_subalgebra
validate = LieAlgebra.validate
