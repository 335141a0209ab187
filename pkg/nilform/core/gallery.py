"""
Галерея: детерминированные конструкторы алгебр и форм и генераторы
случайных экземпляров для свойств-тестов.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy import Poly, QQ

from ..config import settings
from .linalg import (
    DimensionError,
    ONE,
    ZERO,
    Subspace,
    SymBilinearForm,
    as_matrix,
    block_diagonal,
    identity,
    inverse,
    nullspace,
    signature,
    to_rational,
    zero_vector,
    zeros,
)
from .lie import LieAlgebra

logger = logging.getLogger(__name__)

_X, _Y, _Z = sympy.symbols("x y z")


# ---------------------------------------------------------------------------
# Базовые алгебры
# ---------------------------------------------------------------------------

def _unit_skew(n: int, i: int, j: int) -> np.ndarray:
    M = zeros(n, n)
    M[i, j] = ONE
    M[j, i] = -ONE
    return M


def natural_action_so(n: int) -> List[np.ndarray]:
    """Матрицы E_ij - E_ji (i < j) - естественное действие so(n) на R^n."""
    return [_unit_skew(n, i, j) for i, j in combinations(range(n), 2)]


def build_so(n: int) -> LieAlgebra:
    """
    so(n) в базисе E_ij - E_ji, i < j.

    Raises:
        DimensionError: Если n < 2
    """
    if n < 2:
        raise DimensionError(f"so(n) определена для n ≥ 2, получено {n}")
    labels = [f"X{i + 1}{j + 1}" for i, j in combinations(range(n), 2)]
    return LieAlgebra.from_matrices(natural_action_so(n), labels=labels, name=f"so{n}")


def build_so3() -> LieAlgebra:
    """so3 в циклическом базисе: [k1,k2] = k3, [k2,k3] = k1, [k3,k1] = k2."""
    return LieAlgebra.from_brackets(
        3,
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}},
        labels=["k1", "k2", "k3"],
        name="so3",
    )


def build_sl2() -> LieAlgebra:
    """sl2 в базисе (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f."""
    return LieAlgebra.from_brackets(
        3,
        {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
        labels=["e", "h", "f"],
        name="sl2",
    )


def sl2_standard_action() -> List[np.ndarray]:
    """Двумерное представление sl2 в базисе (e, h, f)."""
    return [
        as_matrix([[0, 1], [0, 0]]),
        as_matrix([[1, 0], [0, -1]]),
        as_matrix([[0, 0], [1, 0]]),
    ]


def semidirect(
    L: LieAlgebra,
    actions: Sequence[np.ndarray],
    module_labels: Optional[Sequence[str]] = None,
    name: str = "",
) -> LieAlgebra:
    """
    L ⋉ V с абелевым V: [x_i, v_j] = Σ_m actions[i][m, j] v_m.

    Args:
        L: Алгебра Ли
        actions: Матрицы действия базисных векторов L (по одной на базисный вектор)
        module_labels: Имена базисных векторов V
        name: Имя алгебры
    """
    if len(actions) != L.dim:
        raise DimensionError(f"ожидалось {L.dim} матриц действия, получено {len(actions)}")
    if module_labels is not None:
        d = len(module_labels)
    else:
        d = actions[0].shape[0] if actions else 0
    n = L.dim + d
    C = np.full((n, n, n), ZERO, dtype=object)
    C[: L.dim, : L.dim, : L.dim] = L.constants
    for i, rho in enumerate(actions):
        rho = as_matrix(rho)
        for j in range(d):
            C[i, L.dim + j, L.dim:] = rho[:, j]
            C[L.dim + j, i, L.dim:] = -rho[:, j]
    labels = list(L.labels) + list(module_labels or [f"v{j + 1}" for j in range(d)])
    return LieAlgebra(C, labels=labels, name=name or f"{L.name}⋉R{d}")


def build_euclidean(n: int) -> LieAlgebra:
    """E_n = so(n) ⋉ R^n."""
    if n < 1:
        raise DimensionError(f"E_n определена для n ≥ 1, получено {n}")
    base = build_so(n) if n >= 2 else LieAlgebra(np.full((0, 0, 0), ZERO, dtype=object), name="so1")
    return semidirect(base, natural_action_so(n), [f"e{i + 1}" for i in range(n)], name=f"E{n}")


def minus_killing(L: LieAlgebra) -> np.ndarray:
    return -np.array(L.killing_matrix(), dtype=object)


def hyperbolic_gram(d: int, scale=1) -> np.ndarray:
    """[[0, c·I], [c·I, 0]]."""
    G = zeros(2 * d, 2 * d)
    c = to_rational(scale)
    for i in range(d):
        G[i, d + i] = c
        G[d + i, i] = c
    return G


def build_cotangent(L: LieAlgebra) -> Tuple[LieAlgebra, SymBilinearForm]:
    """
    Метрическая кокасательная алгебра L ⋉ L* с каноническим спариванием.

    [e_i, e^j] = -Σ_k c[i][k][j] e^k; <e_i, e^j> = δ_ij.
    """
    coadjoint = [-np.array(L.ad_basis[i]).T for i in range(L.dim)]
    g = semidirect(L, coadjoint, [f"{label}*" for label in L.labels], name=f"T*{L.name}")
    return g, SymBilinearForm(hyperbolic_gram(L.dim))


def build_twisted_cotangent(L: LieAlgebra) -> Tuple[LieAlgebra, SymBilinearForm, Subspace]:
    """
    (L ⋉ L*) × R^d со спариванием <e_i, e^j> = δ_ij, <e_i, w_j> = -δ_ij.

    Returns:
        (алгебра, форма, ядро формы {(0, ξ, ξ)})
    """
    d = L.dim
    cot, _ = build_cotangent(L)
    trivial = LieAlgebra.abelian(d)
    g = cot.direct_product(trivial, name=f"T*{L.name}xR{d}")
    g = LieAlgebra(g.constants, labels=list(cot.labels) + [f"w{i + 1}" for i in range(d)], name=g.name)
    G = zeros(3 * d, 3 * d)
    for i in range(d):
        G[i, d + i] = G[d + i, i] = ONE
        G[i, 2 * d + i] = G[2 * d + i, i] = -ONE
    stabilizer = zeros(d, 3 * d)
    for i in range(d):
        stabilizer[i, d + i] = ONE
        stabilizer[i, 2 * d + i] = ONE
    return g, SymBilinearForm(G), Subspace.span(stabilizer, 3 * d)


def e3_dual_pairing() -> np.ndarray:
    """
    Дуальное спаривание на E3 через отождествление so3 ≅ R^3:
    ω(X) = (X[2][1], X[0][2], X[1][0]), <X, v> = ω(X)·v.
    """
    G = zeros(6, 6)
    for a, X in enumerate(natural_action_so(3)):
        omega = (X[2, 1], X[0, 2], X[1, 0])
        for i, value in enumerate(omega):
            G[a, 3 + i] = G[3 + i, a] = value
    return G


# ---------------------------------------------------------------------------
# Неприводимые модули so3 на гармонических многочленах
# ---------------------------------------------------------------------------

def _monomials(l: int) -> List[Tuple[int, int, int]]:
    return [(a, b, l - a - b) for a in range(l, -1, -1) for b in range(l - a, -1, -1)]


def _poly_vector(p: Poly, index: Dict[Tuple[int, int, int], int]) -> np.ndarray:
    v = zero_vector(len(index))
    for monom, coeff in p.as_dict().items():
        if coeff == 0:
            continue
        v[index[monom]] = to_rational(coeff)
    return v


def harmonic_basis(l: int) -> Tuple[List[Tuple[int, int, int]], Subspace]:
    """
    Гармонические однородные многочлены степени l от x, y, z.

    Returns:
        (мономы степени l, подпространство коэффициентов ядра лапласиана)
    """
    monos = _monomials(l)
    if l < 2:
        return monos, Subspace.whole(len(monos))
    lower = {m: i for i, m in enumerate(_monomials(l - 2))}
    laplacian = zeros(len(lower), len(monos))
    for j, m in enumerate(monos):
        p = Poly(_X ** m[0] * _Y ** m[1] * _Z ** m[2], _X, _Y, _Z, domain=QQ)
        lap = p.diff(_X).diff(_X) + p.diff(_Y).diff(_Y) + p.diff(_Z).diff(_Z)
        laplacian[:, j] = _poly_vector(lap, lower)
    return monos, Subspace.kernel(laplacian)


def build_so3_irrep(l: int) -> List[np.ndarray]:
    """
    Неприводимый модуль V_{2l+1} алгебры so3 (циклический базис).

    k1, k2, k3 действуют операторами z∂y - y∂z, x∂z - z∂x, y∂x - x∂y
    на гармонических многочленах степени l.

    Raises:
        DimensionError: Если l < 0
    """
    if l < 0:
        raise DimensionError(f"степень l должна быть неотрицательной, получено {l}")
    monos, harmonic = harmonic_basis(l)
    index = {m: i for i, m in enumerate(monos)}
    X, Y, Z = (Poly(s, _X, _Y, _Z, domain=QQ) for s in (_X, _Y, _Z))
    operators = (
        lambda p: Z * p.diff(_Y) - Y * p.diff(_Z),
        lambda p: X * p.diff(_Z) - Z * p.diff(_X),
        lambda p: Y * p.diff(_X) - X * p.diff(_Y),
    )
    polys = []
    for row in harmonic.basis:
        terms = {monos[k]: sympy.Rational(c.numerator, c.denominator) for k, c in enumerate(row) if c != 0}
        polys.append(Poly.from_dict(terms, _X, _Y, _Z, domain=QQ))
    d = harmonic.dim
    actions = []
    for op in operators:
        rho = zeros(d, d)
        for j, p in enumerate(polys):
            rho[:, j] = harmonic.coordinates(_poly_vector(op(p), index))
        actions.append(rho)
    logger.debug("V_%d: размерность %d", 2 * l + 1, d)
    return actions


def build_so3_module(l: int) -> LieAlgebra:
    """so3 ⋉ V_{2l+1}."""
    actions = build_so3_irrep(l)
    d = actions[0].shape[0]
    return semidirect(build_so3(), actions, [f"v{j + 1}" for j in range(d)], name=f"so3⋉V{d}")


def casimir(actions: Sequence[np.ndarray]) -> np.ndarray:
    """Σ ρ(k_i)^2."""
    d = actions[0].shape[0]
    total = zeros(d, d)
    for rho in actions:
        total = total + rho @ rho
    return total


def intertwiner_space(source: Sequence[np.ndarray], target: Sequence[np.ndarray]) -> List[np.ndarray]:
    """
    Базис пространства сплетающих операторов T: T·source_i = target_i·T.

    Returns:
        Матрицы T размера dim target × dim source
    """
    ds = source[0].shape[0]
    dt = target[0].shape[0]
    rows = []
    for sigma, rho in zip(source, target):
        for a in range(dt):
            for b in range(ds):
                row = zero_vector(dt * ds)
                for m in range(ds):
                    row[a * ds + m] += sigma[m, b]
                for m in range(dt):
                    row[m * ds + b] -= rho[a, m]
                if any(row):
                    rows.append(row)
    if not rows:
        return [r.reshape(dt, ds) for r in nullspace(zeros(0, dt * ds), dt * ds)]
    return [r.reshape(dt, ds) for r in nullspace(np.array(rows, dtype=object))]


def commutant_dimension(actions: Sequence[np.ndarray]) -> int:
    """Размерность пространства матриц, коммутирующих со всеми действиями."""
    return len(intertwiner_space(actions, actions))


# ---------------------------------------------------------------------------
# Примеры с вырожденными формами
# ---------------------------------------------------------------------------

def build_twisted_so3() -> Tuple[LieAlgebra, SymBilinearForm, Subspace]:
    """(so3 ⋉ V1) × V0 размерности 9; сигнатура (3,3,3), ядро {(0,v,v)}."""
    g, form, stabilizer = build_twisted_cotangent(build_so3())
    labels = ["k1", "k2", "k3", "u1", "u2", "u3", "w1", "w2", "w3"]
    return LieAlgebra(g.constants, labels=labels, name="so3⋉V1xV0"), form, stabilizer


TORUS_PAIRS = ((0, 1), (2, 3), (4, 5))


def build_torus_twisted_so3(
    embedding: Optional[np.ndarray] = None,
) -> Tuple[LieAlgebra, SymBilinearForm, Subspace]:
    """
    (so3 ⋉ V1) × so6 размерности 21; V0 заменено тором t = <E12, E34, E56>.

    embedding - обратимая 3×3 матрица M вложения ι(u_i) = Σ M[i,m] t_m.
    Форма: <k_i,u_j> = δ_ij, <k_i,t_m> = P = -(M^T)^{-1},
    -Киллинг so6 на ортогональном по Киллингу дополнении к тору.

    Returns:
        (алгебра, форма, ядро формы {(0, v, ι(v))})
    """
    M = identity(3) if embedding is None else as_matrix(embedding)
    P = -inverse(M.T)
    cot, _ = build_cotangent(build_so3())
    so6 = build_so(6)
    g = cot.direct_product(so6, name="so3⋉V1xso6")
    g = LieAlgebra(g.constants, labels=["k1", "k2", "k3", "u1", "u2", "u3"] + list(so6.labels), name=g.name)
    pairs = list(combinations(range(6), 2))
    torus_local = [pairs.index(p) for p in TORUS_PAIRS]

    kill = so6.killing_matrix()
    torus = Subspace.span([so6.basis_vector(t) for t in torus_local], so6.dim)
    complement = Subspace.kernel(torus.basis @ kill)
    frame = np.concatenate([complement.basis, torus.basis])
    coords = identity(so6.dim) @ inverse(frame)
    projector = coords[:, : complement.dim] @ complement.basis
    block = -(projector @ kill @ projector.T)

    G = zeros(21, 21)
    G[6:, 6:] = block
    for i in range(3):
        G[i, 3 + i] = G[3 + i, i] = ONE
        for m, t in enumerate(torus_local):
            G[i, 6 + t] = G[6 + t, i] = P[i, m]
    stabilizer = zeros(3, 21)
    for i in range(3):
        stabilizer[i, 3 + i] = ONE
        for m, t in enumerate(torus_local):
            stabilizer[i, 6 + t] = M[i, m]
    return g, SymBilinearForm(G), Subspace.span(stabilizer, 21)


# ---------------------------------------------------------------------------
# Записи галереи
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GalleryEntry:
    """Именованный экземпляр с эталонными результатами анализа."""

    name: str
    description: str
    algebra: LieAlgebra
    form: Optional[SymBilinearForm]
    expected: Dict[str, object]
    annotations: Dict[str, Subspace] = field(default_factory=dict)


def _expected(sig, invariant, nil, effective, **extra) -> Dict[str, object]:
    record = {
        "signature": list(sig),
        "kernel_dim": sig[2],
        "invariant": invariant,
        "nil_invariant": nil,
        "effective": effective,
    }
    record.update(extra)
    return record


def _so3_killing() -> GalleryEntry:
    g = build_so3()
    return GalleryEntry(
        "so3-killing", "so3 с формой Киллинга", g, SymBilinearForm(g.killing_matrix()),
        _expected((0, 3, 0), True, "holds", True),
    )


def _sl2_killing() -> GalleryEntry:
    g = build_sl2()
    return GalleryEntry(
        "sl2-killing", "sl2 с формой Киллинга", g, SymBilinearForm(g.killing_matrix()),
        _expected((2, 1, 0), True, "holds", True),
    )


def _so4() -> GalleryEntry:
    g = build_so(4)
    return GalleryEntry(
        "so4", "so4 ≅ so3 × so3 с -Киллингом", g, SymBilinearForm(minus_killing(g)),
        _expected((6, 0, 0), True, "holds", True, simple_ideal_dims=[3, 3]),
    )


def _e3_dual() -> GalleryEntry:
    g = build_euclidean(3)
    return GalleryEntry(
        "e3-dual", "E3 с дуальным спариванием so3 × R3", g, SymBilinearForm(e3_dual_pairing()),
        _expected((3, 3, 0), True, "holds", True),
        {"cotangent_s1": Subspace.span(np.eye(6, dtype=int)[:3], 6),
         "cotangent_b": Subspace.span(np.eye(6, dtype=int)[3:], 6)},
    )


def _euclidean_block(n: int, translation_gram: np.ndarray) -> Tuple[LieAlgebra, SymBilinearForm]:
    g = build_euclidean(n)
    return g, SymBilinearForm(block_diagonal(minus_killing(build_so(n)), translation_gram))


def _e4_definite() -> GalleryEntry:
    g, form = _euclidean_block(4, zeros(4, 4))
    return GalleryEntry(
        "e4-definite", "E4: -Киллинг на so4, ноль на R4 (R4 - идеал в ядре)", g, form,
        _expected((6, 0, 4), True, "holds", False),
    )


def _e4_full_definite() -> GalleryEntry:
    g, form = _euclidean_block(4, identity(4))
    return GalleryEntry(
        "e4-full-definite", "E4: -Киллинг на so4 ⊕ единичная форма на R4", g, form,
        _expected((10, 0, 0), False, "fails", True),
    )


def _cotangent(L: LieAlgebra, name: str) -> GalleryEntry:
    g, form = build_cotangent(L)
    d = L.dim
    eye = np.eye(2 * d, dtype=int)
    return GalleryEntry(
        name, f"метрическая кокасательная {L.name} ⋉ {L.name}*", g, form,
        _expected((d, d, 0), True, "holds", True),
        {"cotangent_s1": Subspace.span(eye[:d], 2 * d), "cotangent_b": Subspace.span(eye[d:], 2 * d)},
    )


def _twisted_so3() -> GalleryEntry:
    g, form, stabilizer = build_twisted_so3()
    return GalleryEntry(
        "ex-3-8", "(so3 ⋉ V1) × V0, сигнатура (3,3,3), ядро {(0,v,v)}", g, form,
        _expected((3, 3, 3), False, "holds", True),
        {"stabilizer": stabilizer},
    )


def _torus_twisted() -> GalleryEntry:
    g, form, stabilizer = build_torus_twisted_so3()
    return GalleryEntry(
        "ex-3-9", "(so3 ⋉ V1) × so6 с тором вместо V0, сигнатура (15,3,3)", g, form,
        _expected((15, 3, 3), False, "holds", True),
        {"stabilizer": stabilizer},
    )


def _torus_stabilizer() -> GalleryEntry:
    g, form, stabilizer = build_torus_twisted_so3()
    flags = {
        "commutator_in_k": True,
        "projects_onto_radical": True,
        "is_graph_split": True,
        "phi_is_homomorphism": True,
        "phi_injective_on_center_part": True,
        "phi_nontrivial": True,
        "graph_meets_compact_part_trivially": True,
        "phi_vanishes_on_radical_in_h": True,
    }
    return GalleryEntry(
        "ex-4-7", "стабилизатор h = {(0, v, ι(v))} в (so3 ⋉ V1) × so6", g, form,
        _expected((15, 3, 3), False, "holds", True, audit_flags=flags),
        {"stabilizer": stabilizer},
    )


def _e2() -> GalleryEntry:
    g = build_euclidean(2)
    G = zeros(3, 3)
    G[0, 0] = ONE
    return GalleryEntry(
        "e2", "E2 (разрешима), форма убивает R2", g, SymBilinearForm(G),
        _expected((1, 0, 2), True, "holds", False),
    )


def _so3_x_sl2() -> GalleryEntry:
    so3, sl2 = build_so3(), build_sl2()
    g = so3.direct_product(sl2)
    form = SymBilinearForm(block_diagonal(so3.killing_matrix(), sl2.killing_matrix()))
    return GalleryEntry(
        "so3-x-sl2", "so3 × sl2 с Киллинг ⊕ Киллинг", g, form,
        _expected((2, 4, 0), True, "holds", True),
    )


def _so3_x_r3() -> GalleryEntry:
    so3 = build_so3()
    g = so3.direct_product(LieAlgebra.abelian(3))
    g = LieAlgebra(g.constants, labels=["k1", "k2", "k3", "r1", "r2", "r3"], name="so3xR3")
    form = SymBilinearForm(block_diagonal(minus_killing(so3), identity(3)))
    return GalleryEntry(
        "so3-x-r3", "so3 × R3 с -Киллинг ⊕ положительно определенная, ℓ = 0", g, form,
        _expected((6, 0, 0), True, "holds", True),
    )


def _three_factor() -> GalleryEntry:
    instance = assemble_three_factor("twisted", 1, 1, 1, 1)
    return GalleryEntry(
        "three-factor", "(so3 ⋉ V1 × V0) × sl2 × (sl2 ⋉ sl2*)", instance.algebra, instance.form,
        _expected((8, 7, 3), False, "holds", True, factor_dims=[9, 3, 6]),
        dict(instance.parts),
    )


GALLERY: Dict[str, Callable[[], GalleryEntry]] = {
    "so3-killing": _so3_killing,
    "sl2-killing": _sl2_killing,
    "so4": _so4,
    "e3-dual": _e3_dual,
    "e4-definite": _e4_definite,
    "e4-full-definite": _e4_full_definite,
    "cotangent-sl2": lambda: _cotangent(build_sl2(), "cotangent-sl2"),
    "cotangent-so3": lambda: _cotangent(build_so3(), "cotangent-so3"),
    "ex-3-8": _twisted_so3,
    "ex-3-9": _torus_twisted,
    "ex-4-7": _torus_stabilizer,
    "e2": _e2,
    "so3-x-sl2": _so3_x_sl2,
    "so3-x-r3": _so3_x_r3,
    "three-factor": _three_factor,
}


@lru_cache(maxsize=None)
def get_entry(name: str) -> GalleryEntry:
    """
    Raises:
        KeyError: Если имя неизвестно
    """
    if name not in GALLERY:
        raise KeyError(name)
    return GALLERY[name]()


def list_entries() -> List[str]:
    return sorted(GALLERY)


# ---------------------------------------------------------------------------
# Случайные экземпляры
# ---------------------------------------------------------------------------

@dataclass
class RandomInstance:
    """Случайный экземпляр: алгебра, форма, размеченные части и ожидания."""

    algebra: LieAlgebra
    form: Optional[SymBilinearForm]
    parts: Dict[str, Subspace] = field(default_factory=dict)
    expected: Dict[str, object] = field(default_factory=dict)

    def __iter__(self) -> Iterator:
        yield self.algebra
        yield self.form


def random_basis_change(rng: np.random.Generator, n: int) -> np.ndarray:
    """Унимодулярная целочисленная матрица: L·U с последующей перестановкой столбцов."""
    lower = identity(n)
    upper = identity(n)
    for i in range(n):
        for j in range(i):
            lower[i, j] = to_rational(int(rng.integers(-2, 3)))
            upper[j, i] = to_rational(int(rng.integers(-2, 3)))
    return (lower @ upper)[:, rng.permutation(n)]


def scramble(instance: RandomInstance, rng: np.random.Generator) -> RandomInstance:
    """Применяет случайную замену базиса (столбцы P - новые базисные векторы)."""
    g = instance.algebra
    P = random_basis_change(rng, g.dim)
    Pinv = inverse(P)
    parts = {
        key: Subspace.span(space.basis @ Pinv.T, g.dim) if space.dim else space
        for key, space in instance.parts.items()
    }
    form = instance.form.congruent(P) if instance.form is not None else None
    return RandomInstance(g.change_basis(P, name=g.name), form, parts, dict(instance.expected))


def _direct(factors: Sequence[Tuple[LieAlgebra, np.ndarray]], name: str) -> Tuple[LieAlgebra, SymBilinearForm, List[Subspace]]:
    """Прямое произведение с блочно-диагональной формой и подпространствами факторов."""
    total = sum(f.dim for f, _ in factors)
    g = LieAlgebra.abelian(0)
    grams = []
    spaces = []
    offset = 0
    for algebra, gram in factors:
        g = g.direct_product(algebra) if g.dim else algebra
        grams.append(gram)
        eye = np.eye(total, dtype=int)
        spaces.append(Subspace.span(eye[offset: offset + algebra.dim], total) if algebra.dim else Subspace.zero(total))
        offset += algebra.dim
    return LieAlgebra(g.constants, labels=g.labels, name=name), SymBilinearForm(block_diagonal(*grams)), spaces


def _first_factor(kind: str, scale: int, pairing: int) -> Tuple[LieAlgebra, np.ndarray]:
    so3 = build_so3()
    if kind == "compact":
        return so3, minus_killing(so3) * scale
    if kind == "dual":
        g, _ = build_cotangent(so3)
        G = hyperbolic_gram(3, pairing)
        G[:3, :3] = minus_killing(so3) * scale
        return g, G
    g, form, _ = build_twisted_so3()
    G = np.array(form.gram, dtype=object)
    G[:3, :3] = minus_killing(so3) * scale
    return g, G


def assemble_three_factor(
    first: Optional[str], first_scale: int, second_scale: int, third_scale: int, pairing: int = 1
) -> RandomInstance:
    """
    G1 × G2 × G3 с блочной формой.

    Args:
        first: compact | dual | twisted | None - вид G1 на базе so3
        first_scale: Множитель -Киллинга на so3 в G1
        second_scale: Множитель Киллинга на G2 = sl2 (0 - без G2)
        third_scale: Множитель спаривания в G3 = sl2 ⋉ sl2* (0 - без G3)
        pairing: Множитель спаривания so3 × V1 в G1
    """
    factors = []
    keys = []
    if first is not None:
        factors.append(_first_factor(first, first_scale, pairing))
        keys.append("G1")
    if second_scale:
        sl2 = build_sl2()
        factors.append((sl2, np.array(sl2.killing_matrix(), dtype=object) * second_scale))
        keys.append("G2")
    if third_scale:
        g3, _ = build_cotangent(build_sl2())
        factors.append((g3, hyperbolic_gram(3, third_scale)))
        keys.append("G3")
    g, form, spaces = _direct(factors, "G1xG2xG3")
    parts = {key: g.zero() for key in ("G1", "G2", "G3")}
    parts.update(dict(zip(keys, spaces)))
    expected = {}
    for key, (algebra, _) in zip(keys, factors):
        expected[key] = {"dim": algebra.dim, "killing_signature": list(signature(algebra.killing_matrix()))}
    for key in ("G1", "G2", "G3"):
        expected.setdefault(key, {"dim": 0, "killing_signature": [0, 0, 0]})
    expected["signature"] = list(form.signature())
    return RandomInstance(g, form, parts, expected)


def _nonzero(rng: np.random.Generator, bound: int = 3) -> int:
    value = 0
    while value == 0:
        value = int(rng.integers(-bound, bound + 1))
    return value


def random_instance(seed: Optional[int] = None, profile: str = "mixed-three-factor") -> RandomInstance:
    """
    Случайный блочный экземпляр в случайном базисе.

    Args:
        seed: Зерно (по умолчанию settings.DEFAULT_SEED)
        profile: euclidean-type | cotangent | mixed-three-factor

    Raises:
        ValueError: Для неизвестного профиля
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    if profile == "mixed-three-factor":
        first = [None, "compact", "dual", "twisted"][int(rng.integers(0, 4))]
        first_scale = int(rng.integers(1, 4)) if first == "compact" else int(rng.integers(0, 3))
        second = _nonzero(rng) if rng.integers(0, 3) else 0
        third = _nonzero(rng) if rng.integers(0, 3) else 0
        if first is None and not second and not third:
            third = 1
        instance = assemble_three_factor(first, first_scale, second, third, _nonzero(rng))
    elif profile == "cotangent":
        choices = [build_so3, build_sl2, lambda: build_so3().direct_product(build_sl2()), lambda: build_euclidean(2)]
        L = choices[int(rng.integers(0, len(choices)))]()
        g, form = build_cotangent(L)
        eye = np.eye(2 * L.dim, dtype=int)
        instance = RandomInstance(
            g, form,
            {"cotangent_s1": Subspace.span(eye[: L.dim], g.dim), "cotangent_b": Subspace.span(eye[L.dim:], g.dim)},
            {"signature": [L.dim, L.dim, 0]},
        )
    elif profile == "euclidean-type":
        adjoint_copies = int(rng.integers(1, 3))
        trivial_copies = int(rng.integers(0, 2))
        so3 = build_so3()
        adjoint = [np.array(so3.ad_basis[i], dtype=object) for i in range(3)]
        copies = adjoint_copies + trivial_copies
        actions = [
            block_diagonal(*([adjoint[i]] * adjoint_copies + [zeros(3, 3)] * trivial_copies))
            for i in range(3)
        ]
        g = semidirect(so3, actions, [f"v{j + 1}" for j in range(3 * copies)], name="so3⋉V")
        G = zeros(g.dim, g.dim)
        G[:3, :3] = minus_killing(so3) * int(rng.integers(0, 3))
        for c in range(copies):
            weight = to_rational(_nonzero(rng))
            for i in range(3):
                G[i, 3 + 3 * c + i] = G[3 + 3 * c + i, i] = weight
        form = SymBilinearForm(G)
        instance = RandomInstance(
            g, form,
            {"radical": Subspace.span(np.eye(g.dim, dtype=int)[3:], g.dim)},
            {"signature": list(form.signature()), "kernel_dim": form.kernel().dim},
        )
    else:
        raise ValueError(f"неизвестный профиль: {profile}")
    logger.debug("Случайный экземпляр %s (seed=%d): dim %d", profile, seed, instance.algebra.dim)
    return scramble(instance, rng)


def random_levi_instance(seed: int) -> RandomInstance:
    """
    Случайное полупрямое произведение L ⋉ V с абелевым V (dim ≤ 20)
    в случайном базисе; L из {so3, sl2, so3 × sl2}.
    """
    rng = np.random.default_rng(seed)
    so3, sl2 = build_so3(), build_sl2()
    factor_reps = {
        "so3": [build_so3_irrep(0), build_so3_irrep(1), build_so3_irrep(2)],
        "sl2": [
            [zeros(1, 1)] * 3,
            sl2_standard_action(),
            [np.array(sl2.ad_basis[i], dtype=object) for i in range(3)],
        ],
    }
    names = [["so3"], ["sl2"], ["so3", "sl2"]][int(rng.integers(0, 3))]
    algebras = {"so3": so3, "sl2": sl2}
    L = algebras[names[0]]
    for extra in names[1:]:
        L = L.direct_product(algebras[extra])
    modules = []
    for position, factor in enumerate(names):
        count = int(rng.integers(1, 3)) if len(names) == 1 else 1
        for _ in range(count):
            modules.append((position, factor_reps[factor][int(rng.integers(0, 3))]))
    actions = []
    for position in range(len(names)):
        for i in range(3):
            blocks = [
                rep[i] if owner == position else zeros(rep[0].shape[0], rep[0].shape[0])
                for owner, rep in modules
            ]
            actions.append(block_diagonal(*blocks))
    g = semidirect(L, actions, name="L⋉V")
    radical = Subspace.span(np.eye(g.dim, dtype=int)[L.dim:], g.dim)
    instance = RandomInstance(
        g, None, {"radical": radical}, {"levi_dim": L.dim, "radical_dim": g.dim - L.dim}
    )
    return scramble(instance, rng)


__all__ = [
    "GalleryEntry",
    "GALLERY",
    "RandomInstance",
    "natural_action_so",
    "build_so",
    "build_so3",
    "build_sl2",
    "sl2_standard_action",
    "semidirect",
    "build_euclidean",
    "build_cotangent",
    "build_twisted_cotangent",
    "build_twisted_so3",
    "build_torus_twisted_so3",
    "build_so3_irrep",
    "build_so3_module",
    "harmonic_basis",
    "casimir",
    "intertwiner_space",
    "commutant_dimension",
    "e3_dual_pairing",
    "minus_killing",
    "hyperbolic_gram",
    "get_entry",
    "list_entries",
    "random_basis_change",
    "scramble",
    "assemble_three_factor",
    "random_instance",
    "random_levi_instance",
]
