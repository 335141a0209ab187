"""
Симметричные билинейные формы на алгебре Ли: ядро, сигнатура,
относительный индекс, инвариантность, нильинвариантность и
структурные следствия нильинвариантности.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..config import settings
from .certificates import Certificate, first_nonzero, vector_witness
from .linalg import (
    DimensionError,
    inverse,
    Subspace,
    SymBilinearForm,
    domain_nullspace,
    from_domain_matrix,
    is_zero,
    mat_mul,
    nullspace,
    to_qq,
    zero_vector,
    zeros,
)
from .lie import (
    LeviDecomposition,
    LieAlgebra,
    SubalgebraHandle,
    bracket_space,
    center,
    killing_form,
    largest_ideal_in,
    levi_subalgebra,
    subalgebra_generated,
)
from .polys import jordan_chevalley

logger = logging.getLogger(__name__)


class NilVerdict(str, Enum):
    """Градации вердикта нильинвариантности."""
    HOLDS = "holds"
    FAILS = "fails"
    HOLDS_FOR_GENERATORS = "holds-for-generator-set"


GENERATOR_CAVEAT = (
    "радикал неабелев: проверена кососимметричность только на наборе "
    "порождающих нильпотентных элементов"
)


@dataclass(frozen=True)
class NilpotentGenerator:
    """Элемент набора N(g) с указанием происхождения."""

    matrix: np.ndarray
    kind: str  # radical | noncompact | jordan
    source: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "source": list(self.source)}


@dataclass(frozen=True)
class InvarianceResult:
    holds: bool
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class NilInvarianceResult:
    verdict: NilVerdict
    generator_count: int
    witness: Optional[dict] = None
    caveat: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.verdict is not NilVerdict.FAILS

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "generator_count": self.generator_count,
            "witness": self.witness,
            "caveat": self.caveat,
        }


@dataclass(frozen=True)
class FormAnalysis:
    """Результат analyze: ядро G⊥, сигнатура, индекс и вердикты."""

    kernel: Subspace
    signature: Tuple[int, int, int]
    relative_index: int
    invariant: InvarianceResult
    nil_invariant: NilInvarianceResult
    effective: bool
    kernel_ideal: Subspace
    kernel_invariant: InvarianceResult

    def to_dict(self) -> dict:
        return {
            "kernel": self.kernel.to_strings(),
            "kernel_dim": self.kernel.dim,
            "signature": list(self.signature),
            "relative_index": self.relative_index,
            "invariant": self.invariant.to_dict(),
            "kernel_invariant": self.kernel_invariant.to_dict(),
            "nil_invariant": self.nil_invariant.to_dict(),
            "effective": self.effective,
            "largest_ideal_in_kernel_dim": self.kernel_ideal.dim,
        }


# ---------------------------------------------------------------------------
# Инвариантность
# ---------------------------------------------------------------------------

def _check_dims(g: LieAlgebra, form: SymBilinearForm) -> None:
    if form.dim != g.dim:
        raise DimensionError(f"форма размерности {form.dim} на алгебре размерности {g.dim}")


def skew_residual(phi: np.ndarray, gram: np.ndarray) -> np.ndarray:
    """φᵀG + Gφ: ноль тогда и только тогда, когда φ кососимметричен для формы."""
    phi = np.asarray(phi, dtype=object)
    return mat_mul(phi.T, gram) + mat_mul(gram, phi)


def is_invariant(
    g: LieAlgebra, form: SymBilinearForm, h: Optional[object] = None
) -> InvarianceResult:
    """
    Проверяет <[x,a],b> + <a,[x,b]> = 0 для x из базиса h и всех базисных a, b.

    Args:
        g: Алгебра Ли
        form: Форма
        h: SubalgebraHandle или Subspace (по умолчанию вся алгебра)
    """
    _check_dims(g, form)
    space = g.whole() if h is None else (h.space if isinstance(h, SubalgebraHandle) else h)
    G = form.gram
    for index, x in enumerate(space.basis):
        hit = first_nonzero(skew_residual(g.ad(x), G))
        if hit is not None:
            a, b, value = hit
            return InvarianceResult(
                False,
                {
                    "x": vector_witness(x),
                    "x_index": index,
                    "a": g.labels[a],
                    "b": g.labels[b],
                    "value": value,
                },
            )
    return InvarianceResult(True)


# ---------------------------------------------------------------------------
# Нильинвариантность
# ---------------------------------------------------------------------------

def nilpotent_generators(
    g: LieAlgebra, levi: Optional[LeviDecomposition] = None
) -> List[NilpotentGenerator]:
    """
    Набор N(g) порождающих нильпотентных элементов оболочки ad(g).

    (a) ad(x) для базиса радикала, если радикал абелев;
    (b) ad(x) для базиса некомпактной части S;
    (c) нильпотентные части Жордана ad(x) для базисных векторов вне K
        и попарных сумм некоммутирующих базисных векторов.
    """
    levi = levi or levi_subalgebra(g)
    generators: List[NilpotentGenerator] = []
    seen = set()

    def add(matrix: np.ndarray, kind: str, source: np.ndarray) -> None:
        if is_zero(matrix):
            return
        key = tuple(matrix.flat)
        if key in seen:
            return
        seen.add(key)
        generators.append(NilpotentGenerator(matrix, kind, tuple(vector_witness(source))))

    if levi.radical.is_abelian:
        for r in levi.radical.space.basis:
            add(g.ad(r), "radical", r)
    for s in levi.noncompact_part.space.basis:
        add(g.ad(s), "noncompact", s)

    elements = [g.basis_vector(i) for i in range(g.dim)]
    if settings.JORDAN_PAIRWISE:
        C = g.constants
        for i, j in combinations(range(g.dim), 2):
            # при [e_i, e_j] = 0 нильпотентная часть суммы - сумма частей
            if is_zero(C[i, j]):
                continue
            elements.append(g.basis_vector(i) + g.basis_vector(j))
    compact = levi.compact_part.space
    for x in elements:
        if compact.dim and compact.contains_vector(x):
            # ad компактного элемента полупрост
            continue
        add(jordan_chevalley(g.ad(x)).nilpotent, "jordan", x)
    logger.debug("N(%s): %d генераторов", g.name, len(generators))
    return generators


def is_nil_invariant(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: Optional[LeviDecomposition] = None,
    generators: Optional[Sequence[NilpotentGenerator]] = None,
) -> NilInvarianceResult:
    """
    Вердикт нильинвариантности по набору N(g).

    Returns:
        NilInvarianceResult: fails со свидетелем; holds для абелева радикала
        или инвариантной формы; иначе holds-for-generator-set с оговоркой
    """
    _check_dims(g, form)
    levi = levi or levi_subalgebra(g)
    generators = generators if generators is not None else nilpotent_generators(g, levi)
    G = form.gram
    for gen in generators:
        hit = first_nonzero(skew_residual(gen.matrix, G))
        if hit is not None:
            a, b, value = hit
            witness = dict(gen.to_dict(), a=g.labels[a], b=g.labels[b], value=value)
            return NilInvarianceResult(NilVerdict.FAILS, len(generators), witness)
    if levi.radical.is_abelian or is_invariant(g, form).holds:
        return NilInvarianceResult(NilVerdict.HOLDS, len(generators))
    return NilInvarianceResult(
        NilVerdict.HOLDS_FOR_GENERATORS, len(generators), caveat=GENERATOR_CAVEAT
    )


def analyze(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: Optional[LeviDecomposition] = None,
) -> FormAnalysis:
    """
    Полный анализ формы.

    Raises:
        DimensionError: Если размерности формы и алгебры не совпадают
    """
    _check_dims(g, form)
    levi = levi or levi_subalgebra(g)
    kernel = form.kernel()
    sig = form.signature()
    invariant = is_invariant(g, form)
    if invariant.holds:
        nil = NilInvarianceResult(NilVerdict.HOLDS, 0)
    else:
        nil = is_nil_invariant(g, form, levi)
    kernel_ideal = largest_ideal_in(g, kernel)
    return FormAnalysis(
        kernel=kernel,
        signature=sig,
        relative_index=sig[1],
        invariant=invariant,
        nil_invariant=nil,
        effective=kernel_ideal.dim == 0,
        kernel_ideal=kernel_ideal,
        kernel_invariant=is_invariant(g, form, kernel),
    )


# ---------------------------------------------------------------------------
# Пространства форм
# ---------------------------------------------------------------------------

def _sparse_entries(phi: np.ndarray) -> List[Tuple[int, int, object]]:
    return [(k, j, v) for (k, j), v in np.ndenumerate(phi) if v != 0]


def _pair_index(dim: int) -> Dict[Tuple[int, int], int]:
    """Нумерация пар i ≤ j: координаты симметричной формы."""
    pairs = [(i, j) for i in range(dim) for j in range(i, dim)]
    return {pair: index for index, pair in enumerate(pairs)}


def _skew_operator(phi: np.ndarray, pairs: Dict[Tuple[int, int], int]) -> DomainMatrix:
    """
    Линейное отображение G ↦ (φᵀG + Gφ) в координатах пар i ≤ j.

    Для φ[k][c] = v невязка в паре (a, c), a ≤ c, получает v·G[a][k],
    а в паре (c, b), b ≥ c, получает v·G[b][k].
    """
    dim = phi.shape[0]
    m = len(pairs)
    dod: Dict[int, Dict[int, object]] = {}

    def put(row: Tuple[int, int], col: Tuple[int, int], value) -> None:
        r = pairs[row]
        c = pairs[(min(col), max(col))]
        entries = dod.setdefault(r, {})
        entries[c] = entries.get(c, QQ(0)) + value

    for k, c, v in _sparse_entries(phi):
        value = to_qq(v)
        for a in range(c + 1):
            put((a, c), (a, k), value)
        for b in range(c, dim):
            put((c, b), (b, k), value)
    dod = {r: {c: v for c, v in row.items() if v} for r, row in dod.items()}
    return DomainMatrix.from_dod(dod, (m, m), QQ)


def invariant_form_space(dim: int, maps: Sequence[np.ndarray]) -> List[np.ndarray]:
    """
    Базис пространства симметричных форм, относительно которых все
    отображения из maps кососимметричны.

    Неизвестные - элементы G[i][j], i ≤ j. Пространство решений
    сужается последовательно: для каждого φ ядро L_φ·Bᵀ задает
    комбинации текущего базиса B, после чего B приводится к RREF.
    """
    pairs = _pair_index(dim)
    m = len(pairs)
    basis = DomainMatrix.eye(m, QQ).to_sparse()
    for step, phi in enumerate(maps):
        if basis.shape[0] == 0:
            break
        L = _skew_operator(np.asarray(phi, dtype=object), pairs)
        if L.is_zero_matrix:
            continue
        A = L * basis.transpose()
        if A.is_zero_matrix:
            continue
        combos = domain_nullspace(A)
        if combos.shape[0] == basis.shape[0]:
            continue
        if combos.shape[0] == 0:
            basis = DomainMatrix.zeros((0, m), QQ).to_sparse()
            break
        reduced, pivots = (combos * basis).rref()
        basis = reduced[: len(pivots), :]
        logger.debug("Формы: шаг %d, размерность %d", step, basis.shape[0])
    result = []
    coords = from_domain_matrix(basis) if basis.shape[0] else zeros(0, m)
    for row in coords:
        G = zeros(dim, dim)
        for (i, j), index in pairs.items():
            G[i, j] = row[index]
            G[j, i] = row[index]
        result.append(G)
    return result


def nil_invariant_form_space(
    g: LieAlgebra,
    levi: Optional[LeviDecomposition] = None,
    generators: Optional[Sequence[NilpotentGenerator]] = None,
) -> List[np.ndarray]:
    """Базис пространства форм, кососимметризуемых всеми генераторами N(g)."""
    levi = levi or levi_subalgebra(g)
    generators = list(generators) if generators is not None else nilpotent_generators(g, levi)
    order = {"radical": 0, "noncompact": 1, "jordan": 2}
    generators.sort(key=lambda gen: order.get(gen.kind, 3))
    return invariant_form_space(g.dim, [gen.matrix for gen in generators])


def skew_pairing_space(algebra_dim: int, module_actions: Sequence[np.ndarray]) -> List[np.ndarray]:
    """
    Кососимметричные спаривания L × V → Q: P(x, y·v) = -P(y, x·v).

    Args:
        algebra_dim: Размерность L
        module_actions: Матрицы действия базисных элементов L на V

    Returns:
        Базис решений - матрицы P размера dim L × dim V
    """
    n = algebra_dim
    d = module_actions[0].shape[0] if module_actions else 0
    rows = []
    for x in range(n):
        for y in range(x, n):
            for v in range(d):
                row = zero_vector(n * d)
                for k in range(d):
                    row[x * d + k] += module_actions[y][k, v]
                    row[y * d + k] += module_actions[x][k, v]
                if any(row):
                    rows.append(row)
    if not rows:
        identity_rows = nullspace(zeros(0, n * d), n * d)
        return [r.reshape(n, d) for r in identity_rows]
    return [r.reshape(n, d) for r in nullspace(np.array(rows, dtype=object))]


# ---------------------------------------------------------------------------
# Структурные следствия
# ---------------------------------------------------------------------------

def _pairing_witness(form: SymBilinearForm, left: Subspace, right: Subspace) -> Optional[dict]:
    hit = first_nonzero(form.pairing_matrix(left, right))
    if hit is None:
        return None
    a, b, value = hit
    return {"u": vector_witness(left.basis[a]), "w": vector_witness(right.basis[b]), "value": value}


def _containment_witness(outer: Subspace, inner: Subspace) -> Optional[dict]:
    for row in inner.basis:
        if not outer.contains_vector(row):
            return {"vector": vector_witness(row)}
    return None


def _require(
    name: str,
    statement: str,
    analysis: FormAnalysis,
    *,
    effective: bool = False,
    kernel_invariant: bool = False,
) -> Optional[Certificate]:
    """Проверка предпосылок; возвращает неприменимый сертификат, если они нарушены."""
    if analysis.nil_invariant.verdict is not NilVerdict.HOLDS:
        return Certificate.not_applicable(
            name, statement, f"нильинвариантность: {analysis.nil_invariant.verdict.value}"
        )
    if effective and not analysis.effective:
        return Certificate.not_applicable(name, statement, "ядро формы содержит ненулевой идеал")
    if kernel_invariant and not analysis.kernel_invariant.holds:
        return Certificate.not_applicable(name, statement, "форма не инвариантна относительно G⊥")
    return None


def orthogonality_relations_check(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """S ⊥ [K, g] и K ⊥ [S, g]."""
    name, statement = "orthogonality_relations", "S ⊥ [K,g] and K ⊥ [S,g]"
    analysis = analysis or analyze(g, form, levi)
    blocked = _require(name, statement, analysis)
    if blocked:
        return blocked
    K = levi.compact_part.space
    S = levi.noncompact_part.space
    whole = g.whole()
    cert = Certificate(name=name, statement=statement)
    for clause, left, right in (
        ("S_perp_K_g", S, bracket_space(g, K, whole)),
        ("K_perp_S_g", K, bracket_space(g, S, whole)),
    ):
        witness = _pairing_witness(form, left, right)
        cert.add(clause, "S ⊥ [K,g]" if clause.startswith("S") else "K ⊥ [S,g]", witness is None, witness)
    return cert


def gs_invariance_check(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """
    (1) ограничение формы на g_s инвариантно относительно ad(g);
    (2) вся форма инвариантна относительно ad(g_s).
    """
    name, statement = "gs_invariance", "form|g_s is ad(g)-invariant and form is ad(g_s)-invariant"
    analysis = analysis or analyze(g, form, levi)
    blocked = _require(name, statement, analysis)
    if blocked:
        return blocked
    gs = levi.gs.space
    G = form.gram
    witness = None
    if gs.dim:
        for i in range(g.dim):
            block = mat_mul(gs.basis, skew_residual(g.ad_basis[i], G), gs.basis.T)
            hit = first_nonzero(block)
            if hit is not None:
                a, b, value = hit
                witness = {
                    "x": g.labels[i],
                    "a": vector_witness(gs.basis[a]),
                    "b": vector_witness(gs.basis[b]),
                    "value": value,
                }
                break
    cert = Certificate(name=name, statement=statement)
    cert.add("restriction_to_gs_invariant", "<[x,a],b> + <a,[x,b]> = 0, x ∈ g, a,b ∈ g_s", witness is None, witness)
    full = is_invariant(g, form, gs)
    cert.add("form_gs_invariant", "<[x,a],b> + <a,[x,b]> = 0, x ∈ g_s", full.holds, full.witness)
    return cert


def kernel_location_check(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """G⊥ ⊆ K ⋉ Z(g_s) и [G⊥, g_s] ⊆ Z(g_s) ∩ G⊥."""
    name, statement = "kernel_location", "G⊥ ⊆ K⋉Z(g_s) and [G⊥,g_s] ⊆ Z(g_s)∩G⊥"
    analysis = analysis or analyze(g, form, levi)
    blocked = _require(name, statement, analysis, effective=True)
    if blocked:
        return blocked
    kernel = analysis.kernel
    gs = levi.gs.space
    z = center(g, gs)
    cert = Certificate(name=name, statement=statement)
    outer = levi.compact_part.space + z
    cert.add("kernel_in_K_Zgs", "G⊥ ⊆ K⋉Z(g_s)", outer.contains(kernel), _containment_witness(outer, kernel))
    target = z.intersect(kernel)
    commutator = bracket_space(g, kernel, gs)
    cert.add(
        "kernel_gs_commutator",
        "[G⊥,g_s] ⊆ Z(g_s)∩G⊥",
        target.contains(commutator),
        _containment_witness(target, commutator),
    )
    return cert


def gperp_invariance_consequence(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """Если форма G⊥-инвариантна, то [G⊥, g_s] = 0."""
    name, statement = "kernel_centralizes_gs", "[G⊥,g_s] = 0"
    analysis = analysis or analyze(g, form, levi)
    blocked = _require(name, statement, analysis, effective=True, kernel_invariant=True)
    if blocked:
        return blocked
    commutator = bracket_space(g, analysis.kernel, levi.gs.space)
    witness = {"vector": vector_witness(commutator.basis[0])} if commutator.dim else None
    return Certificate(name=name, statement=statement).add(
        "kernel_gs_bracket_zero", statement, commutator.dim == 0, witness
    )


def kernel_commutator_check(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """При G⊥-инвариантности: [[K, G⊥], g_s] ⊆ G⊥ ∩ g_s."""
    name, statement = "kernel_commutator", "[[K,G⊥],g_s] ⊆ G⊥∩g_s"
    analysis = analysis or analyze(g, form, levi)
    blocked = _require(name, statement, analysis, effective=True, kernel_invariant=True)
    if blocked:
        return blocked
    gs = levi.gs.space
    inner = bracket_space(g, bracket_space(g, levi.compact_part.space, analysis.kernel), gs)
    outer = analysis.kernel.intersect(gs)
    return Certificate(name=name, statement=statement).add(
        "double_commutator_in_kernel", statement, outer.contains(inner), _containment_witness(outer, inner)
    )


def project_along(vectors: np.ndarray, target: Subspace, complement: Subspace) -> Subspace:
    """Проекция векторов на target вдоль complement (target ⊕ complement = все пространство)."""
    n = target.ambient_dim
    if target.dim == 0 or len(vectors) == 0:
        return Subspace.zero(n)
    frame = np.concatenate([target.basis, complement.basis])
    coords = np.asarray(vectors, dtype=object) @ inverse(frame)
    return Subspace.span(coords[:, : target.dim] @ target.basis, n)


def generated_ideal_check(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """
    K0 - подалгебра, порожденная проекцией G⊥ на K; подалгебра,
    порожденная m = K0 + [K, K0], является идеалом K.
    """
    name, statement = "generated_ideal", "subalgebra generated by K0+[K,K0] is an ideal of K"
    analysis = analysis or analyze(g, form, levi)
    K = levi.compact_part.space
    cert = Certificate(name=name, statement=statement)
    projected = project_along(analysis.kernel.basis, K, levi.gs.space)
    k0 = subalgebra_generated(g, projected)
    m = k0 + bracket_space(g, K, k0)
    q = subalgebra_generated(g, m)
    brackets = bracket_space(g, K, q)
    cert.add("Q_is_ideal_of_K", "[K,Q] ⊆ Q", q.contains(brackets), _containment_witness(q, brackets))
    return cert


def index2_structure_check(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: Optional[FormAnalysis] = None,
) -> Certificate:
    """Структура при относительном индексе ℓ ≤ 2."""
    name, statement = "index_le_2_structure", "relative index ≤ 2 ⇒ g = K×S×R with kernel and orthogonality clauses"
    analysis = analysis or analyze(g, form, levi)
    blocked = _require(name, statement, analysis, effective=True)
    if blocked:
        return blocked
    if analysis.relative_index > 2:
        return Certificate.not_applicable(name, statement, f"относительный индекс {analysis.relative_index} > 2")
    K = levi.compact_part.space
    S = levi.noncompact_part.space
    R = levi.radical.space
    kernel = analysis.kernel
    cert = Certificate(name=name, statement=statement)
    kr = bracket_space(g, K, R)
    sr = bracket_space(g, S, R)
    cert.add(
        "direct_product_of_ideals",
        "[K,R] = [S,R] = 0",
        kr.dim == 0 and sr.dim == 0,
        {"dim_KR": kr.dim, "dim_SR": sr.dim},
    )
    outer = K + center(g, R)
    cert.add("kernel_in_K_ZR", "G⊥ ⊆ K×Z(R)", outer.contains(kernel), _containment_witness(outer, kernel))
    meet = kernel.intersect(R)
    cert.add(
        "kernel_meets_R_trivially",
        "G⊥∩R = 0",
        meet.dim == 0,
        {"vector": vector_witness(meet.basis[0])} if meet.dim else None,
    )
    witness = _pairing_witness(form, S, K + R)
    cert.add("S_perp_KR", "S ⊥ (K×R)", witness is None, witness)
    witness = _pairing_witness(form, K, bracket_space(g, R, R))
    cert.add("K_perp_RR", "K ⊥ [R,R]", witness is None, witness)
    return cert


def structure_certificates(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: LeviDecomposition,
    analysis: FormAnalysis,
) -> Dict[str, Certificate]:
    """Все применимые структурные проверки для analyze."""
    checks = (
        orthogonality_relations_check,
        gs_invariance_check,
        kernel_location_check,
        gperp_invariance_consequence,
        kernel_commutator_check,
        generated_ideal_check,
        index2_structure_check,
    )
    result = {}
    for check in checks:
        cert = check(g, form, levi, analysis)
        result[cert.name] = cert
    return result


__all__ = [
    "NilVerdict",
    "NilpotentGenerator",
    "InvarianceResult",
    "NilInvarianceResult",
    "FormAnalysis",
    "SymBilinearForm",
    "killing_form",
    "skew_residual",
    "is_invariant",
    "nilpotent_generators",
    "is_nil_invariant",
    "analyze",
    "invariant_form_space",
    "nil_invariant_form_space",
    "skew_pairing_space",
    "orthogonality_relations_check",
    "gs_invariance_check",
    "kernel_location_check",
    "gperp_invariance_consequence",
    "kernel_commutator_check",
    "generated_ideal_check",
    "index2_structure_check",
    "structure_certificates",
    "project_along",
]
