"""
Разложение нильинвариантных метрических алгебр Ли с абелевым радикалом
в ортогональное прямое произведение идеалов G1 × G2 × G3, проверка
метрической кокасательной структуры, анализ алгебр евклидова типа и
аудит подалгебр стабилизаторов.

Нарушения гипотез возвращаются как именованные результаты, а не исключения.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .certificates import Certificate, first_nonzero, vector_witness
from .linalg import ONE, Subspace, SymBilinearForm, rank, signature, solve_linear, zero_vector, zeros
from .lie import (
    LeviDecomposition,
    LieAlgebra,
    NotSubalgebraError,
    SubalgebraHandle,
    bracket_space,
    centralizer,
    is_ideal,
    is_subalgebra,
    levi_subalgebra,
)
from .metric import (
    FormAnalysis,
    NilVerdict,
    analyze,
    skew_residual,
)

logger = logging.getLogger(__name__)


class ShapeError(ValueError):
    """Алгебра не имеет формы K ⋉ R с компактным K и абелевым R."""


# ---------------------------------------------------------------------------
# Вспомогательные функции
# ---------------------------------------------------------------------------

def restricted_invariance_witness(
    g: LieAlgebra, form: SymBilinearForm, space: Subspace
) -> Optional[dict]:
    """Первое нарушение <[x,a],b> + <a,[x,b]> = 0 для x, a, b из space."""
    G = form.gram
    for x in space.basis:
        block = space.basis @ skew_residual(g.ad(x), G) @ space.basis.T
        hit = first_nonzero(block)
        if hit is not None:
            a, b, value = hit
            return {
                "x": vector_witness(x),
                "a": vector_witness(space.basis[a]),
                "b": vector_witness(space.basis[b]),
                "value": value,
            }
    return None


def killing_orthogonal_in(g: LieAlgebra, ideal: Subspace, part: Subspace) -> Subspace:
    """Ортогональное дополнение part внутри ideal по форме Киллинга самого ideal."""
    if ideal.dim == 0:
        return ideal
    if part.dim == 0:
        return ideal
    local = g.restrict(ideal)
    coords = np.array([ideal.coordinates(v) for v in part.basis], dtype=object).reshape(part.dim, ideal.dim)
    local_complement = Subspace.kernel(coords @ local.killing_matrix())
    return Subspace.span(local_complement.basis @ ideal.basis, g.dim)


def factor_fingerprint(g: LieAlgebra, space: Subspace) -> dict:
    """Базисно-независимый отпечаток фактора: размерность и сигнатура Киллинга."""
    if space.dim == 0:
        return {"dim": 0, "killing_signature": [0, 0, 0]}
    local = g.restrict(space)
    return {"dim": space.dim, "killing_signature": list(signature(local.killing_matrix()))}


def _space_dict(space: Subspace) -> dict:
    return {"dim": space.dim, "basis": space.to_strings()}


def _split(vector: np.ndarray, first: Subspace, second: Subspace) -> Tuple[np.ndarray, np.ndarray]:
    """Разложение вектора из first ⊕ second на компоненты."""
    frame = np.concatenate([first.basis, second.basis])
    solution = solve_linear(frame.T, vector)
    if solution is None:
        raise ValueError("вектор не лежит в сумме подпространств")
    c = solution.particular
    return c[: first.dim] @ first.basis, c[first.dim:] @ second.basis


# ---------------------------------------------------------------------------
# Разложение G1 × G2 × G3
# ---------------------------------------------------------------------------

@dataclass
class DecompositionReport:
    """
    Отчет разложения. При нарушенных предпосылках applicable = False,
    а violations перечисляет нарушенные гипотезы.
    """

    applicable: bool
    violations: List[str] = field(default_factory=list)
    A: Optional[Subspace] = None
    B: Optional[Subspace] = None
    C: Optional[Subspace] = None
    S0: Optional[SubalgebraHandle] = None
    S1: Optional[SubalgebraHandle] = None
    G1: Optional[SubalgebraHandle] = None
    G2: Optional[SubalgebraHandle] = None
    G3: Optional[SubalgebraHandle] = None
    certificate: Optional[Certificate] = None
    cotangent: Optional[Certificate] = None
    fingerprints: Dict[str, dict] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.applicable and bool(self.certificate and self.certificate.holds)

    def to_dict(self) -> dict:
        result = {"applicable": self.applicable, "violations": list(self.violations)}
        if not self.applicable:
            return result
        for key in ("A", "B", "C"):
            result[key] = _space_dict(getattr(self, key))
        for key in ("S0", "S1", "G1", "G2", "G3"):
            result[key] = _space_dict(getattr(self, key).space)
        result["fingerprints"] = self.fingerprints
        result["certificate"] = self.certificate.model_dump()
        result["cotangent"] = self.cotangent.model_dump() if self.cotangent else None
        return result


def _preconditions(levi: LeviDecomposition, analysis: FormAnalysis) -> List[str]:
    violations = []
    if not levi.radical.is_abelian:
        violations.append("radical-not-abelian")
    if analysis.nil_invariant.verdict is not NilVerdict.HOLDS:
        violations.append("not-nil-invariant")
    if not analysis.effective:
        violations.append("kernel-contains-ideal")
    return violations


def abelian_radical_decompose(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: Optional[LeviDecomposition] = None,
    analysis: Optional[FormAnalysis] = None,
) -> DecompositionReport:
    """
    Ортогональное разложение g = G1 × G2 × G3.

    A = R^S, B = [S, R^K], C = [S,R] ∩ [K,R]; S0 - ядро действия S на B,
    S1 - его дополнение, ортогональное по Киллингу; G1 = K + A, G2 = S0,
    G3 = S1 + B.

    Args:
        g: Алгебра Ли
        form: Нильинвариантная форма
        levi: Готовое разложение Леви (иначе вычисляется)
        analysis: Готовый FormAnalysis (иначе вычисляется)

    Returns:
        DecompositionReport
    """
    levi = levi or levi_subalgebra(g)
    analysis = analysis or analyze(g, form, levi)
    violations = _preconditions(levi, analysis)
    if violations:
        logger.info("Разложение неприменимо: %s", "; ".join(violations))
        return DecompositionReport(applicable=False, violations=violations)

    R = levi.radical.space
    K = levi.compact_part.space
    S = levi.noncompact_part.space
    A = R.intersect(centralizer(g, S))
    RK = R.intersect(centralizer(g, K))
    B = bracket_space(g, S, RK)
    C = bracket_space(g, S, R).intersect(bracket_space(g, K, R))
    S0 = S.intersect(centralizer(g, B))
    S1 = killing_orthogonal_in(g, S, S0)
    G1, G2, G3 = K + A, S0, S1 + B
    logger.debug("Разложение %s: dim G1=%d, G2=%d, G3=%d", g.name, G1.dim, G2.dim, G3.dim)

    cert = Certificate(name="orthogonal_product", statement="g = G1 × G2 × G3 orthogonal product of ideals")
    cert.add("C_zero", "[S,R] ∩ [K,R] = 0", C.dim == 0, {"dim": C.dim})
    total = G1 + G2 + G3
    cert.add(
        "direct_sum",
        "g = G1 ⊕ G2 ⊕ G3",
        total.is_whole() and G1.dim + G2.dim + G3.dim == g.dim,
        {"dims": [G1.dim, G2.dim, G3.dim], "sum_dim": total.dim},
    )
    for name, space in (("G1", G1), ("G2", G2), ("G3", G3)):
        cert.add(f"{name}_ideal", f"{name} is an ideal", is_ideal(g, space), {"dim": space.dim})
    for left_name, left, right_name, right in (("G1", G1, "G2", G2), ("G1", G1, "G3", G3), ("G2", G2, "G3", G3)):
        hit = first_nonzero(form.pairing_matrix(left, right))
        cert.add(f"{left_name}_perp_{right_name}", f"{left_name} ⊥ {right_name}", hit is None, hit)
    for name, space in (("G2", G2), ("G3", G3)):
        witness = restricted_invariance_witness(g, form, space)
        cert.add(f"{name}_invariant", f"form|{name} is invariant", witness is None, witness)
        restricted = form.restrict(space)
        cert.add(
            f"{name}_nondegenerate",
            f"form|{name} is nondegenerate",
            restricted.is_nondegenerate(),
            {"signature": list(restricted.signature())},
        )
    hit = first_nonzero(form.pairing_matrix(B, B))
    cert.add("B_isotropic", "B is totally isotropic", hit is None, hit)
    cert.add("dim_S1_eq_dim_B", "dim S1 = dim B", S1.dim == B.dim, {"dim_S1": S1.dim, "dim_B": B.dim})
    kernel = analysis.kernel
    outside = [vector_witness(v) for v in kernel.basis if not G1.contains_vector(v)]
    cert.add("kernel_in_G1", "G⊥ ⊆ G1", not outside, {"vector": outside[0]} if outside else None)

    cotangent = verify_metric_cotangent(g, form, S1, B) if G3.dim else None
    return DecompositionReport(
        applicable=True,
        A=A,
        B=B,
        C=C,
        S0=SubalgebraHandle.of(g, S0),
        S1=SubalgebraHandle.of(g, S1),
        G1=SubalgebraHandle.of(g, G1),
        G2=SubalgebraHandle.of(g, G2),
        G3=SubalgebraHandle.of(g, G3),
        certificate=cert,
        cotangent=cotangent,
        fingerprints={
            "G1": factor_fingerprint(g, G1),
            "G2": factor_fingerprint(g, G2),
            "G3": factor_fingerprint(g, G3),
        },
    )


def verify_metric_cotangent(
    g: LieAlgebra, form: SymBilinearForm, s1: Subspace, b: Subspace
) -> Certificate:
    """
    Проверяет, что s1 + b - метрическая кокасательная алгебра s1 ⋉ s1*.

    Пункты: b - абелев идеал в s1 + b, b вполне изотропно, форма на s1 + b
    инвариантна и невырождена, спаривание s1 × b невырождено и действие
    s1 на b совпадает с коприсоединенным: <[s,ξ],s'> = -<ξ,[s,s']>.
    """
    cert = Certificate(name="metric_cotangent", statement="S1 ⋉ B ≅ S1 ⋉ S1* with canonical pairing")
    g3 = s1 + b
    bb = bracket_space(g, b, b)
    cert.add("B_abelian", "[B,B] = 0", bb.dim == 0, {"dim": bb.dim})
    moved = bracket_space(g, g3, b)
    cert.add("B_ideal", "[S1+B,B] ⊆ B", b.contains(moved), {"dim": moved.dim})
    cert.add("G3_subalgebra", "S1+B is a subalgebra", is_subalgebra(g, g3), None)
    hit = first_nonzero(form.pairing_matrix(b, b))
    cert.add("B_isotropic", "B is totally isotropic", hit is None, hit)
    witness = restricted_invariance_witness(g, form, g3)
    cert.add("G3_invariant", "form|S1+B is invariant", witness is None, witness)
    restricted = form.restrict(g3)
    cert.add(
        "G3_nondegenerate",
        "form|S1+B is nondegenerate",
        restricted.is_nondegenerate(),
        {"signature": list(restricted.signature())},
    )
    pairing = form.pairing_matrix(s1, b)
    square = s1.dim == b.dim
    cert.add(
        "dual_pairing_nondegenerate",
        "S1 × B → Q is a perfect pairing",
        square and rank(pairing) == s1.dim,
        {"dim_S1": s1.dim, "dim_B": b.dim, "rank": rank(pairing) if pairing.size else 0},
    )
    G = form.gram
    coadjoint_witness = None
    for i, s in enumerate(s1.basis):
        ad_s = g.ad(s)
        # <[s,ξ], s'> + <ξ, [s,s']> по всем ξ ∈ B, s' ∈ S1
        block = b.basis @ skew_residual(ad_s, G) @ s1.basis.T
        hit = first_nonzero(block)
        if hit is not None:
            xi, t, value = hit
            coadjoint_witness = {
                "s": vector_witness(s),
                "xi": vector_witness(b.basis[xi]),
                "s_prime": vector_witness(s1.basis[t]),
                "value": value,
            }
            break
    cert.add("coadjoint_action", "<[s,ξ],s'> = -<ξ,[s,s']>", coadjoint_witness is None, coadjoint_witness)
    return cert


# ---------------------------------------------------------------------------
# Евклидов тип
# ---------------------------------------------------------------------------

@dataclass
class EuclideanTypeReport:
    """K0 = ker(K → gl(V)), расщепление радикала и включение ядра."""

    applicable: bool
    violations: List[str]
    K0: SubalgebraHandle
    V: Subspace
    invariant_part: Subspace
    moved_part: Subspace
    radical_splits: bool
    kernel_containment: Optional[bool]
    compact_embedding_obstructed: bool
    obstruction_witness: Optional[List[str]] = None

    @property
    def invariants_vanish(self) -> bool:
        return self.invariant_part.dim == 0

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "violations": list(self.violations),
            "K0": _space_dict(self.K0.space),
            "V": _space_dict(self.V),
            "invariant_part": _space_dict(self.invariant_part),
            "moved_part": _space_dict(self.moved_part),
            "radical_splits": self.radical_splits,
            "invariants_vanish": self.invariants_vanish,
            "kernel_containment": self.kernel_containment,
            "compact_embedding_obstructed": self.compact_embedding_obstructed,
            "obstruction_witness": self.obstruction_witness,
        }


def euclidean_type_analyze(
    g: LieAlgebra,
    form: SymBilinearForm,
    levi: Optional[LeviDecomposition] = None,
    analysis: Optional[FormAnalysis] = None,
) -> EuclideanTypeReport:
    """
    Анализ алгебры евклидова типа g = K ⋉ V.

    Включение G⊥ ⊆ K0 × V вычисляется всегда, но считается применимым
    только при нильинвариантной, G⊥-инвариантной и эффективной форме.

    Raises:
        ShapeError: Если S ≠ 0 или радикал неабелев
    """
    levi = levi or levi_subalgebra(g)
    if levi.noncompact_part.dim or not levi.radical.is_abelian:
        raise ShapeError("ожидается K ⋉ V с компактным K и абелевым V")
    analysis = analysis or analyze(g, form, levi)
    K = levi.compact_part.space
    V = levi.radical.space
    K0 = K.intersect(centralizer(g, V))
    invariant_part = V.intersect(centralizer(g, K))
    moved_part = bracket_space(g, K, V)
    splits = (invariant_part + moved_part) == V and invariant_part.intersect(moved_part).dim == 0

    violations = []
    if analysis.nil_invariant.verdict is not NilVerdict.HOLDS:
        violations.append("not-nil-invariant")
    if not analysis.kernel_invariant.holds:
        violations.append("not-kernel-invariant")
    if not analysis.effective:
        violations.append("kernel-contains-ideal")
    containment = (K0 + V).contains(analysis.kernel)

    witness = None
    for v in V.basis:
        if any(g.ad(v).flat):
            witness = vector_witness(v)
            break
    return EuclideanTypeReport(
        applicable=not violations,
        violations=violations,
        K0=SubalgebraHandle.of(g, K0),
        V=V,
        invariant_part=invariant_part,
        moved_part=moved_part,
        radical_splits=splits,
        kernel_containment=containment,
        compact_embedding_obstructed=witness is not None,
        obstruction_witness=witness,
    )


# ---------------------------------------------------------------------------
# Стабилизаторы
# ---------------------------------------------------------------------------

STABILIZER_FLAGS = (
    "commutator_in_k",
    "projects_onto_radical",
    "is_graph_split",
    "phi_is_homomorphism",
    "phi_injective_on_center_part",
    "phi_nontrivial",
    "graph_meets_compact_part_trivially",
    "phi_vanishes_on_radical_in_h",
)


@dataclass
class StabilizerAudit:
    """h ∩ k, отображение φ: r → k с графом E и флаги структуры h."""

    h_cap_k: Subspace
    graph_map: Optional[np.ndarray]
    graph: Optional[Subspace]
    flags: Dict[str, Optional[bool]]
    witnesses: Dict[str, object] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(self.flags.values())

    def failed(self) -> List[str]:
        return [name for name in STABILIZER_FLAGS if self.flags.get(name) is False]

    def to_dict(self) -> dict:
        return {
            "h_cap_k": _space_dict(self.h_cap_k),
            "graph_map": None if self.graph_map is None else [vector_witness(r) for r in self.graph_map],
            "graph": None if self.graph is None else _space_dict(self.graph),
            "flags": dict(self.flags),
            "witnesses": dict(self.witnesses),
        }


def stabilizer_audit(
    g: LieAlgebra,
    h: Subspace,
    center_part: Optional[Subspace] = None,
    levi: Optional[LeviDecomposition] = None,
) -> StabilizerAudit:
    """
    Аудит подалгебры h ⊆ g = K ⋉ R.

    φ(v) - K-компонента элемента h с R-компонентой v, приведенная
    в ортогональное по Киллингу дополнение к h ∩ k внутри K.

    Args:
        g: Алгебра вида K ⋉ R
        h: Подалгебра
        center_part: Выделенная часть A ⊆ R для проверки инъективности φ|A
        levi: Готовое разложение Леви

    Raises:
        NotSubalgebraError: Если h не замкнута относительно скобки
        ShapeError: Если g не имеет вида K ⋉ R
    """
    if not is_subalgebra(g, h):
        raise NotSubalgebraError("h не является подалгеброй")
    levi = levi or levi_subalgebra(g)
    if levi.noncompact_part.dim or not levi.radical.is_abelian:
        raise ShapeError("ожидается K ⋉ R с компактным K и абелевым R")
    K = levi.compact_part.space
    R = levi.radical.space
    A = center_part if center_part is not None else g.zero()
    flags: Dict[str, Optional[bool]] = {name: None for name in STABILIZER_FLAGS}
    witnesses: Dict[str, object] = {}

    h_cap_k = h.intersect(K)
    commutator = bracket_space(g, h, h)
    flags["commutator_in_k"] = h_cap_k.contains(commutator)
    if not flags["commutator_in_k"]:
        witnesses["commutator_in_k"] = next(
            vector_witness(v) for v in commutator.basis if not h_cap_k.contains_vector(v)
        )

    k_parts, r_parts = [], []
    for z in h.basis:
        kz, rz = _split(z, K, R)
        k_parts.append(kz)
        r_parts.append(rz)
    projected = Subspace.span(r_parts, g.dim) if r_parts else g.zero()
    flags["projects_onto_radical"] = projected == R
    if not flags["projects_onto_radical"]:
        witnesses["projects_onto_radical"] = {"dim_pR_h": projected.dim, "dim_R": R.dim}
        return StabilizerAudit(h_cap_k, None, None, flags, witnesses)

    killing = g.killing_matrix()
    reduced = K.intersect(Subspace.kernel(h_cap_k.basis @ killing)) if h_cap_k.dim else K
    r_coords = np.array([R.coordinates(v) for v in r_parts], dtype=object).reshape(len(r_parts), R.dim)
    k_rows = np.array(k_parts, dtype=object).reshape(len(k_parts), g.dim)
    phi = zeros(R.dim, g.dim)
    for j in range(R.dim):
        target = zero_vector(R.dim)
        target[j] = ONE
        solution = solve_linear(r_coords.T, target)
        raw = solution.particular @ k_rows
        phi[j] = _split(raw, reduced, h_cap_k)[0] if h_cap_k.dim else raw

    def phi_of(v: np.ndarray) -> np.ndarray:
        return R.coordinates(v) @ phi

    graph = Subspace.span([phi[j] + R.basis[j] for j in range(R.dim)], g.dim) if R.dim else g.zero()
    flags["is_graph_split"] = (h_cap_k + graph) == h and h.dim == h_cap_k.dim + graph.dim

    homomorphism = True
    for x in graph.basis:
        for y in graph.basis:
            kz, rz = _split(g.bracket(x, y), K, R)
            defect = kz - phi_of(rz)
            if not h_cap_k.contains_vector(defect):
                homomorphism = False
                witnesses["phi_is_homomorphism"] = {"x": vector_witness(x), "y": vector_witness(y)}
                break
        if not homomorphism:
            break
    flags["phi_is_homomorphism"] = homomorphism

    if A.dim:
        image = np.array([phi_of(a) for a in A.basis], dtype=object)
        flags["phi_injective_on_center_part"] = rank(image) == A.dim
    else:
        flags["phi_injective_on_center_part"] = True
    flags["phi_nontrivial"] = R.dim == 0 or any(phi.flat)
    flags["graph_meets_compact_part_trivially"] = h_cap_k.intersect(graph).dim == 0
    r_in_h = R.intersect(h)
    flags["phi_vanishes_on_radical_in_h"] = all(not any(phi_of(v)) for v in r_in_h.basis)
    logger.debug("Аудит стабилизатора: %s", flags)
    return StabilizerAudit(h_cap_k, phi, graph, flags, witnesses)


__all__ = [
    "ShapeError",
    "DecompositionReport",
    "EuclideanTypeReport",
    "StabilizerAudit",
    "STABILIZER_FLAGS",
    "abelian_radical_decompose",
    "verify_metric_cotangent",
    "euclidean_type_analyze",
    "stabilizer_audit",
    "killing_orthogonal_in",
    "factor_fingerprint",
    "restricted_invariance_witness",
]
