"""
Команды nilform: анализ, разложение, аудит стабилизатора, проверочные прогоны и галерея.

Каждая команда возвращает Pydantic модель Report (или документ для `gallery NAME`)
и сообщает о проблемах через иерархию NilformError.
"""

import logging
from typing import Iterable, List, Optional, Union

import numpy as np

from ..config import settings
from ..core.decompose import (
    ShapeError,
    abelian_radical_decompose,
    euclidean_type_analyze,
    stabilizer_audit,
    verify_metric_cotangent,
)
from ..core.gallery import (
    build_euclidean,
    build_so3,
    build_so3_irrep,
    build_so3_module,
    e3_dual_pairing,
    get_entry,
    intertwiner_space,
    list_entries,
)
from ..core.lie import NotSubalgebraError, levi_subalgebra
from ..core.linalg import Subspace, SymBilinearForm, inverse, matrix_to_strings, rank
from ..core.metric import (
    analyze,
    is_invariant,
    nil_invariant_form_space,
    skew_pairing_space,
    structure_certificates,
)
from .documents import ParsedDocument, entry_to_document, gallery_entry
from .errors import HypothesisViolationError, InvalidInputError
from .schemas import AlgebraDocument, GalleryListing, Report

logger = logging.getLogger(__name__)

AUDIT_TARGETS = ("annotation", "radical", "levi")


def _require_form(doc: ParsedDocument) -> SymBilinearForm:
    if doc.form is None:
        raise HypothesisViolationError("Документ не содержит формы", ["form-missing"])
    return doc.form


def _seed(seed: Optional[int]) -> int:
    return settings.DEFAULT_SEED if seed is None else seed


def _check_range(values: Iterable[int], low: int, high: int, flag: str) -> List[int]:
    values = list(values)
    if not values:
        raise InvalidInputError(f"{flag}: пустой список")
    for value in values:
        if not low <= value <= high:
            raise InvalidInputError(f"{flag} = {value} вне диапазона {low}..{high}")
    return values


# ---------------------------------------------------------------------------
# Анализ и разложение
# ---------------------------------------------------------------------------

def cmd_analyze(doc: ParsedDocument, command: str = "analyze", seed: Optional[int] = None) -> Report:
    """
    Анализ формы: ядро, сигнатура, инвариантность, нильинвариантность
    и все применимые структурные сертификаты.

    Raises:
        HypothesisViolationError: Если в документе нет формы
    """
    form = _require_form(doc)
    g = doc.algebra
    levi = levi_subalgebra(g, _seed(seed))
    analysis = analyze(g, form, levi)
    certificates = structure_certificates(g, form, levi, analysis)

    results = {
        "levi": levi.fingerprint(),
        "analysis": analysis.to_dict(),
        "certificates": {name: cert.model_dump() for name, cert in certificates.items()},
    }
    if levi.radical.dim and levi.compact_part.dim and not levi.noncompact_part.dim and levi.radical.is_abelian:
        results["euclidean_type"] = euclidean_type_analyze(g, form, levi, analysis).to_dict()

    failed = [name for name, cert in certificates.items() if cert.applicable and cert.holds is False]
    verdicts = {
        "invariant": analysis.invariant.holds,
        "nil_invariant": analysis.nil_invariant.verdict.value,
        "effective": analysis.effective,
        "certificates": {name: cert.holds for name, cert in certificates.items()},
    }
    sig = analysis.signature
    summary = (
        f"{g.name or 'g'}: dim {g.dim}, сигнатура ({sig[0]},{sig[1]},{sig[2]}), "
        f"ℓ = {analysis.relative_index}, нильинвариантность: {analysis.nil_invariant.verdict.value}"
    )
    if failed:
        logger.error("Нарушены сертификаты: %s", ", ".join(failed))
        summary += f"; КОНТРПРИМЕР: {', '.join(failed)}"
    return Report(
        command=command,
        input_digest=doc.digest,
        results=results,
        verdicts=verdicts,
        summary=summary,
        counterexample=bool(failed),
    )


def cmd_decompose(doc: ParsedDocument, command: str = "decompose", seed: Optional[int] = None) -> Report:
    """
    Разложение g = G1 × G2 × G3 в ортогональное произведение идеалов.

    Raises:
        HypothesisViolationError: Нет формы, неабелев радикал, форма не
            нильинвариантна или ядро содержит ненулевой идеал
    """
    form = _require_form(doc)
    g = doc.algebra
    levi = levi_subalgebra(g, _seed(seed))
    report = abelian_radical_decompose(g, form, levi)
    if not report.applicable:
        raise HypothesisViolationError(
            f"Разложение неприменимо: {', '.join(report.violations)}", report.violations
        )

    results = {"decomposition": report.to_dict()}
    counterexample = not report.certificate.holds
    if report.cotangent is not None and report.cotangent.holds is False:
        counterexample = True

    s1 = doc.annotations.get("cotangent_s1")
    b = doc.annotations.get("cotangent_b")
    annotated = None
    if s1 is not None and b is not None:
        annotated = verify_metric_cotangent(g, form, s1, b)
        results["annotated_cotangent"] = annotated.model_dump()

    fingerprints = report.fingerprints
    verdicts = {
        "orthogonal_product": report.certificate.holds,
        "cotangent": report.cotangent.holds if report.cotangent else None,
        "annotated_cotangent": annotated.holds if annotated else None,
    }
    summary = "G1 × G2 × G3: dim " + " + ".join(str(fingerprints[key]["dim"]) for key in ("G1", "G2", "G3"))
    if counterexample:
        summary += "; КОНТРПРИМЕР: " + ", ".join(report.certificate.failed())
    return Report(
        command=command,
        input_digest=doc.digest,
        results=results,
        verdicts=verdicts,
        summary=summary,
        counterexample=counterexample,
    )


def cmd_audit_stabilizer(
    doc: ParsedDocument,
    command: str = "audit-stabilizer",
    seed: Optional[int] = None,
    target: str = "annotation",
) -> Report:
    """
    Аудит подалгебры h ⊆ K ⋉ R.

    Args:
        doc: Документ
        command: Эхо команды
        seed: Зерно разложения Леви
        target: annotation (h из разметки stabilizer), radical или levi

    Raises:
        InvalidInputError: Нет разметки stabilizer или h не подалгебра
        HypothesisViolationError: Алгебра не имеет вида K ⋉ R
    """
    if target not in AUDIT_TARGETS:
        raise InvalidInputError(f"неизвестная цель аудита: {target}")
    g = doc.algebra
    levi = levi_subalgebra(g, _seed(seed))
    center_part = None
    if target == "annotation":
        if "stabilizer" not in doc.annotations:
            raise InvalidInputError("В документе нет разметки annotations.stabilizer")
        h = doc.annotations["stabilizer"]
        center_part = doc.annotations.get("center_part")
    elif target == "radical":
        h = levi.radical.space
    else:
        h = levi.levi.space

    try:
        audit = stabilizer_audit(g, h, center_part, levi)
    except ShapeError as e:
        raise HypothesisViolationError(str(e), ["not-compact-semidirect"])
    except NotSubalgebraError as e:
        raise InvalidInputError(str(e))

    failed = audit.failed()
    summary = f"h: dim {h.dim}, h ∩ k: dim {audit.h_cap_k.dim}; "
    summary += "все флаги выполнены" if audit.all_hold else f"не выполнены: {', '.join(failed) or 'флаги графа не определены'}"
    return Report(
        command=command,
        input_digest=doc.digest,
        results={"target": target, "audit": audit.to_dict()},
        verdicts={"flags": dict(audit.flags), "all_hold": audit.all_hold},
        summary=summary,
    )


# ---------------------------------------------------------------------------
# Проверочные прогоны
# ---------------------------------------------------------------------------

def _ideal_in_every_kernel(solutions: List[np.ndarray], ideal: Subspace) -> bool:
    return all(not any((Q @ ideal.basis.T).flat) for Q in solutions) if ideal.dim else True


def _spans(solutions: List[np.ndarray], gram: np.ndarray) -> bool:
    n = gram.shape[0]
    if not solutions:
        return not any(gram.flat)
    flat = Subspace.span([Q.reshape(-1) for Q in solutions], n * n)
    return flat.contains_vector(np.asarray(gram, dtype=object).reshape(-1))


def verify_euclidean_case(n: int, seed: int, with_basis: bool = False) -> dict:
    """Пространство нильинвариантных форм E_n и включение R^n в ядро."""
    g = build_euclidean(n)
    levi = levi_subalgebra(g, seed)
    solutions = nil_invariant_form_space(g, levi)
    translations = Subspace.span(np.eye(g.dim, dtype=int)[g.dim - n:], g.dim)
    contained = _ideal_in_every_kernel(solutions, translations)
    case = {
        "n": n,
        "dim": g.dim,
        "solution_dim": len(solutions),
        "radical_in_every_kernel": contained,
        "exception": not contained,
    }
    if n == 3:
        gram = e3_dual_pairing()
        form = SymBilinearForm(gram)
        case["witness"] = {
            "gram": matrix_to_strings(gram),
            "in_solution_space": _spans(solutions, gram),
            "nondegenerate": form.is_nondegenerate(),
            "invariant": is_invariant(g, form).holds,
        }
    if with_basis:
        case["basis"] = [matrix_to_strings(Q) for Q in solutions]
    logger.debug("E%d: dim решений %d, R^n в ядре: %s", n, len(solutions), contained)
    return case


def cmd_verify_euclidean(
    n_list: Iterable[int],
    command: str = "verify euclidean",
    seed: Optional[int] = None,
    with_basis: bool = False,
) -> Report:
    """
    Для каждого n решает систему кососимметричности на E_n = so(n) ⋉ R^n
    и проверяет, что R^n лежит в ядре каждого решения (кроме n = 1, 3).

    Raises:
        InvalidInputError: n вне диапазона 1..MAX_EUCLIDEAN_N
    """
    n_list = _check_range(n_list, 1, settings.MAX_EUCLIDEAN_N, "--n")
    cases = [verify_euclidean_case(n, _seed(seed), with_basis) for n in n_list]
    contradictions = [c["n"] for c in cases if c["n"] not in (1, 3) and not c["radical_in_every_kernel"]]
    witness_broken = [
        c["n"] for c in cases
        if "witness" in c and not all(c["witness"][key] for key in ("in_solution_space", "nondegenerate", "invariant"))
    ]
    verdicts = {
        f"E{c['n']}": "exception" if c["exception"] else "radical-in-kernel" for c in cases
    }
    summary = "; ".join(f"E{c['n']}: dim {c['solution_dim']}, {verdicts[f'E' + str(c['n'])]}" for c in cases)
    if contradictions or witness_broken:
        summary += f"; КОНТРПРИМЕР: n = {sorted(set(contradictions + witness_broken))}"
    return Report(
        command=command,
        results={"cases": cases},
        verdicts=verdicts,
        summary=summary,
        counterexample=bool(contradictions or witness_broken),
    )


def adjoint_killing_pairing() -> np.ndarray:
    """
    Спаривание so3 × V3, индуцированное формой Киллинга через сплетающий
    оператор T: so3 → V3 (T·ad = ρ·T): P = κ · T⁻¹.
    """
    so3 = build_so3()
    adjoint = [np.array(so3.ad_basis[i], dtype=object) for i in range(3)]
    intertwiners = intertwiner_space(adjoint, build_so3_irrep(1))
    T = intertwiners[0]
    return np.array(so3.killing_matrix(), dtype=object) @ inverse(T)


def cmd_verify_skewpairing(l_list: Iterable[int], command: str = "verify skew-pairing") -> Report:
    """
    Размерности пространств кососимметричных спариваний so3 × V_{2l+1} → Q;
    при l = 1 решение пропорционально спариванию Киллинга.

    Raises:
        InvalidInputError: l вне диапазона 0..MAX_IRREP_L
    """
    l_list = _check_range(l_list, 0, settings.MAX_IRREP_L, "--l")
    cases = []
    contradictions = []
    for l in l_list:
        solutions = skew_pairing_space(3, build_so3_irrep(l))
        case = {"l": l, "module_dim": 2 * l + 1, "solution_dim": len(solutions)}
        if l == 1:
            killing = adjoint_killing_pairing()
            stacked = np.array([P.reshape(-1) for P in solutions] + [killing.reshape(-1)], dtype=object)
            case["proportional_to_killing"] = len(solutions) == 1 and rank(stacked) == 1
            if not case["proportional_to_killing"]:
                contradictions.append(l)
        elif l >= 2 and solutions:
            contradictions.append(l)
        cases.append(case)
    verdicts = {f"l={c['l']}": c["solution_dim"] for c in cases}
    summary = ", ".join(f"l={c['l']}: dim {c['solution_dim']}" for c in cases)
    if contradictions:
        summary += f"; КОНТРПРИМЕР: l = {contradictions}"
    return Report(
        command=command,
        results={"cases": cases},
        verdicts=verdicts,
        summary=summary,
        counterexample=bool(contradictions),
    )


def cmd_verify_so3_module(
    l_list: Iterable[int], command: str = "verify so3-module", seed: Optional[int] = None
) -> Report:
    """
    Нильинвариантные формы на so3 ⋉ V_{2l+1}: лежит ли V в ядре каждого решения.
    Для l ≥ 2 ожидается да, l = 1 допускает дуальное спаривание, l = 0 - тривиальный модуль.

    Raises:
        InvalidInputError: l вне диапазона 0..MAX_IRREP_L
    """
    l_list = _check_range(l_list, 0, settings.MAX_IRREP_L, "--l")
    cases = []
    for l in l_list:
        g = build_so3_module(l)
        levi = levi_subalgebra(g, _seed(seed))
        solutions = nil_invariant_form_space(g, levi)
        cases.append({
            "l": l,
            "dim": g.dim,
            "solution_dim": len(solutions),
            "module_in_every_kernel": _ideal_in_every_kernel(solutions, levi.radical.space),
        })
    contradictions = [c["l"] for c in cases if c["l"] >= 2 and not c["module_in_every_kernel"]]
    verdicts = {f"l={c['l']}": c["module_in_every_kernel"] for c in cases}
    summary = ", ".join(
        f"l={c['l']}: dim {c['solution_dim']}, V в ядре: {'да' if c['module_in_every_kernel'] else 'нет'}"
        for c in cases
    )
    if contradictions:
        summary += f"; КОНТРПРИМЕР: l = {contradictions}"
    return Report(
        command=command,
        results={"cases": cases},
        verdicts=verdicts,
        summary=summary,
        counterexample=bool(contradictions),
    )


# ---------------------------------------------------------------------------
# Галерея
# ---------------------------------------------------------------------------

def cmd_gallery(name: str, command: str = "gallery") -> Union[AlgebraDocument, Report]:
    """
    `gallery list` - перечень записей, `gallery NAME` - документ записи.

    Raises:
        UnknownGalleryEntryError: Если имя неизвестно
    """
    if name == "list":
        listing = []
        for entry_name in list_entries():
            entry = get_entry(entry_name)
            listing.append(
                GalleryListing(
                    name=entry.name,
                    description=entry.description,
                    dim=entry.algebra.dim,
                    has_form=entry.form is not None,
                ).model_dump()
            )
        return Report(
            command=command,
            results={"entries": listing},
            summary=f"{len(listing)} записей",
        )
    return entry_to_document(gallery_entry(name))


__all__ = [
    "AUDIT_TARGETS",
    "cmd_analyze",
    "cmd_decompose",
    "cmd_audit_stabilizer",
    "cmd_verify_euclidean",
    "cmd_verify_skewpairing",
    "cmd_verify_so3_module",
    "cmd_gallery",
    "verify_euclidean_case",
    "adjoint_killing_pairing",
]
