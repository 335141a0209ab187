#!/usr/bin/env python3
"""
Тесты разложения G1 × G2 × G3, кокасательной структуры, евклидова типа
и аудита стабилизаторов.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Добавляем путь к проекту
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from nilform.core.decompose import (
    STABILIZER_FLAGS,
    ShapeError,
    abelian_radical_decompose,
    euclidean_type_analyze,
    stabilizer_audit,
    verify_metric_cotangent,
)
from nilform.core.gallery import build_sl2, get_entry, random_instance
from nilform.core.lie import NotSubalgebraError, levi_subalgebra
from nilform.core.linalg import Subspace


@pytest.mark.parametrize("seed", range(50))
def test_mixed_three_factor_round_trip(seed):
    """Случайное произведение в случайном базисе раскладывается обратно."""
    instance = random_instance(seed, "mixed-three-factor")
    report = abelian_radical_decompose(instance.algebra, instance.form)
    assert report.applicable, report.violations
    assert report.certificate.holds, report.certificate.failed()
    for key in ("G1", "G2", "G3"):
        assert report.fingerprints[key] == instance.expected[key]
    if report.G3.dim:
        assert report.cotangent.holds, report.cotangent.failed()


@pytest.mark.parametrize("seed", range(10))
def test_cotangent_profile(seed):
    instance = random_instance(seed, "cotangent")
    g, form = instance.algebra, instance.form
    assert list(form.signature()) == instance.expected["signature"]
    cert = verify_metric_cotangent(g, form, instance.parts["cotangent_s1"], instance.parts["cotangent_b"])
    assert cert.holds, cert.failed()


@pytest.mark.parametrize("seed", range(10))
def test_euclidean_type_profile(seed):
    instance = random_instance(seed, "euclidean-type")
    report = euclidean_type_analyze(instance.algebra, instance.form)
    assert report.V == instance.parts["radical"]
    assert report.radical_splits
    assert report.compact_embedding_obstructed
    assert report.obstruction_witness is not None
    assert report.K0.dim == 0
    # ядро формы всегда лежит в радикале
    assert report.kernel_containment is True


def test_decompose_rejects_kernel_ideal():
    entry = get_entry("e4-definite")
    report = abelian_radical_decompose(entry.algebra, entry.form)
    assert not report.applicable
    assert report.violations == ["kernel-contains-ideal"]
    assert not report.holds
    assert report.to_dict() == {"applicable": False, "violations": ["kernel-contains-ideal"]}


@pytest.mark.parametrize("name, dims", [
    ("ex-3-8", [9, 0, 0]),
    ("cotangent-sl2", [0, 0, 6]),
    ("e3-dual", [6, 0, 0]),
    ("so3-x-sl2", [3, 3, 0]),
    ("three-factor", [9, 3, 6]),
])
def test_gallery_decompositions(name, dims):
    entry = get_entry(name)
    report = abelian_radical_decompose(entry.algebra, entry.form)
    assert report.applicable
    assert report.holds, report.certificate.failed()
    assert [report.G1.dim, report.G2.dim, report.G3.dim] == dims
    assert (report.cotangent is None) == (dims[2] == 0)
    assert report.G1.is_ideal and report.G2.is_ideal and report.G3.is_ideal


def test_three_factor_matches_annotated_parts():
    entry = get_entry("three-factor")
    report = abelian_radical_decompose(entry.algebra, entry.form)
    assert report.G1.space == entry.annotations["G1"]
    assert report.G2.space == entry.annotations["G2"]
    assert report.G3.space == entry.annotations["G3"]


def test_e3_dual_is_metric_cotangent():
    entry = get_entry("e3-dual")
    cert = verify_metric_cotangent(
        entry.algebra, entry.form, entry.annotations["cotangent_s1"], entry.annotations["cotangent_b"]
    )
    assert cert.holds, cert.failed()


def test_trivial_module_is_not_cotangent():
    """В (so3 ⋉ V1) × V0 пара (so3, V1) кокасательная, а (so3, V0) - нет."""
    entry = get_entry("ex-3-8")
    eye = np.eye(9, dtype=int)
    so3 = Subspace.span(eye[:3], 9)
    assert verify_metric_cotangent(entry.algebra, entry.form, so3, Subspace.span(eye[3:6], 9)).holds

    cert = verify_metric_cotangent(entry.algebra, entry.form, so3, Subspace.span(eye[6:], 9))
    assert not cert.holds
    assert "G3_invariant" in cert.failed()
    assert "coadjoint_action" in cert.failed()
    assert "B_isotropic" not in cert.failed()


def test_stabilizer_audit_on_torus_example():
    entry = get_entry("ex-4-7")
    audit = stabilizer_audit(entry.algebra, entry.annotations["stabilizer"])
    assert audit.flags == entry.expected["audit_flags"]
    assert audit.all_hold
    assert audit.h_cap_k.dim == 0
    assert audit.graph == entry.annotations["stabilizer"]


def test_stabilizer_audit_negative_controls():
    entry = get_entry("ex-4-7")
    g = entry.algebra
    levi = levi_subalgebra(g)

    radical_audit = stabilizer_audit(g, levi.radical.space, levi=levi)
    assert radical_audit.failed() == ["phi_nontrivial"]

    levi_audit = stabilizer_audit(g, levi.levi.space, levi=levi)
    assert levi_audit.failed() == ["projects_onto_radical"]
    assert levi_audit.graph is None
    assert set(levi_audit.flags) == set(STABILIZER_FLAGS)


def test_stabilizer_audit_rejects_non_subalgebra():
    g = get_entry("so3-x-r3").algebra
    h = Subspace.span([g.basis_vector(0), g.basis_vector(1)], g.dim)
    with pytest.raises(NotSubalgebraError):
        stabilizer_audit(g, h)


def test_stabilizer_audit_requires_compact_semidirect_shape():
    g = build_sl2()
    with pytest.raises(ShapeError):
        stabilizer_audit(g, g.whole())
    with pytest.raises(ShapeError):
        euclidean_type_analyze(get_entry("sl2-killing").algebra, get_entry("sl2-killing").form)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
