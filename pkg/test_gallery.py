#!/usr/bin/env python3
"""
Тесты галереи: эталонные записи, модули so3, кокасательные алгебры,
случайные экземпляры и экспорт документов.
"""

import json
import sys
from pathlib import Path

import numpy as np
import pytest

# Добавляем путь к проекту
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from nilform.cli.documents import document_digest, entry_to_document, parse_document
from nilform.cli.schemas import AlgebraDocument
from nilform.core.gallery import (
    build_cotangent,
    build_euclidean,
    build_sl2,
    build_so3,
    build_so3_irrep,
    build_so3_module,
    build_twisted_cotangent,
    casimir,
    commutant_dimension,
    e3_dual_pairing,
    get_entry,
    intertwiner_space,
    list_entries,
    random_instance,
    random_levi_instance,
)
from nilform.core.lie import levi_subalgebra
from nilform.core.linalg import DimensionError, SymBilinearForm, identity, is_zero, rank
from nilform.core.metric import analyze, is_invariant


def test_gallery_has_named_entries():
    names = list_entries()
    assert len(names) >= 10
    for required in ("ex-3-8", "ex-3-9", "ex-4-7", "e3-dual", "cotangent-sl2", "three-factor"):
        assert required in names
    with pytest.raises(KeyError):
        get_entry("no-such-entry")


@pytest.mark.parametrize("name", list_entries())
def test_gallery_entry_matches_expected(name):
    """Каждая запись корректна и совпадает со своими эталонами."""
    entry = get_entry(name)
    g = entry.algebra
    assert g.validate().ok
    if entry.form is None:
        return
    expected = entry.expected
    analysis = analyze(g, entry.form)
    assert list(analysis.signature) == expected["signature"]
    assert analysis.kernel.dim == expected["kernel_dim"]
    assert analysis.invariant.holds == expected["invariant"]
    assert analysis.nil_invariant.verdict.value == expected["nil_invariant"]
    assert analysis.effective == expected["effective"]


def test_so4_splits_into_two_compact_ideals():
    entry = get_entry("so4")
    levi = levi_subalgebra(entry.algebra)
    assert sorted(h.dim for h in levi.simple_ideals) == entry.expected["simple_ideal_dims"]
    for h in levi.simple_ideals:
        assert h.is_ideal


@pytest.mark.parametrize("l", range(4))
def test_so3_irrep_is_irreducible_module(l):
    actions = build_so3_irrep(l)
    d = 2 * l + 1
    assert all(rho.shape == (d, d) for rho in actions)
    # [ρ1,ρ2] = ρ3 и циклически
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert is_zero(actions[a] @ actions[b] - actions[b] @ actions[a] - actions[c])
    assert is_zero(casimir(actions) + l * (l + 1) * identity(d))
    assert commutant_dimension(actions) == 1


def test_vector_module_is_adjoint():
    """V3 ≅ ad so3: пространство сплетающих операторов одномерно и обратимо."""
    so3 = build_so3()
    ad = [np.array(so3.ad_basis[i], dtype=object) for i in range(3)]
    maps = intertwiner_space(ad, build_so3_irrep(1))
    assert len(maps) == 1
    T = maps[0]
    assert rank(T) == 3
    assert len(intertwiner_space(ad, build_so3_irrep(2))) == 0


def test_so3_module_algebra():
    g = build_so3_module(2)
    assert g.dim == 8
    assert g.validate().ok
    levi = levi_subalgebra(g)
    assert levi.radical.dim == 5
    assert levi.radical.is_abelian
    assert levi.compact_part.dim == 3


def test_e3_dual_pairing():
    g = build_euclidean(3)
    form = SymBilinearForm(e3_dual_pairing())
    assert form.is_nondegenerate()
    assert form.signature() == (3, 3, 0)
    assert is_invariant(g, form).holds


@pytest.mark.parametrize("builder", [build_so3, build_sl2, lambda: build_euclidean(2)])
def test_cotangent_algebra(builder):
    L = builder()
    g, form = build_cotangent(L)
    assert g.validate().ok
    assert form.signature() == (L.dim, L.dim, 0)
    assert is_invariant(g, form).holds


def test_twisted_cotangent_kernel():
    g, form, stabilizer = build_twisted_cotangent(build_sl2())
    assert g.dim == 9
    assert form.kernel() == stabilizer
    assert form.signature() == (3, 3, 3)


def test_builders_reject_bad_sizes():
    with pytest.raises(DimensionError):
        build_euclidean(0)
    with pytest.raises(DimensionError):
        build_so3_irrep(-1)
    with pytest.raises(ValueError):
        random_instance(0, "no-such-profile")


@pytest.mark.parametrize("profile", ["mixed-three-factor", "cotangent", "euclidean-type"])
def test_random_instances_are_valid(profile):
    for seed in range(3):
        instance = random_instance(seed, profile)
        assert instance.algebra.validate().ok
        assert list(instance.form.signature()) == instance.expected["signature"]


def test_random_instances_are_deterministic():
    first = random_instance(11)
    second = random_instance(11)
    assert (first.algebra.constants == second.algebra.constants).all()
    assert (first.form.gram == second.form.gram).all()
    assert random_levi_instance(5).parts["radical"] == random_levi_instance(5).parts["radical"]


@pytest.mark.parametrize("name", ["ex-3-8", "cotangent-sl2", "e3-dual", "so4"])
def test_document_export_and_parse(name):
    entry = get_entry(name)
    document = entry_to_document(entry)
    assert document.dim == entry.algebra.dim
    assert all(b.i < b.j for b in document.brackets)

    # JSON → документ → алгебра
    restored = AlgebraDocument.model_validate(json.loads(json.dumps(document.model_dump(mode="json"))))
    assert document_digest(restored) == document_digest(document)
    parsed = parse_document(restored)
    assert (parsed.algebra.constants == entry.algebra.constants).all()
    assert (parsed.form.gram == entry.form.gram).all()
    for key, space in entry.annotations.items():
        assert parsed.annotations[key] == space


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
