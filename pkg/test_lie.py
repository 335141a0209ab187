#!/usr/bin/env python3
"""
Тесты алгебр Ли: проверка констант, радикал, ряды, разложение Леви.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Добавляем путь к проекту
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from nilform.core.gallery import (
    build_euclidean,
    build_sl2,
    build_so,
    build_so3,
    get_entry,
    random_basis_change,
    random_levi_instance,
)
from nilform.core.lie import (
    LieAlgebra,
    LieValidationError,
    NotSemisimpleError,
    center,
    derived_series,
    ideal_generated,
    is_ideal,
    is_subalgebra,
    largest_ideal_in,
    levi_subalgebra,
    lower_central_series,
    quotient,
    radical,
    split_levi,
)
from nilform.core.linalg import DimensionError, Subspace, inverse, rank, signature


def test_so3_and_sl2_killing_signatures():
    assert signature(build_so3().killing_matrix()) == (0, 3, 0)
    assert signature(build_sl2().killing_matrix()) == (2, 1, 0)
    assert signature(build_so(4).killing_matrix()) == (0, 6, 0)


def test_jacobi_violation_is_reported():
    """[e1,e2] = e1, [e1,e3] = e2: тождество Якоби нарушено в тройке (0,1,2)."""
    g = LieAlgebra.from_brackets(3, {(0, 1): {0: 1}, (0, 2): {1: 1}})
    report = g.validate()
    assert not report.ok
    assert report.kind == "jacobi"
    assert report.indices == (0, 1, 2)
    with pytest.raises(LieValidationError):
        g.ensure_valid()


def test_from_brackets_completes_antisymmetry():
    g = build_sl2()
    for i in range(3):
        for j in range(3):
            assert (g.constants[i, j] + g.constants[j, i] == 0).all()
    assert g.validate().ok


def test_radical_of_euclidean_algebra():
    g = build_euclidean(3)
    rad = radical(g)
    assert rad.dim == 3
    assert rad.is_abelian and rad.is_ideal
    assert rad.space == Subspace.span(np.eye(6, dtype=int)[3:], 6)
    # E3 совершенна: [E3, E3] = E3
    assert derived_series(g) == [g.whole()]


def test_series_of_solvable_algebra():
    """E2 разрешима, но не нильпотентна."""
    g = build_euclidean(2)
    assert radical(g).space == g.whole()
    assert derived_series(g)[-1].dim == 0
    assert lower_central_series(g)[-1].dim == 2


def test_center_and_quotient():
    entry = get_entry("so3-x-r3")
    g = entry.algebra
    assert center(g).dim == 3
    assert signature(quotient(g, center(g)).killing_matrix()) == (0, 3, 0)

    e3 = build_euclidean(3)
    translations = radical(e3).space
    assert signature(quotient(e3, translations).killing_matrix()) == (0, 3, 0)


def test_largest_ideal_in_kernel():
    entry = get_entry("e4-definite")
    kernel = entry.form.kernel()
    ideal = largest_ideal_in(entry.algebra, kernel)
    assert ideal.dim == 4
    assert is_ideal(entry.algebra, ideal)

    twisted = get_entry("ex-3-8")
    assert largest_ideal_in(twisted.algebra, twisted.form.kernel()).dim == 0


def test_ideal_generated_by_one_vector():
    g = build_euclidean(3)
    e1 = g.basis_vector(3)
    assert ideal_generated(g, Subspace.span([e1], 6)) == radical(g).space
    k1 = g.basis_vector(0)
    assert ideal_generated(g, Subspace.span([k1], 6)) == g.whole()


def test_simple_ideal_splitting():
    """so4 ≅ so3 × so3, so3 × sl2 - компактный и некомпактный множители."""
    so4 = levi_subalgebra(build_so(4))
    assert sorted(h.dim for h in so4.simple_ideals) == [3, 3]
    assert so4.compact_part.dim == 6
    assert so4.noncompact_part.dim == 0

    mixed = levi_subalgebra(build_so3().direct_product(build_sl2()))
    assert mixed.compact_part.dim == 3
    assert mixed.noncompact_part.dim == 3
    assert mixed.radical.dim == 0


def test_killing_signature_survives_basis_change():
    g = build_so3().direct_product(build_sl2())
    P = random_basis_change(np.random.default_rng(7), g.dim)
    h = g.change_basis(P)
    assert h.validate().ok
    assert signature(h.killing_matrix()) == signature(g.killing_matrix())


def test_build_so_rejects_small_n():
    with pytest.raises(DimensionError):
        build_so(1)


def test_split_levi_rejects_degenerate_killing_form():
    g = build_euclidean(3)
    with pytest.raises(NotSemisimpleError):
        split_levi(g, radical(g).space)


@pytest.mark.parametrize("seed", range(100))
def test_levi_round_trip(seed):
    """Подалгебра Леви случайного L ⋉ V в случайном базисе."""
    instance = random_levi_instance(seed)
    g = instance.algebra
    assert g.dim <= 20

    levi = levi_subalgebra(g, seed)
    s = levi.levi.space
    assert levi.radical.space == instance.parts["radical"]
    assert levi.radical.is_abelian
    assert s.dim == instance.expected["levi_dim"]
    assert is_subalgebra(g, s)
    assert (s + levi.radical.space).is_whole()
    assert s.intersect(levi.radical.space).dim == 0
    assert rank(g.restrict(s).killing_matrix()) == s.dim
    assert levi.compact_part.dim + levi.noncompact_part.dim == s.dim



def sl2_heisenberg() -> LieAlgebra:
    """sl2 ⋉ h3: sl2 = <e, h, f> действует на <p, q>, [p, q] = z."""
    brackets = {
        (0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2},
        (0, 4): {3: 1}, (1, 3): {3: 1}, (1, 4): {4: -1}, (2, 3): {4: 1},
        (3, 4): {5: 1},
    }
    return LieAlgebra.from_brackets(6, brackets, labels=["e", "h", "f", "p", "q", "z"], name="sl2⋉h3")


@pytest.mark.parametrize("seed", [0, 3, 11])
def test_levi_with_nonabelian_radical_in_scrambled_basis(seed):
    """Радикал - алгебра Гейзенберга: подъем дополнения проходит два слоя."""
    base = sl2_heisenberg()
    assert base.validate().ok
    P = random_basis_change(np.random.default_rng(seed), 6)
    g = base.change_basis(P)
    assert g.validate().ok
    expected_radical = Subspace.span(np.eye(6, dtype=int)[3:] @ inverse(P).T, 6)

    levi = levi_subalgebra(g, seed)
    r = levi.radical.space
    s = levi.levi.space
    assert r == expected_radical
    assert r.dim == 3
    assert not levi.radical.is_abelian
    assert len(derived_series(g, r)) == 3
    assert s.dim == 3
    assert is_subalgebra(g, s)
    assert (s + r).is_whole()
    assert s.intersect(r).dim == 0
    assert levi.noncompact_part.dim == 3
    assert levi.compact_part.dim == 0
    assert signature(g.restrict(s).killing_matrix()) == (2, 1, 0)

if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
