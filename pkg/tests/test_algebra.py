import random
from math import comb

import pytest

from oracles import count_set_partitions, count_surjections
from monoidquiver import exactla
from monoidquiver.algebra import (
    ZERO,
    from_category,
    from_monoid,
    loewy_length,
    loewy_length_oracle,
    phi,
    phi_dense,
    psi,
    rad_power_dim,
    radical_closed_form,
    radical_powers,
    radical_trace_oracle,
    stirling2,
    stirling_dim_formula,
    verify_isomorphism,
)
from monoidquiver.eicat import build_category
from monoidquiver.errors import SizeLimitError
from monoidquiver.partialmaps import PartialMap, enumerate_family

P = PartialMap.from_dict


@pytest.fixture(scope="module")
def e3():
    return from_category(build_category("pt", 3))


def test_dimensions():
    assert from_monoid("pt", 2).dim == 9
    for fam in ["pt", "is", "po", "pf", "pc", "f"]:
        for n in range(1, 4):
            assert from_monoid(fam, n).dim == len(enumerate_family(fam, n))


def test_category_zero_rule():
    C = build_category("pt", 2)
    A = from_category(C)
    for i, f in enumerate(C.morphisms):
        for j, g in enumerate(C.morphisms):
            if g.cod != f.dom:
                assert A.mul_basis(i, j) == ZERO


@pytest.mark.parametrize("fam", ["pt", "is", "po", "pf", "pc", "f"])
def test_monoid_algebra_associative_with_unit(fam):
    for n in range(1, 4):
        A = from_monoid(fam, n)
        assert A.check_associative() is None
        assert A.check_unit()


@pytest.mark.parametrize("fam", ["pt", "is", "po", "pf", "pc"])
def test_category_algebra_associative_with_unit(fam):
    for n in range(1, 4):
        A = from_category(build_category(fam, n))
        assert A.check_associative() is None
        assert A.check_unit()


def test_category_algebra_associative_sampled_n4():
    A = from_category(build_category("pt", 4))
    rng = random.Random(4)
    triples = [tuple(rng.randrange(A.dim) for _ in range(3)) for _ in range(20000)]
    assert A.check_associative(triples) is None


def test_phi_psi_examples():
    n = 2
    C = build_category("pt", n)
    empty = PartialMap.empty(n)
    assert phi(empty, C).coeffs == {C.index_of(empty): 1}
    m = C.index_of(P(n, {1: 1}))
    assert psi(m, C).coeffs == {m: 1, C.index_of(empty): -1}


def test_phi_rejects_non_members():
    C = build_category("is", 2)
    with pytest.raises(ValueError):
        phi(P(2, {1: 1, 2: 1}), C)


def test_phi_psi_inverse_exhaustive_pt3():
    C = build_category("pt", 3)
    for s in enumerate_family("pt", 3):
        total = {}
        for j, c in phi(s, C).coeffs.items():
            for k, d in psi(j, C).coeffs.items():
                total[k] = total.get(k, 0) + c * d
        assert {k: v for k, v in total.items() if v} == {C.index_of(s): 1}


@pytest.mark.parametrize("fam", ["pt", "is", "po", "pf", "pc"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_isomorphism_exhaustive(fam, n):
    report = verify_isomorphism(fam, n, mode="exhaustive")
    assert report.passed, report.format()
    assert report.pairs_checked == len(enumerate_family(fam, n)) ** 2


def test_verify_isomorphism_pt2_pair_count():
    assert verify_isomorphism("pt", 2).pairs_checked == 81


def test_case_two_pairs_are_covered():
    # pairs with im t != dom s, where the product in the category algebra is not a single composite
    C = build_category("pt", 3)
    A = from_category(C)
    elements = [m.map for m in C.morphisms]
    from monoidquiver.partialmaps import compose

    seen = 0
    for s in elements:
        for t in elements:
            if t.image != s.domain:
                seen += 1
                assert phi(compose(s, t), C) == A.mul(phi(s, C), phi(t, C))
    assert seen > 0


def test_verify_isomorphism_sampled_is_seeded():
    a = verify_isomorphism("pc", 4, mode="sampled", samples=500, seed=7)
    b = verify_isomorphism("pc", 4, mode="sampled", samples=500, seed=7)
    assert a.passed and a == b


def test_verify_isomorphism_detects_a_broken_map(monkeypatch):
    from monoidquiver import algebra

    real_phi = algebra.phi

    def bad_phi(s, C):
        el = real_phi(s, C)
        return el if s.rank != 1 else el.scale(2)

    monkeypatch.setattr(algebra, "phi", bad_phi)
    report = algebra.verify_isomorphism("pt", 2)
    assert not report.passed and "counterexample" in report.format()


def test_radical_closed_form_sizes():
    for n, k, size in [(2, 1, 2), (2, 2, 0), (3, 1, 30)]:
        A = from_category(build_category("pt", n))
        assert len(radical_closed_form(A, k)) == size
    assert len(enumerate_family("pt", 3)) - len(enumerate_family("is", 3)) == 30
    with pytest.raises(ValueError):
        radical_closed_form(from_category(build_category("pt", 2)), 0)


def test_trace_oracle_semisimple_groupoid():
    for n in range(1, 4):
        assert radical_trace_oracle(from_category(build_category("is", n))) == []
        assert radical_trace_oracle(from_monoid("is", n)) == []


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trace_oracle_matches_closed_form(n):
    A = from_category(build_category("pt", n))
    assert exactla.same_span(radical_trace_oracle(A), radical_closed_form(A, 1))


@pytest.mark.slow
def test_trace_oracle_matches_closed_form_n4():
    A = from_category(build_category("pt", 4))
    R = radical_trace_oracle(A)
    assert len(R) == 416
    assert exactla.same_span(R, radical_closed_form(A, 1))


def test_trace_oracle_cap():
    with pytest.raises(SizeLimitError):
        radical_trace_oracle(from_category(build_category("pt", 5)))


def test_monoid_radical_dimension_matches_category():
    # the isomorphism preserves radical dimension
    for n in range(1, 4):
        assert len(radical_trace_oracle(from_monoid("pt", n))) == len(enumerate_family("pt", n)) - len(enumerate_family("is", n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_radical_powers_match_corank_filtration(n):
    A = from_category(build_category("pt", n))
    powers = radical_powers(A, radical_trace_oracle(A))
    for k in range(1, n + 1):
        expected = radical_closed_form(A, k)
        actual = powers[k - 1] if k - 1 < len(powers) else []
        assert exactla.same_span(actual, expected)


def test_span_product_rad_squared_vanishes_n2():
    A = from_category(build_category("pt", 2))
    R = radical_trace_oracle(A)
    assert exactla.span_product(R, R, A.mul) == []


def test_radical_closed_form_is_an_ideal():
    C = build_category("pt", 4)
    A = from_category(C)
    rad = [i for i, m in enumerate(C.morphisms) if m.map.corank >= 1]
    for b in range(A.dim):
        for r in rad:
            for prod_ in (A.mul_basis(b, r), A.mul_basis(r, b)):
                assert prod_ == ZERO or C.morphisms[prod_].map.corank >= 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_carries_monoid_radical_onto_corank_span(n):
    C = build_category("pt", n)
    monoid_rad = radical_trace_oracle(from_monoid("pt", n))
    assert [m.map for m in C.morphisms] == from_monoid("pt", n).basis
    images = [phi_dense(v, C) for v in monoid_rad]
    assert exactla.same_span(images, radical_closed_form(from_category(C), 1))


def test_other_families_radical_vs_corank_filtration():
    for n in range(1, 4):
        A = from_category(build_category("po", n))
        assert exactla.same_span(radical_trace_oracle(A), radical_closed_form(A, 1))
    for fam in ["pf", "pc"]:
        for n in range(1, 4):
            C = build_category(fam, n)
            A = from_category(C)
            R = radical_trace_oracle(A)
            non_identity = [A.basis_vector(m.id).dense() for m in C.morphisms if not C.is_identity(m.id)]
            assert exactla.same_span(R, non_identity)
            assert exactla.contains_span(R, radical_closed_form(A, 1))
    A = from_category(build_category("pf", 3))
    assert len(radical_trace_oracle(A)) == 16 and len(radical_closed_form(A, 1)) == 9


def test_stirling_base_cases():
    for d in range(0, 8):
        assert stirling2(d, d) == 1
        if d:
            assert stirling2(d, 1) == 1
    for d in range(1, 7):
        for m in range(1, d + 1):
            assert stirling2(d, m) == count_set_partitions(d, m)


def test_stirling_formula_examples():
    assert stirling_dim_formula(2, 1) == 2 == rad_power_dim(2, 1)
    assert comb(2, 2) * comb(2, 1) * count_surjections(2, 1) == 2
    with pytest.raises(ValueError):
        stirling_dim_formula(2, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_stirling_formula_equals_enumeration(n):
    for k in range(1, n + 1):
        assert stirling_dim_formula(n, k) == rad_power_dim(n, k)


def test_loewy_lengths():
    assert [loewy_length(n) for n in range(1, 6)] == [1, 2, 3, 4, 5]
    with pytest.raises(SizeLimitError):
        loewy_length(6)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_loewy_length_oracle(n):
    assert loewy_length_oracle(from_category(build_category("pt", n))) == n
