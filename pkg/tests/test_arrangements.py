from itertools import product

import pytest

from threshold_atlas import known_values as kv
from threshold_atlas.arrangements import (
    Arrangement,
    charpoly_finite_field,
    charpoly_threshold_formula,
    count_points_brute,
    count_points_mod_q,
    count_points_sweep,
    count_points_threshold_formula,
    edge_rule_check,
    region_count,
    region_count_identities,
    region_sign_vector,
    sample_moduli,
    threshold_arrangement,
    threshold_coefficient,
    typeb_arrangement,
)
from threshold_atlas.errors import DomainError, SamplingError
from threshold_atlas.exactmath import Polynomial, falling_odd_product
from threshold_atlas.signed_permutations import enumerate_signed
from threshold_atlas.threshold_bijections import enumerate_threshold_pairs


def naive_count(a, q):
    return sum(
        all(sum(c * x[i] for i, c in f) % q for f in a.forms) for x in product(range(q), repeat=a.n)
    )


def test_arrangement_forms():
    assert set(threshold_arrangement(3).forms) == {((0, 1), (1, 1)), ((0, 1), (2, 1)), ((1, 1), (2, 1))}
    assert len(typeb_arrangement(3).forms) == 9
    with pytest.raises(DomainError):
        Arrangement(2, (((0, 2),),))


def test_point_count_examples():
    assert count_points_mod_q(threshold_arrangement(2), 5).count == 20
    assert count_points_mod_q(threshold_arrangement(1), 7).count == 7
    assert count_points_mod_q(typeb_arrangement(1), 5).count == 4
    with pytest.raises(DomainError):
        count_points_mod_q(threshold_arrangement(2), 4)


def test_counting_methods_agree():
    for n in range(1, 4):
        for q in (3, 5, 7, 9):
            for a in (threshold_arrangement(n), typeb_arrangement(n)):
                want = naive_count(a, q)
                assert count_points_brute(a, q) == count_points_sweep(a, q) == want
            assert count_points_threshold_formula(n, q) == naive_count(threshold_arrangement(n), q)
    for q in (11, 13, 15):
        assert count_points_sweep(threshold_arrangement(5), q) == count_points_threshold_formula(5, q)


def test_finite_field_charpolys():
    assert charpoly_finite_field(threshold_arrangement(2)).coeffs == (0, -1, 1)
    assert charpoly_finite_field(threshold_arrangement(4)).coeffs == (7, -17, 15, -6, 1)
    assert charpoly_finite_field(typeb_arrangement(2)).coeffs == (3, -4, 1)
    for n in range(1, 4):
        assert charpoly_finite_field(typeb_arrangement(n)) == falling_odd_product(n)


def test_moduli_and_sampling_guard(monkeypatch):
    assert sample_moduli(3) == [7, 9, 11, 13, 15, 17]
    import threshold_atlas.arrangements as arr

    real = arr.count_points_mod_q

    def skewed(a, q, method="auto"):
        s = real(a, q, method)
        return arr.FiniteFieldSample(q, s.count + (q == 17))

    monkeypatch.setattr(arr, "count_points_mod_q", skewed)
    with pytest.raises(SamplingError):
        arr.charpoly_finite_field(threshold_arrangement(3))


def test_closed_form_matches_published_table():
    for n in range(2, 11):
        p = charpoly_threshold_formula(n)
        assert p.coeffs == kv.charpoly_low_to_high(n)
        assert region_count(p) == kv.THRESHOLD_REGIONS[n]
    assert charpoly_threshold_formula(6).coeffs == (431, -1012, 900, -410, 105, -15, 1)
    assert charpoly_threshold_formula(9).coeffs[0] == -586141
    assert region_count(charpoly_threshold_formula(10)) == 62_749_906


def test_threshold_coefficient():
    assert threshold_coefficient(2, 1) == -1
    assert abs(threshold_coefficient(4, 0)) == 7
    for n in range(1, 10):
        p = charpoly_threshold_formula(n)
        assert threshold_coefficient(n, n) == 1
        assert [threshold_coefficient(n, j) for j in range(n + 1)] == list(p.coeffs) + [0] * (n + 1 - len(p.coeffs))


def test_region_counts():
    assert region_count(charpoly_threshold_formula(4)) == 46
    assert region_count(falling_odd_product(2)) == 8
    assert region_count(Polynomial((0, -1, 1)), 2) == 2


def test_region_count_identities():
    assert region_count_identities(2) == (2, 2)
    assert region_count_identities(3) == (8, 8)
    assert region_count_identities(4) == (46, 46)
    for n in range(2, 16):
        a, b = region_count_identities(n)
        assert a == b == region_count(charpoly_threshold_formula(n))


def test_region_sign_vector_examples():
    assert region_sign_vector((-1, 2)) == {(1, 2): 1}
    assert region_sign_vector((-1, -2)) == {(1, 2): -1}
    assert region_sign_vector((1, 2)) == {(1, 2): 1}
    assert region_sign_vector((2, -1)) == {(1, 2): -1}
    with pytest.raises(DomainError):
        region_sign_vector((1, 1))


def test_edge_rule_exhaustive():
    assert edge_rule_check((1, 2))
    for n in range(2, 6):
        assert all(edge_rule_check(tp) for tp in enumerate_threshold_pairs(n))
    for sp in enumerate_signed(4):
        assert edge_rule_check(sp)
