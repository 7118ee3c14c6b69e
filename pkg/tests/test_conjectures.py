"""Inversion sequences, symmetric-peak-free Catalan paths, and the two
equinumerosity harnesses."""

from __future__ import annotations

import pytest

from delannoy import (
    InversionSequence,
    PathFamilySpec,
    assemble_triple,
    check_conjecture1,
    check_conjecture2,
    count_bruteforce,
    count_catalan_no_symmetric_peak,
    count_inversion_102,
    inversion_sequences,
)


def test_inversion_sequence_validation():
    InversionSequence((0, 1, 0, 3))
    with pytest.raises(ValueError):
        InversionSequence((1,))  # e_1 must be 0
    with pytest.raises(ValueError):
        InversionSequence((0, 2))  # e_2 <= 1
    with pytest.raises(ValueError):
        InversionSequence((0, -1))


def test_pattern_102_detection():
    assert InversionSequence((0, 1, 0, 2)).has_pattern_102()
    assert not InversionSequence((0, 0, 1, 2)).has_pattern_102()
    assert not InversionSequence((0, 1, 1, 1)).has_pattern_102()
    # equalities do not count: the letters must be strictly ordered low/mid/high
    assert not InversionSequence((0, 1, 0, 1)).has_pattern_102()
    assert InversionSequence((0, 0, 2, 1, 3)).has_pattern_102()


def test_inversion_sequences_generator():
    assert list(inversion_sequences(0)) == [()]
    assert list(inversion_sequences(2)) == [(0, 0), (0, 1)]
    assert sum(1 for _ in inversion_sequences(5)) == 120  # n!


@pytest.mark.parametrize("n", range(1, 8))
def test_count_inversion_102_matches_naive_filter(n):
    naive = sum(
        1 for e in inversion_sequences(n) if not InversionSequence(e).has_pattern_102()
    )
    assert count_inversion_102(n) == naive


def test_count_inversion_102_values():
    assert [count_inversion_102(n) for n in range(1, 8)] == [1, 2, 6, 22, 89, 381, 1694]
    with pytest.raises(ValueError):
        count_inversion_102(0)


def test_inversion_counts_match_fd2_coefficients():
    triple = assemble_triple(2, 8)
    for n in range(1, 9):
        assert count_inversion_102(n) == triple.fd[n]


def test_catalan_no_symmetric_peak_values():
    assert count_catalan_no_symmetric_peak(1) == 0  # NE is a symmetric peak
    assert count_catalan_no_symmetric_peak(2) == 0
    assert count_catalan_no_symmetric_peak(3) == 1  # NNENEE only
    assert count_catalan_no_symmetric_peak(4) == 3
    with pytest.raises(ValueError):
        count_catalan_no_symmetric_peak(0)


def test_catalan_no_symmetric_peak_matches_fe1_shifted():
    # sizes shift by one against the E-ending series for slope 1
    triple = assemble_triple(1, 9)
    for size in range(1, 11):
        assert count_catalan_no_symmetric_peak(size) == triple.fe[size - 1]


def test_conjecture1_report():
    report = check_conjecture1(7)
    assert report.verdict
    assert bool(report)
    assert report.rows[0] == (1, 0, 0)
    assert report.rows[1] == (2, 1, 1)
    assert report.rows[5] == (6, 62, 62)
    with pytest.raises(ValueError):
        check_conjecture1(0)


def test_conjecture2_report():
    report = check_conjecture2(7)
    assert report.verdict
    assert report.rows[3] == (4, 22, 22)
    assert report.rows[6] == (7, 1694, 1694)
    with pytest.raises(ValueError):
        check_conjecture2(0)


def test_corner_families_coincide():
    """On the corner (n, kn) inside y >= kx, the EENN-avoiding North-East
    paths are exactly those whose augmented path also avoids EENN: region
    paths cannot start with ENN, end with EEN, or equal EN."""
    for k in (1, 2, 3):
        for n in range(7):
            plain = PathFamilySpec(
                target=(n, k * n), forbidden=frozenset({"D", "EENN"}), region_k=k
            )
            di_aug = PathFamilySpec(
                target=(n, k * n), forbidden_aug=frozenset({"D", "EENN"}), region_k=k
            )
            assert count_bruteforce(plain) == count_bruteforce(di_aug), (k, n)


def test_last_step_split_at_the_corner():
    for k in (1, 2, 3):
        for n in range(6):
            base = dict(
                target=(n, k * n), forbidden=frozenset({"NE", "EN"}), region_k=k
            )
            total = count_bruteforce(PathFamilySpec(**base))
            by_d = count_bruteforce(PathFamilySpec(**base, last_step="D"))
            by_e = count_bruteforce(PathFamilySpec(**base, last_step="E"))
            by_n = count_bruteforce(PathFamilySpec(**base, last_step="N"))
            assert by_n == 0  # a region path cannot end with N
            assert total == by_d + by_e + (1 if n == 0 else 0)
