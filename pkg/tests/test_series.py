"""Truncated power series and the region generating functions."""

from __future__ import annotations

import pytest

from delannoy import (
    ConsistencyError,
    PowerSeries,
    SeriesTriple,
    assemble_triple,
    catalan,
    closed_k1,
    closed_k2,
    radical_check_k1,
    solve_fd,
)

# Leading coefficients of the three series for each slope, frozen from the
# closed forms and cross-checked against brute-force path counts elsewhere.
GOLDEN = {
    1: {
        "f": (1, 1, 2, 5, 13, 35, 97, 275),
        "fd": (0, 1, 1, 2, 5, 13, 35, 97),
        "fe": (0, 0, 1, 3, 8, 22, 62, 178),
    },
    2: {
        "f": (1, 1, 3, 11, 44, 186, 818, 3706, 17182, 81136),
        "fd": (0, 1, 2, 6, 22, 89, 381, 1694),
        "fe": (0, 0, 1, 5, 22, 97, 437, 2012),
    },
    3: {
        "f": (1, 1, 4, 20, 111, 657, 4065, 25981),
        "fd": (0, 1, 3, 13, 67, 380, 2288, 14351),
        "fe": (0, 0, 1, 7, 44, 277, 1777, 11630),
    },
}


def test_powerseries_basic_arithmetic():
    x = PowerSeries.x(4)
    assert ((1 + x) ** 2).coeffs == (1, 2, 1, 0, 0)
    assert ((1 - x) * (1 + x)).coeffs == (1, 0, -1, 0, 0)
    assert (x * x * x).coeffs == (0, 0, 0, 1, 0)
    assert (3 * x - x).coeffs == (0, 2, 0, 0, 0)
    assert (-x).coeffs == (0, -1, 0, 0, 0)


def test_powerseries_mixed_orders_truncate_to_smaller():
    a = PowerSeries((1, 1, 1, 1, 1))
    b = PowerSeries((1, 2))
    assert (a + b).order == 1
    assert (a * b).coeffs == (1, 3)


def test_powerseries_coefficient_access_is_strict():
    s = PowerSeries((7, 0, 4))
    assert s[0] == 7 and s[2] == 4
    with pytest.raises(IndexError):
        s[3]
    with pytest.raises(IndexError):
        s[-1]


def test_powerseries_truncate_and_validation():
    s = PowerSeries((1, 2, 3))
    assert s.truncate(1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        s.truncate(5)
    with pytest.raises(ValueError):
        PowerSeries(())
    with pytest.raises(ValueError):
        s**-1


def test_powerseries_compose():
    x = PowerSeries.x(5)
    inner = x + x * x
    outer = 1 + x + x**2
    # 1 + (x + x^2) + (x + x^2)^2 = 1 + x + 2x^2 + 2x^3 + x^4
    assert outer.compose(inner).coeffs == (1, 1, 2, 2, 1, 0)
    with pytest.raises(ValueError):
        outer.compose(1 + x)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_golden_prefixes(k):
    order = len(GOLDEN[k]["f"]) - 1
    triple = assemble_triple(k, max(order, 9))
    for name, expected in GOLDEN[k].items():
        got = getattr(triple, name).coeffs[: len(expected)]
        assert got == expected, (k, name)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_fixed_point_low_order_edges(k):
    assert solve_fd(k, 0).coeffs == (0,)
    assert solve_fd(k, 1).coeffs == (0, 1)  # a single D step, any slope


def test_solve_fd_validation():
    with pytest.raises(ValueError):
        solve_fd(0, 5)
    with pytest.raises(ValueError):
        solve_fd(1, -1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_triple_splits_by_last_step(k):
    triple = assemble_triple(k, 12)
    f, fd, fe = triple.f, triple.fd, triple.fe
    assert f[0] == 1 and fd[0] == 0 and fe[0] == 0
    for n in range(13):
        assert f[n] == (1 if n == 0 else 0) + fd[n] + fe[n]


def test_catalan():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(ValueError):
        catalan(-1)


def test_closed_k1_matches_series():
    triple = assemble_triple(1, 20)
    for n in range(21):
        assert closed_k1(n) == (triple.f[n], triple.fd[n], triple.fe[n]), n


def test_closed_k2_matches_series():
    triple = assemble_triple(2, 20)
    for n in range(21):
        assert closed_k2(n) == (triple.f[n], triple.fd[n]), n


def test_closed_form_validation():
    with pytest.raises(ValueError):
        closed_k1(-1)
    with pytest.raises(ValueError):
        closed_k2(-2)


def test_radical_identity_holds():
    check = radical_check_k1(20)
    assert check.ok
    assert check.first_mismatch is None
    assert bool(check)
    assert radical_check_k1(0).ok  # vacuously true on the constant term


def test_radical_identity_rejects_corrupted_series():
    triple = assemble_triple(1, 10)
    bad_f = triple.f + PowerSeries((0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0))
    mutant = SeriesTriple(k=1, f=bad_f, fd=triple.fd, fe=triple.fe)
    check = radical_check_k1(10, triple=mutant)
    assert not check.ok
    assert check.first_mismatch == 5  # the corrupted coefficient
    assert not bool(check)


def test_substitution_identity_for_k2():
    """The cubic-tree series A(t) = t (1 + A)^3 turns into the k=2 diagonal
    series under t = x - x^2."""
    order = 12
    t = PowerSeries.x(order)
    a = PowerSeries.zero(order)
    for _ in range(order + 1):
        a = t * (1 + a) ** 3
    assert t * (1 + a) ** 3 == a
    substituted = a.compose(t - t * t)
    assert substituted == assemble_triple(2, order).fd


def test_assemble_rejects_a_non_fixed_point(monkeypatch):
    import delannoy.series as series_module

    x = PowerSeries.x(6)
    corrupted = solve_fd(1, 6) + x**3
    monkeypatch.setattr(series_module, "solve_fd", lambda k, order: corrupted)
    with pytest.raises(ConsistencyError):
        series_module.assemble_triple(1, 6)
