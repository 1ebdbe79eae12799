import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aldkit.core import BudgetExceeded
from aldkit.delsarte import (
    BUDGET_ENV,
    SQRT5,
    Cyclotomic10,
    Q5,
    chi,
    coefficient_column,
    delsarte_bound,
    identity_profile,
    profile_cost,
    profiles,
    reverse_profile,
)
from aldkit.lp import LPStatus

ZETA = Cyclotomic10.zeta_pow(1)
ONE = Cyclotomic10.one()
ZERO = Cyclotomic10.zero()

small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=8
)
cyclo_elements = st.tuples(
    small_fractions, small_fractions, small_fractions, small_fractions
).map(Cyclotomic10)


# ------------------------------------------------------------ ring axioms


def test_zeta_is_a_primitive_tenth_root():
    powers = [Cyclotomic10.zeta_pow(k) for k in range(10)]
    acc = ONE
    for k in range(1, 10):
        acc = acc * ZETA
        assert acc == powers[k]
        assert acc != ONE  # primitive: no earlier power hits 1
    assert acc * ZETA == ONE  # zeta^10 = 1


def test_zeta_fifth_power_is_minus_one():
    assert Cyclotomic10.zeta_pow(5) == -ONE


def test_power_inverses_exhaustive():
    for k in range(10):
        assert Cyclotomic10.zeta_pow(k) * Cyclotomic10.zeta_pow(10 - k) == ONE


@given(cyclo_elements, cyclo_elements, cyclo_elements)
@settings(max_examples=80)
def test_ring_axioms_on_random_elements(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x
    assert x - x == ZERO
    assert x * ONE == x


@given(cyclo_elements, cyclo_elements)
@settings(max_examples=80)
def test_conjugation_is_a_ring_involution(x, y):
    assert x.conjugate().conjugate() == x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@given(cyclo_elements)
@settings(max_examples=80)
def test_norm_is_real_and_nonnegative(x):
    norm = x * x.conjugate()
    assert norm.is_real()
    assert Q5.from_cyclotomic(norm) >= 0


def test_sqrt5_squares_to_five():
    assert SQRT5 * SQRT5 == Cyclotomic10((5, 0, 0, 0))
    assert Q5.from_cyclotomic(SQRT5) == Q5(Fraction(0), Fraction(1))


def test_real_parts_round_trip():
    assert ONE.real_parts() == (1, 0)
    with pytest.raises(ValueError):
        ZETA.real_parts()
    # 2 cos(2 pi / 10) = (1 + sqrt5) / 2
    golden = ZETA + ZETA.conjugate()
    assert golden.real_parts() == (Fraction(1, 2), Fraction(1, 2))


# ------------------------------------------------------------- characters


def test_chi_at_zero_is_one():
    for j in range(10):
        assert chi(0, j) == ONE
        assert chi(j, 0) == ONE


def test_chi_half_turn():
    # exp(-pi i) = -1
    assert chi(1, 5) == -ONE


def test_chi_product_law_exhaustive():
    for i in range(10):
        for j in range(10):
            for k in range(10):
                assert chi(i, j) * chi(i, k) == chi(i, (j + k) % 10)


def test_chi_rejects_out_of_range_digits():
    with pytest.raises(ValueError):
        chi(10, 0)
    with pytest.raises(ValueError):
        chi(0, -1)


# ------------------------------------------------------- the Q(sqrt5) field


def test_q5_is_ordered_correctly():
    root = Q5(Fraction(0), Fraction(1))
    assert 2 < root < 3
    assert Q5(Fraction(-2), Fraction(1)) > 0  # sqrt5 - 2 > 0
    assert Q5(Fraction(9, 4), Fraction(-1)) > 0  # 9/4 > sqrt5
    assert Q5(Fraction(2), Fraction(-1)) < 0  # 2 < sqrt5


def test_q5_field_identities():
    a = Q5(Fraction(3, 2), Fraction(-2, 3))
    b = Q5(Fraction(-1), Fraction(5, 7))
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * (Q5.lift(1) / a) == Q5.lift(1)
    conj = Q5(a.a, -a.b)
    assert a * conj == Q5.lift(a.a * a.a - 5 * a.b * a.b)
    with pytest.raises(ZeroDivisionError):
        a / Q5.lift(0)


def test_q5_floor_anchors():
    assert math.floor(Q5(Fraction(0), Fraction(1))) == 2
    assert math.floor(Q5(Fraction(0), Fraction(-1))) == -3
    assert math.floor(Q5(Fraction(5, 2), Fraction(0))) == 2
    assert math.floor(Q5(Fraction(1, 2), Fraction(1, 2))) == 1  # golden ratio


@given(small_fractions, small_fractions)
@settings(max_examples=120)
def test_q5_floor_brackets_the_value(a, b):
    q = Q5(a, b)
    f = math.floor(q)
    assert Q5.lift(f) <= q < Q5.lift(f + 1)


# ---------------------------------------------------------------- profiles


@pytest.mark.parametrize("n", [1, 2, 3])
def test_profiles_enumerate_all_compositions(n):
    seen = list(profiles(n))
    assert len(seen) == math.comb(n + 9, 9)
    assert len(set(seen)) == len(seen)
    assert all(sum(p) == n and min(p) >= 0 for p in seen)


def test_reverse_profile_is_an_involution():
    for p in profiles(2):
        assert reverse_profile(reverse_profile(p)) == p
    assert reverse_profile(identity_profile(3)) == identity_profile(3)
    assert reverse_profile((0, 1, 0, 0, 0, 0, 0, 0, 0, 1)) == (
        0, 1, 0, 0, 0, 0, 0, 0, 0, 1,
    )


def test_profile_cost_of_the_edge_classes():
    # single-position profiles: strand swap costs lam, one flipped bit
    # costs 1+lam, a double flip costs 2(1+lam), digits 3 and 7 are free
    # of cost because no difference produces them
    for lam in (1, 2, 3):
        unit = lambda j: tuple(1 if i == j else 0 for i in range(10))
        assert profile_cost(unit(0), lam) == 0
        assert profile_cost(unit(1), lam) == 1 + lam
        assert profile_cost(unit(2), lam) == lam
        assert profile_cost(unit(4), lam) == 1 + lam
        assert profile_cost(unit(5), lam) == 2 * (1 + lam)
        assert profile_cost(unit(6), lam) == 1 + lam
        assert profile_cost(unit(8), lam) == lam
        assert profile_cost(unit(9), lam) == 1 + lam


# ------------------------------------------------- coefficient extraction


def character_sum_oracle(n, m):
    """Direct evaluation of the column: fix a word with digit profile m,
    sum chi against every word of Z_10^n, grouped by the profile of the
    second word."""
    x = []
    for digit, count in enumerate(m):
        x.extend([digit] * count)
    out = {}
    words = [()]
    for _ in range(n):
        words = [w + (digit,) for w in words for digit in range(10)]
    for y in words:
        p = tuple(sum(1 for v in y if v == digit) for digit in range(10))
        val = ONE
        for xi, yi in zip(x, y):
            val = val * chi(xi, yi)
        out[p] = out.get(p, ZERO) + val
    return {p: v for p, v in out.items() if v != ZERO}


@pytest.mark.parametrize("n", [1, 2])
def test_coefficient_column_matches_character_sums(n):
    for m in profiles(n):
        column = coefficient_column(m)
        oracle = character_sum_oracle(n, m)
        column = {p: v for p, v in column.items() if v != ZERO}
        assert column == oracle, m


def test_unit_profile_columns_are_single_characters():
    for j in range(10):
        m = tuple(1 if i == j else 0 for i in range(10))
        column = coefficient_column(m)
        for i in range(10):
            p = tuple(1 if k == i else 0 for k in range(10))
            assert column[p] == chi(i, j)


def test_all_z0_coefficient_is_always_one():
    for n in (1, 2, 3):
        for m in list(profiles(n))[:: max(1, math.comb(n + 9, 9) // 8)]:
            column = coefficient_column(m)
            assert column[identity_profile(n)] == ONE


def test_column_mass_vanishes_except_at_identity():
    # Setting every z to 1 sums the coefficients; each factor is a full
    # character sum, zero unless the difference digit is 0.
    for n in (1, 2):
        for m in profiles(n):
            column = coefficient_column(m)
            total = ZERO
            for v in column.values():
                total = total + v
            if m == identity_profile(n):
                assert total == Cyclotomic10((10**n, 0, 0, 0))
            else:
                assert total == ZERO


def test_paired_columns_are_real():
    # The constraint assembly relies on c(p, rev m) being the complex
    # conjugate of c(p, m), so the paired sum must be a real element.
    for m in profiles(2):
        column = coefficient_column(m)
        rev = reverse_profile(m)
        rev_column = coefficient_column(rev)
        for p, c in column.items():
            assert rev_column[p] == c.conjugate()
            assert (c + c.conjugate()).is_real()


# ------------------------------------------------------------- the LP bound


def test_single_position_cells():
    rep = delsarte_bound(1, 3, 1)
    assert rep.status is LPStatus.OPTIMAL
    assert rep.exact == 2 and rep.floored == 2
    assert not rep.unbounded
    rep = delsarte_bound(1, 4, 1)
    assert rep.exact == 2
    # below the tabulated range the optimum exists but is irrational
    rep = delsarte_bound(1, 1, 1)
    assert rep.exact == 5 and rep.floored == 5
    rep = delsarte_bound(1, 2, 1)
    assert rep.exact is None
    assert rep.sqrt5_part == 2
    assert rep.floored == 4


def test_two_position_cells():
    for d, floor_want in ((5, 2), (6, 2), (7, 2), (8, 2)):
        rep = delsarte_bound(2, d, 1)
        assert rep.status is LPStatus.OPTIMAL
        assert rep.floored == floor_want, d
    rep = delsarte_bound(2, 5, 1)
    assert rep.exact is None and rep.sqrt5_part == Fraction(3, 31)
    rep = delsarte_bound(2, 7, 1)
    assert rep.exact == 2


def test_low_distance_cells_stay_valid_bounds():
    # The reference table prints no value below d = 2n+1.  The exact LP
    # still has a finite optimum there, and it must dominate the true
    # maximum code sizes (4, 3, 2 known exactly at n = 1; 10 and 5 at
    # n = 2, d = 2 and 3).
    assert delsarte_bound(1, 1, 1).floored >= 4
    assert delsarte_bound(1, 2, 1).floored >= 3
    assert delsarte_bound(2, 2, 1).floored >= 10
    assert delsarte_bound(2, 3, 1).floored >= 5
    assert delsarte_bound(2, 3, 1).floored == 8  # frozen exact value


def test_three_position_spot_cell():
    # One n = 3 cell in the module suite; the remaining tabulated row is
    # exercised by the acceptance suite where the 10-minute budget lives.
    rep = delsarte_bound(3, 9, 1)
    assert rep.status is LPStatus.OPTIMAL
    assert rep.floored == 2


def test_huge_distance_kills_every_profile():
    rep = delsarte_bound(1, 100, 1)
    assert rep.status is LPStatus.OPTIMAL
    assert rep.exact == 1 and rep.floored == 1


def test_report_flags_unbounded_status():
    from aldkit.delsarte import DelsarteReport

    ray = DelsarteReport("delsarte", 3, 3, 1, LPStatus.UNBOUNDED)
    assert ray.unbounded
    assert ray.exact is None and ray.floored is None


def test_argument_validation():
    for bad in ((0, 3, 1), (1, 0, 1), (1, 3, 0)):
        with pytest.raises(ValueError):
            delsarte_bound(*bad)


def test_large_n_requires_a_budget(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)
    with pytest.raises(BudgetExceeded):
        delsarte_bound(4, 9, 1)


def test_exhausted_budget_refuses(monkeypatch):
    monkeypatch.delenv(BUDGET_ENV, raising=False)
    with pytest.raises(BudgetExceeded):
        delsarte_bound(4, 9, 1, budget_secs=-1)


def test_env_budget_is_honoured(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "-1")
    with pytest.raises(BudgetExceeded):
        delsarte_bound(4, 9, 1)
