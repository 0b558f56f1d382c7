import pytest
from hypothesis import given
from hypothesis import strategies as st

from rhnumbers.bounds import arh_digit_bound, floor_log, mrh_digit_bound


class TestFloorLog:
    @pytest.mark.parametrize(
        "base,m,expected",
        [(10, 1, 0), (10, 9, 0), (10, 10, 1), (10, 10**6, 6), (2, 255, 7), (2, 256, 8)],
    )
    def test_values(self, base, m, expected):
        assert floor_log(base, m) == expected

    @given(st.integers(min_value=2, max_value=16), st.integers(min_value=1, max_value=10**18))
    def test_exactness(self, base, m):
        e = floor_log(base, m)
        assert base**e <= m < base ** (e + 1)


class TestArhBound:
    def test_base10_m1(self):
        assert arh_digit_bound(10, 1).k_max == 3

    def test_base2_m1(self):
        assert arh_digit_bound(2, 1).k_max == 4

    def test_strong_clause_base10(self):
        spec = arh_digit_bound(10, 10**6)
        assert spec.k_max == 12
        assert "strong" in spec.source

    def test_strong_threshold_is_literal(self):
        # One below the threshold keeps the base clause.
        below = arh_digit_bound(10, 10**6 - 1)
        assert below.k_max == 10**6 + 1
        assert "strong" not in below.source

    @pytest.mark.parametrize("base", [2, 3, 4, 9, 10, 16])
    def test_monotone_in_m_base_clause(self, base):
        caps = [arh_digit_bound(base, m).k_max for m in range(1, 60)]
        assert caps == sorted(caps)

    def test_source_names_one_clause(self):
        assert arh_digit_bound(5, 3).source == "k <= M+2 (b >= 4)"
        assert arh_digit_bound(3, 3).source == "k <= M+3 (b = 2 or 3)"


class TestMrhBound:
    def test_base10_m1(self):
        assert mrh_digit_bound(10, 1).k_max == 5

    def test_base5_m1(self):
        assert mrh_digit_bound(5, 1).k_max == 6

    def test_base2_m1(self):
        assert mrh_digit_bound(2, 1).k_max == 8

    def test_strong_clause_base10(self):
        spec = mrh_digit_bound(10, 10**9)
        assert spec.k_max == 27
        assert "strong" in spec.source

    @pytest.mark.parametrize(
        "base,threshold", [(10, 10**9), (9, 9**9), (8, 8**10), (4, 4**11), (3, 3**12), (2, 2**16)]
    )
    def test_strong_thresholds(self, base, threshold):
        assert "strong" in mrh_digit_bound(base, threshold).source
        assert "strong" not in mrh_digit_bound(base, threshold - 1).source

    @pytest.mark.parametrize("base", [2, 4, 5, 6, 10])
    def test_monotone_in_m_base_clause(self, base):
        caps = [mrh_digit_bound(base, m).k_max for m in range(1, 60)]
        assert caps == sorted(caps)


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        arh_digit_bound(10, 0)
    with pytest.raises(ValueError):
        mrh_digit_bound(1, 5)
