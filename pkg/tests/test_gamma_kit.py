import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wallisqm.errors import DomainError
from wallisqm.gamma_kit import (BoundsTriple, GammaRatioQuery,
                                duplication_residual, gamma_ratio,
                                kazarinoff_bounds, log_gamma,
                                quartic_root_bounds, wallis_ratio,
                                wendel_deviation)

SQRT_PI = math.sqrt(math.pi)

# reference: mpmath loggamma at 40 digits
_LGAMMA_REFS = [
    (0.001, 6.907178885383853661684),
    (0.01, 4.599479878042021701581),
    (0.1, 2.252712651734205902006),
    (0.25, 1.288022524698077457371),
    (0.5, 0.5723649429247000870717),
    (0.75, 0.2032809514312953714814),
    (3.5, 1.200973602347074224816),
    (10.0, 12.80182748008146961121),
    (30.0, 71.25703896716800901007),
    (100.0, 359.134205369575398776),
    (1000.0, 5905.220423209181211826),
    (10000.0, 82099.71749644237727265),
    (100000.0, 1051287.708973656894901),
    (1000000.0, 12815504.56914761165998),
    (10000000.0, 151180949.3694739139401),
    (100000000.0, 1742068066.103834709276),
]


class TestLogGamma:
    def test_at_one(self):
        assert log_gamma(1.0) == 0.0

    def test_at_half(self):
        # Gamma(1/2) = sqrt(pi)
        assert log_gamma(0.5) == pytest.approx(math.log(SQRT_PI), rel=1e-15)

    def test_at_ten(self):
        # Gamma(10) = 9!, an exact integer
        assert log_gamma(10.0) == pytest.approx(math.log(math.factorial(9)), rel=1e-15)

    @pytest.mark.parametrize("x,ref", _LGAMMA_REFS)
    def test_accuracy_grid(self, x, ref):
        assert log_gamma(x) == pytest.approx(ref, rel=1e-14)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_rejects_nonpositive(self, x):
        with pytest.raises(DomainError):
            log_gamma(x)


class TestGammaRatio:
    def test_two_over_three_halves(self):
        # Gamma(1.5) = sqrt(pi)/2 by the recurrence, so Gamma(2)/Gamma(1.5) = 2/sqrt(pi)
        q = GammaRatioQuery(x=1.0, a=1.0, b=0.5)
        assert gamma_ratio(q) == pytest.approx(2.0 / SQRT_PI, rel=1e-14)

    def test_identical_shifts(self):
        assert gamma_ratio(GammaRatioQuery(7.3, 0.9, 0.9)) == 1.0

    def test_one_over_three_halves(self):
        q = GammaRatioQuery(x=1.0, a=0.0, b=0.5)
        assert gamma_ratio(q) == pytest.approx(2.0 / SQRT_PI, rel=1e-14)

    def test_pole_rejected(self):
        with pytest.raises(DomainError):
            GammaRatioQuery(x=1.0, a=-2.0, b=0.0)
        with pytest.raises(DomainError):
            GammaRatioQuery(x=1.0, a=0.0, b=-1.0)

    @given(st.floats(min_value=0.01, max_value=100.0))
    @settings(max_examples=200, deadline=None)
    def test_recurrence_property(self, x):
        # Gamma(x+1) = x Gamma(x)
        assert gamma_ratio(GammaRatioQuery(x, 1.0, 0.0)) == pytest.approx(x, rel=1e-13)

    @pytest.mark.parametrize("x", [100.0, 1e3, 1e4, 1e5, 1e6])
    @pytest.mark.parametrize("a,b", [(0.0, 0.5), (1.0, 0.5), (2.0, 0.0), (0.5, 1.5)])
    def test_stirling_ratio_asymptotic(self, x, a, b):
        dev = abs(gamma_ratio(GammaRatioQuery(x, a, b)) * x ** (b - a) - 1.0)
        assert dev < 10.0 / x


class TestWallisRatio:
    def test_small_values(self):
        assert wallis_ratio(0) == 1.0
        assert wallis_ratio(1) == 0.5          # 1!!/2!! by hand
        assert wallis_ratio(2) == 0.375        # (3*1)/(4*2) by hand

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            wallis_ratio(-1)

    @pytest.mark.parametrize("n", range(100, 151))
    def test_path_overlap(self, n):
        gamma_path = gamma_ratio(GammaRatioQuery(float(n), 0.5, 1.0)) / SQRT_PI
        assert wallis_ratio(n) == pytest.approx(gamma_path, rel=1e-13)

    @pytest.mark.parametrize("n", [0, 1, 5, 50, 149, 151, 1000, 10_000])
    def test_gamma_identity(self, n):
        # W_n * sqrt(pi) * Gamma(n+1)/Gamma(n+1/2) = 1
        prod = wallis_ratio(n) * SQRT_PI * gamma_ratio(GammaRatioQuery(float(n), 1.0, 0.5))
        assert prod == pytest.approx(1.0, abs=1e-12)


class TestKazarinoff:
    def test_n1_triple(self):
        t = kazarinoff_bounds(1)
        assert t.lower == pytest.approx(math.sqrt(1.25), rel=1e-15)
        assert t.value == pytest.approx(2.0 / SQRT_PI, rel=1e-14)
        assert t.upper == pytest.approx(math.sqrt(1.5), rel=1e-15)
        assert t.satisfied

    def test_n100(self):
        assert kazarinoff_bounds(100).satisfied

    def test_large_n_width(self):
        t = kazarinoff_bounds(10**6)
        assert t.satisfied
        assert (t.upper - t.lower) < 2.5e-4 * t.value

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=200, deadline=None)
    def test_sandwich_property(self, n):
        assert kazarinoff_bounds(n).satisfied

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            kazarinoff_bounds(0)


class TestQuarticRootBounds:
    def test_x1_triple(self):
        t = quartic_root_bounds(1.0)
        assert t.lower == pytest.approx(1.6171875 ** 0.25, rel=1e-15)
        assert t.value == pytest.approx(2.0 / SQRT_PI, rel=1e-14)
        assert t.upper == pytest.approx(1.625 ** 0.25, rel=1e-15)
        assert t.satisfied

    @pytest.mark.parametrize("x", [0.5, 50.0])
    def test_satisfied(self, x):
        assert quartic_root_bounds(x).satisfied

    def test_width_at_50(self):
        t = quartic_root_bounds(50.0)
        assert (t.upper - t.lower) < 1e-6 * t.value

    def test_certified_beyond_double_resolution(self):
        # the three doubles collide here, but the sandwich genuinely holds
        t = quartic_root_bounds(1e5)
        assert t.satisfied

    @pytest.mark.parametrize("x", [-1.0, 0.0, 0.05])
    def test_domain_rejected(self, x):
        with pytest.raises(DomainError):
            quartic_root_bounds(x)


class TestWendel:
    @pytest.mark.parametrize("x", [0.3, 1.0, 17.0, 1e5])
    def test_exact_zero_at_integer_shifts(self, x):
        assert wendel_deviation(x, 0.0) == 0.0
        assert wendel_deviation(x, 1.0) == 0.0

    def test_large_x(self):
        assert abs(wendel_deviation(1e6, 0.5)) < 1e-6

    @pytest.mark.parametrize("s", [0.25, 0.5, 0.75])
    def test_monotone_decay(self, s):
        devs = [abs(wendel_deviation(10.0 ** p, s)) for p in range(1, 7)]
        assert all(d2 <= d1 for d1, d2 in zip(devs, devs[1:]))

    def test_pole_rejected(self):
        with pytest.raises(DomainError):
            wendel_deviation(1.0, -2.0)
        with pytest.raises(DomainError):
            wendel_deviation(0.0, 0.5)


class TestDuplication:
    def test_l0(self):
        assert abs(duplication_residual(0)) < 1e-15

    def test_l1(self):
        # Gamma(3) = 2 and 4*Gamma(2)*Gamma(3/2)/sqrt(pi) = 2 exactly
        assert abs(duplication_residual(1)) < 1e-13

    def test_l20(self):
        assert abs(duplication_residual(20)) < 1e-12

    def test_up_to_500(self):
        assert max(abs(duplication_residual(l)) for l in range(501)) < 1e-12


def test_bounds_triple_is_plain_record():
    t = BoundsTriple(0.0, 0.5, 1.0, True)
    assert (t.lower, t.value, t.upper, t.satisfied) == (0.0, 0.5, 1.0, True)
