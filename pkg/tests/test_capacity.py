"""Per-draw capacities and secrecy rates.

Direct links run at full power P; the two-hop decode-and-forward path spends
P/2 per hop, so its SNR argument is g * P / (2 * sigma_n^2).
"""

import dataclasses
import math

import numpy as np
import pytest

from relaysec import (
    ChannelDraw,
    Scenario,
    df_capacity,
    df_secrecy,
    direct_capacity,
    direct_secrecy,
)


def draw(m=1, **kw):
    base = dict(g_sd=1.0, g_se=1.0, g_si=(1.0,) * m, g_id=(1.0,) * m, g_ie=(1.0,) * m)
    base.update(kw)
    return ChannelDraw(**base)


def scenario(m=1, power=1.0, noise_var=1.0):
    return Scenario(m, 1.0, 1.0, (1.0,) * m, (1.0,) * m, (1.0,) * m, power, noise_var)


class TestChannelDraw:
    def test_zero_gain_allowed(self):
        assert draw(g_sd=0.0).g_sd == 0.0

    def test_rejects_negative_gain(self):
        with pytest.raises(ValueError):
            draw(g_se=-0.1)
        with pytest.raises(ValueError):
            draw(g_si=(1.0, -1.0), g_id=(1.0, 1.0), g_ie=(1.0, 1.0))

    def test_rejects_ragged_relay_tuples(self):
        with pytest.raises(ValueError):
            ChannelDraw(1.0, 1.0, (1.0,), (1.0, 2.0), (1.0,))

    def test_frozen(self):
        with pytest.raises(dataclasses.FrozenInstanceError):
            draw().g_sd = 2.0


class TestDirectCapacity:
    def test_zero_gain_zero_rate(self):
        assert direct_capacity(0.0, 1.0, 1.0) == 0.0

    def test_unit_snr(self):
        # log2(1 + 1*1/1) = 1 bit
        assert direct_capacity(1.0, 1.0, 1.0) == 1.0

    def test_snr_three(self):
        assert direct_capacity(3.0, 1.0, 1.0) == pytest.approx(math.log2(4.0), rel=1e-15)

    def test_power_noise_scaling(self):
        assert direct_capacity(1.0, 4.0, 2.0) == pytest.approx(math.log2(3.0), rel=1e-15)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            direct_capacity(-1.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            direct_capacity(1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            direct_capacity(1.0, 1.0, 0.0)


class TestDirectSecrecy:
    def test_balanced_links_zero(self):
        assert direct_secrecy(draw(g_sd=1.0, g_se=1.0), scenario()) == 0.0

    def test_main_ahead(self):
        # log2(1+3) - log2(1+1) = 1
        d = draw(g_sd=3.0, g_se=1.0)
        assert direct_secrecy(d, scenario()) == pytest.approx(1.0, rel=1e-15)

    def test_eavesdropper_ahead_negative(self):
        d = draw(g_sd=1.0, g_se=3.0)
        assert direct_secrecy(d, scenario()) == pytest.approx(-1.0, rel=1e-15)

    def test_sign_tracks_gain_comparison_for_any_power(self):
        rng = np.random.default_rng(3)
        for _ in range(300):
            d = draw(g_sd=float(rng.exponential()), g_se=float(rng.exponential()))
            for p in (0.01, 1.0, 100.0):
                sc = scenario(power=p, noise_var=float(rng.uniform(0.1, 10.0)))
                sec = direct_secrecy(d, sc)
                if d.g_sd > d.g_se:
                    assert sec > 0.0
                elif d.g_sd < d.g_se:
                    assert sec < 0.0
                else:
                    assert sec == 0.0


class TestDfCapacity:
    def test_weak_hop_limits(self):
        # min(2, 9) = 2 at P=2, noise 1: log2(1 + 2*2/2) = log2(3)
        d = draw(g_si=(2.0,), g_id=(9.0,))
        assert df_capacity(0, d, scenario(power=2.0)) == pytest.approx(math.log2(3.0), rel=1e-15)

    def test_half_power_per_hop(self):
        # g=2 at P=2, noise 1: log2(1 + 2*2/2) = log2(3), not log2(5)
        d = draw(g_si=(2.0,), g_id=(2.0,))
        assert df_capacity(0, d, scenario(power=2.0)) == pytest.approx(
            math.log2(3.0), rel=1e-15
        )

    def test_matches_min_of_hop_rates(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            m = int(rng.integers(1, 5))
            d = draw(
                m,
                g_si=tuple(rng.exponential(size=m)),
                g_id=tuple(rng.exponential(size=m)),
                g_ie=tuple(rng.exponential(size=m)),
            )
            sc = scenario(m, power=float(rng.uniform(0.1, 10.0)))
            i = int(rng.integers(0, m))
            half = sc.power / (2.0 * sc.noise_var)
            expected = min(
                math.log2(1.0 + d.g_si[i] * half), math.log2(1.0 + d.g_id[i] * half)
            )
            assert df_capacity(i, d, sc) == pytest.approx(expected, rel=1e-14)

    def test_monotone_in_gains_and_power(self):
        d_lo = draw(g_si=(1.0,), g_id=(1.5,))
        d_hi = draw(g_si=(1.2,), g_id=(1.5,))
        assert df_capacity(0, d_hi, scenario()) > df_capacity(0, d_lo, scenario())
        assert df_capacity(0, d_lo, scenario(power=2.0)) > df_capacity(0, d_lo, scenario())

    def test_index_checked(self):
        with pytest.raises(IndexError):
            df_capacity(1, draw(), scenario())
        with pytest.raises(IndexError):
            df_capacity(-1, draw(), scenario())

    def test_draw_scenario_mismatch(self):
        with pytest.raises(ValueError):
            df_capacity(0, draw(m=2), scenario(m=1))


class TestDfSecrecy:
    def test_balanced_zero(self):
        d = draw(g_si=(1.0,), g_id=(1.0,), g_ie=(1.0,))
        assert df_secrecy(0, d, scenario()) == 0.0

    def test_worked_example(self):
        # min(1,9)=1 at P=2: log2(2) - log2(4) = -1
        d = draw(g_si=(1.0,), g_id=(9.0,), g_ie=(3.0,))
        assert df_secrecy(0, d, scenario(power=2.0)) == pytest.approx(-1.0, rel=1e-15)

    def test_positive_when_min_beats_eavesdropper(self):
        d = draw(g_si=(3.0,), g_id=(7.0,), g_ie=(1.0,))
        assert df_secrecy(0, d, scenario(power=2.0)) == pytest.approx(1.0, rel=1e-15)

    def test_sign_tracks_gain_comparison_for_any_power(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            m = int(rng.integers(1, 4))
            d = draw(
                m,
                g_si=tuple(rng.exponential(size=m)),
                g_id=tuple(rng.exponential(size=m)),
                g_ie=tuple(rng.exponential(size=m)),
            )
            i = int(rng.integers(0, m))
            for p in (0.01, 1.0, 100.0):
                sec = df_secrecy(i, d, scenario(m, power=p))
                lhs = min(d.g_si[i], d.g_id[i])
                if lhs > d.g_ie[i]:
                    assert sec > 0.0
                elif lhs < d.g_ie[i]:
                    assert sec < 0.0
                else:
                    assert sec == 0.0
