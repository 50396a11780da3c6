import mpmath
import pytest
from mpmath import mpf

from dfroot.errors import UnknownMethod, WeightSingular
from dfroot.schemes import (FAMILY_NAMES, MethodConfig, Scheme, check_weight_conditions,
                            eval_weight_G, eval_weight_H, make_named_config, method_config)


@pytest.mark.parametrize("omega", ["0.01", "-0.022", "0", "3"])
def test_g1_at_origin(omega, ctx100):
    assert eval_weight_G("G1", mpf(omega), mpf(0), mpf(0)) == 1


def test_g2_at_origin(ctx100):
    assert eval_weight_G("G2", mpf(0), mpf(0), mpf(0)) == 1


def test_g1_value(ctx100):
    got = eval_weight_G("G1", mpf("0.01"), mpf("0.1"), mpf("0.2"))
    assert mpmath.almosteq(got, 1 / mpf("0.7009"), mpf(10) ** -95)


def test_g2_value(ctx100):
    t1, t2 = mpf("0.1"), mpf("0.2")
    expected = 1 + t1 + t2 + t1**2 + mpf("1.9") * t2**2 + mpf("4.4") * t1 * t2
    assert eval_weight_G("G2", 0, t1, t2) == expected


def test_g1_singular(ctx100):
    # 1 - s + 0*s^2 vanishes at s = 1
    with pytest.raises(WeightSingular):
        eval_weight_G("G1", mpf(0), mpf("0.5"), mpf("0.5"))


@pytest.mark.parametrize("kind", ["H1", "H2", "H3", "H4", "H5"])
def test_h_at_origin(kind, ctx100):
    assert eval_weight_H(kind, mpf(0), mpf(0)) == 1


def test_h4_value(ctx100):
    assert mpmath.almosteq(eval_weight_H("H4", mpf("0.1"), mpf("0.2")), mpf("1.09"), mpf(10) ** -95)


def test_h_values(ctx100):
    s1, s2 = mpf("0.1"), mpf("0.2")
    assert eval_weight_H("H2", s1, s2) == 1 / (1 + s1 * s2 + s1**2 + s2**2)
    assert eval_weight_H("H3", s1, s2) == 1 + s2**4 + s2**6
    assert eval_weight_H("H5", s1, s2) == 1 / (1 - 20 * s1 * s2)


def test_h5_singular(ctx100):
    with pytest.raises(WeightSingular):
        eval_weight_H("H5", mpf("0.25"), mpf("0.2"))


def test_h2_singular_needs_complex_free_zero(ctx100):
    # 1 + s1 s2 + s1^2 + s2^2 > 0 for real arguments, so only exact cancellation matters
    assert eval_weight_H("H2", mpf(-1), mpf(1)) == 1 / mpf(2)


def test_unknown_kind():
    with pytest.raises(ValueError):
        eval_weight_G("G3", 0, 0, 0)
    with pytest.raises(ValueError):
        eval_weight_H("H6", 0, 0)


@pytest.mark.parametrize("omega", ["0.01", "-0.022", "-0.001", "-0.01", "1", "-1"])
def test_conditions_g1(omega, ctx300):
    rep = check_weight_conditions("G1", omega)
    assert rep.passed, rep.describe()
    assert len(rep.conditions) == 3
    # analytic second partials of G1 at the origin are 2 - 2 omega
    for v in rep.second_partials.values():
        assert mpmath.almosteq(v, 2 - 2 * mpf(omega), 1e-50)


def test_conditions_g2(ctx300):
    rep = check_weight_conditions("G2")
    assert rep.passed
    parts = rep.second_partials
    assert mpmath.almosteq(parts["d2G/dt12"], 2, 1e-50)
    assert mpmath.almosteq(parts["d2G/dt22"], mpf("3.8"), 1e-50)
    assert mpmath.almosteq(parts["d2G/dt1dt2"], mpf("4.4"), 1e-50)


@pytest.mark.parametrize("kind", ["H1", "H2", "H3", "H4", "H5"])
def test_conditions_h(kind):
    assert check_weight_conditions(kind).passed


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_conditions_named_configs(name):
    rep = check_weight_conditions(make_named_config(name))
    assert len(rep.conditions) == 6
    assert rep.passed


def test_conditions_detect_violation(monkeypatch):
    # a G without the unit t2-slope must be flagged
    import dfroot.schemes.weights as w
    real = w.eval_weight_G
    monkeypatch.setattr(w, "eval_weight_G", lambda k, om, t1, t2: real(k, om, t1, 0 * t2))
    rep = w.check_weight_conditions("G1", "0.01")
    assert not rep.passed
    assert [c.passed for c in rep.conditions] == [True, True, False]


@pytest.mark.parametrize("name,expected", [
    ("L1", ("G1", "H1", "0.01")), ("L2", ("G1", "H1", "-0.022")), ("L3", ("G1", "H1", "-0.001")),
    ("L4", ("G2", "H1", "0.01")), ("L5", ("G1", "H3", "-0.01")), ("L6", ("G1", "H2", "0.01")),
    ("L7", ("G1", "H4", "0.01")), ("L8", ("G1", "H5", "0.01")),
])
def test_named_configs(name, expected):
    cfg = make_named_config(name)
    assert (cfg.g_kind, cfg.h_kind, cfg.omega) == expected
    assert cfg.kappa == "0.01" and cfg.scheme is Scheme.FAMILY and cfg.cost == 4


def test_unknown_named():
    with pytest.raises(UnknownMethod):
        make_named_config("L9")
    with pytest.raises(UnknownMethod):
        method_config("Halley")


def test_method_config_overrides():
    cfg = method_config("L1", omega="-0.5", kappa=None)
    assert cfg.omega == "-0.5" and cfg.kappa == "0.01"
    assert method_config("M2").scheme is Scheme.THUKRAL_M2
    assert method_config("KT").beta == "1"


def test_config_invariants():
    with pytest.raises(ValueError):
        MethodConfig(Scheme.FAMILY, kappa="0")
    with pytest.raises(ValueError):
        MethodConfig(Scheme.KUNG_TRAUB, beta="-1")
    with pytest.raises(ValueError):
        MethodConfig(Scheme.FAMILY, g_kind="G7")
