import numpy as np
import pytest

from slanthelix.errors import NonPositiveCurvature, SignatureViolation, TooFewSamples
from slanthelix.functions import Const, Func, Linear, Product, parse_function_spec
from slanthelix.profile import (
    CurvatureProfile,
    SampledProfile,
    load_profile_csv,
    phi,
    save_profile_csv,
    validate_signature,
)


@pytest.mark.parametrize("signs, ok", [((1, 1), True), ((1, -1), True), ((-1, 1), True), ((-1, -1), False)])
def test_validate_signature(signs, ok):
    assert validate_signature(*signs) is ok


def test_signature_violation_and_positivity():
    with pytest.raises(SignatureViolation):
        CurvatureProfile(1, 1, 1, -1, -1)
    with pytest.raises(NonPositiveCurvature):
        CurvatureProfile(1, 1, Func(np.cos), domain=(0, 3))


def test_function_specs():
    assert parse_function_spec("const:2")(5.0) == 2.0
    lin = parse_function_spec("linear:1,0.5")
    assert lin(2.0) == 2.0 and lin(2.0, 1) == 0.5 and lin(2.0, 2) == 0.0
    for bad in ("quad:1", "const", "linear:1", "const:x"):
        with pytest.raises(ValueError):
            parse_function_spec(bad)


def test_product_rule():
    p = Product(Linear(1, 2), Func(np.sin, (np.cos, lambda s: -np.sin(s))))
    s = 0.7
    assert p(s, 1) == pytest.approx(2 * np.sin(s) + (1 + 2 * s) * np.cos(s))
    assert p(s, 2) == pytest.approx(4 * np.cos(s) - (1 + 2 * s) * np.sin(s))


def test_ratio_derivatives():
    prof = CurvatureProfile(1, 2, Linear(0.1, 2), domain=(0.0, 4.0))
    assert prof.ratio(3.0) == pytest.approx(3.05)
    assert prof.ratio(3.0, 1) == pytest.approx(1.0)
    assert prof.ratio(3.0, 2) == pytest.approx(0.0)


def test_phi():
    assert phi(1, 3.0) == pytest.approx(3.0)
    assert phi(2, 3.0) == pytest.approx(6.0)
    assert abs(phi(Linear(1, 1), 1.0) - 1.5) < 1e-10
    s = np.linspace(0, 2, 7)
    np.testing.assert_allclose(phi(Func(np.cos), s), np.sin(s), atol=1e-10)
    assert np.all(np.diff(phi(Linear(1, 1), s)) > 0)


def test_sampled_profile_matches_functional():
    f = CurvatureProfile(1, 1, Func(np.cos, (lambda s: -np.sin(s), lambda s: -np.cos(s))), domain=(0, 1))
    s = np.linspace(0, 1, 101)
    sp = SampledProfile(s, *[np.asarray(k) * np.ones_like(s) for k in f.curvatures(s)])
    np.testing.assert_allclose(sp.ratio(s), f.ratio(s))
    np.testing.assert_allclose(sp.ratio(s, 1), f.ratio(s, 1), atol=1e-5)
    np.testing.assert_allclose(sp.slant_f_prime(s), f.slant_f_prime(s), atol=1e-4)
    assert sp.k3(0.505) == pytest.approx(np.cos(0.505), abs=1e-8)


def test_profile_csv(tmp_path):
    s = np.linspace(0, 1, 11)
    path = tmp_path / "p.csv"
    save_profile_csv(path, s, 1 + s, np.ones_like(s), np.cos(s))
    prof = load_profile_csv(path, 1, -1)
    assert (prof.eps1, prof.eps2) == (1, -1) and len(prof) == 11
    save_profile_csv(path, s[:4], s[:4] + 1, s[:4] + 1, s[:4] + 1)
    with pytest.raises(TooFewSamples):
        load_profile_csv(path)
    save_profile_csv(path, s, 1 + s, 0 * s, np.cos(s))
    with pytest.raises(NonPositiveCurvature):
        load_profile_csv(path)


def test_scaled_and_flipped_profiles_keep_ratio():
    prof = CurvatureProfile(1, 1, Linear(1, 1), domain=(0, 1))
    s = np.linspace(0, 1, 5)
    np.testing.assert_allclose(prof.scaled(Linear(2, 1)).ratio(s, 1), prof.ratio(s, 1))
    assert prof.with_eps2(-1).eps2 == -1
    assert isinstance(Const(1.0)(np.zeros(3)), np.ndarray)
