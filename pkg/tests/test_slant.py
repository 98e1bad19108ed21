import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slanthelix.curves import hyperbolic_circular
from slanthelix.errors import NotSlant
from slanthelix.frenet import FrenetFrame, canonical_frame, integrate_frenet, sample_frames
from slanthelix.functions import Func, Linear
from slanthelix.generator import SlantSpec, generate_slant_curve
from slanthelix.minkowski import CausalCharacter, inner
from slanthelix.numdiff import sampled_derivative
from slanthelix.profile import CurvatureProfile
from slanthelix.slant import (
    axis_report,
    axis_search,
    axis_vector,
    characteristic_F,
    check_slant,
    classify_axis,
    constants_AB,
    ratio_g,
    ratio_g_prime,
    slant_f,
    solve_a1,
)

K1, K2, K3 = np.sqrt(3.0), 2 * np.sqrt(6.0) / 3, np.sqrt(3.0) / 3
COS = Func(np.cos, (lambda s: -np.sin(s), lambda s: -np.cos(s)))
EXP = Func(np.exp, (np.exp, np.exp))
COSH = Func(np.cosh, (np.sinh, np.cosh))


def constant_ratio_profile():
    return CurvatureProfile(K1, K2, K3, domain=(0.0, 1.0))


def test_ratio_examples():
    p = constant_ratio_profile()
    assert ratio_g(p, 0.3) == pytest.approx(np.sqrt(2) / 4)
    assert ratio_g_prime(p, 0.3) == pytest.approx(0.0, abs=1e-15)
    p = CurvatureProfile(1, 1, COS, domain=(0, 1))
    assert ratio_g(p, 0.0) == 1.0 and ratio_g_prime(p, 0.0) == 0.0
    p = CurvatureProfile(1, 2, Linear(0, 2), domain=(1, 4))
    assert ratio_g(p, 3.0) == pytest.approx(3.0) and ratio_g_prime(p, 3.0) == pytest.approx(1.0)


def test_characteristic_F_examples():
    s = np.linspace(0, 1, 11)
    np.testing.assert_allclose(characteristic_F(CurvatureProfile(1, 1, COS, domain=(0, 1)), s), 1.0)
    np.testing.assert_allclose(characteristic_F(CurvatureProfile(1, 1, EXP, -1, 1), s), 0.0, atol=1e-14)
    sq = CurvatureProfile(1, 1, Func(lambda s: s**2, (lambda s: 2 * s, lambda s: 2 + 0 * s)), domain=(0.5, 3))
    assert characteristic_F(sq, 1.0) == pytest.approx(5.0)
    assert characteristic_F(sq, 2.0) == pytest.approx(32.0)
    np.testing.assert_allclose(characteristic_F(constant_ratio_profile(), s), 1 / 8)


def test_slant_f_examples():
    s = np.linspace(0, 1, 5)
    np.testing.assert_allclose(slant_f(CurvatureProfile(1, 1, COS, domain=(0, 1)), s), -np.sin(s))
    np.testing.assert_allclose(slant_f(CurvatureProfile(1, 1, COSH, -1, 1), s), -np.sinh(s))
    np.testing.assert_allclose(slant_f(constant_ratio_profile(), s), 0.0, atol=1e-15)


def test_check_slant_examples():
    v = check_slant(CurvatureProfile(1, 1, COS, domain=(0, 1)))
    assert v.is_slant and v.F_spread < 1e-12 and v.f_residual_max < 1e-12
    v = check_slant(constant_ratio_profile())
    assert not v.is_slant and v.degenerate_constant_ratio and v.F_spread < 1e-15
    sq = CurvatureProfile(1, 1, Func(lambda s: s**2, (lambda s: 2 * s, lambda s: 2 + 0 * s)), domain=(0.1, 1))
    v = check_slant(sq)
    assert not v.is_slant and v.f_residual_max == pytest.approx(3.0)


def test_axis_vector_canonical_example():
    p = CurvatureProfile(1, 1, 1, domain=(0, 1))  # f = 0, g = 1
    np.testing.assert_allclose(axis_vector(canonical_frame(1, 1), p, 0.5), [0, 0, 1, -1])


def boost(rapidity, angle):
    """Lorentz transformation: boost along x2, then rotation in the x3-x4 plane."""
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    L = np.eye(4)
    L[:2, :2] = [[ch, sh], [sh, ch]]
    R = np.eye(4)
    R[2:, 2:] = [[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]]
    return R @ L


@settings(max_examples=40)
@given(st.floats(-2, 2), st.floats(0, 6.3), st.sampled_from([(1, 1), (1, -1), (-1, 1)]),
       st.floats(0.2, 3), st.floats(0.2, 3))
def test_axis_vector_norm_identity(rapidity, angle, eps, k2, k3):
    eps1, eps2 = eps
    fr0 = canonical_frame(eps1, eps2)
    m = fr0.matrix @ boost(rapidity, angle).T
    fr = FrenetFrame.from_matrix(m, eps1, eps2)
    p = CurvatureProfile(Linear(1, 0.5), Linear(k2, 0.1), Linear(k3, 0.3), eps1, eps2, (0, 1))
    s = 0.4
    U = axis_vector(fr, p, s)
    f, g = slant_f(p, s), ratio_g(p, s)
    scale = 1 + np.sum(m**2)
    assert inner(U, fr.B2) == pytest.approx(-eps2, abs=1e-12 * scale)
    assert inner(U, U) == pytest.approx(f**2 + eps1 * g**2 + eps2, abs=1e-11 * scale)


def test_axis_report_plus_branch():
    fc, rep = generate_slant_curve(SlantSpec(C=1, D=0, s_range=(0, 1.5)))
    a = rep.axis
    assert a.U_variation < 1e-5 and a.B2_angle_variation < 1e-5 and a.B1_orthogonality_max < 1e-5
    assert a.U_norm_squared == pytest.approx(2.0)
    assert a.axis_class is CausalCharacter.SPACELIKE and a.m_value is None


def test_axis_report_lightlike_branch():
    fc, rep = generate_slant_curve(SlantSpec(C=1, D=0, eps1=-1, eps2=1, s_range=(0, 2)))
    assert rep.axis.m_value == pytest.approx(1.0)
    assert rep.axis.U_norm_squared == pytest.approx(0.0, abs=1e-12)
    assert rep.axis.axis_class is CausalCharacter.LIGHTLIKE


def test_classify_axis_examples():
    c, n2, ch = classify_axis(SlantSpec(C=0.5, D=0.5, eps1=-1, s_range=(0, 2)).profile)
    assert c == pytest.approx(0.0, abs=1e-12) and n2 == pytest.approx(1.0) and ch is CausalCharacter.SPACELIKE
    c, n2, ch = classify_axis(CurvatureProfile(1, 1, COSH, -1, 1, (0, 2)))
    assert c == pytest.approx(1.0) and ch is CausalCharacter.LIGHTLIKE
    c, n2, ch = classify_axis(CurvatureProfile(1, 1, COS, 1, 1, (0, 1)))
    assert n2 == pytest.approx(2.0) and ch is CausalCharacter.SPACELIKE
    with pytest.raises(NotSlant):
        classify_axis(constant_ratio_profile())


def test_timelike_axis_when_m_exceeds_one():
    # eps1 = -1: <U, U> = 1 - m, so m > 1 gives a timelike axis
    p = SlantSpec(C=2, D=0, eps1=-1, s_range=(0, 1)).profile
    c, n2, ch = classify_axis(p)
    assert c == pytest.approx(4.0) and n2 == pytest.approx(-3.0) and ch is CausalCharacter.TIMELIKE


def test_negative_m_with_spacelike_axis():
    # g = 0.1 cosh(phi) + sinh(phi) has m = 0.01 - 1 < 0 and yet <U, U> > 0
    p = SlantSpec(C=0.1, D=1, eps1=-1, s_range=(0, 1)).profile
    c, n2, ch = classify_axis(p)
    assert c == pytest.approx(-0.99) and ch is CausalCharacter.SPACELIKE


def test_solve_a1_examples():
    r = solve_a1(1, 1, 1.0, 0.0, (0, np.pi))
    assert r.numeric[-1] == pytest.approx(-1.0, abs=1e-10) and r.discrepancy < 1e-8
    r = solve_a1(1, -1, 1.0, 0.0, (0, 1))
    assert r.numeric[-1] == pytest.approx(np.cosh(1.0), abs=1e-10)


def test_solve_a1_against_independent_ode_oracle():
    mpmath = pytest.importorskip("mpmath")
    # a'' = (k1'/k1) a' - k1^2 a with k1 = 1 + s, by mpmath's Taylor integrator
    mpmath.mp.dps = 30
    sol = mpmath.odefun(lambda s, y: [y[1], y[1] / (1 + s) - (1 + s) ** 2 * y[0]], 0, [1, 0])
    oracle = float(sol(1)[0])
    assert oracle == pytest.approx(0.0707372016677029, abs=1e-13)
    r = solve_a1(Linear(1, 1), 1, 1.0, 0.0, (0, 1))
    assert r.numeric[-1] == pytest.approx(oracle, abs=1e-9)
    assert r.closed_form[-1] == pytest.approx(oracle, abs=1e-12)


@pytest.mark.parametrize("k1", [0.5, Linear(0.5, 1.5), Linear(2, -1.5)])
@pytest.mark.parametrize("eps1", [1, -1])
def test_solve_a1_bounded_k1(k1, eps1):
    assert solve_a1(k1, eps1, 0.7, -0.4, (0, 1), 1e-3).discrepancy < 1e-7


def test_constants_AB_examples():
    s = np.linspace(0, 2, 41)
    A, B = constants_AB(CurvatureProfile(1, 1, EXP, -1, 1, (0, 2)), 1.0, s)
    np.testing.assert_allclose(A, -1.0, atol=1e-9)
    np.testing.assert_allclose(B, -1.0, atol=1e-9)
    A, B = constants_AB(CurvatureProfile(1, 1, COSH, -1, 1, (0, 2)), 1.0, s)
    np.testing.assert_allclose(A, 0.0, atol=1e-9)
    np.testing.assert_allclose(B, -1.0, atol=1e-9)
    A, B = constants_AB(CurvatureProfile(1, 1, COSH, -1, 1, (0, 2)), 0.0, s)
    assert np.all(A == 0) and np.all(B == 0)
    with pytest.raises(ValueError):
        constants_AB(CurvatureProfile(1, 1, COS, 1, 1, (0, 1)), 1.0, s)


@pytest.mark.parametrize("C, D", [(1.0, 0.3), (0.4, -0.2), (1.5, 1.0)])
def test_constants_AB_spread_on_slant_profiles(C, D):
    p = SlantSpec(k1=Linear(1, 0.5), k2=Linear(2, -0.4), C=C, D=D, eps1=-1, s_range=(0, 1.5)).profile
    s = np.linspace(0, 1.5, 151)
    A, B = constants_AB(p, 1.3, s)
    assert np.ptp(A) < 1e-8 and np.ptp(B) < 1e-8
    m = ratio_g(p, 0.0) ** 2 - (ratio_g_prime(p, 0.0) / p.k1(0.0)) ** 2
    assert B[0] ** 2 - A[0] ** 2 == pytest.approx(1.3**2 * m)


def test_axis_derivative_identity():
    """U' = -(f' + k1 g) T along any integrated curve, slant or not."""
    p = CurvatureProfile(Linear(1, 0.5), 1.0, Linear(0.5, 1.0), domain=(0, 1))
    fc = integrate_frenet(p, step=1e-3)
    s = fc.s_values
    f, g = slant_f(p, s), ratio_g(p, s)
    U = -f[:, None] * fc.T + g[:, None] * fc.N - fc.B2
    dU = sampled_derivative(s, U)
    expected = -(p.slant_f_prime(s) + p.k1(s) * g)[:, None] * fc.T
    assert np.max(np.abs(dU - expected)) < 1e-6
    assert check_slant(p).is_slant is False


def test_scale_invariance():
    p = SlantSpec(C=1, D=0.2, s_range=(0, 1)).profile
    q = p.scaled(Linear(2, 1))
    s = np.linspace(0, 1, 21)
    np.testing.assert_allclose(characteristic_F(q, s), characteristic_F(p, s), rtol=1e-13)
    assert check_slant(q).is_slant and check_slant(p).is_slant


def test_axis_search_separates_slant_from_degenerate():
    fc, _ = generate_slant_curve(SlantSpec(C=1, D=0.5, s_range=(0, 1.5)))
    assert axis_search(fc.B2).relative_residual < 1e-6
    c = hyperbolic_circular()
    fc, _ = sample_frames(c, np.linspace(-np.pi, np.pi, 200))
    assert axis_search(fc.B2).relative_residual > 0.1
