import numpy as np
import pytest

from slanthelix.curves import hyperbolic_circular, line
from slanthelix.errors import DegenerateFrame, InvalidInitialFrame, SignatureViolation
from slanthelix.frenet import (
    FrenetFrame,
    canonical_frame,
    curvature_profile,
    frame_at,
    frame_curvatures,
    integrate_frenet,
    load_framed_csv,
    orthonormality_defect,
    sample_frames,
)
from slanthelix.minkowski import gram
from slanthelix.profile import CurvatureProfile

K1, K2, K3 = np.sqrt(3.0), 2 * np.sqrt(6.0) / 3, np.sqrt(3.0) / 3


@pytest.mark.parametrize("s", [-2.0, 0.0, 0.7, 3.0])
def test_frame_at_hyperbolic_circular(s):
    frame, k = frame_at(hyperbolic_circular(), s)
    assert (frame.eps1, frame.eps2) == (1, 1)
    np.testing.assert_allclose(tuple(k), (K1, K2, K3), rtol=1e-10)
    assert frame.defect() < 1e-10


def test_frame_at_line_is_degenerate():
    with pytest.raises(DegenerateFrame):
        frame_at(line(), 0.0)
    with pytest.raises(DegenerateFrame):
        curvature_profile(line(), [0.0, 1.0])


def test_curvature_profile_of_hyperbolic_circular():
    prof = curvature_profile(hyperbolic_circular(), np.linspace(0, 5, 101))
    assert (prof.eps1, prof.eps2) == (1, 1)
    for k, ref in zip((prof.k1_values, prof.k2_values, prof.k3_values), (K1, K2, K3)):
        np.testing.assert_allclose(k, ref, rtol=1e-9)


@pytest.mark.parametrize("eps", [(1, 1), (1, -1), (-1, 1)])
def test_canonical_frames(eps):
    fr = canonical_frame(*eps)
    assert orthonormality_defect(fr) == 0.0
    np.testing.assert_array_equal(fr.T, [0, 1, 0, 0])
    np.testing.assert_array_equal(np.diag(gram(fr.matrix)), [1, eps[0], -eps[0] * eps[1], eps[1]])


def test_canonical_frame_plus_plus_layout():
    fr = canonical_frame(1, 1)
    e1, e2, e3, e4 = np.eye(4)
    np.testing.assert_array_equal(fr.matrix, [e2, e3, e1, e4])
    with pytest.raises(SignatureViolation):
        canonical_frame(-1, -1)


def test_scaled_tangent_defect():
    fr = canonical_frame(1, 1)
    bad = FrenetFrame(1.1 * fr.T, fr.N, fr.B1, fr.B2, 1, 1)
    assert orthonormality_defect(bad) == pytest.approx(0.21)


def test_integrate_rejects_bad_frames():
    prof = CurvatureProfile(1, 1, 1)
    fr = canonical_frame(1, 1)
    with pytest.raises(InvalidInitialFrame):
        integrate_frenet(prof, init_frame=FrenetFrame(np.sqrt(2) * fr.T, fr.N, fr.B1, fr.B2, 1, 1))
    with pytest.raises(InvalidInitialFrame):
        integrate_frenet(prof, init_frame=canonical_frame(1, -1))


def test_zero_length_range():
    fc = integrate_frenet(CurvatureProfile(1, 1, 1), s_range=(0.5, 0.5))
    assert len(fc) == 1
    np.testing.assert_array_equal(fc.frames[0], canonical_frame(1, 1).matrix)


def test_integrate_reproduces_hyperbolic_circular_curvatures():
    prof = CurvatureProfile(K1, K2, K3, domain=(0.0, 2.0))
    fc = integrate_frenet(prof, step=1e-3)
    assert fc.max_defect < 1e-10
    rec = frame_curvatures(fc)
    for k, ref in zip((rec.k1_values, rec.k2_values, rec.k3_values), (K1, K2, K3)):
        np.testing.assert_allclose(k, ref, rtol=1e-9)


def test_integrate_double_double_agrees_with_double():
    prof = CurvatureProfile(1, 1, 1, domain=(0.0, 2.0))
    a = integrate_frenet(prof, precision="double")
    b = integrate_frenet(prof, precision="double-double")
    np.testing.assert_allclose(a.frames, b.frames, atol=1e-11)
    assert b.max_defect <= a.max_defect


def test_reorthonormalization_reduces_defect():
    # frame components reach ~1e5 on [0, 10]; float64 rounding of the Gram
    # matrix alone then costs ~1e-5, so only the improvement is asserted
    prof = CurvatureProfile(1, 1, 1, domain=(0.0, 10.0))
    plain = integrate_frenet(prof)
    polished = integrate_frenet(prof, reorthonormalize_every=100)
    assert polished.max_defect < plain.max_defect / 5


@pytest.mark.parametrize("eps", [(1, -1), (-1, 1)])
def test_round_trip_other_signatures(eps):
    prof = CurvatureProfile(1.0, 0.8, 1.2, *eps, domain=(0.0, 1.5))
    fc = integrate_frenet(prof)
    sc = fc.as_sampled_curve(fd_step=1e-4)
    grid = sc.interior_samples(60)
    _, rec = sample_frames(sc, grid)
    assert (rec.eps1, rec.eps2) == eps
    np.testing.assert_allclose(rec.k1_values, 1.0, rtol=1e-4)
    np.testing.assert_allclose(rec.k2_values, 0.8, rtol=1e-4)
    np.testing.assert_allclose(rec.k3_values, 1.2, rtol=1e-4)


def test_framed_csv_round_trip(tmp_path):
    fc = integrate_frenet(CurvatureProfile(1, 1, 1, -1, 1, domain=(0, 0.1)))
    path = tmp_path / "f.csv"
    fc.to_csv(path)
    back = load_framed_csv(path)
    assert (back.eps1, back.eps2) == (-1, 1)
    np.testing.assert_array_equal(back.frames, fc.frames)
    np.testing.assert_array_equal(back.points, fc.points)
