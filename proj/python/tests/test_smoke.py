"""Smoke tests for the stokesthermo extension module."""
import math

import pytest

import stokesthermo as st


def test_faddeeva_anchors():
    assert st.faddeeva(0j) == 1.0 + 0.0j
    assert abs(st.faddeeva(1j).real - 0.4275835761558070) < 1e-13
    assert abs(st.erf_complex(1.0 + 0j).real - 0.8427007929497149) < 1e-13


def test_species_and_speeds():
    rb = st.AtomSpecies()
    assert abs(st.most_probable_speed(rb, 300.0) - 239.585221141723) < 1e-9
    assert st.most_probable_speed(rb, 0.0) == 0.0
    assert abs(st.motion_radius(rb, 1e-4, 1e-8) - 1.38324591920030e-9) < 1e-20


def test_angular_scan_and_fwhm():
    model = st.ExperimentModel.from_temperature(
        st.AtomSpecies(), st.CloudGeometry(), st.PumpPulse(2e-3, 1e-5), 1.0
    )
    dist = st.angular_scan(model, 0.0, math.radians(1.0), 401, 96)
    assert dist.values[0] == 1.0
    assert max(dist.values) == 1.0
    f = st.fwhm(dist)
    assert 0.0 < f < math.radians(1.0)


def test_weight_scan_bounds():
    model = st.ExperimentModel.from_motion_radius(
        st.AtomSpecies(), st.CloudGeometry(), st.PumpPulse(2e-3, 1e-5), 1e-4
    )
    prof = st.weight_scan(model, 0.0, math.radians(5.0), 51, 64)
    assert len(prof.weights) == 51
    assert all(0.0 <= w <= 1.0 for w in prof.weights)
    assert prof.weights[0] == max(prof.weights)


def test_calibrate_and_invert(tmp_path):
    setup = st.CalibrationSetup(tau=1e-5, nodes_per_axis=64, scan_points=301)
    grid = [1e-6 * (10000.0 ** (i / 7.0)) for i in range(8)]
    curve = st.calibrate(setup, grid)
    fw = [p.fwhm_rad for p in curve.points]
    assert fw == sorted(fw, reverse=True)

    t = st.invert_temperature(curve, curve.points[3].fwhm_rad)
    assert t == curve.points[3].temperature_K

    path = tmp_path / "cal.csv"
    st.save_curve(curve, str(path))
    back = st.load_curve(str(path))
    assert back.model_fingerprint == curve.model_fingerprint
    assert len(back.points) == len(curve.points)


def test_errors_are_raised():
    rb = st.AtomSpecies()
    with pytest.raises(Exception):
        st.most_probable_speed(rb, -1.0)
    with pytest.raises(Exception):
        st.parse_temperature_literal("warm")


def test_closed_form_matches_quadrature():
    g = st.windowed_gaussian_fourier(1e-4, 5e3, 2e-5, 2e-3, 2e-3)
    q = st.windowed_gaussian_fourier_quadrature(1e-4, 5e3, 2e-5, 2e-3, 2e-3, 1e-13)
    assert abs(g - q) <= max(1e-8 * abs(q), 1e-12)
