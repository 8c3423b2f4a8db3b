import numpy as np
import pytest

from gn3flux.constitutive import ThermalState, eval_flux, eval_scalar, sample_states
from gn3flux.entropy_principle import discrepancy
from gn3flux.library import PROPORTIONAL_ISO, bundled_models
from gn3flux.representation_lab import (
    DegenerateConfiguration,
    FrameError,
    ResidualTooLarge,
    extract_iso_coeffs,
    extract_transiso_coeffs,
    isotropy_defect,
    lemma_extract,
    lemma_tensor,
    rotation_defect,
    run_lemma_suite,
)
from gn3flux.tensor_core import rotation_about_axis

E3 = np.array([0.0, 0.0, 1.0])


def test_defect_of_manifestly_isotropic_field():
    assert isotropy_defect(lambda u, v: (u @ v) * u, samples=1000, seed=0) <= 1e-12


def test_defect_of_fixed_vector_field():
    # random sampling gets within epsilon of the supremum 2 ...
    assert isotropy_defect(lambda u, v: E3, samples=1000, seed=0) >= 1.9
    # ... and the half-turn about a perpendicular axis realizes it
    witness = rotation_defect(
        lambda u, v: E3,
        rotation_about_axis(np.array([1.0, 0.0, 0.0]), np.pi),
        np.array([1.0, 0.0, 0.0]),
        np.array([0.0, 1.0, 0.0]),
    )
    assert abs(witness - 2.0) <= 1e-12


def test_fixed_vector_is_equivariant_about_its_own_axis():
    assert isotropy_defect(
        lambda u, v: E3, group="about", axis=E3, samples=1000, seed=0
    ) <= 1e-12


def test_defect_invalid_arguments():
    with pytest.raises(ValueError):
        isotropy_defect(lambda u, v: u, samples=0)
    with pytest.raises(ValueError):
        isotropy_defect(lambda u, v: u, group="about")
    with pytest.raises(ValueError):
        isotropy_defect(lambda u, v: u, group="nope")


def test_extract_iso_by_construction():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([1.0, 1.0, 0.0])
    f = (u @ v) * u
    got = extract_iso_coeffs(f, u, v)
    assert abs(got.phi1 - 1.0) <= 1e-14
    assert abs(got.phi2) <= 1e-14
    assert got.residual <= 1e-14


def test_extract_iso_orthonormal_pair():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    got = extract_iso_coeffs(u + 2.0 * v, u, v)
    assert (got.phi1, got.phi2) == (1.0, 2.0)


def test_extract_iso_degenerate_alignment():
    u = np.array([1.0, 2.0, 0.0])
    with pytest.raises(DegenerateConfiguration):
        extract_iso_coeffs(u, u, 3.0 * u)


def test_extract_iso_rejects_out_of_span():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    with pytest.raises(ResidualTooLarge):
        extract_iso_coeffs(np.array([0.0, 0.0, 1.0]), u, v)


def test_extract_transiso_by_construction():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    got = extract_transiso_coeffs(u - v + 0.5 * E3, u, v, E3)
    assert (got.phi1, got.phi2, got.phi3) == (1.0, -1.0, 0.5)


def test_extract_transiso_coplanar_degenerate():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    with pytest.raises(DegenerateConfiguration):
        extract_transiso_coeffs(u + v, u, v, u + 2.0 * v)


def test_extract_transiso_matches_axial_discrepancy():
    # phi3(h) - lambda phi3(q) equals the axial discrepancy component;
    # states are kept angle-wise non-degenerate so the solve is well
    # conditioned, and da sits at the counterexample's reference scale
    m = bundled_models()["transiso_counterexample"]
    rng = np.random.default_rng(47)
    batch = sample_states(m, 200, rng, fixed_alpha_dot=2.0)
    checked = 0
    for i in range(200):
        st = batch.state(i)
        basis = np.stack([st.u / np.linalg.norm(st.u), st.v / np.linalg.norm(st.v), m.axis])
        if abs(np.linalg.det(basis @ basis.T)) < 0.05:
            continue
        h3 = extract_transiso_coeffs(eval_flux(m, "h", st), st.u, st.v, m.axis).phi3
        q3 = extract_transiso_coeffs(eval_flux(m, "q", st), st.u, st.v, m.axis).phi3
        lam = eval_scalar(m, "lambda", st)
        d = discrepancy(m, st)
        assert abs((h3 - lam * q3) - d.axial) <= 1e-10
        checked += 1
    assert checked >= 100


def test_reconstruction_of_bundled_isotropic_fluxes():
    rng = np.random.default_rng(53)
    for name in PROPORTIONAL_ISO:
        m = bundled_models()[name]
        batch = sample_states(m, 1000, rng)
        for i in range(0, 1000, 7):
            st = batch.state(i)
            for which in ("h", "q"):
                got = extract_iso_coeffs(eval_flux(m, which, st), st.u, st.v)
                assert got.residual <= 1e-9


def test_defect_extraction_coherence():
    # a field with tiny isotropy defect extracts with tiny residual
    m = bundled_models()["iso_invariant_nonlinear"]

    def f(u, v):
        return eval_flux(m, "h", ThermalState(0.0, 5.0, u, v))

    assert isotropy_defect(f, samples=300, seed=1) <= 1e-10
    rng = np.random.default_rng(55)
    batch = sample_states(m, 200, rng)
    for i in range(0, 200, 9):
        st = batch.state(i)
        assert extract_iso_coeffs(f(st.u, st.v), st.u, st.v).residual <= 1e-8


# -- dyadic-basis lemmas -------------------------------------------------------

def test_lemma_four_round_trip_by_construction():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    coeffs = (2.0, -1.0, 3.0, 0.5)
    got = lemma_extract(lemma_tensor(coeffs, u, v), u, v)
    assert np.max(np.abs(np.array(got.values) - np.array(coeffs))) <= 1e-12


def test_lemma_zero_tensor_maps_to_zero():
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    assert lemma_extract(np.zeros((3, 3)), u, v).values == (0.0, 0.0, 0.0, 0.0)
    got = lemma_extract(np.zeros((3, 3)), u, v, E3)
    assert got.values == (0.0,) * 7


def test_lemma_seven_round_trip_spec_tuple():
    # (1, 1, 1, 0, -2, 0, 0) lies in the trace-free-dyad gauge and
    # round-trips exactly
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    coeffs = (1.0, 1.0, 1.0, 0.0, -2.0, 0.0, 0.0)
    got = lemma_extract(lemma_tensor(coeffs, u, v, E3), u, v, E3)
    assert np.max(np.abs(np.array(got.values) - np.array(coeffs))) <= 1e-12


def test_lemma_seven_gauge_round_trips():
    rng = np.random.default_rng(59)
    for _ in range(300):
        frame = np.linalg.qr(rng.standard_normal((3, 3)))[0]
        u, v = frame[:, 0], frame[:, 1]
        e = np.cross(u, v)
        coeffs = rng.uniform(-3, 3, size=7)
        coeffs[4] = -(coeffs[1] + coeffs[2])  # trace-free dyad gauge
        got = lemma_extract(lemma_tensor(coeffs, u, v, e), u, v, e)
        assert np.max(np.abs(np.array(got.values) - coeffs)) <= 1e-12


def test_lemma_seven_off_gauge_reassembles_same_tensor():
    # off the gauge the tuple is not unique (uu + vv + ee = I), but the
    # extracted representative builds the same tensor
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    coeffs = (0.0, 2.0, 2.0, 0.0, -1.0, 0.0, 0.0)
    t = lemma_tensor(coeffs, u, v, E3)
    got = lemma_extract(t, u, v, E3)
    assert np.max(np.abs(lemma_tensor(got.values, u, v, E3) - t)) <= 1e-12


def test_lemma_injectivity_norm_ratio():
    rng = np.random.default_rng(61)
    for _ in range(200):
        frame = np.linalg.qr(rng.standard_normal((3, 3)))[0]
        u, v = frame[:, 0], frame[:, 1]
        coeffs = rng.uniform(-3, 3, size=4)
        coeffs[rng.integers(0, 4)] += 2.0
        got = np.array(lemma_extract(lemma_tensor(coeffs, u, v), u, v).values)
        assert np.linalg.norm(got) / np.linalg.norm(coeffs) >= 0.99


def test_lemma_rejects_non_orthonormal_frame():
    with pytest.raises(FrameError):
        lemma_extract(np.eye(3), np.array([1.0, 1.0, 0.0]), np.array([0.0, 1.0, 0.0]))
    with pytest.raises(FrameError):
        # u x v = -e: wrong orientation for the seven-coefficient frame
        lemma_extract(
            np.eye(3), np.array([0.0, 1.0, 0.0]), np.array([1.0, 0.0, 0.0]), E3
        )


def test_lemma_gram_schmidt_mode_reports_frame():
    t = np.diag([1.0, 2.0, 3.0])
    coeffs, (u, v, e) = lemma_extract(
        t, np.array([2.0, 0.0, 0.0]), np.array([1.0, 1.0, 0.0]), orthonormalize=True
    )
    assert np.allclose(u, [1, 0, 0]) and np.allclose(v, [0, 1, 0])
    assert e is None
    rebuilt = lemma_tensor(coeffs.values, u, v)
    assert np.max(np.abs(rebuilt - t)) <= 1e-12


def test_suite_passes_and_corruption_fails():
    report = run_lemma_suite(seed=0, samples=200)
    assert report["all_passed"]
    names = {c["name"] for c in report["checks"]}
    assert {"lemma4_round_trip", "lemma7_round_trip", "zero_tensor"} <= names
    bad = run_lemma_suite(seed=0, samples=200, corrupt=True)
    assert not bad["all_passed"]


def test_suite_single_sample_still_valid():
    report = run_lemma_suite(seed=3, samples=1)
    assert report["samples"] == 1
    assert report["all_passed"]
