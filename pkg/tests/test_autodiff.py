import numpy as np
import pytest

from gn3flux.autodiff import (
    DomainError,
    Jet,
    add3,
    dot3,
    fd_crosscheck,
    gradient_wrt_vector,
    jacobian_wrt_vectors,
    norm3,
    partial_wrt_scalar,
    scale3,
)
from gn3flux.constitutive import ThermalState


def state(a=0.3, da=2.0, u=(1.0, 0.2, -0.3), v=(0.5, -1.0, 0.4)):
    return ThermalState(a, da, u, v)


def test_jet_arithmetic_rules():
    x = Jet(2.0, 1.0)
    y = x * x + 3.0 * x - 1.0 / x
    assert y.val == 4.0 + 6.0 - 0.5
    assert y.dot == 2 * 2.0 + 3.0 + 1.0 / 4.0


def test_jet_chain_via_functions():
    x = Jet(0.7, 1.0)
    y = (x * x).exp()
    assert np.isclose(y.dot, 2 * 0.7 * np.exp(0.49), rtol=0, atol=1e-15)
    z = x.sin() * x.cos()
    assert np.isclose(z.dot, np.cos(2 * 0.7), rtol=0, atol=1e-15)


def test_jet_pow_integer_handles_negative_base():
    x = Jet(-1.5, 1.0)
    y = x ** 2
    assert y.val == 2.25 and y.dot == -3.0


def test_jet_batched_arrays():
    x = Jet(np.array([1.0, 4.0]), 1.0)
    y = x.sqrt()
    assert np.allclose(y.val, [1.0, 2.0])
    assert np.allclose(y.dot, [0.5, 0.25])


def test_jacobian_of_identity_field():
    jac = jacobian_wrt_vectors(lambda s: s.u, state())
    assert np.array_equal(jac.d_u, np.eye(3))
    assert np.array_equal(jac.d_v, np.zeros((3, 3)))


def test_jacobian_norm_squared_times_v():
    # f(u, v) = |u|^2 v at u = e1, v = e2: d_u = 2 e2 (x) e1, d_v = I
    st = state(u=(1.0, 0.0, 0.0), v=(0.0, 1.0, 0.0))

    def f(s):
        return scale3(dot3(s.u, s.u), s.v)

    jac = jacobian_wrt_vectors(f, st)
    expected = np.zeros((3, 3))
    expected[1, 0] = 2.0
    assert np.max(np.abs(jac.d_u - expected)) <= 1e-15
    assert np.max(np.abs(jac.d_v - np.eye(3))) <= 1e-15
    assert fd_crosscheck(f, st) <= 1e-6


def test_jacobian_constant_coefficients():
    h1, h2 = 2.5, -0.75

    def f(s):
        return add3(scale3(h1, s.u), scale3(h2, s.v))

    jac = jacobian_wrt_vectors(f, state())
    assert np.max(np.abs(jac.d_u - h1 * np.eye(3))) <= 1e-15
    assert np.max(np.abs(jac.d_v - h2 * np.eye(3))) <= 1e-15


def test_partial_scalar_linear():
    c = 4.25
    assert partial_wrt_scalar(lambda s: c * s.alpha_dot, "alpha_dot", state()) == c


def test_partial_scalar_reciprocal():
    theta0 = 300.0
    got = partial_wrt_scalar(
        lambda s: 1.0 / (theta0 + s.alpha_dot), "alpha_dot", state(da=0.0)
    )
    assert np.isclose(got, -1.0 / theta0**2, rtol=1e-15)


def test_partial_scalar_independent_slot_is_zero():
    assert partial_wrt_scalar(lambda s: norm3(s.u), "alpha", state()) == 0.0


def test_partial_of_vector_field():
    got = partial_wrt_scalar(lambda s: scale3(s.alpha_dot, s.u), "alpha_dot", state())
    assert np.max(np.abs(got - np.asarray(state().u))) <= 1e-15


def test_fd_crosscheck_polynomial():
    def f(s):
        return (
            dot3(s.u, s.v) ** 2 + 0.3 * s.alpha_dot * norm3(s.u) + s.alpha**3
        )

    assert fd_crosscheck(f, state(), step=1e-5) <= 1e-6


def test_fd_crosscheck_linear_is_tight():
    # central differences are exact on linear maps; a generous step keeps
    # the floating-point cancellation below the gate
    def f(s):
        return 2.0 * s.alpha + 3.0 * s.alpha_dot + dot3(s.u, (1.0, 2.0, 3.0))

    assert fd_crosscheck(f, state(), step=0.5) <= 1e-12


def test_fd_crosscheck_with_exponentials():
    from gn3flux.autodiff import exp

    def f(s):
        return exp(-dot3(s.u, s.u) / 10.0) + exp(s.alpha_dot / 100.0)

    assert fd_crosscheck(f, state(), step=1e-5) <= 1e-6


def test_fd_crosscheck_rejects_bad_step():
    with pytest.raises(ValueError):
        fd_crosscheck(lambda s: s.alpha, state(), step=0.0)


def test_product_rule_property():
    # J(g f) = g J(f) + f (x) grad g over random states, exact to 1e-12
    rng = np.random.default_rng(17)

    def g(s):
        return dot3(s.u, s.v) + 2.0 * s.alpha_dot

    def f(s):
        return add3(scale3(norm3(s.u), s.u), s.v)

    def gf(s):
        return scale3(g(s), f(s))

    for _ in range(1000):
        st = state(
            a=rng.uniform(-1, 1),
            da=rng.uniform(-50, 50),
            u=rng.uniform(0.1, 1.0) * _unit(rng),
            v=rng.uniform(0.1, 1.0) * _unit(rng),
        )
        jac = jacobian_wrt_vectors(gf, st)
        jf = jacobian_wrt_vectors(f, st)
        gval = g(st)
        fval = np.array([float(c) for c in f(st)])
        for slot, j_direct, j_part in (("u", jac.d_u, jf.d_u), ("v", jac.d_v, jf.d_v)):
            grad_g = gradient_wrt_vector(g, slot, st)
            expected = gval * j_part + np.outer(fval, grad_g)
            assert np.max(np.abs(j_direct - expected)) <= 1e-12


def _unit(rng):
    g = rng.standard_normal(3)
    return g / np.linalg.norm(g)


def test_chain_rule_through_norm_invariant():
    # f depending on u only through |u| has d_u f = f'(|u|) w (x) u/|u|
    rng = np.random.default_rng(19)
    w0 = (0.3, -1.2, 0.8)

    def f(s):
        s1 = norm3(s.u)
        return scale3(s1 * s1, w0)  # f'(s1) = 2 s1

    for _ in range(200):
        u = rng.uniform(0.1, 5.0) * _unit(rng)
        st = state(u=u)
        jac = jacobian_wrt_vectors(f, st)
        s1 = np.linalg.norm(u)
        expected = 2.0 * s1 * np.outer(w0, u / s1)
        assert np.max(np.abs(jac.d_u - expected)) <= 1e-12


def test_domain_error_at_vanishing_norm():
    def f(s):
        return scale3(1.0 / norm3(s.u), s.u)

    with pytest.raises(DomainError):
        jacobian_wrt_vectors(f, state(u=(0.0, 0.0, 0.0)))
