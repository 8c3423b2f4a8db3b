"""Thermodynamic-consistency machinery for extended entropy inequalities.

The energy balance is appended to the entropy imbalance through a
positive multiplier, and admissibility under arbitrary local process
continuations demands that four residuals vanish: the symmetric parts
of the u- and v-Jacobians of h - lambda q, and the rate combinations of
entropy and energy. This module evaluates those residuals by forward
AD, the per-coefficient condition lists obtained from the dyadic-basis
expansion, the influx discrepancy h - lambda q, an optimization-based
violation search, and ideal-thermal-contact jump diagnostics.

The leftover scalar inequality (the reduced dissipation) is reported,
never enforced: its sign is a constitutive restriction, not an
algebraic identity, so negative values are surfaced as data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .autodiff import Jet, dot_of, value_of
from .constitutive import (
    ALPHA_RANGE,
    ConstitutiveModel,
    StateBatch,
    ThermalState,
    coeff_env,
    flux_components,
    sample_states,
    scalar_value,
)
from .tensor_core import Ten2, Vec3
from .tolerances import TOL

_SLOT_KEYS = ("s1", "s2", "s3", "s4", "s5")


def _arr(x, n: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(value_of(x), dtype=float), (n,))


def _darr(x, n: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(dot_of(x), dtype=float), (n,))


def _lift(comps, j: int):
    return tuple(Jet(c, 1.0 if k == j else 0.0) for k, c in enumerate(comps))


def _flux_jacobian(model, which, batch: StateBatch, wrt: str) -> np.ndarray:
    """(n, 3, 3) stack: J[:, i, j] = d(flux_i)/d(wrt_j), by forward AD."""
    a, da, u_c, v_c = batch.parts()
    n = batch.n
    jac = np.empty((n, 3, 3))
    for j in range(3):
        if wrt == "u":
            comps = flux_components(model, which, a, da, _lift(u_c, j), v_c)
        else:
            comps = flux_components(model, which, a, da, u_c, _lift(v_c, j))
        for i in range(3):
            jac[:, i, j] = _darr(comps[i], n)
    return jac


def _flux_scalar_partial(model, which, batch: StateBatch, slot: str) -> np.ndarray:
    """(n, 3): partial of the flux with respect to alpha or alpha_dot."""
    a, da, u_c, v_c = batch.parts()
    n = batch.n
    if slot == "a":
        comps = flux_components(model, which, Jet(a, 1.0), da, u_c, v_c)
    else:
        comps = flux_components(model, which, a, Jet(da, 1.0), u_c, v_c)
    return np.stack([_darr(c, n) for c in comps], axis=1)


def _scalar_partial(model, field, batch: StateBatch, slot: str) -> np.ndarray:
    a, da, u_c, v_c = batch.parts()
    n = batch.n
    if slot == "a":
        out = scalar_value(model, field, Jet(a, 1.0), da, u_c, v_c)
    else:
        out = scalar_value(model, field, a, Jet(da, 1.0), u_c, v_c)
    return _darr(out, n)


def _scalar_gradient(model, field, batch: StateBatch, wrt: str) -> np.ndarray:
    a, da, u_c, v_c = batch.parts()
    n = batch.n
    grad = np.empty((n, 3))
    for j in range(3):
        if wrt == "u":
            out = scalar_value(model, field, a, da, _lift(u_c, j), v_c)
        else:
            out = scalar_value(model, field, a, da, u_c, _lift(v_c, j))
        grad[:, j] = _darr(out, n)
    return grad


def _sym(t: np.ndarray) -> np.ndarray:
    return 0.5 * (t + t.transpose(0, 2, 1))


# -- residual reports --------------------------------------------------------------

@dataclass(frozen=True)
class ResidualReport:
    """The four equality residuals plus the reduced dissipation value.

    r1 and r2 are symmetric by construction (built through the
    symmetric-part operator); `reduced` is the scalar left over once
    the equality conditions hold, reported as data.
    """

    r1: Ten2
    r2: Ten2
    r3: float
    r4: Vec3
    reduced: float

    def equality_magnitude(self) -> float:
        return max(
            float(np.max(np.abs(self.r1))),
            float(np.max(np.abs(self.r2))),
            abs(self.r3),
            float(np.max(np.abs(self.r4))),
        )


@dataclass(frozen=True)
class _ResidualBatch:
    r1: np.ndarray
    r2: np.ndarray
    r3: np.ndarray
    r4: np.ndarray
    reduced: np.ndarray

    def report(self, i: int) -> ResidualReport:
        return ResidualReport(
            self.r1[i], self.r2[i], float(self.r3[i]), self.r4[i], float(self.reduced[i])
        )

    def equality_magnitudes(self) -> np.ndarray:
        return np.maximum.reduce(
            [
                np.max(np.abs(self.r1), axis=(1, 2)),
                np.max(np.abs(self.r2), axis=(1, 2)),
                np.abs(self.r3),
                np.max(np.abs(self.r4), axis=1),
            ]
        )

    def field_magnitudes(self) -> dict:
        return {
            "r1": np.max(np.abs(self.r1), axis=(1, 2)),
            "r2": np.max(np.abs(self.r2), axis=(1, 2)),
            "r3": np.abs(self.r3),
            "r4": np.max(np.abs(self.r4), axis=1),
        }


def _residuals_batch(model: ConstitutiveModel, batch: StateBatch) -> _ResidualBatch:
    n = batch.n
    a, da, u_c, v_c = batch.parts()
    lam = _arr(scalar_value(model, "lambda", a, da, u_c, v_c), n)

    d1 = _flux_jacobian(model, "h", batch, "u") - lam[:, None, None] * _flux_jacobian(
        model, "q", batch, "u"
    )
    d2 = _flux_jacobian(model, "h", batch, "v") - lam[:, None, None] * _flux_jacobian(
        model, "q", batch, "v"
    )
    r1 = _sym(d1)
    r2 = _sym(d2)
    r3 = _scalar_partial(model, "eta", batch, "da") - lam * _scalar_partial(
        model, "eps", batch, "da"
    )
    r4 = _scalar_gradient(model, "eta", batch, "v") - lam[:, None] * _scalar_gradient(
        model, "eps", batch, "v"
    )
    rho = model.rho
    t1 = rho * (
        _scalar_partial(model, "eta", batch, "a")
        - lam * _scalar_partial(model, "eps", batch, "a")
    ) * batch.alpha_dot
    bracket = (
        rho
        * (
            _scalar_gradient(model, "eta", batch, "u")
            - lam[:, None] * _scalar_gradient(model, "eps", batch, "u")
        )
        + _flux_scalar_partial(model, "h", batch, "da")
        - lam[:, None] * _flux_scalar_partial(model, "q", batch, "da")
    )
    t2 = np.sum(bracket * batch.v, axis=1)
    t3 = np.sum(
        (
            _flux_scalar_partial(model, "h", batch, "a")
            - lam[:, None] * _flux_scalar_partial(model, "q", batch, "a")
        )
        * batch.u,
        axis=1,
    )
    return _ResidualBatch(r1, r2, r3, r4, t1 + t2 + t3)


def residuals(model: ConstitutiveModel, state: ThermalState) -> ResidualReport:
    """Evaluate the four equality residuals and the reduced dissipation.

    The state should be admissible and non-degenerate (|u|, |v| away
    from zero) whenever the model references the norm invariants;
    differentiating a referenced norm at zero raises a domain error
    naming the invariant.
    """
    return _residuals_batch(model, StateBatch.from_state(state)).report(0)


# -- coefficient tables and condition lists ------------------------------------------

class _CoeffTables:
    """Values and slot-partials of every coefficient on a batch."""

    def __init__(self, model: ConstitutiveModel, batch: StateBatch):
        n = batch.n
        env = coeff_env(model, *batch.parts())
        self.n = n
        self.lam = _arr(model.lam.eval(env), n)
        self.h = [_arr(c.eval(env), n) for c in model.h]
        self.q = [_arr(c.eval(env), n) for c in model.q]
        zeros = np.zeros(n)
        n_slots = 5 if model.is_transiso else 3
        self.dh = {}
        self.dq = {}
        self.dlam = {}
        for k in range(1, n_slots + 1):
            key = f"s{k}"
            if key in env:
                lifted = dict(env)
                lifted[key] = Jet(env[key], 1.0)
            else:
                lifted = None

            def partial(fn):
                if lifted is None or key not in fn.names:
                    return zeros
                return _darr(fn.eval(lifted), n)

            self.dh[k] = [partial(c) for c in model.h]
            self.dq[k] = [partial(c) for c in model.q]
            self.dlam[k] = partial(model.lam)


#: labels, in report order, of the per-coefficient conditions obtained by
#: expanding the u- and v-gradient residuals over the dyadic basis
#: {I, u(x)u, v(x)v, sym u(x)v, e(x)e, sym u(x)e, sym v(x)e}.
CONDITION_LABELS_ISO = (
    "u/I",
    "u/uu",
    "u/vv",
    "u/uv:d3h1",
    "u/uv:d1h2",
    "v/I",
    "v/vv",
    "v/uu",
    "v/uv:d3h2",
    "v/uv:d2h1",
)
CONDITION_LABELS_AXIS = (
    "u/ee",
    "u/ue:d4h1",
    "u/ue:d1h3",
    "u/ve",
    "v/ee",
    "v/ve:d5h2",
    "v/ve:d2h3",
    "v/ue",
)


def _condition_values(model: ConstitutiveModel, t: _CoeffTables) -> dict:
    lam, h, q, dh, dq, dlam = t.lam, t.h, t.q, t.dh, t.dq, t.dlam
    vals = {
        "u/I": h[0] - lam * q[0],
        # written as d1(h1 - lam q1) + (d1 lam) q1: the multiplier's slope
        # couples to the coefficient it multiplies
        "u/uu": (dh[1][0] - (dlam[1] * q[0] + lam * dq[1][0])) + dlam[1] * q[0],
        "u/vv": dh[3][1] - lam * dq[3][1],
        "u/uv:d3h1": dh[3][0] - lam * dq[3][0],
        "u/uv:d1h2": dh[1][1] - lam * dq[1][1],
        "v/I": h[1] - lam * q[1],
        "v/vv": (dh[2][1] - (dlam[2] * q[1] + lam * dq[2][1])) + dlam[2] * q[1],
        "v/uu": dh[3][0] - lam * dq[3][0],
        "v/uv:d3h2": dh[3][1] - lam * dq[3][1],
        "v/uv:d2h1": dh[2][0] - lam * dq[2][0],
    }
    if model.is_transiso:
        vals.update(
            {
                "u/ee": dh[4][2] - lam * dq[4][2],
                "u/ue:d4h1": dh[4][0] - lam * dq[4][0],
                "u/ue:d1h3": dh[1][2] - lam * dq[1][2],
                "u/ve": (dh[4][1] - lam * dq[4][1]) + (dh[3][2] - lam * dq[3][2]),
                "v/ee": dh[5][2] - lam * dq[5][2],
                "v/ve:d5h2": dh[5][1] - lam * dq[5][1],
                "v/ve:d2h3": dh[2][2] - lam * dq[2][2],
                "v/ue": (dh[5][0] - lam * dq[5][0]) + (dh[3][2] - lam * dq[3][2]),
            }
        )
    return vals


@dataclass(frozen=True)
class ConditionList:
    """Labeled values of the per-coefficient consistency conditions."""

    symmetry: str
    values: dict

    def labels(self):
        return tuple(self.values)

    def max_magnitude(self) -> float:
        return max(abs(v) for v in self.values.values())


def condition_lists(model: ConstitutiveModel, state: ThermalState) -> ConditionList:
    """Evaluate every per-coefficient condition at one state."""
    tables = _CoeffTables(model, StateBatch.from_state(state))
    vals = _condition_values(model, tables)
    return ConditionList(model.symmetry, {k: float(v[0]) for k, v in vals.items()})


# -- expansion cross-check -----------------------------------------------------------

def _expansion_batch(model: ConstitutiveModel, batch: StateBatch, wrt: str) -> np.ndarray:
    """Max |analytic dyadic assembly - AD-direct| per state."""
    t = _CoeffTables(model, batch)
    lam, h, q, dh, dq = t.lam, t.h, t.q, t.dh, t.dq
    n = batch.n
    u, v = batch.u, batch.v
    s1 = np.linalg.norm(u, axis=1)
    s2 = np.linalg.norm(v, axis=1)

    def dyad(x, y):
        return np.einsum("ni,nj->nij", x, y)

    def symd(x, y):
        return 0.5 * (dyad(x, y) + dyad(y, x))

    eye = np.broadcast_to(np.eye(3), (n, 3, 3))

    def c(j, k):
        return dh[k][j] - lam * dq[k][j]

    if wrt == "u":
        if np.any(s1 == 0.0):
            raise ValueError("degenerate state: |u| = 0 in the expansion")
        analytic = (
            (h[0] - lam * q[0])[:, None, None] * eye
            + (c(0, 1) / s1)[:, None, None] * dyad(u, u)
            + c(1, 3)[:, None, None] * dyad(v, v)
            + (c(0, 3) + c(1, 1) / s1)[:, None, None] * symd(u, v)
        )
        if model.is_transiso:
            e = np.broadcast_to(model.axis, (n, 3))
            analytic = (
                analytic
                + c(2, 4)[:, None, None] * dyad(e, e)
                + (c(0, 4) + c(2, 1) / s1)[:, None, None] * symd(u, e)
                + (c(1, 4) + c(2, 3))[:, None, None] * symd(v, e)
            )
    elif wrt == "v":
        if np.any(s2 == 0.0):
            raise ValueError("degenerate state: |v| = 0 in the expansion")
        analytic = (
            (h[1] - lam * q[1])[:, None, None] * eye
            + c(0, 3)[:, None, None] * dyad(u, u)
            + (c(1, 2) / s2)[:, None, None] * dyad(v, v)
            + (c(1, 3) + c(0, 2) / s2)[:, None, None] * symd(u, v)
        )
        if model.is_transiso:
            e = np.broadcast_to(model.axis, (n, 3))
            analytic = (
                analytic
                + c(2, 5)[:, None, None] * dyad(e, e)
                + (c(0, 5) + c(2, 3))[:, None, None] * symd(u, e)
                + (c(1, 5) + c(2, 2) / s2)[:, None, None] * symd(v, e)
            )
    else:
        raise ValueError("wrt must be 'u' or 'v'")

    direct = _sym(
        _flux_jacobian(model, "h", batch, wrt)
        - lam[:, None, None] * _flux_jacobian(model, "q", batch, wrt)
    )
    return np.max(np.abs(analytic - direct), axis=(1, 2))


def expansion_crosscheck(
    model: ConstitutiveModel, state: ThermalState, wrt: str = "u"
) -> float:
    """Assemble the gradient residual from coefficient slot-partials on
    the dyadic basis and compare against the AD-direct tensor; returns
    the max-norm deviation. Two independent routes to the same tensor."""
    return float(_expansion_batch(model, StateBatch.from_state(state), wrt)[0])


# -- discrepancy ----------------------------------------------------------------------

@dataclass(frozen=True)
class DiscrepancyReport:
    """h - lambda q split along the symmetry axis (when there is one)."""

    d: Vec3
    norm: float
    axial: float | None = None
    orthogonal_norm: float | None = None


def _discrepancy_batch(model: ConstitutiveModel, batch: StateBatch):
    n = batch.n
    a, da, u_c, v_c = batch.parts()
    lam = _arr(scalar_value(model, "lambda", a, da, u_c, v_c), n)
    h = np.stack([_arr(c, n) for c in flux_components(model, "h", a, da, u_c, v_c)], 1)
    q = np.stack([_arr(c, n) for c in flux_components(model, "q", a, da, u_c, v_c)], 1)
    d = h - lam[:, None] * q
    norm = np.linalg.norm(d, axis=1)
    if not model.is_transiso:
        return d, norm, None, None
    axial = d @ model.axis
    orth = np.linalg.norm(d - axial[:, None] * model.axis, axis=1)
    return d, norm, axial, orth


def discrepancy(model: ConstitutiveModel, state: ThermalState) -> DiscrepancyReport:
    """Influx discrepancy h - lambda q at one state."""
    d, norm, axial, orth = _discrepancy_batch(model, StateBatch.from_state(state))
    return DiscrepancyReport(
        d[0],
        float(norm[0]),
        None if axial is None else float(axial[0]),
        None if orth is None else float(orth[0]),
    )


def multiplier_independence(model: ConstitutiveModel, state: ThermalState):
    """(grad_u lambda, grad_v lambda) by AD; both vanish for admissible
    models, whose multiplier is a function of (alpha, alpha_dot) only."""
    batch = StateBatch.from_state(state)
    return (
        _scalar_gradient(model, "lambda", batch, "u")[0],
        _scalar_gradient(model, "lambda", batch, "v")[0],
    )


# -- violation search --------------------------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    state: ThermalState
    magnitude: float
    evaluations: int


def _spherical_to_vec(r, theta, phi):
    st = np.sin(theta)
    return np.array([r * st * np.cos(phi), r * st * np.sin(phi), r * np.cos(theta)])


def _params_to_batch(params: np.ndarray) -> StateBatch:
    """params rows: (a, da, ru, thu, phu, rv, thv, phv)."""
    p = np.atleast_2d(params)
    stu, ctu = np.sin(p[:, 3]), np.cos(p[:, 3])
    stv, ctv = np.sin(p[:, 6]), np.cos(p[:, 6])
    u = np.stack(
        [p[:, 2] * stu * np.cos(p[:, 4]), p[:, 2] * stu * np.sin(p[:, 4]), p[:, 2] * ctu], 1
    )
    v = np.stack(
        [p[:, 5] * stv * np.cos(p[:, 7]), p[:, 5] * stv * np.sin(p[:, 7]), p[:, 5] * ctv], 1
    )
    return StateBatch(p[:, 0].copy(), p[:, 1].copy(), u, v)


def violation_search(
    model: ConstitutiveModel,
    domain=None,
    budget: int = 10000,
    seed: int = 0,
) -> SearchResult:
    """Maximize the worst equality residual over the admissible box.

    Multi-start random sampling followed by coordinate-wise local
    refinement in (a, da, |u|, angles of u, |v|, angles of v);
    deterministic for a given seed, first-found maxima win ties.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    domain = domain if domain is not None else model.domain
    if domain.da.lo >= domain.da.hi or domain.s1.lo >= domain.s1.hi:
        raise ValueError("empty search domain")
    rng = np.random.default_rng(seed)
    lo = np.array(
        [
            ALPHA_RANGE[0],
            domain.da.lo,
            max(domain.s1.lo, TOL.degenerate_s),
            0.0,
            0.0,
            max(domain.s2.lo, TOL.degenerate_s),
            0.0,
            0.0,
        ]
    )
    hi = np.array(
        [
            ALPHA_RANGE[1],
            domain.da.hi,
            domain.s1.hi,
            math.pi,
            2.0 * math.pi,
            domain.s2.hi,
            math.pi,
            2.0 * math.pi,
        ]
    )

    def objective(params: np.ndarray) -> np.ndarray:
        return _residuals_batch(model, _params_to_batch(params)).equality_magnitudes()

    n_scan = max(1, min(budget, int(budget * 0.8)))
    scan = rng.uniform(lo, hi, size=(n_scan, 8))
    mags = objective(scan)
    used = n_scan
    order = np.argsort(-mags, kind="stable")
    n_starts = min(5, n_scan)
    best_params = scan[order[0]].copy()
    best_mag = float(mags[order[0]])

    for s in range(n_starts):
        params = scan[order[s]].copy()
        current = float(mags[order[s]])
        step = (hi - lo) / 8.0
        while used < budget and np.max(step / (hi - lo)) > 1e-6:
            probes = []
            for k in range(8):
                for sign in (1.0, -1.0):
                    cand = params.copy()
                    cand[k] = cand[k] + sign * step[k]
                    if k in (4, 7):  # azimuthal angles wrap
                        cand[k] = cand[k] % (2.0 * math.pi)
                    cand = np.clip(cand, lo, hi)
                    probes.append(cand)
            probes = np.array(probes)
            take = min(len(probes), budget - used)
            vals = objective(probes[:take])
            used += take
            imax = int(np.argmax(vals))
            if vals[imax] > current:
                current = float(vals[imax])
                params = probes[imax]
            else:
                step *= 0.5
        if current > best_mag:
            best_mag = current
            best_params = params

    return SearchResult(_params_to_batch(best_params).state(0), best_mag, used)


# -- ideal thermal contact -----------------------------------------------------------------

@dataclass(frozen=True)
class InterfaceReport:
    """Jumps (side B minus side A) of q.n, h.n and the multiplier."""

    jump_q_n: float
    jump_h_n: float
    jump_lambda: float
    ideal_contact: bool
    lambda_continuous: bool


def interface_check(
    model_a: ConstitutiveModel,
    model_b: ConstitutiveModel,
    state_a: ThermalState,
    state_b: ThermalState,
    normal: np.ndarray,
    tol: float = TOL.residual,
) -> InterfaceReport:
    """Jump diagnostics at a common interface oriented by `normal`.

    Ideal contact means the normal energy and entropy fluxes are both
    continuous; the report then says whether the multiplier is too
    (which proportional-influx materials guarantee).
    """
    n = np.asarray(normal, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise ValueError("normal must be a unit vector")
    from .constitutive import eval_flux, eval_scalar  # local import, no cycle

    q_a = float(eval_flux(model_a, "q", state_a) @ n)
    q_b = float(eval_flux(model_b, "q", state_b) @ n)
    h_a = float(eval_flux(model_a, "h", state_a) @ n)
    h_b = float(eval_flux(model_b, "h", state_b) @ n)
    lam_a = eval_scalar(model_a, "lambda", state_a)
    lam_b = eval_scalar(model_b, "lambda", state_b)
    jump_q = q_b - q_a
    jump_h = h_b - h_a
    jump_lam = lam_b - lam_a
    ideal = abs(jump_q) <= tol and abs(jump_h) <= tol
    return InterfaceReport(jump_q, jump_h, jump_lam, ideal, abs(jump_lam) <= tol)


# -- whole-model check ------------------------------------------------------------------------

VERDICT_PROPORTIONAL = "consistent_proportional"
VERDICT_NONPROPORTIONAL = "consistent_nonproportional"
VERDICT_VIOLATION = "violation_found"


def _state_dict(state: ThermalState) -> dict:
    return {
        "a": state.alpha,
        "da": state.alpha_dot,
        "u": [float(x) for x in state.u],
        "v": [float(x) for x in state.v],
    }


@dataclass(frozen=True)
class CheckReport:
    model: str
    n_states: int
    seed: int
    worst: dict
    discrepancy: dict
    verdict: str
    search: dict
    reduced_min: float

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "n_states": self.n_states,
            "seed": self.seed,
            "worst": self.worst,
            "discrepancy": self.discrepancy,
            "verdict": self.verdict,
            "search": self.search,
            "reduced_min": self.reduced_min,
        }


def check_model(
    model: ConstitutiveModel,
    seed: int = 0,
    samples: int = 10000,
    budget: int = 10000,
) -> CheckReport:
    """Sweep seeded states, run the violation search, and classify.

    Verdicts: every equality residual and condition entry below the
    violation threshold and no influx discrepancy -> proportional;
    equalities hold but h - lambda q is nonzero -> nonproportional
    (axial discrepancy); otherwise a violation was found.
    """
    rng = np.random.default_rng(seed)
    batch = sample_states(model, samples, rng)
    rb = _residuals_batch(model, batch)
    tables = _CoeffTables(model, batch)
    conditions = _condition_values(model, tables)

    worst = {}
    for label, mags in rb.field_magnitudes().items():
        i = int(np.argmax(mags))
        worst[label] = {
            "magnitude": float(mags[i]),
            "state": _state_dict(batch.state(i)),
        }
    for label, vals in conditions.items():
        mags = np.abs(vals)
        i = int(np.argmax(mags))
        worst[label] = {
            "magnitude": float(mags[i]),
            "state": _state_dict(batch.state(i)),
        }

    _, norm, axial, orth = _discrepancy_batch(model, batch)
    if model.is_transiso:
        max_orth = float(np.max(orth))
        spread_n = min(samples, 1000)
        mid_da = 0.5 * (model.domain.da.lo + model.domain.da.hi)
        spread_batch = sample_states(
            model, spread_n, rng, fixed_alpha=0.25, fixed_alpha_dot=mid_da
        )
        _, _, ax_fixed, _ = _discrepancy_batch(model, spread_batch)
        axial_spread = float(np.max(ax_fixed) - np.min(ax_fixed))
        max_disc = max(max_orth, float(np.max(np.abs(axial))))
    else:
        max_orth = float(np.max(norm))
        axial_spread = None
        max_disc = max_orth

    search = violation_search(model, budget=budget, seed=seed)
    worst_equality = max(
        max(entry["magnitude"] for entry in worst.values()), search.magnitude
    )

    if worst_equality > TOL.verdict_violation:
        verdict = VERDICT_VIOLATION
    elif max_disc > TOL.verdict_discrepancy:
        verdict = VERDICT_NONPROPORTIONAL
    else:
        verdict = VERDICT_PROPORTIONAL

    return CheckReport(
        model=model.name,
        n_states=samples,
        seed=seed,
        worst=worst,
        discrepancy={"max_orthogonal": max_orth, "axial_spread": axial_spread},
        verdict=verdict,
        search={
            "budget": budget,
            "evaluations": search.evaluations,
            "magnitude": search.magnitude,
            "state": _state_dict(search.state),
        },
        reduced_min=float(np.min(rb.reduced)),
    )


__all__ = [
    "ResidualReport",
    "ConditionList",
    "DiscrepancyReport",
    "InterfaceReport",
    "SearchResult",
    "CheckReport",
    "CONDITION_LABELS_ISO",
    "CONDITION_LABELS_AXIS",
    "VERDICT_PROPORTIONAL",
    "VERDICT_NONPROPORTIONAL",
    "VERDICT_VIOLATION",
    "residuals",
    "condition_lists",
    "expansion_crosscheck",
    "discrepancy",
    "multiplier_independence",
    "violation_search",
    "interface_check",
    "check_model",
]
