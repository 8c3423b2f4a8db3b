"""1D finite-difference simulator for linear type III heat conduction.

The evolved equation is the standard linear specialization
``rho c d2(alpha)/dt2 = k1 lap(alpha) + k2 lap(d(alpha)/dt) + rho r``
with homogeneous Neumann boundaries on a cell-centered grid: k2 = 0 is
the dissipationless wave limit, k1 = 0 the classical diffusion limit.
Time stepping is explicit velocity-Verlet (the synchronous leapfrog
form) with an Euler predictor for the velocity-dependent damping term,
guarded by both the wave and the diffusion CFL limits.

The entropy-production monitor evaluates the entropy balance
``rho xi = rho d(eta)/dt + div h - rho s`` with the second-order
closure about theta0: per-volume entropy
``rho c (tau/theta0 - tau^2/(2 theta0^2)) - k1 |grad alpha|^2 / (2 theta0^2)``
(tau = alpha_dot - theta0), entropy influx
``h = q (1/theta0 - tau/theta0^2)`` with ``q = -k1 grad alpha - k2 grad
alpha_dot``, and entropy supply s = r/theta0. In the continuum this
closure gives exactly ``rho xi = k2 |grad alpha_dot|^2 / theta0^2`` for
source-free runs, so the wave limit is dissipationless and the
diffusion limit produces entropy pointwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .expr import parse_coeff
from .tolerances import TOL


class CFLError(ValueError):
    """Requested time step exceeds the explicit stability guard."""


class ScenarioFormatError(ValueError):
    """Scenario file/dict does not match the documented schema."""


class InsufficientHistory(ValueError):
    """Entropy production needs at least two stored steps."""


@dataclass(frozen=True)
class Material:
    """Rigid conductor parameters for the linear type III closure."""

    rho: float
    c: float
    k1: float
    k2: float
    theta0: float

    def __post_init__(self):
        if not all(
            np.isfinite(x) for x in (self.rho, self.c, self.k1, self.k2, self.theta0)
        ):
            raise ValueError("material parameters must be finite")
        if self.rho <= 0 or self.c <= 0 or self.theta0 <= 0:
            raise ValueError("rho, c, theta0 must be positive")
        if self.k1 < 0 or self.k2 < 0 or self.k1 + self.k2 <= 0:
            raise ValueError("need k1, k2 >= 0 and k1 + k2 > 0")

    def wave_speed(self) -> float:
        return float(np.sqrt(self.k1 / (self.rho * self.c)))


@dataclass(frozen=True)
class SourceSpec:
    """External energy source r(x, t) per unit mass; the entropy source
    is fixed to r/theta0 under the simulator's proportionality
    convention."""

    r: object = None  # callable(x_array, t) -> array, or None

    @classmethod
    def from_expression(cls, src: str) -> "SourceSpec":
        fn = parse_coeff(src, frozenset({"x", "t", "pi"}))

        def r(x, t):
            return np.broadcast_to(
                np.asarray(fn.eval({"x": x, "t": t, "pi": np.pi}), dtype=float), x.shape
            )

        return cls(r)

    def values(self, x: np.ndarray, t: float) -> np.ndarray:
        if self.r is None:
            return np.zeros_like(x)
        return np.asarray(self.r(x, t), dtype=float)


@dataclass(frozen=True)
class SimState:
    """Cell-centered fields at one time level plus the entropy ledger."""

    alpha: np.ndarray
    alpha_dot: np.ndarray
    t: float
    dx: float
    entropy_ledger: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "alpha_dot"):
            arr = np.array(getattr(self, name), dtype=float)
            if arr.ndim != 1 or arr.shape[0] < 3:
                raise ValueError("fields need at least 3 cells")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.alpha.shape != self.alpha_dot.shape:
            raise ValueError("alpha and alpha_dot must share a grid")
        if not (self.dx > 0 and np.isfinite(self.dx)):
            raise ValueError("dx must be positive")

    @property
    def n(self) -> int:
        return self.alpha.shape[0]

    def x(self) -> np.ndarray:
        return (np.arange(self.n) + 0.5) * self.dx


def cell_centers(n: int, length: float) -> np.ndarray:
    return (np.arange(n) + 0.5) * (length / n)


def cfl_max_dt(material: Material, dx: float) -> float:
    """Largest admissible explicit step: 0.9 dx / wave speed when
    k1 > 0, and 0.45 dx^2 rho c / k2 whenever k2 > 0 (both when both
    mechanisms are active)."""
    limits = []
    if material.k1 > 0:
        limits.append(0.9 * dx / material.wave_speed())
    if material.k2 > 0:
        limits.append(0.45 * dx * dx * material.rho * material.c / material.k2)
    return min(limits)


class _Engine:
    """Shared stepping/monitoring core over per-cell material arrays."""

    def __init__(self, rho, c, k1, k2, theta0, dx, source: SourceSpec):
        self.n = len(rho)
        self.rho = np.asarray(rho, dtype=float)
        self.rho_c = self.rho * np.asarray(c, dtype=float)
        self.k1 = np.asarray(k1, dtype=float)
        self.k2 = np.asarray(k2, dtype=float)
        self.theta0 = np.asarray(theta0, dtype=float)
        self.dx = float(dx)
        self.source = source
        self.k1_face = self._face(self.k1)
        self.k2_face = self._face(self.k2)
        self.theta0_face = np.zeros(self.n + 1)
        self.theta0_face[1:-1] = 0.5 * (self.theta0[:-1] + self.theta0[1:])
        self.theta0_face[0] = self.theta0[0]
        self.theta0_face[-1] = self.theta0[-1]
        self.x = (np.arange(self.n) + 0.5) * self.dx

    @staticmethod
    def _face(k_cells: np.ndarray) -> np.ndarray:
        """Harmonic-mean face coefficients; zero at Neumann boundaries."""
        out = np.zeros(len(k_cells) + 1)
        a, b = k_cells[:-1], k_cells[1:]
        s = a + b
        inner = np.zeros_like(a)
        mask = s > 0
        inner[mask] = 2.0 * a[mask] * b[mask] / s[mask]
        out[1:-1] = inner
        return out

    def _grad_face(self, field: np.ndarray) -> np.ndarray:
        g = np.zeros(self.n + 1)
        g[1:-1] = (field[1:] - field[:-1]) / self.dx
        return g

    def _div(self, flux_face: np.ndarray) -> np.ndarray:
        return (flux_face[1:] - flux_face[:-1]) / self.dx

    def accel(self, alpha, theta, t):
        flux = self.k1_face * self._grad_face(alpha) + self.k2_face * self._grad_face(theta)
        return (self._div(flux) + self.rho * self.source.values(self.x, t)) / self.rho_c

    def entropy_density(self, alpha, theta) -> np.ndarray:
        """Per-volume entropy of the monitor closure (cell values)."""
        tau = theta - self.theta0
        grad_a = self._grad_face(alpha)
        grad_sq_cell = 0.5 * (grad_a[:-1] ** 2 + grad_a[1:] ** 2)
        return (
            self.rho_c * (tau / self.theta0 - tau * tau / (2.0 * self.theta0**2))
            - self.k1 / (2.0 * self.theta0**2) * grad_sq_cell
        )

    def entropy_flux_face(self, alpha, theta) -> np.ndarray:
        tau_face = np.zeros(self.n + 1)
        tau_face[1:-1] = 0.5 * ((theta[:-1] + theta[1:])) - self.theta0_face[1:-1]
        q_face = -(
            self.k1_face * self._grad_face(alpha) + self.k2_face * self._grad_face(theta)
        )
        return q_face * (1.0 / self.theta0_face - tau_face / self.theta0_face**2)

    def production(self, alpha0, theta0_f, alpha1, theta1_f, t_mid, dt) -> np.ndarray:
        """Discrete rho*xi for the step alpha0/theta0_f -> alpha1/theta1_f."""
        d_eta = (
            self.entropy_density(alpha1, theta1_f) - self.entropy_density(alpha0, theta0_f)
        ) / dt
        h_mid = 0.5 * (
            self.entropy_flux_face(alpha0, theta0_f)
            + self.entropy_flux_face(alpha1, theta1_f)
        )
        supply = self.rho * self.source.values(self.x, t_mid) / self.theta0
        return d_eta + self._div(h_mid) - supply

    def advance(self, alpha, theta, t, dt):
        """One velocity-Verlet step; returns (alpha1, theta1, rho_xi)."""
        g0 = self.accel(alpha, theta, t)
        alpha1 = alpha + dt * theta + 0.5 * dt * dt * g0
        theta_pred = theta + dt * g0
        g1 = self.accel(alpha1, theta_pred, t + dt)
        theta1 = theta + 0.5 * dt * (g0 + g1)
        rho_xi = self.production(alpha, theta, alpha1, theta1, t + 0.5 * dt, dt)
        return alpha1, theta1, rho_xi


def _uniform_engine(material: Material, n: int, dx: float, source: SourceSpec) -> _Engine:
    ones = np.ones(n)
    return _Engine(
        material.rho * ones,
        material.c * ones,
        material.k1 * ones,
        material.k2 * ones,
        material.theta0 * ones,
        dx,
        source,
    )


def step(
    state: SimState, material: Material, source: SourceSpec, dt: float
) -> SimState:
    """Advance one explicit step; rejects the step before any work when
    dt violates the CFL guard. Equilibrium data stays exactly at rest."""
    limit = cfl_max_dt(material, state.dx)
    if dt > limit * (1.0 + 1e-12):
        raise CFLError(f"dt = {dt:g} exceeds the stability limit {limit:g}")
    engine = _uniform_engine(material, state.n, state.dx, source)
    alpha1, theta1, rho_xi = engine.advance(state.alpha, state.alpha_dot, state.t, dt)
    ledger = state.entropy_ledger + float(np.sum(rho_xi)) * state.dx * dt
    return SimState(alpha1, theta1, state.t + dt, state.dx, ledger)


def entropy_production(state_history, material: Material, source: SourceSpec | None = None):
    """Per-step rho*xi fields and the cumulative domain total for a
    stored trajectory (at least two consecutive states)."""
    states = list(state_history)
    if len(states) < 2:
        raise InsufficientHistory("need at least two stored steps")
    source = source if source is not None else SourceSpec()
    engine = _uniform_engine(material, states[0].n, states[0].dx, source)
    fields = []
    cumulative = 0.0
    for s0, s1 in zip(states[:-1], states[1:]):
        dt = s1.t - s0.t
        if dt <= 0:
            raise ValueError("history must be strictly increasing in time")
        rho_xi = engine.production(
            s0.alpha, s0.alpha_dot, s1.alpha, s1.alpha_dot, s0.t + 0.5 * dt, dt
        )
        fields.append(rho_xi)
        cumulative += float(np.sum(rho_xi)) * s0.dx * dt
    return fields, cumulative


# -- scenarios -------------------------------------------------------------------

_MATERIAL_FIELDS = {"rho", "c", "k1", "k2", "theta0"}
_SCENARIO_FIELDS = {
    "name",
    "material",
    "materials",
    "N",
    "L",
    "dt",
    "T_end",
    "initial",
    "source",
    "output_every",
    "reference",
}


def _material_from(data, label: str) -> Material:
    if not isinstance(data, dict):
        raise ScenarioFormatError(f"{label} must be an object")
    unknown = set(data) - _MATERIAL_FIELDS
    if unknown:
        raise ScenarioFormatError(f"unknown {label} fields: {sorted(unknown)}")
    missing = _MATERIAL_FIELDS - set(data)
    if missing:
        raise ScenarioFormatError(f"missing {label} fields: {sorted(missing)}")
    try:
        return Material(**{k: float(data[k]) for k in _MATERIAL_FIELDS})
    except ValueError as err:
        raise ScenarioFormatError(f"bad {label}: {err}") from None


@dataclass(frozen=True)
class Scenario:
    name: str
    material_a: Material
    material_b: Material | None
    interface_cell: int | None
    n: int
    length: float
    dt: float
    t_end: float
    initial_alpha: str
    initial_alpha_dot: str
    source: str | None
    output_every: int
    reference: dict | None

    @property
    def two_material(self) -> bool:
        return self.material_b is not None


def scenario_from_dict(data: dict) -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioFormatError("scenario file must hold a JSON object")
    unknown = set(data) - _SCENARIO_FIELDS
    if unknown:
        raise ScenarioFormatError(f"unknown scenario fields: {sorted(unknown)}")
    required = {"N", "L", "dt", "T_end", "initial"}
    missing = required - set(data)
    if missing:
        raise ScenarioFormatError(f"missing scenario fields: {sorted(missing)}")
    if ("material" in data) == ("materials" in data):
        raise ScenarioFormatError("give exactly one of 'material' or 'materials'")
    mat_b = None
    interface = None
    if "material" in data:
        mat_a = _material_from(data["material"], "material")
    else:
        block = data["materials"]
        if not isinstance(block, dict) or set(block) != {"A", "B", "interface_cell"}:
            raise ScenarioFormatError(
                "materials must hold exactly A, B and interface_cell"
            )
        mat_a = _material_from(block["A"], "materials.A")
        mat_b = _material_from(block["B"], "materials.B")
        interface = int(block["interface_cell"])
    init = data["initial"]
    if not isinstance(init, dict) or set(init) != {"alpha", "alpha_dot"}:
        raise ScenarioFormatError("initial must hold exactly alpha and alpha_dot")
    n = int(data["N"])
    if n < 3:
        raise ScenarioFormatError("N must be at least 3")
    if interface is not None and not (1 <= interface <= n - 1):
        raise ScenarioFormatError("interface_cell must split the grid")
    length = float(data["L"])
    if length <= 0:
        raise ScenarioFormatError("L must be positive")
    reference = data.get("reference")
    if reference is not None:
        if not isinstance(reference, dict) or reference.get("type") != "gaussian_kernel":
            raise ScenarioFormatError("reference.type must be 'gaussian_kernel'")
        if set(reference) != {"type", "amplitude", "center", "sigma0"}:
            raise ScenarioFormatError(
                "reference needs exactly type, amplitude, center, sigma0"
            )
    return Scenario(
        name=str(data.get("name", "scenario")),
        material_a=mat_a,
        material_b=mat_b,
        interface_cell=interface,
        n=n,
        length=length,
        dt=float(data["dt"]),
        t_end=float(data["T_end"]),
        initial_alpha=str(init["alpha"]),
        initial_alpha_dot=str(init["alpha_dot"]),
        source=None if "source" not in data else str(data["source"]),
        output_every=int(data.get("output_every", 1)),
        reference=reference,
    )


def load_scenario(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise ScenarioFormatError(f"not valid JSON: {err}") from None
    return scenario_from_dict(data)


def _eval_profile(src: str, x: np.ndarray) -> np.ndarray:
    fn = parse_coeff(src, frozenset({"x", "pi"}))
    return np.broadcast_to(
        np.asarray(fn.eval({"x": x, "pi": np.pi}), dtype=float), x.shape
    ).astype(float)


def _scenario_engine(sc: Scenario) -> _Engine:
    source = SourceSpec() if sc.source is None else SourceSpec.from_expression(sc.source)
    dx = sc.length / sc.n
    if not sc.two_material:
        return _uniform_engine(sc.material_a, sc.n, dx, source)
    roles = [(sc.material_a, sc.interface_cell), (sc.material_b, sc.n - sc.interface_cell)]
    parts = {
        "rho": [],
        "c": [],
        "k1": [],
        "k2": [],
        "theta0": [],
    }
    for mat, count in roles:
        for key in parts:
            parts[key].append(np.full(count, getattr(mat, key)))
    arrays = {key: np.concatenate(vals) for key, vals in parts.items()}
    return _Engine(
        arrays["rho"], arrays["c"], arrays["k1"], arrays["k2"], arrays["theta0"], dx, source
    )


def scenario_cfl_limit(sc: Scenario) -> float:
    mats = [sc.material_a] + ([sc.material_b] if sc.two_material else [])
    dx = sc.length / sc.n
    return min(cfl_max_dt(m, dx) for m in mats)


@dataclass(frozen=True)
class SimResult:
    """Recorded frames plus the summary dictionary."""

    x: np.ndarray
    times: np.ndarray
    alpha: np.ndarray  # (frames, N)
    alpha_dot: np.ndarray
    xi: np.ndarray  # per-mass production of the step ending at each frame
    summary: dict


def estimate_wave_speed(times, theta_frames, theta0, dx, length):
    """Front-tracking speed estimate: rightmost cell where the
    temperature deviates by 1% of the initial amplitude, fitted
    linearly over frames before the front nears the boundary."""
    dev0 = np.max(np.abs(theta_frames[0] - theta0))
    if dev0 == 0:
        return None
    thresh = 0.01 * dev0
    ts, fronts = [], []
    for t, th in zip(times, theta_frames):
        hit = np.nonzero(np.abs(th - theta0) >= thresh)[0]
        if len(hit) == 0:
            continue
        front = (hit[-1] + 0.5) * dx
        if front > length - 3.0 * dx:
            break
        ts.append(t)
        fronts.append(front)
    if len(ts) < 3:
        return None
    slope = np.polyfit(np.asarray(ts), np.asarray(fronts), 1)[0]
    return float(slope)


def _kernel_solution(x, t, theta0, kappa, ref, length, images: int = 4):
    """Neumann diffusion of a Gaussian via mirror images (analytic)."""
    sigma_sq = ref["sigma0"] ** 2 + 2.0 * kappa * t
    amp = ref["amplitude"] * ref["sigma0"] / np.sqrt(sigma_sq)
    total = np.zeros_like(x)
    for m in range(-images, images + 1):
        for center in (2.0 * m * length + ref["center"], 2.0 * m * length - ref["center"]):
            total += amp * np.exp(-((x - center) ** 2) / (2.0 * sigma_sq))
    return theta0 + total


def run_scenario(sc: Scenario) -> SimResult:
    """Integrate a scenario to T_end, recording every output_every-th
    step; raises CFLError before any work when dt is too large."""
    limit = scenario_cfl_limit(sc)
    if sc.dt > limit * (1.0 + 1e-12):
        raise CFLError(f"dt = {sc.dt:g} exceeds the stability limit {limit:g}")
    engine = _scenario_engine(sc)
    x = engine.x
    alpha = _eval_profile(sc.initial_alpha, x).copy()
    theta = _eval_profile(sc.initial_alpha_dot, x).copy()
    steps = max(1, int(round(sc.t_end / sc.dt)))
    dt = sc.dt
    stride = max(1, sc.output_every)

    times = [0.0]
    alphas = [alpha.copy()]
    thetas = [theta.copy()]
    xis = [np.zeros_like(alpha)]
    ledger = 0.0
    min_ledger = 0.0
    jumps = None
    if sc.two_material:
        j0 = _interface_jumps(engine, sc.interface_cell, alpha, theta)
        jumps = {"t": [0.0], "q_n": [j0[0]], "h_n": [j0[1]], "lambda": [j0[2]]}

    t = 0.0
    for k in range(1, steps + 1):
        alpha, theta, rho_xi = engine.advance(alpha, theta, t, dt)
        t = k * dt
        ledger += float(np.sum(rho_xi)) * engine.dx * dt
        min_ledger = min(min_ledger, ledger)
        if jumps is not None:
            j = _interface_jumps(engine, sc.interface_cell, alpha, theta)
            jumps["t"].append(t)
            jumps["q_n"].append(j[0])
            jumps["h_n"].append(j[1])
            jumps["lambda"].append(j[2])
        if k % stride == 0 or k == steps:
            times.append(t)
            alphas.append(alpha.copy())
            thetas.append(theta.copy())
            xis.append(rho_xi / engine.rho)

    summary = {
        "scenario": sc.name,
        "N": sc.n,
        "L": sc.length,
        "dt": sc.dt,
        "steps": steps,
        "t_end": t,
        "closure": "linear-gn3-theta0",
        "entropy": {"cumulative": ledger, "min_cumulative": min_ledger},
        "wave_speed": {"estimate": None, "expected": None},
        "kernel_l2": None,
        "jumps": None,
    }
    if not sc.two_material and sc.material_a.k1 > 0:
        summary["wave_speed"] = {
            "estimate": estimate_wave_speed(
                times, thetas, sc.material_a.theta0, engine.dx, sc.length
            ),
            "expected": sc.material_a.wave_speed(),
        }
    if sc.reference is not None and not sc.two_material:
        mat = sc.material_a
        kappa = mat.k2 / (mat.rho * mat.c)
        exact = _kernel_solution(x, t, mat.theta0, kappa, sc.reference, sc.length)
        num = np.linalg.norm(theta - exact)
        den = np.linalg.norm(exact - mat.theta0)
        summary["kernel_l2"] = float(num / den) if den > 0 else None
    if jumps is not None:
        summary["jumps"] = {
            "initial_lambda": jumps["lambda"][0],
            "final_lambda": jumps["lambda"][-1],
            "max_abs_q_n": max(abs(v) for v in jumps["q_n"]),
            "max_abs_h_n": max(abs(v) for v in jumps["h_n"]),
            "max_abs_lambda": max(abs(v) for v in jumps["lambda"]),
            "series": {
                "t": jumps["t"][:: stride],
                "q_n": jumps["q_n"][:: stride],
                "h_n": jumps["h_n"][:: stride],
                "lambda": jumps["lambda"][:: stride],
            },
        }

    return SimResult(
        x=x,
        times=np.asarray(times),
        alpha=np.asarray(alphas),
        alpha_dot=np.asarray(thetas),
        xi=np.asarray(xis),
        summary=summary,
    )


def _interface_jumps(engine: _Engine, face: int, alpha, theta):
    """(jump q.n, jump h.n, jump lambda) at a face; side values use the
    single conservative face flux and one-sided temperature
    extrapolations with lambda = 1/alpha_dot."""
    dx = engine.dx
    grad_a = (alpha[face] - alpha[face - 1]) / dx
    grad_t = (theta[face] - theta[face - 1]) / dx
    flux = -(engine.k1_face[face] * grad_a + engine.k2_face[face] * grad_t)
    theta_a = 1.5 * theta[face - 1] - 0.5 * theta[face - 2]
    theta_b = 1.5 * theta[face] - 0.5 * theta[face + 1]
    lam_a = 1.0 / theta_a
    lam_b = 1.0 / theta_b
    jump_q = 0.0  # single-valued conservative flux: continuous by construction
    jump_h = flux * lam_b - flux * lam_a
    return jump_q, float(jump_h), float(lam_b - lam_a)


def two_material_contact(
    material_a: Material,
    material_b: Material,
    interface_cell: int,
    initial: dict,
    t_end: float,
    *,
    n: int,
    length: float,
    dt: float,
    output_every: int = 1,
) -> SimResult:
    """Convenience wrapper building and running a two-material scenario."""
    return run_scenario(
        scenario_from_dict(
            {
                "name": "contact",
                "materials": {
                    "A": {k: getattr(material_a, k) for k in _MATERIAL_FIELDS},
                    "B": {k: getattr(material_b, k) for k in _MATERIAL_FIELDS},
                    "interface_cell": interface_cell,
                },
                "N": n,
                "L": length,
                "dt": dt,
                "T_end": t_end,
                "initial": dict(initial),
                "output_every": output_every,
            }
        )
    )


# -- bundled scenarios --------------------------------------------------------------------

def bundled_scenarios() -> dict:
    """Scenario dicts exercising the wave limit, the diffusion limit,
    a mixed conductor, and the two contact configurations."""
    return {
        "type2_pulse": {
            "name": "type2_pulse",
            "material": {"rho": 1.0, "c": 1.0, "k1": 1.0, "k2": 0.0, "theta0": 300.0},
            "N": 1000,
            "L": 1.0,
            "dt": 0.0008,
            "T_end": 0.3,
            "initial": {
                "alpha": "0",
                "alpha_dot": "300 + exp(-((x - 0.5)/0.02)^2)",
            },
            "output_every": 5,
        },
        "fourier_gauss": {
            "name": "fourier_gauss",
            "material": {"rho": 1.0, "c": 1.0, "k1": 0.0, "k2": 0.05, "theta0": 300.0},
            "N": 400,
            "L": 1.0,
            "dt": 5e-05,
            "T_end": 0.1,
            "initial": {
                "alpha": "0",
                "alpha_dot": "300 + exp(-(x - 0.5)^2/0.005)",
            },
            "output_every": 100,
            "reference": {
                "type": "gaussian_kernel",
                "amplitude": 1.0,
                "center": 0.5,
                "sigma0": 0.05,
            },
        },
        "gn3_mixed": {
            "name": "gn3_mixed",
            "material": {"rho": 1.0, "c": 1.0, "k1": 1.0, "k2": 0.5, "theta0": 300.0},
            "N": 200,
            "L": 1.0,
            "dt": 2e-05,
            "T_end": 0.05,
            "initial": {
                "alpha": "0",
                "alpha_dot": "300 + cos(2*pi*x)",
            },
            "output_every": 100,
        },
        "contact_equal": {
            "name": "contact_equal",
            "materials": {
                "A": {"rho": 1.0, "c": 1.0, "k1": 1.0, "k2": 0.2, "theta0": 300.0},
                "B": {"rho": 1.0, "c": 1.0, "k1": 1.0, "k2": 0.2, "theta0": 300.0},
                "interface_cell": 100,
            },
            "N": 200,
            "L": 1.0,
            "dt": 5e-05,
            "T_end": 0.02,
            "initial": {
                "alpha": "0",
                "alpha_dot": "300 + exp(-(x - 0.5)^2/0.005)",
            },
            "output_every": 20,
        },
        "contact_sigmoid": {
            "name": "contact_sigmoid",
            "materials": {
                "A": {"rho": 1.0, "c": 1.0, "k1": 0.0, "k2": 0.1, "theta0": 300.0},
                "B": {"rho": 1.0, "c": 1.0, "k1": 0.0, "k2": 0.4, "theta0": 300.0},
                "interface_cell": 100,
            },
            "N": 200,
            "L": 1.0,
            "dt": 2.5e-05,
            "T_end": 0.15,
            "initial": {
                "alpha": "0",
                "alpha_dot": "300 + 2/(1 + exp((x - 0.5)*400))",
            },
            "output_every": 40,
        },
    }


__all__ = [
    "CFLError",
    "ScenarioFormatError",
    "InsufficientHistory",
    "Material",
    "SourceSpec",
    "SimState",
    "SimResult",
    "Scenario",
    "cell_centers",
    "cfl_max_dt",
    "step",
    "entropy_production",
    "scenario_from_dict",
    "load_scenario",
    "scenario_cfl_limit",
    "run_scenario",
    "two_material_contact",
    "estimate_wave_speed",
    "bundled_scenarios",
]
