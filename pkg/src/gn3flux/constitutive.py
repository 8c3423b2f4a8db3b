"""State list, invariants, constitutive models and the model library IO.

A model delivers internal energy, entropy, the positive multiplier and
the two influx vectors as functions of the state list
{alpha, alpha_dot, u = grad(alpha), v = grad(alpha_dot)}. Coefficient
functions take the rotational invariants (s1 = |u|, s2 = |v|,
s3 = u.v, and for transversely isotropic models s4 = u.e, s5 = v.e)
rather than raw vectors, so every model is isotropic or transversely
isotropic by construction.

Units are documentation only: alpha in K*s, alpha_dot (the empirical
temperature) in K, u in K*s/m, v in K/m. The checks in this package are
structural identities and never convert units.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .autodiff import DomainError, Jet, dot3, sqrt, value_of
from .expr import (
    CoeffFn,
    EvalDomainError,
    ISOTROPIC_IDENTIFIERS,
    MODEL_IDENTIFIERS,
    parse_coeff,
)
from .tensor_core import require_finite, random_unit_vectors
from .tolerances import TOL


class ModelFormatError(ValueError):
    """Model file/dict does not match the documented schema."""


class ModelValidationError(ValueError):
    """Model is schematically well-formed but violates an invariant."""


@dataclass(frozen=True)
class ThermalState:
    """Material-point state: thermal displacement, temperature, gradients."""

    alpha: float
    alpha_dot: float
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "alpha_dot", float(self.alpha_dot))
        for name in ("u", "v"):
            vec = np.array(getattr(self, name), dtype=float)
            if vec.shape != (3,):
                raise ValueError(f"{name} must have 3 components")
            require_finite(vec, name)
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)
        if not np.isfinite(self.alpha) or not np.isfinite(self.alpha_dot):
            raise ValueError("alpha/alpha_dot must be finite")


@dataclass(frozen=True)
class InvariantSet:
    """Rotational invariants of a state (axial entries only with an axis)."""

    s1: float
    s2: float
    s3: float
    s4: float | None = None
    s5: float | None = None

    def __post_init__(self):
        if self.s1 < 0 or self.s2 < 0:
            raise ValueError("s1 and s2 are norms and must be nonnegative")
        if abs(self.s3) > self.s1 * self.s2 + 1e-12:
            raise ValueError("|s3| exceeds s1*s2: not realizable by vectors")
        if self.s4 is not None and abs(self.s4) > self.s1 + 1e-12:
            raise ValueError("|s4| exceeds s1")
        if self.s5 is not None and abs(self.s5) > self.s2 + 1e-12:
            raise ValueError("|s5| exceeds s2")

    @classmethod
    def from_state(cls, state: ThermalState, axis: np.ndarray | None = None):
        s1 = float(np.linalg.norm(state.u))
        s2 = float(np.linalg.norm(state.v))
        s3 = float(state.u @ state.v)
        if axis is None:
            return cls(s1, s2, s3)
        return cls(s1, s2, s3, float(state.u @ axis), float(state.v @ axis))


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)) or self.lo >= self.hi:
            raise ModelFormatError(f"invalid interval [{self.lo}, {self.hi}]")

    def as_list(self):
        return [self.lo, self.hi]


@dataclass(frozen=True)
class DomainBox:
    """Admissible ranges for alpha_dot, |u| and |v|."""

    da: Interval
    s1: Interval
    s2: Interval

    def __post_init__(self):
        if self.s1.lo < 0 or self.s2.lo < 0:
            raise ModelFormatError("s1/s2 ranges must be nonnegative")


ISOTROPIC = "isotropic"
TRANSVERSELY_ISOTROPIC = "transversely_isotropic"


def _as_coeff(value, allowed) -> CoeffFn:
    if isinstance(value, CoeffFn):
        extra = value.names - allowed
        if extra:
            raise ModelFormatError(
                f"identifiers {sorted(extra)} not allowed in this symmetry class"
            )
        return value
    return parse_coeff(value, allowed)


@dataclass(frozen=True)
class ConstitutiveModel:
    """Coefficient-function record for one heat conductor.

    ``h`` and ``q`` hold the influx coefficient functions (two for
    isotropic models, three for transversely isotropic ones); the flux
    vectors are c1*u + c2*v (+ c3*e). ``lam`` must evaluate positive on
    the declared admissible domain, which is sampled at construction.
    """

    name: str
    symmetry: str
    rho: float
    eps: CoeffFn
    eta: CoeffFn
    lam: CoeffFn
    h: tuple
    q: tuple
    domain: DomainBox
    axis: np.ndarray | None = None
    referenced: frozenset = field(init=False, default=frozenset())

    def __post_init__(self):
        if self.symmetry not in (ISOTROPIC, TRANSVERSELY_ISOTROPIC):
            raise ModelFormatError(f"unknown symmetry {self.symmetry!r}")
        allowed = (
            ISOTROPIC_IDENTIFIERS if self.symmetry == ISOTROPIC else MODEL_IDENTIFIERS
        )
        n_coeff = 2 if self.symmetry == ISOTROPIC else 3
        for attr in ("eps", "eta", "lam"):
            object.__setattr__(self, attr, _as_coeff(getattr(self, attr), allowed))
        for attr in ("h", "q"):
            fns = tuple(_as_coeff(c, allowed) for c in getattr(self, attr))
            if len(fns) != n_coeff:
                raise ModelFormatError(
                    f"{attr} needs {n_coeff} coefficients for {self.symmetry} models"
                )
            object.__setattr__(self, attr, fns)
        if not np.isfinite(self.rho) or self.rho <= 0:
            raise ModelFormatError("rho must be positive")
        if self.symmetry == TRANSVERSELY_ISOTROPIC:
            if self.axis is None:
                raise ModelFormatError("transversely isotropic models need an axis")
            e = np.array(self.axis, dtype=float)
            require_finite(e, "axis")
            if abs(np.linalg.norm(e) - 1.0) > 1e-12:
                raise ModelValidationError("axis must be unit length")
            e.setflags(write=False)
            object.__setattr__(self, "axis", e)
        elif self.axis is not None:
            raise ModelFormatError("isotropic models must not declare an axis")
        names: set = set()
        for fn in (self.eps, self.eta, self.lam, *self.h, *self.q):
            names |= fn.names
        object.__setattr__(self, "referenced", frozenset(names))
        self._check_multiplier_positive()

    def _check_multiplier_positive(self, n: int = 512):
        batch = sample_states(self, n, np.random.default_rng(0), nondegenerate=False)
        lam = self.lam.eval(coeff_env(self, *batch.parts()))
        lam = np.broadcast_to(np.asarray(lam, dtype=float), (batch.n,))
        if np.any(lam <= 0.0):
            i = int(np.argmin(lam))
            raise ModelValidationError(
                f"multiplier is not positive on the admissible domain "
                f"(lambda = {lam[i]:.6g} at alpha_dot = {batch.alpha_dot[i]:.6g})"
            )

    @property
    def is_transiso(self) -> bool:
        return self.symmetry == TRANSVERSELY_ISOTROPIC

    def admits(self, state: ThermalState) -> bool:
        inv = InvariantSet.from_state(state)
        return (
            self.domain.da.lo <= state.alpha_dot <= self.domain.da.hi
            and self.domain.s1.lo <= inv.s1 <= self.domain.s1.hi
            and self.domain.s2.lo <= inv.s2 <= self.domain.s2.hi
        )


@dataclass(frozen=True)
class StateBatch:
    """Vectorized bundle of states for batched evaluation."""

    alpha: np.ndarray
    alpha_dot: np.ndarray
    u: np.ndarray  # (n, 3)
    v: np.ndarray  # (n, 3)

    @property
    def n(self) -> int:
        return self.alpha.shape[0]

    def parts(self):
        u = self.u
        v = self.v
        return (
            self.alpha,
            self.alpha_dot,
            (u[:, 0], u[:, 1], u[:, 2]),
            (v[:, 0], v[:, 1], v[:, 2]),
        )

    def state(self, i: int) -> ThermalState:
        return ThermalState(self.alpha[i], self.alpha_dot[i], self.u[i], self.v[i])

    @classmethod
    def from_state(cls, state: ThermalState) -> "StateBatch":
        return cls(
            np.array([state.alpha]),
            np.array([state.alpha_dot]),
            state.u[None, :].copy(),
            state.v[None, :].copy(),
        )


def _norm_comps(comps, label: str):
    sq = dot3(comps, comps)
    if isinstance(sq, Jet):
        if np.any(np.asarray(sq.val) == 0.0):
            raise DomainError(
                f"{label} vanishes at this state; its derivative is undefined"
            )
    try:
        return sqrt(sq)
    except DomainError:
        raise DomainError(
            f"{label} vanishes at this state; its derivative is undefined"
        ) from None


def coeff_env(model: ConstitutiveModel, alpha, alpha_dot, u_comps, v_comps) -> dict:
    """Environment for coefficient evaluation; only referenced entries.

    Components may be floats, same-length arrays or Jets; the invariant
    arithmetic lifts accordingly. A referenced norm invariant evaluated
    where the vector vanishes raises :class:`DomainError` naming it.
    """
    ref = model.referenced
    env: dict = {}
    if "a" in ref:
        env["a"] = alpha
    if "da" in ref:
        env["da"] = alpha_dot
    if "s1" in ref:
        env["s1"] = _norm_comps(u_comps, "s1 (=|u|)")
    if "s2" in ref:
        env["s2"] = _norm_comps(v_comps, "s2 (=|v|)")
    if "s3" in ref:
        env["s3"] = dot3(u_comps, v_comps)
    if model.is_transiso:
        e = model.axis
        if "s4" in ref:
            env["s4"] = u_comps[0] * e[0] + u_comps[1] * e[1] + u_comps[2] * e[2]
        if "s5" in ref:
            env["s5"] = v_comps[0] * e[0] + v_comps[1] * e[1] + v_comps[2] * e[2]
    return env


def flux_components(model, which: str, alpha, alpha_dot, u_comps, v_comps):
    """Flux vector as a 3-list in whatever scalar arithmetic comes in."""
    env = coeff_env(model, alpha, alpha_dot, u_comps, v_comps)
    fns = model.h if which == "h" else model.q
    cs = [fn.eval(env) for fn in fns]
    out = [cs[0] * u_comps[i] + cs[1] * v_comps[i] for i in range(3)]
    if model.is_transiso:
        e = model.axis
        out = [out[i] + cs[2] * e[i] for i in range(3)]
    return out


_SCALAR_FIELDS = {"eps": "eps", "eta": "eta", "lambda": "lam", "lam": "lam"}


def scalar_value(model, which: str, alpha, alpha_dot, u_comps, v_comps):
    fn = getattr(model, _SCALAR_FIELDS[which])
    return fn.eval(coeff_env(model, alpha, alpha_dot, u_comps, v_comps))


def eval_flux(model: ConstitutiveModel, which: str, state: ThermalState) -> np.ndarray:
    """Evaluate h or q at a state; returns a (3,) float vector."""
    if which not in ("h", "q"):
        raise ValueError("which must be 'h' or 'q'")
    comps = flux_components(
        model, which, state.alpha, state.alpha_dot, tuple(state.u), tuple(state.v)
    )
    return np.array([float(value_of(c)) for c in comps])


def eval_scalar(model: ConstitutiveModel, which: str, state: ThermalState) -> float:
    """Evaluate eps, eta or lambda at a state."""
    if which not in _SCALAR_FIELDS:
        raise ValueError("which must be one of eps/eta/lambda")
    return float(
        value_of(
            scalar_value(
                model, which, state.alpha, state.alpha_dot, tuple(state.u), tuple(state.v)
            )
        )
    )


# -- sampling -----------------------------------------------------------------

#: thermal-displacement sampling interval; the model domain record only
#: constrains alpha_dot, |u| and |v|, so alpha gets a fixed convention.
ALPHA_RANGE = (-1.0, 1.0)


def sample_states(
    model_or_domain,
    n: int,
    rng: np.random.Generator,
    *,
    nondegenerate: bool = True,
    fixed_alpha: float | None = None,
    fixed_alpha_dot: float | None = None,
) -> StateBatch:
    """Draw admissible states; deterministic for a given generator.

    With ``nondegenerate`` the norms are floored at the degeneracy
    threshold and near-aligned (u, v) pairs are redrawn, matching the
    preconditions of the Jacobian-based checks.
    """
    domain = getattr(model_or_domain, "domain", model_or_domain)
    alpha = rng.uniform(*ALPHA_RANGE, size=n)
    alpha_dot = rng.uniform(domain.da.lo, domain.da.hi, size=n)
    s1_lo = max(domain.s1.lo, TOL.degenerate_s) if nondegenerate else domain.s1.lo
    s2_lo = max(domain.s2.lo, TOL.degenerate_s) if nondegenerate else domain.s2.lo
    ru = rng.uniform(s1_lo, domain.s1.hi, size=n)
    rv = rng.uniform(s2_lo, domain.s2.hi, size=n)
    du = random_unit_vectors(rng, n)
    dv = random_unit_vectors(rng, n)
    if nondegenerate:
        for _ in range(64):
            cosang = np.abs(np.sum(du * dv, axis=1))
            bad = cosang > TOL.alignment
            if not np.any(bad):
                break
            dv[bad] = random_unit_vectors(rng, int(np.sum(bad)))
    if fixed_alpha is not None:
        alpha[:] = fixed_alpha
    if fixed_alpha_dot is not None:
        alpha_dot[:] = fixed_alpha_dot
    return StateBatch(alpha, alpha_dot, du * ru[:, None], dv * rv[:, None])


# -- counterexample builder ------------------------------------------------------

def build_counterexample(
    theta0: float, k1: float, k2: float, k3: float, c0: float
) -> ConstitutiveModel:
    """Transversely isotropic conductor whose influx discrepancy is c0*da
    along the symmetry axis e = (0, 0, 1).

    q = -k1 u - k2 v - k3 (u.e) e, lambda = 1/(theta0 + da) and
    h = lambda q + (c0 da) e; energy and entropy are equal functions of
    alpha alone so the rate conditions vanish identically. With c0 = 0
    the model degenerates to the proportional form.
    """
    for label, val in (("theta0", theta0), ("k1", k1), ("k2", k2), ("k3", k3), ("c0", c0)):
        if not np.isfinite(val):
            raise ModelFormatError(f"{label} must be finite")
    if theta0 <= 0:
        raise ModelFormatError("theta0 must be positive")
    if k1 < 0 or k2 < 0 or k3 < 0:
        raise ModelFormatError("conduction moduli must be nonnegative")
    t0 = repr(float(theta0))
    lam = f"1/({t0} + da)"

    def prop(k):
        return "0.0" if k == 0 else f"-{float(k)!r}/({t0} + da)"

    q3_terms = [] if k3 == 0 else [f"-{float(k3)!r}*s4"]
    h3_terms = [] if k3 == 0 else [f"-{float(k3)!r}*s4/({t0} + da)"]
    if c0 != 0:
        h3_terms.append(f"{float(c0)!r}*da")
    q = (
        "0.0" if k1 == 0 else f"-{float(k1)!r}",
        "0.0" if k2 == 0 else f"-{float(k2)!r}",
        " + ".join(q3_terms) if q3_terms else "0.0",
    )
    h = (prop(k1), prop(k2), " + ".join(h3_terms) if h3_terms else "0.0")
    return ConstitutiveModel(
        name="transiso_counterexample",
        symmetry=TRANSVERSELY_ISOTROPIC,
        rho=1.0,
        eps="a",
        eta="a",
        lam=lam,
        h=h,
        q=q,
        domain=DomainBox(
            Interval(-theta0 / 3.0, 2.0 * theta0), Interval(0.1, 10.0), Interval(0.1, 10.0)
        ),
        axis=np.array([0.0, 0.0, 1.0]),
    )


# -- JSON model files ----------------------------------------------------------------

_TOP_FIELDS = {"name", "symmetry", "axis", "rho", "eps", "eta", "lambda", "h", "q", "domain"}
_DOMAIN_FIELDS = {"da", "s1", "s2"}


def model_to_dict(model: ConstitutiveModel) -> dict:
    out = {
        "name": model.name,
        "symmetry": model.symmetry,
        "rho": model.rho,
        "eps": model.eps.src,
        "eta": model.eta.src,
        "lambda": model.lam.src,
        "h": [c.src for c in model.h],
        "q": [c.src for c in model.q],
        "domain": {
            "da": model.domain.da.as_list(),
            "s1": model.domain.s1.as_list(),
            "s2": model.domain.s2.as_list(),
        },
    }
    if model.axis is not None:
        out["axis"] = [float(x) for x in model.axis]
    return out


def _interval_from(obj, label: str) -> Interval:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(x, (int, float)) for x in obj)
    ):
        raise ModelFormatError(f"domain.{label} must be a [lo, hi] number pair")
    return Interval(float(obj[0]), float(obj[1]))


def model_from_dict(data: dict) -> ConstitutiveModel:
    if not isinstance(data, dict):
        raise ModelFormatError("model file must hold a JSON object")
    unknown = set(data) - _TOP_FIELDS
    if unknown:
        raise ModelFormatError(f"unknown model fields: {sorted(unknown)}")
    missing = (_TOP_FIELDS - {"axis"}) - set(data)
    if missing:
        raise ModelFormatError(f"missing model fields: {sorted(missing)}")
    dom = data["domain"]
    if not isinstance(dom, dict):
        raise ModelFormatError("domain must be an object")
    unknown = set(dom) - _DOMAIN_FIELDS
    if unknown:
        raise ModelFormatError(f"unknown domain fields: {sorted(unknown)}")
    missing = _DOMAIN_FIELDS - set(dom)
    if missing:
        raise ModelFormatError(f"missing domain fields: {sorted(missing)}")
    for key in ("h", "q"):
        if not isinstance(data[key], list) or not all(
            isinstance(s, str) for s in data[key]
        ):
            raise ModelFormatError(f"{key} must be a list of expression strings")
    for key in ("name", "symmetry", "eps", "eta", "lambda"):
        if not isinstance(data[key], str):
            raise ModelFormatError(f"{key} must be a string")
    if not isinstance(data["rho"], (int, float)):
        raise ModelFormatError("rho must be a number")
    axis = None
    if "axis" in data:
        if not isinstance(data["axis"], list) or len(data["axis"]) != 3:
            raise ModelFormatError("axis must be a 3-component list")
        axis = np.array(data["axis"], dtype=float)
    return ConstitutiveModel(
        name=data["name"],
        symmetry=data["symmetry"],
        rho=float(data["rho"]),
        eps=data["eps"],
        eta=data["eta"],
        lam=data["lambda"],
        h=tuple(data["h"]),
        q=tuple(data["q"]),
        domain=DomainBox(
            _interval_from(dom["da"], "da"),
            _interval_from(dom["s1"], "s1"),
            _interval_from(dom["s2"], "s2"),
        ),
        axis=axis,
    )


def load_model(path) -> ConstitutiveModel:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise ModelFormatError(f"not valid JSON: {err}") from None
    return model_from_dict(data)


def save_model(model: ConstitutiveModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2, sort_keys=True)
        fh.write("\n")


__all__ = [
    "ThermalState",
    "InvariantSet",
    "Interval",
    "DomainBox",
    "ConstitutiveModel",
    "StateBatch",
    "ModelFormatError",
    "ModelValidationError",
    "ISOTROPIC",
    "TRANSVERSELY_ISOTROPIC",
    "EvalDomainError",
    "parse_coeff",
    "CoeffFn",
    "coeff_env",
    "flux_components",
    "scalar_value",
    "eval_flux",
    "eval_scalar",
    "sample_states",
    "build_counterexample",
    "model_to_dict",
    "model_from_dict",
    "load_model",
    "save_model",
    "ALPHA_RANGE",
]
