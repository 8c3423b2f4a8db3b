"""Numerical checks for isotropic representation and dyadic-basis lemmas.

An isotropic vector function of two vectors lives in span{u, v} with
coefficients depending only on (|u|, |v|, u.v); a transversely isotropic
one gains the axis e and the scalar products with it. This module
measures equivariance defects under sampled rotations, extracts the
span coefficients by solving the Gram system, and round-trips the
dyadic-basis coefficient systems that make those expansions injective
on orthonormal frames.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor_core import (
    Rotation,
    haar_rotation_matrices,
    outer,
    random_unit_vectors,
    rotation_about_axis,
)
from .tolerances import TOL


class DegenerateConfiguration(ValueError):
    """The argument vectors are too aligned for a well-posed solve."""


class ResidualTooLarge(ValueError):
    """f has a component outside the representable span."""


class FrameError(ValueError):
    """Supplied frame is not orthonormal (or wrongly oriented)."""


# -- isotropy defect -------------------------------------------------------------

def rotation_defect(f, rot: Rotation, u: np.ndarray, v: np.ndarray) -> float:
    """|Q f(u, v) - f(Qu, Qv)| for one rotation and one argument pair."""
    return float(
        np.linalg.norm(rot.matrix @ np.asarray(f(u, v), dtype=float)
                       - np.asarray(f(rot.matrix @ u, rot.matrix @ v), dtype=float))
    )


def isotropy_defect(
    f,
    group: str = "full",
    axis: np.ndarray | None = None,
    samples: int = 1000,
    seed: int = 0,
) -> float:
    """Max equivariance defect of f over sampled rotations and states.

    ``group='full'`` draws Haar rotations; ``group='about'`` draws
    uniform-angle rotations about ``axis``. Argument vectors get
    log-uniform norms in [0.1, 10] and uniform directions.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    if group == "full":
        mats = haar_rotation_matrices(rng, samples)
    elif group == "about":
        if axis is None:
            raise ValueError("group='about' needs an axis")
        angles = rng.uniform(0.0, 2.0 * np.pi, size=samples)
        mats = np.stack([rotation_about_axis(axis, t).matrix for t in angles])
    else:
        raise ValueError("group must be 'full' or 'about'")
    norms_u = np.exp(rng.uniform(np.log(0.1), np.log(10.0), size=samples))
    norms_v = np.exp(rng.uniform(np.log(0.1), np.log(10.0), size=samples))
    du = random_unit_vectors(rng, samples)
    dv = random_unit_vectors(rng, samples)
    worst = 0.0
    for i in range(samples):
        u = norms_u[i] * du[i]
        v = norms_v[i] * dv[i]
        fx = np.asarray(f(u, v), dtype=float)
        rotated = mats[i] @ fx
        moved = np.asarray(f(mats[i] @ u, mats[i] @ v), dtype=float)
        worst = max(worst, float(np.linalg.norm(rotated - moved)))
    return worst


# -- span-coefficient extraction ---------------------------------------------------

@dataclass(frozen=True)
class IsoExtraction:
    phi1: float
    phi2: float
    residual: float


@dataclass(frozen=True)
class TransIsoExtraction:
    phi1: float
    phi2: float
    phi3: float
    residual: float


def extract_iso_coeffs(f_vec, u, v) -> IsoExtraction:
    """Solve <f,u> = p1 |u|^2 + p2 (u.v), <f,v> = p1 (u.v) + p2 |v|^2.

    The 2x2 Gram solve is exact on exact inputs. Raises
    :class:`DegenerateConfiguration` when u, v are (nearly) aligned and
    :class:`ResidualTooLarge` when f has a span-orthogonal component
    beyond tolerance, i.e. f is not an isotropic function of (u, v).
    """
    f_vec = np.asarray(f_vec, dtype=float)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    uu = float(u @ u)
    vv = float(v @ v)
    uv = float(u @ v)
    det = uu * vv - uv * uv
    if det < TOL.gram_floor * uu * vv or uu == 0.0 or vv == 0.0:
        raise DegenerateConfiguration(
            "u and v are aligned (or zero); the span solve is singular"
        )
    b1 = float(f_vec @ u)
    b2 = float(f_vec @ v)
    phi1 = (b1 * vv - b2 * uv) / det
    phi2 = (b2 * uu - b1 * uv) / det
    residual = float(np.linalg.norm(f_vec - phi1 * u - phi2 * v))
    if residual > TOL.extraction_residual * (1.0 + float(np.linalg.norm(f_vec))):
        raise ResidualTooLarge(
            f"f leaves span(u, v) by {residual:.3e}; not an isotropic value"
        )
    return IsoExtraction(phi1, phi2, residual)


def extract_transiso_coeffs(f_vec, u, v, e) -> TransIsoExtraction:
    """Solve the 3x3 Gram system for f = p1 u + p2 v + p3 e."""
    f_vec = np.asarray(f_vec, dtype=float)
    basis = [np.asarray(x, dtype=float) for x in (u, v, e)]
    norms = np.array([np.linalg.norm(b) for b in basis])
    if np.any(norms == 0.0):
        raise DegenerateConfiguration("zero basis vector")
    # solve in the normalized basis: conditioning then depends only on
    # the angles, not on the norm spread between u, v and e
    unit = [b / n for b, n in zip(basis, norms)]
    scaled = np.array([[a @ b for b in unit] for a in unit])
    if abs(np.linalg.det(scaled)) < TOL.gram_floor:
        raise DegenerateConfiguration("u, v, e are (nearly) coplanar")
    rhs = np.array([f_vec @ b for b in unit])
    phi = np.linalg.solve(scaled, rhs) / norms
    residual = float(
        np.linalg.norm(f_vec - phi[0] * basis[0] - phi[1] * basis[1] - phi[2] * basis[2])
    )
    if residual > TOL.extraction_residual * (1.0 + float(np.linalg.norm(f_vec))):
        raise ResidualTooLarge(
            f"f leaves span(u, v, e) by {residual:.3e}"
        )
    return TransIsoExtraction(float(phi[0]), float(phi[1]), float(phi[2]), residual)


# -- dyadic-basis lemmas ---------------------------------------------------------------

@dataclass(frozen=True)
class LemmaCoefficients:
    """Dyadic-basis coefficients: 4 for the (u, v) lemma, 7 with an axis.

    The Greek-letter order is (alpha, beta, gamma, delta) and, with an
    axis, (alpha, beta, gamma, delta, phi, chi, psi) for the basis
    {I, u(x)u, v(x)v, u(x)v + v(x)u, e(x)e, u(x)e + e(x)u,
    v(x)e + e(x)v}. These scalars are unrelated to the thermal state.
    """

    values: tuple

    def __post_init__(self):
        vals = tuple(float(x) for x in self.values)
        if len(vals) not in (4, 7):
            raise ValueError("expected 4 or 7 coefficients")
        if not np.all(np.isfinite(vals)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "values", vals)

    @property
    def with_axis(self) -> bool:
        return len(self.values) == 7


def lemma_tensor(coeffs, u, v, e=None) -> np.ndarray:
    """Assemble the dyadic-basis tensor for given coefficients."""
    vals = tuple(float(c) for c in coeffs)
    t = vals[0] * np.eye(3) + vals[1] * outer(u, u) + vals[2] * outer(v, v)
    t = t + vals[3] * (outer(u, v) + outer(v, u))
    if len(vals) == 7:
        if e is None:
            raise ValueError("seven coefficients need an axis vector")
        t = t + vals[4] * outer(e, e)
        t = t + vals[5] * (outer(u, e) + outer(e, u))
        t = t + vals[6] * (outer(v, e) + outer(e, v))
    elif len(vals) != 4:
        raise ValueError("expected 4 or 7 coefficients")
    return t


def _gram_schmidt(u, v, e=None):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu = np.linalg.norm(u)
    if nu == 0.0:
        raise FrameError("zero frame vector")
    u = u / nu
    v = v - (v @ u) * u
    nv = np.linalg.norm(v)
    if nv == 0.0:
        raise FrameError("frame vectors are aligned")
    v = v / nv
    if e is None:
        return u, v, None
    return u, v, np.cross(u, v)


def _check_frame(u, v, e, need_cross: bool):
    for name, vec in (("u", u), ("v", v)):
        if abs(np.linalg.norm(vec) - 1.0) > 1e-12:
            raise FrameError(f"{name} is not unit length")
    if abs(float(u @ v)) > 1e-12:
        raise FrameError("u and v are not orthogonal")
    if need_cross:
        if e is None:
            raise FrameError("the seven-coefficient lemma needs an axis")
        if np.linalg.norm(np.cross(u, v) - e) > 1e-12:
            raise FrameError("frame must satisfy u x v = e")


def lemma_extract(t: np.ndarray, u, v, e=None, orthonormalize: bool = False):
    """Recover dyadic-basis coefficients on an orthonormal frame.

    Mirrors the proofs' linear systems: apply the tensor to the frame
    vectors and take the trace. With four basis elements the system
    (alpha+beta, alpha+gamma, delta, trace) is square and the recovery
    is unique. With seven, the diagonal dyads on an orthonormal frame
    satisfy u(x)u + v(x)v + e(x)e = I, so the pointwise basis is one
    short of independent; the extraction returns the representative in
    the trace-free-dyad gauge beta + gamma + phi = 0 (equivalently
    alpha = trace/3), which is the identity on tuples already in that
    gauge and reassembles to the same tensor for all others. A zero
    tensor maps to all-zero coefficients.

    Frames must be orthonormal to 1e-12 (and satisfy u x v = e for the
    seven-coefficient variant); pass ``orthonormalize=True`` to apply
    Gram-Schmidt first, in which case the adjusted frame is returned
    alongside the coefficients.
    """
    t = np.asarray(t, dtype=float)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    e = None if e is None else np.asarray(e, dtype=float)
    with_axis = e is not None
    if orthonormalize:
        u, v, e2 = _gram_schmidt(u, v, e)
        e = e2 if with_axis else None
    _check_frame(u, v, e, with_axis)

    a1 = float(u @ t @ u)  # alpha + beta
    a2 = float(v @ t @ v)  # alpha + gamma
    delta = 0.5 * (float(v @ t @ u) + float(u @ t @ v))
    tr = float(np.trace(t))
    if not with_axis:
        alpha = tr - a1 - a2
        coeffs = LemmaCoefficients((alpha, a1 - alpha, a2 - alpha, delta))
    else:
        a3 = float(e @ t @ e)  # alpha + phi
        chi = 0.5 * (float(e @ t @ u) + float(u @ t @ e))
        psi = 0.5 * (float(e @ t @ v) + float(v @ t @ e))
        alpha = tr / 3.0
        coeffs = LemmaCoefficients(
            (alpha, a1 - alpha, a2 - alpha, delta, a3 - alpha, chi, psi)
        )
    if orthonormalize:
        return coeffs, (u, v, e)
    return coeffs


# -- verification suite ------------------------------------------------------------------

def _synthetic_isotropic_fields():
    """Hand-built isotropic vector functions used as suite fixtures."""
    return (
        ("uv_dot_u", lambda u, v: (u @ v) * u),
        ("norm_mix", lambda u, v: (v @ v) * u + np.exp(-(u @ u)) * v),
        ("pure_v", lambda u, v: -2.0 * v),
        ("coupled", lambda u, v: (u @ u) * v + (u @ v) * (u + v)),
    )


def run_lemma_suite(seed: int = 0, samples: int = 1000, corrupt: bool = False) -> dict:
    """Run every representation check; returns a JSON-able report.

    ``corrupt=True`` injects a deliberate error into one extraction so
    failure handling can be exercised end to end.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    checks = []

    def record(name, max_error, tol):
        checks.append(
            {
                "name": name,
                "max_error": float(max_error),
                "tol": float(tol),
                "passed": bool(max_error <= tol),
            }
        )

    # four-coefficient round trip on random orthonormal frames
    worst = 0.0
    for _ in range(samples):
        frame = np.linalg.qr(rng.standard_normal((3, 3)))[0]
        u, v = frame[:, 0], frame[:, 1]
        coeffs = tuple(rng.uniform(-3.0, 3.0, size=4))
        got = lemma_extract(lemma_tensor(coeffs, u, v), u, v).values
        if corrupt:
            got = (got[0] + 1e-3,) + got[1:]
            corrupt = False  # poison exactly one sample
        worst = max(worst, float(np.max(np.abs(np.array(got) - np.array(coeffs)))))
    record("lemma4_round_trip", worst, TOL.algebraic)

    # seven-coefficient round trip on right-handed orthonormal frames;
    # tuples drawn in the trace-free-dyad gauge (phi = -beta - gamma)
    worst = 0.0
    worst_tensor = 0.0
    for _ in range(samples):
        frame = np.linalg.qr(rng.standard_normal((3, 3)))[0]
        u, v = frame[:, 0], frame[:, 1]
        e = np.cross(u, v)
        coeffs = rng.uniform(-3.0, 3.0, size=7)
        coeffs[4] = -(coeffs[1] + coeffs[2])
        built = lemma_tensor(coeffs, u, v, e)
        got = lemma_extract(built, u, v, e).values
        worst = max(worst, float(np.max(np.abs(np.array(got) - coeffs))))
        worst_tensor = max(
            worst_tensor, float(np.max(np.abs(lemma_tensor(got, u, v, e) - built)))
        )
    record("lemma7_round_trip", worst, TOL.algebraic)
    record("lemma7_tensor_round_trip", worst_tensor, TOL.algebraic)

    # zero tensor maps to zero coefficients
    u = np.array([1.0, 0.0, 0.0])
    v = np.array([0.0, 1.0, 0.0])
    e = np.array([0.0, 0.0, 1.0])
    z4 = lemma_extract(np.zeros((3, 3)), u, v).values
    z7 = lemma_extract(np.zeros((3, 3)), u, v, e).values
    record("zero_tensor", max(np.max(np.abs(z4)), np.max(np.abs(z7))), TOL.algebraic)

    # injectivity: nonzero coefficients never extract to (nearly) zero
    worst_ratio = 1.0
    for _ in range(min(samples, 200)):
        frame = np.linalg.qr(rng.standard_normal((3, 3)))[0]
        u2, v2 = frame[:, 0], frame[:, 1]
        coeffs = rng.uniform(-3.0, 3.0, size=4)
        coeffs[int(rng.integers(0, 4))] = 1.0  # keep it clearly nonzero
        got = np.array(lemma_extract(lemma_tensor(coeffs, u2, v2), u2, v2).values)
        worst_ratio = min(
            worst_ratio, float(np.linalg.norm(got) / np.linalg.norm(coeffs))
        )
    record("injectivity_norm_ratio", 1.0 - worst_ratio, 0.01)

    # span reconstruction for synthetic isotropic fields
    worst = 0.0
    for _, f in _synthetic_isotropic_fields():
        for _ in range(max(1, samples // 4)):
            u2 = rng.uniform(0.1, 3.0) * random_unit_vectors(rng, 1)[0]
            v2 = rng.uniform(0.1, 3.0) * random_unit_vectors(rng, 1)[0]
            if abs(u2 @ v2) > TOL.alignment * np.linalg.norm(u2) * np.linalg.norm(v2):
                continue
            worst = max(worst, extract_iso_coeffs(f(u2, v2), u2, v2).residual)
    record("isotropic_reconstruction", worst, TOL.cross_check)

    # equivariance defect of the synthetic isotropic fields
    worst = 0.0
    for _, f in _synthetic_isotropic_fields():
        worst = max(
            worst, isotropy_defect(f, samples=max(1, samples // 4), seed=seed)
        )
    record("isotropy_defect", worst, TOL.residual)

    # a fixed vector is not isotropic: half-turn witness reaches 2
    e3 = np.array([0.0, 0.0, 1.0])
    witness = rotation_defect(
        lambda u_, v_: e3,
        rotation_about_axis(np.array([1.0, 0.0, 0.0]), np.pi),
        np.array([1.0, 0.0, 0.0]),
        np.array([0.0, 1.0, 0.0]),
    )
    checks.append(
        {
            "name": "fixed_vector_witness",
            "max_error": float(witness),
            "tol": 1.9,
            "passed": bool(witness >= 1.9),
        }
    )

    return {
        "seed": int(seed),
        "samples": int(samples),
        "checks": checks,
        "all_passed": bool(all(c["passed"] for c in checks)),
    }


__all__ = [
    "DegenerateConfiguration",
    "ResidualTooLarge",
    "FrameError",
    "IsoExtraction",
    "TransIsoExtraction",
    "LemmaCoefficients",
    "rotation_defect",
    "isotropy_defect",
    "extract_iso_coeffs",
    "extract_transiso_coeffs",
    "lemma_tensor",
    "lemma_extract",
    "run_lemma_suite",
]
