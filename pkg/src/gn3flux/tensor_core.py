"""3D vector and second-order tensor algebra, rotations, Haar sampling.

Vectors are float64 numpy arrays of shape (3,), second-order tensors of
shape (3, 3). Constructors validate finiteness once; all operations are
pure and assume validated inputs. Dimension is fixed at three: the
representation results this package verifies are three-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tolerances import TOL

Vec3 = np.ndarray
Ten2 = np.ndarray


class NonUnitAxisError(ValueError):
    """Axis supplied to a rotation constructor is not unit length."""


class InvalidRotationError(ValueError):
    """Matrix fails the orthonormality/determinant invariants."""


def require_finite(arr: np.ndarray, what: str = "array") -> np.ndarray:
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} contains NaN/Inf entries")
    return arr


def vec3(x, y=None, z=None) -> Vec3:
    """Build a finite (3,) float vector from components or a sequence."""
    if y is None:
        v = np.asarray(x, dtype=float)
    else:
        v = np.array([x, y, z], dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {v.shape}")
    return require_finite(v, "vector")


def ten2(rows) -> Ten2:
    """Build a finite (3, 3) float matrix."""
    t = np.asarray(rows, dtype=float)
    if t.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {t.shape}")
    return require_finite(t, "tensor")


def sym_part(t: Ten2) -> Ten2:
    """Symmetric part (T + T^t)/2; exactly symmetric componentwise."""
    return 0.5 * (t + t.T)


def skew_part(t: Ten2) -> Ten2:
    return 0.5 * (t - t.T)


def outer(a: Vec3, b: Vec3) -> Ten2:
    """Dyad a (x) b with entries a_i b_j."""
    return np.outer(a, b)


def frobenius(a: Ten2, b: Ten2) -> float:
    return float(np.sum(a * b))


@dataclass(frozen=True)
class Rotation:
    """Proper rotation; wraps an orthonormal matrix with det 1.

    The matrix is copied and frozen at construction, and the invariants
    |R^t R - I|_inf <= 1e-12 and det R in [1 - 1e-12, 1 + 1e-12] are
    enforced.
    """

    matrix: Ten2

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        require_finite(m, "rotation matrix")
        defect = np.max(np.abs(m.T @ m - np.eye(3)))
        det = float(np.linalg.det(m))
        if defect > 1e-12 or abs(det - 1.0) > 1e-12:
            raise InvalidRotationError(
                f"not a rotation: orthonormality defect {defect:.3e}, det {det:.15f}"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def apply(self, v: Vec3) -> Vec3:
        return self.matrix @ v

    def compose(self, other: "Rotation") -> "Rotation":
        return Rotation(self.matrix @ other.matrix)

    def __matmul__(self, other: "Rotation") -> "Rotation":
        return self.compose(other)

    def inverse(self) -> "Rotation":
        return Rotation(self.matrix.T.copy())


def _quaternion_to_matrix(q: np.ndarray) -> np.ndarray:
    w, x, y, z = q
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )


def sample_rotation_haar(rng: np.random.Generator) -> Rotation:
    """Draw a rotation uniformly (Haar) on the rotation group.

    Uses a normalized quaternion built from four standard Gaussians;
    deterministic for a given generator state.
    """
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    return Rotation(_quaternion_to_matrix(q))


def haar_rotation_matrices(rng: np.random.Generator, n: int) -> np.ndarray:
    """(n, 3, 3) stack of Haar rotation matrices; batched sampler."""
    q = rng.standard_normal((n, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    w, x, y, z = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    m = np.empty((n, 3, 3))
    m[:, 0, 0] = 1 - 2 * (y * y + z * z)
    m[:, 0, 1] = 2 * (x * y - w * z)
    m[:, 0, 2] = 2 * (x * z + w * y)
    m[:, 1, 0] = 2 * (x * y + w * z)
    m[:, 1, 1] = 1 - 2 * (x * x + z * z)
    m[:, 1, 2] = 2 * (y * z - w * x)
    m[:, 2, 0] = 2 * (x * z - w * y)
    m[:, 2, 1] = 2 * (y * z + w * x)
    m[:, 2, 2] = 1 - 2 * (x * x + y * y)
    return m


def rotation_about_axis(axis: Vec3, angle: float) -> Rotation:
    """Rodrigues rotation by `angle` about the unit vector `axis`.

    The axis must already be unit length to 1e-12; a non-unit axis is
    rejected so callers normalize explicitly rather than silently.
    """
    e = np.asarray(axis, dtype=float)
    require_finite(e, "axis")
    n = float(np.linalg.norm(e))
    if abs(n - 1.0) > 1e-12:
        raise NonUnitAxisError(
            f"axis has norm {n!r}; normalize it to unit length before use"
        )
    k = np.array([[0.0, -e[2], e[1]], [e[2], 0.0, -e[0]], [-e[1], e[0], 0.0]])
    c, s = np.cos(angle), np.sin(angle)
    m = np.eye(3) + s * k + (1.0 - c) * (k @ k)
    return Rotation(m)


def random_unit_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    """(n, 3) unit vectors uniform on the sphere."""
    g = rng.standard_normal((n, 3))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


__all__ = [
    "Vec3",
    "Ten2",
    "Rotation",
    "NonUnitAxisError",
    "InvalidRotationError",
    "TOL",
    "vec3",
    "ten2",
    "require_finite",
    "sym_part",
    "skew_part",
    "outer",
    "frobenius",
    "sample_rotation_haar",
    "haar_rotation_matrices",
    "rotation_about_axis",
    "random_unit_vectors",
]
