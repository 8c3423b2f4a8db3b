"""Forward-mode differentiation on one directional slot.

A :class:`Jet` carries a value and the derivative of that value along a
single declared perturbation; arithmetic propagates the derivative by
the exact sum/product/quotient/chain rules. Both slots may be plain
floats or same-shape numpy arrays, so one Jet can differentiate a whole
batch of states at once.

The public operations differentiate state functions f(state) where the
state exposes ``alpha``, ``alpha_dot``, ``u`` and ``v`` attributes
(scalars and length-3 sequences). Inside ``f`` use the helpers
:func:`dot3`, :func:`norm3`, :func:`scale3` and the dispatching math
functions (:func:`sqrt` etc.) so mixed float/Jet components compose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .tensor_core import Ten2


class DomainError(ValueError):
    """A function was differentiated or evaluated outside its domain."""


def _is_zero(x) -> bool:
    return np.all(np.asarray(x) == 0.0)


class Jet:
    """Value plus one directional-derivative slot."""

    __slots__ = ("val", "dot")
    # keep numpy from broadcasting Jets elementwise into object arrays
    __array_ufunc__ = None

    def __init__(self, val, dot=0.0):
        self.val = val
        self.dot = dot

    def __repr__(self):
        return f"Jet({self.val!r}, dot={self.dot!r})"

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val, self.dot + other.dot)
        return Jet(self.val + other, self.dot)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val - other.val, self.dot - other.dot)
        return Jet(self.val - other, self.dot)

    def __rsub__(self, other):
        return Jet(other - self.val, -self.dot)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val * other.val, self.val * other.dot + self.dot * other.val)
        return Jet(self.val * other, self.dot * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            if np.any(np.asarray(other.val) == 0.0):
                raise DomainError("division by zero")
            v = self.val / other.val
            return Jet(v, (self.dot - v * other.dot) / other.val)
        if np.any(np.asarray(other) == 0.0):
            raise DomainError("division by zero")
        return Jet(self.val / other, self.dot / other)

    def __rtruediv__(self, other):
        if np.any(np.asarray(self.val) == 0.0):
            raise DomainError("division by zero")
        v = other / self.val
        return Jet(v, -v * self.dot / self.val)

    def __neg__(self):
        return Jet(-self.val, -self.dot)

    def __pow__(self, other):
        if isinstance(other, Jet):
            if _is_zero(other.dot):
                return self._pow_const(other.val)
            # general exponent: b^e = exp(e ln b), requires b > 0
            if np.any(np.asarray(self.val) <= 0.0):
                raise DomainError("x^y with varying exponent needs x > 0")
            v = self.val ** other.val
            ln_b = np.log(self.val)
            return Jet(v, v * (other.dot * ln_b + other.val * self.dot / self.val))
        return self._pow_const(other)

    def _pow_const(self, n):
        n_arr = np.asarray(n)
        if np.all(n_arr == np.floor(n_arr)):
            base = np.asarray(self.val)
            if np.any((base == 0.0) & (n_arr < 1.0)):
                raise DomainError("x^n at x = 0 with exponent below 1")
            v = self.val ** n
            return Jet(v, n * self.val ** (n - 1.0) * self.dot)
        if np.any(np.asarray(self.val) <= 0.0):
            raise DomainError("x^y with non-integer exponent needs x > 0")
        v = self.val ** n
        return Jet(v, n * self.val ** (n - 1.0) * self.dot)

    def __rpow__(self, base):
        if np.any(np.asarray(base) <= 0.0):
            raise DomainError("b^x needs b > 0")
        v = base ** self.val
        return Jet(v, v * np.log(base) * self.dot)

    # -- elementary functions -------------------------------------------
    def sqrt(self):
        if np.any(np.asarray(self.val) <= 0.0):
            raise DomainError("sqrt differentiated at a non-positive argument")
        v = np.sqrt(self.val)
        return Jet(v, self.dot / (2.0 * v))

    def exp(self):
        v = np.exp(self.val)
        return Jet(v, v * self.dot)

    def ln(self):
        if np.any(np.asarray(self.val) <= 0.0):
            raise DomainError("ln of a non-positive argument")
        return Jet(np.log(self.val), self.dot / self.val)

    def sin(self):
        return Jet(np.sin(self.val), np.cos(self.val) * self.dot)

    def cos(self):
        return Jet(np.cos(self.val), -np.sin(self.val) * self.dot)


# -- dispatchers usable on floats, arrays and Jets ------------------------

def sqrt(x):
    if isinstance(x, Jet):
        return x.sqrt()
    return np.sqrt(x)


def exp(x):
    if isinstance(x, Jet):
        return x.exp()
    return np.exp(x)


def ln(x):
    if isinstance(x, Jet):
        return x.ln()
    if np.any(np.asarray(x) <= 0.0):
        raise DomainError("ln of a non-positive argument")
    return np.log(x)


def sin(x):
    if isinstance(x, Jet):
        return x.sin()
    return np.sin(x)


def cos(x):
    if isinstance(x, Jet):
        return x.cos()
    return np.cos(x)


def value_of(x):
    return x.val if isinstance(x, Jet) else x


def dot_of(x):
    return x.dot if isinstance(x, Jet) else 0.0


# -- state-level differentiation ------------------------------------------

class StateVals(NamedTuple):
    """Duck-typed state handed to differentiated functions.

    ``u`` and ``v`` are 3-element tuples whose entries are floats or
    Jets, depending on which slot carries the perturbation.
    """

    alpha: object
    alpha_dot: object
    u: tuple
    v: tuple


_SCALAR_ALIASES = {
    "alpha": "alpha",
    "a": "alpha",
    "alpha_dot": "alpha_dot",
    "da": "alpha_dot",
}


def _plain_state(at) -> StateVals:
    u = np.asarray(at.u, dtype=float)
    v = np.asarray(at.v, dtype=float)
    return StateVals(float(at.alpha), float(at.alpha_dot), tuple(u), tuple(v))


def lift_state(at, slot: str, index: int | None = None) -> StateVals:
    """Copy of the state with a unit perturbation in one slot.

    ``slot`` is 'alpha', 'alpha_dot', 'u' or 'v'; for the vector slots
    ``index`` selects the perturbed component.
    """
    base = _plain_state(at)
    if slot in _SCALAR_ALIASES:
        slot = _SCALAR_ALIASES[slot]
        return base._replace(**{slot: Jet(getattr(base, slot), 1.0)})
    if slot not in ("u", "v"):
        raise ValueError(f"unknown state slot {slot!r}")
    comps = tuple(
        Jet(c, 1.0 if k == index else 0.0) for k, c in enumerate(getattr(base, slot))
    )
    return base._replace(**{slot: comps})


def dot3(a, b):
    """Inner product of 3-component sequences of floats/Jets."""
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def norm3(a):
    return sqrt(dot3(a, a))


def scale3(c, a):
    return (c * a[0], c * a[1], c * a[2])


def add3(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


@dataclass(frozen=True)
class VecJacobian:
    """Jacobians of a vector state function with respect to u and v."""

    d_u: Ten2
    d_v: Ten2


def jacobian_wrt_vectors(f: Callable, at) -> VecJacobian:
    """Differentiate the vector field f(state) with respect to u and v.

    Column j of ``d_u`` holds the directional derivative of f along the
    j-th basis perturbation of u; exact for the lifted Jet arithmetic.
    Raises :class:`DomainError` when f is not differentiable at the
    state (e.g. a norm invariant evaluated at the origin).
    """
    d_u = np.empty((3, 3))
    d_v = np.empty((3, 3))
    for slot, out in (("u", d_u), ("v", d_v)):
        for j in range(3):
            fx = f(lift_state(at, slot, j))
            for i in range(3):
                out[i, j] = dot_of(fx[i])
    return VecJacobian(d_u, d_v)


def partial_wrt_scalar(f: Callable, which: str, at):
    """Directional derivative of f(state) along a unit perturbation of
    alpha or alpha_dot. Returns a float for scalar f, a (3,) array for
    vector f."""
    if which not in _SCALAR_ALIASES:
        raise ValueError(f"scalar slot must be alpha/alpha_dot, got {which!r}")
    fx = f(lift_state(at, which))
    if isinstance(fx, (tuple, list)) or (
        isinstance(fx, np.ndarray) and fx.ndim == 1
    ):
        return np.array([dot_of(c) for c in fx])
    return dot_of(fx)


def gradient_wrt_vector(f: Callable, which: str, at) -> np.ndarray:
    """Gradient of the scalar state function f with respect to u or v."""
    if which not in ("u", "v"):
        raise ValueError(f"vector slot must be 'u' or 'v', got {which!r}")
    return np.array([dot_of(f(lift_state(at, which, j))) for j in range(3)])


_ALL_SLOTS = [("alpha", None), ("alpha_dot", None)] + [
    (s, j) for s in ("u", "v") for j in range(3)
]


def _eval_components(f, state) -> np.ndarray:
    fx = f(state)
    if isinstance(fx, (tuple, list)) or (isinstance(fx, np.ndarray) and fx.ndim == 1):
        return np.array([value_of(c) for c in fx], dtype=float)
    return np.array([value_of(fx)], dtype=float)


def _shift_state(at, slot, index, delta) -> StateVals:
    base = _plain_state(at)
    if slot in ("alpha", "alpha_dot"):
        return base._replace(**{slot: getattr(base, slot) + delta})
    comps = list(getattr(base, slot))
    comps[index] = comps[index] + delta
    return base._replace(**{slot: tuple(comps)})


def fd_crosscheck(f: Callable, at, step: float = 1e-5) -> float:
    """Max relative deviation between AD and central finite differences.

    The comparison runs over all eight state slots with per-slot step
    step * (1 + |slot value|); deviation is |AD - FD| / (1 + |AD|).
    """
    if step <= 0:
        raise ValueError("step must be positive")
    base = _plain_state(at)
    worst = 0.0
    for slot, index in _ALL_SLOTS:
        if slot in ("alpha", "alpha_dot"):
            x0 = getattr(base, slot)
            lifted = f(lift_state(at, slot))
        else:
            x0 = getattr(base, slot)[index]
            lifted = f(lift_state(at, slot, index))
        if isinstance(lifted, (tuple, list)) or (
            isinstance(lifted, np.ndarray) and lifted.ndim == 1
        ):
            ad = np.array([dot_of(c) for c in lifted], dtype=float)
        else:
            ad = np.array([dot_of(lifted)], dtype=float)
        h = step * (1.0 + abs(float(x0)))
        hi = _eval_components(f, _shift_state(at, slot, index, +h))
        lo = _eval_components(f, _shift_state(at, slot, index, -h))
        fd = (hi - lo) / (2.0 * h)
        dev = np.max(np.abs(ad - fd) / (1.0 + np.abs(ad)))
        worst = max(worst, float(dev))
    return worst


__all__ = [
    "DomainError",
    "Jet",
    "StateVals",
    "VecJacobian",
    "sqrt",
    "exp",
    "ln",
    "sin",
    "cos",
    "value_of",
    "dot_of",
    "dot3",
    "norm3",
    "scale3",
    "add3",
    "lift_state",
    "jacobian_wrt_vectors",
    "partial_wrt_scalar",
    "gradient_wrt_vector",
    "fd_crosscheck",
]
