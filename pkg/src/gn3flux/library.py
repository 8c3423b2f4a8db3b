"""Bundled constitutive models.

Five isotropic conductors built with h = lambda(a, da) * q written out
coefficient by coefficient (the family the proportionality theorem
covers), the transversely isotropic counterexample with a nonzero axial
influx discrepancy, one proportional transversely isotropic model, and
two deliberately inconsistent probes whose multiplier depends on |u|.
"""

from __future__ import annotations

import numpy as np

from .constitutive import (
    ConstitutiveModel,
    DomainBox,
    Interval,
    ISOTROPIC,
    TRANSVERSELY_ISOTROPIC,
    build_counterexample,
)

_DEFAULT_DOMAIN = DomainBox(Interval(-100.0, 900.0), Interval(0.1, 10.0), Interval(0.1, 10.0))


def _iso(name, *, eps, eta, lam, h, q, rho=1.0, domain=_DEFAULT_DOMAIN):
    return ConstitutiveModel(
        name=name, symmetry=ISOTROPIC, rho=rho, eps=eps, eta=eta, lam=lam,
        h=h, q=q, domain=domain,
    )


def iso_fourier_linear() -> ConstitutiveModel:
    """Linear conduction on both gradients, coldness-like multiplier."""
    return _iso(
        "iso_fourier_linear",
        eps="da",
        eta="ln(300.0 + da)",
        lam="1/(300.0 + da)",
        h=("-1.2/(300.0 + da)", "-0.7/(300.0 + da)"),
        q=("-1.2", "-0.7"),
    )


def iso_wave_type2() -> ConstitutiveModel:
    """Gradient-of-displacement conduction only (the wave limit)."""
    return _iso(
        "iso_wave_type2",
        eps="da",
        eta="ln(300.0 + da)",
        lam="1/(300.0 + da)",
        h=("-2.0/(300.0 + da)", "0.0"),
        q=("-2.0", "0.0"),
        rho=2.0,
    )


def iso_invariant_nonlinear() -> ConstitutiveModel:
    """Conductivities modulated by the invariants themselves."""
    return _iso(
        "iso_invariant_nonlinear",
        eps="2*da",
        eta="2*ln(300.0 + da)",
        lam="1/(300.0 + da)",
        h=("-(1 + 0.1*s3^2)/(300.0 + da)", "-(0.5 + 0.05*s1*s2)/(300.0 + da)"),
        q=("-(1 + 0.1*s3^2)", "-(0.5 + 0.05*s1*s2)"),
    )


def iso_arrhenius() -> ConstitutiveModel:
    """Exponential multiplier and a displacement-modulated conductivity."""
    return _iso(
        "iso_arrhenius",
        eps="da",
        eta="-2*exp(-da/600)",
        lam="exp(-da/600)/300",
        h=("-(2 + 0.2*sin(a))*exp(-da/600)/300", "-exp(-da/600)/300"),
        q=("-(2 + 0.2*sin(a))", "-1"),
    )


def iso_const_lambda() -> ConstitutiveModel:
    """Constant multiplier, so energy/entropy may carry gradient terms."""
    return _iso(
        "iso_const_lambda",
        eps="s1^2 + 0.5*s3 + da",
        eta="0.003*(s1^2 + 0.5*s3 + da)",
        lam="0.003",
        h=("-0.003*(1 + 0.1*s2^2)", "-0.003"),
        q=("-(1 + 0.1*s2^2)", "-1"),
    )


def transiso_counterexample() -> ConstitutiveModel:
    """Admissible transversely isotropic conductor with h - lambda q = da e."""
    return build_counterexample(300.0, 1.0, 0.5, 0.25, 1.0)


def transiso_proportional() -> ConstitutiveModel:
    """Transversely isotropic but still proportional (zero discrepancy)."""
    return ConstitutiveModel(
        name="transiso_proportional",
        symmetry=TRANSVERSELY_ISOTROPIC,
        rho=1.0,
        eps="da",
        eta="ln(300.0 + da)",
        lam="1/(300.0 + da)",
        h=(
            "-1.0/(300.0 + da)",
            "-0.5/(300.0 + da)",
            "(-0.3*s4 - 0.2*s5)/(300.0 + da)",
        ),
        q=("-1.0", "-0.5", "-0.3*s4 - 0.2*s5"),
        domain=_DEFAULT_DOMAIN,
        axis=np.array([0.0, 0.0, 1.0]),
    )


def iso_bad_lambda() -> ConstitutiveModel:
    """Multiplier depending on |u|: provably inconsistent, h still = lambda q."""
    return _iso(
        "iso_bad_lambda",
        eps="1",
        eta="1",
        lam="1/(300.0 + da + s1)",
        h=("-150.0/(300.0 + da + s1)", "-150.0/(300.0 + da + s1)"),
        q=("-150.0", "-150.0"),
    )


def iso_coupling_probe() -> ConstitutiveModel:
    """|u|-dependent multiplier but q1 = 0, so the coupled combination
    d1(h1 - lambda q1) + (d1 lambda) q1 still vanishes."""
    return _iso(
        "iso_coupling_probe",
        eps="1",
        eta="1",
        lam="1/(300.0 + da + s1)",
        h=("0.0", "-1.0/(300.0 + da + s1)"),
        q=("0.0", "-1.0"),
    )


#: the isotropic proportional family covered by the theorem
PROPORTIONAL_ISO = (
    "iso_fourier_linear",
    "iso_wave_type2",
    "iso_invariant_nonlinear",
    "iso_arrhenius",
    "iso_const_lambda",
)

COUNTEREXAMPLE = "transiso_counterexample"
VIOLATION = "iso_bad_lambda"

_BUILDERS = {
    "iso_fourier_linear": iso_fourier_linear,
    "iso_wave_type2": iso_wave_type2,
    "iso_invariant_nonlinear": iso_invariant_nonlinear,
    "iso_arrhenius": iso_arrhenius,
    "iso_const_lambda": iso_const_lambda,
    "transiso_counterexample": transiso_counterexample,
    "transiso_proportional": transiso_proportional,
    "iso_bad_lambda": iso_bad_lambda,
    "iso_coupling_probe": iso_coupling_probe,
}


def bundled_model(name: str) -> ConstitutiveModel:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"no bundled model named {name!r}") from None


def bundled_models() -> dict:
    """Fresh instances of every bundled model, keyed by name."""
    return {name: build() for name, build in _BUILDERS.items()}


__all__ = [
    "PROPORTIONAL_ISO",
    "COUNTEREXAMPLE",
    "VIOLATION",
    "bundled_model",
    "bundled_models",
    "iso_fourier_linear",
    "iso_wave_type2",
    "iso_invariant_nonlinear",
    "iso_arrhenius",
    "iso_const_lambda",
    "transiso_counterexample",
    "transiso_proportional",
    "iso_bad_lambda",
    "iso_coupling_probe",
]
