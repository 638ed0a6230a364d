"""Exact vertex counts of balls and spheres in Bruhat-Tits buildings of split classical groups."""

from ._core import (
    QNumber,
    SuperQExpPoly,
    SvolError,
    asymptote,
    enumerate_sphere,
    poincare_parabolic,
    root_system,
    ssa_closed_form,
    ssa_exact,
    sv_closed_form,
    sv_exact,
    verify,
)

__all__ = [
    "QNumber",
    "SuperQExpPoly",
    "SvolError",
    "asymptote",
    "enumerate_sphere",
    "poincare_parabolic",
    "root_system",
    "ssa_closed_form",
    "ssa_exact",
    "sv_closed_form",
    "sv_exact",
    "verify",
]
