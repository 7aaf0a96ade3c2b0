"""Closed-form group exponentials e^A = E + t*A + u*A^2 for the seven families.

Every family matrix satisfies a low-degree annihilating identity that
collapses the exponential series:

  * F1, F11:  A^2 = (tr A) A        ->  t = (e^k - 1)/k with k = tr A, u = 0
  * F5:       A^2 = (tr A / 2) A    ->  same t with k = tr A / 2, u = 0
  * F4, F8, F9, F10:  A^3 = z A with z = tr(A^2)/2
                ->  t = sinh(sqrt(z))/sqrt(z), u = (cosh(sqrt(z)) - 1)/z

The cubic-case coefficients are entire functions of z, so z < 0 simply lands
in the trigonometric regime (sin/cos); that is the situation for F8 and F10
whenever their generic branch applies.  Below the degeneracy threshold the
matrix is 2-step nilpotent (or zero for F8) and e^A = E + A exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .lie import adjoint_rep, class_algebra
from .mat3 import Mat3, expm_oracle, max_abs, trace, trace_sq
from .structure import CLASS_IDS, ClassParams

BRANCH_EPS = 1e-12  # on |tr A| resp. |tr A^2|

# kappa = factor * tr(A) for the quadratic-identity classes; the remaining
# classes (F4, F8, F9, F10) take the cubic route
_TRACE_FACTOR = {"F1": 1.0, "F5": 0.5, "F11": 1.0}

_SMALL = 1e-4  # switch to Taylor forms below this to dodge cancellation


@dataclass(eq=False)
class ExpResult:
    """One evaluated exponential: ingredients, branch taken, and the element."""

    A: Mat3
    t: float
    u: float
    branch: str  # generic | trace_zero | trA2_zero | zero_matrix
    expA: Mat3
    oracle_residual: Optional[float] = None


def _ratio_expm1(k: float) -> float:
    # (e^k - 1)/k, stable at small k via expm1
    return math.expm1(k) / k


def _cubic_t(z: float) -> float:
    # sinh(sqrt(z))/sqrt(z) continued through z <= 0
    if abs(z) < _SMALL:
        return 1.0 + z / 6.0 + z * z / 120.0 + z ** 3 / 5040.0
    if z > 0.0:
        r = math.sqrt(z)
        return math.sinh(r) / r
    th = math.sqrt(-z)
    return math.sin(th) / th


def _cubic_u(z: float) -> float:
    # (cosh(sqrt(z)) - 1)/z continued through z <= 0
    if abs(z) < _SMALL:
        return 0.5 + z / 24.0 + z * z / 720.0 + z ** 3 / 40320.0
    if z > 0.0:
        return (math.cosh(math.sqrt(z)) - 1.0) / z
    th = math.sqrt(-z)
    return (1.0 - math.cos(th)) / (th * th)


def closed_form(p: ClassParams, a: float, b: float, c: float) -> ExpResult:
    """Group element exp(a*E0 + b*E1 + c*E2) in the family labelled by p.

    Input must be one of the seven non-trivial classes; for F0 the
    exponential is the identity and needs no formula.
    """
    if p.class_id not in CLASS_IDS:
        raise ValueError(f"closed_form is defined for {CLASS_IDS}, not {p.class_id!r}")
    if not all(math.isfinite(v) for v in (a, b, c)):
        raise ValueError("coordinates must be finite")

    A = adjoint_rep(class_algebra(p), a, b, c)

    if p.class_id in _TRACE_FACTOR:
        tr = trace(A)
        if abs(tr) > BRANCH_EPS:
            t = _ratio_expm1(_TRACE_FACTOR[p.class_id] * tr)
            branch = "generic"
        else:
            t = 1.0  # A is 2-step nilpotent here, e^A = E + A
            branch = "trace_zero"
        u = 0.0
    else:
        tsq = trace_sq(A)
        if abs(tsq) > BRANCH_EPS:
            z = 0.5 * tsq
            t = _cubic_t(z)
            u = _cubic_u(z)
            branch = "generic"
        else:
            t, u = 1.0, 0.0
            # tr A^2 = 0 forces A = 0 entirely for F8, only a*E0 = 0 otherwise
            branch = "zero_matrix" if p.class_id == "F8" else "trA2_zero"

    with np.errstate(over="ignore", invalid="ignore"):
        expA = np.eye(3) + t * A + u * (A @ A)
    if not np.all(np.isfinite(expA)):
        raise ValueError("exponential overflows double precision at these parameters")
    return ExpResult(A=A, t=t, u=u, branch=branch, expA=expA)


def para_sasakian_group(a: float, b: float, c: float) -> ExpResult:
    """Exponential in the para-Sasakian family (F4 at alpha = -1).

    A = [[0, -c, -b], [0, 0, a], [0, a, 0]]; for a != 0 the coefficients are
    t = sinh|a|/|a| and u = (cosh|a| - 1)/a^2, else e^A = E + A.
    """
    return closed_form(ClassParams("F4", alpha=-1.0), a, b, c)


def verify_closed_form(
    p: ClassParams, a: float, b: float, c: float, tol: float = 1e-12
) -> float:
    """Max-abs residual of the closed form against the series oracle."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    res = closed_form(p, a, b, c)
    return max_abs(res.expA - expm_oracle(res.A, 1e-15))


def exp_result_to_json(res: ExpResult) -> dict:
    out = {
        "A": res.A.tolist(),
        "t": res.t,
        "u": res.u,
        "branch": res.branch,
        "expA": res.expA.tolist(),
    }
    if res.oracle_residual is not None:
        out["oracle_residual"] = res.oracle_residual
    return out
