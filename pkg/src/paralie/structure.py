"""Almost paracontact almost paracomplex Riemannian structure on the phi-basis.

The frame is {e0, e1, e2} with e0 the characteristic (Reeb-type) direction,
phi exchanging e1 and e2, and the metric orthonormal on the frame.  The
covariant derivative of phi is encoded as a (0,3)-tensor with 27 frame
components F[i][j][k]; in dimension three exactly seven of the basic classes
of such tensors survive, each a one- or two-parameter pattern:

    F1  : (2*alpha*x1 + 2*beta*x2) * (y1*z1 - y2*z2)
    F4  : alpha * (x1*(y0*z1 + y1*z0) + x2*(y0*z2 + y2*z0))
    F5  : alpha * (x1*(y0*z2 + y2*z0) + x2*(y0*z1 + y1*z0))
    F8  : alpha * (x1*(y0*z1 + y1*z0) - x2*(y0*z2 + y2*z0))
    F9  : alpha * (x1*(y0*z2 + y2*z0) - x2*(y0*z1 + y1*z0))
    F10 : 2*alpha * x0*(y1*z1 - y2*z2)
    F11 : x0 * (beta*(y0*z1 + y1*z0) + alpha*(y0*z2 + y2*z0))

F0 is the integrable case F = 0.  ``class_pattern`` builds these tensors and
``match_class`` projects an arbitrary tensor back onto them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .mat3 import Mat3, Vec3, mat3, max_abs, trace, vec3

CLASS_IDS = ("F1", "F4", "F5", "F8", "F9", "F10", "F11")
TWO_PARAMETER_CLASSES = ("F1", "F11")

# theta(e0) = -2 (dimension 3) singles out the para-Sasakian subclass of F4.
PARA_SASAKIAN_THETA0 = -2.0
PARA_SASAKIAN_TOL = 1e-9

FTensor = np.ndarray  # shape (3, 3, 3), F[i][j][k]


def ftensor(components) -> FTensor:
    """Validate a 3x3x3 array of frame components."""
    f = np.asarray(components, dtype=float).reshape(3, 3, 3)
    if not np.all(np.isfinite(f)):
        raise ValueError("tensor components must be finite")
    return f


@dataclass(frozen=True, eq=False)
class PhiBasisStructure:
    """Frame data (phi, xi, eta, g) of the structure on the phi-basis."""

    phi: Mat3
    xi: Vec3
    eta: Vec3
    g: Mat3


def standard_structure() -> PhiBasisStructure:
    """The canonical structure: phi swaps e1 and e2, xi = eta = e0, g = E."""
    phi = mat3([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    return PhiBasisStructure(
        phi=phi,
        xi=vec3([1.0, 0.0, 0.0]),
        eta=vec3([1.0, 0.0, 0.0]),
        g=np.eye(3),
    )


def check_structure(s: PhiBasisStructure, tol: float = 1e-12) -> dict[str, float]:
    """Residuals of the defining identities, keyed by name.

    The structure passes when every residual is at most tol.  Checked:
    phi^2 = I - eta (x) xi, eta(xi) = 1, eta o phi = 0, phi xi = 0,
    tr phi = 0, and g(phi x, phi y) = g(x, y) - eta(x) eta(y).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    phi, xi, eta, g = s.phi, s.xi, s.eta, s.g
    return {
        "phi_squared": max_abs(phi @ phi - (np.eye(3) - np.outer(xi, eta))),
        "eta_of_xi": abs(float(eta @ xi) - 1.0),
        "eta_circ_phi": max_abs(eta @ phi),
        "phi_of_xi": max_abs(phi @ xi),
        "trace_phi": abs(trace(phi)),
        "metric_compat": max_abs(phi.T @ g @ phi - g + np.outer(eta, eta)),
    }


def structure_passes(s: PhiBasisStructure, tol: float = 1e-12) -> bool:
    return max(check_structure(s, tol).values()) <= tol


@dataclass(frozen=True, eq=False)
class LeeForms:
    """The three 1-forms contracted out of an F tensor."""

    theta: Vec3
    theta_star: Vec3
    omega: Vec3


def lee_forms(f: FTensor) -> LeeForms:
    """Contract the classifying 1-forms from frame components.

    theta  = (F110 + F220, F111, F222)
    theta* = (F120 + F210, -F222, -F111)
    omega  = (0, F001, F002)
    """
    return LeeForms(
        theta=vec3([f[1, 1, 0] + f[2, 2, 0], f[1, 1, 1], f[2, 2, 2]]) + 0.0,
        theta_star=vec3([f[1, 2, 0] + f[2, 1, 0], -f[2, 2, 2], -f[1, 1, 1]]) + 0.0,
        omega=vec3([0.0, f[0, 0, 1], f[0, 0, 2]]) + 0.0,
    )


@dataclass(frozen=True)
class ClassParams:
    """A basic class label with its parameters (beta only for F1 and F11)."""

    class_id: str
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.class_id not in CLASS_IDS + ("F0",):
            raise ValueError(f"unknown class id {self.class_id!r}")
        if not (np.isfinite(self.alpha) and np.isfinite(self.beta)):
            raise ValueError("class parameters must be finite")
        if self.class_id == "F0" and (self.alpha != 0.0 or self.beta != 0.0):
            raise ValueError("F0 requires alpha = beta = 0")


def class_pattern(p: ClassParams) -> FTensor:
    """Full 27-component tensor of a basic-class pattern.

    Evaluates the trilinear form of the class on all frame triples.  The
    parameters enter through theta_1 = 2*alpha, theta_2 = -2*beta (F1),
    theta_0 = 2*alpha (F4), theta*_0 = 2*alpha (F5), lambda = alpha (F8),
    mu = alpha (F9), nu = 2*alpha (F10) and omega = (0, beta, alpha) (F11).
    """
    al, bt = p.alpha, p.beta
    forms = {
        "F0": lambda x, y, z: 0.0,
        "F1": lambda x, y, z: (2 * al * x[1] + 2 * bt * x[2])
        * (y[1] * z[1] - y[2] * z[2]),
        "F4": lambda x, y, z: al
        * (x[1] * (y[0] * z[1] + y[1] * z[0]) + x[2] * (y[0] * z[2] + y[2] * z[0])),
        "F5": lambda x, y, z: al
        * (x[1] * (y[0] * z[2] + y[2] * z[0]) + x[2] * (y[0] * z[1] + y[1] * z[0])),
        "F8": lambda x, y, z: al
        * (x[1] * (y[0] * z[1] + y[1] * z[0]) - x[2] * (y[0] * z[2] + y[2] * z[0])),
        "F9": lambda x, y, z: al
        * (x[1] * (y[0] * z[2] + y[2] * z[0]) - x[2] * (y[0] * z[1] + y[1] * z[0])),
        "F10": lambda x, y, z: 2 * al * x[0] * (y[1] * z[1] - y[2] * z[2]),
        "F11": lambda x, y, z: x[0]
        * (bt * (y[0] * z[1] + y[1] * z[0]) + al * (y[0] * z[2] + y[2] * z[0])),
    }
    form = forms[p.class_id]
    e = np.eye(3)
    f = np.zeros((3, 3, 3))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                f[i, j, k] = form(e[i], e[j], e[k])
    return f


@dataclass(eq=False)
class ClassReport:
    """Outcome of projecting a tensor onto the seven basic patterns.

    verdict lists the classes whose recovered parameter is significant (or
    ["F0"] when none is), with "unclassified" appended when the tensor is
    not fully explained by the patterns.  alpha/beta are the parameters of
    the dominant class; params holds the per-class recoveries.
    """

    verdict: list[str]
    alpha: float
    beta: float
    residual: float
    lee: LeeForms
    para_sasakian: bool
    params: dict[str, tuple[float, float]] = field(default_factory=dict)


def _recover_params(f: FTensor) -> dict[str, tuple[float, float]]:
    # Each class parameter is the average of its signed support components,
    # which keeps the recovery robust to asymmetric numerical noise and
    # splits the shared supports of F4/F8 and of F5/F9.
    return {
        "F1": (
            (f[1, 1, 1] - f[1, 2, 2]) / 4.0,
            (f[2, 1, 1] - f[2, 2, 2]) / 4.0,
        ),
        "F4": ((f[1, 0, 1] + f[1, 1, 0] + f[2, 0, 2] + f[2, 2, 0]) / 4.0, 0.0),
        "F5": ((f[1, 0, 2] + f[1, 2, 0] + f[2, 0, 1] + f[2, 1, 0]) / 4.0, 0.0),
        "F8": ((f[1, 0, 1] + f[1, 1, 0] - f[2, 0, 2] - f[2, 2, 0]) / 4.0, 0.0),
        "F9": ((f[1, 0, 2] + f[1, 2, 0] - f[2, 0, 1] - f[2, 1, 0]) / 4.0, 0.0),
        "F10": ((f[0, 1, 1] - f[0, 2, 2]) / 4.0, 0.0),
        "F11": (
            (f[0, 0, 2] + f[0, 2, 0]) / 2.0,
            (f[0, 0, 1] + f[0, 1, 0]) / 2.0,
        ),
    }


def match_class(f: FTensor, tol: float = 1e-12) -> ClassReport:
    """Decompose a tensor over the basic patterns and report the verdict.

    Parameters are recovered per class, the sum of the reconstructed
    patterns is subtracted, and the max-abs of what remains is the
    residual.  Sums of patterns from distinct classes are decomposed
    exactly; anything outside their span is flagged "unclassified".
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    f = np.asarray(f, dtype=float)
    params = _recover_params(f)

    recon = np.zeros((3, 3, 3))
    for cid, (al, bt) in params.items():
        recon += class_pattern(ClassParams(cid, al, bt))
    residual = max_abs(f - recon)

    detected = [
        cid for cid in CLASS_IDS if max(abs(params[cid][0]), abs(params[cid][1])) > tol
    ]
    verdict = detected if detected else ["F0"]
    if residual > tol:
        verdict = verdict + ["unclassified"]

    if detected:
        dominant = max(detected, key=lambda cid: max(abs(params[cid][0]), abs(params[cid][1])))
        alpha, beta = params[dominant]
    else:
        alpha, beta = 0.0, 0.0

    lee = lee_forms(f)
    para_sasakian = (
        verdict == ["F4"]
        and abs(float(lee.theta[0]) - PARA_SASAKIAN_THETA0) <= PARA_SASAKIAN_TOL
    )
    return ClassReport(
        verdict=verdict,
        alpha=float(alpha),
        beta=float(beta),
        residual=residual,
        lee=lee,
        para_sasakian=para_sasakian,
        params={cid: (float(a), float(b)) for cid, (a, b) in params.items()},
    )


# --- JSON forms ------------------------------------------------------------


def ftensor_to_json(f: FTensor) -> dict:
    return {"F": np.asarray(f, dtype=float).tolist()}


def ftensor_from_json(obj: dict) -> FTensor:
    if "F" not in obj:
        raise ValueError('tensor JSON must carry key "F"')
    return ftensor(obj["F"])


def class_params_to_json(p: ClassParams) -> dict:
    return {"class": p.class_id, "alpha": p.alpha, "beta": p.beta}


def class_params_from_json(obj: dict) -> ClassParams:
    cid = str(obj.get("class", "")).upper()
    return ClassParams(cid, float(obj.get("alpha", 0.0)), float(obj.get("beta", 0.0)))


def lee_forms_to_json(lee: LeeForms) -> dict:
    return {
        "theta": lee.theta.tolist(),
        "theta_star": lee.theta_star.tolist(),
        "omega": lee.omega.tolist(),
    }


def report_to_json(report: ClassReport) -> dict:
    return {
        "verdict": list(report.verdict),
        "alpha": report.alpha,
        "beta": report.beta,
        "residual": report.residual,
        "lee": lee_forms_to_json(report.lee),
        "para_sasakian": report.para_sasakian,
        "classes": {
            cid: {"alpha": a, "beta": b}
            for cid, (a, b) in report.params.items()
            if cid in report.verdict
        },
    }
