"""Closed-form supporting hyperplanes for the predicted facets and the
inequality checks that make them valid.

For a Farey pair the linear form ``rho = (U, U', V, V')`` and level ``Z``
are given in closed form.  Writing ``Ua = sqrt(U^2 + U'^2)`` and
``Va = sqrt(V^2 + V'^2)``, the facet is a face of the hull as soon as
``|Va - Ua| < Z < Va + Ua``: then the level curve of ``rho`` on the torus is
convex and encloses exactly the four lattice points of the facet.

Analytic inequalities are evaluated in double precision with a strictness
margin of 1e-9; the integer inequalities are checked exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional

import numpy as np

from .group import GroupSpec, TorusPoint, lattice_data, orbit_angles, orbit_coords
from .predictor import Facet, FacetKind, Triangulation, tetra_cell
from .rationals import FareyPair, InvariantViolation

MARGIN = 1e-9
LEVEL_TOL = 1e-10
DEFAULT_SAMPLES = 4096


@dataclass(frozen=True)
class SupportForm:
    U: float
    Uprime: float
    V: float
    Vprime: float
    Z: float

    @property
    def rho(self) -> np.ndarray:
        return np.array([self.U, self.Uprime, self.V, self.Vprime])

    @property
    def Udd(self) -> float:
        return math.hypot(self.U, self.Uprime)

    @property
    def Vdd(self) -> float:
        return math.hypot(self.V, self.Vprime)

    def rotated(self, g: TorusPoint) -> "SupportForm":
        """The form supporting the image of this facet under translation by ``g``."""
        a, b = 2 * math.pi * float(g.s), 2 * math.pi * float(g.t)
        ca, sa, cb, sb = math.cos(a), math.sin(a), math.cos(b), math.sin(b)
        return SupportForm(ca * self.U - sa * self.Uprime, sa * self.U + ca * self.Uprime,
                           cb * self.V - sb * self.Vprime, sb * self.V + cb * self.Vprime, self.Z)

    def as_dict(self) -> dict:
        return {"U": self.U, "Uprime": self.Uprime, "V": self.V, "Vprime": self.Vprime, "Z": self.Z}


@dataclass
class CertificateReport:
    pair: tuple
    det_M: float
    det_M_factored: float
    z_closed_form: float
    z_alternate: float
    checks: Dict[str, bool] = field(default_factory=dict)
    level_curve_ok: bool = False
    lattice_ok: bool = False
    lattice_margin: float = float("nan")

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values()) and self.level_curve_ok and self.lattice_ok

    def failures(self) -> List[str]:
        bad = [k for k, v in self.checks.items() if not v]
        if not self.level_curve_ok:
            bad.append("level_curve")
        if not self.lattice_ok:
            bad.append("lattice_points")
        return bad

    def as_dict(self) -> dict:
        return {
            "pair": list(self.pair), "det_M": self.det_M, "det_M_factored": self.det_M_factored,
            "Z": self.z_closed_form, "Z_alternate": self.z_alternate,
            "checks": dict(sorted(self.checks.items())), "level_curve_ok": self.level_curve_ok,
            "lattice_ok": self.lattice_ok, "lattice_margin": self.lattice_margin,
            "all_pass": self.all_pass,
        }


def _angles(spec: GroupSpec, pair: FareyPair):
    """Half-angles in radians: first factor ``a pi/(mu q)``, second factor
    the signed ``(ap - alpha q) pi/(nu q)``."""
    p, q, mu, nu = spec.p, spec.q, spec.mu, spec.nu
    ea = pair.a * math.pi / (mu * q)
    eb = pair.b * math.pi / (mu * q)
    fa = (pair.a * p - pair.alpha * q) * math.pi / (nu * q)
    fb = (pair.b * p - pair.beta * q) * math.pi / (nu * q)
    return ea, eb, fa, fb


def facet_matrix(spec: GroupSpec, pair: FareyPair) -> np.ndarray:
    """4x4 matrix whose columns are the facet vertices ``x_0, x_a, x_b, x_{a+b}``."""
    return np.array([pt.coords() for pt in tetra_cell(spec, pair)]).T


def det_M(spec: GroupSpec, pair: FareyPair, rtol: float = 1e-9):
    """Determinant of the vertex matrix, directly and in factored form.

    Rotating both planes back by the parallelogram centre and combining
    columns gives ``4 (cos e1 cos d2 - cos d1 cos e2)(sin d1 sin e2 - sin e1 sin d2)``
    with ``e`` the half-sum and ``d`` the half-difference of ``u, v``.
    Returns ``(direct, factored)`` after checking they agree.
    """
    direct = float(np.linalg.det(facet_matrix(spec, pair)))
    ea, eb, fa, fb = _angles(spec, pair)
    e1, d1, e2, d2 = ea + eb, ea - eb, fa + fb, fa - fb
    factored = 4.0 * (math.cos(e1) * math.cos(d2) - math.cos(d1) * math.cos(e2)) \
        * (math.sin(d1) * math.sin(e2) - math.sin(e1) * math.sin(d2))
    if abs(direct - factored) > rtol * max(abs(direct), abs(factored), 1e-300):
        raise InvariantViolation(f"det M mismatch: {direct} vs {factored}")
    return direct, factored


def _closed_form(spec: GroupSpec, pair: FareyPair) -> SupportForm:
    ea, eb, fa, fb = _angles(spec, pair)
    su = math.sin(fa) * math.sin(fb)
    sv = math.sin(ea) * math.sin(eb)
    U = -math.cos(ea + eb) * su
    Up = -math.sin(ea + eb) * su
    V = math.cos(fa + fb) * sv
    Vp = math.sin(fa + fb) * sv
    Z = math.cos(fa + fb) * sv - math.cos(ea + eb) * su
    return SupportForm(U, Up, V, Vp, Z)


def cyclic_closed_form(spec: GroupSpec, pair: FareyPair) -> SupportForm:
    """The cyclic-case form written with unreduced angles ``a p pi/q`` and
    the sign factor ``(-1)^(alpha+beta)``; equals :func:`support_form` when
    ``mu = nu = 1``."""
    if spec.mu != 1 or spec.nu != 1:
        raise ValueError("only defined for cyclic groups")
    p, q, a, b = spec.p, spec.q, pair.a, pair.b
    sign = -1.0 if (pair.alpha + pair.beta) % 2 else 1.0
    s_ab = math.sin(a * math.pi / q) * math.sin(b * math.pi / q)
    s_pab = math.sin(a * p * math.pi / q) * math.sin(b * p * math.pi / q)
    c, s = math.cos((a + b) * math.pi / q), math.sin((a + b) * math.pi / q)
    cp, sp = math.cos((a + b) * p * math.pi / q), math.sin((a + b) * p * math.pi / q)
    return SupportForm(-sign * c * s_pab, -sign * s * s_pab, sign * cp * s_ab, sign * sp * s_ab,
                       sign * (cp * s_ab - c * s_pab))


def z_alternate(spec: GroupSpec, pair: FareyPair) -> float:
    """``Z`` in terms of ``x, x', y, y'`` alone."""
    q, mu, nu = spec.q, spec.mu, spec.nu
    return 0.5 * (math.cos(pair.x_ * math.pi / (nu * q)) * math.cos(pair.y * math.pi / (mu * q))
                  - math.cos(pair.x * math.pi / (mu * q)) * math.cos(pair.y_ * math.pi / (nu * q)))


def center_value(spec: GroupSpec, pair: FareyPair, form: SupportForm) -> float:
    """``rho`` evaluated at the image of the parallelogram centre."""
    return float(form.rho @ lattice_data(spec, pair).center.coords())


def support_form(spec: GroupSpec, pair: FareyPair, tol: float = LEVEL_TOL) -> SupportForm:
    """Closed-form supporting form of the base tetrahedron of ``pair``.

    Cross-checks that ``rho`` takes the value ``Z`` on all four vertices,
    that the two expressions for ``Z`` agree, that ``Z`` lies strictly
    between ``|Vdd - Udd|`` and ``Vdd + Udd``, and that ``rho`` attains its
    maximum ``Udd + Vdd`` on the torus at the parallelogram centre.
    """
    form = _closed_form(spec, pair)
    values = form.rho @ facet_matrix(spec, pair)
    if np.max(np.abs(values - form.Z)) > tol:
        raise InvariantViolation(f"rho is not constant on the facet: {values} vs {form.Z}")
    alt = z_alternate(spec, pair)
    if abs(alt - form.Z) > tol * max(1.0, abs(form.Z)):
        raise InvariantViolation(f"Z closed forms disagree: {form.Z} vs {alt}")
    Ua, Va = form.Udd, form.Vdd
    if not (form.Z > 0 and abs(Va - Ua) < form.Z < Va + Ua):
        raise InvariantViolation(f"Z = {form.Z} outside (|{Va} - {Ua}|, {Va} + {Ua})")
    if abs(center_value(spec, pair, form) - (Ua + Va)) > tol:
        raise InvariantViolation("rho is not maximal at the parallelogram centre")
    return form


def integer_inequalities(spec: GroupSpec, pair: FareyPair) -> Dict[str, bool]:
    """Exact integer conditions feeding the sine-ratio comparisons.

    ``x'/nu < q - x/mu`` and ``x'/y' <= (mu q - x)/(mu q - y)``, plus the
    same two with ``(a, b, x, y, mu)`` and ``(a', b', y', x', nu)`` swapped.
    """
    q, mu, nu = spec.q, spec.mu, spec.nu
    x, x_, y, y_ = pair.x, pair.x_, pair.y, pair.y_
    return {
        "int_i_strict": mu * x_ + nu * x < q * mu * nu,
        "int_i_ratio": x_ * (mu * q - y) <= y_ * (mu * q - x),
        "int_ii_strict": nu * y + mu * y_ < q * mu * nu,
        "int_ii_ratio": y * (nu * q - x_) <= x * (nu * q - y_),
        "int_order": 0 <= x_ < y_ <= nu * q and 0 <= y < x <= mu * q,
    }


def verify_inequalities(spec: GroupSpec, pair: FareyPair, margin: float = MARGIN) -> CertificateReport:
    """Evaluate the whole inequality chain for ``pair``; failures are
    recorded in the report rather than raised."""
    q, mu, nu = spec.q, spec.mu, spec.nu
    a, b, a_, b_ = pair.a, pair.b, pair.a_, pair.b_
    x, x_, y, y_ = pair.x, pair.x_, pair.y, pair.y_
    direct, factored = det_M(spec, pair)
    form = _closed_form(spec, pair)
    alt = z_alternate(spec, pair)
    checks: Dict[str, bool] = {}

    # non-degeneracy: both factors of det M are non-zero
    A1, B1 = a * math.pi / (mu * q), b * math.pi / (mu * q)
    A2, B2 = a_ * math.pi / (nu * q), b_ * math.pi / (nu * q)
    f1 = (math.cos(A1) * math.cos(B1) * math.sin(A2) * math.sin(B2)
          + math.sin(A1) * math.sin(B1) * math.cos(A2) * math.cos(B2))
    f2 = (math.sin(A1) * math.cos(B1) * math.sin(B2) * math.cos(A2)
          + math.sin(B1) * math.cos(A1) * math.sin(A2) * math.cos(B2))
    checks["det_nonzero"] = abs(direct) / 4.0 > margin
    checks["det_factors_nonzero"] = abs(f1) > margin and abs(f2) > margin
    checks["det_factor_product"] = abs(abs(direct) - 16 * abs(f1 * f2)) <= 1e-9 * max(1.0, abs(direct))
    H = math.cos(A1) * math.cos(B1) * math.cos(A2) * math.cos(B2)
    if abs(H) > margin:
        t = math.tan
        checks["tan_i"] = abs(t(A2) * t(B2) + t(A1) * t(B1)) > margin
        checks["tan_ii"] = abs(t(A1) * t(B2) + t(B1) * t(A2)) > margin

    Ua, Va = form.Udd, form.Vdd
    checks["Z_positive"] = form.Z > margin
    checks["Z_upper"] = form.Z < Ua + Va - margin
    checks["Z_lower"] = form.Z > abs(Va - Ua) + margin
    checks["Z_forms_agree"] = abs(alt - form.Z) <= LEVEL_TOL * max(1.0, abs(form.Z))
    checks["center_is_max"] = abs(center_value(spec, pair, form) - (Ua + Va)) <= LEVEL_TOL
    checks["lower_bound"] = (2 * alt - 2 * abs(math.sin(A1) * math.sin(B1) - math.sin(A2) * math.sin(B2))) > margin

    h = math.pi / 2
    lhs_i = math.sin(x_ / (nu * q) * h) / math.sin(y_ / (nu * q) * h)
    rhs_i = math.sin((mu * q - x) / (mu * q) * h) / math.sin((mu * q - y) / (mu * q) * h)
    lhs_ii = math.sin(y / (mu * q) * h) / math.sin(x / (mu * q) * h)
    rhs_ii = math.sin((nu * q - y_) / (nu * q) * h) / math.sin((nu * q - x_) / (nu * q) * h)
    checks["sine_ratio_i"] = lhs_i < rhs_i - margin
    checks["sine_ratio_ii"] = lhs_ii < rhs_ii - margin
    checks.update(integer_inequalities(spec, pair))

    try:
        lattice_data(spec, pair)
        checks["lattice_basis"] = True
    except InvariantViolation:
        checks["lattice_basis"] = False

    return CertificateReport(pair.key(), direct, factored, form.Z, alt, checks)


def sine_ratio_less(s: float, t: float, s_: float, t_: float) -> bool:
    """``sin s / sin t < sin s' / sin t'`` for ``0 < s < t < pi/2``,
    ``0 < s' < t' < pi/2``, ``s < s'`` and ``s/t <= s'/t'``.

    Raises ``ValueError`` when the hypotheses fail.
    """
    h = math.pi / 2
    if not (0 < s < t < h and 0 < s_ < t_ < h and s < s_ and s * t_ <= s_ * t):
        raise ValueError("hypotheses of the sine-ratio comparison not met")
    return math.sin(s) * math.sin(t_) < math.sin(s_) * math.sin(t)


def level_curve_check(form: SupportForm, samples: int = DEFAULT_SAMPLES) -> bool:
    """Confirm that the level set ``rho o embed = Z`` is a convex curve.

    After phase shifts the function is ``U cos x + V cos y`` with
    ``0 < U <= V``; the upper half of the curve is
    ``f(x) = arccos((Z - U cos x)/V)``, concave iff
    ``|(V^2 - Z^2 - U^2)/(U Z)| < 2``.  The sampled second differences of
    ``f`` must also be negative.
    """
    U, V, Z = sorted((form.Udd, form.Vdd)) + [form.Z]
    if not (U > 0 and Z > 0 and V - U < Z < V + U):
        raise ValueError("level outside (|V - U|, V + U): the curve is empty or not convex")
    if not abs((V * V - Z * Z - U * U) / (U * Z)) < 2:
        return False
    xmax = math.acos(max(-1.0, min(1.0, (Z - V) / U)))
    xs = np.linspace(-xmax, xmax, samples + 2)[1:-1]
    f = np.arccos(np.clip((Z - U * np.cos(xs)) / V, -1.0, 1.0))
    return bool(np.all(np.diff(f, 2) < 0))


def support_gap(form: SupportForm, coords: np.ndarray, vertices, tol: float = LEVEL_TOL) -> float:
    """Smallest ``Z - rho.x`` over non-vertex points, or ``-inf`` if a vertex
    is off the level."""
    values = coords @ form.rho
    mask = np.zeros(len(coords), dtype=bool)
    mask[list(vertices)] = True
    if np.any(np.abs(values[mask] - form.Z) > tol):
        return -math.inf
    rest = values[~mask]
    return float(form.Z - rest.max()) if len(rest) else math.inf


def lattice_points_check(spec: GroupSpec, pair: FareyPair, form: SupportForm,
                         margin: float = MARGIN) -> bool:
    """Every orbit point off the base tetrahedron lies strictly below ``Z``."""
    return support_gap(form, orbit_coords(spec), _base_vertices(spec, pair)) > margin


def _base_vertices(spec: GroupSpec, pair: FareyPair) -> List[int]:
    index = {ang: i for i, ang in enumerate(orbit_angles(spec))}
    return [index[v] for v in tetra_cell(spec, pair)]


def antiprism_form(spec: GroupSpec, axis: str) -> SupportForm:
    """Form maximized by the base antiprism: only the angle along the
    non-axis circle matters."""
    if axis == "nu":
        h = math.pi / (spec.q * spec.mu)
        return SupportForm(math.cos(h), math.sin(h), 0.0, 0.0, math.cos(h))
    h = math.pi / (spec.q * spec.nu)
    return SupportForm(0.0, 0.0, math.cos(h), math.sin(h), math.cos(h))


def certify_pair(spec: GroupSpec, pair: FareyPair, samples: int = DEFAULT_SAMPLES) -> CertificateReport:
    report = verify_inequalities(spec, pair)
    form = _closed_form(spec, pair)
    try:
        report.level_curve_ok = level_curve_check(form, samples)
    except ValueError:
        report.level_curve_ok = False
    report.lattice_margin = support_gap(form, orbit_coords(spec), _base_vertices(spec, pair))
    report.lattice_ok = report.lattice_margin > MARGIN
    return report


def attach_supports(tri: Triangulation) -> Triangulation:
    """Fill ``Facet.support`` for every facet by rotating the base form."""
    spec = tri.spec
    angles = orbit_angles(spec)
    base = [support_form(spec, pair) for pair in tri.pairs]
    facets = []
    for f in tri.facets:
        if f.kind is FacetKind.TETRA:
            form = base[f.pair_index]
        elif f.kind is FacetKind.ANTIPRISM:
            form = antiprism_form(spec, f.axis)
        else:
            form = None
        facets.append(replace(f, support=form.rotated(angles[f.translate]) if form else None))
    return Triangulation(spec, tri.pairs, facets, tri.ridges)


@dataclass
class TriangulationCertificate:
    pairs: List[CertificateReport]
    facet_margins: List[float]

    @property
    def all_pass(self) -> bool:
        return all(r.all_pass for r in self.pairs) and all(m > MARGIN for m in self.facet_margins)

    def as_dict(self) -> dict:
        return {"pairs": [r.as_dict() for r in self.pairs],
                "min_facet_margin": min(self.facet_margins, default=math.inf),
                "all_pass": self.all_pass}


def certify_triangulation(tri: Triangulation, samples: int = DEFAULT_SAMPLES) -> TriangulationCertificate:
    """Certificates for every pair plus the strict support gap of every facet."""
    spec = tri.spec
    reports = [certify_pair(spec, pair, samples) for pair in tri.pairs]
    if any(f.support is None for f in tri.facets if f.kind is not FacetKind.PRISM):
        tri = attach_supports(tri)
    coords = orbit_coords(spec)
    margins = [support_gap(f.support, coords, f.vertices) for f in tri.facets if f.support is not None]
    return TriangulationCertificate(reports, margins)
