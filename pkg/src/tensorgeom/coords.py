"""Curvilinear coordinates: metric tensors, index gymnastics, Christoffel
symbols, covariant derivatives, differential operators in Cartesian,
cylindrical and spherical coordinates, and numerical residuals of the
classical integral theorems.

Coordinate maps go from curvilinear coordinates ``z`` to Cartesian ``x`` and
are given as :class:`~tensorgeom.expr.ExprMap` objects with as many
components as variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .expr import ExprMap, parse

__all__ = [
    "DegenerateJacobian", "InsufficientResolution", "CoordinateSingularity",
    "CoordMap", "Metric", "metric_at", "second_partials", "christoffel",
    "raise_lower", "covariant_derivative", "divergence_from_chart",
    "laplacian_curvilinear", "diff_ops", "integral_theorem_residual",
    "cartesian_map", "polar_map", "cylindrical_map", "spherical_map",
    "oblique_map", "gauss_legendre_nodes",
]

_SING_GUARD = 1e-8


class DegenerateJacobian(ValueError):
    pass


class InsufficientResolution(ValueError):
    pass


class CoordinateSingularity(ValueError):
    pass


class CoordMap:
    """Invertible coordinate map x(z) with a rectangular z-domain."""

    def __init__(self, xmap: ExprMap, domain: Sequence[tuple[float, float]] | None = None):
        if xmap.dimension != xmap.arity:
            raise ValueError("coordinate maps must be square (dimension == arity)")
        self.map = xmap
        self.ndim = xmap.arity
        self.domain = tuple(tuple(float(b) for b in box) for box in (domain or ()))

    def jacobian(self, z) -> np.ndarray:
        n = self.ndim
        J = np.empty((n, n))
        for k in range(n):
            jets = self.map.eval_jet(z, order=1, active=(k,))
            for i in range(n):
                J[i, k] = jets[i].partial(1)
        return J


@dataclass(frozen=True)
class Metric:
    """Metric data of a chart at one point.

    ``cov``/``con`` are the covariant and contravariant component matrices;
    ``tangent[:, k]`` is the tangent vector to the k-th coordinate line and
    ``dual[k]`` the k-th dual-basis vector.
    """

    cov: np.ndarray
    con: np.ndarray
    tangent: np.ndarray
    dual: np.ndarray
    jacobian: np.ndarray

    def line_element_sq(self, dz) -> float:
        dz = np.asarray(dz, float)
        return float(dz @ self.cov @ dz)


def metric_at(chart: CoordMap, z) -> Metric:
    J = chart.jacobian(z)
    d = np.linalg.det(J)
    scale = max(np.linalg.norm(J) ** chart.ndim, np.finfo(float).tiny)
    if abs(d) <= 1e-10 * scale:
        raise DegenerateJacobian(f"Jacobian determinant {d:g} at z={tuple(z)}")
    g = J.T @ J
    Jinv = np.linalg.inv(J)
    return Metric(cov=g, con=Jinv @ Jinv.T, tangent=J, dual=Jinv, jacobian=J)


def second_partials(chart: CoordMap, z) -> np.ndarray:
    """S[m, k, l] = second derivative of x_m by z^k and z^l."""
    n = chart.ndim
    S = np.empty((n, n, n))
    for k in range(n):
        jets = chart.map.eval_jet(z, order=2, active=(k,))
        for m in range(n):
            S[m, k, k] = jets[m].partial(2)
    for k in range(n):
        for l in range(k + 1, n):
            jets = chart.map.eval_jet(z, order=2, active=(k, l))
            for m in range(n):
                S[m, k, l] = S[m, l, k] = jets[m].partial(1, 1)
    return S


def christoffel(chart: CoordMap, z, method: str = "second_derivative") -> np.ndarray:
    """Connection coefficients G[h, k, l], symmetric in (k, l).

    ``method="second_derivative"`` contracts the inverse Jacobian with the
    map's second derivatives; ``method="metric_derivative"`` uses the metric
    and its first derivatives.  Both are exact up to rounding.
    """
    met = metric_at(chart, z)
    S = second_partials(chart, z)
    n = chart.ndim
    if method == "second_derivative":
        return np.einsum("hm,mkl->hkl", met.dual, S)
    if method == "metric_derivative":
        J = met.jacobian
        # dg[a, b, c] = derivative of g_ab by z^c
        dg = np.einsum("mac,mb->abc", S, J) + np.einsum("ma,mbc->abc", J, S)
        gamma = np.empty((n, n, n))
        for h in range(n):
            for k in range(n):
                for l in range(n):
                    acc = 0.0
                    for m in range(n):
                        acc += met.con[h, m] * (dg[m, k, l] + dg[m, l, k] - dg[k, l, m])
                    gamma[h, k, l] = 0.5 * acc
        return gamma
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# raising / lowering of indices
# ---------------------------------------------------------------------------

def raise_lower(components, metric: Metric, direction: str) -> np.ndarray:
    """Convert vector or tensor components between variances.

    Vectors: ``direction`` is "down" (contravariant -> covariant) or "up".
    Matrices: "down_down" / "up_up" convert fully, "mixed_from_co" and
    "mixed_from_contra" produce L^i_j.
    """
    a = np.asarray(components, float)
    g, gi = metric.cov, metric.con
    if a.ndim == 1:
        if direction == "down":
            return g @ a
        if direction == "up":
            return gi @ a
    elif a.ndim == 2:
        if direction == "down_down":
            return g @ a @ g
        if direction == "up_up":
            return gi @ a @ gi
        if direction == "mixed_from_co":
            return gi @ a
        if direction == "mixed_from_contra":
            return a @ g
    raise ValueError(f"unsupported direction {direction!r} for shape {a.shape}")


# ---------------------------------------------------------------------------
# fields over a chart and their covariant derivatives
# ---------------------------------------------------------------------------

def _field_values_and_partials(field, z, n: int):
    """(values, partials) with partials[..., k] = d(field)/dz^k.

    ``field`` may be an ExprMap (exact jets), a callable (central
    differences), or a pair (axes, samples) of grid data.
    """
    z = tuple(float(c) for c in z)
    if isinstance(field, ExprMap):
        if field.arity != n:
            raise ValueError("field arity does not match the chart")
        values = np.array(field(*z))
        partials = np.empty(values.shape + (n,))
        for k in range(n):
            jets = field.eval_jet(z, order=1, active=(k,))
            partials[..., k] = [j.partial(1) for j in jets]
        return values, partials
    if callable(field):
        values = np.asarray(field(z), float)
        h = 1e-5
        partials = np.empty(values.shape + (n,))
        for k in range(n):
            zp = list(z)
            zm = list(z)
            zp[k] += h
            zm[k] -= h
            partials[..., k] = (np.asarray(field(zp), float)
                                - np.asarray(field(zm), float)) / (2.0 * h)
        return values, partials
    axes, samples = field
    axes = [np.asarray(a, float) for a in axes]
    samples = np.asarray(samples, float)
    if any(len(a) < 4 for a in axes):
        raise InsufficientResolution("need at least 4 samples per axis")
    raise InsufficientResolution("grid-sampled fields must be interpolated by "
                                 "the caller; pass a callable instead")


def covariant_derivative(field, chart: CoordMap, z, variance: str) -> np.ndarray:
    """Covariant derivative of a field given in chart components.

    variance "contra": returns D[h, k] = v^h_;k.
    variance "co":     returns D[h, k] = v_h;k.
    variance "tensor_contra" / "tensor_co" / "tensor_mixed": D[n, p, h] for
    L^np, L_np and L^n_p respectively (mixed: first index up).
    """
    n = chart.ndim
    gamma = christoffel(chart, z)
    values, partials = _field_values_and_partials(field, z, n)
    if variance == "contra":
        return partials + np.einsum("hkl,l->hk", gamma, values)
    if variance == "co":
        return partials - np.einsum("lkh,l->hk", gamma, values)
    L = values.reshape(n, n)
    dL = partials.reshape(n, n, n)
    if variance == "tensor_contra":
        return (dL + np.einsum("nhr,rp->nph", gamma, L)
                + np.einsum("phr,nr->nph", gamma, L))
    if variance == "tensor_co":
        return (dL - np.einsum("rnh,rp->nph", gamma, L)
                - np.einsum("rph,nr->nph", gamma, L))
    if variance == "tensor_mixed":
        return (dL + np.einsum("nhr,rp->nph", gamma, L)
                - np.einsum("rph,nr->nph", gamma, L))
    raise ValueError(f"unknown variance {variance!r}")


def divergence_from_chart(field, chart: CoordMap, z) -> float:
    """Divergence of a contravariant vector field: the trace of v^h_;k."""
    return float(np.trace(covariant_derivative(field, chart, z, "contra")))


def laplacian_curvilinear(field, chart: CoordMap, z) -> float:
    """Laplace operator of a scalar field in arbitrary coordinates."""
    n = chart.ndim
    z = tuple(float(c) for c in z)
    if not isinstance(field, ExprMap) or field.dimension != 1:
        raise ValueError("needs a scalar ExprMap over the chart variables")
    met = metric_at(chart, z)
    gamma = christoffel(chart, z)
    d1 = np.empty(n)
    d2 = np.empty((n, n))
    for k in range(n):
        jet = field.eval_jet(z, order=2, active=(k,))[0]
        d1[k] = jet.partial(1)
        d2[k, k] = jet.partial(2)
    for k in range(n):
        for l in range(k + 1, n):
            jet = field.eval_jet(z, order=2, active=(k, l))[0]
            d2[k, l] = d2[l, k] = jet.partial(1, 1)
    # derivative of the inverse metric from the metric derivative
    S = second_partials(chart, z)
    J = met.jacobian
    dg = np.einsum("mac,mb->abc", S, J) + np.einsum("ma,mbc->abc", J, S)
    dgi = -np.einsum("ha,abc,bk->hkc", met.con, dg, met.con)
    term1 = float(np.einsum("hk,hk->", met.con, d2))
    term2 = float(np.einsum("hkh,k->", dgi, d1))
    term3 = float(np.einsum("hhj,jk,k->", gamma, met.con, d1))
    return term1 + term2 + term3


# ---------------------------------------------------------------------------
# closed-form differential operators
# ---------------------------------------------------------------------------

def _partials_up_to_2(field: ExprMap, point, mixed_pairs=()):
    """Per-component values, first and diagonal-second partials, plus the
    requested mixed second partials (as a dict keyed by sorted pairs)."""
    n = field.arity
    m = field.dimension
    point = tuple(float(c) for c in point)
    values = np.array(field(*point))
    d1 = np.empty((m, n))
    d2 = np.empty((m, n))
    for k in range(n):
        jets = field.eval_jet(point, order=2, active=(k,))
        for c in range(m):
            d1[c, k] = jets[c].partial(1)
            d2[c, k] = jets[c].partial(2)
    mixed = {}
    for (a, b) in mixed_pairs:
        a, b = sorted((a, b))
        jets = field.eval_jet(point, order=2, active=(a, b))
        mixed[(a, b)] = np.array([j.partial(1, 1) for j in jets])
    return values, d1, d2, mixed


def _check_kind(field: ExprMap, kind: str):
    want = {"scalar": 1, "vector": 3, "tensor": 9}[kind]
    if field.dimension != want:
        raise ValueError(f"{kind} field needs {want} components, got {field.dimension}")
    if field.arity != 3:
        raise ValueError("fields must depend on the three chart coordinates")


def diff_ops(system: str, kind: str, op: str, field: ExprMap, point) -> np.ndarray | float:
    """Differential operators in Cartesian, cylindrical or spherical frames.

    Components are physical (orthonormal local frame).  Cylindrical
    coordinates are (radius, azimuth, height); spherical are
    (radius, colatitude, azimuth).
    """
    _check_kind(field, kind)
    point = tuple(float(c) for c in point)
    if system == "cartesian":
        return _cartesian_ops(kind, op, field, point)
    if system == "cylindrical":
        if abs(point[0]) < _SING_GUARD:
            raise CoordinateSingularity("cylindrical operators need radius > 0")
        return _cylindrical_ops(kind, op, field, point)
    if system == "spherical":
        if abs(point[0]) < _SING_GUARD or abs(math.sin(point[1])) < _SING_GUARD:
            raise CoordinateSingularity("spherical operators need r > 0 and a "
                                        "colatitude away from the poles")
        return _spherical_ops(kind, op, field, point)
    raise ValueError(f"unknown coordinate system {system!r}")


def _cartesian_ops(kind, op, field, point):
    values, d1, d2, _ = _partials_up_to_2(field, point)
    if kind == "scalar":
        if op == "grad":
            return d1[0].copy()
        if op == "laplacian":
            return float(d2[0].sum())
    if kind == "vector":
        if op == "grad":
            return d1.copy()
        if op == "div":
            return float(d1[0, 0] + d1[1, 1] + d1[2, 2])
        if op == "curl":
            return np.array([d1[2, 1] - d1[1, 2],
                             d1[0, 2] - d1[2, 0],
                             d1[1, 0] - d1[0, 1]])
        if op == "laplacian":
            return d2.sum(axis=1)
    if kind == "tensor" and op == "div":
        L1 = d1.reshape(3, 3, 3)
        return np.einsum("ijj->i", L1)
    raise ValueError(f"unsupported op {op!r} for {kind} fields")


def _cylindrical_ops(kind, op, field, point):
    rho = point[0]
    values, d1, d2, _ = _partials_up_to_2(field, point)
    if kind == "scalar":
        f1, f2 = d1[0], d2[0]
        if op == "grad":
            return np.array([f1[0], f1[1] / rho, f1[2]])
        if op == "laplacian":
            return float(f2[0] + f1[0] / rho + f2[1] / rho ** 2 + f2[2])
    if kind == "vector":
        v = values
        if op == "grad":
            return np.array([
                [d1[0, 0], (d1[0, 1] - v[1]) / rho, d1[0, 2]],
                [d1[1, 0], (d1[1, 1] + v[0]) / rho, d1[1, 2]],
                [d1[2, 0], d1[2, 1] / rho, d1[2, 2]],
            ])
        if op == "div":
            return float(d1[0, 0] + (d1[1, 1] + v[0]) / rho + d1[2, 2])
        if op == "curl":
            return np.array([
                d1[2, 1] / rho - d1[1, 2],
                d1[0, 2] - d1[2, 0],
                d1[1, 0] + v[1] / rho - d1[0, 1] / rho,
            ])
        if op == "laplacian":
            lap = lambda c: (d2[c, 0] + d1[c, 0] / rho + d2[c, 1] / rho ** 2 + d2[c, 2])
            return np.array([
                lap(0) - (v[0] + 2.0 * d1[1, 1]) / rho ** 2,
                lap(1) - (v[1] - 2.0 * d1[0, 1]) / rho ** 2,
                lap(2),
            ])
    if kind == "tensor" and op == "div":
        L = values.reshape(3, 3)
        dL = d1.reshape(3, 3, 3)
        return np.array([
            dL[0, 0, 0] + (L[0, 0] - L[1, 1] + dL[0, 1, 1]) / rho + dL[0, 2, 2],
            dL[1, 0, 0] + (dL[1, 1, 1] + L[0, 1] + L[1, 0]) / rho + dL[1, 2, 2],
            dL[2, 0, 0] + (L[2, 0] + dL[2, 1, 1]) / rho + dL[2, 2, 2],
        ])
    raise ValueError(f"unsupported op {op!r} for {kind} fields")


def _spherical_ops(kind, op, field, point):
    r, phi = point[0], point[1]
    sin_p, cos_p = math.sin(phi), math.cos(phi)
    cot = cos_p / sin_p
    values, d1, d2, _ = _partials_up_to_2(field, point)
    if kind == "scalar":
        f1, f2 = d1[0], d2[0]
        if op == "grad":
            return np.array([f1[0], f1[1] / r, f1[2] / (r * sin_p)])
        if op == "laplacian":
            return float(f2[0] + 2.0 * f1[0] / r + f2[1] / r ** 2
                         + cot * f1[1] / r ** 2 + f2[2] / (r * sin_p) ** 2)
    if kind == "vector":
        v = values
        if op == "grad":
            return np.array([
                [d1[0, 0], (d1[0, 1] - v[1]) / r, (d1[0, 2] / sin_p - v[2]) / r],
                [d1[1, 0], (d1[1, 1] + v[0]) / r, (d1[1, 2] / sin_p - v[2] * cot) / r],
                [d1[2, 0], d1[2, 1] / r, (d1[2, 2] / sin_p + v[0] + v[1] * cot) / r],
            ])
        if op == "div":
            return float(d1[0, 0] + 2.0 * v[0] / r + (d1[1, 1] + v[1] * cot) / r
                         + d1[2, 2] / (r * sin_p))
        if op == "curl":
            return np.array([
                (d1[2, 1] * sin_p + v[2] * cos_p - d1[1, 2]) / (r * sin_p),
                d1[0, 2] / (r * sin_p) - v[2] / r - d1[2, 0],
                v[1] / r + d1[1, 0] - d1[0, 1] / r,
            ])
        if op == "laplacian":
            lap = lambda c: (d2[c, 0] + 2.0 * d1[c, 0] / r + d2[c, 1] / r ** 2
                             + cot * d1[c, 1] / r ** 2 + d2[c, 2] / (r * sin_p) ** 2)
            return np.array([
                lap(0) - 2.0 * (v[0] + d1[1, 1] + v[1] * cot + d1[2, 2] / sin_p) / r ** 2,
                lap(1) + 2.0 * d1[0, 1] / r ** 2 - (v[1] / sin_p ** 2
                                                    + 2.0 * cot * d1[2, 2] / sin_p) / r ** 2,
                lap(2) + (2.0 * d1[0, 2] / sin_p + 2.0 * cot * d1[1, 2] / sin_p
                          - v[2] / sin_p ** 2) / r ** 2,
            ])
    if kind == "tensor" and op == "div":
        L = values.reshape(3, 3)
        dL = d1.reshape(3, 3, 3)
        return np.array([
            dL[0, 0, 0] + 2.0 * L[0, 0] / r + dL[0, 1, 1] / r
            + dL[0, 2, 2] / (r * sin_p) - (L[1, 1] + L[2, 2]) / r + cot * L[0, 1] / r,
            dL[1, 0, 0] + 2.0 * L[1, 0] / r + dL[1, 1, 1] / r
            + dL[1, 2, 2] / (r * sin_p) + L[0, 1] / r + cot * (L[1, 1] - L[2, 2]) / r,
            dL[2, 0, 0] + 2.0 * L[2, 0] / r + dL[2, 1, 1] / r
            + dL[2, 2, 2] / (r * sin_p) + L[0, 2] / r + cot * (L[1, 2] + L[2, 1]) / r,
        ])
    raise ValueError(f"unsupported op {op!r} for {kind} fields")


# ---------------------------------------------------------------------------
# integral theorems as numerical residuals
# ---------------------------------------------------------------------------

def gauss_legendre_nodes(a: float, b: float, order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


def _box_flux(vec_at, box, order):
    """Outward flux of a vector field through the boundary of a box."""
    total = 0.0
    for axis in range(3):
        lo, hi = box[axis]
        others = [i for i in range(3) if i != axis]
        xs, wx = gauss_legendre_nodes(*box[others[0]], order)
        ys, wy = gauss_legendre_nodes(*box[others[1]], order)
        for side, sign in ((lo, -1.0), (hi, 1.0)):
            for xi, wxi in zip(xs, wx):
                for yi, wyi in zip(ys, wy):
                    p = [0.0, 0.0, 0.0]
                    p[axis] = side
                    p[others[0]] = xi
                    p[others[1]] = yi
                    total += sign * vec_at(p)[axis] * wxi * wyi
    return total


def _box_volume_integral(f_at, box, order):
    xs, wx = gauss_legendre_nodes(*box[0], order)
    ys, wy = gauss_legendre_nodes(*box[1], order)
    zs, wz = gauss_legendre_nodes(*box[2], order)
    total = 0.0
    for xi, wxi in zip(xs, wx):
        for yi, wyi in zip(ys, wy):
            for zi, wzi in zip(zs, wz):
                total += f_at((xi, yi, zi)) * wxi * wyi * wzi
    return total


def integral_theorem_residual(theorem: str, fields, domain, order: int = 16) -> float:
    """|boundary integral - volume integral| for the classical theorems.

    theorem="gauss":  fields is one vector ExprMap, domain a box of three
                      (lo, hi) pairs.
    theorem="flux":   same data; returns |flux| (checks a divergence-free field).
    theorem="green":  fields is a pair of scalar ExprMaps, domain a box.
    theorem="stokes": fields is one vector ExprMap, domain a dict with keys
                      "center" (3 floats, plane z = center[2]) and "radius".
    """
    if theorem in ("gauss", "flux"):
        v = fields if isinstance(fields, ExprMap) else fields[0]
        _check_kind(v, "vector")
        box = tuple(tuple(float(b) for b in pair) for pair in domain)
        flux = _box_flux(lambda p: v(*p), box, order)
        if theorem == "flux":
            return abs(flux)
        vol = _box_volume_integral(
            lambda p: _cartesian_ops("vector", "div", v, p), box, order)
        return abs(flux - vol)
    if theorem == "green":
        f, g = fields
        _check_kind(f, "scalar")
        _check_kind(g, "scalar")
        box = tuple(tuple(float(b) for b in pair) for pair in domain)

        def boundary(p_axis_side):
            p, axis, sign = p_axis_side
            gf = _cartesian_ops("scalar", "grad", f, p)
            gg = _cartesian_ops("scalar", "grad", g, p)
            return sign * (g(*p)[0] * gf[axis] - f(*p)[0] * gg[axis])

        total = 0.0
        for axis in range(3):
            lo, hi = box[axis]
            others = [i for i in range(3) if i != axis]
            xs, wx = gauss_legendre_nodes(*box[others[0]], order)
            ys, wy = gauss_legendre_nodes(*box[others[1]], order)
            for side, sign in ((lo, -1.0), (hi, 1.0)):
                for xi, wxi in zip(xs, wx):
                    for yi, wyi in zip(ys, wy):
                        p = [0.0, 0.0, 0.0]
                        p[axis] = side
                        p[others[0]] = xi
                        p[others[1]] = yi
                        total += boundary((p, axis, sign)) * wxi * wyi
        vol = _box_volume_integral(
            lambda p: (g(*p)[0] * _cartesian_ops("scalar", "laplacian", f, p)
                       - f(*p)[0] * _cartesian_ops("scalar", "laplacian", g, p)),
            box, order)
        return abs(total - vol)
    if theorem == "stokes":
        v = fields if isinstance(fields, ExprMap) else fields[0]
        _check_kind(v, "vector")
        cx, cy, cz = (float(c) for c in domain["center"])
        radius = float(domain["radius"])
        m = max(64, 8 * order)
        thetas = np.arange(m) * (2.0 * math.pi / m)
        line = 0.0
        for th in thetas:
            p = (cx + radius * math.cos(th), cy + radius * math.sin(th), cz)
            tangent = np.array([-math.sin(th), math.cos(th), 0.0])
            line += radius * float(np.dot(v(*p), tangent))
        line *= 2.0 * math.pi / m
        rs, wr = gauss_legendre_nodes(0.0, radius, order)
        surf = 0.0
        for r, w in zip(rs, wr):
            for th in thetas:
                p = (cx + r * math.cos(th), cy + r * math.sin(th), cz)
                curl_z = _cartesian_ops("vector", "curl", v, p)[2]
                surf += curl_z * r * w
        surf *= 2.0 * math.pi / m
        return abs(line - surf)
    raise ValueError(f"unknown theorem {theorem!r}")


# ---------------------------------------------------------------------------
# ready-made charts
# ---------------------------------------------------------------------------

def cartesian_map() -> CoordMap:
    return CoordMap(parse(["z1", "z2", "z3"], ["z1", "z2", "z3"]),
                    domain=((-10, 10), (-10, 10), (-10, 10)))


def polar_map() -> CoordMap:
    return CoordMap(parse(["r*cos(t)", "r*sin(t)"], ["r", "t"]),
                    domain=((0.05, 10), (-3.1, 3.1)))


def cylindrical_map() -> CoordMap:
    return CoordMap(parse(["rho*cos(t)", "rho*sin(t)", "z"], ["rho", "t", "z"]),
                    domain=((0.05, 10), (-3.1, 3.1), (-10, 10)))


def spherical_map() -> CoordMap:
    # variables: radius, colatitude, azimuth
    return CoordMap(parse(["r*sin(p)*cos(t)", "r*sin(p)*sin(t)", "r*cos(p)"],
                          ["r", "p", "t"]),
                    domain=((0.05, 10), (0.05, 3.09), (-3.1, 3.1)))


def oblique_map(alpha1: float, alpha2: float) -> CoordMap:
    """Planar skew axes inclined at alpha1 and alpha2 to the first axis."""
    consts = {"a1": float(alpha1), "a2": float(alpha2)}
    return CoordMap(parse(["z1*cos(a1)+z2*cos(a2)", "z1*sin(a1)+z2*sin(a2)"],
                          ["z1", "z2"], consts),
                    domain=((-10, 10), (-10, 10)))
