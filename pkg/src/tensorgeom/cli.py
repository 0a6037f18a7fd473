"""Command-line front end.

Subcommands:

* ``analyze <scene.json>``     -- run curve/surface/coordmap analyses
* ``reconstruct <profile.json>`` -- rebuild a curve from curvature/torsion
* ``tensor <job.json>``        -- one-shot tensor computations
* ``check``                    -- run the invariant battery

Scene files are JSON objects with ``kind``, ``components`` (expression
strings), ``variables``, ``constants``, ``domain`` ([min, max] pairs) and
``requests`` ([{"op": ..., "params": {...}}]).  Reports are JSON with sorted
keys and floats printed at 17 significant digits, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, coords, curve, surface, tensor2, tensor4
from .expr import DomainError, ExprMap, ParseError, parse

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


class ValidationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# deterministic JSON
# ---------------------------------------------------------------------------

def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValidationError(f"non-finite value {x!r} in report")
    if x == int(x) and abs(x) < 1e16:
        return format(x, ".1f")
    return format(x, ".17g")


def format_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f'{inner}{json.dumps(str(k))}: {format_json(obj[k], indent + 1)}'
                 for k in sorted(obj)]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = [format_json(x, indent + 1) for x in np.asarray(obj).tolist()] \
            if isinstance(obj, np.ndarray) else [format_json(x, indent + 1) for x in obj]
        if not items:
            return "[]"
        if all("\n" not in s and len(s) < 24 for s in items) and len(items) <= 8:
            return "[" + ", ".join(items) + "]"
        return "[\n" + ",\n".join(inner + s for s in items) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _csv_cell(x) -> str:
    if isinstance(x, (float, np.floating)):
        return _fmt_float(float(x))
    return str(x)


def write_csv(path: Path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_csv_cell(x) for x in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# scene loading and validation
# ---------------------------------------------------------------------------

def _need(scene: dict, key: str, types, path: str):
    if key not in scene:
        raise ValidationError(f"missing field '{path}{key}'")
    value = scene[key]
    if not isinstance(value, types):
        raise ValidationError(f"field '{path}{key}' has the wrong type")
    return value


def _load_json(path: str) -> dict:
    p = Path(path)
    if not p.exists():
        raise ValidationError(f"file not found: {path}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"top level of {path} must be an object")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ValidationError(f"schema_version {version} unsupported "
                              f"(expected {SCHEMA_VERSION})")
    return data


def _parse_components(scene: dict) -> ExprMap:
    components = _need(scene, "components", list, "")
    variables = _need(scene, "variables", list, "")
    constants = scene.get("constants", {})
    if not isinstance(constants, dict):
        raise ValidationError("field 'constants' must be an object")
    try:
        return parse(components, variables, {k: float(v) for k, v in constants.items()})
    except ParseError as exc:
        raise ValidationError(f"expression error: {exc}") from exc


def _parse_domain(scene: dict, n: int) -> list[tuple[float, float]]:
    domain = _need(scene, "domain", list, "")
    if len(domain) != n:
        raise ValidationError(f"field 'domain' needs {n} [min, max] pairs")
    out = []
    for i, pair in enumerate(domain):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, (int, float)) for x in pair)):
            raise ValidationError(f"field 'domain[{i}]' must be [min, max]")
        lo, hi = float(pair[0]), float(pair[1])
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValidationError(f"field 'domain[{i}]' must be finite with min < max")
        out.append((lo, hi))
    return out


# ---------------------------------------------------------------------------
# request handlers
# ---------------------------------------------------------------------------

def _grid(lo: float, hi: float, n: int, interior: bool = False) -> np.ndarray:
    if interior:
        pts = np.linspace(lo, hi, n + 2)[1:-1]
    else:
        pts = np.linspace(lo, hi, n)
    return pts


_POINTWISE_ERRORS = (DomainError, curve.IrregularCurve, curve.UndefinedNormal,
                     surface.IrregularPoint)


def _run_curve_request(cv: curve.Curve, op: str, params: dict, grid_n: int,
                       skipped: list):
    if op == "frenet":
        n = int(params.get("samples", grid_n))
        rows = []
        for t in _grid(*cv.domain, n):
            try:
                d = curve.frenet(cv, t)
            except _POINTWISE_ERRORS as exc:
                skipped.append({"point": [t], "error": str(exc)})
                continue
            rows.append([t, *d.point, d.curvature, d.torsion])
        return {"table": {"columns": ["t", "x1", "x2", "x3", "c", "theta"],
                          "rows": rows}}
    if op == "arc_length":
        t0 = float(params.get("t0", cv.domain[0]))
        t1 = float(params.get("t1", cv.domain[1]))
        return {"length": curve.arc_length(cv, t0, t1)}
    if op == "osculating":
        t = float(params["t"])
        cc, cr, sc, sr = curve.osculating(cv, t)
        out = {"circle_center": list(cc), "circle_radius": cr}
        if sc is not None:
            out["sphere_center"] = list(sc)
            out["sphere_radius"] = sr
        return out
    if op == "evolute":
        n = int(params.get("samples", grid_n))
        rows = []
        for t in _grid(*cv.domain, n):
            try:
                rows.append([t, *curve.evolute(cv, t)])
            except _POINTWISE_ERRORS as exc:
                skipped.append({"point": [t], "error": str(exc)})
        return {"table": {"columns": ["t", "q1", "q2", "q3"], "rows": rows}}
    if op == "canonical":
        t = float(params["t"])
        c0, c0p, th0 = curve.canonical_coefficients(cv, t)
        return {"c0": c0, "c0_prime": c0p, "theta0": th0}
    raise ValidationError(f"unknown curve operation {op!r}")


def _run_surface_request(sf: surface.Surface, op: str, params: dict, grid_n: int,
                         skipped: list):
    (u0, u1), (v0, v1) = sf.domain
    if op in ("gauss_curvature", "curvatures", "egregium"):
        n = int(params.get("samples", grid_n))
        rows = []
        for u in _grid(u0, u1, n, interior=True):
            for v in _grid(v0, v1, n, interior=True):
                try:
                    jd = surface.jet_at(sf, u, v)
                    if op == "gauss_curvature":
                        rows.append([u, v, jd.gaussian])
                    elif op == "curvatures":
                        rows.append([u, v, jd.gaussian, jd.mean, jd.k1, jd.k2,
                                     surface.classify_point(jd)])
                    else:
                        ki = surface.egregium_curvature(sf, u, v)
                        rows.append([u, v, ki, jd.gaussian, abs(ki - jd.gaussian)])
                except _POINTWISE_ERRORS as exc:
                    skipped.append({"point": [u, v], "error": str(exc)})
                    continue
        columns = {"gauss_curvature": ["u", "v", "K"],
                   "curvatures": ["u", "v", "K", "H", "k1", "k2", "class"],
                   "egregium": ["u", "v", "K_intrinsic", "K_shape", "abs_diff"]}[op]
        return {"table": {"columns": columns, "rows": rows}}
    if op == "jet":
        u, v = float(params["u"]), float(params["v"])
        jd = surface.jet_at(sf, u, v)
        return {
            "point": list(jd.point), "normal": list(jd.normal),
            "first_form": jd.first_form.tolist(),
            "second_form": jd.second_form.tolist(),
            "weingarten": jd.weingarten.tolist(),
            "k1": jd.k1, "k2": jd.k2, "gaussian": jd.gaussian, "mean": jd.mean,
            "class": surface.classify_point(jd), "umbilical": jd.umbilical,
        }
    if op == "area":
        ur = params.get("u_range")
        vr = params.get("v_range")
        order = int(params.get("order", 32))
        return {"area": surface.surface_area(sf, ur, vr, order=order)}
    if op == "geodesic":
        state = surface.GeodesicState(float(params["u"]), float(params["v"]),
                                      float(params["du"]), float(params["dv"]))
        s_max = float(params.get("s_max", 1.0))
        step = float(params.get("step", 1e-3))
        traj = surface.geodesic_integrate(sf, state, s_max, step)
        stride = max(1, len(traj) // max(int(params.get("samples", 200)), 2))
        rows = []
        for i in range(0, len(traj), stride):
            p = sf.point(traj.u[i], traj.v[i])
            rows.append([traj.s[i], traj.u[i], traj.v[i], traj.du[i], traj.dv[i], *p])
        return {"table": {"columns": ["s", "u", "v", "du", "dv", "x1", "x2", "x3"],
                          "rows": rows}}
    raise ValidationError(f"unknown surface operation {op!r}")


def _run_coordmap_request(chart: coords.CoordMap, scene: dict, op: str, params: dict):
    z = params.get("z")
    if not isinstance(z, list) or len(z) != chart.ndim:
        raise ValidationError(f"request '{op}' needs params.z with {chart.ndim} numbers")
    z = [float(c) for c in z]
    if op == "metric":
        met = coords.metric_at(chart, z)
        return {"covariant": met.cov.tolist(), "contravariant": met.con.tolist(),
                "jacobian": met.jacobian.tolist()}
    if op == "christoffel":
        method = params.get("method", "second_derivative")
        gamma = coords.christoffel(chart, z, method)
        return {"christoffel": gamma.tolist(), "method": method}
    if op == "laplacian":
        field_src = params.get("field")
        if not isinstance(field_src, str):
            raise ValidationError("request 'laplacian' needs params.field (expression)")
        constants = scene.get("constants", {})
        try:
            field = parse(field_src, list(scene["variables"]),
                          {k: float(v) for k, v in constants.items()})
        except ParseError as exc:
            raise ValidationError(f"expression error: {exc}") from exc
        return {"laplacian": coords.laplacian_curvilinear(field, chart, z)}
    raise ValidationError(f"unknown coordmap operation {op!r}")


def _results_to_files(results: list, outdir: Path, fmt: str, stem: str) -> list[str]:
    written = []
    if fmt in ("csv", "both"):
        for i, entry in enumerate(results):
            table = entry.get("result", {}).get("table")
            if table:
                path = outdir / f"{stem}_{entry['op']}_{i}.csv"
                write_csv(path, table["columns"], table["rows"])
                written.append(str(path))
    return written


def cmd_analyze(args) -> int:
    scene = _load_json(args.scene)
    kind = _need(scene, "kind", str, "")
    emap = _parse_components(scene)
    requests = _need(scene, "requests", list, "")
    grid_n = args.grid

    results = []
    diagnostics = {"tolerances": {"grid": grid_n, "tol": args.tol}}
    skipped: list = []
    if kind == "curve":
        if emap.dimension not in (2, 3):
            raise ValidationError("curve scenes need 2 or 3 components")
        domain = _parse_domain(scene, 1)[0]
        obj = curve.Curve(emap, domain)
        runner = lambda op, params: _run_curve_request(obj, op, params, grid_n,
                                                       skipped)
    elif kind == "surface":
        if emap.dimension != 3 or emap.arity != 2:
            raise ValidationError("surface scenes need 3 components of 2 variables")
        domain = _parse_domain(scene, 2)
        obj = surface.surface_from_expr(emap, domain)
        runner = lambda op, params: _run_surface_request(obj, op, params, grid_n,
                                                         skipped)
    elif kind == "coordmap":
        if emap.dimension != emap.arity:
            raise ValidationError("coordmap scenes need as many components as variables")
        domain = _parse_domain(scene, emap.arity)
        chart = coords.CoordMap(emap, domain)
        runner = lambda op, params: _run_coordmap_request(chart, scene, op, params)
    else:
        raise ValidationError(f"unknown scene kind {kind!r}")

    for i, req in enumerate(requests):
        if not isinstance(req, dict) or "op" not in req:
            raise ValidationError(f"field 'requests[{i}]' must be an object with 'op'")
        op = req["op"]
        params = req.get("params", {})
        try:
            results.append({"op": op, "result": runner(op, params)})
        except (DomainError, curve.IrregularCurve, curve.UndefinedNormal,
                curve.NotPlanarCurve, curve.UndefinedOsculatingSphere,
                surface.IrregularPoint, surface.LeftDomain, surface.PlanarPoint,
                coords.DegenerateJacobian, coords.CoordinateSingularity) as exc:
            diagnostics["failure"] = {"request": op, "error": str(exc)}
            diagnostics["skipped"] = skipped
            _emit_report(args, scene, results, diagnostics)
            print(f"numerical failure in request {op!r}: {exc}", file=sys.stderr)
            return EXIT_NUMERICAL

    diagnostics["skipped"] = skipped
    _emit_report(args, scene, results, diagnostics)
    return EXIT_OK


def _emit_report(args, scene, results, diagnostics) -> None:
    report = {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "scene": scene,
        "results": results,
        "diagnostics": diagnostics,
    }
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = Path(getattr(args, "scene", "report")).stem or "report"
    if args.format in ("json", "both"):
        path = outdir / f"{stem}_report.json"
        path.write_text(format_json(report) + "\n", encoding="utf-8", newline="\n")
        print(path)
    files = _results_to_files(results, outdir, args.format, stem)
    for f in files:
        print(f)


def cmd_reconstruct(args) -> int:
    job = _load_json(args.profile)
    constants = {k: float(v) for k, v in job.get("constants", {}).items()}
    try:
        c_map = parse(_need(job, "curvature", str, ""), ["s"], constants)
        t_map = parse(_need(job, "torsion", str, ""), ["s"], constants)
    except ParseError as exc:
        raise ValidationError(f"expression error: {exc}") from exc
    s_range = _need(job, "s_range", list, "")
    if len(s_range) != 2:
        raise ValidationError("field 's_range' must be [s0, s1]")
    step = float(job.get("step", 1e-3))
    p0 = job.get("p0", [0.0, 0.0, 0.0])
    frame0 = np.asarray(job.get("frame0", np.eye(3).tolist()), dtype=float)
    profile = curve.CurvatureProfile.build(c_map, t_map,
                                           (float(s_range[0]), float(s_range[1])))
    try:
        res = curve.bonnet_reconstruct(profile, p0, frame0, step)
    except (curve.NonOrthonormalSeed, curve.UndefinedNormal) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.profile).stem
    stride = max(1, len(res.s) // 2000)
    rows = [[res.s[i], *res.points[i], *res.tangents[i], *res.normals[i],
             *res.binormals[i]] for i in range(0, len(res.s), stride)]
    header = ["s", "x1", "x2", "x3", "t1", "t2", "t3", "n1", "n2", "n3",
              "b1", "b2", "b3"]
    if args.format in ("csv", "both"):
        path = outdir / f"{stem}_curve.csv"
        write_csv(path, header, rows)
        print(path)
    if args.format in ("json", "both"):
        report = {
            "schema_version": SCHEMA_VERSION,
            "version": __version__,
            "scene": job,
            "results": [{"op": "reconstruct",
                         "result": {"table": {"columns": header, "rows": rows}}}],
            "diagnostics": {"step": step, "samples": len(rows)},
        }
        path = outdir / f"{stem}_report.json"
        path.write_text(format_json(report) + "\n", encoding="utf-8", newline="\n")
        print(path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# tensor jobs
# ---------------------------------------------------------------------------

def _matrix_from(job: dict, key: str = "matrix") -> np.ndarray:
    M = _need(job, key, list, "")
    arr = np.asarray(M, dtype=float)
    if arr.shape != (3, 3):
        raise ValidationError(f"field '{key}' must be a 3x3 matrix")
    return arr


def cmd_tensor(args) -> int:
    job = _load_json(args.job)
    op = _need(job, "op", str, "")
    try:
        if op == "polar":
            dec = tensor2.polar(_matrix_from(job))
            result = {"rotation": dec.rotation.tolist(),
                      "right_stretch": dec.right_stretch.tolist(),
                      "left_stretch": dec.left_stretch.tolist()}
        elif op == "eigen":
            dec = tensor2.eigen_sym(_matrix_from(job))
            result = {"values": dec.values.tolist(), "vectors": dec.vectors.tolist()}
        elif op == "invariants":
            M = _matrix_from(job)
            d, (i1, i2, i3), inv, adj = tensor2.determinant_suite(M)
            result = {"det": d, "I1": i1, "I2": i2, "I3": i3,
                      "inverse": None if inv is None else inv.tolist(),
                      "adjugate": adj.tolist()}
        elif op == "rotation":
            if "axis" in job:
                axis = np.asarray(job["axis"], dtype=float)
                R = tensor2.rotation_from_axis_angle(tensor2.normalize(axis),
                                                     float(job["angle"]))
            else:
                R = tensor2.rotation_composed(_need(job, "kind", str, ""),
                                              _need(job, "angles", list, ""))
            result = {"matrix": R.tolist()}
        elif op == "axis_angle":
            aa = tensor2.rotation_to_axis_angle(_matrix_from(job))
            result = {"axis": aa.axis.tolist(), "angle": aa.angle}
        elif op == "kelvin":
            LL = np.asarray(_need(job, "tensor", list, ""), dtype=float)
            if LL.shape != (3, 3, 3, 3):
                raise ValidationError("field 'tensor' must be 3x3x3x3")
            result = {"kelvin": tensor4.to_kelvin(LL).tolist()}
        elif op == "kelvin_rotation":
            result = {"kelvin": tensor4.kelvin_rotation(_matrix_from(job)).tolist()}
        elif op == "isotropic":
            LL = tensor4.isotropic(float(job.get("lam", 0.0)), float(job.get("mu", 0.0)))
            result = {"kelvin": tensor4.to_kelvin(LL).tolist()}
        else:
            raise ValidationError(f"unknown tensor op {op!r}")
    except (tensor2.SingularTensor, tensor2.NotSymmetric, tensor2.NotSPD,
            tensor2.NonPositiveDeterminant, tensor2.NotARotation,
            tensor2.AxisUndefined, tensor2.NotUnit, tensor4.NotOrthogonal,
            tensor4.MissingMinorSymmetry) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    report = {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "scene": job,
        "results": [{"op": op, "result": result}],
        "diagnostics": {},
    }
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / f"{Path(args.job).stem}_report.json"
    path.write_text(format_json(report) + "\n", encoding="utf-8", newline="\n")
    print(path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# invariant battery
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    rng = np.random.default_rng(20211105)
    checks = []

    def add(name, residual, tol):
        checks.append((name, float(residual), tol, residual < tol))

    A, B = rng.normal(size=(3, 3)), rng.normal(size=(3, 3))
    u, v, w = rng.normal(size=3), rng.normal(size=3), rng.normal(size=3)
    add("transpose of a product", tensor2.tensor_norm((A @ B).T - B.T @ A.T), 1e-12)
    add("dyad transpose", tensor2.tensor_norm(tensor2.dyad(u, v).T - tensor2.dyad(v, u)),
        1e-12)
    add("spherical/deviatoric orthogonality",
        abs(tensor2.inner(tensor2.spherical_part(A), tensor2.deviatoric_part(B))), 1e-12)
    i1, i2, i3 = tensor2.principal_invariants(A)
    ch = A @ A @ A - i1 * (A @ A) + i2 * A - i3 * np.eye(3)
    add("Cayley-Hamilton", tensor2.tensor_norm(ch) / tensor2.tensor_norm(A) ** 3, 1e-12)
    add("mixed product vs determinant",
        abs(tensor2.mixed(u, v, w) - np.linalg.det(np.array([u, v, w]))), 1e-12)
    R = tensor2.random_rotation(rng)
    add("rotation orthogonality", tensor2.tensor_norm(R @ R.T - np.eye(3)), 1e-12)
    F = rng.normal(size=(3, 3)) + 2.0 * np.eye(3)
    if tensor2.det(F) > 0.1:
        dec = tensor2.polar(F)
        add("polar reconstruction",
            tensor2.tensor_norm(F - dec.rotation @ dec.right_stretch)
            / tensor2.tensor_norm(F), 1e-10)
    sph, dev, *_ = tensor4.projectors()
    add("spherical projector norm", abs(tensor4.inner4(sph, sph) - 1.0), 1e-14)
    add("deviatoric projector norm", abs(tensor4.inner4(dev, dev) - 5.0), 1e-14)
    add("projector orthogonality", abs(tensor4.inner4(sph, dev)), 1e-14)

    helix = curve.Curve(parse(["2*cos(t)", "2*sin(t)", "t"], ["t"]), (0.0, 12.0))
    d = curve.frenet(helix, 1.0)
    add("helix curvature", abs(d.curvature - 0.4), 1e-12)
    add("helix torsion", abs(d.torsion + 0.2), 1e-12)

    sph_surf = surface.surface_from_expr(
        ["cos(u)*cos(v)", "cos(u)*sin(v)", "sin(u)"], ((-1.4, 1.4), (-3.1, 3.1)))
    jd = surface.jet_at(sph_surf, 0.3, 0.7)
    add("unit sphere curvature", abs(jd.gaussian - 1.0), 1e-10)
    add("intrinsic vs shape curvature",
        abs(surface.egregium_curvature(sph_surf, 0.3, 0.7) - jd.gaussian), 1e-10)

    pm = coords.polar_map()
    g1 = coords.christoffel(pm, (2.0, 0.5), "second_derivative")
    g2 = coords.christoffel(pm, (2.0, 0.5), "metric_derivative")
    add("connection cross-check", np.max(np.abs(g1 - g2)), 1e-10)

    width = max(len(name) for name, *_ in checks)
    all_ok = True
    for name, residual, tol, ok in checks:
        all_ok &= ok
        print(f"{name:<{width}}  {residual:12.3e}  (tol {tol:g})  "
              f"{'PASS' if ok else 'FAIL'}")
    print(f"\n{'ALL CHECKS PASSED' if all_ok else 'SOME CHECKS FAILED'}")
    return EXIT_OK if all_ok else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tensorgeom",
                                description="Analyze expression-defined curves, "
                                            "surfaces and coordinate maps.")
    p.add_argument("--grid", type=int, default=64, help="samples per axis")
    p.add_argument("--tol", type=float, default=None, help="tolerance override")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--format", choices=("json", "csv", "both"), default="json")
    sub = p.add_subparsers(dest="command", required=True)
    pa = sub.add_parser("analyze", help="run a scene file")
    pa.add_argument("scene")
    pa.set_defaults(func=cmd_analyze)
    pr = sub.add_parser("reconstruct", help="rebuild a curve from curvature/torsion")
    pr.add_argument("profile")
    pr.set_defaults(func=cmd_reconstruct)
    pt = sub.add_parser("tensor", help="one-shot tensor computation")
    pt.add_argument("job")
    pt.set_defaults(func=cmd_tensor)
    pc = sub.add_parser("check", help="run the invariant battery")
    pc.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
