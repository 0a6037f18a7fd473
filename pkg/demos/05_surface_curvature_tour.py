#!/usr/bin/env python3
"""Surfaces: fundamental forms, principal/Gaussian/mean curvature, point
classification, developable ruled surfaces, direction fields, and the
intrinsic route to the Gaussian curvature.
"""

import math

import numpy as np

from tensorgeom import surface as sf

np.set_printoptions(precision=6, suppress=True)


def describe(name, surf, u, v):
    jd = sf.jet_at(surf, u, v)
    kind = sf.classify_point(jd)
    print(f"{name:>14s}  K = {jd.gaussian: .6f}  H = {jd.mean: .6f}  "
          f"k1 = {jd.k1: .4f}  k2 = {jd.k2: .4f}  [{kind}]")
    return jd


print("=" * 72)
print("A gallery of surfaces at a sample point")
print("=" * 72)
sphere = sf.surface_from_expr(["cos(u)*cos(v)", "cos(u)*sin(v)", "sin(u)"],
                              ((-1.45, 1.45), (-3.1, 3.1)))
pseudo = sf.revolution_surface("sin(u)", "cos(u)+ln(tan(u/2))", (0.3, 1.4))
catenoid = sf.revolution_surface("cosh(u)", "u", (-1.0, 1.0))
torus = sf.revolution_surface("3+cos(u)", "sin(u)", (-3.1, 3.1))
cylinder = sf.ruled_surface(["cos(u)", "sin(u)", "0*u"], ["0*u", "0*u", "1+0*u"],
                            (0.0, 6.0), (0.0, 2.0))
helicoid = sf.ruled_surface(["0*u", "0*u", "u"], ["cos(u)", "sin(u)", "0*u"],
                            (0.0, 6.0), (-2.0, 2.0))
plane = sf.surface_from_expr(["u", "v", "0*u"], ((0.0, 1.0), (0.0, 1.0)))

describe("unit sphere", sphere, 0.4, 0.9)
describe("pseudo-sphere", pseudo, 0.8, 0.5)
describe("catenoid", catenoid, 0.4, 1.0)
describe("torus (outer)", torus, 0.5, 1.0)
describe("torus (inner)", torus, 2.8, 1.0)
describe("cylinder", cylinder, 1.0, 0.5)
describe("helicoid", helicoid, 1.0, 0.5)
describe("plane", plane, 0.5, 0.5)

print()
print("=" * 72)
print("The pseudo-sphere earns its name: K = -1 across the chart")
print("=" * 72)
ks = [sf.jet_at(pseudo, u, v).gaussian
      for u in np.linspace(0.35, 1.35, 8) for v in (-2.0, 0.0, 2.0)]
print("min K =", min(ks), " max K =", max(ks))

print()
print("=" * 72)
print("Intrinsic curvature: metric-only K vs the shape operator")
print("=" * 72)
for name, surf, (u, v) in [("sphere", sphere, (0.3, 0.7)),
                           ("catenoid", catenoid, (0.4, 1.0)),
                           ("torus", torus, (0.9, 0.2))]:
    ki = sf.egregium_curvature(surf, u, v)
    ks_ = sf.jet_at(surf, u, v).gaussian
    print(f"{name:>9s}: intrinsic {ki: .12f}   shape operator {ks_: .12f}")

print()
print("=" * 72)
print("Moving-frame residuals (expansion of f_,ij and N_,j)")
print("=" * 72)
for name, surf, (u, v) in [("sphere", sphere, (0.2, 0.4)),
                           ("pseudo-sphere", pseudo, (0.9, 0.5))]:
    gr, wr = sf.gauss_weingarten_residual(surf, u, v)
    print(f"{name:>14s}: tangential {gr:.2e}   normal {wr:.2e}")

print()
print("=" * 72)
print("Ruled surfaces and developability")
print("=" * 72)
for name, surf in (("cylinder", cylinder), ("helicoid", helicoid)):
    ok, witness = sf.developability(surf, 1.0)
    print(f"{name:>9s}: developable = {ok}   mixed-product witness = {witness:.3f}")

print()
print("=" * 72)
print("Direction fields at a catenoid point")
print("=" * 72)
jd = sf.jet_at(catenoid, 0.4, 0.5)
fields = sf.direction_fields(jd)
print("local conic:", fields.dupin)
print("principal directions (natural-basis components):")
for d in fields.curvature_directions:
    print("  ", d, " normal curvature:", jd.normal_curvature(d))
print("asymptotic directions (zero normal curvature):")
for d in fields.asymptotic_directions:
    print("  ", d, " II(d, d) =", float(d @ jd.second_form @ d))

print()
print("=" * 72)
print("Areas and lengths from the first form")
print("=" * 72)
band = sf.surface_area(sphere, u_range=(0.0, math.pi / 2 - 1e-9),
                       v_range=(-math.pi, math.pi))
print("hemisphere band area (exactly 2 pi):", band)
from tensorgeom.expr import parse  # noqa: E402
parallel = parse([f"{math.pi / 4}+0*t", "t"], ["t"])
print("parallel at latitude 45 degrees over dv = 1:",
      sf.curve_length_on_surface(sphere, parallel, 0.0, 1.0),
      " (sqrt(2)/2 =", math.sqrt(2) / 2, ")")
