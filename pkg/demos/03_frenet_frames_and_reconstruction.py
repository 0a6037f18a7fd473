#!/usr/bin/env python3
"""Curves: arc length, moving frames, osculating circles and spheres,
evolutes, and rebuilding a curve from nothing but curvature and torsion.
"""

import math

import numpy as np

from tensorgeom import curve as cv
from tensorgeom.expr import parse

np.set_printoptions(precision=6, suppress=True)

print("=" * 64)
print("A circular helix, radius 2, pitch slope 1")
print("=" * 64)
helix = cv.Curve(parse(["2*cos(t)", "2*sin(t)", "t"], ["t"]), (0.0, 4 * math.pi))
print("length over one turn:", cv.arc_length(helix, 0.0, 2 * math.pi))
d = cv.frenet(helix, 1.0)
print("curvature ", d.curvature, " (2/5 exactly)")
print("torsion   ", d.torsion, " (-1/5 exactly)")
print("tangent   ", d.tangent)
print("normal    ", d.normal)
print("binormal  ", d.binormal)

circle_center, circle_radius, sphere_center, sphere_radius = cv.osculating(helix, 1.0)
print("\nosculating circle: center", circle_center, "radius", circle_radius)
print("osculating sphere: center", sphere_center, "radius", sphere_radius)
print("(constant curvature makes both centers coincide)")

print()
print("=" * 64)
print("The tractrix and its evolute")
print("=" * 64)
tractrix = cv.Curve(parse(["cos(t)+ln(tan(t/2))", "sin(t)"], ["t"]),
                    (0.4, math.pi - 0.4))
print("evolute points (x, y) against the catenary y = cosh x:")
for t in (0.6, 0.9, 1.2):
    q = cv.evolute(tractrix, t)
    print(f"  t = {t:.1f}: evolute = ({q[0]: .6f}, {q[1]: .6f}), "
          f"cosh x = {math.cosh(q[0]): .6f}")

print()
print("=" * 64)
print("Local shape: canonical coefficients")
print("=" * 64)
c0, c0_prime, theta0 = cv.canonical_coefficients(helix, 0.5)
print("c0 =", c0, " dc/ds =", c0_prime, " torsion0 =", theta0)
print("osculating-plane projection is the parabola p2 = c0/2 p1^2")
print("normal-plane projection is the semicubic p3^2 = (2/9)(theta0^2/c0) p2^3")

print()
print("=" * 64)
print("Reconstruction from (curvature, torsion)")
print("=" * 64)
profile = cv.CurvatureProfile.build(lambda s: 0.4, lambda s: -0.2, (0.0, 10.0))
res = cv.bonnet_reconstruct(profile, [2.0, 0.0, 0.0], np.eye(3), 1e-3)
s_in, c_rec, t_rec = cv.discrete_frenet(res.s, res.points)
print("fed constants (0.4, -0.2); recovered from the integrated curve:")
print("  curvature range:", c_rec.min(), "-", c_rec.max())
print("  torsion   range:", t_rec.min(), "-", t_rec.max())
E = res.frame(len(res.s) - 1)
print("frame orthonormality drift at the end:",
      np.max(np.abs(E @ E.T - np.eye(3))))
print("\na straight-line profile (zero curvature) is rejected:")
try:
    cv.bonnet_reconstruct(cv.CurvatureProfile.build(lambda s: 0.0, lambda s: 0.0,
                                                    (0.0, 1.0)),
                          [0.0, 0.0, 0.0], np.eye(3), 1e-3)
except cv.UndefinedNormal as exc:
    print("  ->", exc)
