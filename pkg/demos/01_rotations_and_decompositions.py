#!/usr/bin/env python3
"""Tour of the second-rank tensor toolbox: rotations in all their
parameterizations, the axial isomorphism, and the spectral / square-root /
polar decompositions.
"""

import numpy as np

from tensorgeom import tensor2 as t2

np.set_printoptions(precision=6, suppress=True)
rng = np.random.default_rng(1)


def section(title):
    print("\n" + "=" * 64)
    print(title)
    print("=" * 64)


section("Axis-angle rotations")
axis = t2.normalize([1.0, 1.0, 1.0])
R = t2.rotation_from_axis_angle(axis, np.pi / 3)
print("rotation by 60 degrees about (1,1,1)/sqrt(3):")
print(R)
print("R R^T - I  ->", t2.tensor_norm(R @ R.T - np.eye(3)))
print("det R      ->", t2.det(R))
aa = t2.rotation_to_axis_angle(R)
print("recovered axis", aa.axis, "angle", aa.angle)

section("Three-angle parameterizations")
print("euler(0.4, 1.1, -0.7):")
print(t2.rotation_composed("euler", (0.4, 1.1, -0.7)))
print("coordinate(0.3, -0.5, 1.2):")
print(t2.rotation_composed("coordinate", (0.3, -0.5, 1.2)))
R1 = t2.rotation_from_axis_angle([1.0, 0.0, 0.0], np.pi / 2)
R3 = t2.rotation_from_axis_angle([0.0, 0.0, 1.0], np.pi / 2)
print("\nrotations about different axes do not commute:")
print("|R1 R3 - R3 R1| =", t2.tensor_norm(R1 @ R3 - R3 @ R1))

section("Axial vectors and cross products")
w = np.array([0.3, -1.2, 0.8])
W = t2.axial_tensor(w)
u = rng.normal(size=3)
print("W u          ", W @ u)
print("w x u        ", t2.cross(w, u))
print("axial roundtrip:", t2.axial_vector(W))

section("Spectral decomposition (cyclic Jacobi)")
L = t2.sym_part(rng.normal(size=(3, 3)))
dec = t2.eigen_sym(L)
print("eigenvalues (descending):", dec.values)
print("reconstruction error:", t2.tensor_norm(dec.reconstruct() - L))
print("handedness:", t2.mixed(dec.vectors[:, 0], dec.vectors[:, 1], dec.vectors[:, 2]))

section("Square root and polar decomposition")
F = rng.normal(size=(3, 3)) + 2.0 * np.eye(3)
print("det F =", t2.det(F))
dec = t2.polar(F)
print("rotation part:")
print(dec.rotation)
print("right stretch eigenvalues:", t2.eigen_sym(dec.right_stretch).values)
print("|F - R U| =", t2.tensor_norm(F - dec.rotation @ dec.right_stretch))
print("|V - R U R^T| =", t2.tensor_norm(
    dec.left_stretch - dec.rotation @ dec.right_stretch @ dec.rotation.T))

section("Mirror symmetries")
S = t2.reflexion([0.0, 0.0, 1.0])
print("reflexion across the x-y plane:")
print(S)
print("det =", t2.det(S))
