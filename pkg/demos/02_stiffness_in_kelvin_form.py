#!/usr/bin/env python3
"""Fourth-rank tensors at work: projectors, isotropic stiffness, and why the
Kelvin 6x6 representation makes rotating an elasticity tensor a plain matrix
conjugation.
"""

import numpy as np

from tensorgeom import tensor2 as t2
from tensorgeom import tensor4 as t4

np.set_printoptions(precision=4, suppress=True)
rng = np.random.default_rng(2)

print("=" * 64)
print("Projectors on second-rank tensor space")
print("=" * 64)
sph, dev, sym_id, trp, sym, skw = t4.projectors()
A = rng.normal(size=(3, 3))
print("tr A =", t2.trace(A))
print("spherical part:\n", t4.apply4(sph, A))
print("deviatoric part has trace", t2.trace(t4.apply4(dev, A)))
print("projector norms: sph.sph =", t4.inner4(sph, sph),
      " dev.dev =", t4.inner4(dev, dev),
      " sph.dev =", t4.inner4(sph, dev))

print()
print("=" * 64)
print("Isotropic stiffness and Hooke's law")
print("=" * 64)
lam, mu = 1.2, 0.8
stiff = t4.isotropic(lam, mu)
eps = t2.sym_part(rng.normal(size=(3, 3)))
sigma = t4.apply4(stiff, eps)
print("strain:\n", eps)
print("stress (2 mu eps + lam tr(eps) I):\n", sigma)
print("matches closed form:",
      np.allclose(sigma, 2 * mu * eps + lam * t2.trace(eps) * np.eye(3)))

print()
print("Kelvin 6x6 of the isotropic stiffness (order 11,22,33,23,31,12):")
print(t4.to_kelvin(stiff))

print()
print("=" * 64)
print("Rotating a stiffness tensor: 81 components vs a 6x6 sandwich")
print("=" * 64)
# a made-up orthotropic-ish stiffness with minor and major symmetries
E = rng.normal(size=(3, 3, 3, 3))
E = 0.5 * (E + np.transpose(E, (1, 0, 2, 3)))
E = 0.5 * (E + np.transpose(E, (0, 1, 3, 2)))
E = 0.5 * (E + np.transpose(E, (2, 3, 0, 1)))
U = t2.random_rotation(rng)

route_a = t4.to_kelvin(t4.rotate4(E, U))          # rotate in 4th-rank land
KU = t4.kelvin_rotation(U)                        # then the 6x6 shortcut
route_b = KU @ t4.to_kelvin(E) @ KU.T
print("max |route difference| =", np.max(np.abs(route_a - route_b)))
print("[U][U]^T - I ->", np.max(np.abs(KU @ KU.T - np.eye(6))))

print()
print("Kelvin vectors carry sqrt(2) on the shear slots so that")
print("6-vector norms equal tensor norms:")
print("tensor norm  =", t2.tensor_norm(eps))
print("kelvin norm  =", np.linalg.norm(t4.kelvin_vector(eps)))

print()
print("The isotropic stiffness commutes with every orthogonal conjugator:")
UU = t4.conjugator(U)
print("|U E_iso - E_iso U| =",
      t4.norm4(t4.compose4(UU, stiff) - t4.compose4(stiff, UU)))
