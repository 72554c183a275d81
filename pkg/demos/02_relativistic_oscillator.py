"""The relativistic pseudoharmonic oscillator on the half line.

Shows the parameter map c -> gamma(c), the equally spaced spectrum, the
continuous-dual-Hahn eigenfunctions, and their numerical orthonormality.
"""

import numpy as np

from relbargmann import (OscParams, eigenfunction, energy, gamma_of_c,
                         oscillator_gram)

print("the single model parameter c fixes gamma = (1 + sqrt(1 + 2 c^4))/2:")
for c in (0.5, 0.8, 1.0, 2.0 ** 0.5, 2.0):
    print(f"  c = {c:6.4f}  ->  gamma = {gamma_of_c(c):10.7f}")

osc = OscParams(1.0)
print(f"\nspectrum at c = 1 (units hbar = m = omega = 1), spacing exactly 2:")
for k in range(5):
    print(f"  E_{k} = {energy(k, osc):10.7f}")

print("\neigenfunction profiles: all vanish at xi = 0 and decay like "
      "exp(-pi xi / 2) times a polynomial:")
xi = np.array([0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0])
for k in (0, 1, 3):
    mags = np.abs([eigenfunction(k, osc, float(x)) for x in xi])
    row = "  ".join(f"{v:9.2e}" for v in mags)
    print(f"  |phi_{k}|: {row}")
print("   at xi = " + "  ".join(f"{v:9.3g}" for v in xi))

print("\northonormality on L^2(0, inf) by half-line quadrature:")
for c in (0.8, 1.0, 1.5):
    gram = oscillator_gram(OscParams(c), 5)
    print(f"  c = {c}: max |Gram - I| (k, j <= 5) = "
          f"{np.abs(gram - np.eye(6)).max():.2e}")
