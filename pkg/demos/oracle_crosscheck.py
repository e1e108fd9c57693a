"""Cross-check the closed forms against the three independent oracles.

The closed-form order values rest on divided differences of x^r ln x.  None
of the oracles below shares that code path: the contour oracle integrates a
resolvent-like product around the spectrum, the simplex oracle averages a
Shannon-weighted integrand over random probability vectors, and the Haar
oracle measures accessible information of random orthonormal bases.  When
all four agree we can trust any one of them.
"""

import numpy as np

from subentropy import (
    ContourConfig,
    Spectrum,
    contour_intermediate_entropy,
    haar_average_information,
    intermediate_entropies,
    simplex_monte_carlo,
    subentropy,
    von_neumann_entropy,
)

SEED = 7


def main():
    rng = np.random.default_rng(SEED)
    lam = np.sort(rng.dirichlet(np.ones(5)))[::-1]
    s = Spectrum(lam)
    orders = intermediate_entropies(s)

    print(f"spectrum (n=5, seed {SEED}): {np.round(s.values, 6)}")
    print(f"entropy    = {von_neumann_entropy(s):.12f}")
    print(f"subentropy = {subentropy(s):.12f}")

    print("\n-- contour oracle (deterministic quadrature) --")
    for nodes in (16, 32, 64, 512):
        est = contour_intermediate_entropy(s, s.dim, ContourConfig(nodes=nodes))
        err = abs(est.value - orders[-1])
        print(f"  nodes={nodes:4d}  value={est.value:.15f}  abs err={err:.3e}")

    print("\n-- simplex Monte Carlo (order by order) --")
    for r in range(1, s.dim + 1):
        est = simplex_monte_carlo(s, r, samples=200_000, seed=SEED + r)
        z = (est.value - orders[r - 1]) / est.stderr
        print(
            f"  r={r}  mc={est.value:.6f}  closed={orders[r - 1]:.6f}"
            f"  stderr={est.stderr:.1e}  z={z:+.2f}"
        )

    print("\n-- Haar-random measurement bases (subentropy only) --")
    est = haar_average_information(s, samples=30_000, seed=SEED)
    z = (est.value - orders[-1]) / est.stderr
    print(f"  mean information = {est.value:.6f}  stderr={est.stderr:.1e}  z={z:+.2f}")
    print("  (the average accessible information over Haar bases is the subentropy)")


if __name__ == "__main__":
    main()
