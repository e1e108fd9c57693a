"""Map entropy and subentropy over the full simplex of 3-level spectra.

Every trace-one spectrum (l1, l2, l3) is a point of a triangle, so both
quantities are surfaces over it.  The script tabulates them on a barycentric
grid, reports where each is largest and how wide the gap between them gets,
and renders contour plots when matplotlib is around.
"""

import numpy as np

from subentropy import Spectrum, intermediate_entropies

RESOLUTION = 40


def barycentric_grid(res):
    pts = []
    for i in range(res + 1):
        for j in range(res + 1 - i):
            pts.append((i / res, j / res, (res - i - j) / res))
    return np.array(pts)


def main():
    pts = barycentric_grid(RESOLUTION)
    entropy = np.empty(len(pts))
    sub = np.empty(len(pts))
    for k, lam in enumerate(pts):
        orders = intermediate_entropies(Spectrum(lam))
        entropy[k] = orders[0]
        sub[k] = orders[-1]

    print(f"{len(pts)} grid points at resolution {RESOLUTION}")
    imax = int(np.argmax(sub))
    print(f"entropy    peak {entropy.max():.6f} (ln 3 = {np.log(3):.6f})")
    print(f"subentropy peak {sub.max():.6f} at {np.round(pts[imax], 4)}")
    gap = entropy - sub
    print(f"gap ranges from {gap.min():.3e} (pure states) to {gap.max():.6f}")

    corner = np.array([1.0, 0.0, 0.0])
    print(f"\nat a pure state {corner}: entropy = subentropy = 0")
    uni = np.full(3, 1 / 3)
    orders = intermediate_entropies(Spectrum(uni))
    print(f"at the uniform point: S = {orders[0]:.6f}, Q = {orders[-1]:.6f}")
    print(f"  (Q_max = ln 3 - 1/2 - 1/3 = {np.log(3) - 5 / 6:.6f})")

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\n(matplotlib not installed; skipping the plots)")
        return

    # project barycentric coords onto the plane for plotting
    x = pts[:, 1] + 0.5 * pts[:, 2]
    y = np.sqrt(3) / 2 * pts[:, 2]
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    for ax, z, title in ((axes[0], entropy, "entropy"), (axes[1], sub, "subentropy")):
        t = ax.tricontourf(x, y, z, levels=24)
        fig.colorbar(t, ax=ax)
        ax.set_title(title)
        ax.set_aspect("equal")
        ax.axis("off")
    fig.tight_layout()
    fig.savefig("surfaces_n3.png", dpi=120)
    print("\nwrote surfaces_n3.png")


if __name__ == "__main__":
    main()
