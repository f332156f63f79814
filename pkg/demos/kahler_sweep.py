"""Sample Lefschetz candidates on the bundle ring and report PD/HL/HR.

For each choice of the Chern-class convention (identity or negation) this
builds the bundle ring over the permutohedral base, then tests Poincare
duality once and Hard Lefschetz plus Hodge-Riemann at a deterministic
schedule of candidates s*h + t*zeta.  Everything is exact rational
arithmetic, so a pass is a proof for that instance.

Run: python3 demos/kahler_sweep.py
"""

from chowfans.kahler import (matroid_bundle_model,
                             restricted_multi_bundle_model,
                             sample_lefschetz_candidates)
from chowfans.matroid import matroid_uniform


def main():
    N = 3
    M = matroid_uniform(2, 3)
    for phi in ("identity", "negation"):
        B, h, zetas = matroid_bundle_model(N, M, phi=phi)
        print("phi =", phi)
        for rep in sample_lefschetz_candidates(B, h, zetas, samples=4):
            print("  s=%s t=%s flipped=%s pd=%s hl=%s hr=%s"
                  % (rep["s"], rep["t"], rep["flipped"],
                     rep["pd"], rep["hl"], rep["hr"]))

    print()
    print("two rank-2 bundles over the Bergman fan of the same matroid:")
    model, h, zetas = restricted_multi_bundle_model(M, [M, M])
    for rep in sample_lefschetz_candidates(model, h, zetas, samples=3):
        print("  s=%s t=%s pd=%s hl=%s hr=%s"
              % (rep["s"], rep["t"], rep["pd"], rep["hl"], rep["hr"]))


if __name__ == "__main__":
    main()
