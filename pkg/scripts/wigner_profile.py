"""Compare the leading-term W_mm approximation with the direct quadrature.

Prints |z|, the approximation, the direct diagonal integral and its imaginary
residue. Only the shapes are comparable; the absolute scales differ.
"""
import argparse

import numpy as np

from circlestates.wigner import QuadratureSpec, wigner_direct, wigner_mm_approx


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=19)
    ap.add_argument("--radial", type=int, default=64)
    ap.add_argument("--angular", type=int, default=128)
    ap.add_argument("--cutoff", type=int, default=20)
    args = ap.parse_args()
    spec = QuadratureSpec(args.radial, args.angular)
    print("abs_z,wmm_approx,direct,direct_imag")
    for r in np.linspace(0.05, 0.95, args.count):
        d = wigner_direct(float(r), args.cutoff, spec)
        print(f"{r:.4f},{wigner_mm_approx(float(r)).value:.10g},{d.value:.10g},{d.imag:.3e}")


if __name__ == "__main__":
    main()
