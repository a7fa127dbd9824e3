"""Classify polynomials on the closed unit disk and check witness decay.

A polynomial with a root on the unit circle admits norm-one peak
functions that it flattens; one with no boundary root is bounded below
on the circle and therefore regular.  This script classifies a few
hand-picked polynomials, then tabulates the measured decay of the peak
witnesses against the closed-form value.
"""

import argparse
import math

from tdzcert import (
    CirclePolynomial,
    decide_tdz_disk,
    peak_witness,
    sup_norm_on_circle,
    verify_certificate,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-witness", type=int, default=20, help="largest witness index to tabulate"
    )
    args = parser.parse_args()

    samples = {
        "(z - 1)/2": CirclePolynomial([-0.5, 0.5]),
        "(z - 2)/2": CirclePolynomial([-1.0, 0.5]),
        "z(z - 2)": CirclePolynomial([0.0, -2.0, 1.0]),
        "(z - 1)(z - i)": CirclePolynomial([1.0j, -1.0 - 1.0j, 1.0]),
    }
    for label, f in samples.items():
        verdict = decide_tdz_disk(f)
        kind = "TDZ" if verdict.is_tdz else ("regular" if verdict.is_regular else "singular")
        print(f"{label:16s} -> {kind}")
        if verdict.certificate is not None and verdict.is_tdz:
            report = verify_certificate(f, verdict.certificate, sup_norm_on_circle)
            print(f"{'':16s}    witness check passes: {report.passes}")
        elif verdict.certificate is not None:
            print(f"{'':16s}    lower bound on the circle: {verdict.certificate.lambda0:.6f}")

    # The n-th witness for a simple boundary zero decays like 1/sqrt(n).
    f = samples["(z - 1)/2"]
    print("\n n   measured |f fn|   closed form")
    for n in range(1, args.max_witness + 1):
        fn = peak_witness(1.0, n)
        measured = sup_norm_on_circle(f * fn)
        closed = (1 / math.sqrt(n + 1)) * (n / (n + 1)) ** (n / 2)
        print(f"{n:2d}   {measured:.12f}   {closed:.12f}")


if __name__ == "__main__":
    main()
