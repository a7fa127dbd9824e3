"""Trichotomy for multipliers on atomic measure spaces.

Three representative bounded functions on the counting measure space:
one that attains zero (a zero divisor with an exact annihilator), one
that approaches zero without attaining it (a topological divisor with
shrinking-support witnesses), and one bounded away from zero (regular,
with an explicit inverse).  Each certificate is re-verified by the
numerical harness.
"""

import argparse

from tdzcert import (
    CountingN,
    DecayingTail,
    EventuallyPeriodic,
    MeasurableFn,
    decide_tdz_linf,
    decide_zero_divisor_linf,
    essential_stats,
    linf_norm,
    pointwise_product,
    spectrum_mult,
    verify_certificate,
)


def classify(label, f, n_witness):
    verdict = decide_tdz_linf(f)
    zd = decide_zero_divisor_linf(f)
    spectrum = spectrum_mult(f)
    print(f"{label}")
    print(f"  zero divisor: {zd.is_left_zero_divisor.name}, tdz: {verdict.is_tdz}")
    print(f"  zero against the spectrum: {spectrum.zero_class.name}")
    if zd.certificate is not None:
        report = verify_certificate(f, zd.certificate, linf_norm, product=pointwise_product)
        print(f"  annihilator verified: {report.passes}")
    if verdict.certificate is not None and verdict.is_tdz:
        report = verify_certificate(f, verdict.certificate, linf_norm, product=pointwise_product)
        norms = ", ".join(f"{s.product_norm:.4f}" for s in report.samples[:n_witness])
        print(f"  witness product norms: {norms}")
    if verdict.is_regular:
        stats = essential_stats(f)
        report = verify_certificate(
            f,
            verdict.certificate,
            linf_norm,
            min_modulus_estimate=stats.min_modulus,
        )
        print(f"  regularity bound {verdict.certificate.lambda0} verified: {report.passes}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--witnesses", type=int, default=6, help="how many witness norms to print"
    )
    args = parser.parse_args()

    attains_zero = MeasurableFn(CountingN(), EventuallyPeriodic((1.0, 0.0), (2.0,)))
    tail_to_zero = MeasurableFn(CountingN(), DecayingTail((), 1.0))
    bounded_below = MeasurableFn(CountingN(), EventuallyPeriodic((), (2.0, 3.0)))

    classify("h(n) with h(2) = 0, elsewhere >= 1", attains_zero, args.witnesses)
    classify("h(n) = 1/n", tail_to_zero, args.witnesses)
    classify("h alternating 2, 3", bounded_below, args.witnesses)


if __name__ == "__main__":
    main()
