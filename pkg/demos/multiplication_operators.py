"""Multiplication operators on l^p inherit the verdict of their symbol.

The operator M_h is a zero divisor, a topological divisor, or regular
exactly when the symbol h is, and the exponent p plays no role.  This
script classifies one symbol across several exponents, then watches the
finite-section norms climb to the operator norm and samples the star
inequality that links a witness to its Gram product.
"""

import argparse
import math

from tdzcert import (
    CountingN,
    DecayingTail,
    EventuallyPeriodic,
    MeasurableFn,
    MultOperator,
    MultOperatorSpec,
    decide_tdz_mult,
    finite_section_mult,
    mult_operator_norm,
    operator_norm,
    star_tdz_inequality_check,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sections", type=int, default=8, help="largest finite section to print"
    )
    args = parser.parse_args()

    h = MeasurableFn(CountingN(), EventuallyPeriodic((0.3, 2.0), (0.5, 1.5)))
    norm = mult_operator_norm(MultOperator(h))
    for p in (1.0, 2.0, math.inf):
        verdict = decide_tdz_mult(MultOperatorSpec(h, p))
        print(
            f"p = {p}: norm {norm:.4f}, "
            f"tdz {verdict.is_tdz}, regular {verdict.is_regular}"
        )

    # Sections are diagonal truncations; their norms increase to the
    # essential sup once the section reaches the periodic part.
    op = MultOperatorSpec(h, 2.0)
    print("\n n   section norm")
    for n in range(1, args.sections + 1):
        section = finite_section_mult(op, n)
        print(f"{n:2d}   {operator_norm(section):.6f}")

    # A symbol sliding to zero makes M_h a TDZ; its witnesses also
    # certify the star inequality through the Gram product.
    sliding = MultOperatorSpec(MeasurableFn(CountingN(), DecayingTail((), 1.0)), 2.0)
    verdict = decide_tdz_mult(sliding)
    section = finite_section_mult(sliding, 12)
    sections = [
        finite_section_mult(MultOperatorSpec(verdict.certificate.generator(n).symbol, 2.0), 12)
        for n in (1, 2, 3)
    ]
    report = star_tdz_inequality_check(section, sections)
    print("\nstar inequality samples (product norm, gram product norm):")
    for s in report.samples:
        print(f"  ({s.product_norm:.6f}, {s.gram_product_norm:.6f})")
    print(f"inequality holds for all samples: {report.passes}")


if __name__ == "__main__":
    main()
