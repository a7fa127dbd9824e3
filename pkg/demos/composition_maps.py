"""Composition operators on l^p driven by self-maps of the integers.

The operator (C_phi x)(n) = x(phi(n)) fails injectivity or surjectivity
of phi in a way the divisor flags track exactly: a collision of phi
yields a right annihilator, a missed value yields a left one, and a
bijective phi leaves the operator regular.  On l^2 the adjoint identity
C* C = M_RN holds block by block once the map stabilizes, with RN the
counting density of preimages.
"""

import argparse

from tdzcert import (
    CompositionOperatorSpec,
    Divide,
    SelfMapN,
    Shift,
    adjoint_rn_check,
    composition_norm,
    divisor_status,
    map_properties,
)


def describe(label, phi, p):
    spec = CompositionOperatorSpec(phi, p)
    props = map_properties(phi)
    verdict = divisor_status(spec)
    print(f"{label}")
    print(
        f"  injective {props.injective}, surjective {props.surjective}, "
        f"norm {composition_norm(spec):.4f}"
    )
    print(
        f"  left zd {verdict.is_left_zero_divisor.name}, "
        f"right zd {verdict.is_right_zero_divisor.name}, "
        f"tdz {verdict.is_tdz}, regular {verdict.is_regular}"
    )
    for cert in verdict.all_certificates:
        if cert.description:
            print(f"  certificate: {cert.description}")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=float, default=2.0, help="exponent of the l^p space")
    parser.add_argument(
        "--section", type=int, default=16, help="section size for the adjoint identity"
    )
    args = parser.parse_args()

    shift = SelfMapN((), Shift(1))
    halve = SelfMapN((), Divide(2))
    merge = SelfMapN((1,), Shift(-1))
    swap = SelfMapN((2, 1), Shift(0))

    describe("phi(n) = n + 1 (misses 1)", shift, args.p)
    describe("phi(n) = ceil(n / 2) (collides)", halve, args.p)
    describe("phi = 1, 1, 2, 3, ... (collides and misses nothing)", merge, args.p)
    describe("phi swaps 1 and 2 (bijective)", swap, args.p)

    # On l^2 the Gram matrix of a section equals multiplication by the
    # preimage-count density on the stabilized block.
    for label, phi in (("shift", shift), ("halve", halve), ("merge", merge)):
        report = adjoint_rn_check(CompositionOperatorSpec(phi, 2.0), args.section)
        print(
            f"{label}: stabilized block {report.block}, "
            f"max difference {report.max_block_difference:.1e}, "
            f"section norm {report.section_norm:.6f}, "
            f"formula norm {report.formula_norm:.6f}"
        )
        print(
            f"  operator tdz {report.operator_is_tdz}, density tdz {report.rn_is_tdz}, "
            f"routes agree {report.tdz_routes_agree}"
        )


if __name__ == "__main__":
    main()
