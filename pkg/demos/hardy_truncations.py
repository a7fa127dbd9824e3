"""Composition operators on truncated power series.

Composing with a polynomial symbol that maps the closed disk into
itself acts on coefficient vectors as an N x N matrix.  A constant
symbol collapses everything onto the constants (annihilators on both
sides), the monomial z^k leaves every coefficient index not divisible
by k unreachable (a right annihilator), and a symbol with a dominant
linear term keeps every truncation comfortably full rank.
"""

import argparse
import warnings

import numpy as np

from tdzcert import (
    CirclePolynomial,
    PolySymbol,
    composition_matrix,
    compose_series,
    constant_symbol_certificates,
    monomial_right_annihilator,
    operator_norm,
    right_zero_divisor_finite,
    TruncatedSeries,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=8, help="truncation order N")
    args = parser.parse_args()
    n = args.order

    # Composition with z/2 contracts coefficients geometrically.
    half = PolySymbol(CirclePolynomial([0.0, 0.5]))
    series = TruncatedSeries((1.0, 1.0, 1.0, 1.0), n)
    print("(1 + z + z^2 + z^3) o (z/2):", compose_series(series, half, n).coeffs[:4])

    matrix = composition_matrix(half, n)
    print(f"matrix norm at order {n}: {operator_norm(matrix):.6f}")

    # Constant symbol: both one-sided annihilators, products exactly 0.
    certs = constant_symbol_certificates(0.5, n)
    c = composition_matrix(PolySymbol(CirclePolynomial([0.5])), n)
    left_product = c * certs.left.element
    right_product = certs.right.element * c
    print(
        "constant symbol products:",
        np.max(np.abs(left_product.entries)),
        np.max(np.abs(right_product.entries)),
    )

    # Monomial z^2: coefficients at odd indices above 1 are unreachable.
    ann = monomial_right_annihilator(2, n)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # |z^2| touches the boundary
        c = composition_matrix(PolySymbol(CirclePolynomial([0.0, 0.0, 1.0])), n)
    print("monomial annihilator product:", np.max(np.abs((ann.element * c).entries)))

    # Dominant linear coefficient: every truncation stays full rank, so
    # the finite search finds no annihilator.
    healthy = PolySymbol(CirclePolynomial([0.02, 0.6, 0.03]))
    for order in (2, 4, n):
        m = composition_matrix(healthy, order)
        sigma_min = np.linalg.svd(m.entries, compute_uv=False)[-1]
        found = right_zero_divisor_finite(m)
        print(f"order {order}: sigma_min {sigma_min:.3e}, annihilator found: {found is not None}")


if __name__ == "__main__":
    main()
