"""Dense complex matrices: finite sections of operators, and their norms.

Only the largest singular value is ever needed (operator norm on the
section); no further spectral decomposition is provided.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificates import DEFAULT_TOL, Tolerances
from .errors import InputError, NumericError

__all__ = [
    "OperatorMatrix",
    "StarInequalityReport",
    "StarInequalitySample",
    "operator_norm",
    "star_tdz_inequality_check",
]

# Below this size the norm is computed by direct SVD; above it, by power
# iteration on the Gram matrix with a deterministic all-ones start.
_DIRECT_SVD_LIMIT = 64
_POWER_MAX_ITER = 10_000


@dataclass(frozen=True)
class OperatorMatrix:
    """Immutable dense complex matrix with shape bookkeeping."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.ndim != 2:
            raise InputError("operator matrix must be two-dimensional")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise InputError("operator matrix entries must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def adjoint(self) -> "OperatorMatrix":
        return OperatorMatrix(self.entries.conj().T)

    def __mul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError(
                f"shape mismatch: ({self.rows}x{self.cols}) @ "
                f"({other.rows}x{other.cols})"
            )
        return OperatorMatrix(self.entries @ other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if self.entries.shape != other.entries.shape:
            raise InputError("shape mismatch in matrix subtraction")
        return OperatorMatrix(self.entries - other.entries)

    @staticmethod
    def identity(n: int) -> "OperatorMatrix":
        return OperatorMatrix(np.eye(n, dtype=complex))

    @staticmethod
    def diagonal(values) -> "OperatorMatrix":
        return OperatorMatrix(np.diag(np.asarray(values, dtype=complex)))


def operator_norm(m: OperatorMatrix, tol: Tolerances = DEFAULT_TOL) -> float:
    """Largest singular value of ``m`` to relative accuracy ``eps_norm``.

    Small matrices use a direct decomposition.  Larger ones use power
    iteration on the Gram matrix, started from the normalized all-ones
    vector so repeated runs are bit-for-bit reproducible; failure to
    converge within the iteration cap raises ``NumericError`` carrying
    the last iterate.
    """
    a = m.entries
    if min(a.shape) == 0:
        return 0.0
    if max(a.shape) <= _DIRECT_SVD_LIMIT:
        return float(np.linalg.svd(a, compute_uv=False)[0])

    gram = a.conj().T @ a
    v = np.ones(gram.shape[0], dtype=complex)
    v /= np.linalg.norm(v)
    if np.linalg.norm(gram @ v) <= 1e-30 * np.abs(gram).max():
        # The all-ones start lies in the kernel (rows summing to zero do
        # this); fall back to a seeded start, still reproducible.
        rng = np.random.default_rng(0)
        v = rng.standard_normal(gram.shape[0]) + 1j * rng.standard_normal(gram.shape[0])
        v /= np.linalg.norm(v)
    for _ in range(_POWER_MAX_ITER):
        w = gram @ v
        rho = float(np.real(np.vdot(v, w)))
        if rho <= 0.0:
            # Gram matrices are positive semidefinite, so a vanishing
            # Rayleigh quotient on a generic vector means a zero matrix.
            return 0.0
        # For Hermitian matrices the residual bounds the distance from
        # rho to the eigenvalue the iteration converges to.
        if float(np.linalg.norm(w - rho * v)) <= 0.5 * tol.eps_norm * rho:
            return float(np.sqrt(rho))
        v = w / np.linalg.norm(w)
    raise NumericError(
        f"power iteration did not converge within {_POWER_MAX_ITER} iterations",
        last_iterate=v,
    )


@dataclass(frozen=True)
class StarInequalitySample:
    witness_norm: float
    product_norm: float
    gram_product_norm: float
    inequality_holds: bool
    adjoint_symmetric: bool


@dataclass(frozen=True)
class StarInequalityReport:
    passes: bool
    samples: tuple[StarInequalitySample, ...]

    def to_dict(self) -> dict:
        return {
            "passes": self.passes,
            "samples": [
                {
                    "witness_norm": s.witness_norm,
                    "product_norm": s.product_norm,
                    "gram_product_norm": s.gram_product_norm,
                    "inequality_holds": s.inequality_holds,
                    "adjoint_symmetric": s.adjoint_symmetric,
                }
                for s in self.samples
            ],
        }


def star_tdz_inequality_check(
    t: OperatorMatrix,
    witnesses: list[OperatorMatrix],
    tol: Tolerances = DEFAULT_TOL,
) -> StarInequalityReport:
    """Check ``|T Tn|^2 <= |T*T Tn| |Tn| + eps`` and adjoint norm symmetry.

    The first inequality is the Cauchy-Schwarz step that transfers TDZ
    witnesses between ``T`` and the Gram operator ``T*T``; the second is
    the norm identity ``|(T Tn)*| = |T Tn|`` that swaps witness sides
    under adjoints.  Each witness must have operator norm 1 within
    ``eps_norm``.
    """
    tstar = t.adjoint()
    samples = []
    for tn in witnesses:
        if t.cols != tn.rows:
            raise InputError(
                f"witness shape ({tn.rows}x{tn.cols}) not conformable with "
                f"({t.rows}x{t.cols})"
            )
        wn = operator_norm(tn, tol)
        if abs(wn - 1.0) > tol.eps_norm:
            raise InputError(f"witness norm {wn} is not 1 within eps_norm")
        ttn = t * tn
        prod = operator_norm(ttn, tol)
        gram_prod = operator_norm(tstar * ttn, tol)
        ineq = prod**2 <= gram_prod * wn + tol.eps_norm
        adj = abs(operator_norm(ttn.adjoint(), tol) - prod) <= tol.eps_norm
        samples.append(
            StarInequalitySample(
                witness_norm=wn,
                product_norm=prod,
                gram_product_norm=gram_prod,
                inequality_holds=ineq,
                adjoint_symmetric=adj,
            )
        )
    return StarInequalityReport(
        passes=all(s.inequality_holds and s.adjoint_symmetric for s in samples),
        samples=tuple(samples),
    )
