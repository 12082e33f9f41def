"""Evaluating the signature and nullity over the torus.

The signature sigma(omega) and nullity eta(omega) of a generalized Seifert
system are the inertia data of H(omega).  This module evaluates single
points, recovers the one-variable (Levine-Tristram) invariants from the
diagonal, scans rectangular grids for the zero locus of det H, and
estimates the minimal nullity over the torus from samples.

Scans exclude the boundary angles 0 and 1 by construction: H vanishes when
a coordinate hits 1, so grid fractions are k/(R+1) for k = 1..R.  Samples
carry |det H| together with the sign of the (real) determinant; the sign
going through zero between neighbouring samples is the discrete trace of
the zero locus, across which the signature is allowed to change.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .ccomplex import GeneralizedSeifertSystem, TorusPoint, assemble_h, h_at_minus_ones
from .hermitian import DEFAULT_TOL, hermitian_signature, integer_symmetric_signature


@dataclass(frozen=True)
class InvariantSample:
    """Invariants of one torus point.

    ``det_sign`` is the sign of the real determinant of H, forced to 0 when
    the sample is flagged as a potential zero of the torsion polynomial
    (positive nullity, or |det| at most the det-zero threshold).
    """

    omega: TorusPoint
    sigma: int
    eta: int
    abs_det: float
    det_sign: int

    @property
    def near_zero(self) -> bool:
        return self.det_sign == 0


@dataclass(frozen=True)
class ScanGrid:
    """Row-major grid of samples at fractions k/(resolution+1), k = 1..R."""

    resolution: int
    mu: int
    samples: tuple[InvariantSample, ...]

    @property
    def min_eta(self) -> int:
        return min(sample.eta for sample in self.samples)

    @property
    def near_zero_count(self) -> int:
        return sum(1 for sample in self.samples if sample.near_zero)

    def lines(self):
        """Yield every full row and column of sample indices, row-major."""
        r = self.resolution
        if self.mu == 1:
            yield list(range(r))
            return
        shape = (r,) * self.mu
        strides = [int(np.prod(shape[k + 1:])) for k in range(self.mu)]
        for axis in range(self.mu):
            fixed_axes = [k for k in range(self.mu) if k != axis]
            for fixed in itertools.product(range(r), repeat=self.mu - 1):
                base = sum(f * strides[k] for f, k in zip(fixed, fixed_axes))
                yield [base + t * strides[axis] for t in range(r)]


def _sample(gss: GeneralizedSeifertSystem, omega: TorusPoint, tol: float) -> InvariantSample:
    h = assemble_h(gss, omega)
    n = gss.rank
    if n == 0:
        return InvariantSample(omega, 0, 0, 1.0, 1)

    if omega.is_minus_ones():
        result = integer_symmetric_signature(h_at_minus_ones(gss))
    else:
        result = hermitian_signature(h, tol)

    determinant = complex(np.linalg.det(h)).real
    scale = max(1.0, float(np.abs(h).max()))
    threshold = (tol * scale) ** n
    if result.nullity > 0 or abs(determinant) <= threshold:
        sign = 0
    else:
        sign = 1 if determinant > 0 else -1
    return InvariantSample(omega, result.signature, result.nullity, abs(determinant), sign)


def signature_nullity(
    gss: GeneralizedSeifertSystem, omega: TorusPoint, tol: float = DEFAULT_TOL
) -> tuple[int, int]:
    """(sigma, eta) at one torus point.

    Uses the exact integer path when every coordinate fraction is 1/2,
    floating-point classification elsewhere.
    """
    sample = _sample(gss, omega, tol)
    return sample.sigma, sample.eta


def lt_signature_from_multivariable(
    gss: GeneralizedSeifertSystem, omega_scalar, tol: float = DEFAULT_TOL
) -> tuple[int, int]:
    """Levine-Tristram invariants of the underlying ordered link.

    Evaluates the diagonal point (omega, ..., omega) and subtracts the
    total linking number between colors from the signature; the nullity is
    the diagonal nullity unchanged.  Requires linking data when mu > 1.
    """
    q = Fraction(omega_scalar)
    point = TorusPoint.diagonal(q, gss.mu)
    sigma, eta = signature_nullity(gss, point, tol)
    if gss.mu == 1:
        return sigma, eta
    return sigma - gss.total_linking(), eta


def torus_scan(
    gss: GeneralizedSeifertSystem, resolution: int, tol: float = DEFAULT_TOL
) -> ScanGrid:
    """Sample sigma, eta and |det H| on the full R^mu grid, row-major."""
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    fractions = [Fraction(k, resolution + 1) for k in range(1, resolution + 1)]
    samples = []
    for combo in itertools.product(fractions, repeat=gss.mu):
        samples.append(_sample(gss, TorusPoint(combo), tol))
    return ScanGrid(resolution=resolution, mu=gss.mu, samples=tuple(samples))


def estimate_beta(
    gss: GeneralizedSeifertSystem, samples: Sequence[TorusPoint], tol: float = DEFAULT_TOL
) -> int:
    """Minimum sampled nullity: an upper bound for the minimal nullity.

    The true minimum over the whole torus (the rank of the Alexander
    module) can only be smaller, so rank-obstruction bounds computed from
    this estimate stay valid, merely possibly weaker.
    """
    points = list(samples)
    if not points:
        raise ValueError("at least one sample point is required")
    return min(signature_nullity(gss, omega, tol)[1] for omega in points)


def undetected_sigma_jumps(grid: ScanGrid) -> list[tuple[int, int]]:
    """Pairs of adjacent samples where sigma changes with no sign of a zero.

    A signature change between neighbours is legitimate only when the
    determinant crossed zero on the way: one endpoint flagged near-zero or
    the real determinant changing sign.  Anything else is returned.
    """
    bad = []
    for line in grid.lines():
        for left, right in zip(line, line[1:]):
            a, b = grid.samples[left], grid.samples[right]
            if a.sigma != b.sigma and a.det_sign * b.det_sign > 0:
                bad.append((left, right))
    return bad


def scan_to_csv(grid: ScanGrid) -> str:
    """Render a scan as CSV, angles in decimal with 12 significant digits."""
    header = ",".join(f"theta_{i + 1}" for i in range(grid.mu)) + ",sigma,eta,absdet"
    rows = [header]
    for sample in grid.samples:
        angles = ",".join(f"{float(q):.12g}" for q in sample.omega.fractions)
        rows.append(f"{angles},{sample.sigma},{sample.eta},{sample.abs_det:.12g}")
    return "\n".join(rows) + "\n"


def write_scan_csv(grid: ScanGrid, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(scan_to_csv(grid))
