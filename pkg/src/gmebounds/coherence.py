"""Fidelity-based lower bounds on coherence measures.

Coherence is basis dependent. Functions taking ``basis`` expect a unitary
whose columns are the reference basis vectors; ``None`` means the
computational product basis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gme import gamma
from .tensor import DensityOperator, PureState, ValidationError, fidelity_pure

MEASURES = ("l1", "geometric", "formation")
_RANGE_TOL = 1e-12


def basis_amplitudes(phi: PureState, basis: np.ndarray | None = None) -> np.ndarray:
    if basis is None:
        return phi.amplitudes
    u = np.asarray(basis, dtype=complex)
    if u.shape != (phi.dim, phi.dim):
        raise ValidationError(f"basis must be {phi.dim}x{phi.dim}, got {u.shape}")
    if np.max(np.abs(u.conj().T @ u - np.eye(phi.dim))) > 1e-9:
        raise ValidationError("basis matrix is not unitary")
    return u.conj().T @ phi.amplitudes


@dataclass(frozen=True)
class CoherenceProfile:
    d_max_sq: float
    m: int


def coherence_profile(phi: PureState, basis: np.ndarray | None = None) -> CoherenceProfile:
    d = basis_amplitudes(phi, basis)
    return CoherenceProfile(float(np.max(np.abs(d) ** 2)), int(d.size))


def d_value(fidelity: float, d_max_sq: float) -> float:
    if not -_RANGE_TOL <= fidelity <= 1 + _RANGE_TOL:
        raise ValidationError(f"fidelity must lie in [0, 1], got {fidelity}")
    if not 0 < d_max_sq <= 1 + _RANGE_TOL:
        raise ValidationError(f"|d_max|^2 must lie in (0, 1], got {d_max_sq}")
    return max(fidelity / d_max_sq, 1.0)


def l1_lb(D: float) -> float:
    return D - 1.0


def geom_coherence_lb(D: float, m: int) -> float:
    return 1.0 - gamma(D, m)


def binary_entropy(x: float) -> float:
    if not 0.0 <= x <= 1.0:
        raise ValidationError(f"binary entropy argument must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def formation_branch(D: float, m: int) -> int:
    """1 on ``[1, 4(m-1)/m]``, 2 above. For ``m = 2`` always 1."""
    if m < 2:
        raise ValidationError(f"m must be >= 2, got {m}")
    if D > m * (1 + _RANGE_TOL):
        raise ValidationError(f"D = {D} exceeds the dimension {m}; fidelity inconsistent with |d_max|^2")
    if D < 1 - _RANGE_TOL:
        raise ValidationError(f"D must be >= 1, got {D}")
    return 1 if D <= 4 * (m - 1) / m else 2


def formation_lb(D: float, m: int) -> float:
    if formation_branch(D, m) == 1:
        g = min(max(gamma(D, m), 0.0), 1.0)
        return float(binary_entropy(g) + (1 - g) * np.log2(m - 1))
    return float((D - m) * np.log2(m - 1) / (m - 2) + np.log2(m))


def coherence_witness_value(rho: DensityOperator, phi: PureState, profile: CoherenceProfile | None = None,
                            basis: np.ndarray | None = None) -> float:
    """``Tr(W rho)`` for ``W = |d_max|^2 1 - |phi><phi|``; negative certifies coherence."""
    profile = profile or coherence_profile(phi, basis)
    return profile.d_max_sq - fidelity_pure(rho, phi)


@dataclass(frozen=True)
class CoherenceBoundReport:
    fidelity: float
    d_max_sq: float
    m: int
    D: float
    bounds: dict[str, float]
    witness_value: float
    formation_branch: int

    def to_dict(self) -> dict:
        return {
            "fidelity": self.fidelity,
            "d_max_sq": self.d_max_sq,
            "m": self.m,
            "D": self.D,
            "witness_value": self.witness_value,
            "formation_branch": self.formation_branch,
            "bounds": dict(self.bounds),
        }


def coherence_bounds_from_fidelity(fidelity: float, profile: CoherenceProfile) -> CoherenceBoundReport:
    D = d_value(fidelity, profile.d_max_sq)
    bounds = {
        "l1": l1_lb(D),
        "geometric": max(geom_coherence_lb(D, profile.m), 0.0),
        "formation": max(formation_lb(D, profile.m), 0.0),
    }
    return CoherenceBoundReport(
        fidelity=float(fidelity),
        d_max_sq=profile.d_max_sq,
        m=profile.m,
        D=D,
        bounds=bounds,
        witness_value=profile.d_max_sq - fidelity,
        formation_branch=formation_branch(D, profile.m),
    )


def coherence_bounds(rho: DensityOperator, phi: PureState, basis: np.ndarray | None = None) -> CoherenceBoundReport:
    return coherence_bounds_from_fidelity(fidelity_pure(rho, phi), coherence_profile(phi, basis))
