"""Fidelity-based lower bounds on genuine multipartite entanglement measures.

Everything is driven by the renormalized fidelity
``S = max(<phi|rho|phi> / s1', 1)``, where ``s1'`` is the largest squared
Schmidt coefficient of the reference state ``phi`` over all bipartitions.

The dimension parameter ``m'`` defaults to the largest smaller-side
dimension over all bipartitions. The maximal Schmidt rank of ``phi`` is
kept as ``m_prime_rank`` for diagnostics only: the bounds must dominate the
Schmidt ranks of every state in a decomposition of ``rho``, not just of
``phi``, so substituting the rank can overstate them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .tensor import (
    Bipartition,
    DensityOperator,
    PureState,
    SchmidtSpectrum,
    ValidationError,
    fidelity_pure,
    schmidt_scan,
)

MEASURES = ("cren", "concurrence", "gconcurrence", "geometric")
_RANGE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PhiProfile:
    s1_prime: float
    m_prime: int
    m_prime_rank: int
    spectra: dict[Bipartition, SchmidtSpectrum] = field(repr=False)

    def to_dict(self, top_k: int | None = None) -> dict:
        cuts = []
        for cut, spec in self.spectra.items():
            coeffs = spec.coeffs_sq if top_k is None else spec.coeffs_sq[:top_k]
            cuts.append({
                "bipartition": cut.label(),
                "d_alpha": cut.d_alpha,
                "d_alphabar": cut.d_alphabar,
                "rank": spec.rank,
                "coeffs_sq": [float(c) for c in coeffs],
            })
        return {
            "s1_prime": self.s1_prime,
            "m_prime": self.m_prime,
            "m_prime_rank": self.m_prime_rank,
            "bipartitions": cuts,
        }


def profile_phi(phi: PureState, workers: int = 1) -> PhiProfile:
    """Scan every bipartition of ``phi`` for ``s1'`` and ``m'``."""
    if phi.num_parties < 2:
        raise ValidationError("profile needs a state of at least two parties")
    spectra = schmidt_scan(phi, workers=workers)
    s1 = max(s.largest for s in spectra.values())
    m_dim = max(min(c.d_alpha, c.d_alphabar) for c in spectra)
    m_rank = max(s.rank for s in spectra.values())
    return PhiProfile(float(s1), int(m_dim), int(m_rank), spectra)


def s_value(fidelity: float, s1_prime: float) -> float:
    if not -_RANGE_TOL <= fidelity <= 1 + _RANGE_TOL:
        raise ValidationError(f"fidelity must lie in [0, 1], got {fidelity}")
    if not 0 < s1_prime <= 1 + _RANGE_TOL:
        raise ValidationError(f"s1' must lie in (0, 1], got {s1_prime}")
    return max(fidelity / s1_prime, 1.0)


def cren_lb(S: float) -> float:
    return S - 1.0


def concurrence_lb(S: float, m_prime: int) -> float:
    if m_prime < 2:
        raise ValidationError(f"m' must be >= 2, got {m_prime}")
    return float(np.sqrt(2.0 / (m_prime * (m_prime - 1))) * (S - 1.0))


def gconcurrence_lb(S: float, m_prime: int, clamp: bool = True) -> float:
    raw = 1.0 - m_prime + S
    return max(raw, 0.0) if clamp else raw


def gamma(S: float, m: int) -> float:
    """``[sqrt(S) + sqrt((m-1)(m-S))]^2 / m^2`` for ``1 <= S <= m``.

    Equals 1 at ``S = 1`` and ``1/m`` at ``S = m``; decreasing in between.
    """
    if m < 2:
        raise ValidationError(f"m must be >= 2, got {m}")
    if not 1 - _RANGE_TOL <= S <= m * (1 + _RANGE_TOL):
        raise ValidationError(f"S must lie in [1, {m}], got {S}")
    if S == 1.0:
        return 1.0
    if S == m:
        return 1.0 / m
    return float((np.sqrt(S) + np.sqrt((m - 1) * max(m - S, 0.0))) ** 2 / m**2)


def geometric_lb(S: float, m_prime: int) -> float:
    return 1.0 - gamma(S, m_prime)


def gme_witness_value(rho: DensityOperator, phi: PureState, profile: PhiProfile | None = None) -> float:
    """``Tr(W rho)`` for ``W = s1' 1 - |phi><phi|``; negative means GME is detected."""
    profile = profile or profile_phi(phi)
    return profile.s1_prime - fidelity_pure(rho, phi)


@dataclass(frozen=True)
class GmeBoundReport:
    fidelity: float
    s1_prime: float
    m_prime: int
    S: float
    bounds: dict[str, float]
    raw: dict[str, float]
    clamped: dict[str, bool]
    witness_value: float
    S_interval: tuple[float, float] | None = None

    def to_dict(self) -> dict:
        out = {
            "fidelity": self.fidelity,
            "s1_prime": self.s1_prime,
            "m_prime": self.m_prime,
            "S": self.S,
            "witness_value": self.witness_value,
            "bounds": dict(self.bounds),
            "raw": dict(self.raw),
            "clamped": dict(self.clamped),
        }
        if self.S_interval is not None:
            out["S_interval"] = list(self.S_interval)
        return out


def bounds_from_s(S: float, m_prime: int) -> dict[str, float]:
    """Unclamped value of each bound at a given ``S``."""
    return {
        "cren": cren_lb(S),
        "concurrence": concurrence_lb(S, m_prime),
        "gconcurrence": gconcurrence_lb(S, m_prime, clamp=False),
        "geometric": geometric_lb(S, m_prime),
    }


def bounds_from_fidelity(fidelity: float, profile: PhiProfile, sigma: float | None = None) -> GmeBoundReport:
    """All GME bounds from a fidelity with ``phi``, or any lower bound on it.

    The bounds are non-decreasing in the fidelity, so a certified lower
    bound on ``<phi|rho|phi>`` still gives valid bounds. ``sigma``, if
    given, adds the interval of ``S`` for ``fidelity -/+ sigma``.
    """
    S = s_value(fidelity, profile.s1_prime)
    raw = bounds_from_s(S, profile.m_prime)
    bounds = {k: max(v, 0.0) for k, v in raw.items()}
    clamped = {k: bool(v < 0.0) for k, v in raw.items()}
    interval = None
    if sigma is not None:
        lo = s_value(min(max(fidelity - sigma, 0.0), 1.0), profile.s1_prime)
        hi = s_value(min(max(fidelity + sigma, 0.0), 1.0), profile.s1_prime)
        interval = (lo, hi)
    return GmeBoundReport(
        fidelity=float(fidelity),
        s1_prime=profile.s1_prime,
        m_prime=profile.m_prime,
        S=S,
        bounds=bounds,
        raw=raw,
        clamped=clamped,
        witness_value=profile.s1_prime - fidelity,
        S_interval=interval,
    )


def gme_bounds(rho: DensityOperator, phi: PureState, profile: PhiProfile | None = None) -> GmeBoundReport:
    profile = profile or profile_phi(phi)
    return bounds_from_fidelity(fidelity_pure(rho, phi), profile)
