"""State families: GHZ, W, linear cluster, GHZ-diagonal and noisy mixtures."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .tensor import DensityOperator, PureState, ValidationError


def from_amplitudes(dims: Sequence[int], amplitudes) -> PureState:
    return PureState(np.asarray(amplitudes, dtype=complex), tuple(dims))


def basis_state(bits: Sequence[int], dims: Sequence[int] | None = None) -> PureState:
    dims = tuple(dims) if dims is not None else (2,) * len(bits)
    amps = np.zeros(int(np.prod(dims)), dtype=complex)
    amps[np.ravel_multi_index(tuple(bits), dims)] = 1.0
    return PureState(amps, dims)


def ghz(n: int, relative_phase: float = 0.0, pattern: Sequence[int] | None = None) -> PureState:
    """``(|x> + e^{i theta}|x_bar>)/sqrt(2)`` on ``n`` qubits, ``x`` = ``pattern``."""
    if n < 2:
        raise ValidationError(f"GHZ state needs n >= 2 parties, got {n}")
    x = np.zeros(n, dtype=int) if pattern is None else np.asarray(pattern, dtype=int)
    if x.shape != (n,) or np.any((x != 0) & (x != 1)):
        raise ValidationError(f"flip pattern must be {n} bits, got {pattern!r}")
    dims = (2,) * n
    amps = np.zeros(2**n, dtype=complex)
    amps[np.ravel_multi_index(tuple(x), dims)] += 1 / np.sqrt(2)
    amps[np.ravel_multi_index(tuple(1 - x), dims)] += np.exp(1j * relative_phase) / np.sqrt(2)
    return PureState(amps, dims)


def ghz_basis(n: int) -> list[PureState]:
    """The ``2**n`` GHZ-basis states.

    Ordered by flip pattern (first bit 0, ascending) and, within a pattern,
    phase ``+`` before ``-``.
    """
    if n < 2:
        raise ValidationError(f"GHZ basis needs n >= 2 parties, got {n}")
    out = []
    for k in range(2 ** (n - 1)):
        pattern = [int(b) for b in format(k, f"0{n}b")]
        out.append(ghz(n, 0.0, pattern))
        out.append(ghz(n, np.pi, pattern))
    return out


def w_state(n: int) -> PureState:
    if n < 2:
        raise ValidationError(f"W state needs n >= 2 parties, got {n}")
    amps = np.zeros(2**n, dtype=complex)
    for k in range(n):
        amps[1 << k] = 1.0
    return PureState(amps / np.sqrt(n), (2,) * n)


def linear_cluster(n: int) -> PureState:
    """|+>^n followed by controlled-phase gates on neighbours (1,2), ..., (n-1,n)."""
    if n < 2:
        raise ValidationError(f"linear cluster needs n >= 2 parties, got {n}")
    bits = (np.arange(2**n)[:, None] >> np.arange(n - 1, -1, -1)) & 1
    # CZ on (i, i+1) contributes a -1 when both bits are set
    sign = (-1.0) ** np.sum(bits[:, :-1] & bits[:, 1:], axis=1)
    return PureState(sign / np.sqrt(2**n), (2,) * n)


def ghz_diagonal(probs) -> DensityOperator:
    """Mixture of GHZ-basis projectors weighted by ``probs`` (in :func:`ghz_basis` order)."""
    p = np.asarray(probs, dtype=float)
    n = int(round(np.log2(p.size)))
    if p.ndim != 1 or 2**n != p.size or n < 2:
        raise ValidationError(f"need 2**n weights with n >= 2, got {p.size}")
    if np.any(p < 0) or abs(p.sum() - 1) > 1e-9:
        raise ValidationError("GHZ-diagonal weights must be non-negative and sum to 1")
    basis = np.stack([s.amplitudes for s in ghz_basis(n)], axis=1)
    return DensityOperator((basis * p) @ basis.conj().T, (2,) * n)


def white_noise_mix(psi: PureState, p: float) -> DensityOperator:
    """``p |psi><psi| + (1 - p) 1/d``."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"mixing weight must lie in [0, 1], got {p}")
    d = psi.dim
    return DensityOperator(p * psi.projector() + (1 - p) * np.eye(d) / d, psi.dims)


def product_state(dims: Sequence[int]) -> PureState:
    return basis_state([0] * len(dims), dims)


def random_pure(dims: Sequence[int], rng: np.random.Generator) -> PureState:
    """Haar-random pure state."""
    d = int(np.prod(dims))
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureState(z / np.linalg.norm(z), tuple(dims))


def random_density(dims: Sequence[int], rank: int, rng: np.random.Generator) -> DensityOperator:
    """Random mixed state of the given rank (induced Hilbert-Schmidt measure)."""
    d = int(np.prod(dims))
    if not 1 <= rank <= d:
        raise ValidationError(f"rank must lie in [1, {d}], got {rank}")
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    return DensityOperator(m / np.trace(m).real, tuple(dims))
