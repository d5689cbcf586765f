"""Brute-force reference values used to check the fidelity bounds.

Pure-state measures are computed from reduced density matrices and partial
transposes, independently of the SVD route used to profile ``phi``.
:func:`convex_roof_upper` samples pure-state decompositions of a mixed state;
any decomposition it finds certifies an upper bound on the convex roof.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from .coherence import basis_amplitudes
from .states import ghz_basis
from .tensor import (
    DensityOperator,
    PureState,
    ValidationError,
    as_bipartition,
    batch_reduced_spectra,
    enumerate_bipartitions,
    fidelity_pure,
    partial_trace,
    partial_transpose,
    trace_norm,
)

GME_MEASURES = ("cren", "concurrence", "gconcurrence", "geometric")
COHERENCE_MEASURES = ("l1", "coherence_geometric", "formation")
EIG_CUTOFF = 1e-10
DUAL_PATH_TOL = 1e-8


def _reduced_eigs(psi: PureState, alpha) -> np.ndarray:
    return batch_reduced_spectra(psi.amplitudes[None, :], as_bipartition(alpha, psi.dims))[0]


def negativity_trace_norm(psi: PureState, alpha) -> float:
    alpha = as_bipartition(alpha, psi.dims)
    return trace_norm(partial_transpose(psi, alpha)) - 1.0


def negativity_schmidt_sum(psi: PureState, alpha) -> float:
    return float(np.sum(np.sqrt(_reduced_eigs(psi, alpha))) ** 2 - 1.0)


def negativity_pure(psi: PureState, alpha) -> float:
    """``||(|psi><psi|)^{T_alpha}||_1 - 1``, evaluated two ways and cross-checked."""
    a = negativity_trace_norm(psi, alpha)
    b = negativity_schmidt_sum(psi, alpha)
    if abs(a - b) > DUAL_PATH_TOL:
        raise ArithmeticError(f"negativity paths disagree: trace norm {a!r} vs Schmidt sum {b!r}")
    return a


def concurrence_pure(psi: PureState, alpha) -> float:
    red = partial_trace(psi, alpha).matrix
    purity = float(np.real(np.trace(red @ red)))
    return float(np.sqrt(max(2.0 * (1.0 - purity), 0.0)))


def gconcurrence_pure(psi: PureState, alpha) -> float:
    """``m det(rho_A)^{1/m}`` on the smaller side of the cut (``m`` its dimension)."""
    alpha = as_bipartition(alpha, psi.dims)
    side = alpha if alpha.d_alpha <= alpha.d_alphabar else alpha.flipped()
    red = partial_trace(psi, side).matrix
    m = red.shape[0]
    det = float(np.real(np.linalg.det(red)))
    return float(m * max(det, 0.0) ** (1.0 / m))


def geometric_pure(psi: PureState, alpha) -> float:
    return float(1.0 - _reduced_eigs(psi, alpha)[0])


_PURE = {
    "cren": negativity_pure,
    "concurrence": concurrence_pure,
    "gconcurrence": gconcurrence_pure,
    "geometric": geometric_pure,
}


def per_cut_values(psi: PureState, measure: str) -> dict[str, float]:
    if measure not in _PURE:
        raise ValidationError(f"unknown GME measure {measure!r}; choose from {GME_MEASURES}")
    return {a.label(): _PURE[measure](psi, a) for a in enumerate_bipartitions(psi.dims)}


def gme_measure_pure(psi: PureState, measure: str) -> float:
    """Minimum of a bipartite pure-state measure over all bipartitions."""
    return min(per_cut_values(psi, measure).values())


def coherence_pure(psi: PureState, measure: str, basis: np.ndarray | None = None) -> float:
    """Pure-state ``l1``, ``geometric`` or ``formation`` coherence in ``basis``."""
    if measure == "geometric":
        measure = "coherence_geometric"
    a = basis_amplitudes(psi, basis)
    return float(_coherence_from_weights((np.abs(a) ** 2)[None, :], measure)[0])


def _coherence_from_weights(w: np.ndarray, measure: str) -> np.ndarray:
    # w: (K, m) basis populations of normalized pure states
    if measure == "l1":
        # sum_{i != j} |a_i||a_j|
        s = np.sqrt(w)
        return np.sum(s, axis=1) ** 2 - np.sum(w, axis=1)
    if measure == "coherence_geometric":
        return 1.0 - np.max(w, axis=1)
    if measure == "formation":
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(w > 0, -w * np.log2(np.where(w > 0, w, 1.0)), 0.0)
        return np.sum(terms, axis=1)
    raise ValidationError(f"unknown coherence measure {measure!r}; choose from {COHERENCE_MEASURES}")


def _gme_from_vectors(vectors: np.ndarray, dims, measure: str, cuts) -> np.ndarray:
    vals = None
    for cut in cuts:
        ev = batch_reduced_spectra(vectors, cut)
        if measure == "cren":
            v = np.sum(np.sqrt(ev), axis=1) ** 2 - 1.0
        elif measure == "concurrence":
            v = np.sqrt(np.clip(2.0 * (1.0 - np.sum(ev**2, axis=1)), 0.0, None))
        elif measure == "gconcurrence":
            m = ev.shape[1]
            v = m * np.prod(ev, axis=1) ** (1.0 / m)
        elif measure == "geometric":
            v = 1.0 - ev[:, 0]
        else:
            raise ValidationError(f"unknown GME measure {measure!r}")
        vals = v if vals is None else np.minimum(vals, v)
    return vals


def _ensemble_value(weighted: np.ndarray, dims, measure: str, cuts, basis) -> float:
    # weighted: (K, D) unnormalized ensemble vectors sqrt(p_j)|psi_j>
    p = np.sum(np.abs(weighted) ** 2, axis=1)
    keep = p > EIG_CUTOFF * 1e-3
    vecs, p = weighted[keep], p[keep]
    p = p / p.sum()
    if measure in COHERENCE_MEASURES:
        if basis is not None:
            vecs = vecs @ np.asarray(basis, dtype=complex).conj()
        w = np.abs(vecs) ** 2
        w = w / w.sum(axis=1, keepdims=True)
        vals = _coherence_from_weights(w, measure)
    else:
        vals = _gme_from_vectors(vecs, dims, measure, cuts)
    return float(np.dot(p, vals))


def _haar_isometry(k: int, r: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((k, r)) + 1j * rng.standard_normal((k, r))
    q, rr = np.linalg.qr(z)
    return q * (np.diag(rr) / np.abs(np.diag(rr)))


def _random_hermitian(k: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
    return (z + z.conj().T) / 2


def weighted_eigenvectors(rho: DensityOperator) -> np.ndarray:
    """Rows ``sqrt(lambda_k) e_k`` for eigenvalues above the cutoff, largest first."""
    evals, evecs = np.linalg.eigh(rho.matrix)
    keep = evals > EIG_CUTOFF
    if not np.any(keep):
        raise ValidationError("density operator has no eigenvalue above the cutoff")
    lam = evals[keep]
    lam = lam / lam.sum()
    return (evecs[:, keep] * np.sqrt(lam)).T[::-1]


def convex_roof_upper(rho: DensityOperator, measure: str, trials: int = 200, seed: int = 0,
                      refine_steps: int = 50, basis: np.ndarray | None = None) -> float:
    """Smallest ensemble average of ``measure`` over sampled decompositions of ``rho``.

    Trial 0 is the eigen-decomposition; trial ``t >= 1`` applies a Haar
    isometry of shape ``(K, r)``, ``r <= K <= 2r``, drawn from the stream
    ``(seed, t)``. The best decomposition then gets a greedy local search:
    a random unitary rotation of the ensemble is kept if it lowers the
    average, otherwise the step size halves.
    """
    if measure not in GME_MEASURES + COHERENCE_MEASURES:
        raise ValidationError(f"unknown measure {measure!r}")
    if not isinstance(rho, DensityOperator):
        raise ValidationError("convex_roof_upper expects a DensityOperator")
    dims = rho.dims
    cuts = enumerate_bipartitions(dims) if measure in GME_MEASURES else None
    base = weighted_eigenvectors(rho)
    r = base.shape[0]

    def value(u):
        return _ensemble_value(u @ base, dims, measure, cuts, basis)

    best_u = np.eye(r, dtype=complex)
    best = value(best_u)
    for t in range(1, trials):
        rng = np.random.default_rng([seed, t])
        k = int(rng.integers(r, 2 * r + 1))
        u = _haar_isometry(k, r, rng)
        v = value(u)
        if v < best:
            best, best_u = v, u

    rng = np.random.default_rng([seed, trials, 0x5EED])
    step = 0.5
    for _ in range(refine_steps):
        k = best_u.shape[0]
        cand = expm(1j * step * _random_hermitian(k, rng)) @ best_u
        v = value(cand)
        if v < best:
            best, best_u = v, cand
        else:
            step *= 0.5
    return float(best)


def ghz_diagonal_analytic(probs) -> float:
    """``max_i(2 F_i - 1, 0)`` for a GHZ-diagonal state with weights ``probs``."""
    p = np.asarray(probs, dtype=float)
    return float(max(2.0 * np.max(p) - 1.0, 0.0))


def ghz_fidelities(rho: DensityOperator) -> np.ndarray:
    n = rho.num_parties
    return np.array([fidelity_pure(rho, s) for s in ghz_basis(n)])
