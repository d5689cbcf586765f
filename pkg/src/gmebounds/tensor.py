"""Dense linear algebra over multipartite registers.

Amplitude ordering is big-endian: party 0 is the most significant index of
the flattened vector, as produced by ``np.kron(a, b)``. Parties are numbered
from 0 internally; party 0 is what physics texts call party 1.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

NORM_TOL = 1e-9
HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-9
PSD_TOL = 1e-9
RANK_EPS = 1e-12


class ValidationError(ValueError):
    """Raised when an input state or parameter violates its contract."""


class InvalidBipartitionError(ValidationError):
    pass


def _check_dims(dims: Iterable[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if len(dims) == 0:
        raise ValidationError("dims must list at least one party")
    if any(d < 2 for d in dims):
        raise ValidationError(f"every local dimension must be >= 2, got {dims}")
    return dims


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector over a tensor product of qudits."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != int(np.prod(dims)):
            raise ValidationError(
                f"expected {int(np.prod(dims))} amplitudes for dims {dims}, got {amps.size}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValidationError(f"state is not normalized: sum |a|^2 = {norm_sq!r}")
        amps = amps / np.sqrt(norm_sq)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "dims", dims)

    @property
    def num_parties(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def density(self) -> "DensityOperator":
        return DensityOperator(self.projector(), self.dims)


@dataclass(frozen=True)
class DensityDiagnostics:
    """Outcome of :func:`validate_density`.

    ``issues`` holds ``(code, value)`` pairs with codes ``shape-error``,
    ``hermiticity-error``, ``trace-error`` and ``psd-error``.
    """

    hermiticity_deviation: float
    trace: float
    min_eigenvalue: float
    issues: tuple[tuple[str, float], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(f"{code} ({value:.3e})" for code, value in self.issues)


def validate_density(matrix: np.ndarray, dims: Sequence[int] | None = None) -> DensityDiagnostics:
    """Check Hermiticity, unit trace and positivity of ``matrix``."""
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return DensityDiagnostics(np.nan, np.nan, np.nan, (("shape-error", float("nan")),))
    if dims is not None and m.shape[0] != int(np.prod(dims)):
        return DensityDiagnostics(np.nan, np.nan, np.nan, (("shape-error", float(m.shape[0])),))
    herm = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    issues = []
    if herm > HERMITIAN_TOL:
        issues.append(("hermiticity-error", herm))
    trace = float(np.trace(m).real)
    if abs(trace - 1.0) > TRACE_TOL:
        issues.append(("trace-error", trace))
    min_eig = float(np.linalg.eigvalsh((m + m.conj().T) / 2)[0])
    if min_eig < -PSD_TOL:
        issues.append(("psd-error", min_eig))
    return DensityDiagnostics(herm, trace, min_eig, tuple(issues))


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Hermitian, unit-trace, positive semidefinite matrix.

    Inputs within the Hermiticity tolerance are symmetrized on construction.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = _check_dims(self.dims)
        diag = validate_density(self.matrix, dims)
        if not diag.ok:
            raise ValidationError(f"invalid density operator: {diag}")
        m = np.asarray(self.matrix, dtype=complex)
        m = (m + m.conj().T) / 2
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def num_parties(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class Bipartition:
    """A cut ``parties | complement`` of the registers described by ``dims``."""

    parties: tuple[int, ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        parties = tuple(sorted(set(int(p) for p in self.parties)))
        n = len(dims)
        if not parties or len(parties) >= n:
            raise InvalidBipartitionError(
                f"bipartition must be a nonempty proper subset of {n} parties, got {parties}"
            )
        if parties[0] < 0 or parties[-1] >= n:
            raise InvalidBipartitionError(f"party index out of range for {n} parties: {parties}")
        object.__setattr__(self, "parties", parties)
        object.__setattr__(self, "dims", dims)

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.dims)) if i not in self.parties)

    @property
    def d_alpha(self) -> int:
        return int(np.prod([self.dims[i] for i in self.parties]))

    @property
    def d_alphabar(self) -> int:
        return int(np.prod([self.dims[i] for i in self.complement]))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.parties)

    def flipped(self) -> "Bipartition":
        return Bipartition(self.complement, self.dims)

    def canonical(self) -> "Bipartition":
        return self if 0 in self.parties else self.flipped()

    def label(self) -> str:
        """One-based party listing, e.g. ``"1,3|2"``."""
        left = ",".join(str(i + 1) for i in self.parties)
        right = ",".join(str(i + 1) for i in self.complement)
        return f"{left}|{right}"


def as_bipartition(alpha, dims: Sequence[int]) -> Bipartition:
    if isinstance(alpha, Bipartition):
        if tuple(alpha.dims) != tuple(dims):
            raise InvalidBipartitionError(f"bipartition dims {alpha.dims} do not match {tuple(dims)}")
        return alpha
    if isinstance(alpha, (int, np.integer)):
        alpha = [alpha]
    return Bipartition(tuple(alpha), tuple(dims))


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    coeffs_sq: np.ndarray
    rank: int
    bipartition: Bipartition | None = field(default=None, compare=False)

    @property
    def largest(self) -> float:
        return float(self.coeffs_sq[0])


def enumerate_bipartitions(dims: Sequence[int]) -> list[Bipartition]:
    """All ``2**(N-1) - 1`` cuts with party 0 on the left, by ascending mask."""
    dims = _check_dims(dims)
    n = len(dims)
    if n < 2:
        raise ValidationError("need at least two parties to form a bipartition")
    out = []
    for k in range(2 ** (n - 1) - 1):
        mask = 1 | (k << 1)
        out.append(Bipartition(tuple(i for i in range(n) if mask >> i & 1), dims))
    return out


def _reshape_vectors(vectors: np.ndarray, alpha: Bipartition) -> np.ndarray:
    k = vectors.shape[0]
    t = vectors.reshape((k,) + alpha.dims)
    perm = (0,) + tuple(i + 1 for i in alpha.parties) + tuple(i + 1 for i in alpha.complement)
    return t.transpose(perm).reshape(k, alpha.d_alpha, alpha.d_alphabar)


def reshape_by_bipartition(psi: PureState, alpha) -> np.ndarray:
    """Amplitudes as a ``d_alpha x d_alphabar`` matrix.

    Rows index the parties in ``alpha`` and columns the complement, each
    side big-endian in ascending party order.
    """
    alpha = as_bipartition(alpha, psi.dims)
    return _reshape_vectors(psi.amplitudes[None, :], alpha)[0]


def _normalized_spectrum(sq: np.ndarray) -> np.ndarray:
    total = sq.sum()
    if abs(total - 1.0) >= NORM_TOL:
        raise ValidationError(f"Schmidt weights sum to {total!r}; state not normalized")
    return sq / total


def schmidt_spectrum(psi: PureState, alpha) -> SchmidtSpectrum:
    alpha = as_bipartition(alpha, psi.dims)
    sv = np.linalg.svd(reshape_by_bipartition(psi, alpha), compute_uv=False)
    sq = _normalized_spectrum(np.sort(sv**2)[::-1])
    sq.setflags(write=False)
    return SchmidtSpectrum(sq, int(np.count_nonzero(sq > RANK_EPS)), alpha)


def schmidt_scan(psi: PureState, workers: int = 1) -> dict[Bipartition, SchmidtSpectrum]:
    """Schmidt spectra of ``psi`` across every canonical bipartition.

    With ``workers > 1`` the cuts are evaluated on a thread pool; the
    returned mapping keeps enumeration order either way.
    """
    cuts = enumerate_bipartitions(psi.dims)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            spectra = list(pool.map(lambda a: schmidt_spectrum(psi, a), cuts))
    else:
        spectra = [schmidt_spectrum(psi, a) for a in cuts]
    return dict(zip(cuts, spectra))


def batch_reduced_spectra(vectors: np.ndarray, alpha: Bipartition) -> np.ndarray:
    """Eigenvalues (descending) of the smaller-side reduced state of each row.

    ``vectors`` is ``(K, D)`` and need not be normalized; each row is
    normalized first. Computed from the reduced density matrix, not an SVD.
    """
    norms = np.linalg.norm(vectors, axis=1)
    v = vectors / np.where(norms > 0, norms, 1.0)[:, None]
    m = _reshape_vectors(v, alpha)
    if m.shape[1] <= m.shape[2]:
        red = m @ m.conj().transpose(0, 2, 1)
    else:
        red = m.conj().transpose(0, 2, 1) @ m
    ev = np.linalg.eigvalsh(red)[:, ::-1]
    return np.clip(ev, 0.0, None)


def fidelity_pure(rho: DensityOperator, phi: PureState) -> float:
    """``<phi|rho|phi>``."""
    if tuple(rho.dims) != tuple(phi.dims):
        raise ValidationError(f"dimension mismatch: rho {rho.dims} vs phi {phi.dims}")
    a = phi.amplitudes
    val = np.vdot(a, rho.matrix @ a)
    if abs(val.imag) > NORM_TOL:
        raise ValidationError(f"fidelity has imaginary part {val.imag!r}")
    return float(min(max(val.real, 0.0), 1.0))


def _as_matrix(rho) -> tuple[np.ndarray, tuple[int, ...]]:
    if isinstance(rho, PureState):
        return rho.projector(), rho.dims
    return rho.matrix, rho.dims


def partial_trace(rho, keep) -> DensityOperator:
    """Reduced operator on the parties of ``keep``; the rest are traced out."""
    mat, dims = _as_matrix(rho)
    keep = as_bipartition(keep, dims)
    n = len(dims)
    t = mat.reshape(dims + dims)
    order = keep.parties + keep.complement
    t = t.transpose(order + tuple(n + i for i in order))
    da, db = keep.d_alpha, keep.d_alphabar
    red = np.trace(t.reshape(da, db, da, db), axis1=1, axis2=3)
    return DensityOperator(red, tuple(dims[i] for i in keep.parties))


def partial_transpose(rho, alpha) -> np.ndarray:
    """Transpose the row and column indices of the parties in ``alpha``."""
    mat, dims = _as_matrix(rho)
    alpha = as_bipartition(alpha, dims)
    n = len(dims)
    perm = list(range(2 * n))
    for i in alpha.parties:
        perm[i], perm[n + i] = n + i, i
    d = int(np.prod(dims))
    return mat.reshape(dims + dims).transpose(perm).reshape(d, d)


def trace_norm(m: np.ndarray) -> float:
    return float(np.sum(np.linalg.svd(np.asarray(m), compute_uv=False)))
