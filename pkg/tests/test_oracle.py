import numpy as np
import pytest

from gmebounds import coherence, gme, oracle, states
from gmebounds.tensor import DensityOperator, ValidationError

W3_NEG = (np.sqrt(2 / 3) + np.sqrt(1 / 3)) ** 2 - 1


class TestPureMeasures:
    def test_negativity(self):
        assert oracle.negativity_pure(states.ghz(2), [0]) == pytest.approx(1)
        assert oracle.negativity_pure(states.basis_state([0, 1, 0]), [0]) == pytest.approx(0, abs=1e-12)
        assert oracle.negativity_pure(states.w_state(3), [0]) == pytest.approx(W3_NEG)
        assert W3_NEG == pytest.approx(0.9428, abs=1e-4)

    def test_concurrence(self):
        assert oracle.concurrence_pure(states.ghz(2), [0]) == pytest.approx(1)
        assert oracle.concurrence_pure(states.basis_state([0, 0]), [0]) == pytest.approx(0, abs=1e-7)
        assert oracle.concurrence_pure(states.w_state(3), [0]) == pytest.approx(np.sqrt(8 / 9))

    def test_gconcurrence(self):
        assert oracle.gconcurrence_pure(states.ghz(2), [0]) == pytest.approx(1)
        assert oracle.gconcurrence_pure(states.ghz(3), [0]) == pytest.approx(1)

    def test_gconcurrence_ghz3_per_cut(self):
        cuts = oracle.per_cut_values(states.ghz(3), "gconcurrence")
        assert cuts == pytest.approx({"1|2,3": 1.0, "1,2|3": 1.0, "1,3|2": 1.0})
        assert oracle.gme_measure_pure(states.ghz(3), "gconcurrence") == pytest.approx(1)

    def test_gconcurrence_rank_deficient(self):
        # GHZ4 across 2|2 has rank 2 < 4
        assert oracle.gconcurrence_pure(states.ghz(4), [0, 1]) == pytest.approx(0, abs=1e-12)

    def test_geometric(self):
        assert oracle.geometric_pure(states.ghz(2), [0]) == pytest.approx(0.5)
        assert oracle.geometric_pure(states.basis_state([1, 0]), [0]) == pytest.approx(0, abs=1e-12)
        assert oracle.geometric_pure(states.w_state(3), [0]) == pytest.approx(1 / 3)

    def test_gme_minimum(self):
        prod = states.from_amplitudes([2, 2, 2], np.kron(states.ghz(2).amplitudes, [1, 0]))
        for m in oracle.GME_MEASURES:
            assert oracle.gme_measure_pure(prod, m) == pytest.approx(0, abs=1e-7)
        assert oracle.gme_measure_pure(states.ghz(3), "cren") == pytest.approx(1)
        assert oracle.gme_measure_pure(states.w_state(3), "geometric") == pytest.approx(1 / 3)

    def test_unknown_measure(self):
        with pytest.raises(ValidationError):
            oracle.gme_measure_pure(states.ghz(3), "entropy")

    def test_dual_path(self, rng):
        for n in (3, 4):
            for _ in range(20):
                psi = states.random_pure((2,) * n, rng)
                for cut in [(0,), (0, 1)]:
                    a = oracle.negativity_trace_norm(psi, cut)
                    b = oracle.negativity_schmidt_sum(psi, cut)
                    assert abs(a - b) < 1e-8


class TestCoherence:
    def test_basis_state(self):
        for m in ("l1", "geometric", "formation"):
            assert oracle.coherence_pure(states.basis_state([1, 0]), m) == pytest.approx(0, abs=1e-12)

    def test_uniform_qubit(self):
        plus = states.from_amplitudes([2], [1 / np.sqrt(2), 1 / np.sqrt(2)])
        assert oracle.coherence_pure(plus, "l1") == pytest.approx(1)
        assert oracle.coherence_pure(plus, "geometric") == pytest.approx(0.5)
        assert oracle.coherence_pure(plus, "formation") == pytest.approx(1)

    def test_ghz6_l1(self):
        assert oracle.coherence_pure(states.ghz(6), "l1") == pytest.approx(1)

    def test_l1_is_off_diagonal_sum(self, rng):
        psi = states.random_pure((2, 3), rng)
        rho = psi.projector()
        off = np.sum(np.abs(rho)) - np.sum(np.abs(np.diag(rho)))
        assert oracle.coherence_pure(psi, "l1") == pytest.approx(off)


class TestConvexRoof:
    def test_pure_exact(self, rng):
        psi = states.random_pure((2, 2, 2), rng)
        for m in oracle.GME_MEASURES:
            assert oracle.convex_roof_upper(psi.density(), m, trials=5) == pytest.approx(
                oracle.gme_measure_pure(psi, m), abs=1e-9)
        assert oracle.convex_roof_upper(psi.density(), "l1", trials=5) == pytest.approx(
            oracle.coherence_pure(psi, "l1"), abs=1e-9)

    def test_biseparable_mixture_reaches_zero(self):
        m = np.zeros((8, 8))
        m[0, 0] = m[7, 7] = 0.5
        rho = DensityOperator(m, (2, 2, 2))
        for meas in oracle.GME_MEASURES:
            assert oracle.convex_roof_upper(rho, meas) == pytest.approx(0, abs=1e-9)

    def test_w_pure(self):
        rho = states.white_noise_mix(states.w_state(3), 1.0)
        assert oracle.convex_roof_upper(rho, "geometric") == pytest.approx(1 / 3)

    def test_upper_bounds_eigen_decomposition(self, rng):
        rho = states.random_density((2, 2, 2), 3, rng)
        ev, vec = np.linalg.eigh(rho.matrix)
        eig_avg = sum(p * oracle.gme_measure_pure(states.from_amplitudes((2, 2, 2), vec[:, k]), "cren")
                      for k, p in enumerate(ev) if p > 1e-10)
        assert oracle.convex_roof_upper(rho, "cren", trials=50) <= eig_avg + 1e-12

    def test_seeded_reproducible(self, rng):
        rho = states.random_density((2, 2, 2), 4, rng)
        a = oracle.convex_roof_upper(rho, "concurrence", trials=40, seed=7)
        b = oracle.convex_roof_upper(rho, "concurrence", trials=40, seed=7)
        assert a == b

    def test_more_trials_never_worse(self, rng):
        rho = states.random_density((2, 2, 2), 3, rng)
        few = oracle.convex_roof_upper(rho, "geometric", trials=10, seed=1, refine_steps=0)
        many = oracle.convex_roof_upper(rho, "geometric", trials=60, seed=1, refine_steps=0)
        assert many <= few

    def test_rejects_pure_state_object(self):
        with pytest.raises(ValidationError):
            oracle.convex_roof_upper(states.ghz(3), "cren")

    def test_sandwich_small(self, rng):
        for _ in range(5):
            rho = states.random_density((2, 2, 2), int(rng.integers(1, 5)), rng)
            ev, vec = np.linalg.eigh(rho.matrix)
            phi = states.from_amplitudes((2, 2, 2), vec[:, -1])
            rep = gme.gme_bounds(rho, phi)
            for m in oracle.GME_MEASURES:
                assert rep.bounds[m] <= oracle.convex_roof_upper(rho, m, trials=30) + 1e-9


class TestGhzDiagonal:
    def test_values(self):
        d = np.zeros(8)
        d[0] = 1
        assert oracle.ghz_diagonal_analytic(d) == 1
        assert oracle.ghz_diagonal_analytic(np.ones(8) / 8) == 0
        d = np.zeros(8)
        d[:2] = [0.7, 0.3]
        assert oracle.ghz_diagonal_analytic(d) == pytest.approx(0.4)

    def test_fidelities_recover_weights(self, rng):
        p = rng.dirichlet(np.ones(8))
        assert np.allclose(oracle.ghz_fidelities(states.ghz_diagonal(p)), p)

    def test_bound_matches_analytic(self, rng):
        for _ in range(20):
            p = rng.dirichlet(np.ones(8) * 0.3)
            rho = states.ghz_diagonal(p)
            best = states.ghz_basis(3)[int(np.argmax(p))]
            rep = gme.gme_bounds(rho, best)
            assert abs(rep.bounds["cren"] - oracle.ghz_diagonal_analytic(p)) <= 1e-12


def test_coherence_bounds_below_pure_values(rng):
    for _ in range(30):
        psi = states.random_pure((2, 2, 3), rng)
        rep = coherence.coherence_bounds(psi.density(), psi)
        assert rep.bounds["l1"] <= oracle.coherence_pure(psi, "l1") + 1e-9
        assert rep.bounds["geometric"] <= oracle.coherence_pure(psi, "geometric") + 1e-9
        assert rep.bounds["formation"] <= oracle.coherence_pure(psi, "formation") + 1e-9
