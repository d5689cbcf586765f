import mpmath
import numpy as np
import pytest

from gmebounds import gme, oracle, states
from gmebounds.tensor import ValidationError, fidelity_pure


def gamma_mp(S, m):
    """High-precision reference for gamma."""
    mpmath.mp.dps = 40
    S, m = mpmath.mpf(S), mpmath.mpf(m)
    return float((mpmath.sqrt(S) + mpmath.sqrt((m - 1) * (m - S))) ** 2 / m**2)


class TestProfile:
    def test_ghz6(self):
        p = gme.profile_phi(states.ghz(6))
        assert p.s1_prime == pytest.approx(0.5)
        assert p.m_prime == 8
        assert p.m_prime_rank == 2
        assert len(p.spectra) == 31

    def test_w3(self):
        assert gme.profile_phi(states.w_state(3)).s1_prime == pytest.approx(2 / 3)

    def test_product(self):
        p = gme.profile_phi(states.product_state((2, 2, 2)))
        assert p.s1_prime == pytest.approx(1.0)
        assert p.m_prime_rank == 1

    def test_qudit_m_prime(self):
        psi = states.random_pure((3, 2, 4), np.random.default_rng(3))
        # cuts 3|8, 6|4, 12|2 -> smaller sides 3, 4, 2
        assert gme.profile_phi(psi).m_prime == 4

    def test_single_party_rejected(self):
        with pytest.raises(ValidationError):
            gme.profile_phi(states.from_amplitudes([2], [1, 0]))

    def test_invariants(self, rng):
        p = gme.profile_phi(states.random_pure((2,) * 5, rng))
        assert p.s1_prime == max(s.coeffs_sq[0] for s in p.spectra.values())
        assert p.m_prime_rank <= p.m_prime

    def test_worker_count_does_not_matter(self, rng):
        psi = states.random_pure((2,) * 7, rng)
        a, b = gme.profile_phi(psi, workers=1), gme.profile_phi(psi, workers=3)
        assert (a.s1_prime, a.m_prime, a.m_prime_rank) == (b.s1_prime, b.m_prime, b.m_prime_rank)


class TestScalarBounds:
    def test_s_value(self):
        assert gme.s_value(0.710, 0.5) == pytest.approx(1.42)
        assert gme.s_value(0.3, 0.5) == 1.0
        assert gme.s_value(0.625, 2 / 3) == 1.0
        assert gme.s_value(0.6667, 2 / 3) == pytest.approx(1.00005)

    @pytest.mark.parametrize("f, s1", [(-0.1, 0.5), (1.1, 0.5), (0.5, 0.0), (0.5, 1.5)])
    def test_s_value_rejects(self, f, s1):
        with pytest.raises(ValidationError):
            gme.s_value(f, s1)

    def test_cren(self):
        assert gme.cren_lb(1.42) == pytest.approx(0.420)
        assert gme.cren_lb(1.0) == 0.0

    def test_concurrence(self):
        assert round(gme.concurrence_lb(1.42, 8), 4) == 0.0794
        assert round(gme.concurrence_lb(1.146, 32), 4) == 0.0066
        assert gme.concurrence_lb(1.0, 5) == 0.0

    def test_gconcurrence(self):
        assert gme.gconcurrence_lb(1.42, 8) == 0.0
        assert gme.gconcurrence_lb(1.42, 8, clamp=False) == pytest.approx(-5.58)
        assert gme.gconcurrence_lb(1.0, 2) == 0.0
        assert gme.gconcurrence_lb(1.9, 2) == pytest.approx(0.9)

    def test_gconcurrence_near_bell_against_oracle(self):
        # two qubits, phi = psi: S = 1/lambda_1; the bound must not exceed G(psi)
        c = np.sqrt(0.52)
        psi = states.from_amplitudes([2, 2], [c, 0, 0, np.sqrt(1 - c**2)])
        S = 1 / 0.52
        assert gme.gconcurrence_lb(S, 2) <= oracle.gme_measure_pure(psi, "gconcurrence") + 1e-12

    @pytest.mark.parametrize("S, m", [(1.42, 8), (1.146, 32), (2.5, 3), (7.9, 8), (1.0001, 1024)])
    def test_gamma_against_mpmath(self, S, m):
        assert gme.gamma(S, m) == pytest.approx(gamma_mp(S, m), rel=1e-13)

    def test_gamma_values(self):
        assert round(gme.gamma(1.42, 8), 5) == 0.99460
        assert gme.gamma(1.0, 8) == 1.0
        assert gme.gamma(8.0, 8) == 1 / 8

    @pytest.mark.parametrize("S, m", [(0.5, 4), (4.5, 4), (2.0, 1)])
    def test_gamma_domain(self, S, m):
        with pytest.raises(ValidationError):
            gme.gamma(S, m)

    def test_geometric(self):
        assert round(gme.geometric_lb(1.42, 8), 5) == 0.00540
        assert round(gme.geometric_lb(1.146, 32), 5) == 0.00016
        assert gme.geometric_lb(1.0, 4) == 0.0


class TestWitness:
    def test_biseparable_product(self):
        rho = states.basis_state([0, 0, 0]).density()
        assert gme.gme_witness_value(rho, states.ghz(3)) == pytest.approx(0.0, abs=1e-15)

    def test_pure_phi(self):
        phi = states.w_state(3)
        assert gme.gme_witness_value(phi.density(), phi) == pytest.approx(2 / 3 - 1)

    def test_maximally_mixed(self):
        rho = states.white_noise_mix(states.ghz(3), 0.0)
        assert gme.gme_witness_value(rho, states.ghz(3)) == pytest.approx(0.375)

    def test_equivalence(self, rng):
        profile = gme.profile_phi(states.w_state(3))
        for f in np.concatenate([rng.uniform(0, 1, 500), [profile.s1_prime]]):
            rep = gme.bounds_from_fidelity(f, profile)
            assert (rep.witness_value < 0) == (rep.S > 1) == (rep.bounds["cren"] > 0)


class TestReport:
    def test_cluster12(self):
        p = gme.profile_phi(states.linear_cluster(12))
        assert round(gme.bounds_from_fidelity(0.5544, p).bounds["cren"], 4) == 0.1088

    def test_cluster4(self):
        p = gme.profile_phi(states.linear_cluster(4))
        assert round(gme.bounds_from_fidelity(0.9176, p).bounds["cren"], 4) == 0.8352

    def test_below_threshold(self):
        p = gme.profile_phi(states.ghz(4))
        rep = gme.bounds_from_fidelity(0.4, p)
        assert rep.S == 1.0
        assert all(v == 0 for v in rep.bounds.values())

    def test_clamp_flags(self):
        rep = gme.bounds_from_fidelity(0.710, gme.profile_phi(states.ghz(6)))
        assert rep.clamped == {"cren": False, "concurrence": False, "gconcurrence": True, "geometric": False}
        assert rep.raw["gconcurrence"] == pytest.approx(-5.58)

    def test_sigma_interval(self):
        rep = gme.bounds_from_fidelity(0.710, gme.profile_phi(states.ghz(6)), sigma=0.016)
        assert rep.S_interval == pytest.approx((1.388, 1.452))

    def test_density_and_fidelity_paths_agree(self, rng):
        phi = states.w_state(3)
        prof = gme.profile_phi(phi)
        for _ in range(20):
            rho = states.random_density((2, 2, 2), 2, rng)
            rho = states.white_noise_mix(phi, rng.uniform()) if rng.uniform() < 0.5 else rho
            a = gme.gme_bounds(rho, phi, prof)
            b = gme.bounds_from_fidelity(fidelity_pure(rho, phi), prof)
            for k in gme.MEASURES:
                assert abs(a.bounds[k] - b.bounds[k]) <= 1e-12


class TestMonotonicity:
    @pytest.mark.parametrize("m", [2, 3, 4, 8, 16, 64])
    def test_bounds_nondecreasing_in_S(self, m):
        grid = np.arange(1.0, m + 1e-12, 1e-3)
        for name in gme.MEASURES:
            vals = np.array([gme.bounds_from_s(S, m)[name] for S in grid])
            assert np.all(np.diff(vals) >= -1e-12), name

    def test_gamma_nondecreasing_in_m(self):
        for S in [1.001, 1.2, 1.5, 1.9]:
            vals = [gme.gamma(S, m) for m in range(2, 65)]
            assert np.all(np.diff(vals) >= -1e-12)

    def test_gamma_nondecreasing_in_s1(self):
        for F in [0.3, 0.5, 0.7, 0.95]:
            for m in [2, 4, 16, 64]:
                s1 = np.linspace(F, 1.0, 400)
                vals = [gme.gamma(gme.s_value(F, s), m) for s in s1 if F / s <= m]
                assert np.all(np.diff(vals) >= -1e-12)
